#include "oddlen/report_io.hpp"

#include <sstream>

#include "json.hpp"

namespace oddlen {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json poly_json(const IntPoly& p) {
    ordered_json obj = ordered_json::object();
    for (const auto& [e, c] : p.terms()) obj[std::to_string(e)] = c;
    return obj;
}

ordered_json poly_json(const BiPoly& p) {
    ordered_json obj = ordered_json::object();
    for (const auto& [k, c] : p.terms())
        obj[std::to_string(k.first) + "," + std::to_string(k.second)] = c;
    return obj;
}

ordered_json side_json(const std::optional<PolySide>& side) {
    if (!side) return nullptr;
    return std::visit([](const auto& p) { return poly_json(p); }, *side);
}

std::string side_str(const std::optional<PolySide>& side) {
    if (!side) return "";
    return std::visit([](const auto& p) { return p.str(); }, *side);
}

ordered_json params_json(const ClaimParams& p) {
    ordered_json obj = ordered_json::object();
    if (p.set) obj["set"] = p.set->members();
    if (p.i) obj["i"] = *p.i;
    if (p.k) obj["k"] = *p.k;
    if (p.position) obj["a"] = *p.position;
    if (p.value) obj["v"] = *p.value;
    return obj;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string status_tag(Status s) {
    switch (s) {
        case Status::Verified: return "[ok]";
        case Status::Mismatch: return "[FAIL]";
        case Status::Inapplicable: return "[n/a]";
    }
    return "[?]";
}

std::string report_text(const Report& r, bool include_timing) {
    std::ostringstream out;
    out << status_tag(r.status) << ' ' << claim_name(r.claim) << " n=" << r.n;
    const std::string params = r.params.str();
    if (!params.empty()) out << ' ' << params;
    if (r.status == Status::Mismatch && r.counterexample) out << " : " << *r.counterexample;
    if (r.note) out << " (" << *r.note << ')';
    if (include_timing) out << " [" << r.elapsed_us / 1000 << "ms]";
    return out.str();
}

ordered_json report_json(const Report& r, bool include_timing) {
    ordered_json obj = ordered_json::object();
    obj["claim"] = claim_name(r.claim);
    obj["n"] = r.n;
    obj["params"] = params_json(r.params);
    obj["status"] = to_string(r.status);
    obj["lhs"] = side_json(r.lhs);
    obj["rhs"] = side_json(r.rhs);
    if (r.counterexample) obj["counterexample"] = *r.counterexample;
    if (r.note) obj["note"] = *r.note;
    if (include_timing) obj["elapsed_ms"] = r.elapsed_us / 1000;
    return obj;
}

std::string report_csv(const Report& r, bool include_timing) {
    std::ostringstream out;
    out << claim_name(r.claim) << ',' << r.n << ',' << csv_escape(r.params.str()) << ','
        << to_string(r.status) << ',' << csv_escape(side_str(r.lhs)) << ','
        << csv_escape(side_str(r.rhs)) << ',' << csv_escape(r.counterexample.value_or("")) << ','
        << csv_escape(r.note.value_or("")) << ',';
    if (include_timing) out << r.elapsed_us / 1000;
    return out.str();
}

}  // namespace

std::optional<OutputFormat> format_from_string(std::string_view name) {
    if (name == "text") return OutputFormat::Text;
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    return std::nullopt;
}

std::string render_reports(const std::vector<Report>& reports, OutputFormat format,
                           bool include_timing) {
    std::ostringstream out;
    switch (format) {
        case OutputFormat::Text:
            for (const Report& r : reports) out << report_text(r, include_timing) << '\n';
            break;
        case OutputFormat::Json:
            for (const Report& r : reports) out << report_json(r, include_timing).dump() << '\n';
            break;
        case OutputFormat::Csv:
            out << "claim,n,params,status,lhs,rhs,counterexample,note,elapsed_ms\n";
            for (const Report& r : reports) out << report_csv(r, include_timing) << '\n';
            break;
    }
    return out.str();
}

std::string render_scan(int n, GroupLabel g, const std::vector<ScanRow>& rows, OutputFormat format) {
    std::ostringstream out;
    switch (format) {
        case OutputFormat::Text:
            for (const ScanRow& row : rows) {
                out << (row.cofactor_ok ? "[ok]  " : "[FAIL]") << " J=" << row.set.str()
                    << " sig=" << row.signature << " gf=" << row.gf.str();
                if (row.cofactor) out << " cofactor=" << row.cofactor->str();
                out << '\n';
            }
            break;
        case OutputFormat::Json:
            for (const ScanRow& row : rows) {
                ordered_json obj = ordered_json::object();
                obj["n"] = n;
                obj["group"] = to_string(g);
                obj["J"] = row.set.members();
                obj["signature"] = row.signature;
                obj["gf"] = poly_json(row.gf);
                obj["cofactor"] = row.cofactor ? poly_json(*row.cofactor) : ordered_json(nullptr);
                obj["status"] = row.cofactor_ok ? "verified" : "mismatch";
                out << obj.dump() << '\n';
            }
            break;
        case OutputFormat::Csv:
            out << "n,group,J,signature,gf,cofactor,status\n";
            for (const ScanRow& row : rows) {
                out << n << ',' << to_string(g) << ',' << csv_escape(row.set.str()) << ','
                    << csv_escape(row.signature) << ',' << csv_escape(row.gf.str()) << ','
                    << csv_escape(row.cofactor ? row.cofactor->str() : "") << ','
                    << (row.cofactor_ok ? "verified" : "mismatch") << '\n';
            }
            break;
    }
    return out.str();
}

std::string render_gf(int n, GroupLabel g, const IndexSet& I, bool graded, const IntPoly* signed_poly,
                      const BiPoly* graded_poly, OutputFormat format) {
    std::ostringstream out;
    switch (format) {
        case OutputFormat::Text:
            out << (graded ? graded_poly->str() : signed_poly->str()) << '\n';
            break;
        case OutputFormat::Json: {
            ordered_json obj = ordered_json::object();
            obj["coeffs"] = graded ? poly_json(*graded_poly) : poly_json(*signed_poly);
            out << obj.dump() << '\n';
            break;
        }
        case OutputFormat::Csv:
            out << "n,group,set,graded,coeffs\n";
            out << n << ',' << to_string(g) << ',' << csv_escape(I.str()) << ','
                << (graded ? "true" : "false") << ','
                << csv_escape(graded ? graded_poly->str() : signed_poly->str()) << '\n';
            break;
    }
    return out.str();
}

std::string render_factor(int n, const IndexSet& J, const IntPoly& mj, OutputFormat format) {
    std::ostringstream out;
    switch (format) {
        case OutputFormat::Text:
            out << "M_J = " << mj.str() << '\n';
            break;
        case OutputFormat::Json: {
            ordered_json obj = ordered_json::object();
            obj["coeffs"] = poly_json(mj);
            out << obj.dump() << '\n';
            break;
        }
        case OutputFormat::Csv:
            out << "n,set,coeffs\n";
            out << n << ',' << csv_escape(J.str()) << ',' << csv_escape(mj.str()) << '\n';
            break;
    }
    return out.str();
}

}  // namespace oddlen
