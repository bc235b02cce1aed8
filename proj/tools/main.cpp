// Command line front end: compute generating functions, run verification
// suites, scan descent subsets, and extract tower cofactors.
//
// Exit codes: 0 when every executed check verified (or the computation
// succeeded), 1 on any mismatch, 2 on usage errors.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "oddlen/claims.hpp"
#include "oddlen/genfun.hpp"
#include "oddlen/report_io.hpp"

namespace {

using namespace oddlen;

int default_workers() {
    if (const char* env = std::getenv("ODDLEN_WORKERS")) {
        try {
            const int w = std::stoi(env);
            if (w >= 1) return w;
        } catch (const std::exception&) {
        }
        std::cerr << "oddlen: ignoring invalid ODDLEN_WORKERS value '" << env << "'\n";
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

IndexSet parse_index_set(const std::string& text, int n) {
    IndexSet s = IndexSet::empty(n);
    if (text.empty()) return s;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string piece = text.substr(pos, comma - pos);
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(piece, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed index set entry '" + piece + "'");
        }
        if (used != piece.size())
            throw std::invalid_argument("malformed index set entry '" + piece + "'");
        s.insert(value);
        pos = comma + 1;
    }
    return s;
}

struct Range {
    int lo = 0;
    int hi = 0;
};

Range parse_range(const std::string& text) {
    const std::size_t dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int n = std::stoi(text);
            return {n, n};
        }
        const int lo = std::stoi(text.substr(0, dots));
        const int hi = std::stoi(text.substr(dots + 2));
        return {lo, hi};
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed range '" + text + "' (expected N or LO..HI)");
    }
}

GroupLabel parse_group(const std::string& text) {
    const auto g = group_from_string(text);
    if (!g) throw std::invalid_argument("unknown group '" + text + "' (expected A, B, D, or B-D)");
    return *g;
}

std::vector<ClaimId> parse_claims(const std::string& text) {
    if (text.empty() || text == "all") return all_claims();
    std::vector<ClaimId> ids;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string piece = text.substr(pos, comma - pos);
        const auto id = claim_from_name(piece);
        if (!id) throw std::invalid_argument("unknown claim '" + piece + "'");
        ids.push_back(*id);
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    return ids;
}

int count_mismatches(const std::vector<Report>& reports) {
    int m = 0;
    for (const Report& r : reports)
        if (r.status == Status::Mismatch) ++m;
    return m;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "oddlen: exact signed/graded generating functions of length and odd-length\n"
        "statistics over symmetric and hyperoctahedral groups, with exhaustive\n"
        "verification of their closed-form factorizations."};
    app.require_subcommand(1);

    std::string format_name = "json";
    int workers = default_workers();
    bool no_timing = false;
    app.add_option("--format", format_name, "Output format: json, text, or csv")
        ->default_val("json");
    app.add_option("--workers", workers,
                   "Worker thread count (default: ODDLEN_WORKERS env var, else all cores)")
        ->check(CLI::PositiveNumber);
    app.add_flag("--no-timing", no_timing, "Omit elapsed_ms fields from reports");

    auto* gf_cmd = app.add_subcommand("gf", "Signed or graded generating function of one quotient");
    std::string gf_group, gf_set;
    int gf_n = 0;
    bool gf_graded = false;
    gf_cmd->add_option("--group", gf_group, "Group: A, B, D, or B-D")->required();
    gf_cmd->add_option("--n", gf_n, "Rank")->required()->check(CLI::Range(1, 10));
    gf_cmd->add_option("--set", gf_set, "Index set, comma separated (empty for the full group)");
    gf_cmd->add_flag("--graded", gf_graded, "Emit the length-graded series in (y, x)");

    auto* verify_cmd = app.add_subcommand("verify", "Run verification suites over rank ranges");
    std::string verify_claims = "all", verify_range;
    bool verify_extended = false;
    verify_cmd->add_option("--claim", verify_claims,
                           "Comma-separated claim ids, or 'all'");
    verify_cmd->add_option("--n", verify_range, "Rank or range LO..HI (default: per claim)");
    verify_cmd->add_flag("--extended", verify_extended,
                         "Widen conjecture sweeps to the deepest verified rank");

    auto* scan_cmd = app.add_subcommand("scan", "All descent subsets of one rank: gf and cofactor");
    std::string scan_group = "D";
    int scan_n = 0;
    scan_cmd->add_option("--group", scan_group, "Group: A, B, D, or B-D")->default_val("D");
    scan_cmd->add_option("--n", scan_n, "Rank")->required()->check(CLI::Range(2, 10));

    auto* factor_cmd = app.add_subcommand("factor", "Extract the tower cofactor M_J of one quotient");
    std::string factor_set;
    int factor_n = 0;
    factor_cmd->add_option("--n", factor_n, "Rank")->required()->check(CLI::Range(3, 10));
    factor_cmd->add_option("--set", factor_set, "Index set, comma separated");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        const auto format = format_from_string(format_name);
        if (!format) throw std::invalid_argument("unknown format '" + format_name + "'");

        if (gf_cmd->parsed()) {
            const GroupLabel g = parse_group(gf_group);
            const IndexSet I = parse_index_set(gf_set, gf_n);
            Engine engine(workers);
            if (gf_graded) {
                const BiPoly p = engine.graded_gf(gf_n, g, I);
                std::cout << render_gf(gf_n, g, I, true, nullptr, &p, *format);
            } else {
                const IntPoly p = engine.signed_gf(gf_n, g, I);
                std::cout << render_gf(gf_n, g, I, false, &p, nullptr, *format);
            }
            return 0;
        }

        if (verify_cmd->parsed()) {
            const std::vector<ClaimId> ids = parse_claims(verify_claims);
            std::optional<Range> range;
            if (!verify_range.empty()) range = parse_range(verify_range);
            if (range && (range->lo < 1 || range->hi < range->lo))
                throw std::invalid_argument("range bounds must satisfy 1 <= LO <= HI");
            if (range && range->hi > 10)
                throw std::invalid_argument("rank above 10 is not enumerable here");
            Engine engine(workers);
            std::vector<Report> reports;
            for (ClaimId id : ids) {
                const NRange sweep = range ? NRange{range->lo, range->hi}
                                           : claim_default_range(id, verify_extended);
                for (Report& r : run_claim(engine, id, sweep)) reports.push_back(std::move(r));
            }
            std::cout << render_reports(reports, *format, !no_timing);
            int verified = 0, inapplicable = 0;
            for (const Report& r : reports) {
                if (r.status == Status::Verified) ++verified;
                if (r.status == Status::Inapplicable) ++inapplicable;
            }
            const int mismatches = count_mismatches(reports);
            std::cerr << "oddlen verify: " << verified << " verified, " << mismatches
                      << " mismatched, " << inapplicable << " inapplicable\n";
            return mismatches > 0 ? 1 : 0;
        }

        if (scan_cmd->parsed()) {
            const GroupLabel g = parse_group(scan_group);
            Engine engine(workers);
            const std::vector<ScanRow> rows = scan_all_subsets(engine, scan_n, g);
            std::cout << render_scan(scan_n, g, rows, *format);
            for (const ScanRow& row : rows)
                if (!row.cofactor_ok) return 1;
            return 0;
        }

        if (factor_cmd->parsed()) {
            const IndexSet J = parse_index_set(factor_set, factor_n);
            Engine engine(workers);
            const auto mj = extract_MJ(engine, factor_n, J);
            if (!mj) {
                std::cerr << "oddlen factor: quotient gf at J=" << J.str()
                          << " is not divisible by its tower\n";
                return 1;
            }
            std::cout << render_factor(factor_n, J, *mj, *format);
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "oddlen: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "oddlen: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
