#include "oddlen/claims.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace oddlen {

namespace {

struct ClaimNameRow {
    ClaimId id;
    const char* name;
};

constexpr ClaimNameRow kClaimNames[] = {
    {ClaimId::ThmAQuotient, "thmA_quotient"},
    {ClaimId::CorATrivial, "corA_trivial"},
    {ClaimId::ThmBQuotient, "thmB_quotient"},
    {ClaimId::ThmDTrivial, "thmD_trivial"},
    {ClaimId::CorDASquare, "corDA_square"},
    {ClaimId::ThmDSingleton, "thmD_singleton"},
    {ClaimId::CorD02, "corD_02"},
    {ClaimId::ThmD01, "thmD_01"},
    {ClaimId::Conj0i, "conj_0i"},
    {ClaimId::Conj01i, "conj_01i"},
    {ClaimId::Conj0iSquare, "conj_0i_square"},
    {ClaimId::Conj01iSquare, "conj_01i_square"},
    {ClaimId::ConjMJ, "conj_MJ"},
    {ClaimId::LemComplement, "lem_complement"},
    {ClaimId::Prop01Swap, "prop_01swap"},
    {ClaimId::LemVanishing, "lem_vanishing"},
    {ClaimId::PropShift, "prop_shift"},
};

IntPoly one_minus_x2() { return IntPoly::from_terms({{0, 1}, {2, -1}}); }
IntPoly one_plus_x2() { return IntPoly::from_terms({{0, 1}, {2, 1}}); }

// prod_{e=lo}^{hi} (1 - x^(step*e))
IntPoly geometric_denominator(int lo, int hi, int step) {
    IntPoly prod = IntPoly::one();
    for (int e = lo; e <= hi; ++e)
        prod = prod * IntPoly::from_terms({{0, 1}, {step * e, -1}});
    return prod;
}

std::vector<int> hypothesis_parts(const QuotientParams& qp, bool skip_j0) {
    std::vector<int> parts;
    for (const Interval& c : qp.components) {
        if (skip_j0 && qp.j0 && c == *qp.j0) continue;
        parts.push_back((c.size() + 1) / 2);
    }
    return parts;
}

std::string hypothesis_label(int top, const std::vector<int>& parts) {
    std::ostringstream out;
    out << '[' << top << ';';
    for (std::size_t t = 0; t < parts.size(); ++t) {
        if (t) out << ',';
        out << parts[t];
    }
    out << "]_{x^2}";
    return out.str();
}

std::string class_key_of(const IndexSet& J) {
    QuotientParams qp = quotient_params(J, QuotientFlavor::ConjectureD);
    std::vector<int> sizes;
    for (const Interval& c : qp.components) {
        if (qp.j0 && c == *qp.j0) continue;
        sizes.push_back(c.size());
    }
    std::sort(sizes.begin(), sizes.end());
    std::ostringstream out;
    out << '(' << (qp.j0 ? qp.j0->size() : 0) << ';';
    for (std::size_t t = 0; t < sizes.size(); ++t) {
        if (t) out << ',';
        out << sizes[t];
    }
    out << ')';
    return out.str();
}

}  // namespace

std::string claim_name(ClaimId id) {
    for (const auto& row : kClaimNames)
        if (row.id == id) return row.name;
    return "?";
}

std::optional<ClaimId> claim_from_name(std::string_view name) {
    for (const auto& row : kClaimNames)
        if (name == row.name) return row.id;
    return std::nullopt;
}

const std::vector<ClaimId>& all_claims() {
    static const std::vector<ClaimId> ids = [] {
        std::vector<ClaimId> v;
        for (const auto& row : kClaimNames) v.push_back(row.id);
        return v;
    }();
    return ids;
}

int claim_min_rank(ClaimId id) {
    switch (id) {
        case ClaimId::ThmAQuotient:
        case ClaimId::ThmBQuotient:
        case ClaimId::LemComplement: return 1;
        case ClaimId::CorATrivial:
        case ClaimId::ThmDTrivial:
        case ClaimId::CorDASquare:
        case ClaimId::Prop01Swap: return 2;
        case ClaimId::ThmDSingleton:
        case ClaimId::ThmD01:
        case ClaimId::ConjMJ:
        case ClaimId::LemVanishing:
        case ClaimId::PropShift: return 3;
        case ClaimId::CorD02: return 4;
        case ClaimId::Conj0i:
        case ClaimId::Conj01i:
        case ClaimId::Conj0iSquare:
        case ClaimId::Conj01iSquare: return 5;
    }
    return 1;
}

NRange claim_default_range(ClaimId id, bool extended) {
    switch (id) {
        case ClaimId::ThmAQuotient:
        case ClaimId::ThmBQuotient: return {2, 7};
        case ClaimId::CorATrivial:
        case ClaimId::ThmDTrivial:
        case ClaimId::CorDASquare: return {2, 8};
        case ClaimId::ThmDSingleton: return {3, 7};
        case ClaimId::ThmD01: return {3, 7};
        case ClaimId::CorD02: return {4, 7};
        case ClaimId::Conj0i:
        case ClaimId::Conj01i:
        case ClaimId::Conj0iSquare:
        case ClaimId::Conj01iSquare: return {5, extended ? 8 : 7};
        case ClaimId::ConjMJ: return {3, extended ? 7 : 6};
        case ClaimId::LemComplement: return {2, 6};
        case ClaimId::Prop01Swap: return {2, 6};
        case ClaimId::LemVanishing: return {3, 6};
        case ClaimId::PropShift: return {3, extended ? 7 : 6};
    }
    return {2, 6};
}

std::string to_string(Status s) {
    switch (s) {
        case Status::Verified: return "verified";
        case Status::Mismatch: return "mismatch";
        case Status::Inapplicable: return "inapplicable";
    }
    return "?";
}

std::string ClaimParams::str() const {
    std::ostringstream out;
    bool first = true;
    auto sep = [&] {
        if (!first) out << ' ';
        first = false;
    };
    if (set) {
        sep();
        out << "I=" << set->str();
    }
    if (i) {
        sep();
        out << "i=" << *i;
    }
    if (k) {
        sep();
        out << "k=" << *k;
    }
    if (position) {
        sep();
        out << "a=" << *position;
    }
    if (value) {
        sep();
        out << "v=" << *value;
    }
    return out.str();
}

Engine::Engine(int workers) : workers_(workers < 1 ? 1 : workers) {}

const DescentHistogram& Engine::histogram(int n, GroupLabel g) {
    const auto key = std::make_pair(n, g);
    auto it = hists_.find(key);
    if (it == hists_.end())
        it = hists_.emplace(key, std::make_unique<DescentHistogram>(n, g, workers_)).first;
    return *it->second;
}

IntPoly Engine::signed_gf(int n, GroupLabel g, const IndexSet& I) {
    return histogram(n, g).signed_gf(I);
}

BiPoly Engine::graded_gf(int n, GroupLabel g, const IndexSet& I) {
    return histogram(n, g).graded(I);
}

const std::map<std::uint32_t, Engine::MJEntry>& Engine::mj_table(int n) {
    auto it = mj_tables_.find(n);
    if (it != mj_tables_.end()) return it->second;
    std::map<std::uint32_t, MJEntry> table;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        IndexSet J{n, mask};
        MJEntry entry;
        entry.cofactor = extract_MJ(*this, n, J);
        entry.signature = component_signature(J);
        entry.class_key = class_key_of(J);
        table.emplace(mask, std::move(entry));
    }
    return mj_tables_.emplace(n, std::move(table)).first->second;
}

IntPoly formula_D_trivial(int n) {
    if (n < 2) throw std::invalid_argument("formula_D_trivial: n must be at least 2");
    return tower_factor(2, n, 2);
}

IntPoly formula_D_singleton(int n) {
    if (n < 3) throw std::invalid_argument("formula_D_singleton: n must be at least 3");
    return one_minus_x2() * tower_factor(4, n, 2);
}

IntPoly formula_D_01(int n) {
    if (n < 3) throw std::invalid_argument("formula_D_01: n must be at least 3");
    return one_plus_x2() * tower_factor(4, n, 2);
}

IntPoly formula_D_02(int n) {
    if (n < 4) throw std::invalid_argument("formula_D_02: n must be at least 4");
    return one_minus_x2() * tower_factor(4, n, 2);
}

IntPoly formula_A_trivial(int n) {
    if (n < 2) throw std::invalid_argument("formula_A_trivial: n must be at least 2");
    return tower_factor(2, n, 1);
}

ConjectureForm conjecture_formula(ClaimId id, int n) {
    if (n < 5) throw std::invalid_argument("conjecture_formula: n must be at least 5");
    if (id == ClaimId::Conj0i) return {IntPoly::one(), tower_factor(4, n, 2)};
    if (id == ClaimId::Conj01i) return {one_minus_x2(), one_plus_x2() * tower_factor(4, n, 2)};
    throw std::invalid_argument("conjecture_formula: not a rational-form conjecture id");
}

std::optional<IntPoly> extract_MJ(Engine& engine, int n, const IndexSet& J) {
    if (n < 3) throw std::invalid_argument("extract_MJ: n must be at least 3");
    const QuotientParams qp = quotient_params(J, QuotientFlavor::ConjectureD);
    const IntPoly tower = tower_factor(2 * qp.m + 2, n, 2);
    return exact_div(engine.signed_gf(n, GroupLabel::TypeD, J), tower);
}

std::vector<ClaimParams> claim_instances(ClaimId id, int n) {
    std::vector<ClaimParams> out;
    auto all_subsets = [&](int lowest_index) {
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (lowest_index > 0 && (mask & ((1u << lowest_index) - 1)) != 0) continue;
            ClaimParams p;
            p.set = IndexSet{n, mask};
            out.push_back(std::move(p));
        }
    };
    switch (id) {
        case ClaimId::CorATrivial:
        case ClaimId::ThmDTrivial:
        case ClaimId::CorDASquare:
        case ClaimId::ThmD01:
        case ClaimId::CorD02:
            out.push_back(ClaimParams{});
            break;
        case ClaimId::ThmDSingleton:
            for (int i = 0; i <= n - 1; ++i) {
                ClaimParams p;
                p.i = i;
                out.push_back(p);
            }
            break;
        case ClaimId::Conj0i:
        case ClaimId::Conj01i:
        case ClaimId::Conj0iSquare:
        case ClaimId::Conj01iSquare:
            for (int i = 3; i <= n - 1; ++i) {
                ClaimParams p;
                p.i = i;
                out.push_back(p);
            }
            break;
        case ClaimId::ThmAQuotient:
            all_subsets(1);
            break;
        case ClaimId::ThmBQuotient:
        case ClaimId::ConjMJ:
        case ClaimId::LemComplement:
            all_subsets(0);
            break;
        case ClaimId::Prop01Swap:
            all_subsets(2);
            break;
        case ClaimId::LemVanishing:
            for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                IndexSet I{n, mask};
                const int delta0 = I.contains(0) ? 1 : 0;
                for (int a = 2 + delta0; a <= n - 1; ++a) {
                    bool clear = true;
                    for (int t = std::max(a - 2, 0); t <= std::min(a + 1, n - 1); ++t)
                        if (I.contains(t)) clear = false;
                    if (!clear) continue;
                    for (int v : {n, -n}) {
                        ClaimParams p;
                        p.set = I;
                        p.position = a;
                        p.value = v;
                        out.push_back(p);
                    }
                }
            }
            break;
        case ClaimId::PropShift:
            for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                IndexSet I{n, mask};
                for (const Interval& c : components(I)) {
                    if (c.size() % 2 == 0) continue;  // must be [i, i+2k]
                    const int i = c.lo;
                    const int k = (c.size() - 1) / 2;
                    if (c.hi + 1 > n - 1) continue;   // no room to shift right
                    if (I.contains(c.hi + 2)) continue;
                    const bool allowed = (i >= 1 && !I.contains(0)) || i > 2;
                    if (!allowed) continue;
                    ClaimParams p;
                    p.set = I;
                    p.i = i;
                    p.k = k;
                    out.push_back(p);
                }
            }
            break;
    }
    return out;
}

namespace {

Report check_equal_int(Report r, const IntPoly& lhs, const IntPoly& rhs) {
    r.lhs = lhs;
    r.rhs = rhs;
    if (lhs == rhs) {
        r.status = Status::Verified;
    } else {
        r.status = Status::Mismatch;
        r.counterexample = "lhs=" + lhs.str() + " rhs=" + rhs.str();
    }
    return r;
}

Report check_equal_bi(Report r, const BiPoly& lhs, const BiPoly& rhs) {
    r.lhs = lhs;
    r.rhs = rhs;
    if (lhs == rhs) {
        r.status = Status::Verified;
    } else {
        r.status = Status::Mismatch;
        r.counterexample = "lhs=" + lhs.str() + " rhs=" + rhs.str();
    }
    return r;
}

// Divisibility claim: report the extracted cofactor as rhs and attach the
// non-gating q-multinomial comparison as a note.
Report check_cofactor(Report r, const IntPoly& gf, const IntPoly& numerator, const IntPoly& denominator,
                      int top, const std::vector<int>& parts) {
    r.lhs = gf;
    auto cofactor = exact_div(numerator, denominator);
    if (!cofactor) {
        r.status = Status::Mismatch;
        r.counterexample = "gf=" + gf.str() + " not divisible by " + denominator.str();
        return r;
    }
    r.rhs = *cofactor;
    r.status = Status::Verified;
    const IntPoly hypothesis = q_multinomial(top, parts, 2);
    const std::string label = hypothesis_label(top, parts);
    if (*cofactor == hypothesis)
        r.note = "cofactor matches q-multinomial " + label;
    else
        r.note = "cofactor " + cofactor->str() + " differs from q-multinomial " + label + " = " +
                 hypothesis.str();
    return r;
}

Report run_instance(Engine& eng, ClaimId id, int n, const ClaimParams& p, Report r) {
    const IndexSet empty = IndexSet::empty(n);
    switch (id) {
        case ClaimId::ThmDTrivial:
            return check_equal_int(std::move(r), eng.signed_gf(n, GroupLabel::TypeD, empty),
                                   formula_D_trivial(n));
        case ClaimId::CorATrivial:
            return check_equal_int(std::move(r), eng.signed_gf(n, GroupLabel::TypeA, empty),
                                   formula_A_trivial(n));
        case ClaimId::CorDASquare:
            return check_equal_int(std::move(r), eng.signed_gf(n, GroupLabel::TypeD, empty),
                                   eng.signed_gf(n, GroupLabel::TypeA, empty).squared());
        case ClaimId::ThmDSingleton:
            return check_equal_int(std::move(r),
                                   eng.signed_gf(n, GroupLabel::TypeD, IndexSet::of(n, {*p.i})),
                                   formula_D_singleton(n));
        case ClaimId::ThmD01:
            return check_equal_int(std::move(r),
                                   eng.signed_gf(n, GroupLabel::TypeD, IndexSet::of(n, {0, 1})),
                                   formula_D_01(n));
        case ClaimId::CorD02:
            return check_equal_int(std::move(r),
                                   eng.signed_gf(n, GroupLabel::TypeD, IndexSet::of(n, {0, 2})),
                                   formula_D_02(n));
        case ClaimId::Conj0i: {
            const ConjectureForm form = conjecture_formula(ClaimId::Conj0i, n);
            return check_equal_int(std::move(r),
                                   eng.signed_gf(n, GroupLabel::TypeD, IndexSet::of(n, {0, *p.i})),
                                   form.rhs);
        }
        case ClaimId::Conj01i: {
            const ConjectureForm form = conjecture_formula(ClaimId::Conj01i, n);
            const IntPoly gf = eng.signed_gf(n, GroupLabel::TypeD, IndexSet::of(n, {0, 1, *p.i}));
            return check_equal_int(std::move(r), form.lhs_multiplier * gf, form.rhs);
        }
        case ClaimId::Conj0iSquare:
            return check_equal_int(std::move(r),
                                   eng.signed_gf(n, GroupLabel::TypeD, IndexSet::of(n, {0, *p.i})),
                                   eng.signed_gf(n, GroupLabel::TypeA, IndexSet::of(n, {*p.i})).squared());
        case ClaimId::Conj01iSquare: {
            const IntPoly a_part = eng.signed_gf(n, GroupLabel::TypeA, IndexSet::of(n, {1, *p.i}));
            const IntPoly rhs = IntPoly::from_terms({{0, 1}, {4, -1}}) * a_part.squared();
            return check_equal_int(std::move(r),
                                   eng.signed_gf(n, GroupLabel::TypeD, IndexSet::of(n, {0, 1, *p.i})),
                                   rhs);
        }
        case ClaimId::ConjMJ: {
            const auto& table = eng.mj_table(n);
            const auto& entry = table.at(p.set->bits);
            r.lhs = eng.signed_gf(n, GroupLabel::TypeD, *p.set);
            r.note = "signature " + entry.signature + " class " + entry.class_key;
            if (!entry.cofactor) {
                r.status = Status::Mismatch;
                r.counterexample = "quotient gf not divisible by the tower at J=" + p.set->str();
                return r;
            }
            r.rhs = *entry.cofactor;
            // The representative of the signature class is the lowest
            // bitmask sharing the class key.
            for (const auto& [mask, other] : table) {
                if (other.class_key != entry.class_key) continue;
                if (mask == p.set->bits) break;
                if (!other.cofactor || !(*other.cofactor == *entry.cofactor)) {
                    r.status = Status::Mismatch;
                    r.counterexample = "M at J=" + p.set->str() + " is " + entry.cofactor->str() +
                                       " but M at J=" + IndexSet{n, mask}.str() + " is " +
                                       (other.cofactor ? other.cofactor->str() : "undefined") +
                                       " in class " + entry.class_key;
                    return r;
                }
                break;
            }
            r.status = Status::Verified;
            return r;
        }
        case ClaimId::ThmAQuotient: {
            const QuotientParams qp = quotient_params(*p.set, QuotientFlavor::TypeA);
            const IntPoly gf = eng.signed_gf(n, GroupLabel::TypeA, *p.set);
            const IntPoly tower = tower_factor(2 * qp.m + 2, n, 1);
            return check_cofactor(std::move(r), gf, gf, tower, n / 2, hypothesis_parts(qp, false));
        }
        case ClaimId::ThmBQuotient: {
            const QuotientParams qp = quotient_params(*p.set, QuotientFlavor::TypeB);
            const IntPoly gf = eng.signed_gf(n, GroupLabel::TypeB, *p.set);
            const IntPoly numerator = gf * geometric_denominator(1, qp.m, 2);
            const IntPoly denominator = geometric_denominator(*qp.a + 1, n, 1);
            return check_cofactor(std::move(r), gf, numerator, denominator, n / 2,
                                  hypothesis_parts(qp, true));
        }
        case ClaimId::LemComplement:
            return check_equal_bi(std::move(r), eng.graded_gf(n, GroupLabel::TypeD, *p.set),
                                  eng.graded_gf(n, GroupLabel::BminusD, *p.set));
        case ClaimId::Prop01Swap: {
            IndexSet with0 = *p.set;
            with0.insert(0);
            IndexSet with1 = *p.set;
            with1.insert(1);
            return check_equal_bi(std::move(r), eng.graded_gf(n, GroupLabel::TypeD, with0),
                                  eng.graded_gf(n, GroupLabel::TypeD, with1));
        }
        case ClaimId::LemVanishing:
            return check_equal_int(std::move(r),
                                   restricted_gf(n, GroupLabel::TypeD, *p.set, *p.position, *p.value),
                                   IntPoly{});
        case ClaimId::PropShift: {
            IndexSet shifted = *p.set;
            shifted.erase(*p.i);
            shifted.insert(*p.i + 2 * *p.k + 1);
            IndexSet merged = *p.set;
            merged.insert(*p.i + 2 * *p.k + 1);
            const IntPoly base = eng.signed_gf(n, GroupLabel::TypeD, *p.set);
            const IntPoly moved = eng.signed_gf(n, GroupLabel::TypeD, shifted);
            const IntPoly widened = eng.signed_gf(n, GroupLabel::TypeD, merged);
            r = check_equal_int(std::move(r), base, moved);
            if (r.status == Status::Verified && !(base == widened)) {
                r.status = Status::Mismatch;
                r.counterexample = "gf over " + merged.str() + " is " + widened.str() +
                                   " but gf over " + p.set->str() + " is " + base.str();
            }
            return r;
        }
    }
    r.status = Status::Inapplicable;
    r.note = "unhandled claim";
    return r;
}

}  // namespace

Report verify_claim(Engine& engine, ClaimId id, int n, const ClaimParams& params) {
    Report r;
    r.claim = id;
    r.n = n;
    r.params = params;
    if (n < claim_min_rank(id) || n > 16) {
        r.status = Status::Inapplicable;
        r.note = "n outside the claim's documented range";
        return r;
    }
    const std::vector<ClaimParams> admissible = claim_instances(id, n);
    if (std::find(admissible.begin(), admissible.end(), params) == admissible.end()) {
        r.status = Status::Inapplicable;
        r.note = "parameters outside the claim's documented domain";
        return r;
    }
    const auto start = std::chrono::steady_clock::now();
    r = run_instance(engine, id, n, params, std::move(r));
    r.elapsed_us =
        std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start)
            .count();
    return r;
}

std::vector<Report> run_claim(Engine& engine, ClaimId id, int n) {
    std::vector<Report> out;
    if (n < claim_min_rank(id) || n > 16) {
        Report r;
        r.claim = id;
        r.n = n;
        r.status = Status::Inapplicable;
        r.note = "n outside the claim's documented range";
        out.push_back(std::move(r));
        return out;
    }
    for (const ClaimParams& p : claim_instances(id, n))
        out.push_back(verify_claim(engine, id, n, p));
    return out;
}

std::vector<Report> run_claim(Engine& engine, ClaimId id, NRange range) {
    std::vector<Report> out;
    for (int n = range.lo; n <= range.hi; ++n)
        for (Report& r : run_claim(engine, id, n)) out.push_back(std::move(r));
    return out;
}

std::vector<ScanRow> scan_all_subsets(Engine& engine, int n, GroupLabel g) {
    if (n < 2) throw std::invalid_argument("scan_all_subsets: n must be at least 2");
    const DescentHistogram& hist = engine.histogram(n, g);
    std::vector<ScanRow> rows;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (g == GroupLabel::TypeA && (mask & 1u)) continue;
        ScanRow row;
        row.set = IndexSet{n, mask};
        row.gf = hist.signed_gf(row.set);
        row.signature = component_signature(row.set);
        switch (g) {
            case GroupLabel::TypeD:
            case GroupLabel::BminusD: {
                const QuotientParams qp = quotient_params(row.set, QuotientFlavor::ConjectureD);
                row.cofactor = exact_div(row.gf, tower_factor(2 * qp.m + 2, n, 2));
                break;
            }
            case GroupLabel::TypeA: {
                const QuotientParams qp = quotient_params(row.set, QuotientFlavor::TypeA);
                row.cofactor = exact_div(row.gf, tower_factor(2 * qp.m + 2, n, 1));
                break;
            }
            case GroupLabel::TypeB: {
                const QuotientParams qp = quotient_params(row.set, QuotientFlavor::TypeB);
                row.cofactor = exact_div(row.gf * geometric_denominator(1, qp.m, 2),
                                         geometric_denominator(*qp.a + 1, n, 1));
                break;
            }
        }
        row.cofactor_ok = row.cofactor.has_value();
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace oddlen
