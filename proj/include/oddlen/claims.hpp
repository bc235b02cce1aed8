#pragma once

// Closed-form product formulas, cofactor extraction by exact division,
// and the claim-level verification dispatcher.
//
// Claim ids and what they check (gf = signed series, n the rank):
//   thmA_quotient    exact divisibility of every type-A quotient gf by its
//                    alternating tower; the residual cofactor is reported
//                    and compared (non-gating) with a q-multinomial guess
//   corA_trivial     whole-group type-A gf = tower(2..n, power 1)
//   thmB_quotient    type-B quotient gf times prod (1-x^(2i)) divisible by
//                    prod_(j=a+1..n) (1-x^j); cofactor reported as above
//   thmD_trivial     whole-group type-D gf = tower(2..n, power 2)
//   corDA_square     whole-group type-D gf = (whole-group type-A gf)^2
//   thmD_singleton   gf of D^{i} = (1-x^2) * tower(4..n, power 2), any i
//   corD_02          gf of D^{0,2} = (1-x^2) * tower(4..n, power 2)
//   thmD_01          gf of D^{0,1} = (1+x^2) * tower(4..n, power 2)
//   conj_0i          gf of D^{0,i} = tower(4..n, power 2), i in [3,n-1]
//   conj_01i         (1-x^2) * gf of D^{0,1,i} = (1+x^2) * tower(4..n, 2)
//   conj_0i_square   gf of D^{0,i} = (type-A gf of S^{i})^2
//   conj_01i_square  gf of D^{0,1,i} = (1-x^4) * (type-A gf of S^{1,i})^2
//   conj_MJ          gf of D^J is divisible by tower(2m+2..n, power 2) and
//                    the cofactor M_J depends only on the component-size
//                    signature, symmetrically in the non-j0 sizes
//   lem_complement   graded series agree on D^I and (B \ D)^I
//   prop_01swap      graded series agree on D^{I+{0}} and D^{I+{1}},
//                    I within [2,n-1]
//   lem_vanishing    signed series over {sigma in D^I : sigma(a) = +-n}
//                    vanishes when [a-2,a+1] misses I and a >= 2+delta0
//   prop_shift       signed series unchanged when a whole odd-size
//                    component [i,i+2k] of I is replaced by [i+1,i+2k+1]

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "oddlen/enumerate.hpp"
#include "oddlen/genfun.hpp"
#include "oddlen/index_set.hpp"
#include "oddlen/poly.hpp"
#include "oddlen/signed_perm.hpp"

namespace oddlen {

enum class ClaimId {
    ThmAQuotient,
    CorATrivial,
    ThmBQuotient,
    ThmDTrivial,
    CorDASquare,
    ThmDSingleton,
    CorD02,
    ThmD01,
    Conj0i,
    Conj01i,
    Conj0iSquare,
    Conj01iSquare,
    ConjMJ,
    LemComplement,
    Prop01Swap,
    LemVanishing,
    PropShift,
};

std::string claim_name(ClaimId id);
std::optional<ClaimId> claim_from_name(std::string_view name);
const std::vector<ClaimId>& all_claims();

struct NRange {
    int lo = 1;
    int hi = 1;
    bool contains(int n) const { return n >= lo && n <= hi; }
};

/// Documented parameter domain: the smallest rank at which the claim is
/// stated.  Larger ranks are limited only by enumeration cost.
int claim_min_rank(ClaimId id);
/// Default verification sweep; extended=true widens the conjecture sweeps
/// by one rank (the expensive opt-in runs).
NRange claim_default_range(ClaimId id, bool extended = false);

enum class Status { Verified, Mismatch, Inapplicable };
std::string to_string(Status s);

struct ClaimParams {
    std::optional<IndexSet> set;
    std::optional<int> i;
    std::optional<int> k;
    std::optional<int> position;  // the restricted window position a
    std::optional<int> value;     // the restricted value, n or -n

    std::string str() const;
    bool operator==(const ClaimParams&) const = default;
};

using PolySide = std::variant<IntPoly, BiPoly>;

struct Report {
    ClaimId claim{};
    int n = 0;
    ClaimParams params;
    Status status = Status::Inapplicable;
    std::optional<PolySide> lhs;
    std::optional<PolySide> rhs;
    std::optional<std::string> counterexample;
    std::optional<std::string> note;
    std::int64_t elapsed_us = 0;
};

/// Shared computation context: histogram per (rank, group) and the
/// tower-cofactor table per rank, both built lazily and reused across
/// claims in a scan.  Worker count only affects speed, never results.
class Engine {
public:
    explicit Engine(int workers = 1);

    int workers() const { return workers_; }

    const DescentHistogram& histogram(int n, GroupLabel g);
    IntPoly signed_gf(int n, GroupLabel g, const IndexSet& I);
    BiPoly graded_gf(int n, GroupLabel g, const IndexSet& I);

    struct MJEntry {
        std::optional<IntPoly> cofactor;   // nullopt: divisibility failed
        std::string signature;             // "(|J0|;|J1|,...)" in position order
        std::string class_key;             // signature with non-j0 sizes sorted
    };
    /// Cofactor table for every J at rank n (type D), ascending bitmask.
    const std::map<std::uint32_t, MJEntry>& mj_table(int n);

private:
    int workers_;
    std::map<std::pair<int, GroupLabel>, std::unique_ptr<DescentHistogram>> hists_;
    std::map<int, std::map<std::uint32_t, MJEntry>> mj_tables_;
};

IntPoly formula_D_trivial(int n);    // n >= 2
IntPoly formula_D_singleton(int n);  // n >= 3
IntPoly formula_D_01(int n);         // n >= 3
IntPoly formula_D_02(int n);         // n >= 4
IntPoly formula_A_trivial(int n);    // n >= 2

/// Cross-multiplied form of the rational conjecture statements:
/// lhs_multiplier * gf must equal rhs.
struct ConjectureForm {
    IntPoly lhs_multiplier;
    IntPoly rhs;
};
ConjectureForm conjecture_formula(ClaimId id, int n);  // Conj0i / Conj01i, n >= 5

/// Tower cofactor of the type-D quotient series at J, or nullopt when the
/// series is not divisible (a conjecture violation).
std::optional<IntPoly> extract_MJ(Engine& engine, int n, const IndexSet& J);

/// Admissible parameter instances of the claim at rank n, in deterministic
/// order (sets by ascending bitmask).  Empty only when no parameters are
/// admissible at this rank.
std::vector<ClaimParams> claim_instances(ClaimId id, int n);

Report verify_claim(Engine& engine, ClaimId id, int n, const ClaimParams& params);

/// Every admissible instance at rank n, or a single inapplicable report
/// when n is below the claim's documented range.
std::vector<Report> run_claim(Engine& engine, ClaimId id, int n);
std::vector<Report> run_claim(Engine& engine, ClaimId id, NRange range);

struct ScanRow {
    IndexSet set;
    IntPoly gf;
    std::string signature;
    bool cofactor_ok = false;
    std::optional<IntPoly> cofactor;
};

/// One histogram pass, then one row per subset of the group's generator
/// indices in ascending bitmask order.  The cofactor column holds the
/// type-appropriate tower cofactor (M_J for types D and B-D).
std::vector<ScanRow> scan_all_subsets(Engine& engine, int n, GroupLabel g);

}  // namespace oddlen
