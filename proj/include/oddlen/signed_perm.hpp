#pragma once

// Signed permutations in window notation and their length statistics.
//
// A rank-n element sigma is a permutation of [-n, n] with
// sigma(-j) = -sigma(j); only the window (sigma(1), ..., sigma(n)) is
// stored and the negative half is computed on demand.  Composition is
// (sigma * tau)(i) = sigma(tau(i)), so right multiplication by a
// generator acts on window positions: s_i (i >= 1) swaps positions
// i, i+1; s_0 negates position 1; the rank-two generator s_0^D negates
// and swaps positions 1, 2.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oddlen/index_set.hpp"

namespace oddlen {

enum class GroupLabel { TypeA, TypeB, TypeD, BminusD };

/// "A", "B", "D", "B-D".
std::string to_string(GroupLabel g);
/// Accepts the names above (case-insensitive) plus the alias "BminusD".
std::optional<GroupLabel> group_from_string(std::string_view name);

/// The six primitive pair/position counts of one element.  inv/neg/nsp
/// run over all window pairs i < j (positions for neg); the o-variants
/// keep only opposite-parity pairs, and oneg only odd positions.
struct StatBundle {
    int inv = 0;
    int neg = 0;
    int nsp = 0;
    int oinv = 0;
    int oneg = 0;
    int onsp = 0;
    bool operator==(const StatBundle&) const = default;
};

class SignedPerm {
public:
    /// Validates: entries nonzero, absolute values exactly {1, ..., n}.
    explicit SignedPerm(std::vector<int> window);

    static SignedPerm identity(int n);

    int rank() const { return static_cast<int>(window_.size()); }
    const std::vector<int>& window() const { return window_; }

    /// sigma(i) for i in [-n, n], i != 0.
    int operator()(int i) const;

    bool operator==(const SignedPerm&) const = default;

    /// "[-2,4,3,-1]".
    std::string str() const;

private:
    std::vector<int> window_;
};

SignedPerm make_perm(const std::vector<int>& window);
SignedPerm compose(const SignedPerm& sigma, const SignedPerm& tau);
SignedPerm inverse(const SignedPerm& sigma);

/// TypeA: all-positive window; TypeB: any; TypeD: even number of negative
/// entries; BminusD: odd number.
bool in_group(const SignedPerm& sigma, GroupLabel g);

StatBundle stat_bundle(const SignedPerm& sigma);

/// Coxeter length: inv for TypeA, inv+neg+nsp for TypeB, inv+nsp for
/// TypeD and BminusD.  Throws on membership violation.
int length(const SignedPerm& sigma, GroupLabel g);

/// Odd length: oinv for TypeA, oinv+oneg+onsp for TypeB, oinv+onsp for
/// TypeD and BminusD.
int odd_length(const SignedPerm& sigma, GroupLabel g);

/// Independent route to the TypeB odd length: half the number of pairs
/// i < j in [-n, n]^2 of opposite parity with sigma(i) > sigma(j),
/// counting the full window including sigma(0) = 0.
int odd_length_B_halfcount(const SignedPerm& sigma);
/// Same full-window half-count without the parity filter; equals the
/// TypeB length.
int length_B_halfcount(const SignedPerm& sigma);

/// Descent positions as a subset of [0, n-1] (of [1, n-1] for TypeA):
/// i >= 1 descends iff sigma(i) > sigma(i+1); 0 descends iff sigma(1) < 0
/// for TypeB and iff -sigma(2) > sigma(1) for TypeD and BminusD.
IndexSet descent_set(const SignedPerm& sigma, GroupLabel g);

/// Window of the generator s_i of the given group at rank n.
SignedPerm generator(int n, int i, GroupLabel g);
/// sigma * s_i, applied directly to the window.
SignedPerm apply_right_generator(const SignedPerm& sigma, int i, GroupLabel g);

/// Coset decomposition sigma = u * v with v in the parabolic subgroup
/// generated by {s_j : j in J}, u without descents in J, and lengths
/// adding up.  Computed by greedily stripping descents in J from the
/// right.
std::pair<SignedPerm, SignedPerm> parabolic_factorize(const SignedPerm& sigma,
                                                      const IndexSet& J,
                                                      GroupLabel g);

namespace detail {

// Hot-path statistics on a raw window, shared by the enumeration sweeps.
StatBundle window_stats(const int* w, int n);
std::uint32_t window_descent_mask(const int* w, int n, GroupLabel g);
// (length, odd length) for the group's statistics pair.
std::pair<int, int> group_lengths(const StatBundle& s, GroupLabel g);

}  // namespace detail

}  // namespace oddlen
