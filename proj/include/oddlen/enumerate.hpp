#pragma once

// Exhaustive group enumeration and the descent-signature histogram.
//
// The stream order is fixed: absolute-value permutations in lexicographic
// order, and for each of them the sign patterns in increasing binary
// order, bit i meaning window position i+1 is negated.  TypeA admits only
// the all-positive pattern, TypeD the even-weight patterns, BminusD the
// odd-weight ones.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "oddlen/index_set.hpp"
#include "oddlen/poly.hpp"
#include "oddlen/signed_perm.hpp"

namespace oddlen {

inline bool sign_mask_allowed(std::uint32_t mask, GroupLabel g) {
    switch (g) {
        case GroupLabel::TypeA: return mask == 0;
        case GroupLabel::TypeB: return true;
        case GroupLabel::TypeD: return std::popcount(mask) % 2 == 0;
        case GroupLabel::BminusD: return std::popcount(mask) % 2 == 1;
    }
    return false;
}

inline void check_enumeration_rank(int n) {
    if (n < 1) throw std::invalid_argument("enumeration: rank must be positive");
    if (n > 16) throw std::invalid_argument("enumeration: rank too large to sweep");
}

/// Calls f(window) for every element of the group in stream order; the
/// buffer is reused between calls.
template <class F>
void for_each_window(int n, GroupLabel g, F&& f) {
    check_enumeration_rank(n);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<int> w(static_cast<std::size_t>(n));
    const std::uint32_t mask_end = g == GroupLabel::TypeA ? 1u : (1u << n);
    do {
        for (std::uint32_t mask = 0; mask < mask_end; ++mask) {
            if (!sign_mask_allowed(mask, g)) continue;
            for (int i = 0; i < n; ++i)
                w[static_cast<std::size_t>(i)] = (mask >> i & 1u) ? -perm[static_cast<std::size_t>(i)]
                                                                  : perm[static_cast<std::size_t>(i)];
            f(static_cast<const std::vector<int>&>(w));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

/// Materialized deterministic stream; n! / 2^n n! / 2^(n-1) n! elements.
std::vector<SignedPerm> enumerate_group(int n, GroupLabel g);

std::uint64_t group_order(int n, GroupLabel g);

/// sigma(i) < sigma(i+1) for every i in I, with sigma(0) = 0 for TypeB
/// and sigma(0) = -sigma(2) for TypeD and BminusD.  TypeA rejects sets
/// containing 0.
bool is_in_quotient(const SignedPerm& sigma, const IndexSet& I, GroupLabel g);

/// One full-group pass bucketed by descent set: bucket[D] accumulates
/// y^length x^odd_length over the elements whose descent set is exactly D.
/// Any quotient's graded series is the sum of the buckets disjoint
/// from I.  The result is independent of the worker count: workers own
/// disjoint sub-streams keyed by the absolute value in window position 1
/// and their partial grids are merged by plain addition.
class DescentHistogram {
public:
    DescentHistogram(int n, GroupLabel g, int workers = 1);

    int rank() const { return n_; }
    GroupLabel group() const { return group_; }

    const BiPoly& bucket(std::uint32_t descent_mask) const { return buckets_.at(descent_mask); }
    const std::vector<BiPoly>& buckets() const { return buckets_; }

    BiPoly graded(const IndexSet& I) const;
    IntPoly signed_gf(const IndexSet& I) const;

private:
    int n_;
    GroupLabel group_;
    std::vector<BiPoly> buckets_;  // indexed by descent bitmask
};

}  // namespace oddlen
