#pragma once

// Signed and length-graded generating functions over groups, quotients,
// and position-restricted slices.
//
// signed_gf and graded_gf route through a descent-signature histogram;
// the *_direct variants recompute by filtered enumeration and serve as
// the independent cross-check.  Restrictions break the signature
// decomposition, so restricted_gf always enumerates.

#include <optional>

#include "oddlen/enumerate.hpp"
#include "oddlen/index_set.hpp"
#include "oddlen/poly.hpp"

namespace oddlen {

struct GfRestriction {
    int position = 0;  // in [1, n]
    int value = 0;     // n or -n
};

struct GfQuery {
    int n = 0;
    GroupLabel group = GroupLabel::TypeD;
    IndexSet set;
    std::optional<GfRestriction> restriction;
    bool graded = false;
};

/// sum over the quotient of (-1)^length x^odd_length.
IntPoly signed_gf(int n, GroupLabel g, const IndexSet& I, int workers = 1);
/// sum over the quotient of y^length x^odd_length.
BiPoly graded_gf(int n, GroupLabel g, const IndexSet& I, int workers = 1);

/// Same series from a prebuilt histogram of the right rank and group.
IntPoly signed_gf(const DescentHistogram& hist, const IndexSet& I);
BiPoly graded_gf(const DescentHistogram& hist, const IndexSet& I);

/// Filtered re-enumeration oracles (no histogram involved).
IntPoly signed_gf_direct(int n, GroupLabel g, const IndexSet& I);
BiPoly graded_gf_direct(int n, GroupLabel g, const IndexSet& I);

/// Signed series over the quotient slice {sigma : sigma(position) = value}
/// with |value| = n.
IntPoly restricted_gf(int n, GroupLabel g, const IndexSet& I, int position, int value);

}  // namespace oddlen
