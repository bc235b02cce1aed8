#include "oddlen/genfun.hpp"

#include <stdexcept>

namespace oddlen {

namespace {

void check_query(int n, GroupLabel g, const IndexSet& I) {
    check_enumeration_rank(n);
    if (I.n != n) throw std::invalid_argument("generating function: index set rank mismatch");
    if (g == GroupLabel::TypeA && I.contains(0))
        throw std::invalid_argument("generating function: TypeA index sets must not contain 0");
}

}  // namespace

IntPoly signed_gf(int n, GroupLabel g, const IndexSet& I, int workers) {
    return graded_gf(n, g, I, workers).at_y(-1);
}

BiPoly graded_gf(int n, GroupLabel g, const IndexSet& I, int workers) {
    check_query(n, g, I);
    DescentHistogram hist(n, g, workers);
    return hist.graded(I);
}

IntPoly signed_gf(const DescentHistogram& hist, const IndexSet& I) { return hist.signed_gf(I); }

BiPoly graded_gf(const DescentHistogram& hist, const IndexSet& I) { return hist.graded(I); }

BiPoly graded_gf_direct(int n, GroupLabel g, const IndexSet& I) {
    check_query(n, g, I);
    BiPoly total;
    for_each_window(n, g, [&](const std::vector<int>& w) {
        for (int i = 0; i < n; ++i) {
            if (!I.contains(i)) continue;
            int left;
            if (i >= 1)
                left = w[static_cast<std::size_t>(i - 1)];
            else if (g == GroupLabel::TypeB)
                left = 0;
            else if (n >= 2)
                left = -w[1];
            else
                continue;
            if (left > w[static_cast<std::size_t>(i)]) return;
        }
        const auto [ell, odd] = detail::group_lengths(detail::window_stats(w.data(), n), g);
        total.add_term(ell, odd, 1);
    });
    return total;
}

IntPoly signed_gf_direct(int n, GroupLabel g, const IndexSet& I) {
    return graded_gf_direct(n, g, I).at_y(-1);
}

IntPoly restricted_gf(int n, GroupLabel g, const IndexSet& I, int position, int value) {
    check_query(n, g, I);
    if (position < 1 || position > n)
        throw std::invalid_argument("restricted_gf: position outside [1,n]");
    if (value != n && value != -n)
        throw std::invalid_argument("restricted_gf: restriction value must be n or -n");
    IntPoly total;
    for_each_window(n, g, [&](const std::vector<int>& w) {
        if (w[static_cast<std::size_t>(position - 1)] != value) return;
        const std::uint32_t d = detail::window_descent_mask(w.data(), n, g);
        if ((d & I.bits) != 0) return;
        const auto [ell, odd] = detail::group_lengths(detail::window_stats(w.data(), n), g);
        total.add_term(odd, ell % 2 == 0 ? 1 : -1);
    });
    return total;
}

}  // namespace oddlen
