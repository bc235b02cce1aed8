#include "oddlen/enumerate.hpp"

#include <thread>

namespace oddlen {

std::vector<SignedPerm> enumerate_group(int n, GroupLabel g) {
    std::vector<SignedPerm> out;
    out.reserve(group_order(n, g));
    for_each_window(n, g, [&](const std::vector<int>& w) { out.push_back(SignedPerm(w)); });
    return out;
}

std::uint64_t group_order(int n, GroupLabel g) {
    check_enumeration_rank(n);
    std::uint64_t fact = 1;
    for (int i = 2; i <= n; ++i) fact *= static_cast<std::uint64_t>(i);
    switch (g) {
        case GroupLabel::TypeA: return fact;
        case GroupLabel::TypeB: return fact << n;
        case GroupLabel::TypeD:
        case GroupLabel::BminusD: return n == 1 ? 1 : fact << (n - 1);
    }
    return 0;
}

bool is_in_quotient(const SignedPerm& sigma, const IndexSet& I, GroupLabel g) {
    if (!in_group(sigma, g))
        throw std::invalid_argument("is_in_quotient: element not in group " + to_string(g));
    const int n = sigma.rank();
    if (I.n != n) throw std::invalid_argument("is_in_quotient: index set rank mismatch");
    if (g == GroupLabel::TypeA && I.contains(0))
        throw std::invalid_argument("is_in_quotient: TypeA index sets must not contain 0");
    for (int i = 0; i < n; ++i) {
        if (!I.contains(i)) continue;
        int left;
        if (i >= 1) {
            left = sigma(i);
        } else if (g == GroupLabel::TypeB) {
            left = 0;
        } else if (n >= 2) {
            left = -sigma(2);
        } else {
            continue;  // rank-1 TypeD/BminusD: no constraint behind index 0
        }
        if (!(left < sigma(i + 1))) return false;
    }
    return true;
}

namespace {

// Per-worker dense accumulator: counts[mask][ell * stride + odd] with both
// statistics bounded by n^2.
struct Grid {
    int stride = 0;
    std::vector<std::vector<std::int64_t>> counts;

    Grid(int n, std::size_t num_buckets)
        : stride(n * n + 1),
          counts(num_buckets, std::vector<std::int64_t>(static_cast<std::size_t>(stride) * stride, 0)) {}
};

void sweep_worker(int n, GroupLabel g, int worker, int workers, Grid& grid) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<int> w(static_cast<std::size_t>(n));
    const std::uint32_t mask_end = g == GroupLabel::TypeA ? 1u : (1u << n);
    do {
        if ((perm[0] - 1) % workers != worker) continue;
        for (std::uint32_t mask = 0; mask < mask_end; ++mask) {
            if (!sign_mask_allowed(mask, g)) continue;
            for (int i = 0; i < n; ++i)
                w[static_cast<std::size_t>(i)] = (mask >> i & 1u) ? -perm[static_cast<std::size_t>(i)]
                                                                  : perm[static_cast<std::size_t>(i)];
            const StatBundle s = detail::window_stats(w.data(), n);
            const auto [ell, odd] = detail::group_lengths(s, g);
            const std::uint32_t d = detail::window_descent_mask(w.data(), n, g);
            ++grid.counts[d][static_cast<std::size_t>(ell) * grid.stride + odd];
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

DescentHistogram::DescentHistogram(int n, GroupLabel g, int workers) : n_(n), group_(g) {
    check_enumeration_rank(n);
    if (n > 10) throw std::invalid_argument("DescentHistogram: rank too large for bucketing");
    if (workers < 1) throw std::invalid_argument("DescentHistogram: worker count must be positive");
    workers = std::min(workers, n);

    const std::size_t num_buckets = 1u << n;
    std::vector<Grid> grids(static_cast<std::size_t>(workers), Grid(n, num_buckets));
    if (workers == 1) {
        sweep_worker(n, g, 0, 1, grids[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int t = 0; t < workers; ++t)
            pool.emplace_back(sweep_worker, n, g, t, workers, std::ref(grids[static_cast<std::size_t>(t)]));
        for (auto& th : pool) th.join();
    }

    buckets_.assign(num_buckets, BiPoly{});
    const int stride = grids[0].stride;
    for (std::size_t d = 0; d < num_buckets; ++d) {
        for (int ell = 0; ell < stride; ++ell) {
            for (int odd = 0; odd < stride; ++odd) {
                std::int64_t total = 0;
                for (const Grid& grid : grids)
                    total += grid.counts[d][static_cast<std::size_t>(ell) * stride + odd];
                if (total != 0) buckets_[d].add_term(ell, odd, total);
            }
        }
    }
}

BiPoly DescentHistogram::graded(const IndexSet& I) const {
    if (I.n != n_) throw std::invalid_argument("DescentHistogram: index set rank mismatch");
    if (group_ == GroupLabel::TypeA && I.contains(0))
        throw std::invalid_argument("DescentHistogram: TypeA index sets must not contain 0");
    BiPoly total;
    for (std::uint32_t d = 0; d < buckets_.size(); ++d)
        if ((d & I.bits) == 0) total += buckets_[d];
    return total;
}

IntPoly DescentHistogram::signed_gf(const IndexSet& I) const { return graded(I).at_y(-1); }

}  // namespace oddlen
