#include "oddlen/signed_perm.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace oddlen {

std::string to_string(GroupLabel g) {
    switch (g) {
        case GroupLabel::TypeA: return "A";
        case GroupLabel::TypeB: return "B";
        case GroupLabel::TypeD: return "D";
        case GroupLabel::BminusD: return "B-D";
    }
    return "?";
}

std::optional<GroupLabel> group_from_string(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "a") return GroupLabel::TypeA;
    if (lower == "b") return GroupLabel::TypeB;
    if (lower == "d") return GroupLabel::TypeD;
    if (lower == "b-d" || lower == "bminusd") return GroupLabel::BminusD;
    return std::nullopt;
}

SignedPerm::SignedPerm(std::vector<int> window) : window_(std::move(window)) {
    const int n = rank();
    if (n == 0) throw std::invalid_argument("SignedPerm: empty window");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : window_) {
        if (v == 0) throw std::invalid_argument("SignedPerm: window entries must be nonzero");
        const int a = v < 0 ? -v : v;
        if (a > n)
            throw std::invalid_argument("SignedPerm: entry " + std::to_string(v) +
                                        " outside [-" + std::to_string(n) + "," + std::to_string(n) + "]");
        if (seen[a])
            throw std::invalid_argument("SignedPerm: repeated absolute value " + std::to_string(a));
        seen[a] = true;
    }
}

SignedPerm SignedPerm::identity(int n) {
    if (n < 1) throw std::invalid_argument("SignedPerm: rank must be positive");
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return SignedPerm(std::move(w));
}

int SignedPerm::operator()(int i) const {
    const int n = rank();
    if (i == 0 || i < -n || i > n)
        throw std::out_of_range("SignedPerm: argument outside [-n,n]\\{0}");
    return i > 0 ? window_[static_cast<std::size_t>(i - 1)]
                 : -window_[static_cast<std::size_t>(-i - 1)];
}

std::string SignedPerm::str() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < window_.size(); ++i) {
        if (i) out << ',';
        out << window_[i];
    }
    out << ']';
    return out.str();
}

SignedPerm make_perm(const std::vector<int>& window) { return SignedPerm(window); }

SignedPerm compose(const SignedPerm& sigma, const SignedPerm& tau) {
    const int n = sigma.rank();
    if (tau.rank() != n) throw std::invalid_argument("compose: rank mismatch");
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) w[static_cast<std::size_t>(i - 1)] = sigma(tau(i));
    return SignedPerm(std::move(w));
}

SignedPerm inverse(const SignedPerm& sigma) {
    const int n = sigma.rank();
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const int v = sigma(i);
        if (v > 0)
            w[static_cast<std::size_t>(v - 1)] = i;
        else
            w[static_cast<std::size_t>(-v - 1)] = -i;
    }
    return SignedPerm(std::move(w));
}

namespace {

int negative_count(const SignedPerm& sigma) {
    int c = 0;
    for (int v : sigma.window())
        if (v < 0) ++c;
    return c;
}

void require_member(const SignedPerm& sigma, GroupLabel g) {
    if (!in_group(sigma, g))
        throw std::invalid_argument("element " + sigma.str() + " is not in group " + to_string(g));
}

}  // namespace

bool in_group(const SignedPerm& sigma, GroupLabel g) {
    switch (g) {
        case GroupLabel::TypeA: return negative_count(sigma) == 0;
        case GroupLabel::TypeB: return true;
        case GroupLabel::TypeD: return negative_count(sigma) % 2 == 0;
        case GroupLabel::BminusD: return negative_count(sigma) % 2 == 1;
    }
    return false;
}

namespace detail {

StatBundle window_stats(const int* w, int n) {
    StatBundle s;
    for (int i = 0; i < n; ++i) {
        if (w[i] < 0) {
            ++s.neg;
            if (i % 2 == 0) ++s.oneg;  // 1-based position i+1 is odd
        }
        for (int j = i + 1; j < n; ++j) {
            const bool mixed = ((i ^ j) & 1) != 0;
            if (w[i] > w[j]) {
                ++s.inv;
                if (mixed) ++s.oinv;
            }
            if (w[i] + w[j] < 0) {
                ++s.nsp;
                if (mixed) ++s.onsp;
            }
        }
    }
    return s;
}

std::uint32_t window_descent_mask(const int* w, int n, GroupLabel g) {
    std::uint32_t mask = 0;
    switch (g) {
        case GroupLabel::TypeA:
            break;
        case GroupLabel::TypeB:
            if (w[0] < 0) mask |= 1u;
            break;
        case GroupLabel::TypeD:
        case GroupLabel::BminusD:
            // sigma(0) := -sigma(2); vacuous at rank 1 where the index
            // range has no generator behind position 0.
            if (n >= 2 && -w[1] > w[0]) mask |= 1u;
            break;
    }
    for (int i = 1; i < n; ++i)
        if (w[i - 1] > w[i]) mask |= 1u << i;
    return mask;
}

std::pair<int, int> group_lengths(const StatBundle& s, GroupLabel g) {
    switch (g) {
        case GroupLabel::TypeA: return {s.inv, s.oinv};
        case GroupLabel::TypeB: return {s.inv + s.neg + s.nsp, s.oinv + s.oneg + s.onsp};
        case GroupLabel::TypeD:
        case GroupLabel::BminusD: return {s.inv + s.nsp, s.oinv + s.onsp};
    }
    return {0, 0};
}

}  // namespace detail

StatBundle stat_bundle(const SignedPerm& sigma) {
    return detail::window_stats(sigma.window().data(), sigma.rank());
}

int length(const SignedPerm& sigma, GroupLabel g) {
    require_member(sigma, g);
    return detail::group_lengths(stat_bundle(sigma), g).first;
}

int odd_length(const SignedPerm& sigma, GroupLabel g) {
    require_member(sigma, g);
    return detail::group_lengths(stat_bundle(sigma), g).second;
}

namespace {

// Counts inverted pairs i < j over the full window [-n, n], with
// sigma(0) = 0, optionally keeping only opposite-parity pairs.  The count
// is always even and the half-count is returned.
int full_window_halfcount(const SignedPerm& sigma, bool parity_filter) {
    const int n = sigma.rank();
    int count = 0;
    for (int i = -n; i <= n; ++i) {
        const int vi = (i == 0) ? 0 : sigma(i);
        for (int j = i + 1; j <= n; ++j) {
            if (parity_filter && ((i ^ j) & 1) == 0) continue;
            const int vj = (j == 0) ? 0 : sigma(j);
            if (vi > vj) ++count;
        }
    }
    return count / 2;
}

}  // namespace

int odd_length_B_halfcount(const SignedPerm& sigma) { return full_window_halfcount(sigma, true); }

int length_B_halfcount(const SignedPerm& sigma) { return full_window_halfcount(sigma, false); }

IndexSet descent_set(const SignedPerm& sigma, GroupLabel g) {
    require_member(sigma, g);
    IndexSet d = IndexSet::empty(sigma.rank());
    d.bits = detail::window_descent_mask(sigma.window().data(), sigma.rank(), g);
    return d;
}

SignedPerm generator(int n, int i, GroupLabel g) {
    SignedPerm e = SignedPerm::identity(n);
    return apply_right_generator(e, i, g);
}

SignedPerm apply_right_generator(const SignedPerm& sigma, int i, GroupLabel g) {
    const int n = sigma.rank();
    std::vector<int> w = sigma.window();
    if (i >= 1 && i <= n - 1) {
        std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
    } else if (i == 0 && g == GroupLabel::TypeB) {
        w[0] = -w[0];
    } else if (i == 0 && (g == GroupLabel::TypeD || g == GroupLabel::BminusD) && n >= 2) {
        std::swap(w[0], w[1]);
        w[0] = -w[0];
        w[1] = -w[1];
    } else {
        throw std::invalid_argument("generator index " + std::to_string(i) +
                                    " invalid for group " + to_string(g) +
                                    " at rank " + std::to_string(n));
    }
    return SignedPerm(std::move(w));
}

std::pair<SignedPerm, SignedPerm> parabolic_factorize(const SignedPerm& sigma,
                                                      const IndexSet& J,
                                                      GroupLabel g) {
    if (g == GroupLabel::BminusD)
        throw std::invalid_argument("parabolic_factorize: BminusD is not a group");
    require_member(sigma, g);
    const int n = sigma.rank();
    if (J.n != n) throw std::invalid_argument("parabolic_factorize: index set rank mismatch");
    if (g == GroupLabel::TypeA && J.contains(0))
        throw std::invalid_argument("parabolic_factorize: TypeA has no generator 0");
    if (g == GroupLabel::TypeD && n == 1 && !J.is_empty())
        throw std::invalid_argument("parabolic_factorize: rank-1 TypeD has no generators");

    SignedPerm u = sigma;
    SignedPerm v = SignedPerm::identity(n);
    for (;;) {
        const std::uint32_t hits = descent_set(u, g).bits & J.bits;
        if (hits == 0) break;
        const int j = std::countr_zero(hits);
        u = apply_right_generator(u, j, g);
        v = compose(generator(n, j, g), v);
    }
    return {u, v};
}

}  // namespace oddlen
