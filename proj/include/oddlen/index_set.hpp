#pragma once

// Subsets of the generator index range [0, n-1], their decomposition into
// connected components (maximal runs of consecutive integers), and the
// derived quotient parameters m / a / delta0.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace oddlen {

struct IndexSet {
    int n = 0;              // rank context: members live in [0, n-1]
    std::uint32_t bits = 0;

    static IndexSet empty(int n);
    static IndexSet of(int n, std::initializer_list<int> members);
    static IndexSet from_members(int n, const std::vector<int>& members);

    bool contains(int i) const { return i >= 0 && i < 32 && (bits >> i & 1u); }
    void insert(int i);
    void erase(int i);
    int count() const;
    bool is_empty() const { return bits == 0; }
    std::vector<int> members() const;

    bool operator==(const IndexSet&) const = default;

    /// "{0,1,3}", "{}" for the empty set.
    std::string str() const;
};

struct Interval {
    int lo = 0;
    int hi = 0;
    int size() const { return hi - lo + 1; }
    bool operator==(const Interval&) const = default;
};

/// Maximal intervals of J separated by gaps greater than 1, ascending.
std::vector<Interval> components(const IndexSet& J);

enum class QuotientFlavor { TypeA, TypeB, ConjectureD };

struct QuotientParams {
    std::vector<Interval> components;   // all components, ascending
    std::optional<Interval> j0;         // the component containing 0, if any
    int m = 0;
    std::optional<int> a;               // TypeB only; equals n when J = [0, n-1]
    int delta0 = 0;
};

/// Component data plus the flavor's m:
///   TypeA       sums floor((|I_k|+1)/2) over every component (requires 0 not in J),
///   TypeB       sums over the components other than j0 and sets a = min([0,n-1] \ J),
///   ConjectureD sums over every component including j0.
QuotientParams quotient_params(const IndexSet& J, QuotientFlavor flavor);

/// "(|J0|;|J1|,...)" with the non-j0 component sizes in ascending position
/// order, e.g. "(2;1,3)".
std::string component_signature(const IndexSet& J);

}  // namespace oddlen
