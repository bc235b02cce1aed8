#include "oddlen/index_set.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace oddlen {

IndexSet IndexSet::empty(int n) {
    if (n < 0 || n > 31) throw std::invalid_argument("IndexSet: rank out of range");
    return IndexSet{n, 0};
}

IndexSet IndexSet::of(int n, std::initializer_list<int> members) {
    return from_members(n, std::vector<int>(members));
}

IndexSet IndexSet::from_members(int n, const std::vector<int>& members) {
    IndexSet s = empty(n);
    for (int i : members) s.insert(i);
    return s;
}

void IndexSet::insert(int i) {
    if (i < 0 || i >= n)
        throw std::invalid_argument("IndexSet: member " + std::to_string(i) +
                                    " outside [0," + std::to_string(n - 1) + "]");
    bits |= 1u << i;
}

void IndexSet::erase(int i) {
    if (i >= 0 && i < 32) bits &= ~(1u << i);
}

int IndexSet::count() const { return std::popcount(bits); }

std::vector<int> IndexSet::members() const {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

std::string IndexSet::str() const {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (int i : members()) {
        if (!first) out << ',';
        out << i;
        first = false;
    }
    out << '}';
    return out.str();
}

std::vector<Interval> components(const IndexSet& J) {
    std::vector<Interval> out;
    int i = 0;
    while (i < J.n) {
        if (!J.contains(i)) {
            ++i;
            continue;
        }
        int lo = i;
        while (i + 1 < J.n && J.contains(i + 1)) ++i;
        out.push_back({lo, i});
        ++i;
    }
    return out;
}

QuotientParams quotient_params(const IndexSet& J, QuotientFlavor flavor) {
    if (flavor == QuotientFlavor::TypeA && J.contains(0))
        throw std::invalid_argument("quotient_params: TypeA index sets must not contain 0");

    QuotientParams p;
    p.components = components(J);
    p.delta0 = J.contains(0) ? 1 : 0;
    if (!p.components.empty() && p.components.front().lo == 0)
        p.j0 = p.components.front();

    for (const Interval& c : p.components) {
        const bool is_j0 = p.j0 && c == *p.j0;
        if (flavor == QuotientFlavor::TypeB && is_j0) continue;
        p.m += (c.size() + 1) / 2;
    }

    if (flavor == QuotientFlavor::TypeB) {
        int a = J.n;  // min of the complement; rank when the complement is empty
        for (int i = 0; i < J.n; ++i) {
            if (!J.contains(i)) {
                a = i;
                break;
            }
        }
        p.a = a;
    }
    return p;
}

std::string component_signature(const IndexSet& J) {
    QuotientParams p = quotient_params(J, QuotientFlavor::ConjectureD);
    std::ostringstream out;
    out << '(' << (p.j0 ? p.j0->size() : 0) << ';';
    bool first = true;
    for (const Interval& c : p.components) {
        if (p.j0 && c == *p.j0) continue;
        if (!first) out << ',';
        out << c.size();
        first = false;
    }
    out << ')';
    return out.str();
}

}  // namespace oddlen
