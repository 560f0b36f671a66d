#include "coxbruhat/bruhat.hpp"

#include <algorithm>
#include <unordered_set>

namespace coxbruhat {

bool Interval::contains(const Element& u) const {
    return std::binary_search(members.begin(), members.end(), u);
}

bool leq(const CoxeterSystem& sys, const Element& u, const Element& w) {
    Element a = u;
    Element b = w;
    while (!b.is_identity()) {
        if (a.length() > b.length()) return false;
        if (a.length() == b.length()) return a == b;
        const Gen s = b.word().front(); // smallest left descent of b
        if (sys.is_left_descent(s, a)) a = sys.left_multiply(s, a);
        b = sys.left_multiply(s, b);
    }
    return a.is_identity();
}

Interval lower_interval(const CoxeterSystem& sys, const Element& w, int bound) {
    if (w.length() > bound)
        fail(ErrorKind::IntervalTooLarge, "length " + std::to_string(w.length()) +
                                              " exceeds the interval bound " + std::to_string(bound));
    // Subword products of the canonical word, deduplicated after each letter.
    std::unordered_set<Element, ElementHash> seen{sys.identity()};
    std::vector<Element> current{sys.identity()};
    for (Gen s : w.word()) {
        const std::size_t n = current.size();
        for (std::size_t i = 0; i < n; ++i) {
            Element next = sys.right_multiply(current[i], s);
            if (seen.insert(next).second) current.push_back(std::move(next));
        }
    }
    std::sort(current.begin(), current.end());
    Interval out{w, std::move(current), {}};
    out.rank_sizes.assign(static_cast<std::size_t>(w.length()) + 1, 0);
    for (const auto& u : out.members) ++out.rank_sizes[u.length()];
    return out;
}

std::vector<Element> covers(const CoxeterSystem& sys, const Element& w, int bound) {
    std::vector<Element> out;
    if (w.is_identity()) return out;
    const Interval iv = lower_interval(sys, w, bound);
    for (const auto& u : iv.members)
        if (u.length() == w.length() - 1 && leq(sys, u, w)) out.push_back(u);
    return out;
}

IntPolynomial poincare(const CoxeterSystem& sys, const Element& w, int bound) {
    return IntPolynomial(lower_interval(sys, w, bound).rank_sizes);
}

IntPolynomial rank_generating_function(const std::vector<Element>& elements) {
    std::vector<std::int64_t> c;
    for (const auto& u : elements) {
        if (static_cast<int>(c.size()) <= u.length()) c.resize(u.length() + 1, 0);
        ++c[u.length()];
    }
    return IntPolynomial(std::move(c));
}

} // namespace coxbruhat
