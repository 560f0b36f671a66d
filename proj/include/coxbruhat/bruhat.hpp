#pragma once

#include <vector>

#include "coxbruhat/core.hpp"
#include "coxbruhat/polynomial.hpp"

namespace coxbruhat {

inline constexpr int kDefaultIntervalBound = 24;

/// Lower Bruhat interval [e, top].
struct Interval {
    Element top;
    /// ShortLex sorted.
    std::vector<Element> members;
    /// rank_sizes[k] = number of members of length k.
    std::vector<std::int64_t> rank_sizes;

    bool contains(const Element& u) const;
};

/// Bruhat order u <= w, by left-descent recursion on w.
bool leq(const CoxeterSystem& sys, const Element& u, const Element& w);

/// All u <= w, from the subwords of w's canonical word. Throws
/// IntervalTooLarge when length(w) > bound.
Interval lower_interval(const CoxeterSystem& sys, const Element& w,
                        int bound = kDefaultIntervalBound);

/// Elements covered by w (ShortLex sorted).
std::vector<Element> covers(const CoxeterSystem& sys, const Element& w,
                            int bound = kDefaultIntervalBound);

/// P_w(t) = sum over u <= w of t^length(u).
IntPolynomial poincare(const CoxeterSystem& sys, const Element& w,
                       int bound = kDefaultIntervalBound);

/// Rank generating function of an arbitrary finite set of elements.
IntPolynomial rank_generating_function(const std::vector<Element>& elements);

} // namespace coxbruhat
