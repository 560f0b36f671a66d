#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "coxbruhat/bruhat.hpp"
#include "coxbruhat/coset_max.hpp"
#include "coxbruhat/polynomial.hpp"

namespace coxbruhat {

struct PoincareTerm {
    Element x;
    /// Exponent of the shift t^length(x).
    int shift = 0;
    /// The element whose (relative) Poincare polynomial is the factor.
    Element m;
    IntPolynomial factor;
};

/// Terms grouped by equal factor, in order of first appearance:
/// (sum of t^length(x)) * factor.
struct PoincareGroup {
    Element m;
    IntPolynomial shifts;
    IntPolynomial factor;
};

struct PoincareDecomposition {
    Element w;
    GenSet J;
    /// Only set for the relative version.
    std::optional<GenSet> K;
    std::vector<PoincareTerm> terms;
    IntPolynomial total;
    /// Product factorization when every term shares the same factor
    /// (relative version: when m^J_K(w,v) = m^J_K(w,e)).
    std::optional<std::pair<IntPolynomial, IntPolynomial>> factorization;

    std::vector<PoincareGroup> grouped() const;
    /// "(1+t)(1+2t+2t^2+t^3)+(t^2+t^3)(1+2t+t^2)"
    std::string factored_string() const;
};

/// P_w = sum over x in [e,w] cap W^J of t^length(x) P_{m_J(w,x)}. The total is
/// checked against poincare(w).
PoincareDecomposition decompose_poincare(const CoxeterSystem& sys, const Element& w, GenSet J,
                                         int bound = kDefaultIntervalBound);

/// P^J_w = sum over x in [e,w] cap W^J of t^length(x). Requires w in W^J.
IntPolynomial relative_poincare(const CoxeterSystem& sys, const Element& w, GenSet J,
                                int bound = kDefaultIntervalBound);

struct BPReport {
    Element w;
    GenSet J;
    Element v;
    Element u;
    /// m_J(w,e), the maximum of [e,w] cap W_J.
    Element u_max;
    bool is_bp = false;
    /// (P^J_v, P_u) when is_bp; their product equals P_w.
    std::optional<std::pair<IntPolynomial, IntPolynomial>> factorization;
};

BPReport bp_report(const CoxeterSystem& sys, const Element& w, GenSet J,
                   int bound = kDefaultIntervalBound);

/// P^J_w = sum over x in [e,w]^K of t^length(x) P^J_{m^J_K(w,x)}, with the
/// factorization P^K_v P^J_u when m^J_K(w,v) = m^J_K(w,e).
PoincareDecomposition relative_decompose_poincare(const CoxeterSystem& sys, const Element& w,
                                                  GenSet J, GenSet K,
                                                  int bound = kDefaultIntervalBound);

} // namespace coxbruhat
