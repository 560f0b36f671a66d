#include "coxbruhat/poincare.hpp"

#include <algorithm>

#include "coxbruhat/parabolic.hpp"

namespace coxbruhat {

namespace {

void internal_check(bool ok, const std::string& what) {
    if (!ok) fail(ErrorKind::InternalAssertionFailed, what);
}

std::string parenthesized(const IntPolynomial& p) {
    return "(" + p.to_string() + ")";
}

} // namespace

std::vector<PoincareGroup> PoincareDecomposition::grouped() const {
    std::vector<PoincareGroup> groups;
    for (const auto& term : terms) {
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const PoincareGroup& g) { return g.m == term.m; });
        if (it == groups.end()) {
            groups.push_back({term.m, IntPolynomial::monomial(term.shift), term.factor});
        } else {
            it->shifts += IntPolynomial::monomial(term.shift);
        }
    }
    return groups;
}

std::string PoincareDecomposition::factored_string() const {
    std::string out;
    const IntPolynomial one = IntPolynomial::constant(1);
    for (const auto& g : grouped()) {
        if (!out.empty()) out += "+";
        if (g.shifts == one && g.factor == one) {
            out += "1";
        } else if (g.shifts == one) {
            out += parenthesized(g.factor);
        } else if (g.factor == one) {
            out += parenthesized(g.shifts);
        } else {
            out += parenthesized(g.shifts) + parenthesized(g.factor);
        }
    }
    return out.empty() ? "0" : out;
}

PoincareDecomposition decompose_poincare(const CoxeterSystem& sys, const Element& w, GenSet J,
                                         int bound) {
    PoincareDecomposition out{w, J, std::nullopt, {}, {}, std::nullopt};
    const ShiftedMaxSet shifted = shifted_max_set(sys, w, J, bound);
    for (const auto& [x, m] : shifted.pairs) {
        IntPolynomial factor = poincare(sys, m, bound);
        out.total += factor.shifted(x.length());
        out.terms.push_back({x, x.length(), m, std::move(factor)});
    }
    internal_check(out.total == poincare(sys, w, bound),
                   "coset decomposition of P_w does not sum to P_w for w = " + sys.format(w));
    if (const auto groups = out.grouped(); groups.size() == 1)
        out.factorization = std::make_pair(groups[0].shifts, groups[0].factor);
    return out;
}

IntPolynomial relative_poincare(const CoxeterSystem& sys, const Element& w, GenSet J, int bound) {
    require_min_rep(sys, w, J, "w");
    return rank_generating_function(min_reps_leq(sys, w, J, bound));
}

BPReport bp_report(const CoxeterSystem& sys, const Element& w, GenSet J, int bound) {
    auto d = decompose(sys, w, J, Side::Right);
    BPReport r{w, J, d.v, d.u, m_J(sys, w, sys.identity(), J), false, std::nullopt};
    r.is_bp = r.u == r.u_max;
    if (r.is_bp) {
        IntPolynomial pv = relative_poincare(sys, r.v, J, bound);
        IntPolynomial pu = poincare(sys, r.u, bound);
        internal_check(pv * pu == poincare(sys, w, bound),
                       "BP decomposition without Poincare factorization for w = " + sys.format(w));
        r.factorization = std::make_pair(std::move(pv), std::move(pu));
    }
    return r;
}

PoincareDecomposition relative_decompose_poincare(const CoxeterSystem& sys, const Element& w,
                                                  GenSet J, GenSet K, int bound) {
    require_subset_chain(sys, J, K);
    require_min_rep(sys, w, J, "w");
    PoincareDecomposition out{w, J, K, {}, {}, std::nullopt};
    CosetMaxCache cache;
    for (auto& x : min_reps_leq(sys, w, K, bound)) {
        Element m = m_JK(sys, w, x, J, K, &cache);
        IntPolynomial factor = relative_poincare(sys, m, J, bound);
        out.total += factor.shifted(x.length());
        out.terms.push_back({std::move(x), 0, std::move(m), std::move(factor)});
        out.terms.back().shift = out.terms.back().x.length();
    }
    internal_check(out.total == relative_poincare(sys, w, J, bound),
                   "relative coset decomposition does not sum to P^J_w for w = " + sys.format(w));
    auto d = decompose(sys, w, K, Side::Right);
    if (m_JK(sys, w, d.v, J, K, &cache) == m_JK(sys, w, sys.identity(), J, K, &cache)) {
        IntPolynomial pv = relative_poincare(sys, d.v, K, bound);
        IntPolynomial pu = relative_poincare(sys, d.u, J, bound);
        internal_check(pv * pu == out.total,
                       "relative BP condition without factorization for w = " + sys.format(w));
        out.factorization = std::make_pair(std::move(pv), std::move(pu));
    }
    return out;
}

} // namespace coxbruhat
