#include "coxbruhat/parabolic.hpp"

namespace coxbruhat {

bool is_min_rep(const CoxeterSystem& sys, const Element& w, GenSet J, Side side) {
    return (sys.descents(w, side) & J).empty();
}

bool in_parabolic(const CoxeterSystem& sys, const Element& w, GenSet J) {
    return sys.support(w).is_subset_of(J);
}

ParabolicDecomposition decompose(const CoxeterSystem& sys, const Element& w, GenSet J, Side side) {
    ParabolicDecomposition d{w, sys.identity(), side, J};
    Word stripped; // letters moved into u, in removal order
    for (;;) {
        const GenSet hits = sys.descents(d.v, side) & J;
        if (hits.empty()) break;
        const Gen s = hits.front();
        stripped.push_back(s);
        d.v = side == Side::Right ? sys.right_multiply(d.v, s) : sys.left_multiply(s, d.v);
    }
    // Right: w = v s_k ... s_1, so u = reverse(stripped). Left: w = s_1 ... s_k v.
    if (side == Side::Right) {
        Word u(stripped.rbegin(), stripped.rend());
        d.u = sys.normalize(u);
    } else {
        d.u = sys.normalize(stripped);
    }
    return d;
}

Element coset_rep(const CoxeterSystem& sys, const Element& w, GenSet J) {
    return decompose(sys, w, J, Side::Right).v;
}

std::vector<Element> min_reps_leq(const CoxeterSystem& sys, const Element& w, GenSet J, int bound) {
    std::vector<Element> out;
    for (auto& y : lower_interval(sys, w, bound).members)
        if (is_min_rep(sys, y, J)) out.push_back(std::move(y));
    return out;
}

void require_subset_chain(const CoxeterSystem& sys, GenSet J, GenSet K) {
    if (!J.is_subset_of(K))
        fail(ErrorKind::BadSubsetChain, "J = " + sys.format(J) + " is not contained in K = " + sys.format(K));
}

void require_min_rep(const CoxeterSystem& sys, const Element& w, GenSet J, const char* what) {
    if (!is_min_rep(sys, w, J))
        fail(ErrorKind::NotMinimalRep, std::string(what) + " = " + sys.format(w) +
                                           " is not a minimal coset representative for " +
                                           sys.format(J) + " (use coset-rep first)");
}

std::pair<Element, Element> relative_rep(const CoxeterSystem& sys, const Element& w, GenSet J,
                                         GenSet K) {
    require_subset_chain(sys, J, K);
    require_min_rep(sys, w, J, "w");
    auto d = decompose(sys, w, K, Side::Right);
    return {std::move(d.v), std::move(d.u)};
}

} // namespace coxbruhat
