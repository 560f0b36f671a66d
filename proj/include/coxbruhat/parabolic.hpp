#pragma once

#include <utility>
#include <vector>

#include "coxbruhat/bruhat.hpp"
#include "coxbruhat/core.hpp"

namespace coxbruhat {

/// Length-additive factorization with respect to a parabolic subgroup W_J.
/// Right side: w = v u with v in W^J and u in W_J.
/// Left side:  w = u v with u in W_J and v minimal in W_J \ W.
struct ParabolicDecomposition {
    Element v;
    Element u;
    Side side = Side::Right;
    GenSet J;
};

/// Right: no right descent in J (w in W^J). Left: no left descent in J.
bool is_min_rep(const CoxeterSystem& sys, const Element& w, GenSet J, Side side = Side::Right);

/// Support of w lies in J.
bool in_parabolic(const CoxeterSystem& sys, const Element& w, GenSet J);

ParabolicDecomposition decompose(const CoxeterSystem& sys, const Element& w, GenSet J,
                                 Side side = Side::Right);

/// The x in W^J with w in x W_J.
Element coset_rep(const CoxeterSystem& sys, const Element& w, GenSet J);

/// [e,w] intersected with W^J, ShortLex sorted.
std::vector<Element> min_reps_leq(const CoxeterSystem& sys, const Element& w, GenSet J,
                                  int bound = kDefaultIntervalBound);

/// For J subset of K and w in W^J: the factorization w = x y with x in W^K
/// and y in W^J_K = W^J cap W_K. Throws BadSubsetChain or NotMinimalRep.
std::pair<Element, Element> relative_rep(const CoxeterSystem& sys, const Element& w, GenSet J,
                                         GenSet K);

void require_subset_chain(const CoxeterSystem& sys, GenSet J, GenSet K);
void require_min_rep(const CoxeterSystem& sys, const Element& w, GenSet J, const char* what);

} // namespace coxbruhat
