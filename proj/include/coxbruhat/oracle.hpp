#pragma once

// Brute-force ground truth. Everything here is exponential and meant for
// desk-scale groups; the algorithms deliberately differ from the engine's.

#include <cstddef>
#include <string>
#include <vector>

#include "coxbruhat/bruhat.hpp"
#include "coxbruhat/core.hpp"

namespace coxbruhat::oracle {

inline constexpr std::size_t kDefaultBraidBudget = 200000;

/// [e,w] as the downward closure of {w} under single-letter deletion from
/// canonical words, ShortLex sorted. Throws IntervalTooLarge.
std::vector<Element> brute_interval(const CoxeterSystem& sys, const Element& w,
                                    int bound = kDefaultIntervalBound);

/// u <= w by the subword property: some subword of w's canonical word
/// represents u.
bool subword_leq(const CoxeterSystem& sys, const Element& u, const Element& w);

/// Unique maximal element of brute_interval(w) cap xW_J under leq.
/// Throws NotMinimalRep, EmptyIntersection, or NotUnique.
Element brute_coset_max(const CoxeterSystem& sys, const Element& w, const Element& x, GenSet J);

/// Unique maximal element of [e,w]^J cap xW^J_K.
Element brute_relative_coset_max(const CoxeterSystem& sys, const Element& w, const Element& x,
                                 GenSet J, GenSet K);

/// Reduces a word with braid moves and cancellations of adjacent equal
/// letters only. The result is a reduced word for the same element.
/// Throws SearchBudgetExceeded.
Word braid_reduce(const CoxeterSystem& sys, const Word& word,
                  std::size_t budget = kDefaultBraidBudget);

/// Exact word problem: do the two words represent the same element?
bool braid_equal(const CoxeterSystem& sys, const Word& a, const Word& b,
                 std::size_t budget = kDefaultBraidBudget);

/// [e, w * u] == {ab : a <= w, b <= u}, where * is the Demazure product.
bool verify_interval_product(const CoxeterSystem& sys, const Element& w, const Element& u);

struct SweepReport {
    std::size_t triples = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// Compares max_in_coset against brute_coset_max for every w in `elements`,
/// every J subset of S and every x in [e,w] cap W^J.
SweepReport sweep_coset_max(const CoxeterSystem& sys, const std::vector<Element>& elements);

} // namespace coxbruhat::oracle
