#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "coxbruhat/bruhat.hpp"
#include "coxbruhat/core.hpp"
#include "coxbruhat/parabolic.hpp"

namespace coxbruhat {

/// One level of the recursive construction of the maximum of [e,w] cap xW_J.
///
/// For x != e: w = u.v is the left-sided parabolic decomposition with respect
/// to S minus D_L(x), J' = {t in J cup S(x) : tx in xW_J}, s is the chosen
/// left descent of v, q' = max([e,u] cap W_J'), q'' = max([e,v] cap sxW_J),
/// and q = q' * (s q'') in the Coxeter monoid.
///
/// At the base (x = e) there is no s; u = w, v = e, J' = J and q = q'.
struct RecursionLevel {
    Element w;
    Element x;
    GenSet x_left_descents;
    Element u;
    Element v;
    GenSet j_prime;
    std::optional<Gen> s;
    Element q_prime;
    Element q_double_prime;
    Element q;
};

struct CosetMaxResult {
    Element w;
    Element x;
    GenSet J;
    /// Maximum of [e,w] cap xW_J.
    Element q;
    /// m_J(w,x) = x^{-1} q, an element of W_J.
    Element m;
    /// Outermost level first; the last entry is the base case.
    std::vector<RecursionLevel> trace;
};

/// Memo table for max_in_coset keyed on (w, x, J). Safe to share between
/// threads; entries are pure functions of the key.
class CosetMaxCache {
public:
    std::optional<CosetMaxResult> find(const Element& w, const Element& x, GenSet J) const;
    void store(const CosetMaxResult& r);
    std::size_t size() const;

private:
    using Key = std::tuple<Word, Word, std::uint64_t>;
    mutable std::mutex mutex_;
    std::map<Key, CosetMaxResult> table_;
};

/// Maximum of [e,w] cap W_J: the Coxeter-monoid product of the letters of
/// w's canonical word that lie in J.
Element max_in_parabolic(const CoxeterSystem& sys, const Element& w, GenSet J);

/// Unique maximum of [e,w] cap xW_J. Requires x in W^J (NotMinimalRep) and
/// x <= w (EmptyIntersection). The smallest left descent of v is used at each
/// level. The result is checked against the defining properties before it is
/// returned; a failed check raises InternalAssertionFailed.
CosetMaxResult max_in_coset(const CoxeterSystem& sys, const Element& w, const Element& x, GenSet J,
                            CosetMaxCache* cache = nullptr);

/// Runs the construction over every choice of s at every level and returns
/// the distinct resulting maxima (ShortLex sorted). A single entry means the
/// construction is choice independent on this input.
std::vector<Element> max_in_coset_all_choices(const CoxeterSystem& sys, const Element& w,
                                              const Element& x, GenSet J);

/// m_J(w,x) = x^{-1} max([e,w] cap xW_J).
Element m_J(const CoxeterSystem& sys, const Element& w, const Element& x, GenSet J,
            CosetMaxCache* cache = nullptr);

struct ShiftedMaxSet {
    Element w;
    GenSet J;
    /// x -> m_J(w,x) for every x in [e,w] cap W^J, x ShortLex ascending.
    std::vector<std::pair<Element, Element>> pairs;
    /// Distinct values, ShortLex sorted.
    std::vector<Element> values;
};

ShiftedMaxSet shifted_max_set(const CoxeterSystem& sys, const Element& w, GenSet J,
                              int bound = kDefaultIntervalBound);

struct RelativeCosetMaxResult {
    Element w;
    Element x;
    GenSet J;
    GenSet K;
    /// Maximum of [e,w] cap xW_K, with its construction trace.
    CosetMaxResult outer;
    /// Maximum of [e,w]^J cap xW^J_K: the W^J representative of outer.q.
    Element q;
    /// m^J_K(w,x) = x^{-1} q, an element of W^J_K.
    Element m;
};

/// Requires J subset of K (BadSubsetChain), w in W^J and x in W^K
/// (NotMinimalRep), x <= w (EmptyIntersection).
RelativeCosetMaxResult max_in_relative_coset(const CoxeterSystem& sys, const Element& w,
                                             const Element& x, GenSet J, GenSet K,
                                             CosetMaxCache* cache = nullptr);

Element m_JK(const CoxeterSystem& sys, const Element& w, const Element& x, GenSet J, GenSet K,
             CosetMaxCache* cache = nullptr);

} // namespace coxbruhat
