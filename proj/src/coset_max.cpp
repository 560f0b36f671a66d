#include "coxbruhat/coset_max.hpp"

#include <algorithm>
#include <set>

namespace coxbruhat {

std::optional<CosetMaxResult> CosetMaxCache::find(const Element& w, const Element& x, GenSet J) const {
    std::lock_guard lock(mutex_);
    auto it = table_.find(Key{w.word(), x.word(), J.mask()});
    if (it == table_.end()) return std::nullopt;
    return it->second;
}

void CosetMaxCache::store(const CosetMaxResult& r) {
    std::lock_guard lock(mutex_);
    table_.emplace(Key{r.w.word(), r.x.word(), r.J.mask()}, r);
}

std::size_t CosetMaxCache::size() const {
    std::lock_guard lock(mutex_);
    return table_.size();
}

Element max_in_parabolic(const CoxeterSystem& sys, const Element& w, GenSet J) {
    Word letters;
    for (Gen g : w.word())
        if (J.contains(g)) letters.push_back(g);
    return sys.demazure_fold(letters);
}

namespace {

struct LevelSetup {
    Element u;
    Element v;
    GenSet x_left_descents;
    GenSet j_prime;
    Element q_prime;
};

LevelSetup setup_level(const CoxeterSystem& sys, const Element& w, const Element& x, GenSet J) {
    LevelSetup st;
    st.x_left_descents = sys.left_descents(x);
    auto dec = decompose(sys, w, sys.all_generators() - st.x_left_descents, Side::Left);
    st.u = std::move(dec.u);
    st.v = std::move(dec.v);
    for (Gen t : (J | sys.support(x)).members())
        if (coset_rep(sys, sys.left_multiply(t, x), J) == x) st.j_prime.insert(t);
    st.q_prime = max_in_parabolic(sys, st.u, st.j_prime);
    return st;
}

void internal_check(bool ok, const std::string& what) {
    if (!ok) fail(ErrorKind::InternalAssertionFailed, what);
}

void verify_result(const CoxeterSystem& sys, const CosetMaxResult& r) {
    const std::string ctx = " (w = " + sys.format(r.w) + ", x = " + sys.format(r.x) +
                            ", J = " + sys.format(r.J) + ", q = " + sys.format(r.q) + ")";
    internal_check(leq(sys, r.q, r.w), "constructed q is not below w" + ctx);
    internal_check(coset_rep(sys, r.q, r.J) == r.x, "constructed q is not in xW_J" + ctx);
    internal_check(in_parabolic(sys, r.m, r.J), "shift x^{-1}q is not in W_J" + ctx);
    internal_check(r.q.length() == r.x.length() + r.m.length(), "q = x m is not length additive" + ctx);
}

CosetMaxResult solve(const CoxeterSystem& sys, const Element& w, const Element& x, GenSet J,
                     CosetMaxCache* cache) {
    if (cache) {
        if (auto hit = cache->find(w, x, J)) return *hit;
    }
    CosetMaxResult r{w, x, J, {}, {}, {}};
    if (x.is_identity()) {
        r.q = max_in_parabolic(sys, w, J);
        r.trace.push_back(RecursionLevel{w, x, {}, w, sys.identity(), J, std::nullopt, r.q,
                                         sys.identity(), r.q});
    } else {
        LevelSetup st = setup_level(sys, w, x, J);
        const GenSet choices = sys.left_descents(st.v);
        internal_check(!choices.empty() && choices.is_subset_of(st.x_left_descents),
                       "left descents of v are not a nonempty subset of D_L(x)");
        const Gen s = choices.front();
        const Element sx = sys.left_multiply(s, x);
        internal_check(is_min_rep(sys, sx, J), "sx is not a minimal coset representative");
        internal_check(leq(sys, sx, st.v), "sx is not below v");
        CosetMaxResult inner = solve(sys, st.v, sx, J, cache);
        const Element s_q2 = sys.left_multiply(s, inner.q);
        r.q = sys.demazure_star(st.q_prime, s_q2);
        r.trace.push_back(RecursionLevel{w, x, st.x_left_descents, st.u, st.v, st.j_prime, s,
                                         st.q_prime, inner.q, r.q});
        r.trace.insert(r.trace.end(), inner.trace.begin(), inner.trace.end());
    }
    r.m = sys.multiply(sys.inverse(x), r.q);
    verify_result(sys, r);
    if (cache) cache->store(r);
    return r;
}

void all_choices(const CoxeterSystem& sys, const Element& w, const Element& x, GenSet J,
                 std::set<Element>& out) {
    if (x.is_identity()) {
        out.insert(max_in_parabolic(sys, w, J));
        return;
    }
    LevelSetup st = setup_level(sys, w, x, J);
    for (Gen s : sys.left_descents(st.v).members()) {
        std::set<Element> inner;
        all_choices(sys, st.v, sys.left_multiply(s, x), J, inner);
        for (const auto& q2 : inner)
            out.insert(sys.demazure_star(st.q_prime, sys.left_multiply(s, q2)));
    }
}

void check_coset_preconditions(const CoxeterSystem& sys, const Element& w, const Element& x, GenSet J) {
    require_min_rep(sys, x, J, "x");
    if (!leq(sys, x, w))
        fail(ErrorKind::EmptyIntersection,
             "x = " + sys.format(x) + " is not below w = " + sys.format(w) + ", so [e,w] misses xW_J");
}

} // namespace

CosetMaxResult max_in_coset(const CoxeterSystem& sys, const Element& w, const Element& x, GenSet J,
                            CosetMaxCache* cache) {
    check_coset_preconditions(sys, w, x, J);
    return solve(sys, w, x, J, cache);
}

std::vector<Element> max_in_coset_all_choices(const CoxeterSystem& sys, const Element& w,
                                              const Element& x, GenSet J) {
    check_coset_preconditions(sys, w, x, J);
    std::set<Element> out;
    all_choices(sys, w, x, J, out);
    return {out.begin(), out.end()};
}

Element m_J(const CoxeterSystem& sys, const Element& w, const Element& x, GenSet J,
            CosetMaxCache* cache) {
    return max_in_coset(sys, w, x, J, cache).m;
}

ShiftedMaxSet shifted_max_set(const CoxeterSystem& sys, const Element& w, GenSet J, int bound) {
    ShiftedMaxSet out{w, J, {}, {}};
    CosetMaxCache cache;
    for (auto& x : min_reps_leq(sys, w, J, bound)) {
        Element m = solve(sys, w, x, J, &cache).m;
        out.pairs.emplace_back(std::move(x), std::move(m));
    }
    std::set<Element> values;
    for (const auto& [x, m] : out.pairs) values.insert(m);
    out.values.assign(values.begin(), values.end());
    return out;
}

RelativeCosetMaxResult max_in_relative_coset(const CoxeterSystem& sys, const Element& w,
                                             const Element& x, GenSet J, GenSet K,
                                             CosetMaxCache* cache) {
    require_subset_chain(sys, J, K);
    require_min_rep(sys, w, J, "w");
    CosetMaxResult outer = max_in_coset(sys, w, x, K, cache);
    Element q = coset_rep(sys, outer.q, J);
    Element m = sys.multiply(sys.inverse(x), q);
    internal_check(q.length() == x.length() + m.length() && in_parabolic(sys, m, K) &&
                       is_min_rep(sys, m, J),
                   "relative maximum is not in xW^J_K");
    return {w, x, J, K, std::move(outer), std::move(q), std::move(m)};
}

Element m_JK(const CoxeterSystem& sys, const Element& w, const Element& x, GenSet J, GenSet K,
             CosetMaxCache* cache) {
    return max_in_relative_coset(sys, w, x, J, K, cache).m;
}

} // namespace coxbruhat
