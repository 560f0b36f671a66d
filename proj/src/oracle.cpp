#include "coxbruhat/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

#include "coxbruhat/coset_max.hpp"
#include "coxbruhat/parabolic.hpp"

namespace coxbruhat::oracle {

namespace {

bool in_coset(const CoxeterSystem& sys, const Element& y, const Element& x, GenSet J) {
    return sys.support(sys.multiply(sys.inverse(x), y)).is_subset_of(J);
}

Element unique_maximum(const CoxeterSystem& sys, std::vector<Element> members) {
    if (members.empty()) fail(ErrorKind::EmptyIntersection, "no elements to maximize over");
    std::sort(members.begin(), members.end(),
              [](const Element& a, const Element& b) { return a.length() > b.length(); });
    std::vector<Element> maximal;
    for (const auto& y : members) {
        bool dominated = false;
        for (const auto& z : members) {
            if (z.length() <= y.length()) break;
            if (leq(sys, y, z)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) maximal.push_back(y);
    }
    if (maximal.size() != 1) {
        std::string list;
        for (const auto& y : maximal) list += " " + sys.format(y);
        fail(ErrorKind::NotUnique, "several maximal elements:" + list);
    }
    return maximal.front();
}

std::vector<Word> braid_neighbours(const CoxeterSystem& sys, const Word& w) {
    std::vector<Word> out;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        const Gen s = w[i];
        const Gen t = w[i + 1];
        if (s == t) continue;
        const int m = sys.m(s, t);
        if (m == kInfinity || i + m > w.size()) continue;
        bool alternating = true;
        for (int k = 0; k < m && alternating; ++k) alternating = w[i + k] == (k % 2 == 0 ? s : t);
        if (!alternating) continue;
        Word next = w;
        for (int k = 0; k < m; ++k) next[i + k] = k % 2 == 0 ? t : s;
        out.push_back(std::move(next));
    }
    return out;
}

// Every word reachable from `start` by braid moves.
std::set<Word> braid_class(const CoxeterSystem& sys, const Word& start, std::size_t& budget) {
    std::set<Word> seen{start};
    std::deque<Word> queue{start};
    while (!queue.empty()) {
        Word cur = std::move(queue.front());
        queue.pop_front();
        for (auto& next : braid_neighbours(sys, cur)) {
            if (seen.insert(next).second) {
                if (budget-- == 0)
                    fail(ErrorKind::SearchBudgetExceeded, "braid search budget exhausted");
                queue.push_back(std::move(next));
            }
        }
    }
    return seen;
}

} // namespace

std::vector<Element> brute_interval(const CoxeterSystem& sys, const Element& w, int bound) {
    if (w.length() > bound)
        fail(ErrorKind::IntervalTooLarge, "length " + std::to_string(w.length()) +
                                              " exceeds the interval bound " + std::to_string(bound));
    std::unordered_set<Element, ElementHash> seen{w};
    std::vector<Element> stack{w};
    while (!stack.empty()) {
        const Element y = std::move(stack.back());
        stack.pop_back();
        const Word& word = y.word();
        for (std::size_t i = 0; i < word.size(); ++i) {
            Word shorter;
            shorter.reserve(word.size() - 1);
            shorter.insert(shorter.end(), word.begin(), word.begin() + static_cast<long>(i));
            shorter.insert(shorter.end(), word.begin() + static_cast<long>(i) + 1, word.end());
            Element z = sys.normalize(shorter);
            if (seen.insert(z).second) stack.push_back(std::move(z));
        }
    }
    std::vector<Element> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

bool subword_leq(const CoxeterSystem& sys, const Element& u, const Element& w) {
    const int n = w.length();
    const int k = u.length();
    if (k > n) return false;
    // Subwords of exactly length(u) letters; such a subword spelling u is reduced.
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    Word sub(k);
    for (;;) {
        for (int i = 0; i < k; ++i) sub[i] = w.word()[pick[i]];
        if (sys.normalize(sub) == u) return true;
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i) --i;
        if (i < 0) return false;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

Element brute_coset_max(const CoxeterSystem& sys, const Element& w, const Element& x, GenSet J) {
    require_min_rep(sys, x, J, "x");
    std::vector<Element> members;
    for (auto& y : brute_interval(sys, w))
        if (in_coset(sys, y, x, J)) members.push_back(std::move(y));
    if (members.empty())
        fail(ErrorKind::EmptyIntersection, "[e,w] misses the coset of x = " + sys.format(x));
    return unique_maximum(sys, std::move(members));
}

Element brute_relative_coset_max(const CoxeterSystem& sys, const Element& w, const Element& x,
                                 GenSet J, GenSet K) {
    require_subset_chain(sys, J, K);
    require_min_rep(sys, w, J, "w");
    require_min_rep(sys, x, K, "x");
    std::vector<Element> members;
    const Element x_inv = sys.inverse(x);
    for (auto& y : brute_interval(sys, w)) {
        const Element z = sys.multiply(x_inv, y);
        if (is_min_rep(sys, y, J) && sys.support(z).is_subset_of(K) && is_min_rep(sys, z, J))
            members.push_back(std::move(y));
    }
    if (members.empty())
        fail(ErrorKind::EmptyIntersection, "[e,w]^J misses xW^J_K for x = " + sys.format(x));
    return unique_maximum(sys, std::move(members));
}

Word braid_reduce(const CoxeterSystem& sys, const Word& word, std::size_t budget) {
    Word current = word;
    for (;;) {
        const std::set<Word> cls = braid_class(sys, current, budget);
        bool cancelled = false;
        for (const auto& candidate : cls) {
            for (std::size_t i = 0; i + 1 < candidate.size(); ++i) {
                if (candidate[i] == candidate[i + 1]) {
                    current = candidate;
                    current.erase(current.begin() + static_cast<long>(i),
                                  current.begin() + static_cast<long>(i) + 2);
                    cancelled = true;
                    break;
                }
            }
            if (cancelled) break;
        }
        if (!cancelled) return *cls.begin();
    }
}

bool braid_equal(const CoxeterSystem& sys, const Word& a, const Word& b, std::size_t budget) {
    const Word ra = braid_reduce(sys, a, budget);
    const Word rb = braid_reduce(sys, b, budget);
    if (ra.size() != rb.size()) return false;
    return braid_class(sys, ra, budget).contains(rb);
}

bool verify_interval_product(const CoxeterSystem& sys, const Element& w, const Element& u) {
    const auto lhs = brute_interval(sys, sys.demazure_star(w, u));
    const auto left = brute_interval(sys, w);
    const auto right = brute_interval(sys, u);
    std::set<Element> products;
    for (const auto& a : left)
        for (const auto& b : right) products.insert(sys.multiply(a, b));
    return std::equal(lhs.begin(), lhs.end(), products.begin(), products.end());
}

SweepReport sweep_coset_max(const CoxeterSystem& sys, const std::vector<Element>& elements) {
    SweepReport report;
    const std::uint64_t subsets = std::uint64_t{1} << sys.rank();
    for (const auto& w : elements) {
        for (std::uint64_t mask = 0; mask < subsets; ++mask) {
            const GenSet J = GenSet::from_mask(mask);
            CosetMaxCache cache;
            for (const auto& x : min_reps_leq(sys, w, J)) {
                ++report.triples;
                const std::string where = "w = " + sys.format(w) + ", x = " + sys.format(x) +
                                          ", J = " + sys.format(J);
                try {
                    const Element expected = brute_coset_max(sys, w, x, J);
                    const Element got = max_in_coset(sys, w, x, J, &cache).q;
                    if (expected != got)
                        report.failures.push_back(where + ": engine " + sys.format(got) +
                                                  ", oracle " + sys.format(expected));
                } catch (const CoxeterError& ex) {
                    report.failures.push_back(where + ": " + std::string(ex.name()) + ": " + ex.what());
                }
            }
        }
    }
    return report;
}

} // namespace coxbruhat::oracle
