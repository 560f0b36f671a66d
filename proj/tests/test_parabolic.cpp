#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "coxbruhat/bruhat.hpp"
#include "coxbruhat/parabolic.hpp"
#include "test_support.hpp"

using namespace coxbruhat;
using coxbruhat::testing::all_subsets;
using coxbruhat::testing::el;
using coxbruhat::testing::gens;

namespace {

const CoxeterSystem& a3() {
    static const CoxeterSystem sys = type_a(3);
    return sys;
}

const CoxeterSystem& a4() {
    static const CoxeterSystem sys = type_a(4);
    return sys;
}

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const CoxeterError& ex) {
        return ex.kind();
    }
    return ErrorKind::InternalAssertionFailed;
}

} // namespace

TEST(IsMinRep, Examples) {
    const auto& sys = a3();
    const GenSet J = gens(sys, "s1,s2");
    for (const auto& K : all_subsets(sys)) {
        EXPECT_TRUE(is_min_rep(sys, sys.identity(), K, Side::Right));
        EXPECT_TRUE(is_min_rep(sys, sys.identity(), K, Side::Left));
    }
    EXPECT_TRUE(is_min_rep(sys, el(sys, "s2 s3"), J, Side::Right));
    EXPECT_FALSE(is_min_rep(sys, el(sys, "s1 s2 s1"), J, Side::Right));
    EXPECT_FALSE(is_min_rep(sys, el(sys, "s2 s3"), J, Side::Left));
    EXPECT_TRUE(is_min_rep(sys, el(sys, "s3 s2 s1"), gens(sys, "s1,s2"), Side::Left));
}

TEST(Decompose, Examples) {
    const auto& sys = a3();
    const GenSet J = gens(sys, "s1,s2");
    const auto d = decompose(sys, el(sys, "s1 s2 s3 s2 s1"), J, Side::Right);
    EXPECT_EQ(d.v, el(sys, "s1 s2 s3"));
    EXPECT_EQ(d.u, el(sys, "s2 s1"));
    EXPECT_EQ(d.side, Side::Right);
    EXPECT_EQ(d.J, J);

    const auto& s5 = a4();
    const auto l = decompose(s5, el(s5, "s3 s1 s2 s4 s3 s2 s1"), gens(s5, "s1,s2,s3"), Side::Left);
    EXPECT_EQ(l.u, el(s5, "s3 s1 s2"));
    EXPECT_EQ(l.v, el(s5, "s4 s3 s2 s1"));

    const Element inside = el(sys, "s2 s1 s2");
    const auto p = decompose(sys, inside, J, Side::Right);
    EXPECT_TRUE(p.v.is_identity());
    EXPECT_EQ(p.u, inside);
}

TEST(Decompose, InvariantsBothSides) {
    for (const auto& sys : {type_a(3), type_b(3), type_i2(5)}) {
        for (const auto& w : enumerate_elements(sys, 64)) {
            for (const auto& J : all_subsets(sys)) {
                const auto r = decompose(sys, w, J, Side::Right);
                ASSERT_TRUE(is_min_rep(sys, r.v, J, Side::Right));
                ASSERT_TRUE(in_parabolic(sys, r.u, J));
                ASSERT_EQ(sys.multiply(r.v, r.u), w);
                ASSERT_EQ(r.v.length() + r.u.length(), w.length());
                const auto l = decompose(sys, w, J, Side::Left);
                ASSERT_TRUE(is_min_rep(sys, l.v, J, Side::Left));
                ASSERT_TRUE(in_parabolic(sys, l.u, J));
                ASSERT_EQ(sys.multiply(l.u, l.v), w);
                ASSERT_EQ(l.u.length() + l.v.length(), w.length());
            }
        }
    }
}

TEST(Decompose, UniqueLengthAdditiveFactorization) {
    const auto& sys = a3();
    const auto all = enumerate_elements(sys, 64);
    for (const auto& J : all_subsets(sys)) {
        for (const auto& w : all) {
            int count = 0;
            for (const auto& v : all) {
                if (!is_min_rep(sys, v, J)) continue;
                for (const auto& u : all) {
                    if (!in_parabolic(sys, u, J)) continue;
                    if (v.length() + u.length() == w.length() && sys.multiply(v, u) == w) ++count;
                }
            }
            ASSERT_EQ(count, 1) << sys.format(w) << " " << sys.format(J);
        }
    }
}

TEST(CosetRep, Examples) {
    const auto& sys = a3();
    const GenSet J = gens(sys, "s1,s2");
    EXPECT_EQ(coset_rep(sys, el(sys, "s2 s3 s2 s1"), J), el(sys, "s2 s3"));
    EXPECT_TRUE(coset_rep(sys, el(sys, "s1 s2 s1"), J).is_identity());
    const auto& s5 = a4();
    EXPECT_EQ(coset_rep(s5, el(s5, "s4 s3 s4 s1 s2 s1"), gens(s5, "s1,s2,s4")), el(s5, "s4 s3"));
}

TEST(CosetRep, MinRepsBelowStayBelowV) {
    for (const auto& sys : {type_a(3), type_b(3)}) {
        const auto all = enumerate_elements(sys, 64);
        for (const auto& J : all_subsets(sys)) {
            for (const auto& w : all) {
                const Element v = decompose(sys, w, J).v;
                for (const auto& x : all) {
                    if (is_min_rep(sys, x, J) && leq(sys, x, w)) {
                        ASSERT_TRUE(leq(sys, x, v));
                    }
                }
            }
        }
    }
}

TEST(MinRepsLeq, Examples) {
    const auto& sys = a3();
    const GenSet J = gens(sys, "s1,s2");
    EXPECT_EQ(min_reps_leq(sys, el(sys, "s1 s2 s3 s2 s1"), J),
              (std::vector<Element>{sys.identity(), el(sys, "s3"), el(sys, "s2 s3"), el(sys, "s1 s2 s3")}));
    for (const auto& K : all_subsets(sys))
        EXPECT_EQ(min_reps_leq(sys, sys.identity(), K), std::vector<Element>{sys.identity()});
    EXPECT_EQ(min_reps_leq(sys, el(sys, "s1 s2 s1"), J), std::vector<Element>{sys.identity()});
}

TEST(MinRepsLeq, EqualsImageOfCosetRep) {
    for (const auto& sys : {type_a(3), type_b(3), type_i2(kInfinity)}) {
        for (const auto& w : enumerate_elements(sys, 7)) {
            for (const auto& J : all_subsets(sys)) {
                std::set<Element> image;
                for (const auto& y : lower_interval(sys, w).members) image.insert(coset_rep(sys, y, J));
                const auto got = min_reps_leq(sys, w, J);
                ASSERT_TRUE(std::equal(got.begin(), got.end(), image.begin(), image.end()));
            }
        }
    }
}

TEST(Trichotomy, GeneratorActionOnMinReps) {
    for (const auto& sys : {type_a(3), type_b(3)}) {
        const auto all = enumerate_elements(sys, 64);
        for (const auto& J : all_subsets(sys)) {
            for (const auto& x : all) {
                if (!is_min_rep(sys, x, J)) continue;
                for (Gen s = 0; s < sys.rank(); ++s) {
                    const Element sx = sys.left_multiply(s, x);
                    if (sx.length() < x.length()) continue;
                    const bool in_quotient = is_min_rep(sys, sx, J);
                    const bool same_coset = coset_rep(sys, sx, J) == x;
                    ASSERT_NE(in_quotient, same_coset);
                }
            }
        }
    }
}

TEST(RelativeRep, Examples) {
    const auto& sys = a3();
    const GenSet K = gens(sys, "s1,s2");
    // w in W^K: trivial second factor.
    const auto [x0, y0] = relative_rep(sys, el(sys, "s1 s2 s3"), gens(sys, "s1"), K);
    EXPECT_EQ(x0, el(sys, "s1 s2 s3"));
    EXPECT_TRUE(y0.is_identity());
    // Expected values from enumerating every length-additive factorization.
    const auto [x1, y1] = relative_rep(sys, el(sys, "s2 s3"), GenSet{}, K);
    EXPECT_EQ(x1, el(sys, "s2 s3"));
    EXPECT_TRUE(y1.is_identity());
    const auto [x2, y2] = relative_rep(sys, el(sys, "s2 s3 s1 s2"), gens(sys, "s1"), K);
    EXPECT_EQ(x2, el(sys, "s2 s3"));
    EXPECT_EQ(y2, el(sys, "s1 s2"));
}

TEST(RelativeRep, AgreesWithFactorizationOracle) {
    const auto& sys = a3();
    const auto all = enumerate_elements(sys, 64);
    for (const auto& K : all_subsets(sys)) {
        for (const auto& J : all_subsets(sys)) {
            if (!J.is_subset_of(K)) continue;
            for (const auto& w : all) {
                if (!is_min_rep(sys, w, J)) continue;
                std::vector<std::pair<Element, Element>> found;
                for (const auto& x : all) {
                    if (!is_min_rep(sys, x, K)) continue;
                    const Element y = sys.multiply(sys.inverse(x), w);
                    if (in_parabolic(sys, y, K) && is_min_rep(sys, y, J) &&
                        x.length() + y.length() == w.length())
                        found.emplace_back(x, y);
                }
                ASSERT_EQ(found.size(), 1u);
                ASSERT_EQ(relative_rep(sys, w, J, K), found.front());
                if (J.empty()) {
                    ASSERT_EQ(found.front().first, decompose(sys, w, K).v);
                }
            }
        }
    }
}

TEST(RelativeRep, Errors) {
    const auto& sys = a3();
    EXPECT_EQ(kind_of([&] { relative_rep(sys, el(sys, "s1"), gens(sys, "s1,s3"), gens(sys, "s1")); }),
              ErrorKind::BadSubsetChain);
    EXPECT_EQ(kind_of([&] { relative_rep(sys, el(sys, "s2 s1"), gens(sys, "s1"), gens(sys, "s1,s2")); }),
              ErrorKind::NotMinimalRep);
}
