#include <gtest/gtest.h>

#include <random>

#include "coxbruhat/bruhat.hpp"
#include "coxbruhat/oracle.hpp"
#include "test_support.hpp"

using namespace coxbruhat;
using coxbruhat::testing::el;
using coxbruhat::testing::gens;

namespace {

const CoxeterSystem& a3() {
    static const CoxeterSystem sys = type_a(3);
    return sys;
}

} // namespace

TEST(BruteInterval, Examples) {
    const auto& sys = a3();
    EXPECT_EQ(oracle::brute_interval(sys, sys.identity()), std::vector<Element>{sys.identity()});
    EXPECT_EQ(oracle::brute_interval(sys, el(sys, "s1 s2 s3 s2 s1")).size(), 20u);
    EXPECT_EQ(oracle::brute_interval(sys, el(sys, "s1 s2 s1")).size(), 6u);
    EXPECT_THROW(oracle::brute_interval(sys, el(sys, "s1 s2 s1"), 2), CoxeterError);
}

TEST(BruteInterval, AgreesWithEngineOnSampledGroups) {
    std::mt19937 rng(5);
    for (const auto& sys : {type_a(4), type_h(3), type_i2(kInfinity), type_affine_a(2)}) {
        const auto ball = enumerate_elements(sys, 9);
        std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
        for (int i = 0; i < 40; ++i) {
            const Element& w = ball[pick(rng)];
            ASSERT_EQ(oracle::brute_interval(sys, w), lower_interval(sys, w).members) << sys.format(w);
        }
    }
}

TEST(BruteCosetMax, Examples) {
    const auto& sys = a3();
    const Element w = el(sys, "s1 s2 s3 s2 s1");
    EXPECT_EQ(oracle::brute_coset_max(sys, w, el(sys, "s2 s3"), gens(sys, "s1,s2")), el(sys, "s2 s3 s2 s1"));
    EXPECT_TRUE(oracle::brute_coset_max(sys, w, sys.identity(), GenSet{}).is_identity());
    const CoxeterSystem s5 = type_a(4);
    EXPECT_EQ(oracle::brute_coset_max(s5, el(s5, "s3 s1 s2 s4 s3 s2 s1"), el(s5, "s4 s3"), gens(s5, "s1,s2,s4")),
              el(s5, "s3 s1 s4 s3 s2 s1"));
    try {
        oracle::brute_coset_max(sys, w, el(sys, "s2 s1"), gens(sys, "s1"));
        FAIL() << "expected NotMinimalRep";
    } catch (const CoxeterError& ex) {
        EXPECT_EQ(ex.kind(), ErrorKind::NotMinimalRep);
    }
}

TEST(BraidEqual, Examples) {
    const auto& sys = a3();
    EXPECT_TRUE(oracle::braid_equal(sys, sys.parse_word("s3 s2 s3 s1"), sys.parse_word("s2 s3 s2 s1")));
    EXPECT_TRUE(oracle::braid_equal(sys, sys.parse_word("s1 s3"), sys.parse_word("s3 s1")));
    EXPECT_TRUE(oracle::braid_equal(sys, sys.parse_word("s1 s3 s1 s3"), Word{}));
    EXPECT_FALSE(oracle::braid_equal(sys, sys.parse_word("s1"), sys.parse_word("s2")));
    EXPECT_FALSE(oracle::braid_equal(sys, sys.parse_word("s1 s2"), sys.parse_word("s2 s1")));
}

TEST(BraidEqual, BudgetExhaustion) {
    const CoxeterSystem sys = type_a(5);
    const Word longest = sys.parse_word("s1 s2 s1 s3 s2 s1 s4 s3 s2 s1");
    try {
        oracle::braid_reduce(sys, longest, 3);
        FAIL() << "expected SearchBudgetExceeded";
    } catch (const CoxeterError& ex) {
        EXPECT_EQ(ex.kind(), ErrorKind::SearchBudgetExceeded);
    }
}

TEST(BraidReduce, InfiniteDihedral) {
    const CoxeterSystem sys = type_i2(kInfinity);
    EXPECT_EQ(oracle::braid_reduce(sys, Word{0, 1, 1, 0, 1}), (Word{1}));
    EXPECT_FALSE(oracle::braid_equal(sys, Word{0, 1, 0}, Word{1, 0, 1}));
    const CoxeterSystem i3 = type_i2(3);
    EXPECT_TRUE(oracle::braid_equal(i3, Word{0, 1, 0}, Word{1, 0, 1}));
}

TEST(IntervalProductOracle, Examples) {
    const auto& sys = a3();
    EXPECT_TRUE(oracle::verify_interval_product(sys, el(sys, "s1 s2 s3"), el(sys, "s2 s1")));
    EXPECT_EQ(sys.demazure_star(el(sys, "s2 s3"), el(sys, "s1")), el(sys, "s2 s3 s1"));
    EXPECT_TRUE(oracle::verify_interval_product(sys, sys.identity(), el(sys, "s2 s1")));
    const auto all = enumerate_elements(sys, 6);
    for (const auto& w : all) {
        for (const auto& u : all) {
            if (w.length() + u.length() <= 6) {
                ASSERT_TRUE(oracle::verify_interval_product(sys, w, u));
            }
        }
    }
}

TEST(SweepReport, CountsTriples) {
    const auto& sys = a3();
    const auto report = oracle::sweep_coset_max(sys, {el(sys, "s1 s2 s3 s2 s1")});
    EXPECT_TRUE(report.ok());
    // Sum over the 8 subsets J of |[e,w] cap W^J|.
    std::size_t expected = 0;
    for (const auto& J : coxbruhat::testing::all_subsets(sys)) {
        for (const auto& y : lower_interval(sys, el(sys, "s1 s2 s3 s2 s1")).members) {
            bool min = true;
            for (Gen s : J.members()) min = min && !sys.is_right_descent(y, s);
            expected += min;
        }
    }
    EXPECT_EQ(report.triples, expected);
}
