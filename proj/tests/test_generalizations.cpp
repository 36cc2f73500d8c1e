#include "canon/canon.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace canon;

namespace {
std::set<std::vector<int>> as_set(const std::vector<Multipermutation>& ws) {
    std::set<std::vector<int>> s;
    for (const auto& w : ws) s.insert(w.entries());
    return s;
}

template <class Pred>
std::set<std::vector<int>> oracle_set(int n, int k, Pred pred) {
    std::set<std::vector<int>> s;
    for (const auto& w : oracle::multiset_words(n, k))
        if (pred(w)) s.insert(w);
    return s;
}

bool oracle_in_A(const oracle::Word& w) {
    return !oracle::contains_pattern(w, {1, 2, 2, 1}) && !oracle::contains_pattern(w, {2, 1, 1, 2});
}
} // namespace

TEST(Multiset, EnumerationMatchesOracle) {
    EXPECT_EQ(all_multiperms(2, 2).size(), 6u);
    EXPECT_EQ(as_set(all_multiperms(3, 2)), oracle_set(3, 2, [](const auto&) { return true; }));
    EXPECT_THROW(all_multiperms(6, 3, 1000), cap_exceeded);
}

TEST(FamilyA, SmallSets) {
    std::vector<std::string> got;
    for (const auto& w : enumerate_A(2, 3)) got.push_back(format_word(w));
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, (std::vector<std::string>{"111222", "112122", "221211", "222111"}));
}

TEST(FamilyA, MembershipMatchesOracle) {
    for (int k = 2; k <= 3; ++k)
        for (int n = 1; n <= 3; ++n)
            for (const auto& e : oracle::multiset_words(n, k)) {
                const Multipermutation w(e, k);
                ASSERT_EQ(is_in_A(w), oracle_in_A(e)) << format_word(w);
                ASSERT_EQ(is_in_A_fast(w), is_in_A(w)) << format_word(w);
            }
}

TEST(FamilyA, EnumerationMatchesOracle) {
    for (int k = 2; k <= 4; ++k)
        for (int n = 1; n <= (k == 4 ? 3 : 4); ++n)
            EXPECT_EQ(as_set(enumerate_A(n, k)), oracle_set(n, k, oracle_in_A)) << n << "," << k;
}

TEST(FamilyA, ClosedFormAndCount) {
    for (int k = 3; k <= 4; ++k)
        for (int n = 1; n <= 4; ++n) {
            EXPECT_EQ(a_poly(n, k), a_closed(n, k)) << n << "," << k;
            EXPECT_EQ(bigint(enumerate_A(n, k).size()), a_count_formula(n));
        }
    EXPECT_EQ(a_poly(3, 3), oracle::filtered_distribution(3, 3, oracle_in_A));
    EXPECT_THROW(a_closed(3, 2), domain_error);
    EXPECT_THROW(a_closed(0, 3), domain_error);
}

TEST(FamilyA, OverrunRoundTrip) {
    for (int k = 3; k <= 4; ++k)
        for (int n = 1; n <= 4; ++n) {
            std::set<std::vector<int>> built;
            for_each_A(n, k, [&](const Multipermutation& w) {
                const OverrunDecomposition d = overrun_decompose(w);
                ASSERT_EQ(overrun_build(d.sigma, d.overruns, k), w) << format_word(w);
                built.insert(w.entries());
            });
            EXPECT_EQ(bigint(built.size()), a_count_formula(n));
        }
    EXPECT_THROW(overrun_build(Permutation::identity(3), {3}, 3), domain_error);
    EXPECT_THROW(overrun_build(Permutation::identity(3), {}, 2), domain_error);
}

TEST(FamilyB, MembershipAndEnumerationMatchOracle) {
    for (int k = 1; k <= 4; ++k)
        for (int n = 1; n <= (k >= 4 ? 3 : 4); ++n) {
            EXPECT_EQ(as_set(enumerate_B(n, k)), oracle_set(n, k, oracle::block_nonnesting)) << n << "," << k;
            EXPECT_EQ(b_count(n, k), b_count_formula(n, k)) << n << "," << k;
        }
    for (const auto& e : oracle::multiset_words(3, 3)) {
        const Multipermutation w(e, 3);
        ASSERT_EQ(is_in_B(w), oracle::block_nonnesting(e));
    }
    EXPECT_EQ(b_count_formula(5, 1), factorial(5));
}

TEST(FamilyB, NotSymmetric) {
    const BivariatePoly p = b_poly(4, 3).at_u1();
    EXPECT_FALSE(p.is_palindromic_in_t(p.min_degree_t() + p.degree_t()));
}

TEST(FamilyC, MembershipAndEnumerationMatchOracle) {
    for (int k = 1; k <= 4; ++k)
        for (int n = 1; n <= (k >= 4 ? 3 : 4); ++n) {
            const auto expect = oracle_set(n, k, [k](const oracle::Word& w) { return oracle::canon(w, k); });
            EXPECT_EQ(as_set(enumerate_canon(n, k)), expect) << n << "," << k;
        }
    for (const auto& e : oracle::multiset_words(3, 3)) {
        const Multipermutation w(e, 3);
        ASSERT_EQ(is_canon(w), oracle::canon(e, 3));
    }
}

TEST(FamilyC, ClassPolynomials) {
    const BivariatePoly base = BivariatePoly::u(4) + BivariatePoly::monomial(3, 1, 2) + BivariatePoly::t(2);
    EXPECT_EQ(c_k_class_poly(parse_permutation("12"), 3), base);
    EXPECT_EQ(c_k_class_poly(parse_permutation("21"), 3), BivariatePoly::t() * base);
    for (int n = 1; n <= 3; ++n)
        for_each_permutation(n, [&](const Permutation& s) {
            EXPECT_EQ(c_k_class_poly(s, 3), BivariatePoly::t(des(s)) * c_k_class_poly(Permutation::identity(n), 3));
        });
}

TEST(Coincidences, SmallK) {
    for (int n = 1; n <= 4; ++n) {
        // k = 1: every family is all of S_n
        EXPECT_EQ(enumerate_canon(n, 1).size(), oracle::permutations(n).size());
        EXPECT_EQ(b_poly(n, 1), eulerian(n));
        // k = 2: B and C are both the nonnesting words
        EXPECT_EQ(b_poly(n, 2), nonnesting_distribution(n));
        EXPECT_EQ(c_k_poly(n, 2), nonnesting_distribution(n));
    }
}

TEST(Inclusions, ANestedInBNestedInC) {
    for (int k = 3; k <= 4; ++k)
        for (int n = 1; n <= 3; ++n) {
            const auto A = as_set(enumerate_A(n, k)), B = as_set(enumerate_B(n, k)), C = as_set(enumerate_canon(n, k));
            EXPECT_TRUE(std::includes(B.begin(), B.end(), A.begin(), A.end()));
            EXPECT_TRUE(std::includes(C.begin(), C.end(), B.begin(), B.end()));
        }
}

TEST(Caps, EnumerationsRespectCap) {
    EXPECT_THROW(enumerate_A(5, 3, 10), cap_exceeded);
    EXPECT_THROW(enumerate_B(4, 3, 10), cap_exceeded);
    EXPECT_THROW(enumerate_canon(4, 3, 10), cap_exceeded);
    EXPECT_NO_THROW(enumerate_A(2, 3, 4));
}
