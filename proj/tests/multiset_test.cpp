#include <gtest/gtest.h>

#include <limits>

#include "infoflow/multiset.hpp"
#include "test_support.hpp"

using namespace infoflow;

TEST(Multiset, RejectsDuplicateDomain) {
    EXPECT_THROW(Multiset({"a", "a"}, std::vector<Count>{1, 2}), DomainError);
    EXPECT_THROW(Multiset({"a"}, std::vector<Count>{1, 2}), FormatError);
}

TEST(Multiset, CountAndSupport) {
    auto m = Multiset::from_pairs({{"a", 2}, {"b", 0}, {"c", 1}});
    EXPECT_EQ(m.count("a"), 2u);
    EXPECT_EQ(m.count("b"), 0u);
    EXPECT_EQ(m.count("zzz"), 0u);
    EXPECT_EQ(m.support(), (IdList{"a", "c"}));
}

TEST(Multiset, EqualityIgnoresZeroPadding) {
    EXPECT_EQ(Multiset::from_pairs({{"a", 1}, {"b", 0}}), Multiset::from_pairs({{"a", 1}}));
    EXPECT_EQ(Multiset::empty({"x", "y"}), Multiset::empty());
    EXPECT_NE(Multiset::from_pairs({{"a", 1}}), Multiset::from_pairs({{"a", 2}}));
}

TEST(Multiset, UnionIntersection) {
    auto m1 = Multiset::from_pairs({{"a", 3}, {"b", 2}});
    auto m2 = Multiset::from_pairs({{"a", 1}, {"c", 5}});
    EXPECT_EQ(mset_union(m1, m2), Multiset::from_pairs({{"a", 3}, {"b", 2}, {"c", 5}}));
    EXPECT_EQ(mset_intersection(m1, m2), Multiset::from_pairs({{"a", 1}}));
    EXPECT_TRUE(mset_is_empty(mset_intersection(Multiset::from_pairs({{"b", 2}}), m2)));
}

TEST(Multiset, Leq) {
    auto m1 = Multiset::from_pairs({{"a", 1}});
    auto m2 = Multiset::from_pairs({{"a", 2}, {"b", 1}});
    EXPECT_TRUE(mset_leq(m1, m2));
    EXPECT_FALSE(mset_leq(m2, m1));
    EXPECT_TRUE(mset_leq(Multiset::empty(), m1));
}

TEST(Multiset, Rendering) {
    EXPECT_EQ(to_string(Multiset::from_pairs({{"alpha", 3}, {"beta", 2}, {"gamma", 1}})), "{3*alpha, 2*beta, gamma}");
    EXPECT_EQ(to_string(Multiset::empty({"a"})), "{}");
}

TEST(Multiset, Aligned) {
    auto m = Multiset::from_pairs({{"b", 2}});
    auto v = m.aligned({"a", "b"});
    EXPECT_EQ(v(0), 0u);
    EXPECT_EQ(v(1), 2u);
    EXPECT_THROW(m.aligned({"a"}), DomainError);
}

TEST(Multiset, OverflowIsChecked) {
    const Count big = std::numeric_limits<Count>::max();
    EXPECT_THROW(checked_add(big, 1), std::overflow_error);
    EXPECT_THROW(checked_mul(big, 2), std::overflow_error);
    EXPECT_EQ(checked_mul(big, 1), big);
    EXPECT_EQ(checked_add(2, 3), 5u);
}

TEST(MultisetProperty, UnionAndIntersectionAreBounds) {
    std::mt19937_64 rng(3);
    const IdList dom{"a", "b", "c", "d"};
    for (int i = 0; i < 500; ++i) {
        auto m1 = infoflow::testing::random_multiset(rng, dom);
        auto m2 = infoflow::testing::random_multiset(rng, {"c", "d", "e"});
        auto u = mset_union(m1, m2), n = mset_intersection(m1, m2);
        EXPECT_TRUE(mset_leq(m1, u) && mset_leq(m2, u));
        EXPECT_TRUE(mset_leq(n, m1) && mset_leq(n, m2));
        for (const auto& id : united_domain(m1.domain(), m2.domain())) {
            EXPECT_EQ(u.count(id), std::max(m1.count(id), m2.count(id)));
            EXPECT_EQ(n.count(id), std::min(m1.count(id), m2.count(id)));
        }
    }
}
