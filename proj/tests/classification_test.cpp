#include <gtest/gtest.h>

#include "infoflow/classification.hpp"
#include "test_support.hpp"

using namespace infoflow;
using infoflow::testing::table1;

TEST(Classification, RejectsBadShapes) {
    Classification::Matrix m(1, 1);
    m << true;
    EXPECT_THROW(Classification({}, {"x"}, Classification::Matrix(0, 1)), DomainError);
    EXPECT_THROW(Classification({"a", "a"}, {"x"}, Classification::Matrix::Zero(2, 1)), DomainError);
    EXPECT_THROW(Classification({"a"}, {"x", "y"}, m), FormatError);
}

TEST(TokenTypeSet, Table1Rows) {
    auto c = table1();
    EXPECT_EQ(token_type_set(c, "a"), (IdSet{"alpha", "delta"}));
    EXPECT_EQ(token_type_set(c, "b"), (IdSet{"beta", "delta"}));
    EXPECT_THROW(token_type_set(c, "zzz"), DomainError);
}

TEST(TokenTypeSet, EmptyRow) {
    Classification c({"x"}, {"t"}, Classification::Matrix::Zero(1, 1));
    EXPECT_TRUE(token_type_set(c, "x").empty());
}

TEST(MeetJoin, Table1) {
    auto c = table1();
    EXPECT_EQ(meet(c, {}), (IdSet{"a", "b", "c"}));
    EXPECT_TRUE(meet(c, {"alpha", "beta"}).empty());
    EXPECT_EQ(meet(c, {"alpha"}), IdSet{"a"});
    EXPECT_EQ(join(c, {"alpha", "beta"}), (IdSet{"a", "b", "c"}));
    EXPECT_TRUE(join(c, {}).empty());
    EXPECT_EQ(join(c, {"delta"}), (IdSet{"a", "b"}));
    EXPECT_THROW(meet(c, {"gamma"}), DomainError);
    EXPECT_THROW(join(c, {"gamma"}), DomainError);
}

TEST(Satisfies, Table1) {
    auto c = table1();
    EXPECT_TRUE(satisfies(c, "a", {{"alpha"}, {"delta"}}));
    EXPECT_TRUE(satisfies(c, "c", {{}, {"alpha", "beta"}}));
    // c lacks alpha: vacuous antecedent.
    EXPECT_TRUE(satisfies(c, "c", {{"alpha"}, {}}));
    EXPECT_FALSE(satisfies(c, "c", {{"beta"}, {"alpha"}}));
    EXPECT_THROW(satisfies(c, "d", {{}, {}}), DomainError);
    EXPECT_THROW(satisfies(c, "a", {{"gamma"}, {}}), DomainError);
}

TEST(IsConstraint, Table1Theory) {
    auto c = table1();
    for (const Sequent& s : {Sequent{{"alpha"}, {"delta"}}, Sequent{{}, {"alpha", "beta"}}, Sequent{{"alpha", "beta"}, {}}}) {
        EXPECT_TRUE(is_constraint(c, s)) << render_sequent(s);
        EXPECT_TRUE(is_constraint_by_tokens(c, s)) << render_sequent(s);
    }
    Sequent beta_alpha{{"beta"}, {"alpha"}};
    EXPECT_FALSE(is_constraint(c, beta_alpha));
    EXPECT_EQ(first_counterexample(c, beta_alpha), "b");
    EXPECT_FALSE(satisfies(c, "c", beta_alpha));
}

TEST(IsConstraint, EmptySequentNeverHolds) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        auto c = infoflow::testing::random_classification(rng, 4, 4);
        EXPECT_FALSE(is_constraint(c, {}));
    }
}

TEST(SequentLeq, Basics) {
    Sequent s1{{"alpha"}, {"delta"}}, s2{{"alpha", "beta"}, {"delta"}};
    EXPECT_TRUE(sequent_leq(s1, s2));
    EXPECT_TRUE(sequent_leq(s1, s1));
    EXPECT_FALSE(sequent_leq(Sequent{{"alpha", "beta"}, {}}, s1));
}

TEST(EnumerateTheory, Table1) {
    auto c = table1();
    auto th1 = enumerate_theory(c, 1);
    EXPECT_TRUE(th1.contains(Sequent{{"alpha"}, {"delta"}}));
    auto th2 = enumerate_theory(c, 2);
    EXPECT_TRUE(th2.contains(Sequent{{"alpha", "beta"}, {}}));
    EXPECT_TRUE(th2.contains(Sequent{{}, {"alpha", "beta"}}));
    EXPECT_FALSE(th2.contains(Sequent{{"beta"}, {"alpha"}}));
    // Clamped, not an error.
    EXPECT_EQ(enumerate_theory(c, 99), enumerate_theory(c, 3));
    for (const auto& s : th2) {
        EXPECT_LE(s.gamma.size(), 2u);
        EXPECT_LE(s.delta.size(), 2u);
    }
}

TEST(EnumerateTheory, SingleTrueCell) {
    Classification c({"x"}, {"t"}, Classification::Matrix::Ones(1, 1));
    EXPECT_TRUE(enumerate_theory(c, 1).contains(Sequent{{}, {"t"}}));
}

TEST(ComposeRelations, Examples) {
    BinaryRelation r({"x"}, {"y"}, {{"x", "y"}});
    BinaryRelation s({"y"}, {"z"}, {{"y", "z"}});
    EXPECT_EQ(compose_relations(r, s).pairs(), (std::set<BinaryRelation::Pair>{{"x", "z"}}));

    BinaryRelation empty({"x"}, {"y"}, {});
    EXPECT_TRUE(compose_relations(empty, s).pairs().empty());

    // Witness chains by hand: x→y1 has no continuation, x→y2→z does.
    BinaryRelation r2({"x"}, {"y1", "y2"}, {{"x", "y1"}, {"x", "y2"}});
    BinaryRelation s2({"y1", "y2"}, {"z"}, {{"y2", "z"}});
    EXPECT_EQ(compose_relations(r2, s2).pairs(), (std::set<BinaryRelation::Pair>{{"x", "z"}}));

    EXPECT_THROW(compose_relations(r, r), DomainError);
    EXPECT_THROW(BinaryRelation({"x"}, {"y"}, {{"x", "q"}}), DomainError);
}

namespace {

Infomorphism identity(const Classification& c) {
    Infomorphism f{c, c, {}, {}};
    for (const auto& t : c.types()) f.type_map[t] = t;
    for (const auto& t : c.tokens()) f.token_map[t] = t;
    return f;
}

// Direct double loop over the biconditional.
bool infomorphism_oracle(const Infomorphism& f) {
    for (std::size_t i = 0; i < f.target.tokens().size(); ++i)
        for (std::size_t j = 0; j < f.source.types().size(); ++j) {
            const auto& c = f.target.tokens()[i];
            const auto& alpha = f.source.types()[j];
            auto a = f.source.token_index(f.token_map.at(c));
            auto beta = f.target.type_index(f.type_map.at(alpha));
            if (f.source.incidence()(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(j)) !=
                f.target.incidence()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(beta)))
                return false;
        }
    return true;
}

} // namespace

TEST(Infomorphism, IdentityOnTable1) {
    auto f = identity(table1());
    EXPECT_TRUE(verify_infomorphism(f));
    EXPECT_TRUE(verify_prop1_inclusion(f));
}

TEST(Infomorphism, SwappedTypesFail) {
    auto f = identity(table1());
    f.type_map["alpha"] = "beta";
    f.type_map["beta"] = "alpha";
    EXPECT_FALSE(verify_infomorphism(f));
    auto cx = infomorphism_counterexample(f);
    ASSERT_TRUE(cx);
    EXPECT_EQ(*cx, (std::pair<Id, Id>{"a", "alpha"}));
    // comp contains (a, beta) which is not in ⊨.
    EXPECT_FALSE(verify_prop1_inclusion(f));
}

TEST(Infomorphism, OneCellTarget) {
    Classification target({"z"}, {"w"}, Classification::Matrix::Ones(1, 1));

    Classification all_true({"s"}, {"u", "v"}, Classification::Matrix::Ones(1, 2));
    Infomorphism good{all_true, target, {{"u", "w"}, {"v", "w"}}, {{"z", "s"}}};
    EXPECT_EQ(verify_infomorphism(good), infomorphism_oracle(good));
    EXPECT_TRUE(verify_infomorphism(good));

    Infomorphism bad{table1(), target, {{"alpha", "w"}, {"beta", "w"}, {"delta", "w"}}, {{"z", "a"}}};
    EXPECT_EQ(verify_infomorphism(bad), infomorphism_oracle(bad));
    EXPECT_FALSE(verify_infomorphism(bad));
}

TEST(Infomorphism, PartialMapsAreReported) {
    auto f = identity(table1());
    f.type_map.erase("delta");
    f.token_map["c"] = "nobody";
    auto missing = missing_map_entries(f);
    EXPECT_EQ(missing.size(), 2u);
    EXPECT_THROW(verify_infomorphism(f), DomainError);
}

TEST(Infomorphism, OracleAgreesOnRandomMaps) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        auto a = infoflow::testing::random_classification(rng, 3, 3);
        auto c = infoflow::testing::random_classification(rng, 3, 3);
        Infomorphism f{a, c, {}, {}};
        for (const auto& t : a.types())
            f.type_map[t] = c.types()[std::uniform_int_distribution<std::size_t>(0, c.types().size() - 1)(rng)];
        for (const auto& t : c.tokens())
            f.token_map[t] = a.tokens()[std::uniform_int_distribution<std::size_t>(0, a.tokens().size() - 1)(rng)];
        EXPECT_EQ(verify_infomorphism(f), infomorphism_oracle(f));
    }
}
