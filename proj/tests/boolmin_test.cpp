#include <gtest/gtest.h>

#include <sstream>

#include "infoflow/boolmin.hpp"
#include "test_support.hpp"

using namespace infoflow;
using infoflow::testing::exact_for;
using infoflow::testing::min_term_count_bruteforce;

namespace {

TruthTable table_of(IdList vars, std::vector<Row> on, std::vector<Row> dc = {}) {
    return TruthTable{std::move(vars), {on.begin(), on.end()}, {dc.begin(), dc.end()}};
}

} // namespace

TEST(Minimize, Table1) {
    auto t = table_from_classification(infoflow::testing::table1());
    EXPECT_EQ(t.variables, (IdList{"alpha", "beta", "delta"}));
    EXPECT_EQ(t.minterms, (std::set<Row>{{1, 0, 1}, {0, 1, 1}, {0, 1, 0}}));
    auto f = minimize(t);
    EXPECT_TRUE(semantically_equal(f, infoflow::testing::table1_formula(), t.variables));
    EXPECT_EQ(f.terms().size(), 2u);
    EXPECT_EQ(f.literal_count(), 5u);
    EXPECT_EQ(to_string(f), "(~alpha & beta) | (alpha & ~beta & delta)");
}

TEST(Minimize, TruthTableMatchesReference) {
    // Rows of the reference table: A, α, β, δ, ¬α, ¬β, β∧¬α, ¬β∧α∧δ, result.
    const std::vector<std::vector<int>> reference{
        {0, 1, 1, 1, 0, 0, 0, 0, 0}, {0, 1, 1, 0, 0, 0, 0, 0, 0}, {1, 1, 0, 1, 0, 1, 0, 1, 1},
        {0, 1, 0, 0, 0, 1, 0, 0, 0}, {1, 0, 1, 1, 1, 0, 1, 0, 1}, {1, 0, 1, 0, 1, 0, 1, 0, 1},
        {0, 0, 0, 1, 1, 1, 0, 0, 0}, {0, 0, 0, 0, 1, 1, 0, 0, 0}};
    auto t = table_from_classification(infoflow::testing::table1());
    std::ostringstream os;
    write_truth_table(os, t, minimize(t));
    std::istringstream in(os.str());
    std::string line;
    std::getline(in, line); // header
    std::getline(in, line); // rule
    std::vector<std::vector<int>> got;
    while (std::getline(in, line)) {
        std::vector<int> row;
        for (char ch : line)
            if (ch == '0' || ch == '1') row.push_back(ch - '0');
        got.push_back(row);
    }
    EXPECT_EQ(got, reference);
}

TEST(Minimize, SmallCases) {
    EXPECT_EQ(to_string(minimize(table_of({"x", "y"}, {{1, 0}, {1, 1}}))), "x");
    EXPECT_EQ(to_string(minimize(table_of({"x"}, {{0}, {1}}))), "True");
    EXPECT_EQ(to_string(minimize(table_of({"x", "y"}, {}))), "False");
    EXPECT_EQ(to_string(minimize(table_of({"x", "y"}, {{0, 0}}))), "~x & ~y");
    // A don't-care widens the cube.
    EXPECT_EQ(to_string(minimize(table_of({"x", "y"}, {{1, 1}}, {{1, 0}}))), "x");
}

TEST(Minimize, RejectsBadTables) {
    EXPECT_THROW(minimize(table_of({"x", "y"}, {{1}})), FormatError);
    EXPECT_THROW(minimize(table_of({"x"}, {{1}}, {{1}})), FormatError);
}

TEST(Minimize, GreedyAboveLimitStaysExact) {
    std::mt19937_64 rng(19);
    auto t = infoflow::testing::random_table(rng, 8, 0.4, 0.1);
    auto r = minimize_detailed(t, {4, 1000});
    EXPECT_TRUE(exact_for(r.formula, t));
}

TEST(Minimize, DeterministicAcrossRuns) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 20; ++i) {
        auto t = infoflow::testing::random_table(rng, 5, 0.5, 0.1);
        EXPECT_EQ(minimize(t), minimize(t));
    }
}

TEST(MinimizeProperty, ExactAndMinimalAgainstBruteForce) {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 200; ++i) {
        std::size_t n = 1 + i % 4;
        auto t = infoflow::testing::random_table(rng, n, 0.45, i % 3 == 0 ? 0.2 : 0.0);
        auto r = minimize_detailed(t);
        ASSERT_TRUE(exact_for(r.formula, t));
        EXPECT_TRUE(r.proven_minimal);
        if (t.minterms.empty())
            EXPECT_TRUE(r.formula.terms().empty());
        else
            EXPECT_EQ(r.formula.terms().size(), min_term_count_bruteforce(t));
    }
}

TEST(DnfFormula, CanonicalAndRendering) {
    IdList v{"a", "b", "c"};
    auto f = DnfFormula::from_names(v, {{"c", "~a"}, {"b"}, {"b"}});
    EXPECT_EQ(f.terms().size(), 2u);
    EXPECT_EQ(to_string(f), "(~a & c) | b");
    EXPECT_EQ(f.used_variables(), (IdList{"a", "b", "c"}));
    EXPECT_EQ(to_string(DnfFormula::constant(true, v)), "True");
    EXPECT_EQ(to_string(DnfFormula::constant(false)), "False");
    EXPECT_THROW(DnfFormula::from_names(v, {{"d"}}), DomainError);
}

TEST(Evaluate, Basics) {
    auto f = infoflow::testing::table1_formula();
    EXPECT_TRUE(evaluate(f, {{"alpha", false}, {"beta", true}, {"delta", false}}));
    EXPECT_FALSE(evaluate(f, {{"alpha", true}, {"beta", true}, {"delta", true}}));
    EXPECT_THROW(evaluate(f, {{"alpha", true}}), DomainError);
    EXPECT_TRUE(evaluate_row(f, {1, 0, 1}));
}

TEST(SemanticEquality, DifferentVariableOrders) {
    auto f = infoflow::testing::table1_formula();
    auto g = DnfFormula::from_names({"delta", "beta", "alpha"}, {{"~alpha", "beta"}, {"alpha", "~beta", "delta"}});
    EXPECT_TRUE(semantically_equal(f, g, {"alpha", "beta", "delta"}));
    EXPECT_FALSE(semantically_equal(f, DnfFormula::constant(true), {"alpha", "beta", "delta"}));
    EXPECT_THROW(truth_vector(f, {"alpha"}), DomainError);
    IdList many;
    for (int i = 0; i < 25; ++i) many.push_back("v" + std::to_string(i));
    EXPECT_THROW(truth_vector(DnfFormula::constant(true), many), ResourceError);
}

TEST(Rows, IndexRoundTrip) {
    for (std::uint64_t x = 0; x < 16; ++x) EXPECT_EQ(row_index(row_from_index(x, 4)), x);
    EXPECT_EQ(row_from_index(4, 3), (Row{1, 0, 0}));
}

TEST(Minimize, BudgetExhaustionKeepsExactness) {
    std::mt19937_64 rng(5);
    auto t = infoflow::testing::random_table(rng, 10, 0.5, 0.1);
    auto r = minimize_detailed(t, {20, 1});
    EXPECT_FALSE(r.proven_minimal);
    EXPECT_TRUE(exact_for(r.formula, t));
    auto full = minimize_detailed(t);
    EXPECT_LE(full.formula.terms().size(), r.formula.terms().size());
}

TEST(Minimize, IndependentBlocksCombine) {
    // Two disjoint cyclic blocks over (x0..x2) and (x3..x5) style rows.
    TruthTable t;
    for (int i = 0; i < 6; ++i) t.variables.push_back("x" + std::to_string(i));
    const std::vector<Row> cyclic{{0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, 0, 0}, {1, 0, 1}, {1, 1, 0}};
    for (const auto& r : cyclic) {
        Row a = r, b{0, 0, 0};
        a.insert(a.end(), b.begin(), b.end());
        Row c{0, 0, 0};
        c.insert(c.end(), r.begin(), r.end());
        t.minterms.insert(a);
        t.minterms.insert(c);
    }
    auto r = minimize_detailed(t);
    EXPECT_TRUE(exact_for(r.formula, t));
    EXPECT_TRUE(r.proven_minimal);
    EXPECT_EQ(r.formula.terms().size(), min_term_count_bruteforce(t));
}
