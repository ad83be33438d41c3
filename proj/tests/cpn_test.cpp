#include <gtest/gtest.h>

#include "infoflow/cpn.hpp"
#include "test_support.hpp"

using namespace infoflow;
using infoflow::testing::example_net;
using infoflow::testing::fixture;

namespace {

Marking marking_csv(const Net& n, const std::string& name) {
    return marking_from(n, parse_classification_csv(read_file(fixture(name))));
}

std::vector<Binding> singles(const Id& var, std::initializer_list<Id> colors) {
    std::vector<Binding> out;
    for (const auto& c : colors) out.push_back({{var, c}});
    return out;
}

ParseError parse_error_of(const std::string& text) {
    try {
        parse_net(text);
    } catch (const ParseError& e) {
        return e;
    }
    ADD_FAILURE() << "no parse error for:\n" << text;
    return ParseError(0, "");
}

} // namespace

TEST(Net, ParsesExample) {
    auto n = example_net();
    EXPECT_EQ(n.places(), (IdList{"p1", "p2", "p3"}));
    EXPECT_EQ(n.colors(), (IdList{"alpha", "beta", "gamma"}));
    EXPECT_EQ(n.transitions().size(), 4u);
    EXPECT_EQ(n.initial_marking(), marking_csv(n, "table5.csv"));
    EXPECT_EQ(to_string(n, n.initial_marking()), "p1{alpha, gamma} p2{beta, gamma} p3{beta}");
}

TEST(EnabledBindings, Examples) {
    auto n = example_net();
    const auto& m0 = n.initial_marking();
    EXPECT_EQ(enabled_bindings(n, m0, "a"), singles("h", {"beta", "gamma"}));
    EXPECT_EQ(enabled_bindings(n, m0, "b"), singles("g", {"alpha", "gamma"}));
    EXPECT_EQ(enabled_bindings(n, m0, "d"), singles("k", {"beta"}));
    EXPECT_THROW(enabled_bindings(n, m0, "zz"), DomainError);

    auto cap = example_net(CapacityMode::one_per_type);
    EXPECT_EQ(enabled_bindings(cap, m0, "a"), singles("h", {"beta"}));
    EXPECT_TRUE(enabled_bindings(cap, m0, "d").empty());
}

TEST(Fire, MatchesNextMarking) {
    auto n = example_net();
    auto m1 = fire(n, n.initial_marking(), "a", {{"h", "beta"}});
    EXPECT_EQ(m1, marking_csv(n, "table6.csv"));
    EXPECT_EQ(fire(n, m1, "b", {{"g", "beta"}}), n.initial_marking());
}

TEST(Fire, RejectsDisabledOrMalformedBindings) {
    auto n = example_net();
    const auto& m0 = n.initial_marking();
    EXPECT_THROW(fire(n, m0, "a", {{"h", "alpha"}}), PreconditionError);
    EXPECT_THROW(fire(n, m0, "a", {}), PreconditionError);
    EXPECT_THROW(fire(n, m0, "a", {{"h", "beta"}, {"q", "beta"}}), PreconditionError);
    auto cap = example_net(CapacityMode::one_per_type);
    EXPECT_THROW(fire(cap, m0, "a", {{"h", "gamma"}}), PreconditionError);
}

TEST(Fire, ConstantsGuardsAndMultiplicities) {
    auto n = parse_net(R"(colors x y
place p init 2*x y
place q
trans t guard v != y
  in p : 2*v
  out q : v, y
trans idle
)");
    const auto& m0 = n.initial_marking();
    EXPECT_EQ(enabled_bindings(n, m0, "t"), singles("v", {"x"}));
    auto m1 = fire(n, m0, "t", {{"v", "x"}});
    EXPECT_EQ(to_string(n, m1), "p{y} q{x, y}");
    // No inputs, no outputs: enabled once with the empty binding, a self-loop.
    ASSERT_EQ(enabled_bindings(n, m0, "idle").size(), 1u);
    EXPECT_EQ(fire(n, m0, "idle", {}), m0);
}

TEST(ParseNet, ErrorsCarryLineNumbers) {
    EXPECT_EQ(parse_error_of("colors x\nplace p init z\n").line, 2u);
    EXPECT_EQ(parse_error_of("colors x\nplace p\nplace p\n").line, 3u);
    EXPECT_EQ(parse_error_of("colors x\nplace p\ntrans t\n  in r : v\n").line, 4u);
    EXPECT_EQ(parse_error_of("colors x\nplace p\ntrans t\n  in p : v\n  out p : w\n").line, 5u);
    EXPECT_EQ(parse_error_of("colors x\nplace p\ntrans t guard w = x\n  in p : v\n").line, 3u);
    EXPECT_EQ(parse_error_of("colors x\nbogus\n").line, 2u);
    EXPECT_EQ(parse_error_of("colors x x\n").line, 1u);
    parse_error_of("place p\n");
    parse_error_of("colors x\n");
}

TEST(Net, MarkingClassificationRoundTrip) {
    auto n = example_net();
    auto mc = to_multiclassification(n, n.initial_marking());
    EXPECT_EQ(mc.tokens(), n.places());
    EXPECT_EQ(mc.types(), n.colors());
    EXPECT_EQ(marking_from(n, mc), n.initial_marking());
    EXPECT_EQ(place_multiset(n, n.initial_marking(), "p1"), Multiset::from_pairs({{"alpha", 1}, {"gamma", 1}}));
}

TEST(FireProperty, ConservesTokensAndCapacity) {
    std::mt19937_64 rng(31);
    for (auto mode : {CapacityMode::unbounded, CapacityMode::one_per_type}) {
        auto n = example_net(mode);
        for (int walk = 0; walk < 50; ++walk) {
            auto m = n.initial_marking();
            for (int step = 0; step < 30; ++step) {
                std::vector<std::pair<std::size_t, Binding>> options;
                for (std::size_t t = 0; t < n.transitions().size(); ++t)
                    for (auto& b : enabled_bindings(n, m, t)) options.emplace_back(t, b);
                if (options.empty()) break;
                auto& [t, b] = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
                auto next = fire(n, m, t, b);
                // Every transition moves one token: per-color totals are invariant.
                EXPECT_EQ(next.counts().colwise().sum(), m.counts().colwise().sum());
                if (mode == CapacityMode::one_per_type) EXPECT_TRUE(next.respects_capacity_one());
                m = next;
            }
        }
    }
}
