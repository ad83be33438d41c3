#include "infoflow/classification.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace infoflow {

namespace detail {

void check_identifiers(const IdList& ids, const char* what) {
    if (ids.empty()) throw DomainError(std::string(what) + " list is empty");
    IdSet seen;
    for (const auto& id : ids) {
        if (id.empty()) throw DomainError(std::string("empty ") + what + " identifier");
        if (!seen.insert(id).second) throw DomainError(std::string("duplicate ") + what + " '" + id + "'");
    }
}

std::size_t index_of(const IdList& ids, const Id& id, const char* what) {
    auto it = std::find(ids.begin(), ids.end(), id);
    if (it == ids.end()) throw DomainError(std::string("unknown ") + what + " '" + id + "'");
    return static_cast<std::size_t>(it - ids.begin());
}

} // namespace detail

namespace {

std::vector<Eigen::Index> type_columns(const Classification& c, const IdSet& types) {
    std::vector<Eigen::Index> cols;
    cols.reserve(types.size());
    for (const auto& t : types) cols.push_back(static_cast<Eigen::Index>(c.type_index(t)));
    return cols;
}

IdSet tokens_where(const Classification& c, const Eigen::Array<bool, Eigen::Dynamic, 1>& mask) {
    IdSet out;
    for (Eigen::Index i = 0; i < mask.size(); ++i)
        if (mask(i)) out.insert(c.tokens()[static_cast<std::size_t>(i)]);
    return out;
}

void check_sequent(const Classification& c, const Sequent& s) {
    for (const auto& t : s.gamma) c.type_index(t);
    for (const auto& t : s.delta) c.type_index(t);
}

bool row_satisfies(const Classification& c, Eigen::Index row, const std::vector<Eigen::Index>& gamma,
                   const std::vector<Eigen::Index>& delta) {
    const auto& m = c.incidence();
    bool all_gamma = std::all_of(gamma.begin(), gamma.end(), [&](auto j) { return m(row, j); });
    if (!all_gamma) return true;
    return std::any_of(delta.begin(), delta.end(), [&](auto j) { return m(row, j); });
}

} // namespace

IdSet token_type_set(const Classification& c, const Id& token) {
    auto row = static_cast<Eigen::Index>(c.token_index(token));
    IdSet out;
    for (Eigen::Index j = 0; j < c.incidence().cols(); ++j)
        if (c.incidence()(row, j)) out.insert(c.types()[static_cast<std::size_t>(j)]);
    return out;
}

IdSet meet(const Classification& c, const IdSet& gamma) {
    auto cols = type_columns(c, gamma);
    if (cols.empty()) return IdSet(c.tokens().begin(), c.tokens().end());
    Eigen::Array<bool, Eigen::Dynamic, 1> mask = c.incidence()(Eigen::all, cols).rowwise().all();
    return tokens_where(c, mask);
}

IdSet join(const Classification& c, const IdSet& delta) {
    auto cols = type_columns(c, delta);
    if (cols.empty()) return {};
    Eigen::Array<bool, Eigen::Dynamic, 1> mask = c.incidence()(Eigen::all, cols).rowwise().any();
    return tokens_where(c, mask);
}

bool satisfies(const Classification& c, const Id& token, const Sequent& s) {
    auto row = static_cast<Eigen::Index>(c.token_index(token));
    check_sequent(c, s);
    return row_satisfies(c, row, type_columns(c, s.gamma), type_columns(c, s.delta));
}

bool is_constraint(const Classification& c, const Sequent& s) {
    check_sequent(c, s);
    auto lhs = meet(c, s.gamma);
    auto rhs = join(c, s.delta);
    return std::includes(rhs.begin(), rhs.end(), lhs.begin(), lhs.end());
}

bool is_constraint_by_tokens(const Classification& c, const Sequent& s) {
    return !first_counterexample(c, s).has_value();
}

std::optional<Id> first_counterexample(const Classification& c, const Sequent& s) {
    check_sequent(c, s);
    auto gamma = type_columns(c, s.gamma);
    auto delta = type_columns(c, s.delta);
    for (Eigen::Index i = 0; i < c.incidence().rows(); ++i)
        if (!row_satisfies(c, i, gamma, delta)) return c.tokens()[static_cast<std::size_t>(i)];
    return std::nullopt;
}

bool sequent_leq(const Sequent& s1, const Sequent& s2) {
    return std::includes(s2.gamma.begin(), s2.gamma.end(), s1.gamma.begin(), s1.gamma.end()) &&
           std::includes(s2.delta.begin(), s2.delta.end(), s1.delta.begin(), s1.delta.end());
}

std::set<Sequent> enumerate_theory(const Classification& c, std::size_t max_side) {
    const std::size_t n = c.types().size();
    if (n > 20) throw ResourceError("enumerate_theory: " + std::to_string(n) + " types exceeds the 20-type budget");
    max_side = std::min(max_side, n);

    std::vector<std::uint32_t> subsets;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
        if (static_cast<std::size_t>(std::popcount(mask)) <= max_side) subsets.push_back(mask);

    auto to_set = [&](std::uint32_t mask) {
        IdSet out;
        for (std::size_t j = 0; j < n; ++j)
            if (mask & (1u << j)) out.insert(c.types()[j]);
        return out;
    };

    std::set<Sequent> theory;
    for (auto g : subsets)
        for (auto d : subsets) {
            Sequent s{to_set(g), to_set(d)};
            if (is_constraint_by_tokens(c, s)) theory.insert(std::move(s));
        }
    return theory;
}

BinaryRelation::BinaryRelation(IdList left, IdList right, std::set<Pair> pairs)
    : left_(std::move(left)), right_(std::move(right)), pairs_(std::move(pairs)) {
    IdSet l(left_.begin(), left_.end()), r(right_.begin(), right_.end());
    if (l.size() != left_.size() || r.size() != right_.size())
        throw DomainError("relation domain contains duplicate identifiers");
    for (const auto& [a, b] : pairs_) {
        if (!l.contains(a)) throw DomainError("relation pair left member '" + a + "' outside left domain");
        if (!r.contains(b)) throw DomainError("relation pair right member '" + b + "' outside right domain");
    }
}

BinaryRelation compose_relations(const BinaryRelation& r, const BinaryRelation& s) {
    if (IdSet(r.right().begin(), r.right().end()) != IdSet(s.left().begin(), s.left().end()))
        throw DomainError("compose_relations: right domain of the first relation differs from left domain of the second");
    std::multimap<Id, Id> by_middle;
    for (const auto& [b, c] : s.pairs()) by_middle.emplace(b, c);
    std::set<BinaryRelation::Pair> out;
    for (const auto& [a, b] : r.pairs()) {
        auto [lo, hi] = by_middle.equal_range(b);
        for (auto it = lo; it != hi; ++it) out.emplace(a, it->second);
    }
    return BinaryRelation(r.left(), s.right(), std::move(out));
}

BinaryRelation incidence_relation(const Classification& c) {
    std::set<BinaryRelation::Pair> pairs;
    for (std::size_t i = 0; i < c.tokens().size(); ++i)
        for (std::size_t j = 0; j < c.types().size(); ++j)
            if (c.incidence()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)))
                pairs.emplace(c.tokens()[i], c.types()[j]);
    return BinaryRelation(c.tokens(), c.types(), std::move(pairs));
}

std::vector<std::string> missing_map_entries(const Infomorphism& f) {
    std::vector<std::string> missing;
    for (const auto& t : f.source.types()) {
        auto it = f.type_map.find(t);
        if (it == f.type_map.end())
            missing.push_back("type map: no image for '" + t + "'");
        else if (std::find(f.target.types().begin(), f.target.types().end(), it->second) == f.target.types().end())
            missing.push_back("type map: image '" + it->second + "' of '" + t + "' is not a target type");
    }
    for (const auto& t : f.target.tokens()) {
        auto it = f.token_map.find(t);
        if (it == f.token_map.end())
            missing.push_back("token map: no image for '" + t + "'");
        else if (std::find(f.source.tokens().begin(), f.source.tokens().end(), it->second) == f.source.tokens().end())
            missing.push_back("token map: image '" + it->second + "' of '" + t + "' is not a source token");
    }
    return missing;
}

namespace {
void require_total(const Infomorphism& f) {
    auto missing = missing_map_entries(f);
    if (!missing.empty()) throw DomainError("infomorphism maps are not total: " + missing.front());
}
} // namespace

std::optional<std::pair<Id, Id>> infomorphism_counterexample(const Infomorphism& f) {
    require_total(f);
    for (const auto& c : f.target.tokens())
        for (const auto& alpha : f.source.types()) {
            bool lhs = f.source(f.token_map.at(c), alpha);
            bool rhs = f.target(c, f.type_map.at(alpha));
            if (lhs != rhs) return std::pair{c, alpha};
        }
    return std::nullopt;
}

bool verify_infomorphism(const Infomorphism& f) { return !infomorphism_counterexample(f).has_value(); }

bool verify_prop1_inclusion(const Infomorphism& f) {
    require_total(f);
    std::set<BinaryRelation::Pair> tok_pairs, typ_pairs;
    for (const auto& [c, a] : f.token_map) tok_pairs.emplace(c, a);
    for (const auto& [alpha, beta] : f.type_map) typ_pairs.emplace(alpha, beta);
    BinaryRelation tokens_back(f.target.tokens(), f.source.tokens(), std::move(tok_pairs));
    BinaryRelation types_forward(f.source.types(), f.target.types(), std::move(typ_pairs));

    auto comp = compose_relations(compose_relations(tokens_back, incidence_relation(f.source)), types_forward);
    auto target = incidence_relation(f.target);
    return std::includes(target.pairs().begin(), target.pairs().end(), comp.pairs().begin(), comp.pairs().end());
}

std::string render_sequent(const Sequent& s) {
    std::ostringstream os;
    auto side = [&](const IdSet& ids) {
        os << '{';
        bool first = true;
        for (const auto& id : ids) {
            if (!first) os << ", ";
            os << id;
            first = false;
        }
        os << '}';
    };
    os << '<';
    side(s.gamma);
    os << ", ";
    side(s.delta);
    os << '>';
    return os.str();
}

} // namespace infoflow
