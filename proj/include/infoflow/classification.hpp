#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "infoflow/errors.hpp"

namespace infoflow {

using Id = std::string;
using IdList = std::vector<Id>;
using IdSet = std::set<Id>;
using Count = std::uint64_t;

template <typename Scalar>
using IncidenceMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

namespace detail {
void check_identifiers(const IdList& ids, const char* what);
std::size_t index_of(const IdList& ids, const Id& id, const char* what);
} // namespace detail

/// Tokens classified by types through a Scalar-valued incidence matrix (rows = tokens).
///
/// With Scalar = bool this is a classification in the usual sense; with Scalar = Count
/// the relation is ℕ-valued and the value is a multi-classification.
template <typename Scalar>
class BasicClassification {
public:
    using scalar_type = Scalar;
    using Matrix = IncidenceMatrix<Scalar>;

    BasicClassification(IdList tokens, IdList types, Matrix incidence)
        : tokens_(std::move(tokens)), types_(std::move(types)), incidence_(std::move(incidence)) {
        detail::check_identifiers(tokens_, "token");
        detail::check_identifiers(types_, "type");
        if (incidence_.rows() != static_cast<Eigen::Index>(tokens_.size()) ||
            incidence_.cols() != static_cast<Eigen::Index>(types_.size()))
            throw FormatError("incidence matrix is " + std::to_string(incidence_.rows()) + "x" +
                              std::to_string(incidence_.cols()) + ", expected " +
                              std::to_string(tokens_.size()) + "x" + std::to_string(types_.size()));
    }

    const IdList& tokens() const { return tokens_; }
    const IdList& types() const { return types_; }
    const Matrix& incidence() const { return incidence_; }

    std::size_t token_index(const Id& token) const { return detail::index_of(tokens_, token, "token"); }
    std::size_t type_index(const Id& type) const { return detail::index_of(types_, type, "type"); }

    Scalar operator()(const Id& token, const Id& type) const {
        return incidence_(static_cast<Eigen::Index>(token_index(token)),
                          static_cast<Eigen::Index>(type_index(type)));
    }

    friend bool operator==(const BasicClassification& a, const BasicClassification& b) {
        return a.tokens_ == b.tokens_ && a.types_ == b.types_ && a.incidence_ == b.incidence_;
    }

private:
    IdList tokens_;
    IdList types_;
    Matrix incidence_;
};

using Classification = BasicClassification<bool>;

struct Sequent {
    IdSet gamma;
    IdSet delta;

    // Lexicographic on sorted gamma, then sorted delta.
    friend auto operator<=>(const Sequent&, const Sequent&) = default;
};

/// Pairs over two ordered identifier domains.
class BinaryRelation {
public:
    using Pair = std::pair<Id, Id>;

    BinaryRelation(IdList left, IdList right, std::set<Pair> pairs);

    const IdList& left() const { return left_; }
    const IdList& right() const { return right_; }
    const std::set<Pair>& pairs() const { return pairs_; }
    bool contains(const Id& l, const Id& r) const { return pairs_.contains({l, r}); }

    friend bool operator==(const BinaryRelation&, const BinaryRelation&) = default;

private:
    IdList left_;
    IdList right_;
    std::set<Pair> pairs_;
};

/// A candidate infomorphism source ⇄ target: types map forward, tokens map backward.
/// Construction does not verify the biconditional; see verify_infomorphism.
struct Infomorphism {
    Classification source;
    Classification target;
    std::map<Id, Id> type_map;  // typ(source) → typ(target)
    std::map<Id, Id> token_map; // tok(target) → tok(source)
};

// Token/type lookups.
IdSet token_type_set(const Classification& c, const Id& token);
IdSet meet(const Classification& c, const IdSet& gamma);
IdSet join(const Classification& c, const IdSet& delta);

// Sequents.
bool satisfies(const Classification& c, const Id& token, const Sequent& s);
bool is_constraint(const Classification& c, const Sequent& s);
bool is_constraint_by_tokens(const Classification& c, const Sequent& s);
std::optional<Id> first_counterexample(const Classification& c, const Sequent& s);
bool sequent_leq(const Sequent& s1, const Sequent& s2);
std::set<Sequent> enumerate_theory(const Classification& c, std::size_t max_side);

// Relations and infomorphisms.
BinaryRelation compose_relations(const BinaryRelation& r, const BinaryRelation& s);
BinaryRelation incidence_relation(const Classification& c);
std::vector<std::string> missing_map_entries(const Infomorphism& f);
std::optional<std::pair<Id, Id>> infomorphism_counterexample(const Infomorphism& f);
bool verify_infomorphism(const Infomorphism& f);
bool verify_prop1_inclusion(const Infomorphism& f);

std::string render_sequent(const Sequent& s);

} // namespace infoflow
