#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "infoflow/classification.hpp"

namespace infoflow {

using CountVector = Eigen::Matrix<Count, Eigen::Dynamic, 1>;

Count checked_add(Count a, Count b);
Count checked_mul(Count a, Count b);

/// A multiplicity function over an ordered identifier domain.
///
/// Identifiers outside the domain count as zero, and equality ignores zero entries,
/// so {a, 0*b} == {a}.
class Multiset {
public:
    Multiset() = default;
    Multiset(IdList domain, CountVector counts);
    Multiset(IdList domain, const std::vector<Count>& counts);

    /// Θ over the given domain.
    static Multiset empty(IdList domain = {});
    /// Domain in listed order, e.g. from_pairs({{"a", 2}, {"b", 1}}).
    static Multiset from_pairs(std::initializer_list<std::pair<Id, Count>> pairs);

    const IdList& domain() const { return domain_; }
    const CountVector& counts() const { return counts_; }
    Count count(const Id& id) const;
    IdList support() const;
    bool contains_id(const Id& id) const;

    /// Counts re-indexed onto another domain; missing identifiers map to 0.
    /// Throws DomainError if a positive-count identifier is absent from `domain`.
    CountVector aligned(const IdList& domain) const;

    friend bool operator==(const Multiset& a, const Multiset& b);

private:
    IdList domain_;
    CountVector counts_;
};

/// The left domain followed by identifiers of the right domain not already present.
IdList united_domain(const IdList& a, const IdList& b);

Multiset mset_union(const Multiset& m1, const Multiset& m2);
Multiset mset_intersection(const Multiset& m1, const Multiset& m2);
bool mset_leq(const Multiset& m1, const Multiset& m2);
bool mset_is_empty(const Multiset& m);

/// `{3*alpha, 2*beta, gamma}` in domain order, zeros omitted; Θ renders as `{}`.
std::string to_string(const Multiset& m);

} // namespace infoflow
