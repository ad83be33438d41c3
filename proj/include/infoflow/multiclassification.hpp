#pragma once

#include <string>

#include "infoflow/classification.hpp"
#include "infoflow/multiset.hpp"

namespace infoflow {

using MultiClassification = BasicClassification<Count>;

struct MultiSequent {
    Multiset gamma; // over types
    Multiset delta; // over types
};

/// â: the row of `token` as a multiset over the types.
Multiset token_row(const MultiClassification& mc, const Id& token);
/// α̌: the column of `type` as a multiset over the tokens.
Multiset type_column(const MultiClassification& mc, const Id& type);

/// ⋁Γ(a) = max over α in support(Γ) of Γ(α)·⊨(a, α). Θ for an empty Γ.
Multiset big_join(const MultiClassification& mc, const Multiset& gamma);
/// ⋀Γ(a) = min over α in support(Γ) of Γ(α)·⊨(a, α). Throws DomainError for Γ = Θ.
Multiset big_meet(const MultiClassification& mc, const Multiset& gamma);

bool multi_satisfies(const MultiClassification& mc, const Id& token, const MultiSequent& s);
bool multi_is_constraint(const MultiClassification& mc, const MultiSequent& s);
std::optional<Id> multi_counterexample(const MultiClassification& mc, const MultiSequent& s);

/// Name of the i-th (1-based) unfolded copy of a type: `alpha#2`.
std::string copy_name(const Id& type, std::size_t i);

/// Duplicates each type up to its column maximum with thermometer (leftmost-ones) fill.
/// Zero columns are dropped; throws DomainError if every column is zero.
Classification unfold(const MultiClassification& mc);
/// Types of `mc` whose column is all zero (dropped by unfold).
IdList zero_types(const MultiClassification& mc);

MultiClassification to_multi(const Classification& c);
bool is_binary(const MultiClassification& mc);
/// Throws DomainError if some entry exceeds 1.
Classification to_binary(const MultiClassification& mc);

} // namespace infoflow
