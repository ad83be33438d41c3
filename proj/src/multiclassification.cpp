#include "infoflow/multiclassification.hpp"

#include <algorithm>
#include <limits>

namespace infoflow {

namespace {

void check_support(const MultiClassification& mc, const Multiset& m) {
    for (const auto& id : m.support()) mc.type_index(id);
}

// Γ re-indexed onto the classification's types, plus the support columns.
std::pair<CountVector, std::vector<Eigen::Index>> weights(const MultiClassification& mc, const Multiset& gamma) {
    check_support(mc, gamma);
    CountVector w = gamma.aligned(mc.types());
    std::vector<Eigen::Index> cols;
    for (Eigen::Index j = 0; j < w.size(); ++j)
        if (w(j) > 0) cols.push_back(j);
    return {std::move(w), std::move(cols)};
}

template <typename Pick>
Multiset scaled_columns(const MultiClassification& mc, const Multiset& gamma, Count init, Pick pick) {
    auto [w, cols] = weights(mc, gamma);
    const auto& m = mc.incidence();
    CountVector out = CountVector::Zero(m.rows());
    if (!cols.empty())
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            Count acc = init;
            for (auto j : cols) acc = pick(acc, checked_mul(w(j), m(i, j)));
            out(i) = acc;
        }
    return Multiset(mc.tokens(), std::move(out));
}

} // namespace

Multiset token_row(const MultiClassification& mc, const Id& token) {
    auto i = static_cast<Eigen::Index>(mc.token_index(token));
    return Multiset(mc.types(), CountVector(mc.incidence().row(i).transpose()));
}

Multiset type_column(const MultiClassification& mc, const Id& type) {
    auto j = static_cast<Eigen::Index>(mc.type_index(type));
    return Multiset(mc.tokens(), CountVector(mc.incidence().col(j)));
}

Multiset big_join(const MultiClassification& mc, const Multiset& gamma) {
    return scaled_columns(mc, gamma, Count{0}, [](Count a, Count b) { return std::max(a, b); });
}

Multiset big_meet(const MultiClassification& mc, const Multiset& gamma) {
    if (mset_is_empty(gamma)) throw DomainError("big_meet of the empty multiset is undefined");
    return scaled_columns(mc, gamma, std::numeric_limits<Count>::max(), [](Count a, Count b) { return std::min(a, b); });
}

bool multi_satisfies(const MultiClassification& mc, const Id& token, const MultiSequent& s) {
    check_support(mc, s.gamma);
    check_support(mc, s.delta);
    auto row = token_row(mc, token);
    return !mset_leq(s.gamma, row) || !mset_is_empty(mset_intersection(row, s.delta));
}

std::optional<Id> multi_counterexample(const MultiClassification& mc, const MultiSequent& s) {
    check_support(mc, s.gamma);
    check_support(mc, s.delta);
    for (const auto& a : mc.tokens())
        if (!multi_satisfies(mc, a, s)) return a;
    return std::nullopt;
}

bool multi_is_constraint(const MultiClassification& mc, const MultiSequent& s) {
    return !multi_counterexample(mc, s).has_value();
}

std::string copy_name(const Id& type, std::size_t i) { return type + "#" + std::to_string(i); }

IdList zero_types(const MultiClassification& mc) {
    IdList out;
    CountVector maxima = mc.incidence().colwise().maxCoeff().transpose();
    for (std::size_t j = 0; j < mc.types().size(); ++j)
        if (maxima(static_cast<Eigen::Index>(j)) == 0) out.push_back(mc.types()[j]);
    return out;
}

Classification unfold(const MultiClassification& mc) {
    const auto& m = mc.incidence();
    CountVector maxima = m.colwise().maxCoeff().transpose();

    IdList names;
    std::vector<std::pair<Eigen::Index, Count>> blocks; // (source column, copy index)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Count k = 1; k <= maxima(j); ++k) {
            names.push_back(copy_name(mc.types()[static_cast<std::size_t>(j)], k));
            blocks.emplace_back(j, k);
        }
    if (names.empty()) throw DomainError("unfold: every type has zero multiplicity");

    Classification::Matrix out(m.rows(), static_cast<Eigen::Index>(names.size()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (std::size_t c = 0; c < blocks.size(); ++c)
            out(i, static_cast<Eigen::Index>(c)) = blocks[c].second <= m(i, blocks[c].first);
    return Classification(mc.tokens(), std::move(names), std::move(out));
}

MultiClassification to_multi(const Classification& c) {
    return MultiClassification(c.tokens(), c.types(), c.incidence().cast<Count>());
}

bool is_binary(const MultiClassification& mc) { return (mc.incidence().array() <= Count{1}).all(); }

Classification to_binary(const MultiClassification& mc) {
    if (!is_binary(mc)) throw DomainError("multi-classification has entries greater than 1");
    return Classification(mc.tokens(), mc.types(), mc.incidence().cast<bool>());
}

} // namespace infoflow
