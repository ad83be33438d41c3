#include "infoflow/multiset.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace infoflow {

Count checked_add(Count a, Count b) {
    if (a > std::numeric_limits<Count>::max() - b) throw std::overflow_error("multiplicity overflow in addition");
    return a + b;
}

Count checked_mul(Count a, Count b) {
    if (a != 0 && b > std::numeric_limits<Count>::max() / a)
        throw std::overflow_error("multiplicity overflow in multiplication");
    return a * b;
}

Multiset::Multiset(IdList domain, CountVector counts) : domain_(std::move(domain)), counts_(std::move(counts)) {
    if (counts_.size() != static_cast<Eigen::Index>(domain_.size()))
        throw FormatError("multiset has " + std::to_string(counts_.size()) + " counts for a domain of " +
                          std::to_string(domain_.size()));
    IdSet seen;
    for (const auto& id : domain_)
        if (!seen.insert(id).second) throw DomainError("duplicate multiset domain identifier '" + id + "'");
}

Multiset::Multiset(IdList domain, const std::vector<Count>& counts)
    : Multiset(std::move(domain), CountVector(Eigen::Map<const CountVector>(counts.data(),
                                                                            static_cast<Eigen::Index>(counts.size())))) {}

Multiset Multiset::empty(IdList domain) {
    auto n = static_cast<Eigen::Index>(domain.size());
    return Multiset(std::move(domain), CountVector(CountVector::Zero(n)));
}

Multiset Multiset::from_pairs(std::initializer_list<std::pair<Id, Count>> pairs) {
    IdList domain;
    std::vector<Count> counts;
    for (const auto& [id, k] : pairs) {
        domain.push_back(id);
        counts.push_back(k);
    }
    return Multiset(std::move(domain), counts);
}

Count Multiset::count(const Id& id) const {
    auto it = std::find(domain_.begin(), domain_.end(), id);
    return it == domain_.end() ? 0 : counts_(it - domain_.begin());
}

bool Multiset::contains_id(const Id& id) const {
    return std::find(domain_.begin(), domain_.end(), id) != domain_.end();
}

IdList Multiset::support() const {
    IdList out;
    for (std::size_t i = 0; i < domain_.size(); ++i)
        if (counts_(static_cast<Eigen::Index>(i)) > 0) out.push_back(domain_[i]);
    return out;
}

CountVector Multiset::aligned(const IdList& domain) const {
    CountVector out = CountVector::Zero(static_cast<Eigen::Index>(domain.size()));
    for (std::size_t i = 0; i < domain_.size(); ++i) {
        Count k = counts_(static_cast<Eigen::Index>(i));
        auto it = std::find(domain.begin(), domain.end(), domain_[i]);
        if (it == domain.end()) {
            if (k > 0) throw DomainError("identifier '" + domain_[i] + "' is outside the target domain");
            continue;
        }
        out(it - domain.begin()) = k;
    }
    return out;
}

bool operator==(const Multiset& a, const Multiset& b) {
    auto domain = united_domain(a.domain_, b.domain_);
    return a.aligned(domain) == b.aligned(domain);
}

IdList united_domain(const IdList& a, const IdList& b) {
    IdList out = a;
    IdSet seen(a.begin(), a.end());
    for (const auto& id : b)
        if (seen.insert(id).second) out.push_back(id);
    return out;
}

Multiset mset_union(const Multiset& m1, const Multiset& m2) {
    auto domain = united_domain(m1.domain(), m2.domain());
    CountVector counts = m1.aligned(domain).cwiseMax(m2.aligned(domain));
    return Multiset(std::move(domain), std::move(counts));
}

Multiset mset_intersection(const Multiset& m1, const Multiset& m2) {
    auto domain = united_domain(m1.domain(), m2.domain());
    CountVector counts = m1.aligned(domain).cwiseMin(m2.aligned(domain));
    return Multiset(std::move(domain), std::move(counts));
}

bool mset_leq(const Multiset& m1, const Multiset& m2) {
    auto domain = united_domain(m1.domain(), m2.domain());
    return (m1.aligned(domain).array() <= m2.aligned(domain).array()).all();
}

bool mset_is_empty(const Multiset& m) { return (m.counts().array() == 0).all(); }

std::string to_string(const Multiset& m) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (std::size_t i = 0; i < m.domain().size(); ++i) {
        Count k = m.counts()(static_cast<Eigen::Index>(i));
        if (k == 0) continue;
        if (!first) os << ", ";
        if (k > 1) os << k << '*';
        os << m.domain()[i];
        first = false;
    }
    os << '}';
    return os.str();
}

} // namespace infoflow
