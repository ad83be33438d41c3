#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "infoflow/multiclassification.hpp"

namespace infoflow {

enum class CapacityMode { unbounded, one_per_type };

/// An arc expression: a transition variable or a color constant.
struct Expression {
    enum class Kind { variable, constant };
    Kind kind;
    Id name;

    static Expression variable(Id name) { return {Kind::variable, std::move(name)}; }
    static Expression constant(Id color) { return {Kind::constant, std::move(color)}; }
    friend bool operator==(const Expression&, const Expression&) = default;
};

/// A multiset of expressions, e.g. `2*h, alpha`.
using Inscription = std::vector<std::pair<Expression, Count>>;

struct Arc {
    std::size_t place;
    Inscription inscription;
};

struct GuardAtom {
    Id variable;
    Id color;
    bool equal; // `variable = color` when true, `variable != color` otherwise
};

struct Transition {
    Id name;
    std::vector<Arc> inputs;
    std::vector<Arc> outputs;
    std::vector<GuardAtom> guard; // conjunction; empty = true

    /// Variables of the input inscriptions, sorted.
    IdList variables() const;
};

/// Per-place color counts: rows are places, columns are colors.
class Marking {
public:
    using Matrix = IncidenceMatrix<Count>;

    Marking() = default;
    explicit Marking(Matrix counts) : counts_(std::move(counts)) {}

    const Matrix& counts() const { return counts_; }
    Count operator()(std::size_t place, std::size_t color) const {
        return counts_(static_cast<Eigen::Index>(place), static_cast<Eigen::Index>(color));
    }
    bool respects_capacity_one() const { return (counts_.array() <= Count{1}).all(); }

    friend bool operator==(const Marking& a, const Marking& b) { return a.counts_ == b.counts_; }
    /// Canonical order: places in declaration order, then colors, compared by count.
    friend std::strong_ordering operator<=>(const Marking& a, const Marking& b);

private:
    Matrix counts_;
};

struct MarkingHash {
    std::size_t operator()(const Marking& m) const noexcept;
};

/// Variable → color.
using Binding = std::map<Id, Id>;

class Net {
public:
    Net(IdList places, IdList colors, std::vector<Transition> transitions, Marking initial,
        CapacityMode mode = CapacityMode::unbounded);

    const IdList& places() const { return places_; }
    const IdList& colors() const { return colors_; }
    const std::vector<Transition>& transitions() const { return transitions_; }
    const Marking& initial_marking() const { return initial_; }
    CapacityMode capacity_mode() const { return mode_; }

    Net with_capacity(CapacityMode mode) const;

    std::size_t place_index(const Id& p) const { return detail::index_of(places_, p, "place"); }
    std::size_t color_index(const Id& c) const { return detail::index_of(colors_, c, "color"); }
    std::size_t transition_index(const Id& t) const;

private:
    IdList places_;
    IdList colors_;
    std::vector<Transition> transitions_;
    Marking initial_;
    CapacityMode mode_;
};

/// Bindings of the transition's input variables under which it may fire, variables sorted
/// and colors enumerated in declaration order (first variable varies slowest).
std::vector<Binding> enabled_bindings(const Net& n, const Marking& m, const Id& t);
std::vector<Binding> enabled_bindings(const Net& n, const Marking& m, std::size_t t);

/// Throws PreconditionError unless `b` is an enabled binding of `t` at `m`.
Marking fire(const Net& n, const Marking& m, const Id& t, const Binding& b);
Marking fire(const Net& n, const Marking& m, std::size_t t, const Binding& b);

MultiClassification to_multiclassification(const Net& n, const Marking& m);
Marking marking_from(const Net& n, const MultiClassification& mc);
Multiset place_multiset(const Net& n, const Marking& m, const Id& place);

/// `p1{alpha, gamma} p2{beta, gamma} p3{beta}`.
std::string to_string(const Net& n, const Marking& m);
/// `h=beta,k=gamma`.
std::string to_string(const Binding& b);

/// Parses the line-oriented net format; throws ParseError with the offending line.
Net parse_net(std::string_view text);

} // namespace infoflow
