#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "infoflow/classification.hpp"

namespace infoflow {

using Row = std::vector<bool>;

/// Rows (ordered as `variables`) that must be true, and rows that may be either.
struct TruthTable {
    IdList variables;
    std::set<Row> minterms;
    std::set<Row> dontcares;

    /// Throws FormatError on a row-length mismatch or overlapping minterms/dontcares.
    void validate() const;
};

struct Literal {
    std::size_t var; // index into the formula's variable list
    bool positive;

    // Variable order first, then `~x` before `x`.
    friend auto operator<=>(const Literal&, const Literal&) = default;
};

using Term = std::vector<Literal>;

/// A disjunction of conjunctive terms over an ordered variable list.
///
/// Terms are kept in canonical form: literals sorted by (variable, polarity), terms sorted
/// by their literal sequence, no duplicates. No terms = False; one empty term = True.
class DnfFormula {
public:
    DnfFormula() = default;
    DnfFormula(IdList variables, std::vector<Term> terms);

    /// Terms as literal names, `~` marking negation: from_names({"a","b"}, {{"~a","b"}}).
    static DnfFormula from_names(IdList variables, const std::vector<std::vector<std::string>>& terms);
    static DnfFormula constant(bool value, IdList variables = {});

    const IdList& variables() const { return variables_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t literal_count() const;
    /// Variables that occur in some literal, in variable order.
    IdList used_variables() const;

    friend bool operator==(const DnfFormula&, const DnfFormula&) = default;

private:
    IdList variables_;
    std::vector<Term> terms_;
};

struct MinimizeOptions {
    /// Above this many variables the cover is chosen greedily.
    std::size_t exact_variable_limit = 20;
    /// Search nodes explored by the exact cover before settling for the best cover found.
    std::uint64_t node_budget = 10'000;
};

struct MinimizeResult {
    DnfFormula formula;
    std::size_t prime_count = 0;
    bool proven_minimal = true;
};

TruthTable table_from_classification(const Classification& c);

/// Minimal sum of products: Quine-McCluskey primes, then an exact minimum cover
/// (fewest terms, then fewest literals, then smallest canonical term sequence).
DnfFormula minimize(const TruthTable& t, const MinimizeOptions& options = {});
MinimizeResult minimize_detailed(const TruthTable& t, const MinimizeOptions& options = {});

bool evaluate(const DnfFormula& f, const std::map<std::string, bool>& assignment);
/// Evaluates with `row` indexed like f.variables().
bool evaluate_row(const DnfFormula& f, const Row& row);

/// Truth values of `f` on all 2^n assignments of `variables`; bit i of the index is
/// variables[n-1-i], so index order equals lexicographic row order.
std::vector<bool> truth_vector(const DnfFormula& f, const IdList& variables);
bool semantically_equal(const DnfFormula& f1, const DnfFormula& f2, const IdList& variables);

/// `(~alpha & beta) | (alpha & ~beta & delta)`; constants render as True / False.
std::string to_string(const DnfFormula& f);
std::string to_string(const Literal& l, const IdList& variables);

/// Full truth table of `f` over the table's variables in the layout: membership in the
/// table, variables, negated literals, terms, formula; rows from all-ones to all-zeros.
void write_truth_table(std::ostream& os, const TruthTable& t, const DnfFormula& f);

Row row_from_index(std::uint64_t index, std::size_t width);
std::uint64_t row_index(const Row& row);

} // namespace infoflow
