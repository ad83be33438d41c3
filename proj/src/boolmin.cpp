#include "infoflow/boolmin.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

namespace infoflow {

// ---------------------------------------------------------------------------
// Rows and tables

Row row_from_index(std::uint64_t index, std::size_t width) {
    Row row(width);
    for (std::size_t i = 0; i < width; ++i) row[i] = (index >> (width - 1 - i)) & 1u;
    return row;
}

std::uint64_t row_index(const Row& row) {
    std::uint64_t index = 0;
    for (bool b : row) index = (index << 1) | (b ? 1u : 0u);
    return index;
}

void TruthTable::validate() const {
    auto check = [&](const std::set<Row>& rows, const char* what) {
        for (const auto& r : rows)
            if (r.size() != variables.size())
                throw FormatError(std::string(what) + " row of length " + std::to_string(r.size()) +
                                  " for " + std::to_string(variables.size()) + " variables");
    };
    check(minterms, "minterm");
    check(dontcares, "dontcare");
    for (const auto& r : dontcares)
        if (minterms.contains(r)) throw FormatError("row is both a minterm and a dontcare");
}

TruthTable table_from_classification(const Classification& c) {
    TruthTable t{c.types(), {}, {}};
    const auto& m = c.incidence();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Row row(static_cast<std::size_t>(m.cols()));
        for (Eigen::Index j = 0; j < m.cols(); ++j) row[static_cast<std::size_t>(j)] = m(i, j);
        t.minterms.insert(std::move(row));
    }
    return t;
}

// ---------------------------------------------------------------------------
// Formulas

DnfFormula::DnfFormula(IdList variables, std::vector<Term> terms) : variables_(std::move(variables)) {
    IdSet seen;
    for (const auto& v : variables_)
        if (!seen.insert(v).second) throw DomainError("duplicate formula variable '" + v + "'");
    for (auto& term : terms) {
        std::sort(term.begin(), term.end());
        for (std::size_t i = 0; i < term.size(); ++i) {
            if (term[i].var >= variables_.size()) throw DomainError("literal refers to an unknown variable");
            if (i > 0 && term[i].var == term[i - 1].var)
                throw DomainError("term mentions variable '" + variables_[term[i].var] + "' twice");
        }
    }
    std::sort(terms.begin(), terms.end());
    terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
    terms_ = std::move(terms);
}

DnfFormula DnfFormula::from_names(IdList variables, const std::vector<std::vector<std::string>>& terms) {
    std::vector<Term> out;
    for (const auto& names : terms) {
        Term term;
        for (const auto& name : names) {
            bool negated = !name.empty() && name.front() == '~';
            auto var = negated ? name.substr(1) : name;
            term.push_back({detail::index_of(variables, var, "variable"), !negated});
        }
        out.push_back(std::move(term));
    }
    return DnfFormula(std::move(variables), std::move(out));
}

DnfFormula DnfFormula::constant(bool value, IdList variables) {
    return value ? DnfFormula(std::move(variables), {Term{}}) : DnfFormula(std::move(variables), {});
}

std::size_t DnfFormula::literal_count() const {
    return std::accumulate(terms_.begin(), terms_.end(), std::size_t{0},
                           [](std::size_t n, const Term& t) { return n + t.size(); });
}

IdList DnfFormula::used_variables() const {
    std::vector<bool> used(variables_.size());
    for (const auto& t : terms_)
        for (const auto& l : t) used[l.var] = true;
    IdList out;
    for (std::size_t i = 0; i < used.size(); ++i)
        if (used[i]) out.push_back(variables_[i]);
    return out;
}

std::string to_string(const Literal& l, const IdList& variables) {
    return (l.positive ? "" : "~") + variables.at(l.var);
}

std::string to_string(const DnfFormula& f) {
    if (f.terms().empty()) return "False";
    if (std::any_of(f.terms().begin(), f.terms().end(), [](const Term& t) { return t.empty(); })) return "True";
    const bool parens = f.terms().size() > 1;
    std::string out;
    for (std::size_t i = 0; i < f.terms().size(); ++i) {
        const auto& term = f.terms()[i];
        if (i > 0) out += " | ";
        bool wrap = parens && term.size() > 1;
        if (wrap) out += '(';
        for (std::size_t k = 0; k < term.size(); ++k) {
            if (k > 0) out += " & ";
            out += to_string(term[k], f.variables());
        }
        if (wrap) out += ')';
    }
    return out;
}

bool evaluate_row(const DnfFormula& f, const Row& row) {
    if (row.size() != f.variables().size()) throw FormatError("assignment row length differs from variable count");
    return std::any_of(f.terms().begin(), f.terms().end(), [&](const Term& t) {
        return std::all_of(t.begin(), t.end(), [&](const Literal& l) { return row[l.var] == l.positive; });
    });
}

bool evaluate(const DnfFormula& f, const std::map<std::string, bool>& assignment) {
    Row row(f.variables().size());
    for (const auto& v : f.used_variables()) {
        auto it = assignment.find(v);
        if (it == assignment.end()) throw DomainError("assignment misses variable '" + v + "'");
        row[detail::index_of(f.variables(), v, "variable")] = it->second;
    }
    return evaluate_row(f, row);
}

namespace {

constexpr std::size_t kMaxEnumeratedVariables = 24;

// A term over an n-variable space: `care` has a bit per literal, `value` its polarity.
// Variable i lives at bit n-1-i, matching row_index.
struct Cube {
    std::uint64_t value = 0;
    std::uint64_t care = 0;

    bool covers(std::uint64_t minterm) const { return (minterm & care) == value; }
    friend bool operator==(const Cube&, const Cube&) = default;
};

struct CubeHash {
    std::size_t operator()(const Cube& c) const noexcept {
        return std::hash<std::uint64_t>{}(c.value * 0x9E3779B97F4A7C15ull ^ c.care);
    }
};

std::vector<Cube> compile(const DnfFormula& f, const IdList& variables) {
    const std::size_t n = variables.size();
    std::vector<Cube> cubes;
    for (const auto& term : f.terms()) {
        Cube c;
        for (const auto& l : term) {
            auto pos = detail::index_of(variables, f.variables()[l.var], "variable");
            std::uint64_t bit = std::uint64_t{1} << (n - 1 - pos);
            c.care |= bit;
            if (l.positive) c.value |= bit;
        }
        cubes.push_back(c);
    }
    return cubes;
}

Term to_term(const Cube& c, std::size_t n) {
    Term t;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t bit = std::uint64_t{1} << (n - 1 - i);
        if (c.care & bit) t.push_back({i, (c.value & bit) != 0});
    }
    return t;
}

} // namespace

std::vector<bool> truth_vector(const DnfFormula& f, const IdList& variables) {
    if (variables.size() > kMaxEnumeratedVariables)
        throw ResourceError("truth table over " + std::to_string(variables.size()) + " variables exceeds the " +
                            std::to_string(kMaxEnumeratedVariables) + "-variable budget");
    auto cubes = compile(f, variables);
    const std::uint64_t rows = std::uint64_t{1} << variables.size();
    std::vector<bool> out(rows);
    for (std::uint64_t x = 0; x < rows; ++x)
        out[x] = std::any_of(cubes.begin(), cubes.end(), [x](const Cube& c) { return c.covers(x); });
    return out;
}

bool semantically_equal(const DnfFormula& f1, const DnfFormula& f2, const IdList& variables) {
    return truth_vector(f1, variables) == truth_vector(f2, variables);
}

// ---------------------------------------------------------------------------
// Prime implicants

namespace {

std::vector<Cube> prime_implicants(const std::vector<std::uint64_t>& ones, std::size_t n) {
    const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::vector<Cube> level;
    level.reserve(ones.size());
    for (auto m : ones) level.push_back({m, full});

    std::vector<Cube> primes;
    while (!level.empty()) {
        std::unordered_set<Cube, CubeHash> present(level.begin(), level.end());
        std::unordered_set<Cube, CubeHash> merged;
        std::unordered_set<Cube, CubeHash> next;
        for (const auto& c : level) {
            for (std::uint64_t bits = c.care; bits; bits &= bits - 1) {
                std::uint64_t bit = bits & (~bits + 1);
                if (c.value & bit) continue; // each pair once, from its 0 side
                Cube partner{c.value | bit, c.care};
                if (!present.contains(partner)) continue;
                merged.insert(c);
                merged.insert(partner);
                next.insert({c.value, c.care & ~bit});
            }
        }
        for (const auto& c : level)
            if (!merged.contains(c)) primes.push_back(c);
        level.assign(next.begin(), next.end());
    }
    return primes;
}

// ---------------------------------------------------------------------------
// Minimum cover

struct CoverProblem {
    std::vector<std::vector<std::size_t>> rows_of; // per column, covered rows
    std::vector<std::vector<std::size_t>> cols_of; // per row, covering columns
    std::vector<std::size_t> literals;             // per column
    std::vector<Term> keys;                        // per column
};

struct Cost {
    std::size_t terms = 0;
    std::size_t literals = 0;
    friend auto operator<=>(const Cost&, const Cost&) = default;
};

class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t n) : words_((n + 63) / 64) {}

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    bool test(std::size_t i) const { return words_[i / 64] >> (i % 64) & 1u; }
    bool any() const {
        return std::any_of(words_.begin(), words_.end(), [](auto w) { return w != 0; });
    }
    std::size_t count() const {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }
    std::size_t count_and(const Bits& o) const {
        std::size_t n = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) n += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
        return n;
    }
    bool intersects(const Bits& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    Bits operator&(const Bits& o) const {
        Bits out = *this;
        for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= o.words_[i];
        return out;
    }
    Bits& operator|=(const Bits& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    void and_not(const Bits& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    }
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            for (auto w = words_[i]; w; w &= w - 1) f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
    }

private:
    std::vector<std::uint64_t> words_;
};

class CoverSearch {
public:
    CoverSearch(const CoverProblem& p, std::uint64_t budget) : p_(p), budget_(budget) {
        const auto rows = p.cols_of.size(), cols = p.rows_of.size();
        col_rows_.assign(cols, Bits(rows));
        row_cols_.assign(rows, Bits(cols));
        for (std::size_t c = 0; c < cols; ++c)
            for (auto r : p.rows_of[c]) {
                col_rows_[c].set(r);
                row_cols_[r].set(c);
            }
        std::vector<std::size_t> order(cols);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](auto a, auto b) {
            return std::tie(p.literals[a], p.keys[a]) < std::tie(p.literals[b], p.keys[b]);
        });
        rank_.resize(cols);
        for (std::size_t i = 0; i < cols; ++i) rank_[order[i]] = i;
    }

    std::vector<std::size_t> solve() {
        Bits rows(p_.cols_of.size()), cols(p_.rows_of.size());
        for (std::size_t r = 0; r < p_.cols_of.size(); ++r) rows.set(r);
        for (std::size_t c = 0; c < p_.rows_of.size(); ++c) cols.set(c);
        return solve(rows, cols).chosen;
    }

    bool exhausted() const { return nodes_ > budget_; }

private:
    struct State {
        Bits rows; // uncovered
        Bits cols; // still selectable
        std::vector<std::size_t> chosen;
        Cost cost;
    };

    struct Best {
        bool have = false;
        Cost cost;
        std::vector<Term> key;
        std::vector<std::size_t> chosen;
    };

    // Fewer literals first, then the smaller term key.
    bool column_precedes(std::size_t a, std::size_t b) const { return rank_[a] < rank_[b]; }

    void take(State& s, std::size_t col) const {
        s.chosen.push_back(col);
        s.cost.terms += 1;
        s.cost.literals += p_.literals[col];
        s.cols.reset(col);
        s.rows.and_not(col_rows_[col]);
    }

    // Optimal cover of `rows` using `cols`, seeded with a greedy cover.
    Best solve(const Bits& rows, const Bits& cols) {
        Best best;
        State seed{rows, cols, {}, {}};
        while (seed.rows.any()) {
            std::optional<std::size_t> pick;
            std::size_t gain = 0;
            seed.cols.for_each([&](std::size_t c) {
                auto g = col_rows_[c].count_and(seed.rows);
                if (g > gain || (g == gain && g > 0 && column_precedes(c, *pick))) {
                    pick = c;
                    gain = g;
                }
            });
            if (!pick) return best; // infeasible
            take(seed, *pick);
        }
        offer(best, seed);
        search(State{rows, cols, {}, {}}, best);
        return best;
    }

    // Essential columns, row dominance, column dominance; returns false if infeasible.
    bool reduce(State& s) const {
        for (bool changed = true; changed;) {
            changed = false;
            bool infeasible = false;
            std::vector<std::size_t> essential;
            s.rows.for_each([&](std::size_t r) {
                auto live = row_cols_[r] & s.cols;
                auto n = live.count();
                if (n == 0) infeasible = true;
                if (n == 1) live.for_each([&](std::size_t c) { essential.push_back(c); });
            });
            if (infeasible) return false;
            for (auto c : essential)
                if (s.cols.test(c)) {
                    take(s, c);
                    changed = true;
                }
            if (changed) continue;

            // A row whose live columns include another row's is covered whenever that row is.
            // Candidates for b share a's sparsest live column.
            std::vector<std::size_t> rows;
            std::vector<std::size_t> pos(p_.cols_of.size(), SIZE_MAX);
            std::vector<Bits> live_cols;
            s.rows.for_each([&](std::size_t r) {
                pos[r] = rows.size();
                rows.push_back(r);
                live_cols.push_back(row_cols_[r] & s.cols);
            });
            std::vector<char> dropped(rows.size());
            for (std::size_t a = 0; a < rows.size(); ++a) {
                if (dropped[a]) continue;
                std::size_t pivot = 0, fewest = SIZE_MAX;
                live_cols[a].for_each([&](std::size_t c) {
                    auto n = col_rows_[c].count_and(s.rows);
                    if (n < fewest) fewest = n, pivot = c;
                });
                (col_rows_[pivot] & s.rows).for_each([&](std::size_t rb) {
                    auto b = pos[rb];
                    if (b == a || dropped[b] || dropped[a]) return;
                    if (live_cols[a].subset_of(live_cols[b]) && (!live_cols[b].subset_of(live_cols[a]) || a < b)) {
                        dropped[b] = 1;
                        s.rows.reset(rows[b]);
                        changed = true;
                    }
                });
            }
            if (changed) continue;

            // Drop a column when a preferred column covers a superset of its rows.
            // Candidates for b share a's sparsest live row.
            std::vector<std::size_t> cols;
            std::vector<std::size_t> cpos(p_.rows_of.size(), SIZE_MAX);
            std::vector<Bits> live_rows;
            s.cols.for_each([&](std::size_t c) {
                cpos[c] = cols.size();
                cols.push_back(c);
                live_rows.push_back(col_rows_[c] & s.rows);
            });
            for (std::size_t a = 0; a < cols.size(); ++a) {
                if (!live_rows[a].any()) {
                    s.cols.reset(cols[a]);
                    changed = true;
                    continue;
                }
                std::size_t pivot = 0, fewest = SIZE_MAX;
                live_rows[a].for_each([&](std::size_t r) {
                    auto n = row_cols_[r].count_and(s.cols);
                    if (n < fewest) fewest = n, pivot = r;
                });
                bool dominated = false;
                (row_cols_[pivot] & s.cols).for_each([&](std::size_t cb) {
                    if (dominated || cb == cols[a] || !column_precedes(cb, cols[a])) return;
                    if (live_rows[a].subset_of(live_rows[cpos[cb]])) dominated = true;
                });
                if (dominated) {
                    s.cols.reset(cols[a]);
                    changed = true;
                }
            }
        }
        return true;
    }

    // Rows connected through shared live columns.
    std::vector<Bits> components(const State& s) const {
        std::vector<Bits> out;
        Bits left = s.rows;
        while (left.any()) {
            std::size_t first = 0;
            bool found = false;
            left.for_each([&](std::size_t r) {
                if (!found) first = r, found = true;
            });
            Bits comp(p_.cols_of.size()), frontier(p_.cols_of.size());
            frontier.set(first);
            while (frontier.any()) {
                comp |= frontier;
                Bits cols(p_.rows_of.size());
                frontier.for_each([&](std::size_t r) { cols |= row_cols_[r] & s.cols; });
                Bits next(p_.cols_of.size());
                cols.for_each([&](std::size_t c) { next |= col_rows_[c] & s.rows; });
                next.and_not(comp);
                frontier = next;
            }
            left.and_not(comp);
            out.push_back(std::move(comp));
        }
        return out;
    }

    // Rows pairwise sharing no live column each need their own term; fewest-column rows first.
    Cost lower_bound(const State& s) const {
        std::vector<std::pair<std::size_t, std::size_t>> order;
        s.rows.for_each([&](std::size_t r) { order.emplace_back(row_cols_[r].count_and(s.cols), r); });
        std::sort(order.begin(), order.end());
        Cost lb = s.cost;
        Bits used(p_.rows_of.size());
        for (auto [n, r] : order) {
            auto live = row_cols_[r] & s.cols;
            if (live.intersects(used)) continue;
            std::size_t cheapest = SIZE_MAX;
            live.for_each([&](std::size_t c) { cheapest = std::min(cheapest, p_.literals[c]); });
            used |= live;
            lb.terms += 1;
            lb.literals += cheapest;
        }
        return lb;
    }

    std::vector<Term> solution_key(const std::vector<std::size_t>& chosen) const {
        std::vector<Term> key;
        for (auto c : chosen) key.push_back(p_.keys[c]);
        std::sort(key.begin(), key.end());
        return key;
    }

    void offer(Best& best, const State& s) const {
        if (best.have && s.cost > best.cost) return;
        auto key = solution_key(s.chosen);
        if (!best.have || s.cost < best.cost || key < best.key) {
            best.have = true;
            best.cost = s.cost;
            best.key = std::move(key);
            best.chosen = s.chosen;
        }
    }

    void search(State s, Best& best) {
        if (++nodes_ > budget_) return;
        if (!reduce(s)) return;
        if (s.cost > best.cost) return;
        if (!s.rows.any()) {
            offer(best, s);
            return;
        }
        if (lower_bound(s) > best.cost) return;

        auto comps = components(s);
        if (comps.size() > 1) {
            // Independent blocks: optimal per block is optimal overall, tie order included.
            for (const auto& rows : comps) {
                Bits cols(p_.rows_of.size());
                rows.for_each([&](std::size_t r) { cols |= row_cols_[r] & s.cols; });
                auto part = solve(rows, cols);
                if (!part.have) return;
                for (auto c : part.chosen) take(s, c);
            }
            offer(best, s);
            return;
        }

        std::optional<std::size_t> branch_row;
        std::size_t fewest = SIZE_MAX;
        s.rows.for_each([&](std::size_t r) {
            auto n = row_cols_[r].count_and(s.cols);
            if (n < fewest) {
                fewest = n;
                branch_row = r;
            }
        });
        std::vector<std::size_t> cols;
        (row_cols_[*branch_row] & s.cols).for_each([&](std::size_t c) { cols.push_back(c); });
        std::sort(cols.begin(), cols.end(), [&](auto a, auto b) { return column_precedes(a, b); });
        for (auto c : cols) {
            State next = s;
            take(next, c);
            search(std::move(next), best);
            if (nodes_ > budget_) return;
            // Later siblings must not reuse this column: that branch was already explored.
            s.cols.reset(c);
        }
    }

    const CoverProblem& p_;
    std::uint64_t budget_;
    std::vector<Bits> col_rows_;
    std::vector<Bits> row_cols_;
    std::vector<std::size_t> rank_;
    std::uint64_t nodes_ = 0;
};

std::vector<std::size_t> greedy_cover(const CoverProblem& p) {
    std::vector<bool> covered(p.cols_of.size());
    std::vector<std::size_t> chosen;
    std::vector<bool> used(p.rows_of.size());
    auto cover_with = [&](std::size_t c) {
        chosen.push_back(c);
        used[c] = true;
        for (auto r : p.rows_of[c]) covered[r] = true;
    };
    for (std::size_t r = 0; r < p.cols_of.size(); ++r)
        if (!covered[r] && p.cols_of[r].size() == 1) cover_with(p.cols_of[r].front());
    for (;;) {
        std::optional<std::size_t> best;
        std::size_t best_gain = 0;
        for (std::size_t c = 0; c < p.rows_of.size(); ++c) {
            if (used[c]) continue;
            std::size_t gain = std::count_if(p.rows_of[c].begin(), p.rows_of[c].end(),
                                             [&](auto r) { return !covered[r]; });
            if (gain == 0) continue;
            bool better = !best || gain > best_gain ||
                          (gain == best_gain && (p.literals[c] < p.literals[*best] ||
                                                 (p.literals[c] == p.literals[*best] && p.keys[c] < p.keys[*best])));
            if (better) {
                best = c;
                best_gain = gain;
            }
        }
        if (!best) break;
        cover_with(*best);
    }
    return chosen;
}

} // namespace

MinimizeResult minimize_detailed(const TruthTable& t, const MinimizeOptions& options) {
    t.validate();
    const std::size_t n = t.variables.size();
    if (n > 64) throw ResourceError("minimize supports at most 64 variables, got " + std::to_string(n));

    MinimizeResult result;
    if (t.minterms.empty()) {
        result.formula = DnfFormula::constant(false, t.variables);
        return result;
    }

    std::vector<std::uint64_t> on, ones;
    for (const auto& r : t.minterms) on.push_back(row_index(r));
    ones = on;
    for (const auto& r : t.dontcares) ones.push_back(row_index(r));

    auto primes = prime_implicants(ones, n);
    result.prime_count = primes.size();

    CoverProblem p;
    p.rows_of.resize(primes.size());
    p.cols_of.resize(on.size());
    for (std::size_t c = 0; c < primes.size(); ++c) {
        p.literals.push_back(static_cast<std::size_t>(std::popcount(primes[c].care)));
        p.keys.push_back(to_term(primes[c], n));
        for (std::size_t r = 0; r < on.size(); ++r)
            if (primes[c].covers(on[r])) {
                p.rows_of[c].push_back(r);
                p.cols_of[r].push_back(c);
            }
    }

    std::vector<std::size_t> chosen;
    if (n > options.exact_variable_limit) {
        chosen = greedy_cover(p);
        result.proven_minimal = false;
    } else {
        CoverSearch search(p, options.node_budget);
        chosen = search.solve();
        if (search.exhausted()) result.proven_minimal = false;
    }

    std::vector<Term> terms;
    for (auto c : chosen) terms.push_back(p.keys[c]);
    result.formula = DnfFormula(t.variables, std::move(terms));
    return result;
}

DnfFormula minimize(const TruthTable& t, const MinimizeOptions& options) {
    return minimize_detailed(t, options).formula;
}

// ---------------------------------------------------------------------------
// Truth table rendering

void write_truth_table(std::ostream& os, const TruthTable& t, const DnfFormula& f) {
    t.validate();
    const std::size_t n = t.variables.size();
    if (n > 16) throw ResourceError("truth table rendering is limited to 16 variables");

    struct Column {
        std::string header;
        std::function<bool(const Row&)> value;
    };
    std::vector<Column> columns;
    columns.push_back({"A", [&](const Row& r) { return t.minterms.contains(r); }});
    for (std::size_t i = 0; i < n; ++i) columns.push_back({t.variables[i], [i](const Row& r) { return r[i]; }});

    // Formula literals are indexed against f.variables(); re-index into the table's order.
    auto table_var = [&](const Literal& l) { return detail::index_of(t.variables, f.variables()[l.var], "variable"); };
    std::set<std::size_t> negated;
    for (const auto& term : f.terms())
        for (const auto& l : term)
            if (!l.positive) negated.insert(table_var(l));
    for (auto i : negated) columns.push_back({"~" + t.variables[i], [i](const Row& r) { return !r[i]; }});
    if (f.terms().size() > 1)
        for (const auto& term : f.terms()) {
            if (term.size() < 2) continue;
            std::vector<std::pair<std::size_t, bool>> lits;
            for (const auto& l : term) lits.emplace_back(table_var(l), l.positive);
            columns.push_back({to_string(DnfFormula(f.variables(), {term})), [lits](const Row& r) {
                                   return std::all_of(lits.begin(), lits.end(),
                                                      [&](const auto& l) { return r[l.first] == l.second; });
                               }});
        }
    auto cubes = compile(f, t.variables);
    columns.push_back({to_string(f), [cubes](const Row& r) {
                           auto x = row_index(r);
                           return std::any_of(cubes.begin(), cubes.end(), [x](const Cube& c) { return c.covers(x); });
                       }});

    std::vector<std::size_t> widths;
    for (const auto& c : columns) widths.push_back(std::max<std::size_t>(1, c.header.size()));
    auto emit = [&](auto&& cell) {
        for (std::size_t k = 0; k < columns.size(); ++k) {
            if (k > 0) os << " | ";
            os << std::left << std::setw(static_cast<int>(widths[k])) << cell(k);
        }
        os << '\n';
    };
    emit([&](std::size_t k) { return columns[k].header; });
    std::string rule;
    for (std::size_t k = 0; k < columns.size(); ++k) rule += (k ? "-+-" : "") + std::string(widths[k], '-');
    os << rule << '\n';
    for (std::uint64_t x = std::uint64_t{1} << n; x-- > 0;) {
        auto r = row_from_index(x, n);
        emit([&](std::size_t k) { return std::string(columns[k].value(r) ? "1" : "0"); });
    }
}

} // namespace infoflow
