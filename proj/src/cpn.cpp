#include "infoflow/cpn.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>

namespace infoflow {

IdList Transition::variables() const {
    IdSet vars;
    for (const auto& arc : inputs)
        for (const auto& [e, k] : arc.inscription)
            if (e.kind == Expression::Kind::variable) vars.insert(e.name);
    return IdList(vars.begin(), vars.end());
}

std::strong_ordering operator<=>(const Marking& a, const Marking& b) {
    if (auto c = a.counts_.rows() <=> b.counts_.rows(); c != 0) return c;
    if (auto c = a.counts_.cols() <=> b.counts_.cols(); c != 0) return c;
    const Count* x = a.counts_.data();
    const Count* y = b.counts_.data();
    return std::lexicographical_compare_three_way(x, x + a.counts_.size(), y, y + b.counts_.size());
}

std::size_t MarkingHash::operator()(const Marking& m) const noexcept {
    std::size_t h = static_cast<std::size_t>(m.counts().rows()) * 31 + static_cast<std::size_t>(m.counts().cols());
    const Count* p = m.counts().data();
    for (Eigen::Index i = 0; i < m.counts().size(); ++i) h = (h ^ static_cast<std::size_t>(p[i])) * 0x100000001B3ull;
    return h;
}

// ---------------------------------------------------------------------------
// Net

Net::Net(IdList places, IdList colors, std::vector<Transition> transitions, Marking initial, CapacityMode mode)
    : places_(std::move(places)), colors_(std::move(colors)), transitions_(std::move(transitions)),
      initial_(std::move(initial)), mode_(mode) {
    detail::check_identifiers(places_, "place");
    detail::check_identifiers(colors_, "color");
    IdSet places_set(places_.begin(), places_.end());
    IdSet colors_set(colors_.begin(), colors_.end());
    IdSet names;
    for (const auto& t : transitions_) {
        if (t.name.empty()) throw DomainError("empty transition identifier");
        if (!names.insert(t.name).second) throw DomainError("duplicate transition '" + t.name + "'");
        if (places_set.contains(t.name)) throw DomainError("'" + t.name + "' is both a place and a transition");

        auto check_arcs = [&](const std::vector<Arc>& arcs) {
            for (const auto& arc : arcs) {
                if (arc.place >= places_.size()) throw DomainError("arc of '" + t.name + "' refers to an unknown place");
                for (const auto& [e, k] : arc.inscription) {
                    if (k == 0) throw DomainError("zero multiplicity in an inscription of '" + t.name + "'");
                    if (e.kind == Expression::Kind::constant && !colors_set.contains(e.name))
                        throw DomainError("unknown color '" + e.name + "' in transition '" + t.name + "'");
                    if (e.kind == Expression::Kind::variable && colors_set.contains(e.name))
                        throw DomainError("variable '" + e.name + "' shadows a color in transition '" + t.name + "'");
                }
            }
        };
        check_arcs(t.inputs);
        check_arcs(t.outputs);

        auto vars = t.variables();
        auto bound = [&](const Id& v) { return std::binary_search(vars.begin(), vars.end(), v); };
        for (const auto& arc : t.outputs)
            for (const auto& [e, k] : arc.inscription)
                if (e.kind == Expression::Kind::variable && !bound(e.name))
                    throw DomainError("output variable '" + e.name + "' of '" + t.name + "' is not bound by an input");
        for (const auto& g : t.guard) {
            if (!bound(g.variable))
                throw DomainError("guard variable '" + g.variable + "' of '" + t.name + "' is not bound by an input");
            if (!colors_set.contains(g.color))
                throw DomainError("unknown color '" + g.color + "' in guard of '" + t.name + "'");
        }
    }
    if (initial_.counts().rows() != static_cast<Eigen::Index>(places_.size()) ||
        initial_.counts().cols() != static_cast<Eigen::Index>(colors_.size()))
        throw FormatError("initial marking shape does not match places x colors");
}

Net Net::with_capacity(CapacityMode mode) const {
    Net copy = *this;
    copy.mode_ = mode;
    return copy;
}

std::size_t Net::transition_index(const Id& t) const {
    auto it = std::find_if(transitions_.begin(), transitions_.end(), [&](const Transition& x) { return x.name == t; });
    if (it == transitions_.end()) throw DomainError("unknown transition '" + t + "'");
    return static_cast<std::size_t>(it - transitions_.begin());
}

// ---------------------------------------------------------------------------
// Enabling and firing

namespace {

using Matrix = Marking::Matrix;

Matrix arc_totals(const Net& n, const std::vector<Arc>& arcs, const Binding& b) {
    Matrix out = Matrix::Zero(static_cast<Eigen::Index>(n.places().size()), static_cast<Eigen::Index>(n.colors().size()));
    for (const auto& arc : arcs)
        for (const auto& [e, k] : arc.inscription) {
            const Id& color = e.kind == Expression::Kind::constant ? e.name : b.at(e.name);
            auto& cell = out(static_cast<Eigen::Index>(arc.place), static_cast<Eigen::Index>(n.color_index(color)));
            cell = checked_add(cell, k);
        }
    return out;
}

bool guard_holds(const Transition& t, const Binding& b) {
    return std::all_of(t.guard.begin(), t.guard.end(),
                       [&](const GuardAtom& g) { return (b.at(g.variable) == g.color) == g.equal; });
}

// The successor marking, or nullopt when `b` is not enabled.
std::optional<Marking> successor(const Net& n, const Marking& m, const Transition& t, const Binding& b) {
    if (!guard_holds(t, b)) return std::nullopt;
    Matrix consume = arc_totals(n, t.inputs, b);
    if ((consume.array() > m.counts().array()).any()) return std::nullopt;
    Matrix produce = arc_totals(n, t.outputs, b);
    Matrix next = m.counts() - consume;
    for (Eigen::Index i = 0; i < next.size(); ++i) next.data()[i] = checked_add(next.data()[i], produce.data()[i]);
    Marking out(std::move(next));
    if (n.capacity_mode() == CapacityMode::one_per_type && !out.respects_capacity_one()) return std::nullopt;
    return out;
}

void check_marking_shape(const Net& n, const Marking& m) {
    if (m.counts().rows() != static_cast<Eigen::Index>(n.places().size()) ||
        m.counts().cols() != static_cast<Eigen::Index>(n.colors().size()))
        throw DomainError("marking shape does not match the net");
}

} // namespace

std::vector<Binding> enabled_bindings(const Net& n, const Marking& m, std::size_t t) {
    if (t >= n.transitions().size()) throw DomainError("transition index out of range");
    check_marking_shape(n, m);
    const auto& tr = n.transitions()[t];
    const auto vars = tr.variables();
    const auto& colors = n.colors();

    std::vector<Binding> out;
    std::vector<std::size_t> digit(vars.size(), 0);
    for (;;) {
        Binding b;
        for (std::size_t i = 0; i < vars.size(); ++i) b.emplace(vars[i], colors[digit[i]]);
        if (successor(n, m, tr, b)) out.push_back(std::move(b));

        std::size_t i = vars.size();
        while (i > 0 && ++digit[i - 1] == colors.size()) digit[--i] = 0;
        if (i == 0) break;
    }
    return out;
}

std::vector<Binding> enabled_bindings(const Net& n, const Marking& m, const Id& t) {
    return enabled_bindings(n, m, n.transition_index(t));
}

Marking fire(const Net& n, const Marking& m, std::size_t t, const Binding& b) {
    if (t >= n.transitions().size()) throw DomainError("transition index out of range");
    check_marking_shape(n, m);
    const auto& tr = n.transitions()[t];
    const auto vars = tr.variables();
    bool exact_vars = b.size() == vars.size() &&
                      std::equal(vars.begin(), vars.end(), b.begin(), [](const Id& v, const auto& kv) { return v == kv.first; });
    if (!exact_vars) throw PreconditionError("binding " + to_string(b) + " does not bind exactly the variables of '" + tr.name + "'");
    for (const auto& [v, c] : b) n.color_index(c);
    auto next = successor(n, m, tr, b);
    if (!next) throw PreconditionError("transition '" + tr.name + "' is not enabled with binding " + to_string(b));
    return *next;
}

Marking fire(const Net& n, const Marking& m, const Id& t, const Binding& b) {
    return fire(n, m, n.transition_index(t), b);
}

// ---------------------------------------------------------------------------
// Conversions and rendering

MultiClassification to_multiclassification(const Net& n, const Marking& m) {
    check_marking_shape(n, m);
    return MultiClassification(n.places(), n.colors(), m.counts());
}

Marking marking_from(const Net& n, const MultiClassification& mc) {
    if (mc.tokens() != n.places() || mc.types() != n.colors())
        throw DomainError("multi-classification tokens/types must equal the net's places/colors");
    return Marking(mc.incidence());
}

Multiset place_multiset(const Net& n, const Marking& m, const Id& place) {
    return token_row(to_multiclassification(n, m), place);
}

std::string to_string(const Net& n, const Marking& m) {
    auto mc = to_multiclassification(n, m);
    std::string out;
    for (std::size_t i = 0; i < n.places().size(); ++i) {
        if (i > 0) out += ' ';
        out += n.places()[i] + to_string(token_row(mc, n.places()[i]));
    }
    return out;
}

std::string to_string(const Binding& b) {
    std::string out;
    for (const auto& [v, c] : b) {
        if (!out.empty()) out += ',';
        out += v + '=' + c;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

std::string_view trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> words(std::string_view s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ' ' || ch == '\t' || ch == ',' || ch == '\r') {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

bool valid_identifier(std::string_view s) {
    if (s.empty()) return false;
    return std::none_of(s.begin(), s.end(), [](char c) { return c == ':' || c == '*' || c == '=' || c == '!' || c == '#'; });
}

// `2*beta` or `beta`.
std::pair<Id, Count> parse_item(const std::string& word, std::size_t line) {
    auto star = word.find('*');
    if (star == std::string::npos) {
        if (!valid_identifier(word)) throw ParseError(line, "malformed item '" + word + "'");
        return {word, 1};
    }
    Count k = 0;
    auto digits = std::string_view(word).substr(0, star);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || k == 0)
        throw ParseError(line, "malformed multiplicity in '" + word + "'");
    auto name = word.substr(star + 1);
    if (!valid_identifier(name)) throw ParseError(line, "malformed item '" + word + "'");
    return {name, k};
}

std::vector<std::pair<Id, Count>> parse_items(std::string_view text, std::size_t line) {
    std::vector<std::pair<Id, Count>> out;
    for (const auto& w : words(text)) {
        auto [name, k] = parse_item(w, line);
        auto it = std::find_if(out.begin(), out.end(), [&](const auto& p) { return p.first == name; });
        if (it == out.end())
            out.emplace_back(name, k);
        else
            it->second = checked_add(it->second, k);
    }
    return out;
}

struct RawArc {
    std::size_t line;
    bool input;
    Id place;
    std::vector<std::pair<Id, Count>> items;
};

struct RawGuard {
    std::size_t line;
    GuardAtom atom;
};

struct RawTransition {
    std::size_t line;
    Id name;
    std::vector<RawArc> arcs;
    std::vector<RawGuard> guard;
};

struct RawPlace {
    std::size_t line;
    Id name;
    std::vector<std::pair<Id, Count>> init;
};

std::vector<RawGuard> parse_guard(std::string_view text, std::size_t line) {
    // Atoms separated by ',' or the word `and`.
    std::vector<std::string> atoms;
    std::string cur;
    std::istringstream in{std::string(text)};
    std::string w;
    auto flush = [&] {
        if (!trim(cur).empty()) atoms.emplace_back(trim(cur));
        cur.clear();
    };
    while (in >> w) {
        if (w == "and" || w == "&&") {
            flush();
            continue;
        }
        for (char ch : w) {
            if (ch == ',') flush();
            else cur += ch;
        }
        cur += ' ';
    }
    flush();
    if (atoms.empty()) throw ParseError(line, "empty guard");

    std::vector<RawGuard> out;
    for (const auto& a : atoms) {
        std::size_t op_pos;
        std::size_t op_len;
        bool equal;
        if ((op_pos = a.find("!=")) != std::string::npos) {
            op_len = 2;
            equal = false;
        } else if ((op_pos = a.find("==")) != std::string::npos) {
            op_len = 2;
            equal = true;
        } else if ((op_pos = a.find('=')) != std::string::npos) {
            op_len = 1;
            equal = true;
        } else {
            throw ParseError(line, "guard atom '" + a + "' has no = or != operator");
        }
        Id lhs{trim(std::string_view(a).substr(0, op_pos))};
        Id rhs{trim(std::string_view(a).substr(op_pos + op_len))};
        if (!valid_identifier(lhs) || !valid_identifier(rhs) || lhs.find(' ') != Id::npos || rhs.find(' ') != Id::npos)
            throw ParseError(line, "malformed guard atom '" + a + "'");
        out.push_back({line, {lhs, rhs, equal}});
    }
    return out;
}

} // namespace

Net parse_net(std::string_view text) {
    IdList colors;
    std::vector<RawPlace> places;
    std::vector<RawTransition> transitions;

    std::size_t line_no = 0;
    std::size_t last_line = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        last_line = line_no;

        auto space = line.find_first_of(" \t");
        std::string keyword{line.substr(0, space)};
        std::string_view rest = space == std::string_view::npos ? std::string_view{} : trim(line.substr(space));

        if (keyword == "colors") {
            auto names = words(rest);
            if (names.empty()) throw ParseError(line_no, "colors line declares nothing");
            for (auto& c : names) {
                if (!valid_identifier(c)) throw ParseError(line_no, "malformed color name '" + c + "'");
                if (std::find(colors.begin(), colors.end(), c) != colors.end())
                    throw ParseError(line_no, "duplicate color '" + c + "'");
                colors.push_back(std::move(c));
            }
        } else if (keyword == "place") {
            auto w = words(rest);
            if (w.empty()) throw ParseError(line_no, "place without a name");
            if (!valid_identifier(w[0])) throw ParseError(line_no, "malformed place name '" + w[0] + "'");
            RawPlace p{line_no, w[0], {}};
            if (w.size() > 1) {
                if (w[1] != "init") throw ParseError(line_no, "expected 'init' after place name, got '" + w[1] + "'");
                auto init_pos = rest.find("init");
                p.init = parse_items(rest.substr(init_pos + 4), line_no);
            }
            places.push_back(std::move(p));
        } else if (keyword == "trans") {
            auto w = words(rest);
            if (w.empty()) throw ParseError(line_no, "trans without a name");
            if (!valid_identifier(w[0])) throw ParseError(line_no, "malformed transition name '" + w[0] + "'");
            RawTransition t{line_no, w[0], {}, {}};
            if (w.size() > 1) {
                if (w[1] != "guard") throw ParseError(line_no, "expected 'guard' after transition name, got '" + w[1] + "'");
                auto guard_pos = rest.find("guard");
                t.guard = parse_guard(rest.substr(guard_pos + 5), line_no);
            }
            transitions.push_back(std::move(t));
        } else if (keyword == "in" || keyword == "out") {
            if (transitions.empty()) throw ParseError(line_no, "arc outside of a trans block");
            auto colon = rest.find(':');
            if (colon == std::string_view::npos) throw ParseError(line_no, "arc needs 'place : inscription'");
            Id place{trim(rest.substr(0, colon))};
            if (!valid_identifier(place) || place.find_first_of(" \t") != Id::npos)
                throw ParseError(line_no, "malformed arc place '" + place + "'");
            auto items = parse_items(rest.substr(colon + 1), line_no);
            if (items.empty()) throw ParseError(line_no, "arc with an empty inscription");
            transitions.back().arcs.push_back({line_no, keyword == "in", place, std::move(items)});
        } else {
            throw ParseError(line_no, "unknown directive '" + keyword + "'");
        }
    }

    if (colors.empty()) throw ParseError(last_line, "net declares no colors");
    if (places.empty()) throw ParseError(last_line, "net declares no places");

    IdList place_names;
    for (const auto& p : places) {
        if (std::find(place_names.begin(), place_names.end(), p.name) != place_names.end())
            throw ParseError(p.line, "duplicate place '" + p.name + "'");
        place_names.push_back(p.name);
    }
    auto is_color = [&](const Id& x) { return std::find(colors.begin(), colors.end(), x) != colors.end(); };

    Marking::Matrix init = Marking::Matrix::Zero(static_cast<Eigen::Index>(places.size()), static_cast<Eigen::Index>(colors.size()));
    for (std::size_t i = 0; i < places.size(); ++i)
        for (const auto& [c, k] : places[i].init) {
            if (!is_color(c)) throw ParseError(places[i].line, "undeclared color '" + c + "' in initial marking");
            auto j = static_cast<Eigen::Index>(std::find(colors.begin(), colors.end(), c) - colors.begin());
            init(static_cast<Eigen::Index>(i), j) = k;
        }

    std::vector<Transition> built;
    IdSet trans_names;
    for (const auto& rt : transitions) {
        if (!trans_names.insert(rt.name).second) throw ParseError(rt.line, "duplicate transition '" + rt.name + "'");
        if (std::find(place_names.begin(), place_names.end(), rt.name) != place_names.end())
            throw ParseError(rt.line, "'" + rt.name + "' is declared both as a place and a transition");
        Transition t{rt.name, {}, {}, {}};
        for (const auto& ra : rt.arcs) {
            auto pit = std::find(place_names.begin(), place_names.end(), ra.place);
            if (pit == place_names.end()) throw ParseError(ra.line, "undeclared place '" + ra.place + "'");
            auto place = static_cast<std::size_t>(pit - place_names.begin());
            auto& arcs = ra.input ? t.inputs : t.outputs;
            auto existing = std::find_if(arcs.begin(), arcs.end(), [&](const Arc& a) { return a.place == place; });
            if (existing == arcs.end()) {
                arcs.push_back({place, {}});
                existing = std::prev(arcs.end());
            }
            for (const auto& [name, k] : ra.items) {
                auto e = is_color(name) ? Expression::constant(name) : Expression::variable(name);
                auto same = std::find_if(existing->inscription.begin(), existing->inscription.end(),
                                         [&](const auto& p) { return p.first == e; });
                if (same == existing->inscription.end())
                    existing->inscription.emplace_back(e, k);
                else
                    same->second = checked_add(same->second, k);
            }
        }
        auto vars = t.variables();
        auto bound = [&](const Id& v) { return std::binary_search(vars.begin(), vars.end(), v); };
        for (const auto& ra : rt.arcs)
            if (!ra.input)
                for (const auto& [name, k] : ra.items)
                    if (!is_color(name) && !bound(name))
                        throw ParseError(ra.line, "output variable '" + name + "' of '" + rt.name + "' is not bound by an input arc");
        for (const auto& g : rt.guard) {
            if (!bound(g.atom.variable))
                throw ParseError(g.line, "guard variable '" + g.atom.variable + "' of '" + rt.name + "' is not bound by an input arc");
            if (!is_color(g.atom.color)) throw ParseError(g.line, "undeclared color '" + g.atom.color + "' in guard");
            t.guard.push_back(g.atom);
        }
        built.push_back(std::move(t));
    }

    try {
        return Net(std::move(place_names), std::move(colors), std::move(built), Marking(std::move(init)));
    } catch (const std::exception& e) {
        throw ParseError(0, e.what());
    }
}

} // namespace infoflow
