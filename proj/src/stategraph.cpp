#include "infoflow/stategraph.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace infoflow {

StateGraph explore(const Net& n, const ExploreOptions& options) {
    if (n.capacity_mode() == CapacityMode::one_per_type && !n.initial_marking().respects_capacity_one())
        throw DomainError("initial marking holds more than one token of a color in some place");

    StateGraph g;
    std::unordered_map<Marking, std::size_t, MarkingHash> index;
    g.nodes.push_back(n.initial_marking());
    index.emplace(n.initial_marking(), 0);

    struct Found {
        std::size_t from;
        std::size_t transition;
        Binding binding;
        Marking target;
    };

    std::vector<std::size_t> frontier{0};
    while (!frontier.empty()) {
        std::vector<Found> found;
        for (auto id : frontier)
            for (std::size_t t = 0; t < n.transitions().size(); ++t)
                for (auto& b : enabled_bindings(n, g.nodes[id], t)) {
                    auto next = fire(n, g.nodes[id], t, b);
                    found.push_back({id, t, std::move(b), std::move(next)});
                }

        std::vector<Marking> fresh;
        for (const auto& f : found)
            if (!index.contains(f.target)) fresh.push_back(f.target);
        std::sort(fresh.begin(), fresh.end());
        fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());
        if (g.nodes.size() + fresh.size() > options.max_nodes)
            throw ResourceError("state space exceeds the node budget of " + std::to_string(options.max_nodes) +
                                " (" + std::to_string(g.nodes.size()) + " nodes explored, frontier of " +
                                std::to_string(fresh.size()) + " new markings)");

        frontier.clear();
        for (auto& m : fresh) {
            index.emplace(m, g.nodes.size());
            frontier.push_back(g.nodes.size());
            g.nodes.push_back(std::move(m));
        }
        for (auto& f : found) g.edges.push_back({f.from, index.at(f.target), f.transition, std::move(f.binding)});
    }
    return g;
}

DnfFormula marking_theory(const Net& n, const Marking& m) {
    auto mc = to_multiclassification(n, m);
    if ((mc.incidence().array() == 0).all()) return DnfFormula::constant(true);
    return minimize(table_from_classification(unfold(mc)));
}

KnowledgeBase build_kb(const Net& n, const StateGraph& g) {
    KnowledgeBase kb;
    for (std::size_t id = 0; id < g.nodes.size(); ++id) {
        auto f = marking_theory(n, g.nodes[id]);
        auto same = std::find_if(kb.distinct.begin(), kb.distinct.end(), [&](const KnowledgeBase::Theory& t) {
            return semantically_equal(t.formula, f, united_domain(t.formula.variables(), f.variables()));
        });
        if (same == kb.distinct.end())
            kb.distinct.push_back({f, {id}});
        else
            same->nodes.push_back(id);
        kb.entries.push_back({id, std::move(f)});
    }
    return kb;
}

void write_kb(std::ostream& os, const KnowledgeBase& kb) {
    for (const auto& t : kb.distinct) os << t.nodes.size() << ' ' << to_string(t.formula) << '\n';
    os << "markings: " << kb.entries.size() << ", distinct theories: " << kb.distinct.size() << '\n';
}

std::string edge_label(const Net& n, const Edge& e) {
    return n.transitions().at(e.transition).name + "[" + to_string(e.binding) + "]";
}

namespace {
std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}
} // namespace

std::string export_dot(const Net& n, const StateGraph& g) {
    std::ostringstream os;
    os << "digraph stategraph {\n";
    os << "  node [shape=box];\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        os << "  n" << i << " [label=\"" << dot_escape(to_string(n, g.nodes[i])) << "\"";
        if (i == g.root) os << ", peripheries=2";
        os << "];\n";
    }
    for (const auto& e : g.edges)
        os << "  n" << e.from << " -> n" << e.to << " [label=\"" << dot_escape(edge_label(n, e)) << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string export_json(const Net& n, const StateGraph& g) {
    using json = nlohmann::ordered_json;
    json nodes = json::array();
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        json marking = json::object();
        for (std::size_t p = 0; p < n.places().size(); ++p) {
            json colors = json::object();
            for (std::size_t c = 0; c < n.colors().size(); ++c)
                if (auto k = g.nodes[i](p, c)) colors[n.colors()[c]] = k;
            marking[n.places()[p]] = std::move(colors);
        }
        nodes.push_back({{"id", i}, {"marking", std::move(marking)}});
    }
    json edges = json::array();
    for (const auto& e : g.edges) {
        json binding = json::object();
        for (const auto& [v, c] : e.binding) binding[v] = c;
        edges.push_back({{"from", e.from}, {"to", e.to}, {"trans", n.transitions()[e.transition].name}, {"binding", std::move(binding)}});
    }
    json out = {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}, {"root", g.root}};
    return out.dump(2) + "\n";
}

} // namespace infoflow
