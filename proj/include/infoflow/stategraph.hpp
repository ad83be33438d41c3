#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "infoflow/boolmin.hpp"
#include "infoflow/cpn.hpp"

namespace infoflow {

struct Edge {
    std::size_t from;
    std::size_t to;
    std::size_t transition; // index into Net::transitions()
    Binding binding;
};

/// Reachability graph. Node ids follow BFS layers, canonical marking order within a layer;
/// edges are ordered by (from, transition, binding).
struct StateGraph {
    std::vector<Marking> nodes;
    std::vector<Edge> edges;
    std::size_t root = 0;
};

struct ExploreOptions {
    std::size_t max_nodes = 1'000'000;
};

StateGraph explore(const Net& n, const ExploreOptions& options = {});

/// Theory of one marking: places as tokens, colors as types, unfolded and minimized.
/// A marking with no tokens at all yields True over no variables.
DnfFormula marking_theory(const Net& n, const Marking& m);

struct KnowledgeBase {
    struct Entry {
        std::size_t node;
        DnfFormula formula;
    };
    struct Theory {
        DnfFormula formula;             // formula of the first node sharing it
        std::vector<std::size_t> nodes; // every node whose theory is semantically equal
    };
    std::vector<Entry> entries;   // one per node, in node order
    std::vector<Theory> distinct; // ordered by first node
};

KnowledgeBase build_kb(const Net& n, const StateGraph& g);

/// One `<count> <formula>` line per distinct theory, then `markings: N, distinct theories: D`.
void write_kb(std::ostream& os, const KnowledgeBase& kb);

std::string edge_label(const Net& n, const Edge& e);
std::string export_dot(const Net& n, const StateGraph& g);
std::string export_json(const Net& n, const StateGraph& g);

} // namespace infoflow
