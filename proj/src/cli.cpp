#include "infoflow/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "infoflow/boolmin.hpp"
#include "infoflow/classification.hpp"
#include "infoflow/cpn.hpp"
#include "infoflow/io.hpp"
#include "infoflow/multiclassification.hpp"
#include "infoflow/stategraph.hpp"

namespace infoflow {

namespace {

struct Options {
    std::string input;
    std::string second_input;
    bool table = false;
    bool multi = false;
    bool counts = false;
    bool capacity_one = false;
    std::vector<std::string> gamma;
    std::vector<std::string> delta;
    std::string typemap;
    std::string tokmap;
    std::string dot_out;
    std::string json_out;
    std::size_t max_nodes = ExploreOptions{}.max_nodes;
};

// Prefixes parse errors with the file they came from.
template <typename F>
auto with_path(const std::string& path, F&& f) {
    try {
        return f();
    } catch (const ParseError& e) {
        throw ParseError(0, path + ": " + e.what());
    }
}

MultiClassification load_classification(const std::string& path) {
    return with_path(path, [&] { return parse_classification_csv(read_file(path)); });
}

Net load_net(const Options& o) {
    auto net = with_path(o.input, [&] { return parse_net(read_file(o.input)); });
    return net.with_capacity(o.capacity_one ? CapacityMode::one_per_type : CapacityMode::unbounded);
}

void note_dropped(const MultiClassification& mc, std::ostream& err) {
    auto dropped = zero_types(mc);
    if (dropped.empty()) return;
    err << "note: dropped all-zero type column(s):";
    for (const auto& t : dropped) err << ' ' << t;
    err << '\n';
}

int cmd_theory(const Options& o, std::ostream& out, std::ostream& err) {
    auto mc = load_classification(o.input);
    Classification c = [&] {
        if (o.multi || !is_binary(mc)) {
            note_dropped(mc, err);
            return unfold(mc);
        }
        return to_binary(mc);
    }();
    auto table = table_from_classification(c);
    auto result = minimize_detailed(table);
    if (!result.proven_minimal) err << "warning: the reported formula is exact but may not be minimal\n";
    out << to_string(result.formula) << '\n';
    if (o.table) write_truth_table(out, table, result.formula);
    return 0;
}

int cmd_unfold(const Options& o, std::ostream& out, std::ostream& err) {
    auto mc = load_classification(o.input);
    note_dropped(mc, err);
    out << write_classification_csv(unfold(mc));
    return 0;
}

std::vector<std::string> split_list(const std::vector<std::string>& raw) {
    std::vector<std::string> out;
    for (const auto& item : raw) {
        std::istringstream in(item);
        std::string part;
        while (std::getline(in, part, ','))
            if (!part.empty()) out.push_back(part);
    }
    return out;
}

std::pair<Id, Count> parse_count_item(const std::string& item) {
    auto eq = item.find('=');
    if (eq == std::string::npos) return {item, 1};
    Count k = 0;
    std::string digits = item.substr(eq + 1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
        throw FormatError("malformed count in '" + item + "', expected name=k");
    return {item.substr(0, eq), k};
}

int cmd_check_seq(const Options& o, std::ostream& out, std::ostream&) {
    auto mc = load_classification(o.input);
    auto gamma_items = split_list(o.gamma);
    auto delta_items = split_list(o.delta);

    std::vector<std::pair<Id, Count>> gamma, delta;
    for (const auto& s : gamma_items) gamma.push_back(o.counts ? parse_count_item(s) : std::pair<Id, Count>{s, 1});
    for (const auto& s : delta_items) delta.push_back(o.counts ? parse_count_item(s) : std::pair<Id, Count>{s, 1});

    IdList unknown;
    for (const auto* side : {&gamma, &delta})
        for (const auto& [name, k] : *side)
            if (std::find(mc.types().begin(), mc.types().end(), name) == mc.types().end() &&
                std::find(unknown.begin(), unknown.end(), name) == unknown.end())
                unknown.push_back(name);
    if (!unknown.empty()) {
        std::string list;
        for (const auto& u : unknown) list += (list.empty() ? "" : ", ") + u;
        throw DomainError("unknown type(s): " + list);
    }

    IdList witnesses;
    if (o.counts) {
        auto to_multiset = [&](const std::vector<std::pair<Id, Count>>& items) {
            CountVector v = CountVector::Zero(static_cast<Eigen::Index>(mc.types().size()));
            for (const auto& [name, k] : items) {
                auto j = static_cast<Eigen::Index>(mc.type_index(name));
                v(j) = checked_add(v(j), k);
            }
            return Multiset(mc.types(), std::move(v));
        };
        MultiSequent s{to_multiset(gamma), to_multiset(delta)};
        for (const auto& a : mc.tokens()) {
            bool ok = multi_satisfies(mc, a, s);
            out << a << ": " << (ok ? "satisfies" : "violates") << '\n';
            if (!ok) witnesses.push_back(a);
        }
    } else {
        if (!is_binary(mc)) throw FormatError("classification has entries greater than 1; use --counts");
        auto c = to_binary(mc);
        Sequent s;
        for (const auto& [name, k] : gamma) s.gamma.insert(name);
        for (const auto& [name, k] : delta) s.delta.insert(name);
        for (const auto& a : c.tokens()) {
            bool ok = satisfies(c, a, s);
            out << a << ": " << (ok ? "satisfies" : "violates") << '\n';
            if (!ok) witnesses.push_back(a);
        }
    }
    if (witnesses.empty()) {
        out << "constraint: yes\n";
    } else {
        out << "constraint: no, witness token" << (witnesses.size() > 1 ? "s " : " ");
        for (std::size_t i = 0; i < witnesses.size(); ++i) out << (i ? ", " : "") << witnesses[i];
        out << '\n';
    }
    return 0;
}

int cmd_check_info(const Options& o, std::ostream& out, std::ostream& err) {
    auto a = load_classification(o.input);
    auto c = load_classification(o.second_input);
    if (!is_binary(a) || !is_binary(c)) throw FormatError("infomorphisms are checked between binary classifications");
    Infomorphism f{to_binary(a), to_binary(c),
                   with_path(o.typemap, [&] { return parse_map_file(read_file(o.typemap)); }),
                   with_path(o.tokmap, [&] { return parse_map_file(read_file(o.tokmap)); })};
    auto missing = missing_map_entries(f);
    if (!missing.empty()) {
        err << "error: maps are not total:\n";
        for (const auto& m : missing) err << "  " << m << '\n';
        return 1;
    }
    if (auto cx = infomorphism_counterexample(f)) {
        out << "infomorphism: no, counterexample (" << cx->first << ", " << cx->second << ")\n";
        return 0;
    }
    out << "infomorphism: yes\n";
    out << "prop1 inclusion: " << (verify_prop1_inclusion(f) ? "holds" : "fails") << '\n';
    return 0;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write '" + path + "'");
    f << text;
}

int cmd_reach(const Options& o, std::ostream& out, std::ostream&) {
    auto net = load_net(o);
    auto g = explore(net, {o.max_nodes});
    std::string dot = o.dot_out.empty() ? "" : export_dot(net, g);
    std::string json = o.json_out.empty() ? "" : export_json(net, g);
    if (!o.dot_out.empty()) write_text(o.dot_out, dot);
    if (!o.json_out.empty()) write_text(o.json_out, json);
    out << "nodes: " << g.nodes.size() << ", edges: " << g.edges.size() << '\n';
    return 0;
}

int cmd_kb(const Options& o, std::ostream& out, std::ostream&) {
    auto net = load_net(o);
    auto g = explore(net, {o.max_nodes});
    write_kb(out, build_kb(net, g));
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Classification theories, multi-classifications and colored Petri net knowledge bases"};
    app.name("infoflow");
    app.require_subcommand(1, 1);
    Options o;

    auto* theory = app.add_subcommand("theory", "Minimized DNF theory of a classification CSV");
    theory->add_option("path", o.input, "classification CSV")->required();
    theory->add_flag("--table", o.table, "also print the full truth table");
    theory->add_flag("--multi", o.multi, "unfold even when every entry is 0 or 1");

    auto* unfold_cmd = app.add_subcommand("unfold", "Unfold a multi-classification CSV into a binary one");
    unfold_cmd->add_option("path", o.input, "multi-classification CSV")->required();

    auto* check_seq = app.add_subcommand("check-seq", "Check a sequent against every token");
    check_seq->add_option("path", o.input, "classification CSV")->required();
    check_seq->add_option("--gamma", o.gamma, "antecedent types (name or name=k with --counts)");
    check_seq->add_option("--delta", o.delta, "consequent types (name or name=k with --counts)");
    check_seq->add_flag("--counts", o.counts, "multiset sequents over a multi-classification");

    auto* check_info = app.add_subcommand("check-info", "Check the infomorphism biconditional");
    check_info->add_option("source", o.input, "source classification CSV")->required();
    check_info->add_option("target", o.second_input, "target classification CSV")->required();
    check_info->add_option("--typemap", o.typemap, "source type -> target type, one 'from,to' per line")->required();
    check_info->add_option("--tokmap", o.tokmap, "target token -> source token, one 'from,to' per line")->required();

    auto* reach = app.add_subcommand("reach", "Explore the reachability graph of a net");
    reach->add_option("path", o.input, "net file")->required();
    reach->add_flag("--capacity-one", o.capacity_one, "at most one token of each color per place");
    reach->add_option("--dot", o.dot_out, "write the graph as DOT");
    reach->add_option("--json", o.json_out, "write the graph as JSON");
    reach->add_option("--max-nodes", o.max_nodes, "node budget")->check(CLI::PositiveNumber);

    auto* kb = app.add_subcommand("kb", "Knowledge base of a net's reachable markings");
    kb->add_option("path", o.input, "net file")->required();
    kb->add_flag("--capacity-one", o.capacity_one, "at most one token of each color per place");
    kb->add_option("--max-nodes", o.max_nodes, "node budget")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (theory->parsed()) return cmd_theory(o, out, err);
        if (unfold_cmd->parsed()) return cmd_unfold(o, out, err);
        if (check_seq->parsed()) return cmd_check_seq(o, out, err);
        if (check_info->parsed()) return cmd_check_info(o, out, err);
        if (reach->parsed()) return cmd_reach(o, out, err);
        if (kb->parsed()) return cmd_kb(o, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

} // namespace infoflow
