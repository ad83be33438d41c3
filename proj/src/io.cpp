#include "infoflow/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace infoflow {

namespace {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_cells(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    std::istringstream in(line);
    while (std::getline(in, cur, ',')) cells.push_back(trim(cur));
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    for (auto& c : cells)
        if (c.size() >= 2 && c.front() == '"' && c.back() == '"') c = c.substr(1, c.size() - 2);
    return cells;
}

// Non-comment, non-blank lines with their 1-based numbers.
std::vector<std::pair<std::size_t, std::string>> content_lines(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string>> out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        ++n;
        auto t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        out.emplace_back(n, std::move(t));
    }
    return out;
}

Count parse_natural(const std::string& cell, std::size_t line) {
    if (cell.empty()) throw ParseError(line, "empty cell");
    if (cell.front() == '-') throw ParseError(line, "negative value '" + cell + "'");
    Count v = 0;
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (ec == std::errc::result_out_of_range) throw ParseError(line, "value '" + cell + "' is out of range");
    if (ec != std::errc() || ptr != cell.data() + cell.size())
        throw ParseError(line, "value '" + cell + "' is not a natural number");
    return v;
}

} // namespace

MultiClassification parse_classification_csv(std::string_view text) {
    auto lines = content_lines(text);
    if (lines.empty()) throw ParseError(0, "empty classification file");

    auto header = split_cells(lines.front().second);
    if (header.size() < 2) throw ParseError(lines.front().first, "header declares no types");
    IdList types(header.begin() + 1, header.end());
    for (const auto& t : types)
        if (t.empty()) throw ParseError(lines.front().first, "empty type name in header");

    IdList tokens;
    std::vector<std::vector<Count>> rows;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto& [n, line] = lines[k];
        auto cells = split_cells(line);
        if (cells.size() != header.size())
            throw ParseError(n, "row has " + std::to_string(cells.size()) + " cells, header has " +
                                    std::to_string(header.size()));
        if (cells[0].empty()) throw ParseError(n, "empty token name");
        tokens.push_back(cells[0]);
        std::vector<Count> row;
        for (std::size_t j = 1; j < cells.size(); ++j) row.push_back(parse_natural(cells[j], n));
        rows.push_back(std::move(row));
    }
    if (tokens.empty()) throw ParseError(lines.back().first, "classification has no tokens");

    MultiClassification::Matrix m(static_cast<Eigen::Index>(tokens.size()), static_cast<Eigen::Index>(types.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < types.size(); ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    try {
        return MultiClassification(std::move(tokens), std::move(types), std::move(m));
    } catch (const DomainError& e) {
        throw ParseError(0, e.what());
    }
}

std::map<Id, Id> parse_map_file(std::string_view text) {
    std::map<Id, Id> out;
    for (const auto& [n, line] : content_lines(text)) {
        auto cells = split_cells(line);
        if (cells.size() != 2 || cells[0].empty() || cells[1].empty())
            throw ParseError(n, "expected 'from,to'");
        if (!out.emplace(cells[0], cells[1]).second) throw ParseError(n, "'" + cells[0] + "' is mapped twice");
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace infoflow
