#pragma once

#include <map>
#include <string>
#include <string_view>

#include "infoflow/multiclassification.hpp"

namespace infoflow {

/// Classification CSV: header `"",type1,...`, then `token,v1,...` rows of naturals.
/// Whitespace around cells is trimmed, `#` lines are comments. Throws ParseError.
MultiClassification parse_classification_csv(std::string_view text);

template <typename Scalar>
std::string write_classification_csv(const BasicClassification<Scalar>& c) {
    std::string out = "\"\"";
    for (const auto& t : c.types()) out += "," + t;
    out += '\n';
    for (std::size_t i = 0; i < c.tokens().size(); ++i) {
        out += c.tokens()[i];
        for (std::size_t j = 0; j < c.types().size(); ++j)
            out += "," + std::to_string(static_cast<Count>(
                             c.incidence()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))));
        out += '\n';
    }
    return out;
}

/// Two-column `from,to` lines; `#` comments. Throws ParseError on malformed or repeated keys.
std::map<Id, Id> parse_map_file(std::string_view text);

/// Whole file contents; throws std::runtime_error naming the path on failure.
std::string read_file(const std::string& path);

} // namespace infoflow
