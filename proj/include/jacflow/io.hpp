#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "jacflow/covers.hpp"
#include "jacflow/dartgraph.hpp"
#include "jacflow/finite_group.hpp"
#include "jacflow/jacobian.hpp"
#include "jacflow/permutation.hpp"

namespace jacflow::io {

using Json = nlohmann::json;

/// Reads the whole file; throws Parse if it cannot be opened.
std::string read_file(const std::filesystem::path& path);
/// Writes through a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);
/// Throws Parse with the parser's byte offset on malformed JSON.
Json parse_json(const std::string& text);
Json load_json(const std::filesystem::path& path);

// Integers that fit in 64 bits become JSON numbers, others decimal strings.
Json integer_json(const Integer& v);

/// {"darts": N, "lambda": [...], "vertices": [[...], ...]}. Throws Parse
/// naming the offending key and index, or InvalidGraph for structural defects.
DartGraph graph_from_json(const Json& j);
Json graph_to_json(const DartGraph& g);

/// {"order": n, "table": [[...]]}. Throws Parse or InvalidGroup.
FiniteGroup group_from_json(const Json& j);
Json group_to_json(const FiniteGroup& g);

/// Image array. Throws Parse.
Permutation permutation_from_json(const Json& j);
Json permutation_to_json(const Permutation& p);

/// {"base", "group", "xi", optional "tree" as dart ids}. The tree is the set
/// of edges containing the listed darts. Throws Parse.
VoltageAssignment voltage_from_json(const Json& j);
Json voltage_to_json(const VoltageAssignment& v);

/// {"total", "base", "projection"}.
CoveringMap covering_from_json(const Json& j);
Json covering_to_json(const CoveringMap& c);

/// {"factors", "order" (decimal string), "xi" (coordinates per D+ dart)}.
Json jacobian_report(const DartGraph& g, const JFlow& flow);

/// Two-space indented JSON followed by a newline.
std::string dump(const Json& j);

}  // namespace jacflow::io
