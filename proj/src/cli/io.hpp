#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "twisted/automorphism.hpp"
#include "twisted/group.hpp"
#include "twisted/int_matrix.hpp"

namespace twisted::cli {

using Json = nlohmann::ordered_json;

/// Reads a JSON document; syntax errors become InputError with line and column.
Json load_json(const std::filesystem::path& path);

/// Group descriptions: {"kind": "cyclic" | "dihedral" | "symmetric" | "table" |
/// "permutation" | "product" | "semidirect", ...}. Nested groups may be
/// inline objects or paths relative to `base_dir`.
GroupPtr parse_group(const Json& doc, const std::filesystem::path& base_dir);
GroupPtr load_group(const std::filesystem::path& path);

/// {"kind": "identity" | "inner" | "generators" | "map", ...}
Automorphism parse_automorphism(const Json& doc, const GroupPtr& group);
Automorphism load_automorphism(const std::filesystem::path& path, const GroupPtr& group);

/// Square array of integers; entries may be JSON integers or decimal strings.
IntMatrix parse_matrix(const Json& rows);
/// {"matrix": [[...], ...]}
IntMatrix load_matrix(const std::filesystem::path& path);
/// {"homology": [H0, H1, ...]}, each a square array ([] for a zero group).
std::vector<IntMatrix> load_homology(const std::filesystem::path& path);

/// "1,-2,3" -> (1,-2,3)
IntVector parse_vector(const std::string& text);

Json to_json(const IntVector& v);
Json to_json(const IntMatrix& m);

} // namespace twisted::cli
