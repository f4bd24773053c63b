#ifndef GACT_IO_HPP
#define GACT_IO_HPP

#include <json.hpp>

#include <filesystem>
#include <string>

#include "gact/fourier.hpp"
#include "gact/uncertainty.hpp"

namespace gact {

using Json = nlohmann::json;

// Group file: {"name": str, "cayley": [[int]]}
//          or {"name": str, "degree": int, "permutation_generators": [[int]]}
GroupRef group_from_json(const Json& j);
GroupRef load_group_file(const std::filesystem::path& path);

// Action file: {"group": file-ref-or-builtin, "kind": "regular" | "natural" |
//               "coset" | "table", "subgroup": [int], "table": [[int]]}
GSetRef action_from_json(const Json& j, const std::filesystem::path& base_dir);
GSetRef load_action_file(const std::filesystem::path& path);

// Function file: {"action": file-ref, "field": spec, "values": [value-string]}
PointFunction load_function_file(const std::filesystem::path& path);

// Bundle file: {"group": file-ref-or-builtin, "field": spec,
//               "irreps": [{"degree": int, "matrices": {"<elem>": [[value-string]]}}]}
BundleRef load_bundle_file(const std::filesystem::path& path);
BundleRef bundle_from_json(const Json& j, const GroupRef& g);

/// group reference that is either a path (relative to base_dir) or a builtin name
GroupRef resolve_group_ref(const std::string& ref, const std::filesystem::path& base_dir);

Json report_to_json(const UncertaintyReport& r);
std::string report_to_csv(const UncertaintyReport& r, long long f_index = 0);
Json bound_ledger_to_json(const BoundLedger& ledger);
Json transform_to_json(const FourierTransform& ft);

/// canonical serialization: sorted keys, two-space indent, trailing newline
std::string canonical_dump(const Json& j);

/// writes to the path, or stdout when path is empty; byte-stable for equal input
void emit_report(const std::string& payload, const std::string& out_path);

}  // namespace gact

#endif
