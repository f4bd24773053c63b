#ifndef GACT_HARNESS_HPP
#define GACT_HARNESS_HPP

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

#include "gact/builtins.hpp"
#include "gact/uncertainty.hpp"

namespace gact {

/**
 * Batch verification driver. Enumerates (group, transitive action, field,
 * normalized function) instances, analyzes every one, and tallies the
 * structural checks. Ledgers are deterministic for a fixed config and seed,
 * independent of the parallelism degree.
 */
struct SweepConfig {
  std::vector<std::string> groups;  // builtin names or group-file paths
  std::vector<std::string> fields;  // field spec strings
  std::string actions = "all-transitive";  // or "regular"
  int max_order = 8;
  std::string normalize = "leading-one";
  int jobs = 1;
  unsigned long long seed = 1;

  static SweepConfig from_json(const nlohmann::json& j);
};

struct InstanceRow {
  std::string group, action, field;
  long long f_index = 0;
  int supp = 0, dim = 0, block = 0;
  long long lhs = 0, rhs_sharp = 0, rhs_classical = 0;
  bool sharp_eq = false, classical_eq = false;
};

struct ViolationEntry {
  std::string group, action, field;
  long long f_index = 0;
  std::string reason;
};

struct CheckTally {
  long long pass = 0;
  long long fail = 0;
};

struct SweepLedger {
  long long instance_count = 0;
  std::vector<InstanceRow> rows;
  std::vector<ViolationEntry> violations;
  std::vector<InstanceRow> sharp_equality_atlas;
  std::vector<InstanceRow> classical_equality_atlas;
  std::map<std::string, CheckTally> checks;
  unsigned long long seed = 0;
  // wall time is kept out of the serialized ledger so that equal configs
  // produce byte-identical output
  double elapsed_seconds = 0.0;

  bool clean() const;
  long long total_failures() const;
};

/// all nonzero functions on m points over a finite field, first nonzero value
/// scaled to one; index layout is leading-position-major
long long normalized_function_count(long long field_size, int points);
PointFunction normalized_function(const GSetRef& xs, const FieldRef& fc,
                                  const std::vector<FieldValue>& elements, long long index);

/// finite-field element list in canonical order (zero first)
std::vector<FieldValue> all_field_elements(const FieldRef& fc);

/// closed-form instance count for a config, computed independently of the sweep
long long expected_instance_count(const SweepConfig& cfg);

SweepLedger run_sweep(const SweepConfig& cfg);

/// property suites for the structural facts behind the bounds; >= 200 seeded
/// random instances per check plus exhaustive small cases
SweepLedger run_verification(const SweepConfig& cfg);

nlohmann::json ledger_to_json(const SweepLedger& ledger);
std::string ledger_to_csv(const SweepLedger& ledger);

std::vector<GroupRef> resolve_config_groups(const SweepConfig& cfg);
std::vector<GSetRef> transitive_actions(const GroupRef& g, const std::string& actions_mode);

/// the bundled S3 irreducible representations (trivial, sign, standard) over
/// the requested field (entries are integers, so any field works)
BundleRef s3_bundle(const GroupRef& s3, const FieldRef& e);

}  // namespace gact

#endif
