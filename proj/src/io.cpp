#include "gact/io.hpp"

#include "gact/builtins.hpp"

#include <fstream>
#include <iostream>

namespace gact {

namespace {

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::IoError, "cannot open " + path.string());
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
  return j;
}

std::vector<std::vector<int>> int_table(const Json& j, const char* what) {
  require(j.is_array(), ErrorCode::ParseError, std::string(what) + " must be an array of arrays");
  std::vector<std::vector<int>> table;
  for (const Json& row : j) {
    require(row.is_array(), ErrorCode::ParseError, std::string(what) + " rows must be arrays");
    table.push_back(row.get<std::vector<int>>());
  }
  return table;
}

}  // namespace

GroupRef group_from_json(const Json& j) {
  require(j.is_object() && j.contains("name"), ErrorCode::ParseError,
          "group file needs a `name`");
  std::string name = j.at("name").get<std::string>();
  if (j.contains("cayley"))
    return Group::from_cayley(std::move(name), int_table(j.at("cayley"), "cayley"));
  if (j.contains("permutation_generators")) {
    require(j.contains("degree"), ErrorCode::ParseError,
            "permutation-generator groups need a `degree`");
    return Group::from_permutations(std::move(name), j.at("degree").get<int>(),
                                    int_table(j.at("permutation_generators"), "generators"));
  }
  fail(ErrorCode::ParseError, "group file needs `cayley` or `permutation_generators`");
}

GroupRef load_group_file(const std::filesystem::path& path) {
  return group_from_json(read_json_file(path));
}

GroupRef resolve_group_ref(const std::string& ref, const std::filesystem::path& base_dir) {
  std::filesystem::path candidate = base_dir / ref;
  if (std::filesystem::exists(candidate)) return load_group_file(candidate);
  if (std::filesystem::exists(ref)) return load_group_file(ref);
  // fall back to the builtin catalogue
  return group_by_name(ref);
}

GSetRef action_from_json(const Json& j, const std::filesystem::path& base_dir) {
  require(j.is_object() && j.contains("group") && j.contains("kind"), ErrorCode::ParseError,
          "action file needs `group` and `kind`");
  GroupRef g = resolve_group_ref(j.at("group").get<std::string>(), base_dir);
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "regular") return GSet::regular(g);
  if (kind == "natural") return GSet::natural(g);
  if (kind == "coset") {
    require(j.contains("subgroup"), ErrorCode::ParseError, "coset action needs `subgroup`");
    return GSet::cosets(g, Subgroup(g, j.at("subgroup").get<std::vector<int>>()));
  }
  if (kind == "table") {
    require(j.contains("table"), ErrorCode::ParseError, "table action needs `table`");
    return GSet::from_table(g, int_table(j.at("table"), "table"), "table");
  }
  fail(ErrorCode::ParseError, "unknown action kind '" + kind + "'");
}

GSetRef load_action_file(const std::filesystem::path& path) {
  return action_from_json(read_json_file(path), path.parent_path());
}

PointFunction load_function_file(const std::filesystem::path& path) {
  Json j = read_json_file(path);
  require(j.is_object() && j.contains("action") && j.contains("field") && j.contains("values"),
          ErrorCode::ParseError, "function file needs `action`, `field`, `values`");
  GSetRef xs = load_action_file(path.parent_path() / j.at("action").get<std::string>());
  FieldRef fc = field_from_spec(j.at("field").get<std::string>());
  std::vector<FieldValue> values;
  for (const Json& v : j.at("values"))
    values.push_back(FieldValue::parse(fc, v.get<std::string>()));
  return PointFunction(std::move(xs), std::move(fc), std::move(values));
}

BundleRef bundle_from_json(const Json& j, const GroupRef& g) {
  require(j.is_object() && j.contains("field") && j.contains("irreps"), ErrorCode::ParseError,
          "bundle file needs `field` and `irreps`");
  FieldRef e = field_from_spec(j.at("field").get<std::string>());
  std::vector<Irrep> irreps;
  for (const Json& ij : j.at("irreps")) {
    Irrep rho;
    rho.degree = ij.at("degree").get<int>();
    require(ij.contains("matrices"), ErrorCode::ParseError, "irrep needs `matrices`");
    rho.matrices.assign(g->order(), Matrix{});
    std::vector<bool> seen(g->order(), false);
    for (const auto& [key, mat] : ij.at("matrices").items()) {
      int elem = std::stoi(key);
      require(elem >= 0 && elem < g->order() && !seen[elem], ErrorCode::ParseError,
              "bad or repeated element index in matrices");
      seen[elem] = true;
      Matrix rows;
      for (const Json& row : mat) {
        std::vector<FieldValue> r;
        for (const Json& entry : row) r.push_back(FieldValue::parse(e, entry.get<std::string>()));
        rows.push_back(std::move(r));
      }
      rho.matrices[elem] = std::move(rows);
    }
    for (int a = 0; a < g->order(); ++a)
      require(seen[a], ErrorCode::ParseError,
              "bundle misses a matrix for element " + std::to_string(a));
    irreps.push_back(std::move(rho));
  }
  return RepresentationBundle::validated(g, std::move(e), std::move(irreps));
}

BundleRef load_bundle_file(const std::filesystem::path& path) {
  Json j = read_json_file(path);
  require(j.contains("group"), ErrorCode::ParseError, "bundle file needs `group`");
  GroupRef g = resolve_group_ref(j.at("group").get<std::string>(), path.parent_path());
  return bundle_from_json(j, g);
}

// ---------------------------------------------------------------------------

namespace {

Json point_set_json(const std::vector<int>& s) { return Json(s); }

}  // namespace

Json report_to_json(const UncertaintyReport& r) {
  Json j;
  j["group"] = r.group_name;
  j["action"] = r.action_label;
  j["field"] = r.field_spec;
  j["x0"] = r.x0;
  j["supp_size"] = r.supp_size;
  j["dim"] = r.dim;
  j["block_size"] = r.block_size;
  j["lhs"] = r.lhs;
  j["rhs_sharp"] = r.rhs_sharp;
  j["rhs_classical"] = r.rhs_classical;
  j["sharp_equality"] = r.sharp_equality;
  j["classical_equality"] = r.classical_equality;
  if (r.rank_support_value) j["rank_support"] = *r.rank_support_value;
  if (r.certificate) {
    Json c;
    c["kind"] = "coset-indicator-like";
    c["block"] = point_set_json(r.certificate->block_points);
    c["lifted_subgroup"] = point_set_json(r.certificate->lifted_subgroup);
    Json eta = Json::array();
    for (size_t i = 0; i < r.certificate->eta.values.size(); ++i) {
      eta.push_back(Json{{"element", r.certificate->eta.domain.elements[i]},
                         {"value", r.certificate->eta.values[i].to_string()}});
    }
    c["character"] = std::move(eta);
    c["scalar"] = r.certificate->scalar.to_string();
    j["certificate"] = std::move(c);
  }
  return j;
}

std::string report_to_csv(const UncertaintyReport& r, long long f_index) {
  std::string out =
      "group,action,field,f-index,supp,dim,block,lhs,rhs_sharp,rhs_classical,sharp_eq,classical_"
      "eq\n";
  out += r.group_name + "," + r.action_label + "," + r.field_spec + "," +
         std::to_string(f_index) + "," + std::to_string(r.supp_size) + "," +
         std::to_string(r.dim) + "," + std::to_string(r.block_size) + "," +
         std::to_string(r.lhs) + "," + std::to_string(r.rhs_sharp) + "," +
         std::to_string(r.rhs_classical) + "," + (r.sharp_equality ? "1" : "0") + "," +
         (r.classical_equality ? "1" : "0") + "\n";
  return out;
}

Json bound_ledger_to_json(const BoundLedger& ledger) {
  Json j;
  j["supp_f"] = ledger.supp_f;
  j["supp_fhat"] = ledger.supp_fhat;
  j["product"] = ledger.product;
  j["classical_rhs"] = ledger.classical_rhs;
  j["sharpened_rhs"] = ledger.sharpened_rhs;
  j["classical_equality"] = ledger.classical_equality;
  j["sharpened_equality"] = ledger.sharpened_equality;
  if (ledger.decomposition) {
    Json d;
    d["gamma"] = ledger.decomposition->gamma;
    d["subgroup"] = point_set_json(ledger.decomposition->subgroup);
    Json chi = Json::array();
    for (const auto& v : ledger.decomposition->chi_values) chi.push_back(v.to_string());
    d["chi"] = std::move(chi);
    d["scalar"] = ledger.decomposition->scalar.to_string();
    j["decomposition"] = std::move(d);
  }
  return j;
}

Json transform_to_json(const FourierTransform& ft) {
  Json j;
  j["field"] = ft.dual->field()->spec_string();
  Json blocks = Json::array();
  for (size_t b = 0; b < ft.blocks.size(); ++b) {
    Json entry;
    entry["degree"] = ft.dual->bundle()->irreps()[b].degree;
    entry["multiplicity"] = ft.dual->blocks()[b].multiplicity;
    Json rows = Json::array();
    for (const auto& row : ft.blocks[b]) {
      Json r = Json::array();
      for (const auto& v : row) r.push_back(v.to_string());
      rows.push_back(std::move(r));
    }
    entry["coefficients"] = std::move(rows);
    entry["rank"] = ft.blocks[b].empty() || ft.blocks[b][0].empty()
                        ? 0
                        : exact_rank(ft.blocks[b]);
    blocks.push_back(std::move(entry));
  }
  j["blocks"] = std::move(blocks);
  j["rank_support"] = rank_support(ft);
  return j;
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

void emit_report(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  require(out.good(), ErrorCode::IoError, "cannot write " + out_path);
  out << payload;
}

}  // namespace gact
