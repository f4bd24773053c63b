#include "gact/harness.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <future>
#include <sstream>

#include "gact/io.hpp"

namespace gact {

SweepConfig SweepConfig::from_json(const nlohmann::json& j) {
  SweepConfig cfg;
  require(j.is_object(), ErrorCode::ParseError, "config must be a JSON object");
  if (j.contains("groups")) cfg.groups = j.at("groups").get<std::vector<std::string>>();
  if (j.contains("fields")) cfg.fields = j.at("fields").get<std::vector<std::string>>();
  if (j.contains("actions")) cfg.actions = j.at("actions").get<std::string>();
  if (j.contains("max_order")) cfg.max_order = j.at("max_order").get<int>();
  if (j.contains("normalize")) cfg.normalize = j.at("normalize").get<std::string>();
  if (j.contains("jobs")) cfg.jobs = j.at("jobs").get<int>();
  if (j.contains("seed")) cfg.seed = j.at("seed").get<unsigned long long>();
  require(cfg.normalize == "leading-one", ErrorCode::InputError,
          "only leading-one normalization is implemented");
  require(cfg.actions == "all-transitive" || cfg.actions == "regular", ErrorCode::InputError,
          "actions must be 'all-transitive' or 'regular'");
  return cfg;
}

bool SweepLedger::clean() const { return violations.empty() && total_failures() == 0; }

long long SweepLedger::total_failures() const {
  long long fails = 0;
  for (const auto& [name, tally] : checks) fails += tally.fail;
  return fails;
}

std::vector<FieldValue> all_field_elements(const FieldRef& fc) {
  require(fc->characteristic() > 0, ErrorCode::CapExceeded,
          "cannot enumerate an infinite field");
  long long q = 1;
  for (int i = 0; i < fc->degree(); ++i) {
    q *= fc->characteristic();
    require(q <= 4096, ErrorCode::CapExceeded, "field too large to enumerate");
  }
  std::vector<FieldValue> out;
  out.reserve(q);
  for (long long code = 0; code < q; ++code) {
    std::vector<Rat> coeffs(fc->degree());
    long long t = code;
    for (int i = 0; i < fc->degree(); ++i) {
      coeffs[i] = Rat(BigInt(t % fc->characteristic()));
      t /= fc->characteristic();
    }
    out.push_back(FieldValue::from_coefficients(fc, coeffs));
  }
  return out;
}

long long normalized_function_count(long long field_size, int points) {
  long long total = 0, power = 1;
  for (int i = 0; i < points; ++i) {
    total += power;
    power *= field_size;
  }
  return total;  // (q^m - 1) / (q - 1)
}

PointFunction normalized_function(const GSetRef& xs, const FieldRef& fc,
                                  const std::vector<FieldValue>& elements, long long index) {
  const int m = xs->size();
  const long long q = static_cast<long long>(elements.size());
  std::vector<FieldValue> values(m, FieldValue::zero(fc));
  long long rest = index;
  for (int lead = 0; lead < m; ++lead) {
    long long block = 1;
    for (int t = 0; t < m - 1 - lead; ++t) block *= q;
    if (rest >= block) {
      rest -= block;
      continue;
    }
    values[lead] = FieldValue::one(fc);
    for (int pos = lead + 1; pos < m; ++pos) {
      values[pos] = elements[rest % q];
      rest /= q;
    }
    return PointFunction(xs, fc, std::move(values));
  }
  fail(ErrorCode::InputError, "function index out of range");
}

std::vector<GroupRef> resolve_config_groups(const SweepConfig& cfg) {
  require(!cfg.groups.empty(), ErrorCode::InputError, "config lists no groups");
  std::vector<GroupRef> out;
  for (const std::string& ref : cfg.groups) {
    GroupRef g = std::filesystem::exists(ref) ? load_group_file(ref) : group_by_name(ref);
    require(g->order() <= cfg.max_order, ErrorCode::CapExceeded,
            g->name() + " exceeds max_order " + std::to_string(cfg.max_order));
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<GSetRef> transitive_actions(const GroupRef& g, const std::string& actions_mode) {
  std::vector<GSetRef> out;
  if (actions_mode == "regular") {
    out.push_back(GSet::regular(g));
    return out;
  }
  // one coset action per conjugacy class of subgroups covers every transitive
  // action up to equivariant bijection
  for (const Subgroup& h : subgroup_conjugacy_representatives(g)) out.push_back(GSet::cosets(g, h));
  return out;
}

// ---------------------------------------------------------------------------
// sweep

namespace {

struct TripleResult {
  std::vector<InstanceRow> rows;
  std::vector<ViolationEntry> violations;
  std::map<std::string, CheckTally> checks;
};

void tally(std::map<std::string, CheckTally>& checks, const std::string& name, bool pass) {
  if (pass)
    ++checks[name].pass;
  else
    ++checks[name].fail;
}

TripleResult sweep_triple(const GroupRef& g, const GSetRef& xs, const FieldRef& fc) {
  TripleResult res;
  std::vector<FieldValue> elements = all_field_elements(fc);
  const long long count = normalized_function_count(static_cast<long long>(elements.size()),
                                                    xs->size());
  for (long long idx = 0; idx < count; ++idx) {
    PointFunction f = normalized_function(xs, fc, elements, idx);
    InstanceRow row;
    row.group = g->name();
    row.action = xs->label();
    row.field = fc->spec_string();
    row.f_index = idx;
    try {
      UncertaintyReport rep = analyze(f);
      row.supp = rep.supp_size;
      row.dim = rep.dim;
      row.block = rep.block_size;
      row.lhs = rep.lhs;
      row.rhs_sharp = rep.rhs_sharp;
      row.rhs_classical = rep.rhs_classical;
      row.sharp_eq = rep.sharp_equality;
      row.classical_eq = rep.classical_equality;
      tally(res.checks, "sharp_bound", true);
      tally(res.checks, "classical_equality_classification",
            rep.certificate.has_value() == rep.classical_equality);

      if (row.supp < xs->size()) {
        try {
          greedy_translate_bound(f, rep.x0);
          tally(res.checks, "translate_bound", true);
        } catch (const std::exception& e) {
          tally(res.checks, "translate_bound", false);
          res.violations.push_back({row.group, row.action, row.field, idx,
                                    std::string("translate_bound: ") + e.what()});
        }
      }
      res.rows.push_back(row);
    } catch (const std::exception& e) {
      tally(res.checks, "sharp_bound", false);
      res.violations.push_back({row.group, row.action, row.field, idx, e.what()});
    }
  }
  return res;
}

}  // namespace

SweepLedger run_sweep(const SweepConfig& cfg) {
  auto started = std::chrono::steady_clock::now();
  SweepLedger ledger;
  ledger.seed = cfg.seed;

  std::vector<GroupRef> groups = resolve_config_groups(cfg);
  struct Triple {
    GroupRef g;
    GSetRef xs;
    FieldRef fc;
  };
  std::vector<Triple> triples;
  for (const GroupRef& g : groups)
    for (const GSetRef& xs : transitive_actions(g, cfg.actions))
      for (const std::string& field_spec : cfg.fields)
        triples.push_back({g, xs, field_from_spec(field_spec)});

  std::vector<TripleResult> results(triples.size());
  if (cfg.jobs <= 1) {
    for (size_t i = 0; i < triples.size(); ++i)
      results[i] = sweep_triple(triples[i].g, triples[i].xs, triples[i].fc);
  } else {
    std::vector<std::future<TripleResult>> futures;
    futures.reserve(triples.size());
    for (const Triple& t : triples)
      futures.push_back(std::async(std::launch::async,
                                   [&t] { return sweep_triple(t.g, t.xs, t.fc); }));
    for (size_t i = 0; i < futures.size(); ++i) results[i] = futures[i].get();
  }

  // merge in triple order so the ledger is independent of scheduling
  for (const TripleResult& res : results) {
    for (const InstanceRow& row : res.rows) {
      ++ledger.instance_count;
      if (row.sharp_eq) ledger.sharp_equality_atlas.push_back(row);
      if (row.classical_eq) ledger.classical_equality_atlas.push_back(row);
      ledger.rows.push_back(row);
    }
    for (const ViolationEntry& v : res.violations) {
      ++ledger.instance_count;
      ledger.violations.push_back(v);
    }
    for (const auto& [name, t] : res.checks) {
      ledger.checks[name].pass += t.pass;
      ledger.checks[name].fail += t.fail;
    }
  }
  ledger.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return ledger;
}

long long expected_instance_count(const SweepConfig& cfg) {
  long long total = 0;
  for (const GroupRef& g : resolve_config_groups(cfg)) {
    for (const GSetRef& xs : transitive_actions(g, cfg.actions)) {
      for (const std::string& field_spec : cfg.fields) {
        FieldRef fc = field_from_spec(field_spec);
        long long q = 1;
        for (int i = 0; i < fc->degree(); ++i) q *= fc->characteristic();
        total += normalized_function_count(q, xs->size());
      }
    }
  }
  return total;
}

// ---------------------------------------------------------------------------
// verification suites

namespace {

ElemSet random_subset(int n, Rng& rng) {
  ElemSet out;
  for (int i = 0; i < n; ++i)
    if (rng.flip()) out.push_back(i);
  return out;
}

ElemSet random_nonempty_subset(int n, Rng& rng) {
  for (;;) {
    ElemSet s = random_subset(n, rng);
    if (!s.empty()) return s;
  }
}

PointSet random_proper_nonempty_subset(int n, Rng& rng) {
  for (;;) {
    PointSet s = random_subset(n, rng);
    if (!s.empty() && static_cast<int>(s.size()) < n) return s;
  }
}

// a random union of left cosets of the stabilizer of x0
ElemSet random_base_closed(const GSet& xs, int x0, Rng& rng) {
  Subgroup stab = point_stabilizer(xs, x0);
  auto cosets = left_cosets(xs.group(), stab);
  ElemSet out;
  for (const auto& coset : cosets)
    if (rng.flip()) out = set_union(out, coset);
  return out;
}

void verify_structure_on(const GSet& xs, Rng& rng, int rounds,
                         std::map<std::string, CheckTally>& checks) {
  const GroupRef& g = xs.group();
  const int n = g->order(), m = xs.size();

  auto guarded = [&](const std::string& name, auto&& body) {
    try {
      tally(checks, name, body());
    } catch (const std::exception&) {
      tally(checks, name, false);
    }
  };

  for (int r = 0; r < rounds; ++r) {
    int x0 = rng.below(m);
    Subgroup stab = point_stabilizer(xs, x0);
    int k = stab.order();

    guarded("closure_criteria_agree", [&] {
      check_base_closed(xs, x0, random_subset(n, rng));
      return true;
    });

    guarded("lift_size_bound", [&] {
      ElemSet a = random_subset(n, rng);
      PointSet image;
      for (int e : a) image.push_back(xs.apply(e, x0));
      std::sort(image.begin(), image.end());
      image.erase(std::unique(image.begin(), image.end()), image.end());
      return a.size() <= static_cast<size_t>(k) * image.size();
    });

    guarded("closed_set_algebra", [&] {
      ElemSet a = random_base_closed(xs, x0, rng);
      ElemSet b = random_base_closed(xs, x0, rng);
      ElemSet arbitrary = random_subset(n, rng);
      if (!a.empty() && !check_base_closed(xs, x0, elem_product_set(g, arbitrary, a)).closed())
        return false;
      if (!check_base_closed(xs, x0, set_union(a, b)).closed()) return false;
      if (!check_base_closed(xs, x0, set_intersect(a, b)).closed()) return false;
      // images through x0 commute with intersection for closed sets
      auto image = [&](const ElemSet& s) {
        PointSet out;
        for (int e : s) out.push_back(xs.apply(e, x0));
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
      };
      return image(set_intersect(a, b)) == set_intersect(image(a), image(b));
    });

    guarded("lift_block_sizes", [&] {
      PointSet s = random_nonempty_subset(m, rng);
      int base = s[0];
      ElemSet lift = point_preimage(xs, base, s);
      if (lift.size() != static_cast<size_t>(point_stabilizer(xs, base).order()) * s.size())
        return false;
      auto parts = block_decomposition(xs, base, s);  // self-checking
      PointSet block = associated_block(xs, base, s);
      return parts.size() * block.size() == s.size();
    });

    guarded("block_complement_disjoint", [&] {
      PointSet s = random_proper_nonempty_subset(m, rng);
      int base = s[0];
      PointSet block = associated_block(xs, base, s);
      ElemSet lift = point_preimage(xs, base, s);
      ElemSet complement_lift = set_difference(full_range(n), lift);
      for (int ap : complement_lift) {
        PointSet moved = translate_set(xs, g->inv(ap), s);
        if (!set_intersect(moved, block).empty()) return false;
      }
      return true;
    });

    guarded("translate_cover_equivalence", [&] {
      ElemSet a = random_subset(n, rng);
      PointSet s = random_proper_nonempty_subset(m, rng);
      PointSet covered = translate_set_by(xs, a, s);
      bool not_covering = static_cast<int>(covered.size()) < m;
      PointSet complement = set_difference(full_range(m), s);
      bool witness = false;
      for (int x = 0; x < m && !witness; ++x) {
        bool inside = true;
        for (int e : a)
          if (!set_contains(complement, xs.apply(g->inv(e), x))) {
            inside = false;
            break;
          }
        witness = inside;
      }
      return not_covering == witness;
    });

    guarded("complement_cover", [&] {
      PointSet s = random_proper_nonempty_subset(m, rng);
      complement_cover_check(xs, s[0], s);  // self-checking
      return true;
    });
  }

  guarded("coset_action_equivalence", [&] {
    GSetRef rebuilt = GSet::cosets(g, point_stabilizer(xs, 0));
    return equivariant_bijection(*rebuilt, xs).has_value();
  });
}

void verify_structure_exhaustive(const GSet& xs, std::map<std::string, CheckTally>& checks) {
  const GroupRef& g = xs.group();
  const int n = g->order(), m = xs.size();
  require(n <= 6, ErrorCode::CapExceeded, "exhaustive structural sweep is for tiny groups");

  for (int x0 = 0; x0 < m; ++x0) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      ElemSet a;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) a.push_back(i);
      try {
        check_base_closed(xs, x0, a);
        tally(checks, "closure_criteria_agree", true);
      } catch (const std::exception&) {
        tally(checks, "closure_criteria_agree", false);
      }
    }
  }
  for (unsigned smask = 1; smask < (1u << m) - 1u; ++smask) {
    PointSet s;
    for (int i = 0; i < m; ++i)
      if (smask & (1u << i)) s.push_back(i);
    for (int x0 : s) {
      try {
        complement_cover_check(xs, x0, s);
        block_decomposition(xs, x0, s);
        tally(checks, "complement_cover", true);
      } catch (const std::exception&) {
        tally(checks, "complement_cover", false);
      }
    }
    // the covering criterion against its pointwise witness, all subsets
    for (unsigned amask = 0; amask < (1u << n); ++amask) {
      ElemSet a;
      for (int i = 0; i < n; ++i)
        if (amask & (1u << i)) a.push_back(i);
      PointSet covered = translate_set_by(xs, a, s);
      bool not_covering = static_cast<int>(covered.size()) < m;
      PointSet complement = set_difference(full_range(m), s);
      bool witness = false;
      for (int x = 0; x < m && !witness; ++x) {
        bool inside = true;
        for (int e : a)
          if (!set_contains(complement, xs.apply(g->inv(e), x))) {
            inside = false;
            break;
          }
        witness = inside;
      }
      tally(checks, "translate_cover_equivalence", not_covering == witness);
    }
  }
}

void verify_transforms_on(const GroupRef& g, const FieldRef& base_field, Rng& rng, int rounds,
                          std::map<std::string, CheckTally>& checks) {
  FieldRef e = splitting_extension(base_field, g->exponent());
  BundleRef bundle;
  std::vector<GSetRef> sets;
  if (g->is_abelian()) {
    bundle = abelian_characters(g, e);
    sets = {GSet::regular(g)};
  } else if (g->name() == "S3") {
    bundle = s3_bundle(g, e);
    sets = {GSet::regular(g)};
    if (g->has_permutation_form()) sets.push_back(GSet::natural(g));
  } else {
    return;  // representation bundles for other nonabelian groups are inputs
  }
  tally(checks, "schur_orthogonality", true);  // bundle validation enforces it

  for (const GSetRef& xs : sets) {
    DualSetRef dual;
    try {
      dual = DualSet::build(xs, bundle);
      tally(checks, "dual_basis", true);
      tally(checks, "transform_law", true);  // checked inside build
    } catch (const std::exception&) {
      tally(checks, "dual_basis", false);
      continue;
    }
    for (int r = 0; r < rounds; ++r) {
      std::vector<FieldValue> vals;
      vals.reserve(xs->size());
      for (int x = 0; x < xs->size(); ++x) vals.push_back(random_value(e, rng));
      PointFunction f(xs, e, std::move(vals));
      if (f.is_zero()) f = delta_function(xs, e, 0);
      tally(checks, "transform_equivariance", equivariance_check(f, dual, 6, rng));
      FourierTransform ft = fourier_transform(f, dual);
      tally(checks, "rank_support_equals_dim", rank_support(ft) == submodule_dim(f));
      try {
        min_supp_witness(ft, rng, 2);
        tally(checks, "support_minimization_witness", true);
      } catch (const std::exception&) {
        tally(checks, "support_minimization_witness", false);
      }
    }
  }
}

}  // namespace

SweepLedger run_verification(const SweepConfig& cfg) {
  auto started = std::chrono::steady_clock::now();
  SweepLedger ledger;
  ledger.seed = cfg.seed;
  Rng rng(cfg.seed);

  std::vector<GroupRef> groups = resolve_config_groups(cfg);
  for (const GroupRef& g : groups) {
    std::vector<GSetRef> sets = transitive_actions(g, cfg.actions);
    // spread the random rounds so each check runs on every action
    for (const GSetRef& xs : sets) {
      if (!xs->transitive()) continue;
      verify_structure_on(*xs, rng, 40, ledger.checks);
      ledger.instance_count += 40;
    }
  }

  // exhaustive small cases
  {
    GroupRef s3 = make_s3();
    verify_structure_exhaustive(*GSet::natural(s3), ledger.checks);
    verify_structure_exhaustive(*GSet::regular(make_cyclic(6)), ledger.checks);
  }

  // transform-side checks over deterministic splitting fields
  for (const GroupRef& g : groups) {
    long long exp_g = g->exponent();
    long long p = 2;
    while (!(is_prime(p) && p % exp_g == 1) || gcd_ll(p, g->order()) != 1) ++p;
    verify_transforms_on(g, FieldContext::prime(p), rng, 10, ledger.checks);
  }
  if (std::none_of(groups.begin(), groups.end(),
                   [](const GroupRef& g) { return g->name() == "S3"; })) {
    verify_transforms_on(make_s3(), FieldContext::rationals(), rng, 10, ledger.checks);
  }

  ledger.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return ledger;
}

// ---------------------------------------------------------------------------

BundleRef s3_bundle(const GroupRef& s3, const FieldRef& e) {
  require(s3->order() == 6, ErrorCode::InputError, "not a six-element group");
  // matrices of the two-dimensional irrep in the basis (e1-e2, e2-e3) of the
  // zero-sum plane, keyed by the permutation each element induces
  const std::map<std::vector<int>, std::array<int, 4>> standard = {
      {{0, 1, 2}, {1, 0, 0, 1}},    {{1, 0, 2}, {-1, 1, 0, 1}}, {{2, 1, 0}, {0, -1, -1, 0}},
      {{1, 2, 0}, {0, -1, 1, -1}},  {{0, 2, 1}, {1, 0, 1, -1}}, {{2, 0, 1}, {-1, 1, -1, 0}}};
  const std::map<std::vector<int>, int> signs = {{{0, 1, 2}, 1}, {{1, 0, 2}, -1}, {{2, 1, 0}, -1},
                                                 {{1, 2, 0}, 1}, {{0, 2, 1}, -1}, {{2, 0, 1}, 1}};

  std::vector<std::vector<int>> perms;
  if (s3->has_permutation_form() && s3->permutation_degree() == 3) {
    perms = s3->permutation_images();
  } else {
    require(same_group(s3, make_s3()), ErrorCode::InputError,
            "bundle matrices are defined for the canonical S3 table");
    perms = make_s3()->permutation_images();
  }

  Irrep trivial{1, {}}, sign{1, {}}, standard_rep{2, {}};
  for (int a = 0; a < 6; ++a) {
    trivial.matrices.push_back(Matrix{{FieldValue::one(e)}});
    sign.matrices.push_back(Matrix{{FieldValue::from_integer(e, signs.at(perms[a]))}});
    const auto& entries = standard.at(perms[a]);
    standard_rep.matrices.push_back(
        Matrix{{FieldValue::from_integer(e, entries[0]), FieldValue::from_integer(e, entries[1])},
               {FieldValue::from_integer(e, entries[2]), FieldValue::from_integer(e, entries[3])}});
  }
  return RepresentationBundle::validated(s3, e,
                                         {std::move(trivial), std::move(sign), std::move(standard_rep)});
}

// ---------------------------------------------------------------------------

nlohmann::json ledger_to_json(const SweepLedger& ledger) {
  nlohmann::json j;
  j["instance_count"] = ledger.instance_count;
  j["seed"] = ledger.seed;
  nlohmann::json checks = nlohmann::json::object();
  for (const auto& [name, t] : ledger.checks)
    checks[name] = nlohmann::json{{"pass", t.pass}, {"fail", t.fail}};
  j["checks"] = std::move(checks);
  auto row_json = [](const InstanceRow& r) {
    return nlohmann::json{{"group", r.group},
                          {"action", r.action},
                          {"field", r.field},
                          {"f_index", r.f_index},
                          {"supp", r.supp},
                          {"dim", r.dim},
                          {"block", r.block},
                          {"lhs", r.lhs},
                          {"rhs_sharp", r.rhs_sharp},
                          {"rhs_classical", r.rhs_classical}};
  };
  nlohmann::json sharp = nlohmann::json::array(), classical = nlohmann::json::array();
  for (const InstanceRow& r : ledger.sharp_equality_atlas) sharp.push_back(row_json(r));
  for (const InstanceRow& r : ledger.classical_equality_atlas) classical.push_back(row_json(r));
  j["sharp_equality_atlas"] = std::move(sharp);
  j["classical_equality_atlas"] = std::move(classical);
  nlohmann::json violations = nlohmann::json::array();
  for (const ViolationEntry& v : ledger.violations)
    violations.push_back(nlohmann::json{{"group", v.group},
                                        {"action", v.action},
                                        {"field", v.field},
                                        {"f_index", v.f_index},
                                        {"reason", v.reason}});
  j["violations"] = std::move(violations);
  return j;
}

std::string ledger_to_csv(const SweepLedger& ledger) {
  std::ostringstream out;
  out << "group,action,field,f-index,supp,dim,block,lhs,rhs_sharp,rhs_classical,sharp_eq,"
         "classical_eq\n";
  for (const InstanceRow& r : ledger.rows) {
    out << r.group << ',' << r.action << ',' << r.field << ',' << r.f_index << ',' << r.supp << ','
        << r.dim << ',' << r.block << ',' << r.lhs << ',' << r.rhs_sharp << ',' << r.rhs_classical
        << ',' << (r.sharp_eq ? 1 : 0) << ',' << (r.classical_eq ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace gact
