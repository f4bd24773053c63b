#include "gact/uncertainty.hpp"

#include <algorithm>

namespace gact {

namespace {

std::string bound_context(const UncertaintyReport& r) {
  return r.group_name + "/" + r.action_label + "/" + r.field_spec +
         " supp=" + std::to_string(r.supp_size) + " dim=" + std::to_string(r.dim) +
         " block=" + std::to_string(r.block_size);
}

}  // namespace

std::optional<EqualityCertificate> classify_equality_classical(const PointFunction& f, int x0) {
  require(!f.is_zero(), ErrorCode::ZeroFunction, "zero function");
  const GSet& xs = *f.gset;
  require(xs.transitive(), ErrorCode::NotTransitive, "classification needs a transitive action");
  PointSet s = support(f);
  require(set_contains(s, x0), ErrorCode::InputError, "base point must support f");

  ElemSet lift = point_preimage(xs, x0, s);
  std::optional<EqualityCertificate> cert;
  if (is_subgroup(xs.group(), lift)) {
    if (auto linear = is_group_linear(f, lift)) {
      // translation scalars eta(beta) give f(beta x0) = f(x0) eta^-1(beta)
      Character eta = character_inverse(linear->eta);
      FieldValue c = f.values[x0];
      for (int beta : lift)
        if (f.values[xs.apply(beta, x0)] != c * eta.value_on(beta))
          throw std::logic_error("certificate failed its own defining identity");
      if (!is_block(xs, s)) throw std::logic_error("support of a certified f must be a block");
      cert = EqualityCertificate{s, lift, std::move(eta), std::move(c)};
    }
  }

  long long lhs = static_cast<long long>(s.size()) * submodule_dim(f);
  bool equality = lhs == xs.size();
  if (equality != cert.has_value())
    throw std::logic_error("classical equality and its characterization disagree");
  return cert;
}

namespace {

UncertaintyReport analyze_with_block(const PointFunction& f, int x0, int classify_x0,
                                     const PointSet& block_set, const std::string& action_label) {
  const GSet& xs = *f.gset;
  UncertaintyReport r;
  r.group_name = xs.group()->name();
  r.action_label = action_label;
  r.field_spec = f.field->spec_string();
  r.x0 = x0;
  PointSet s = support(f);
  r.supp_size = static_cast<int>(s.size());
  r.dim = submodule_dim(f);
  r.block_size = static_cast<int>(block_set.size());
  r.lhs = static_cast<long long>(r.supp_size) * r.dim;
  r.rhs_sharp = xs.size() + r.supp_size - r.block_size;
  r.rhs_classical = xs.size();
  r.sharp_equality = r.lhs == r.rhs_sharp;
  r.classical_equality = r.lhs == r.rhs_classical;
  require(r.rhs_sharp >= r.rhs_classical, ErrorCode::BoundViolation,
          "support smaller than its block: " + bound_context(r));
  require(r.lhs >= r.rhs_sharp, ErrorCode::BoundViolation,
          "sharpened bound fails: " + bound_context(r));
  require(r.lhs >= r.rhs_classical, ErrorCode::BoundViolation,
          "classical bound fails: " + bound_context(r));
  r.certificate = classify_equality_classical(f, classify_x0);
  if (r.certificate.has_value() != r.classical_equality)
    throw std::logic_error("equality classification out of step with the report");
  return r;
}

}  // namespace

UncertaintyReport analyze(const PointFunction& f, std::optional<int> x0_opt) {
  require(!f.is_zero(), ErrorCode::ZeroFunction, "zero function has no support bound");
  const GSet& xs = *f.gset;
  require(xs.transitive(), ErrorCode::NotTransitive, "the bound is about transitive actions");
  PointSet s = support(f);
  int x0 = x0_opt.value_or(s[0]);
  require(set_contains(s, x0), ErrorCode::InputError, "x0 must lie in the support");

  PointSet block_set = static_cast<int>(s.size()) == xs.size()
                           ? full_range(xs.size())  // full support: the block is all of X
                           : associated_block(xs, x0, s);
  return analyze_with_block(f, x0, x0, block_set, xs.label());
}

UncertaintyReport regular_analyze(const PointFunction& f) {
  require(!f.is_zero(), ErrorCode::ZeroFunction, "zero function has no support bound");
  const GSet& xs = *f.gset;
  require(xs.is_regular(), ErrorCode::InputError, "regular-set analysis needs the regular set");
  // on the regular set the block through any support point is carried by the
  // right stabilizer of the support, so report that subgroup directly; the
  // equality classification still needs a base point inside the support
  PointSet s = support(f);
  Subgroup stab = right_stabilizer(xs.group(), s);
  return analyze_with_block(f, xs.group()->identity(), s[0], stab.elements, xs.label());
}

GreedyBound greedy_translate_bound(const PointFunction& f, int x0) {
  require(!f.is_zero(), ErrorCode::ZeroFunction, "zero function");
  const GSet& xs = *f.gset;
  require(xs.transitive(), ErrorCode::NotTransitive, "covering needs a transitive action");
  PointSet s = support(f);
  require(static_cast<int>(s.size()) < xs.size(), ErrorCode::FullSupport,
          "full-support functions have no complement to cover");
  require(set_contains(s, x0), ErrorCode::InputError, "x0 must lie in the support");
  const GroupRef& g = xs.group();

  ElemSet lift = point_preimage(xs, x0, s);
  ElemSet complement_lift = set_difference(full_range(g->order()), lift);
  ElemSet candidates = elem_inverse_set(g, complement_lift);
  PointSet target = translate_set_by(xs, candidates, s);

  GreedyBound out;
  PointSet covered;
  while (covered != target) {
    bool advanced = false;
    for (int alpha : candidates) {
      PointSet moved = translate_set(xs, alpha, s);
      if (!is_subset(moved, covered)) {
        covered = set_union(covered, moved);
        out.chosen.push_back(alpha);
        advanced = true;
        break;
      }
    }
    if (!advanced) throw std::logic_error("cover loop stalled before reaching its target");
  }
  // one translate from the lift inverse finishes the cover of X
  ElemSet closing = elem_inverse_set(g, lift);
  int alpha_t = closing[0];
  PointSet final_cover = set_union(covered, translate_set(xs, alpha_t, s));
  if (final_cover != full_range(xs.size()))
    throw std::logic_error("closing translate failed to cover the whole set");
  out.chosen.push_back(alpha_t);
  out.t = static_cast<int>(out.chosen.size());

  // asserted guarantees of the covering argument
  int dim = submodule_dim(f);
  PointSet block = associated_block(xs, x0, s);
  require(out.t <= dim, ErrorCode::BoundViolation, "cover uses more translates than dim");
  require(xs.size() <= static_cast<long long>(out.t) * s.size() - static_cast<long long>(s.size()) +
                           static_cast<long long>(block.size()),
          ErrorCode::BoundViolation, "cover inequality fails");
  return out;
}

PointFunction coset_indicator(const GroupRef& g, const Subgroup& h, int gamma,
                              const Character& eta, const FieldValue& c, const FieldRef& fc) {
  require(!c.is_zero(), ErrorCode::InputError, "scalar must be nonzero");
  require(gamma >= 0 && gamma < g->order(), ErrorCode::InputError, "coset representative invalid");
  require(eta.domain.parent.get() == g.get() && eta.domain.elements == h.elements,
          ErrorCode::InputError, "character must live on the given subgroup");
  for (const auto& v : eta.values)
    require(v.context()->same_as(*fc), ErrorCode::MismatchedContext,
            "character values outside the target field");
  GSetRef reg = GSet::regular(g);
  auto f = zero_function(reg, fc);
  for (int beta : h.elements) f.values[g->mul(gamma, beta)] = c * eta.value_on(beta);
  return f;
}

UncertaintyReport rank_support_analyze(const PointFunction& f, const DualSetRef& ds) {
  require(f.gset == ds->gset(), ErrorCode::InputError, "dual set built for a different action");
  require(semisimplicity_check(*ds->field(), f.gset->group()->order()), ErrorCode::NotSemisimple,
          "rank-support analysis needs a semisimple algebra");
  UncertaintyReport r = f.gset->is_regular() ? regular_analyze(f) : analyze(f);
  int rs = rank_support(fourier_transform(f, ds));
  if (rs != r.dim)
    throw std::logic_error("rank support must equal the generated-submodule dimension");
  require(static_cast<long long>(r.supp_size) * rs >= r.rhs_sharp, ErrorCode::BoundViolation,
          "transform-side sharpened bound fails");
  r.rank_support_value = rs;
  return r;
}

BoundLedger donoho_stark_check(const PointFunction& f) {
  const GSet& xs = *f.gset;
  const GroupRef& g = xs.group();
  require(g->is_abelian(), ErrorCode::NotAbelian, "this ledger is for abelian groups");
  require(xs.is_regular(), ErrorCode::InputError, "this ledger works on the regular set");
  require(semisimplicity_check(*f.field, g->order()), ErrorCode::NotSemisimple,
          "transform needs a semisimple algebra");
  require(!f.is_zero(), ErrorCode::ZeroFunction, "zero function");

  FieldRef e = splitting_extension(f.field, g->exponent());
  std::vector<Character> chars = homs_to_units(whole_group(g), e);
  require(static_cast<int>(chars.size()) == g->order(), ErrorCode::NoSuchRoot,
          "splitting field did not produce a full character group");

  ElemSet s = support(f);
  std::vector<FieldValue> fhat = abelian_transform(f, chars);
  int supp_fhat = 0;
  for (const auto& v : fhat)
    if (!v.is_zero()) ++supp_fhat;

  BoundLedger ledger;
  ledger.supp_f = static_cast<int>(s.size());
  ledger.supp_fhat = supp_fhat;
  ledger.product = static_cast<long long>(ledger.supp_f) * supp_fhat;
  ledger.classical_rhs = g->order();
  Subgroup stab = right_stabilizer(g, s);
  ledger.sharpened_rhs = g->order() + ledger.supp_f - stab.order();
  ledger.classical_equality = ledger.product == ledger.classical_rhs;
  ledger.sharpened_equality = ledger.product == ledger.sharpened_rhs;
  require(ledger.product >= ledger.sharpened_rhs, ErrorCode::BoundViolation,
          "sharpened product bound fails");
  require(ledger.product >= ledger.classical_rhs, ErrorCode::BoundViolation,
          "classical product bound fails");

  if (ledger.classical_equality) {
    // recover f = c chi I_(gamma H): H from the support, chi by extending the
    // character the support values define
    int gamma = s[0];
    ElemSet h_elems;
    h_elems.reserve(s.size());
    for (int x : s) h_elems.push_back(g->mul(g->inv(gamma), x));
    std::sort(h_elems.begin(), h_elems.end());
    if (!is_subgroup(g, h_elems))
      throw std::logic_error("equality support must be a coset of a subgroup");

    const CosetCharacterDecomposition* found = nullptr;
    CosetCharacterDecomposition best;
    for (const Character& chi : chars) {
      bool restricts = true;
      for (int beta : h_elems) {
        FieldValue expected = embed_value(f.values[g->mul(gamma, beta)], e) /
                              embed_value(f.values[gamma], e);
        if (chi.value_on(beta) != expected) {
          restricts = false;
          break;
        }
      }
      if (!restricts) continue;
      best.gamma = gamma;
      best.subgroup = h_elems;
      best.chi_values.clear();
      for (int a = 0; a < g->order(); ++a) best.chi_values.push_back(chi.value_on(a));
      best.scalar = embed_value(f.values[gamma], e) / chi.value_on(gamma);
      found = &best;
      break;
    }
    if (!found)
      throw std::logic_error("no full character extends the support character");
    // validate the decomposition pointwise
    for (int a = 0; a < g->order(); ++a) {
      FieldValue expected = set_contains(s, a) ? best.scalar * best.chi_values[a]
                                               : FieldValue::zero(e);
      if (embed_value(f.values[a], e) != expected)
        throw std::logic_error("recovered decomposition does not reproduce f");
    }
    ledger.decomposition = std::move(best);
  }
  return ledger;
}

}  // namespace gact
