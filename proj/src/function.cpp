#include "gact/function.hpp"

#include <algorithm>

namespace gact {

PointFunction::PointFunction(GSetRef on, FieldRef field_ctx, std::vector<FieldValue> vals)
    : gset(std::move(on)), field(std::move(field_ctx)), values(std::move(vals)) {
  require(static_cast<int>(values.size()) == gset->size(), ErrorCode::InputError,
          "one value per point required");
  for (const auto& v : values)
    require(v.context()->same_as(*field), ErrorCode::MismatchedContext,
            "value from a different field");
}

bool PointFunction::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](const FieldValue& v) { return v.is_zero(); });
}

PointFunction zero_function(const GSetRef& xs, const FieldRef& fc) {
  return PointFunction(xs, fc, std::vector<FieldValue>(xs->size(), FieldValue::zero(fc)));
}

PointFunction delta_function(const GSetRef& xs, const FieldRef& fc, int at) {
  require(at >= 0 && at < xs->size(), ErrorCode::InputError, "point out of range");
  auto f = zero_function(xs, fc);
  f.values[at] = FieldValue::one(fc);
  return f;
}

PointFunction constant_function(const GSetRef& xs, const FieldRef& fc, const FieldValue& c) {
  return PointFunction(xs, fc, std::vector<FieldValue>(xs->size(), c));
}

PointSet support(const PointFunction& f) {
  PointSet s;
  for (int x = 0; x < f.gset->size(); ++x)
    if (!f.values[x].is_zero()) s.push_back(x);
  return s;
}

PointFunction translate(int elem, const PointFunction& f) {
  const GSet& xs = *f.gset;
  std::vector<FieldValue> vals;
  vals.reserve(f.values.size());
  int inv = xs.group()->inv(elem);
  for (int x = 0; x < xs.size(); ++x) vals.push_back(f.values[xs.apply(inv, x)]);
  return PointFunction(f.gset, f.field, std::move(vals));
}

PointFunction scale(const FieldValue& c, const PointFunction& f) {
  std::vector<FieldValue> vals;
  vals.reserve(f.values.size());
  for (const auto& v : f.values) vals.push_back(c * v);
  return PointFunction(f.gset, f.field, std::move(vals));
}

PointFunction add(const PointFunction& f, const PointFunction& g) {
  require(f.gset == g.gset, ErrorCode::MismatchedContext, "functions on different sets");
  std::vector<FieldValue> vals;
  vals.reserve(f.values.size());
  for (size_t i = 0; i < f.values.size(); ++i) vals.push_back(f.values[i] + g.values[i]);
  return PointFunction(f.gset, f.field, std::move(vals));
}

PointFunction convolve_group(const PointFunction& g, const PointFunction& h) {
  require(g.gset == h.gset && g.gset->is_regular(), ErrorCode::MismatchedContext,
          "group convolution needs both factors on the same regular set");
  require(g.field->same_as(*h.field), ErrorCode::MismatchedContext, "fields differ");
  const GroupRef& grp = g.gset->group();
  std::vector<FieldValue> vals(grp->order(), FieldValue::zero(g.field));
  for (int a = 0; a < grp->order(); ++a) {
    FieldValue acc = FieldValue::zero(g.field);
    for (int b = 0; b < grp->order(); ++b) acc = acc + g.values[b] * h.values[grp->mul(grp->inv(b), a)];
    vals[a] = acc;
  }
  return PointFunction(g.gset, g.field, std::move(vals));
}

PointFunction convolve_action(const PointFunction& g, const PointFunction& f) {
  require(g.gset->is_regular(), ErrorCode::MismatchedContext,
          "left factor must live on the regular set");
  require(same_group(g.gset->group(), f.gset->group()), ErrorCode::MismatchedContext, "groups differ");
  require(g.field->same_as(*f.field), ErrorCode::MismatchedContext, "fields differ");
  const GroupRef& grp = f.gset->group();
  std::vector<FieldValue> vals(f.gset->size(), FieldValue::zero(f.field));
  for (int x = 0; x < f.gset->size(); ++x) {
    FieldValue acc = FieldValue::zero(f.field);
    for (int a = 0; a < grp->order(); ++a)
      acc = acc + g.values[a] * f.values[f.gset->apply(grp->inv(a), x)];
    vals[x] = acc;
  }
  return PointFunction(f.gset, f.field, std::move(vals));
}

Matrix translate_matrix(const PointFunction& f) {
  Matrix rows;
  rows.reserve(f.gset->group()->order());
  for (int a = 0; a < f.gset->group()->order(); ++a) rows.push_back(translate(a, f).values);
  return rows;
}

int submodule_dim(const PointFunction& f) {
  require(!f.is_zero(), ErrorCode::ZeroFunction, "zero function generates the zero module");
  return exact_rank(translate_matrix(f));
}

std::optional<GLinearWitness> is_group_linear(const PointFunction& f, const ElemSet& over) {
  require(!f.is_zero(), ErrorCode::ZeroFunction, "zero function");
  require(std::is_sorted(over.begin(), over.end()), ErrorCode::InputError,
          "element set must be sorted");
  PointSet supp = support(f);
  int witness_point = supp[0];

  std::vector<FieldValue> scalars;
  scalars.reserve(over.size());
  for (int a : over) {
    // alpha f = c f forces alpha supp(f) = supp(f)
    if (translate_set(*f.gset, a, supp) != supp) return std::nullopt;
    PointFunction af = translate(a, f);
    FieldValue c = af.values[witness_point] / f.values[witness_point];
    for (int x = 0; x < f.gset->size(); ++x)
      if (af.values[x] != c * f.values[x]) return std::nullopt;
    scalars.push_back(c);
  }
  // the scalar map is a character only on a subgroup
  if (!is_subgroup(f.gset->group(), over)) return std::nullopt;

  GLinearWitness w{Character(Subgroup(f.gset->group(), over), std::move(scalars)),
                   FieldValue::zero(f.field)};
  if (f.gset->is_regular()) w.scale = f.values[f.gset->group()->identity()];
  return w;
}

}  // namespace gact
