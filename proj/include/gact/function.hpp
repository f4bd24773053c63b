#ifndef GACT_FUNCTION_HPP
#define GACT_FUNCTION_HPP

#include <optional>

#include "gact/gset.hpp"
#include "gact/linalg.hpp"

namespace gact {

/**
 * Field-valued function on the points of a G-set; equivalently an element of
 * the permutation module, f = sum f(x) x. The group translates it by
 * (alpha f)(x) = f(alpha^-1 x).
 */
struct PointFunction {
  PointFunction(GSetRef on, FieldRef field_ctx, std::vector<FieldValue> vals);

  GSetRef gset;
  FieldRef field;
  std::vector<FieldValue> values;

  bool is_zero() const;
  const FieldValue& operator()(int x) const { return values[x]; }
};

PointFunction zero_function(const GSetRef& xs, const FieldRef& fc);
PointFunction delta_function(const GSetRef& xs, const FieldRef& fc, int at);
PointFunction constant_function(const GSetRef& xs, const FieldRef& fc, const FieldValue& c);

PointSet support(const PointFunction& f);

PointFunction translate(int elem, const PointFunction& f);
PointFunction scale(const FieldValue& c, const PointFunction& f);
PointFunction add(const PointFunction& f, const PointFunction& g);

/// convolution in the group algebra; both factors on the same regular set
PointFunction convolve_group(const PointFunction& g, const PointFunction& h);

/// module action of the group-algebra element g on f:
/// (g*f)(x) = sum_alpha g(alpha) f(alpha^-1 x)
PointFunction convolve_action(const PointFunction& g, const PointFunction& f);

/// n x m matrix whose row alpha is the translate alpha f
Matrix translate_matrix(const PointFunction& f);

/// dimension of the submodule generated by f = rank of the translate matrix;
/// works over any field, semisimple or not
int submodule_dim(const PointFunction& f);

/**
 * When every translate of f by the given elements is a scalar multiple of f,
 * those scalars form a character of the element set (which must then be a
 * subgroup); otherwise empty. On the regular set the returned scale is
 * f(identity) and f = scale * eta^-1 on its support.
 */
struct GLinearWitness {
  Character eta;
  FieldValue scale;
};
std::optional<GLinearWitness> is_group_linear(const PointFunction& f, const ElemSet& over);

}  // namespace gact

#endif
