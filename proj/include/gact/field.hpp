#ifndef GACT_FIELD_HPP
#define GACT_FIELD_HPP

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "gact/error.hpp"
#include "gact/rational.hpp"
#include "gact/rng.hpp"

namespace gact {

/**
 * Exact arithmetic context: one of
 *   Q                rationals,
 *   GF(p)            prime field,
 *   GF(p^k)          extension field as GF(p)[x]/(modulus),
 *   Q(zeta_n)        cyclotomic field as Q[x]/(Phi_n).
 *
 * The extension modulus is the lexicographically smallest monic irreducible of
 * its degree (coefficients compared from x^(k-1) down to the constant term),
 * so representations are reproducible across runs. Phi_n is computed exactly.
 */
class FieldContext {
 public:
  enum class Kind { Rationals, Prime, Galois, Cyclotomic };

  static std::shared_ptr<const FieldContext> rationals();
  static std::shared_ptr<const FieldContext> prime(long long p);
  static std::shared_ptr<const FieldContext> galois(long long p, int k);
  static std::shared_ptr<const FieldContext> cyclotomic(long long n);

  Kind kind() const { return kind_; }
  long long characteristic() const { return characteristic_; }
  // dimension over the prime subfield (resp. over Q): 1, 1, k, phi(n)
  int degree() const { return degree_; }
  long long zeta_order() const { return zeta_order_; }
  // GF(p^k) modulus, coefficients c0..ck with ck = 1 (empty otherwise)
  const std::vector<long long>& modulus() const { return modulus_; }
  // Phi_n coefficients c0..cd with cd = 1 (empty otherwise)
  const std::vector<BigInt>& cyclotomic_modulus() const { return cyclo_modulus_; }

  // grammar: "Q" | "GF(p)" | "GF(p^k)" | "Q(zeta_n)"
  std::string spec_string() const;

  bool same_as(const FieldContext& other) const;

 private:
  FieldContext() = default;

  Kind kind_ = Kind::Rationals;
  long long characteristic_ = 0;
  int degree_ = 1;
  long long zeta_order_ = 0;
  std::vector<long long> modulus_;
  std::vector<BigInt> cyclo_modulus_;
};

using FieldRef = std::shared_ptr<const FieldContext>;

FieldRef field_from_spec(const std::string& spec);

/// Exactly representable field element; payload is always canonical, so
/// operator== decides mathematical equality.
class FieldValue {
 public:
  FieldValue() = default;

  static FieldValue zero(const FieldRef& ctx);
  static FieldValue one(const FieldRef& ctx);
  static FieldValue from_integer(const FieldRef& ctx, long long value);
  static FieldValue from_rational(const FieldRef& ctx, const Rat& value);
  // GF(p^k): residue coefficients c0..c_{k-1}; Q(zeta_n): rational coefficients
  static FieldValue from_coefficients(const FieldRef& ctx, const std::vector<Rat>& coeffs);

  const FieldRef& context() const { return ctx_; }

  bool is_zero() const;
  bool is_one() const;

  FieldValue operator+(const FieldValue& rhs) const;
  FieldValue operator-(const FieldValue& rhs) const;
  FieldValue operator*(const FieldValue& rhs) const;
  FieldValue operator/(const FieldValue& rhs) const;
  FieldValue operator-() const;
  FieldValue inverse() const;
  FieldValue pow(long long exponent) const;

  bool operator==(const FieldValue& rhs) const;
  bool operator!=(const FieldValue& rhs) const { return !(*this == rhs); }

  // strict total order on canonical forms, for deterministic sorting
  static int cmp(const FieldValue& a, const FieldValue& b);

  // identity on canonical payloads; exposed so tests can assert idempotence
  FieldValue canonicalized() const;

  // multiplicative order; fails on zero or when no finite order exists
  long long multiplicative_order(long long bound = 1 << 20) const;

  std::string to_string() const;
  static FieldValue parse(const FieldRef& ctx, const std::string& text);

 private:
  friend class FieldContext;
  using Payload = std::variant<Rat, long long, std::vector<long long>, std::vector<Rat>>;

  FieldValue(FieldRef ctx, Payload payload)
      : ctx_(std::move(ctx)), payload_(std::move(payload)) {}

  void check_same_context(const FieldValue& rhs) const;

  FieldRef ctx_;
  Payload payload_;
};

/// true iff char F = 0 or gcd(char F, group_order) = 1
bool semisimplicity_check(const FieldContext& fc, long long group_order);

/// Element of multiplicative order exactly n, chosen deterministically
/// (smallest canonical form for finite fields; the class of x^(m/n) in
/// Q(zeta_m)). Fails with NoSuchRoot when the context has none.
FieldValue primitive_root_of_unity(const FieldRef& ctx, long long n);

/// All solutions of u^d = 1, sorted canonically. May be just {1}.
std::vector<FieldValue> roots_of_unity_dividing(const FieldRef& ctx, long long d);

/// Smallest context of the same characteristic containing both the given one
/// and a primitive root of unity of order exp_g:
///   Q -> Q(zeta_exp), Q(zeta_m) -> Q(zeta_lcm(m,exp)),
///   GF(p^j) -> GF(p^lcm(j, ord_exp(p))).
/// Contexts that already contain the root come back unchanged.
FieldRef splitting_extension(const FieldRef& ctx, long long exp_g);

/// Canonical inclusion: same context, Q -> Q(zeta_n), Q(zeta_m) -> Q(zeta_n)
/// with m | n, GF(p) -> GF(p^k). Anything else is a FieldMismatch.
FieldValue embed_value(const FieldValue& value, const FieldRef& target);
bool embeds_into(const FieldContext& from, const FieldContext& into);

FieldValue random_value(const FieldRef& ctx, Rng& rng);
FieldValue random_nonzero_value(const FieldRef& ctx, Rng& rng);

bool is_prime(long long n);
long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);
// multiplicative order of a modulo m, for gcd(a, m) = 1
long long order_mod(long long a, long long m);

}  // namespace gact

#endif
