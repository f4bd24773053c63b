#include "gact/field.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace gact {

// ---------------------------------------------------------------------------
// rationals

Rat parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rat(BigInt(text));
    }
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    require(den != 0, ErrorCode::ParseError, "zero denominator in '" + text + "'");
    return Rat(num) / Rat(den);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    fail(ErrorCode::ParseError, "bad rational '" + text + "'");
  }
}

std::string rational_to_string(const Rat& value) {
  std::ostringstream out;
  out << numerator(value);
  if (denominator(value) != 1) out << "/" << denominator(value);
  return out.str();
}

int rat_cmp(const Rat& a, const Rat& b) {
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

// ---------------------------------------------------------------------------
// small number theory

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }
long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

long long order_mod(long long a, long long m) {
  require(m > 1 && gcd_ll(((a % m) + m) % m, m) == 1, ErrorCode::InputError,
          "order_mod needs a unit");
  long long x = ((a % m) + m) % m, acc = x, ord = 1;
  while (acc != 1) {
    acc = (acc * x) % m;
    ++ord;
  }
  return ord;
}

namespace {

long long mod_norm(long long a, long long p) {
  long long r = a % p;
  return r < 0 ? r + p : r;
}

long long mod_mul(long long a, long long b, long long p) {
  return static_cast<long long>(static_cast<__int128>(a) * b % p);
}

long long mod_pow(long long a, long long e, long long p) {
  long long r = 1 % p;
  a = mod_norm(a, p);
  while (e > 0) {
    if (e & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

long long mod_inv(long long a, long long p) {
  long long t = 0, new_t = 1, r = p, new_r = mod_norm(a, p);
  while (new_r != 0) {
    long long q = r / new_r;
    std::tie(t, new_t) = std::make_tuple(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_tuple(new_r, r - q * new_r);
  }
  require(r == 1, ErrorCode::InputError, "not invertible mod p");
  return mod_norm(t, p);
}

std::vector<long long> divisors_of(long long n) {
  std::vector<long long> out;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> out;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

long long euler_phi(long long n) {
  long long result = n;
  for (long long q : prime_factors(n)) result = result / q * (q - 1);
  return result;
}

// --- polynomials over GF(p), coefficient vectors c0..cd, trailing zeros trimmed

using PolyP = std::vector<long long>;

void ptrim(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyP pmul(const PolyP& a, const PolyP& b, long long p) {
  if (a.empty() || b.empty()) return {};
  PolyP c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + mod_mul(a[i], b[j], p)) % p;
  ptrim(c);
  return c;
}

// remainder of a modulo monic m
PolyP pmod(PolyP a, const PolyP& m, long long p) {
  ptrim(a);
  const size_t dm = m.size() - 1;
  while (a.size() > dm) {
    long long lead = a.back();
    size_t shift = a.size() - 1 - dm;
    if (lead != 0) {
      for (size_t i = 0; i < m.size(); ++i) {
        size_t idx = shift + i;
        a[idx] = mod_norm(a[idx] - mod_mul(lead, m[i], p), p);
      }
    }
    a.pop_back();
    ptrim(a);
    if (a.size() <= dm) break;
  }
  return a;
}

// divides a by b (b nonzero), returning (quotient, remainder)
std::pair<PolyP, PolyP> pdivmod(PolyP a, const PolyP& b, long long p) {
  ptrim(a);
  PolyP q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
  long long lead_inv = mod_inv(b.back(), p);
  while (a.size() >= b.size() && !a.empty()) {
    long long coef = mod_mul(a.back(), lead_inv, p);
    size_t shift = a.size() - b.size();
    q[shift] = coef;
    for (size_t j = 0; j < b.size(); ++j)
      a[shift + j] = mod_norm(a[shift + j] - mod_mul(coef, b[j], p), p);
    ptrim(a);
  }
  return {q, a};
}

// inverse of a modulo the monic polynomial m (extended Euclid in GF(p)[x])
PolyP pinv(PolyP a, const PolyP& m, long long p) {
  PolyP r0 = m, r1 = pmod(std::move(a), m, p);
  PolyP t0 = {}, t1 = {1};
  require(!r1.empty(), ErrorCode::InputError, "zero is not invertible");
  while (!r1.empty()) {
    auto [q, rem] = pdivmod(r0, r1, p);
    PolyP qt = pmul(q, t1, p);
    PolyP new_t = t0;
    if (new_t.size() < qt.size()) new_t.resize(qt.size(), 0);
    for (size_t i = 0; i < qt.size(); ++i) new_t[i] = mod_norm(new_t[i] - qt[i], p);
    ptrim(new_t);
    t0 = t1;
    t1 = std::move(new_t);
    r0 = r1;
    r1 = std::move(rem);
  }
  require(r0.size() == 1, ErrorCode::InputError, "not invertible (common factor)");
  long long scale = mod_inv(r0[0], p);
  for (auto& c : t0) c = mod_mul(c, scale, p);
  ptrim(t0);
  return t0;
}

bool poly_irreducible(const PolyP& f, long long p) {
  // trial division by every monic polynomial of degree 1..deg/2
  const int k = static_cast<int>(f.size()) - 1;
  if (k <= 0) return false;
  if (k == 1) return true;
  for (int d = 1; 2 * d <= k; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) {
      count *= p;
      require(count <= 4'000'000, ErrorCode::CapExceeded, "irreducibility scan too large");
    }
    for (long long n = 0; n < count; ++n) {
      PolyP g(d + 1, 0);
      long long t = n;
      for (int i = 0; i < d; ++i) {
        g[i] = t % p;
        t /= p;
      }
      g[d] = 1;
      if (pmod(f, g, p).empty()) return false;
    }
  }
  return true;
}

PolyP smallest_irreducible(long long p, int k) {
  long long count = 1;
  for (int i = 0; i < k; ++i) {
    count *= p;
    require(count <= 4'000'000, ErrorCode::CapExceeded, "extension degree too large");
  }
  for (long long n = 0; n < count; ++n) {
    PolyP f(k + 1, 0);
    long long t = n;
    for (int i = 0; i < k; ++i) {
      f[i] = t % p;
      t /= p;
    }
    f[k] = 1;
    if (poly_irreducible(f, p)) return f;
  }
  fail(ErrorCode::NoIrreducibleFound, "no irreducible polynomial found");
}

// --- integer polynomials, for the cyclotomic modulus

using PolyZ = std::vector<BigInt>;

// exact quotient a / b for monic-ish b known to divide a
PolyZ pz_divide_exact(PolyZ a, const PolyZ& b) {
  PolyZ q(a.size() - b.size() + 1, BigInt(0));
  for (size_t k = q.size(); k > 0; --k) {
    size_t i = k - 1;
    BigInt coef = a[i + b.size() - 1] / b.back();
    q[i] = coef;
    for (size_t j = 0; j < b.size(); ++j) a[i + j] -= coef * b[j];
  }
  for (const auto& c : a)
    if (c != 0) fail(ErrorCode::InputError, "inexact polynomial division");
  return q;
}

PolyZ cyclotomic_poly(long long n) {
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  PolyZ result(static_cast<size_t>(n) + 1, BigInt(0));
  result[0] = -1;
  result[static_cast<size_t>(n)] = 1;
  for (long long d : divisors_of(n)) {
    if (d == n) continue;
    result = pz_divide_exact(std::move(result), cyclotomic_poly(d));
  }
  return result;
}

// --- polynomials with rational coefficients, fixed-length residues

using PolyQ = std::vector<Rat>;

void qtrim(PolyQ& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyQ qmul(const PolyQ& a, const PolyQ& b) {
  if (a.empty() || b.empty()) return {};
  PolyQ c(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  qtrim(c);
  return c;
}

PolyQ qmod(PolyQ a, const PolyQ& m) {
  qtrim(a);
  const size_t dm = m.size() - 1;
  while (a.size() > dm) {
    Rat lead = a.back();
    size_t shift = a.size() - 1 - dm;
    if (lead != 0)
      for (size_t i = 0; i < m.size(); ++i) a[shift + i] -= lead * m[i];
    a.pop_back();
    qtrim(a);
  }
  return a;
}

// divides a by b over Q, returning (quotient, remainder)
std::pair<PolyQ, PolyQ> qdivmod(PolyQ a, const PolyQ& b) {
  qtrim(a);
  PolyQ q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rat(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rat coef = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = coef;
    for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= coef * b[j];
    qtrim(a);
  }
  return {q, a};
}

PolyQ qinv(PolyQ a, const PolyQ& m) {
  PolyQ r0 = m, r1 = qmod(std::move(a), m);
  PolyQ t0 = {}, t1 = {Rat(1)};
  require(!r1.empty(), ErrorCode::InputError, "zero is not invertible");
  while (!r1.empty()) {
    auto [q, rem] = qdivmod(r0, r1);
    PolyQ qt = qmul(q, t1);
    PolyQ new_t = t0;
    if (new_t.size() < qt.size()) new_t.resize(qt.size(), Rat(0));
    for (size_t i = 0; i < qt.size(); ++i) new_t[i] -= qt[i];
    qtrim(new_t);
    t0 = t1;
    t1 = std::move(new_t);
    r0 = r1;
    r1 = std::move(rem);
  }
  require(r0.size() == 1, ErrorCode::InputError, "not invertible");
  for (auto& c : t0) c /= r0[0];
  return t0;
}

std::vector<std::string> split_on(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldContext

FieldRef FieldContext::rationals() {
  auto ctx = std::shared_ptr<FieldContext>(new FieldContext());
  ctx->kind_ = Kind::Rationals;
  return ctx;
}

FieldRef FieldContext::prime(long long p) {
  require(is_prime(p), ErrorCode::NotPrime, "GF(" + std::to_string(p) + ")");
  auto ctx = std::shared_ptr<FieldContext>(new FieldContext());
  ctx->kind_ = Kind::Prime;
  ctx->characteristic_ = p;
  return ctx;
}

FieldRef FieldContext::galois(long long p, int k) {
  require(is_prime(p), ErrorCode::NotPrime, "GF(" + std::to_string(p) + "^k)");
  if (k == 1) return prime(p);
  require(k >= 1, ErrorCode::InputError, "extension degree must be positive");
  auto ctx = std::shared_ptr<FieldContext>(new FieldContext());
  ctx->kind_ = Kind::Galois;
  ctx->characteristic_ = p;
  ctx->degree_ = k;
  ctx->modulus_ = smallest_irreducible(p, k);
  return ctx;
}

FieldRef FieldContext::cyclotomic(long long n) {
  require(n >= 1, ErrorCode::InputError, "cyclotomic order must be positive");
  require(n <= 128, ErrorCode::CapExceeded, "cyclotomic order too large");
  if (n <= 2) {
    // Q(zeta_1) = Q(zeta_2) = Q
    return rationals();
  }
  auto ctx = std::shared_ptr<FieldContext>(new FieldContext());
  ctx->kind_ = Kind::Cyclotomic;
  ctx->zeta_order_ = n;
  ctx->cyclo_modulus_ = cyclotomic_poly(n);
  ctx->degree_ = static_cast<int>(ctx->cyclo_modulus_.size()) - 1;
  return ctx;
}

std::string FieldContext::spec_string() const {
  switch (kind_) {
    case Kind::Rationals:
      return "Q";
    case Kind::Prime:
      return "GF(" + std::to_string(characteristic_) + ")";
    case Kind::Galois:
      return "GF(" + std::to_string(characteristic_) + "^" + std::to_string(degree_) + ")";
    case Kind::Cyclotomic:
      return "Q(zeta_" + std::to_string(zeta_order_) + ")";
  }
  return "?";
}

bool FieldContext::same_as(const FieldContext& other) const {
  return kind_ == other.kind_ && characteristic_ == other.characteristic_ &&
         degree_ == other.degree_ && zeta_order_ == other.zeta_order_;
}

FieldRef field_from_spec(const std::string& spec) {
  auto parse_ll = [&](const std::string& s) -> long long {
    require(!s.empty() && s.find_first_not_of("0123456789") == std::string::npos,
            ErrorCode::ParseError, "bad number in field spec '" + spec + "'");
    return std::stoll(s);
  };
  if (spec == "Q") return FieldContext::rationals();
  if (spec.rfind("GF(", 0) == 0 && spec.back() == ')') {
    std::string inner = spec.substr(3, spec.size() - 4);
    auto caret = inner.find('^');
    if (caret == std::string::npos) {
      long long p = parse_ll(inner);
      require(is_prime(p), ErrorCode::NotPrime, spec);
      return FieldContext::prime(p);
    }
    long long p = parse_ll(inner.substr(0, caret));
    long long k = parse_ll(inner.substr(caret + 1));
    require(is_prime(p), ErrorCode::NotPrime, spec);
    require(k >= 1 && k <= 24, ErrorCode::ParseError, "extension degree out of range");
    return FieldContext::galois(p, static_cast<int>(k));
  }
  if (spec.rfind("Q(zeta_", 0) == 0 && spec.back() == ')') {
    long long n = parse_ll(spec.substr(7, spec.size() - 8));
    return FieldContext::cyclotomic(n);
  }
  fail(ErrorCode::ParseError, "bad field spec '" + spec + "'");
}

// ---------------------------------------------------------------------------
// FieldValue

namespace {

std::vector<Rat> embed_as_q_poly(const std::vector<BigInt>& coeffs) {
  std::vector<Rat> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.emplace_back(c);
  return out;
}

}  // namespace

FieldValue FieldValue::zero(const FieldRef& ctx) { return from_integer(ctx, 0); }
FieldValue FieldValue::one(const FieldRef& ctx) { return from_integer(ctx, 1); }

FieldValue FieldValue::from_integer(const FieldRef& ctx, long long value) {
  switch (ctx->kind()) {
    case FieldContext::Kind::Rationals:
      return FieldValue(ctx, Rat(BigInt(value)));
    case FieldContext::Kind::Prime:
      return FieldValue(ctx, mod_norm(value, ctx->characteristic()));
    case FieldContext::Kind::Galois: {
      std::vector<long long> payload(ctx->degree(), 0);
      payload[0] = mod_norm(value, ctx->characteristic());
      return FieldValue(ctx, std::move(payload));
    }
    case FieldContext::Kind::Cyclotomic: {
      std::vector<Rat> payload(ctx->degree(), Rat(0));
      payload[0] = Rat(BigInt(value));
      return FieldValue(ctx, std::move(payload));
    }
  }
  fail(ErrorCode::InputError, "bad context");
}

FieldValue FieldValue::from_rational(const FieldRef& ctx, const Rat& value) {
  switch (ctx->kind()) {
    case FieldContext::Kind::Rationals:
      return FieldValue(ctx, value);
    case FieldContext::Kind::Cyclotomic: {
      std::vector<Rat> payload(ctx->degree(), Rat(0));
      payload[0] = value;
      return FieldValue(ctx, std::move(payload));
    }
    case FieldContext::Kind::Prime:
    case FieldContext::Kind::Galois: {
      // a/b with b a unit mod p
      long long p = ctx->characteristic();
      BigInt num = numerator(value) % p, den = denominator(value) % p;
      long long n = mod_norm(num.convert_to<long long>(), p);
      long long d = mod_norm(den.convert_to<long long>(), p);
      require(d != 0, ErrorCode::InputError, "denominator not invertible in GF(p)");
      return from_integer(ctx, mod_mul(n, mod_inv(d, p), p));
    }
  }
  fail(ErrorCode::InputError, "bad context");
}

FieldValue FieldValue::from_coefficients(const FieldRef& ctx, const std::vector<Rat>& coeffs) {
  switch (ctx->kind()) {
    case FieldContext::Kind::Rationals:
      require(coeffs.size() == 1, ErrorCode::InputError, "rational takes one coefficient");
      return FieldValue(ctx, coeffs[0]);
    case FieldContext::Kind::Prime: {
      require(coeffs.size() == 1, ErrorCode::InputError, "GF(p) takes one coefficient");
      return from_rational(ctx, coeffs[0]);
    }
    case FieldContext::Kind::Galois: {
      require(static_cast<int>(coeffs.size()) <= ctx->degree(), ErrorCode::InputError,
              "too many coefficients");
      std::vector<long long> payload(ctx->degree(), 0);
      long long p = ctx->characteristic();
      for (size_t i = 0; i < coeffs.size(); ++i) {
        require(denominator(coeffs[i]) % p != 0, ErrorCode::InputError,
                "denominator not invertible in GF(p)");
        long long n = mod_norm((numerator(coeffs[i]) % p).convert_to<long long>(), p);
        long long d = mod_norm((denominator(coeffs[i]) % p).convert_to<long long>(), p);
        payload[i] = mod_mul(n, mod_inv(d, p), p);
      }
      return FieldValue(ctx, std::move(payload));
    }
    case FieldContext::Kind::Cyclotomic: {
      require(static_cast<int>(coeffs.size()) <= ctx->degree(), ErrorCode::InputError,
              "too many coefficients");
      std::vector<Rat> payload(ctx->degree(), Rat(0));
      std::copy(coeffs.begin(), coeffs.end(), payload.begin());
      return FieldValue(ctx, std::move(payload));
    }
  }
  fail(ErrorCode::InputError, "bad context");
}

void FieldValue::check_same_context(const FieldValue& rhs) const {
  require(ctx_ && rhs.ctx_ && ctx_->same_as(*rhs.ctx_), ErrorCode::MismatchedContext,
          "operands from different fields");
}

bool FieldValue::is_zero() const {
  switch (ctx_->kind()) {
    case FieldContext::Kind::Rationals:
      return std::get<Rat>(payload_) == 0;
    case FieldContext::Kind::Prime:
      return std::get<long long>(payload_) == 0;
    case FieldContext::Kind::Galois: {
      const auto& v = std::get<std::vector<long long>>(payload_);
      return std::all_of(v.begin(), v.end(), [](long long c) { return c == 0; });
    }
    case FieldContext::Kind::Cyclotomic: {
      const auto& v = std::get<std::vector<Rat>>(payload_);
      return std::all_of(v.begin(), v.end(), [](const Rat& c) { return c == 0; });
    }
  }
  return false;
}

bool FieldValue::is_one() const { return *this == one(ctx_); }

FieldValue FieldValue::operator+(const FieldValue& rhs) const {
  check_same_context(rhs);
  switch (ctx_->kind()) {
    case FieldContext::Kind::Rationals:
      return FieldValue(ctx_, std::get<Rat>(payload_) + std::get<Rat>(rhs.payload_));
    case FieldContext::Kind::Prime:
      return FieldValue(ctx_, (std::get<long long>(payload_) + std::get<long long>(rhs.payload_)) %
                                  ctx_->characteristic());
    case FieldContext::Kind::Galois: {
      auto v = std::get<std::vector<long long>>(payload_);
      const auto& w = std::get<std::vector<long long>>(rhs.payload_);
      for (size_t i = 0; i < v.size(); ++i) v[i] = (v[i] + w[i]) % ctx_->characteristic();
      return FieldValue(ctx_, std::move(v));
    }
    case FieldContext::Kind::Cyclotomic: {
      auto v = std::get<std::vector<Rat>>(payload_);
      const auto& w = std::get<std::vector<Rat>>(rhs.payload_);
      for (size_t i = 0; i < v.size(); ++i) v[i] += w[i];
      return FieldValue(ctx_, std::move(v));
    }
  }
  fail(ErrorCode::InputError, "bad context");
}

FieldValue FieldValue::operator-() const {
  switch (ctx_->kind()) {
    case FieldContext::Kind::Rationals:
      return FieldValue(ctx_, -std::get<Rat>(payload_));
    case FieldContext::Kind::Prime:
      return FieldValue(ctx_, mod_norm(-std::get<long long>(payload_), ctx_->characteristic()));
    case FieldContext::Kind::Galois: {
      auto v = std::get<std::vector<long long>>(payload_);
      for (auto& c : v) c = mod_norm(-c, ctx_->characteristic());
      return FieldValue(ctx_, std::move(v));
    }
    case FieldContext::Kind::Cyclotomic: {
      auto v = std::get<std::vector<Rat>>(payload_);
      for (auto& c : v) c = -c;
      return FieldValue(ctx_, std::move(v));
    }
  }
  fail(ErrorCode::InputError, "bad context");
}

FieldValue FieldValue::operator-(const FieldValue& rhs) const { return *this + (-rhs); }

FieldValue FieldValue::operator*(const FieldValue& rhs) const {
  check_same_context(rhs);
  switch (ctx_->kind()) {
    case FieldContext::Kind::Rationals:
      return FieldValue(ctx_, std::get<Rat>(payload_) * std::get<Rat>(rhs.payload_));
    case FieldContext::Kind::Prime:
      return FieldValue(ctx_, mod_mul(std::get<long long>(payload_),
                                      std::get<long long>(rhs.payload_), ctx_->characteristic()));
    case FieldContext::Kind::Galois: {
      PolyP prod = pmul(std::get<std::vector<long long>>(payload_),
                        std::get<std::vector<long long>>(rhs.payload_), ctx_->characteristic());
      prod = pmod(std::move(prod), ctx_->modulus(), ctx_->characteristic());
      prod.resize(ctx_->degree(), 0);
      return FieldValue(ctx_, std::move(prod));
    }
    case FieldContext::Kind::Cyclotomic: {
      PolyQ mod_poly = embed_as_q_poly(ctx_->cyclotomic_modulus());
      PolyQ prod = qmul(std::get<std::vector<Rat>>(payload_), std::get<std::vector<Rat>>(rhs.payload_));
      prod = qmod(std::move(prod), mod_poly);
      prod.resize(ctx_->degree(), Rat(0));
      return FieldValue(ctx_, std::move(prod));
    }
  }
  fail(ErrorCode::InputError, "bad context");
}

FieldValue FieldValue::inverse() const {
  require(!is_zero(), ErrorCode::InputError, "division by zero");
  switch (ctx_->kind()) {
    case FieldContext::Kind::Rationals:
      return FieldValue(ctx_, Rat(1) / std::get<Rat>(payload_));
    case FieldContext::Kind::Prime:
      return FieldValue(ctx_, mod_inv(std::get<long long>(payload_), ctx_->characteristic()));
    case FieldContext::Kind::Galois: {
      PolyP inv =
          pinv(std::get<std::vector<long long>>(payload_), ctx_->modulus(), ctx_->characteristic());
      inv.resize(ctx_->degree(), 0);
      return FieldValue(ctx_, std::move(inv));
    }
    case FieldContext::Kind::Cyclotomic: {
      PolyQ mod_poly = embed_as_q_poly(ctx_->cyclotomic_modulus());
      PolyQ inv = qinv(std::get<std::vector<Rat>>(payload_), mod_poly);
      inv.resize(ctx_->degree(), Rat(0));
      return FieldValue(ctx_, std::move(inv));
    }
  }
  fail(ErrorCode::InputError, "bad context");
}

FieldValue FieldValue::operator/(const FieldValue& rhs) const { return *this * rhs.inverse(); }

FieldValue FieldValue::pow(long long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  FieldValue result = one(ctx_);
  FieldValue base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    base = base * base;
    exponent >>= 1;
  }
  return result;
}

bool FieldValue::operator==(const FieldValue& rhs) const {
  check_same_context(rhs);
  return payload_ == rhs.payload_;
}

int FieldValue::cmp(const FieldValue& a, const FieldValue& b) {
  a.check_same_context(b);
  switch (a.ctx_->kind()) {
    case FieldContext::Kind::Rationals:
      return rat_cmp(std::get<Rat>(a.payload_), std::get<Rat>(b.payload_));
    case FieldContext::Kind::Prime: {
      long long x = std::get<long long>(a.payload_), y = std::get<long long>(b.payload_);
      return x < y ? -1 : (x > y ? 1 : 0);
    }
    case FieldContext::Kind::Galois: {
      const auto& v = std::get<std::vector<long long>>(a.payload_);
      const auto& w = std::get<std::vector<long long>>(b.payload_);
      for (size_t i = v.size(); i > 0; --i) {
        if (v[i - 1] != w[i - 1]) return v[i - 1] < w[i - 1] ? -1 : 1;
      }
      return 0;
    }
    case FieldContext::Kind::Cyclotomic: {
      const auto& v = std::get<std::vector<Rat>>(a.payload_);
      const auto& w = std::get<std::vector<Rat>>(b.payload_);
      for (size_t i = v.size(); i > 0; --i) {
        int c = rat_cmp(v[i - 1], w[i - 1]);
        if (c != 0) return c;
      }
      return 0;
    }
  }
  return 0;
}

FieldValue FieldValue::canonicalized() const {
  switch (ctx_->kind()) {
    case FieldContext::Kind::Rationals:
      return FieldValue(ctx_, std::get<Rat>(payload_));
    case FieldContext::Kind::Prime:
      return FieldValue(ctx_, mod_norm(std::get<long long>(payload_), ctx_->characteristic()));
    case FieldContext::Kind::Galois: {
      PolyP v = pmod(std::get<std::vector<long long>>(payload_), ctx_->modulus(),
                     ctx_->characteristic());
      for (auto& c : v) c = mod_norm(c, ctx_->characteristic());
      v.resize(ctx_->degree(), 0);
      return FieldValue(ctx_, std::move(v));
    }
    case FieldContext::Kind::Cyclotomic: {
      PolyQ v = qmod(std::get<std::vector<Rat>>(payload_),
                     embed_as_q_poly(ctx_->cyclotomic_modulus()));
      v.resize(ctx_->degree(), Rat(0));
      return FieldValue(ctx_, std::move(v));
    }
  }
  return *this;
}

long long FieldValue::multiplicative_order(long long bound) const {
  require(!is_zero(), ErrorCode::InputError, "zero has no multiplicative order");
  FieldValue acc = *this;
  long long ord = 1;
  while (!acc.is_one()) {
    acc = acc * *this;
    ++ord;
    require(ord <= bound, ErrorCode::InputError, "no finite multiplicative order found");
  }
  return ord;
}

std::string FieldValue::to_string() const {
  switch (ctx_->kind()) {
    case FieldContext::Kind::Rationals:
      return rational_to_string(std::get<Rat>(payload_));
    case FieldContext::Kind::Prime:
      return std::to_string(std::get<long long>(payload_));
    case FieldContext::Kind::Galois: {
      const auto& v = std::get<std::vector<long long>>(payload_);
      std::string out;
      for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
      }
      return out;
    }
    case FieldContext::Kind::Cyclotomic: {
      const auto& v = std::get<std::vector<Rat>>(payload_);
      std::string out;
      for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += rational_to_string(v[i]);
      }
      return out;
    }
  }
  return "?";
}

FieldValue FieldValue::parse(const FieldRef& ctx, const std::string& text) {
  require(!text.empty(), ErrorCode::ParseError, "empty field value");
  std::vector<Rat> coeffs;
  for (const auto& part : split_on(text, ',')) coeffs.push_back(parse_rational(part));
  if (coeffs.size() == 1 &&
      (ctx->kind() == FieldContext::Kind::Rationals || ctx->kind() == FieldContext::Kind::Prime ||
       ctx->kind() == FieldContext::Kind::Galois || ctx->kind() == FieldContext::Kind::Cyclotomic))
    return from_rational(ctx, coeffs[0]);
  return from_coefficients(ctx, coeffs);
}

// ---------------------------------------------------------------------------
// roots of unity, splitting fields, embeddings

bool semisimplicity_check(const FieldContext& fc, long long group_order) {
  long long c = fc.characteristic();
  return c == 0 || gcd_ll(c, group_order) == 1;
}

namespace {

// order of the torsion subgroup of the unit group
long long torsion_order(const FieldContext& ctx) {
  switch (ctx.kind()) {
    case FieldContext::Kind::Rationals:
      return 2;
    case FieldContext::Kind::Prime:
      return ctx.characteristic() - 1;
    case FieldContext::Kind::Galois: {
      long long q = 1;
      for (int i = 0; i < ctx.degree(); ++i) q *= ctx.characteristic();
      return q - 1;
    }
    case FieldContext::Kind::Cyclotomic: {
      long long n = ctx.zeta_order();
      return n % 2 == 0 ? n : 2 * n;
    }
  }
  return 1;
}

// generator of the torsion subgroup for cyclotomic contexts: zeta_n for even n,
// -zeta_n (order 2n) for odd n
FieldValue cyclotomic_torsion_generator(const FieldRef& ctx) {
  std::vector<Rat> x(ctx->degree(), Rat(0));
  if (ctx->degree() >= 2)
    x[1] = Rat(1);
  else
    x[0] = Rat(-1);  // degenerate n <= 2 handled as Q elsewhere
  FieldValue zeta(FieldValue::from_coefficients(ctx, x));
  if (ctx->zeta_order() % 2 == 1) return -zeta;
  return zeta;
}

bool has_order_exactly(const FieldValue& u, long long n) {
  if (u.is_zero()) return false;
  if (!u.pow(n).is_one()) return false;
  for (long long q : prime_factors(n))
    if (u.pow(n / q).is_one()) return false;
  return true;
}

}  // namespace

FieldValue primitive_root_of_unity(const FieldRef& ctx, long long n) {
  require(n >= 1, ErrorCode::InputError, "root order must be positive");
  if (n == 1) return FieldValue::one(ctx);
  switch (ctx->kind()) {
    case FieldContext::Kind::Rationals: {
      require(n == 2, ErrorCode::NoSuchRoot, "Q only contains roots of unity of order <= 2");
      return FieldValue::from_integer(ctx, -1);
    }
    case FieldContext::Kind::Prime: {
      long long p = ctx->characteristic();
      require((p - 1) % n == 0, ErrorCode::NoSuchRoot,
              "no order-" + std::to_string(n) + " root in GF(" + std::to_string(p) + ")");
      for (long long a = 1; a < p; ++a) {
        FieldValue u = FieldValue::from_integer(ctx, a);
        if (has_order_exactly(u, n)) return u;
      }
      fail(ErrorCode::NoSuchRoot, "exhausted field without finding root");
    }
    case FieldContext::Kind::Galois: {
      long long q = torsion_order(*ctx) + 1;
      require((q - 1) % n == 0, ErrorCode::NoSuchRoot, "no order-" + std::to_string(n) + " root");
      require(q <= 1 << 20, ErrorCode::CapExceeded, "field too large for root scan");
      // smallest canonical form among all elements of exact order n
      FieldValue best = FieldValue::zero(ctx);
      bool found = false;
      for (long long code = 1; code < q; ++code) {
        std::vector<Rat> coeffs(ctx->degree());
        long long t = code;
        for (int i = 0; i < ctx->degree(); ++i) {
          coeffs[i] = Rat(BigInt(t % ctx->characteristic()));
          t /= ctx->characteristic();
        }
        FieldValue u = FieldValue::from_coefficients(ctx, coeffs);
        if (has_order_exactly(u, n) && (!found || FieldValue::cmp(u, best) < 0)) {
          best = u;
          found = true;
        }
      }
      require(found, ErrorCode::NoSuchRoot, "exhausted field without finding root");
      return best;
    }
    case FieldContext::Kind::Cyclotomic: {
      long long m = ctx->zeta_order();
      if (m % n == 0) {
        std::vector<Rat> x(ctx->degree(), Rat(0));
        x[1] = Rat(1);
        return FieldValue::from_coefficients(ctx, x).pow(m / n);
      }
      long long big_n = torsion_order(*ctx);
      require(big_n % n == 0, ErrorCode::NoSuchRoot,
              "no order-" + std::to_string(n) + " root in " + ctx->spec_string());
      FieldValue xi = cyclotomic_torsion_generator(ctx);
      FieldValue best = FieldValue::zero(ctx);
      bool found = false;
      for (long long j = 1; j <= n; ++j) {
        if (gcd_ll(j, n) != 1) continue;
        FieldValue u = xi.pow((big_n / n) * j);
        if (!found || FieldValue::cmp(u, best) < 0) {
          best = u;
          found = true;
        }
      }
      return best;
    }
  }
  fail(ErrorCode::InputError, "bad context");
}

std::vector<FieldValue> roots_of_unity_dividing(const FieldRef& ctx, long long d) {
  long long g = gcd_ll(d, torsion_order(*ctx));
  std::vector<FieldValue> out;
  if (g == 1) {
    out.push_back(FieldValue::one(ctx));
    return out;
  }
  FieldValue w = primitive_root_of_unity(ctx, g);
  FieldValue acc = FieldValue::one(ctx);
  for (long long i = 0; i < g; ++i) {
    out.push_back(acc);
    acc = acc * w;
  }
  std::sort(out.begin(), out.end(),
            [](const FieldValue& a, const FieldValue& b) { return FieldValue::cmp(a, b) < 0; });
  return out;
}

FieldRef splitting_extension(const FieldRef& ctx, long long exp_g) {
  require(semisimplicity_check(*ctx, exp_g), ErrorCode::NotSemisimple,
          "characteristic divides the group order");
  // already splitting?
  try {
    primitive_root_of_unity(ctx, exp_g);
    return ctx;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoSuchRoot) throw;
  }
  switch (ctx->kind()) {
    case FieldContext::Kind::Rationals:
      return FieldContext::cyclotomic(exp_g);
    case FieldContext::Kind::Cyclotomic:
      return FieldContext::cyclotomic(lcm_ll(ctx->zeta_order(), exp_g));
    case FieldContext::Kind::Prime: {
      long long k = order_mod(ctx->characteristic(), exp_g);
      return FieldContext::galois(ctx->characteristic(), static_cast<int>(k));
    }
    case FieldContext::Kind::Galois: {
      long long k = lcm_ll(ctx->degree(), order_mod(ctx->characteristic(), exp_g));
      return FieldContext::galois(ctx->characteristic(), static_cast<int>(k));
    }
  }
  fail(ErrorCode::InputError, "bad context");
}

bool embeds_into(const FieldContext& from, const FieldContext& into) {
  if (from.same_as(into)) return true;
  using K = FieldContext::Kind;
  if (from.kind() == K::Rationals &&
      (into.kind() == K::Rationals || into.kind() == K::Cyclotomic))
    return true;
  if (from.kind() == K::Cyclotomic && into.kind() == K::Cyclotomic)
    return into.zeta_order() % from.zeta_order() == 0;
  if (from.kind() == K::Prime && (into.kind() == K::Prime || into.kind() == K::Galois))
    return from.characteristic() == into.characteristic();
  return false;
}

FieldValue embed_value(const FieldValue& value, const FieldRef& target) {
  const FieldContext& from = *value.context();
  require(embeds_into(from, *target), ErrorCode::FieldMismatch,
          "no canonical embedding " + from.spec_string() + " -> " + target->spec_string());
  if (from.same_as(*target)) return value;
  using K = FieldContext::Kind;
  if (from.kind() == K::Rationals)
    return FieldValue::from_rational(target, parse_rational(value.to_string()));
  if (from.kind() == K::Prime)
    return FieldValue::from_integer(target, std::stoll(value.to_string()));
  // Q(zeta_m) -> Q(zeta_n): zeta_m maps to zeta_n^(n/m)
  long long shift = target->zeta_order() / from.zeta_order();
  std::vector<Rat> x(target->degree(), Rat(0));
  x[1] = Rat(1);
  FieldValue zeta_pow = FieldValue::from_coefficients(target, x).pow(shift);
  FieldValue acc = FieldValue::zero(target);
  FieldValue zp = FieldValue::one(target);
  for (const auto& part : split_on(value.to_string(), ',')) {
    acc = acc + zp * FieldValue::from_rational(target, parse_rational(part));
    zp = zp * zeta_pow;
  }
  return acc;
}

FieldValue random_value(const FieldRef& ctx, Rng& rng) {
  switch (ctx->kind()) {
    case FieldContext::Kind::Rationals: {
      long long num = rng.range(-9, 9);
      long long den = rng.range(1, 6);
      return FieldValue::from_rational(ctx, make_rat(num, den));
    }
    case FieldContext::Kind::Prime:
      return FieldValue::from_integer(ctx, rng.range(0, ctx->characteristic() - 1));
    case FieldContext::Kind::Galois: {
      std::vector<Rat> coeffs(ctx->degree());
      for (auto& c : coeffs) c = Rat(BigInt(rng.range(0, ctx->characteristic() - 1)));
      return FieldValue::from_coefficients(ctx, coeffs);
    }
    case FieldContext::Kind::Cyclotomic: {
      std::vector<Rat> coeffs(ctx->degree());
      for (auto& c : coeffs) c = Rat(BigInt(rng.range(-3, 3)));
      return FieldValue::from_coefficients(ctx, coeffs);
    }
  }
  fail(ErrorCode::InputError, "bad context");
}

FieldValue random_nonzero_value(const FieldRef& ctx, Rng& rng) {
  for (;;) {
    FieldValue v = random_value(ctx, rng);
    if (!v.is_zero()) return v;
  }
}

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InputError: return "InputError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::AxiomViolation: return "AxiomViolation";
    case ErrorCode::ActionAxiomViolation: return "ActionAxiomViolation";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NoIrreducibleFound: return "NoIrreducibleFound";
    case ErrorCode::NoSuchRoot: return "NoSuchRoot";
    case ErrorCode::NotSemisimple: return "NotSemisimple";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::NotAbelian: return "NotAbelian";
    case ErrorCode::MismatchedContext: return "MismatchedContext";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ZeroFunction: return "ZeroFunction";
    case ErrorCode::FullSupport: return "FullSupport";
    case ErrorCode::NotHomomorphism: return "NotHomomorphism";
    case ErrorCode::WrongDegreeSum: return "WrongDegreeSum";
    case ErrorCode::OrthogonalityFailure: return "OrthogonalityFailure";
    case ErrorCode::BoundViolation: return "BoundViolation";
    case ErrorCode::IoError: return "IoError";
  }
  return "Error";
}

}  // namespace gact
