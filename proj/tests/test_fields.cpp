#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gact/field.hpp"
#include "oracles.hpp"

using namespace gact;

TEST_CASE("field specs parse into the right contexts") {
  CHECK(field_from_spec("Q")->kind() == FieldContext::Kind::Rationals);
  auto gf7 = field_from_spec("GF(7)");
  CHECK(gf7->kind() == FieldContext::Kind::Prime);
  CHECK(gf7->characteristic() == 7);
  auto gf4 = field_from_spec("GF(2^2)");
  CHECK(gf4->kind() == FieldContext::Kind::Galois);
  CHECK(gf4->degree() == 2);
  CHECK(gf4->spec_string() == "GF(2^2)");

  CHECK_THROWS_AS(field_from_spec("GF(4)"), Error);   // grammar wants GF(2^2)
  CHECK_THROWS_AS(field_from_spec("GF(6)"), Error);   // not prime
  CHECK_THROWS_AS(field_from_spec("Q(zeta)"), Error);
  try {
    field_from_spec("GF(4)");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPrime);
  }
}

TEST_CASE("cyclotomic contexts carry the exact cyclotomic polynomial") {
  // divide x^3 - 1 by x - 1 independently
  auto expected = oracles::poly_divide_exact({-1, 0, 0, 1}, {-1, 1});
  CHECK(expected == std::vector<long long>{1, 1, 1});
  auto ctx = field_from_spec("Q(zeta_3)");
  REQUIRE(ctx->kind() == FieldContext::Kind::Cyclotomic);
  REQUIRE(ctx->cyclotomic_modulus().size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(ctx->cyclotomic_modulus()[i] == expected[i]);

  // phi_12 = x^4 - x^2 + 1 via the tower of exact divisions
  auto c12 = FieldContext::cyclotomic(12);
  std::vector<long long> phi12 = {1, 0, -1, 0, 1};
  REQUIRE(c12->cyclotomic_modulus().size() == 5);
  for (int i = 0; i < 5; ++i) CHECK(c12->cyclotomic_modulus()[i] == phi12[i]);

  // Q(zeta_1) and Q(zeta_2) collapse to Q
  CHECK(FieldContext::cyclotomic(2)->kind() == FieldContext::Kind::Rationals);
}

TEST_CASE("extension modulus is the first irreducible in coefficient order") {
  auto gf4 = FieldContext::galois(2, 2);
  CHECK(gf4->modulus() == std::vector<long long>{1, 1, 1});  // x^2 + x + 1
  auto gf9 = FieldContext::galois(3, 2);
  CHECK(gf9->modulus() == std::vector<long long>{1, 0, 1});  // x^2 + 1
  auto gf8 = FieldContext::galois(2, 3);
  CHECK(gf8->modulus() == std::vector<long long>{1, 1, 0, 1});  // x^3 + x + 1
}

TEST_CASE("semisimplicity condition") {
  CHECK(semisimplicity_check(*field_from_spec("Q"), 12));
  CHECK_FALSE(semisimplicity_check(*field_from_spec("GF(2)"), 2));
  CHECK(semisimplicity_check(*field_from_spec("GF(7)"), 6));
  CHECK_FALSE(semisimplicity_check(*field_from_spec("GF(3)"), 6));
}

TEST_CASE("primitive roots of unity are deterministic and have exact order") {
  auto gf7 = field_from_spec("GF(7)");
  // oracle: scan orders of 2..6 mod 7 by hand
  long long first_with_order_6 = 0;
  for (long long a = 2; a < 7; ++a)
    if (oracles::order_mod_oracle(a, 7) == 6) {
      first_with_order_6 = a;
      break;
    }
  CHECK(first_with_order_6 == 3);
  CHECK(primitive_root_of_unity(gf7, 6) == FieldValue::from_integer(gf7, 3));

  auto q = field_from_spec("Q");
  CHECK(primitive_root_of_unity(q, 2) == FieldValue::from_integer(q, -1));
  CHECK_THROWS_AS(primitive_root_of_unity(q, 3), Error);
  CHECK_THROWS_AS(primitive_root_of_unity(field_from_spec("GF(5)"), 3), Error);

  auto c5 = field_from_spec("Q(zeta_5)");
  FieldValue w = primitive_root_of_unity(c5, 5);
  CHECK(w.pow(5).is_one());
  CHECK_FALSE(w.is_one());
  // 1 + w + w^2 + w^3 + w^4 = 0 for prime order
  FieldValue acc = FieldValue::zero(c5);
  for (int i = 0; i < 5; ++i) acc = acc + w.pow(i);
  CHECK(acc.is_zero());

  for (long long n : {1LL, 2LL, 3LL, 4LL, 6LL, 12LL}) {
    FieldValue root = primitive_root_of_unity(FieldContext::cyclotomic(12), n);
    CHECK(root.multiplicative_order() == n);
  }
}

TEST_CASE("roots of unity dividing a given order") {
  auto q = field_from_spec("Q");
  auto roots = roots_of_unity_dividing(q, 4);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == FieldValue::from_integer(q, -1));
  CHECK(roots[1] == FieldValue::one(q));

  auto gf7 = field_from_spec("GF(7)");
  auto cube = roots_of_unity_dividing(gf7, 3);
  std::vector<long long> got;
  for (const auto& r : cube) got.push_back(std::stoll(r.to_string()));
  CHECK(got == std::vector<long long>{1, 2, 4});

  CHECK(roots_of_unity_dividing(field_from_spec("GF(2)"), 8).size() == 1);
}

TEST_CASE("splitting extensions") {
  CHECK(splitting_extension(field_from_spec("Q"), 6)->spec_string() == "Q(zeta_6)");
  CHECK(splitting_extension(field_from_spec("Q"), 2)->spec_string() == "Q");
  CHECK(splitting_extension(field_from_spec("GF(7)"), 6)->spec_string() == "GF(7)");
  CHECK(oracles::order_mod_oracle(2, 3) == 2);
  CHECK(splitting_extension(field_from_spec("GF(2)"), 3)->spec_string() == "GF(2^2)");
  CHECK_THROWS_AS(splitting_extension(field_from_spec("GF(2)"), 2), Error);
  CHECK(splitting_extension(field_from_spec("Q(zeta_3)"), 4)->spec_string() == "Q(zeta_12)");
  // a primitive 6th root already lives in Q(zeta_3), namely -zeta_3
  CHECK(splitting_extension(field_from_spec("Q(zeta_3)"), 6)->spec_string() == "Q(zeta_3)");
}

TEST_CASE("exact arithmetic laws on random triples") {
  for (const char* spec : {"Q", "GF(7)", "GF(2^2)", "Q(zeta_3)", "Q(zeta_6)"}) {
    FieldRef ctx = field_from_spec(spec);
    Rng rng(42);
    const int trials = spec[0] == 'Q' ? 2500 : 10000;
    for (int t = 0; t < trials; ++t) {
      FieldValue a = random_value(ctx, rng), b = random_value(ctx, rng),
                 c = random_value(ctx, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      if (!a.is_zero()) CHECK(a * a.inverse() == FieldValue::one(ctx));
      CHECK((a - a).is_zero());
    }
  }
}

TEST_CASE("canonicalization is idempotent and equality is canonical-form equality") {
  for (const char* spec : {"Q", "GF(5)", "GF(3^2)", "Q(zeta_4)"}) {
    FieldRef ctx = field_from_spec(spec);
    Rng rng(7);
    for (int t = 0; t < 200; ++t) {
      FieldValue v = random_value(ctx, rng);
      CHECK(v.canonicalized() == v);
      CHECK(FieldValue::parse(ctx, v.to_string()) == v);
    }
  }
  auto q = field_from_spec("Q");
  CHECK(FieldValue::parse(q, "-4/-6").to_string() == "2/3");
  CHECK(FieldValue::parse(q, "3/3").to_string() == "1");
}

TEST_CASE("value ordering is a strict total order") {
  FieldRef ctx = field_from_spec("GF(3^2)");
  auto all = std::vector<FieldValue>{};
  for (int c0 = 0; c0 < 3; ++c0)
    for (int c1 = 0; c1 < 3; ++c1)
      all.push_back(FieldValue::from_coefficients(ctx, {make_rat(c0), make_rat(c1)}));
  std::sort(all.begin(), all.end(),
            [](const FieldValue& a, const FieldValue& b) { return FieldValue::cmp(a, b) < 0; });
  for (size_t i = 0; i + 1 < all.size(); ++i) CHECK(FieldValue::cmp(all[i], all[i + 1]) < 0);
}

TEST_CASE("canonical embeddings") {
  auto q = field_from_spec("Q");
  auto c3 = field_from_spec("Q(zeta_3)");
  auto c6 = field_from_spec("Q(zeta_6)");
  FieldValue half = FieldValue::parse(q, "1/2");
  CHECK(embed_value(half, c3).to_string() == "1/2,0");

  // zeta_3 -> zeta_6^2 must still satisfy x^2 + x + 1 = 0
  FieldValue z3 = primitive_root_of_unity(c3, 3);
  FieldValue image = embed_value(z3, c6);
  CHECK((image * image + image + FieldValue::one(c6)).is_zero());
  CHECK(image.multiplicative_order() == 3);

  auto gf2 = field_from_spec("GF(2)");
  auto gf4 = field_from_spec("GF(2^2)");
  CHECK(embed_value(FieldValue::one(gf2), gf4) == FieldValue::one(gf4));
  CHECK_THROWS_AS(embed_value(FieldValue::one(gf2), c3), Error);
}

TEST_CASE("finite-field serialization formats") {
  auto gf4 = field_from_spec("GF(2^2)");
  FieldValue x = FieldValue::from_coefficients(gf4, {make_rat(0), make_rat(1)});
  CHECK(x.to_string() == "0,1");
  CHECK(FieldValue::parse(gf4, "0,1") == x);
  CHECK(FieldValue::parse(gf4, "1") == FieldValue::one(gf4));
  // x * x = x + 1 modulo x^2 + x + 1
  CHECK((x * x).to_string() == "1,1");

  auto c4 = field_from_spec("Q(zeta_4)");
  FieldValue i = primitive_root_of_unity(c4, 4);
  CHECK((i * i) == FieldValue::from_integer(c4, -1));
  CHECK(FieldValue::parse(c4, "1/2,-2") == FieldValue::from_coefficients(
                                               c4, {make_rat(1, 2), make_rat(-2)}));
}
