#include <algorithm>

#include "ctc/gcd.hpp"
#include "ctc/irreducibility.hpp"
#include "ctc/parse.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace ctc;

namespace {

RosterPtr xyzu() { return make_roster({"x", "y", "z", "u"}); }

Polynomial P(const std::string& text) { return parse_polynomial(text, xyzu()); }

}  // namespace

TEST_CASE("coefficient gcd over fiber variables") {
  CHECK(coefficient_gcd(P("x*z^2 + x*u^2"), {"z", "u"}) == P("x"));
  CHECK(coefficient_gcd(P("z^2 + u^2"), {"z", "u"}) == P("1"));
  CHECK(coefficient_gcd(P("x^2*z^2 + x^3*u^2"), {"z", "u"}) == P("x^2"));
  CHECK_THROWS_AS(coefficient_gcd(P("0"), {"z"}), DomainError);

  // divides every fiber coefficient; cofactors have unit content
  auto rng = testing::seeded_rng(21);
  auto rx = make_roster({"x"});
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial d = reindex(testing::random_polynomial(rng, rx, 3, 3), xyzu());
    Polynomial c1 = reindex(testing::random_polynomial(rng, rx, 3, 3), xyzu());
    Polynomial c2 = reindex(testing::random_polynomial(rng, rx, 3, 3), xyzu());
    Polynomial f = d * c1 * P("z^2") + d * c2 * P("z*u^3");
    if (f.is_zero()) continue;
    Polynomial g = coefficient_gcd(f, {"z", "u"});
    CHECK(exact_divide(d * c1, g).has_value());
    CHECK(exact_divide(d * c2, g).has_value());
    Polynomial cof = *exact_divide(f, g);
    CHECK(coefficient_gcd(cof, {"z", "u"}).is_constant());
  }
}

TEST_CASE("multivariate gcd and exact division") {
  CHECK(poly_gcd(P("0"), P("2*x^2")) == P("x^2"));
  CHECK(poly_gcd(P("x^2 - y^2"), P("x^2 + 2*x*y + y^2")) == P("x + y"));
  CHECK(poly_gcd(P("6"), P("4")) == P("1"));
  CHECK(poly_gcd(P("0"), P("0")).is_zero());

  CHECK(exact_divide(P("x^2 - y^2"), P("x - y")).value() == P("x + y"));
  CHECK(!exact_divide(P("x^2 + y"), P("x + 1")).has_value());
  CHECK_THROWS_AS(exact_divide(P("x"), P("0")), DomainError);

  auto rng = testing::seeded_rng(22);
  for (int trial = 0; trial < 150; ++trial) {
    Polynomial a = testing::random_polynomial(rng, xyzu(), 4, 3);
    Polynomial b = testing::random_polynomial(rng, xyzu(), 4, 3);
    Polynomial c = testing::random_polynomial(rng, xyzu(), 3, 2);
    CHECK(exact_divide(a * c, c).value() == a);
    Polynomial g = poly_gcd(a * c, b * c);
    CHECK(exact_divide(g, poly_gcd(a, b) * c).has_value());
    CHECK(exact_divide(a * c, g).has_value());
    CHECK(exact_divide(b * c, g).has_value());
  }
}

TEST_CASE("monomial content and minimum exponents") {
  auto [common, stripped] = monomial_content(P("x^2*y + x^3*u^2"));
  CHECK(common == Monomial{2, 0, 0, 0});
  CHECK(stripped == P("y + x*u^2"));
  CHECK(min_exponent(P("x^2*y + x^3*u^2"), 0) == 2);
  CHECK(min_exponent(P("x^2*y + x^3*u^2"), 1) == 0);
}

TEST_CASE("binary form profiles via squarefree decomposition") {
  CHECK(binary_form_profile(P("z^2 + u^2")) == std::vector<int>{1, 1});
  CHECK(binary_form_profile(P("z^2*u")) == std::vector<int>{2, 1});
  CHECK(binary_form_profile(P("z^3 + 3*z^2*u + 3*z*u^2 + u^3")) ==
        std::vector<int>{3});
  CHECK(binary_form_profile(P("z^4")) == std::vector<int>{4});
  CHECK(binary_form_profile(P("z^2 - u^2")) == std::vector<int>{1, 1});
  CHECK_THROWS_AS(binary_form_profile(P("z^2 + u")), DomainError);
  CHECK_THROWS_AS(binary_form_profile(P("x*y*z")), DomainError);

  // profile multiplicities sum to the degree; oracle: built from known factors
  auto rng = testing::seeded_rng(23);
  std::uniform_int_distribution<int> mult(1, 3);
  std::uniform_int_distribution<int> coef(1, 4);
  for (int trial = 0; trial < 60; ++trial) {
    // distinct linear factors a*z + b*u with a/b pairwise different
    std::vector<std::pair<int, int>> dirs = {
        {1, coef(rng)}, {1, -coef(rng)}, {coef(rng) + 4, 1}, {0, 1}};
    std::vector<int> mults;
    Polynomial f = P("1");
    int count = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < count; ++i) {
      int m = mult(rng);
      mults.push_back(m);
      Polynomial lin = P("z") * Rational(dirs[i].first) +
                       P("u") * Rational(dirs[i].second);
      f = f * pow(lin, m, nullptr);
    }
    std::sort(mults.rbegin(), mults.rend());
    auto profile = binary_form_profile(f);
    CHECK(profile == mults);
    int sum = 0;
    for (int m : profile) sum += m;
    CHECK(sum == f.total_degree());
  }
}

TEST_CASE("quadratic form rank and rational splitting") {
  CHECK(quadratic_form_rank(P("x*y + z^2 + u^2")) == 4);
  CHECK(quadratic_form_rank(P("x*y + z^2")) == 3);
  CHECK(quadratic_form_rank(P("x*y")) == 2);
  CHECK(quadratic_form_rank(P("x^2 + x*y + y^2")) == 2);
  CHECK(quadratic_form_rank(P("x^2")) == 1);
  CHECK(quadratic_form_rank(P("0")) == 0);
  CHECK_THROWS_AS(quadratic_form_rank(P("x^3")), DomainError);

  auto check_product = [&](const Polynomial& q, const QuadricSplit& s) {
    switch (s.kind) {
      case QuadricSplit::Kind::kSquare:
        CHECK(q == s.l1 * s.l1 * s.c);
        break;
      case QuadricSplit::Kind::kSplit:
        CHECK(q == s.l1 * s.l2 * s.c);
        break;
      case QuadricSplit::Kind::kAnisotropic:
        CHECK(q == (s.l1 * s.l1 + s.l2 * s.l2 * s.d) * s.c);
        CHECK(!rational_sqrt(-s.d).has_value());
        break;
      default:
        break;
    }
  };

  CHECK(split_quadric(P("z*u")).kind == QuadricSplit::Kind::kSplit);
  CHECK(split_quadric(P("z^2 - u^2")).kind == QuadricSplit::Kind::kSplit);
  CHECK(split_quadric(P("z^2 + u^2")).kind == QuadricSplit::Kind::kAnisotropic);
  CHECK(split_quadric(P("z^2 + z*u + u^2")).kind ==
        QuadricSplit::Kind::kAnisotropic);
  CHECK(split_quadric(P("z^2 + 2*z*u + u^2")).kind ==
        QuadricSplit::Kind::kSquare);
  CHECK(split_quadric(P("x*y + z^2")).kind == QuadricSplit::Kind::kHigherRank);
  CHECK(split_quadric(P("0")).kind == QuadricSplit::Kind::kZero);

  for (const char* text :
       {"z*u", "z^2 - u^2", "z^2 + u^2", "z^2 + z*u + u^2", "z^2 + 2*z*u + u^2",
        "x*z + 2*z*u", "x^2 - 2*x*y + y^2", "4*z^2 - 9*u^2", "x*y + x*z + y*u"}) {
    Polynomial q = P(text);
    check_product(q, split_quadric(q));
  }
}

TEST_CASE("cube detection on cubic forms") {
  CHECK(cube_root_linear(P("z^3 + 3*z^2*u + 3*z*u^2 + u^3")).value() ==
        P("z + u"));
  CHECK(cube_root_linear(P("z^3")).value() == P("z"));
  CHECK(cube_root_linear(P("8*z^3")).value() == P("z"));
  CHECK(cube_root_linear(P("8*z^3 + 12*z^2*u + 6*z*u^2 + u^3")).value() ==
        P("z + 1/2*u"));
  CHECK(!cube_root_linear(P("z^2*u")).has_value());
  CHECK(!cube_root_linear(P("z^3 + u^3")).has_value());
  CHECK(!cube_root_linear(P("x*y*z")).has_value());
  CHECK(!cube_root_linear(P("0")).has_value());
  CHECK_THROWS_AS(cube_root_linear(P("z^2")), DomainError);
}

TEST_CASE("rational square roots") {
  CHECK(rational_sqrt(Rational(4)).value() == 2);
  CHECK(rational_sqrt(Rational(9, 4)).value() == Rational(3, 2));
  CHECK(rational_sqrt(Rational(0)).value() == 0);
  CHECK(!rational_sqrt(Rational(2)).has_value());
  CHECK(!rational_sqrt(Rational(-4)).has_value());
}

TEST_CASE("irreducibility over the closure") {
  WeightVector w1({1, 1, 1, 1});
  CHECK(irreducibility_over_closure(P("x*y + z^2 + u^2"), w1) ==
        Irreducibility::kIrreducible);
  CHECK(irreducibility_over_closure(P("z^2 - u^2"), w1) ==
        Irreducibility::kReducible);
  CHECK(irreducibility_over_closure(P("z*u"), w1) == Irreducibility::kReducible);
  CHECK(irreducibility_over_closure(P("z^2 + u^2"), w1) ==
        Irreducibility::kReducible);

  // weighted homogeneous inputs
  CHECK(irreducibility_over_closure(P("x*y + z^2"), WeightVector({0, 2, 1, 4})) ==
        Irreducibility::kIrreducible);
  CHECK(irreducibility_over_closure(P("x^2*y + z^2*u"), WeightVector({0, 3, 1, 1})) ==
        Irreducibility::kIrreducible);
  CHECK(irreducibility_over_closure(P("y^2 + x^3*z"), WeightVector({1, 5, 7, 3})) ==
        Irreducibility::kIrreducible);
  CHECK(irreducibility_over_closure(P("y^2 - x^6"), WeightVector({1, 3, 1, 1})) ==
        Irreducibility::kReducible);
  CHECK(irreducibility_over_closure(P("y^2 + x^3"), WeightVector({2, 3, 1, 1})) ==
        Irreducibility::kIrreducible);
  CHECK(irreducibility_over_closure(P("y^2 + x^2*z^2"), WeightVector({1, 2, 1, 5})) ==
        Irreducibility::kUnknown);

  // monomials and monomial factors
  CHECK(irreducibility_over_closure(P("x"), w1) == Irreducibility::kIrreducible);
  CHECK(irreducibility_over_closure(P("x^2"), w1) == Irreducibility::kReducible);
  CHECK(irreducibility_over_closure(P("x^2*y + x*y^2"), w1) ==
        Irreducibility::kReducible);

  // ternary cubics through the Hessian pairing
  CHECK(irreducibility_over_closure(P("x^3 + y^3 + z^3"), w1) ==
        Irreducibility::kIrreducible);
  CHECK(irreducibility_over_closure(P("x^3 + 2*y^3 + 4*z^3 - 6*x*y*z"), w1) ==
        Irreducibility::kReducible);
  CHECK(irreducibility_over_closure(P("x^3 + y^3 + x*y*z"), w1) ==
        Irreducibility::kIrreducible);
  CHECK(irreducibility_over_closure(P("x^3 + y^3 + x*z^2"), w1) ==
        Irreducibility::kIrreducible);
  CHECK(irreducibility_over_closure(
            P("x^2*y + x^2*z + x*y^2 + 2*x*y*z + x*z^2 + y^2*z + y*z^2"), w1) ==
        Irreducibility::kReducible);  // (x+y)(y+z)(x+z)
  CHECK(irreducibility_over_closure(
            P("x^3 + 3*x^2*y + 3*x*y^2 + y^3 + x^2*z + 2*x*y*z + y^2*z"), w1) ==
        Irreducibility::kReducible);  // (x+y)^2*(x+y+z)

  // errors
  CHECK_THROWS_AS(irreducibility_over_closure(P("1"), w1), DomainError);
  CHECK_THROWS_AS(irreducibility_over_closure(P("x + z^2"), w1), DomainError);
}

TEST_CASE("irreducibility matches a factor-built oracle") {
  auto rng = testing::seeded_rng(24);
  WeightVector w1({1, 1, 1, 1});
  int reducible_seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    // Linear times conic is always reducible, whatever the coefficients.
    Polynomial l1 = P("x") * Rational(1 + (int)(rng() % 3)) +
                    P("y") * Rational((int)(rng() % 5) - 2) +
                    P("z") * Rational((int)(rng() % 5) - 2);
    Polynomial l2 = P("x") * Rational((int)(rng() % 3) - 1) +
                    P("y") * Rational(1 + (int)(rng() % 3)) +
                    P("z") * Rational((int)(rng() % 5) - 2);
    Polynomial q = P("x^2 + x*y + y^2 + z^2");  // rank 3
    Polynomial product = l1 * (l2 * l2 + q);
    CHECK(irreducibility_over_closure(product, w1) ==
          Irreducibility::kReducible);
    ++reducible_seen;
  }
  CHECK(reducible_seen == 200);

  // Fixed irreducible panel: smooth plane cubics x^3+y^3+z^3+t*x*y*z for
  // generic t (discriminant nonzero).
  for (int t : {0, 1, 2, 4, 5}) {
    Polynomial c = P("x^3 + y^3 + z^3") + P("x*y*z") * Rational(t);
    CHECK(irreducibility_over_closure(c, w1) == Irreducibility::kIrreducible);
  }
  // t = -3 gives the reducible member (x+y+z) divides it.
  Polynomial degenerate = P("x^3 + y^3 + z^3") + P("x*y*z") * Rational(-3);
  CHECK(irreducibility_over_closure(degenerate, w1) ==
        Irreducibility::kReducible);
}
