#include "ctc/tilting.hpp"

#include <string>
#include <vector>

#include "ctc/error.hpp"
#include "ctc/parse.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace ctc;

namespace {

const RosterPtr kXyzu = make_roster({"x", "y", "z", "u"});
const RosterPtr kXyzut = make_roster({"x", "y", "z", "u", "t"});
const std::vector<std::string> kCurve = {"z", "u", "y"};

Polynomial pp(const std::string& text, RosterPtr roster = kXyzu) {
  return parse_polynomial(text, std::move(roster));
}

EmbeddingState setup(const std::string& f, long m) {
  return init_embedding(pp(f), kCurve, {m, 1, 1});
}

// Eliminates the tilt variables through their relations; the result should
// be the original equation back on (x, y, z, u).
Polynomial eliminate(const FinalEmbedding& fin) {
  Polynomial sigma = fin.state.sigma;
  const RosterPtr& roster = fin.state.roster;
  for (std::size_t j = fin.kappas.size(); j-- > 0;) {
    std::map<std::string, Polynomial> images{
        {roster->name(4 + j), fin.kappas[j]}};
    sigma = substitute(sigma, images, roster);
  }
  return reindex(sigma, kXyzu);
}

}  // namespace

TEST_CASE("embedding setup and validation") {
  EmbeddingState st = setup("x*y + z^2 + u^2", 2);
  CHECK(st.sigma == pp("x*y + z^2 + u^2"));
  CHECK(st.weights.entries == std::vector<long>{0, 2, 1, 1});
  CHECK(st.active == 1);
  CHECK(st.h == pp("x"));
  CHECK(st.g == pp("z^2 + u^2"));
  CHECK(st.relations.empty());
  CHECK(st.steps == 0);

  // The square term of y lands in h: sigma = (y + x^2)*y + z^2.
  EmbeddingState sq = setup("y^2 + x^2*y + z^2", 2);
  CHECK(sq.h == pp("y + x^2"));
  CHECK(sq.g == pp("z^2"));

  CHECK_THROWS_AS(init_embedding(pp("x*y + z^2"), {"z", "u", "x"}, {2, 1, 1}),
                  DomainError);
  CHECK_THROWS_AS(init_embedding(pp("x*y + z^2"), kCurve, {2, 1, 2}),
                  DomainError);
  CHECK_THROWS_AS(init_embedding(pp("x*y + z^2"), kCurve, {0, 1, 1}),
                  DomainError);
  // Multiplicity one at the origin.
  CHECK_THROWS_AS(setup("y", 2), DomainError);
  // x^2 does not vanish on the curve.
  CHECK_THROWS_AS(setup("x^2 + y^2", 2), DomainError);
  CHECK_THROWS_AS(init_embedding(Polynomial::zero(kXyzu), kCurve, {2, 1, 1}),
                  DomainError);
}

TEST_CASE("single step decompositions") {
  // The gcd x splits off; the remainder sets the new weight.
  EmbeddingState st = setup("x^2*y + z*y + x*z^2 + x*u^2 + u^4", 2);
  TiltStepResult r = tilt_step(st);
  REQUIRE(!r.terminated);
  CHECK(r.state.weights.entries == std::vector<long>{0, 2, 1, 1, 3});
  CHECK(r.state.roster->names() ==
        std::vector<std::string>{"x", "y", "z", "u", "t"});
  CHECK(r.state.relations.size() == 1);
  CHECK(r.state.relations[0] == pp("t - x*y - z^2 - u^2", kXyzut));
  CHECK(r.state.sigma == pp("x*t + y*z + u^4", kXyzut));
  CHECK(r.state.active == 4);
  CHECK(r.state.h == pp("x", kXyzut));
  CHECK(r.state.g == pp("y*z + u^4", kXyzut));
  CHECK(r.state.thetas.size() == 1);
  CHECK(r.state.thetas[0] == pp("x", kXyzut));
  CHECK(r.state.steps == 1);

  // Everything already sits in the lowest part: immediate termination.
  TiltStepResult stop = tilt_step(setup("x*y + z^2 + u^2", 2));
  REQUIRE(stop.terminated);
  CHECK(stop.final_embedding->weights.entries ==
        std::vector<long>{0, 2, 1, 1});
  CHECK(stop.final_embedding->vbasis.size() == 1);

  // Coefficients x^2 and 1 are coprime, so the gcd is trivial.
  TiltStepResult flat = tilt_step(setup("y^2 + x^2*y + z^2*u", 3));
  REQUIRE(flat.terminated);
  CHECK(flat.final_embedding->kappas.empty());
}

TEST_CASE("full runs settle the weight patterns") {
  struct Case {
    const char* f;
    long m;
    std::vector<long> weights;
    std::size_t tilts;
  };
  const std::vector<Case> table = {
      {"x*y + z^2 + u^3", 2, {0, 2, 1, 1}, 0},
      {"x^2*y + z*y + x*z^2 + x*u^2 + u^4", 2, {0, 2, 1, 1, 3}, 1},
      {"x^2*y + y^3 + x*z + u^3", 1, {0, 1, 1, 1, 3}, 1},
      {"y^2 + x^2*y + z^2*u + u^4", 3, {0, 3, 1, 1}, 0},
      {"y^2 + x^2*y + x*z^2 + u^4", 2, {0, 2, 1, 1, 4}, 1},
      {"y^2 + x^2*y + x^2*z + z^3 + u^3", 1, {0, 1, 1, 1, 2}, 1},
      {"y^2 + x^2*y + x^3*u + z^3 + u^4", 1, {0, 1, 1, 1, 2}, 1},
  };

  for (const auto& c : table) {
    CAPTURE(c.f);
    FinalEmbedding fin = run_tilting(setup(c.f, c.m));
    CHECK(fin.weights.entries == c.weights);
    CHECK(fin.kappas.size() == c.tilts);
    CHECK(fin.state.trace.size() == c.tilts);
    CHECK(fin.vbasis.size() == c.tilts + 1);
    CHECK(!fin.state.truncation_hit);
    CHECK(eliminate(fin) == pp(c.f));

    // Tilt targets are homogeneous and every new weight exceeds them.
    for (std::size_t j = 0; j < fin.kappas.size(); ++j) {
      CHECK(is_weighted_homogeneous(fin.kappas[j], fin.weights));
      CHECK(*weighted_valuation(fin.kappas[j], fin.weights) <
            fin.weights.entries[4 + j]);
    }

    // The final representation reproduces the section values.
    PreValuationRep rep;
    rep.roster = fin.state.roster;
    rep.weights = fin.weights;
    rep.relations = fin.vbasis;
    auto probe = [&](const std::string& name) {
      return restricted_value(Polynomial::variable(fin.state.roster, name),
                              rep);
    };
    CHECK(probe("y").value == c.m);
    CHECK(probe("y").exact);
    CHECK(probe("z").value == 1);
    CHECK(probe("u").value == 1);
  }
}

TEST_CASE("five variable endpoint in detail") {
  FinalEmbedding fin =
      run_tilting(setup("x^2*y + z*y + x*z^2 + x*u^2 + u^4", 2));
  CHECK(fin.vbasis[0] == pp("t - x*y - z^2 - u^2", kXyzut));
  CHECK(fin.vbasis[1] == pp("x*t + y*z + u^4", kXyzut));
  CHECK(fin.thetas == std::vector<Polynomial>{pp("x", kXyzut)});
  CHECK(fin.kappas ==
        std::vector<Polynomial>{pp("x*y + z^2 + u^2", kXyzut)});
  REQUIRE(fin.exceptional.size() == 5);
  CHECK(fin.exceptional[0] == pp("z", kXyzut));
  CHECK(fin.exceptional[1] == pp("u", kXyzut));
  CHECK(fin.exceptional[2] == pp("y", kXyzut));
  CHECK(fin.exceptional[3] == pp("x*y + z^2 + u^2", kXyzut));
  CHECK(fin.exceptional[4] == pp("x*t + y*z", kXyzut));
  CHECK(fin.primality == Verdict::kYes);
  REQUIRE(fin.state.trace.size() == 1);
  CHECK(fin.state.trace[0] ==
        "tilt 4: theta=x, kappa=x*y + z^2 + u^2, rho=y*z + u^4, weight=3");
}

TEST_CASE("structural primality verdicts") {
  // Irreducible lowest part on the hypersurface endpoint.
  CHECK(run_tilting(setup("x*y + z^2 + u^3", 2)).primality == Verdict::kYes);
  // Degree one in the newest variable with coprime coefficients.
  CHECK(run_tilting(setup("x^2*y + y^3 + x*z + u^3", 1)).primality ==
        Verdict::kYes);
  // z*(y + z) factors, so the exceptional set splits.
  CHECK(run_tilting(setup("z*y + z^2", 1)).primality == Verdict::kNo);
  // A form the irreducibility engine does not decide.
  CHECK(run_tilting(setup("y^2 + z^4 + u^4", 2)).primality ==
        Verdict::kUnknown);

  // Hand-built violations. A gcd supported on the curve:
  FinalEmbedding bad;
  bad.state.roster = kXyzut;
  bad.state.weights = WeightVector({0, 2, 1, 1, 3});
  bad.state.active = 4;
  bad.state.relations = {pp("t - x*y - z^2", kXyzut)};
  bad.state.sigma = pp("x*t + y*z", kXyzut);
  bad.weights = bad.state.weights;
  bad.thetas = {pp("z", kXyzut)};
  bad.kappas = {pp("x*y + z^2", kXyzut)};
  CHECK(verify_structural_primality(bad) == Verdict::kNo);

  // A common factor between the two halves of the lowest part:
  FinalEmbedding shared;
  shared.state.roster = kXyzut;
  shared.state.weights = WeightVector({0, 1, 1, 1, 2});
  shared.state.active = 4;
  shared.state.relations = {pp("t - y - z", kXyzut)};
  shared.state.sigma = pp("z*t + z*u^2", kXyzut);
  shared.weights = shared.state.weights;
  shared.thetas = {pp("x", kXyzut)};
  shared.kappas = {pp("y + z", kXyzut)};
  CHECK(verify_structural_primality(shared) == Verdict::kNo);
}

TEST_CASE("degenerate and budget errors") {
  // Weighted homogeneous representative with a non-trivial gcd: x*y has
  // theta = x and rho = 0.
  CHECK_THROWS_AS(tilt_step(setup("x*y", 1)), DomainError);
  CHECK_THROWS_AS(run_tilting(setup("x*y + z^2 + u^2", 2), 0), DomainError);
  // This shape keeps a positive x power in the lowest part after one tilt.
  CHECK_THROWS_AS(
      run_tilting(setup("y^2 + x^2*y + x^2*z^2 + z^4", 1), 1), DomainError);
}
