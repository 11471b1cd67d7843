#include "ctc/tilting.hpp"

#include <utility>

#include "ctc/error.hpp"
#include "ctc/gcd.hpp"
#include "ctc/irreducibility.hpp"

namespace ctc {
namespace {

// sigma = h * y_active + g with g free of the active variable.
void split_sigma(EmbeddingState& st) {
  st.g = st.sigma.coefficient_of(st.active, 0);
  Polynomial rest = st.sigma - st.g;
  st.h = rest.is_zero()
             ? Polynomial::zero(st.roster)
             : *exact_divide(rest, Polynomial::variable(st.roster, st.active));
}

// Terms surviving restriction to the curve (every non-x coordinate zero).
Polynomial restrict_to_axis(const Polynomial& f) {
  TermMap kept;
  for (const auto& [mono, coeff] : f.terms()) {
    bool pure = true;
    for (std::size_t i = 1; i < mono.size(); ++i)
      if (mono[i] != 0) pure = false;
    if (pure) kept.emplace(mono, coeff);
  }
  return make_polynomial(f.roster(), std::move(kept));
}

FinalEmbedding make_final(const EmbeddingState& st) {
  FinalEmbedding fin;
  fin.state = st;
  fin.weights = st.weights;
  fin.thetas = st.thetas;
  fin.vbasis = st.relations;
  fin.vbasis.push_back(st.sigma);
  for (std::size_t j = 0; j < st.relations.size(); ++j)
    fin.kappas.push_back(Polynomial::variable(st.roster, 4 + j) -
                         st.relations[j]);
  fin.exceptional = {Polynomial::variable(st.roster, 2),
                     Polynomial::variable(st.roster, 3),
                     Polynomial::variable(st.roster, 1)};
  for (const auto& k : fin.kappas) fin.exceptional.push_back(k);
  fin.exceptional.push_back(lowest_part(st.sigma, st.weights).part);
  fin.primality = verify_structural_primality(fin);
  return fin;
}

}  // namespace

EmbeddingState init_embedding(const Polynomial& f,
                              const std::vector<std::string>& curve,
                              const std::vector<long>& yzu_weights) {
  if (f.is_zero()) throw DomainError("the defining equation is zero");
  const Roster& roster = *f.roster();
  if (roster.names() != std::vector<std::string>{"x", "y", "z", "u"})
    throw DomainError("the ambient coordinates must be x, y, z, u");
  if (curve != std::vector<std::string>{"z", "u", "y"})
    throw DomainError(
        "the curve is not in the normalized smooth form with sections "
        "z, u, y");
  if (yzu_weights.size() != 3 || yzu_weights[1] != 1 || yzu_weights[2] != 1 ||
      yzu_weights[0] < 1)
    throw DomainError(
        "the section weights must be (m, 1, 1) for (y, z, u) with m >= 1");
  for (const auto& [mono, coeff] : f.terms())
    if (mono[1] == 0 && mono[2] == 0 && mono[3] == 0)
      throw DomainError("the equation does not vanish on the curve");
  if (f.multiplicity_at_origin() != 2)
    throw DomainError("the equation must have multiplicity two at the origin");

  EmbeddingState st;
  st.roster = f.roster();
  st.weights = WeightVector({0, yzu_weights[0], 1, 1});
  st.sigma = f;
  st.active = 1;
  split_sigma(st);
  return st;
}

TiltStepResult tilt_step(const EmbeddingState& state) {
  if (state.sigma.is_zero())
    throw DomainError("the embedding state has no representative");

  WeightedPart low = lowest_part(state.sigma, state.weights);
  int e = min_exponent(low.part, 0);
  if (e == 0) return {true, state, make_final(state)};

  Monomial xe(state.roster->size(), 0);
  xe[0] = e;
  Polynomial theta = Polynomial::monomial(state.roster, xe, 1);
  Polynomial kappa = *exact_divide(low.part, theta);
  Polynomial rho = higher_part(state.sigma, state.weights);
  if (rho.is_zero())
    throw DomainError(
        "the representative is weighted homogeneous (up to truncation order " +
        std::to_string(state.truncation_order) + "); no tilt weight exists");
  long a = *weighted_valuation(rho, state.weights);

  PreValuationRep rep{state.roster, state.weights, state.relations,
                      4L * state.truncation_order};
  PreValuationRep tilted = tilt_prevaluation(rep, kappa, a);

  EmbeddingState next;
  next.roster = tilted.roster;
  next.weights = tilted.weights;
  next.relations = tilted.relations;
  next.active = tilted.roster->size() - 1;
  next.steps = state.steps + 1;
  next.truncation_order = state.truncation_order;
  next.truncation_hit = state.truncation_hit;
  next.trace = state.trace;
  for (const auto& th : state.thetas)
    next.thetas.push_back(reindex(th, tilted.roster));
  next.thetas.push_back(reindex(theta, tilted.roster));

  Polynomial start =
      reindex(theta, tilted.roster) *
          Polynomial::variable(tilted.roster, next.active) +
      reindex(rho, tilted.roster);
  MaximalRepresentative mx = maximize_representative(start, tilted);
  if (!mx.exact) next.truncation_hit = true;
  next.sigma = mx.rep;
  split_sigma(next);
  next.trace.push_back("tilt " + std::to_string(3 + next.steps) +
                       ": theta=" + to_string(theta) +
                       ", kappa=" + to_string(kappa) +
                       ", rho=" + to_string(rho) +
                       ", weight=" + std::to_string(a));
  return {false, std::move(next), std::nullopt};
}

FinalEmbedding run_tilting(EmbeddingState state, int max_steps) {
  if (max_steps < 1) throw DomainError("max_steps must be at least one");
  for (int round = 0; round < max_steps; ++round) {
    TiltStepResult r = tilt_step(state);
    if (r.terminated) return std::move(*r.final_embedding);
    state = std::move(r.state);
  }
  throw DomainError("tilting did not reach the ending point within " +
                    std::to_string(max_steps) + " steps");
}

Verdict verify_structural_primality(const FinalEmbedding& fin) {
  const EmbeddingState& st = fin.state;

  for (const auto& th : fin.thetas)
    if (restrict_to_axis(th).is_zero()) return Verdict::kNo;

  for (std::size_t j = 1; j < fin.kappas.size(); ++j) {
    PreValuationRep prev;
    prev.roster = st.roster;
    prev.weights = st.weights;
    prev.relations.assign(fin.kappas.begin(), fin.kappas.begin() + j);
    try {
      restricted_value(fin.kappas[j], prev);
    } catch (const DomainError&) {
      return Verdict::kNo;  // the target reduced into the earlier ideal
    }
  }

  Polynomial last = lowest_part(st.sigma, st.weights).part;
  if (st.relations.empty()) {
    switch (irreducibility_over_closure(last, st.weights)) {
      case Irreducibility::kIrreducible:
        return Verdict::kYes;
      case Irreducibility::kReducible:
        return Verdict::kNo;
      default:
        return Verdict::kUnknown;
    }
  }

  if (last.degree_in(st.active) != 1) return Verdict::kUnknown;
  Polynomial head = last.coefficient_of(st.active, 1);
  Polynomial tail = last.coefficient_of(st.active, 0);
  if (!poly_gcd(head, tail).is_constant()) return Verdict::kNo;
  return Verdict::kYes;
}

}  // namespace ctc
