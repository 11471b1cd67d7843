#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ctc/polynomial.hpp"
#include "ctc/valuation.hpp"
#include "ctc/weights.hpp"

namespace ctc {

// State of the iterative re-embedding. The threefold sits inside affine
// space on the coordinates (x, y, z, u) plus one fresh variable per tilt,
// cut out by `relations` together with `sigma`, a representative of the
// defining equation with maximal weighted value. sigma = h * y_i + g, where
// y_i is the variable at `active` (y at the start, then the newest tilt
// variable) and g does not involve it.
struct EmbeddingState {
  RosterPtr roster;
  WeightVector weights;               // (0, m, 1, 1, a4, a5, ...)
  std::vector<Polynomial> relations;  // one per tilt: fresh - kappa
  Polynomial sigma;
  Polynomial h, g;
  std::size_t active = 1;
  int steps = 0;  // tilts performed so far
  int truncation_order = kDefaultTruncationOrder;
  bool truncation_hit = false;  // a reduction ran into the value bound
  std::vector<Polynomial> thetas;  // extracted coefficient gcd per tilt
  std::vector<std::string> trace;  // one line per tilt, stable format
};

// Endpoint data: the terminal state plus the generator lists the weighted
// blow-up consumes downstream.
struct FinalEmbedding {
  EmbeddingState state;
  std::vector<Polynomial> vbasis;  // relations then sigma
  WeightVector weights;
  std::vector<Polynomial> thetas;
  std::vector<Polynomial> kappas;       // tilt targets, in tilt order
  std::vector<Polynomial> exceptional;  // z, u, y, kappas..., lowest(sigma)
  Verdict primality = Verdict::kUnknown;
};

struct TiltStepResult {
  bool terminated = false;
  EmbeddingState state;  // the advanced state when not terminated
  std::optional<FinalEmbedding> final_embedding;
};

// Sets up the embedding over (x, y, z, u). The contracted curve must
// already be in the normalized smooth form, i.e. cut out by the sections
// z, u, y in that order, and yzu_weights lists the weighted-blow-up values
// of (y, z, u), which the normalization pins to (m, 1, 1). The equation
// must vanish on the curve and have multiplicity two at the origin.
EmbeddingState init_embedding(const Polynomial& f,
                              const std::vector<std::string>& curve,
                              const std::vector<long>& yzu_weights);

// One round: extract the coefficient gcd theta of the lowest part of sigma.
// theta = 1 terminates; otherwise tilt by (kappa, v(rho)) where
// sigma = theta * kappa + rho, append the relation, and re-maximize sigma.
// Errors when rho vanishes (no tilt weight exists).
TiltStepResult tilt_step(const EmbeddingState& state);

// Iterates tilt_step to termination. Throws once max_steps rounds pass
// without reaching the ending point.
FinalEmbedding run_tilting(EmbeddingState state, int max_steps = 8);

// Checks the structural hypotheses behind primality of the exceptional
// ideal: every theta is non-zero off the curve, every tilt target stays out
// of the ideal of the earlier ones (weighted reduction is the witness), and
// the lowest part of sigma is degree one in the newest variable with
// coprime coefficient pair; a four-variable endpoint defers to the
// irreducibility engine instead, whose escape hatch yields unknown.
Verdict verify_structural_primality(const FinalEmbedding& fin);

}  // namespace ctc
