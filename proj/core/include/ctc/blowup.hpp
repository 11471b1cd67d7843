#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ctc/irreducibility.hpp"
#include "ctc/lattice.hpp"
#include "ctc/polynomial.hpp"
#include "ctc/weights.hpp"

namespace ctc {

// Substitution data of one blow-up chart. The exponents are the integer
// numerators a_j of the weight; with denominator 1 the substitution is a
// genuine polynomial map on the chart, otherwise it describes the cyclic
// cover and `ambient` carries the residual quotient type.
struct ChartMap {
  std::size_t index = 0;
  WeightVector weights;
  QuotientType ambient;

  // Substitution images x_j -> x_j * x_i^{a_j} (and x_i -> x_i^{a_i}) over
  // the given variable roster.
  std::map<std::string, Polynomial> images(const RosterPtr& roster) const;
};

struct LiftResult {
  Polynomial lifted;
  long m = 0;  // extracted exponent v_w(f), in units of 1/denominator
  bool truncated = false;
};

// Chart data for chart i of the blow-up with weight w over the (optionally
// nontrivial) ambient quotient lattice. Errors when a_i = 0 or when the
// chart is not a cyclic quotient space.
ChartMap chart_map(const WeightVector& w, std::size_t i,
                   const std::optional<LatticeData>& group = std::nullopt);

// The lifting f-tilde with f(pi(xbar)) = f-tilde * xbar_i^m and
// xbar_i not dividing f-tilde. Exact; errors on f = 0 or a_i = 0.
LiftResult lift(const Polynomial& f, const WeightVector& w, std::size_t i);

// Liftings of every generator on chart i. The caller asserts that gens is a
// v-basis; only then do the lifts cut out the proper transform.
std::vector<LiftResult> proper_transform(const std::vector<Polynomial>& gens,
                                         const WeightVector& w,
                                         std::size_t i);

// Lowest weighted-homogeneous parts of a v-basis, which cut out the
// exceptional set, together with an irreducibility verdict. The verdict is
// decided for hypersurfaces (one generator); complete-intersection outputs
// of the tilting algorithm get their structural test there instead.
struct ExceptionalIdeal {
  std::vector<Polynomial> lowest_parts;
  Irreducibility verdict = Irreducibility::kUnknown;
};
ExceptionalIdeal exceptional_ideal(const std::vector<Polynomial>& gens,
                                   const WeightVector& w);

}  // namespace ctc
