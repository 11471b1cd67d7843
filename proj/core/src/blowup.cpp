#include "ctc/blowup.hpp"

#include "ctc/error.hpp"

namespace ctc {

std::map<std::string, Polynomial> ChartMap::images(
    const RosterPtr& roster) const {
  if (roster->size() != weights.entries.size())
    throw DomainError("chart weight dimension does not match the roster");
  std::map<std::string, Polynomial> out;
  for (std::size_t j = 0; j < roster->size(); ++j) {
    Monomial exps(roster->size(), 0);
    if (j == index) {
      exps[index] = static_cast<int>(weights.entries[index]);
    } else {
      exps[j] = 1;
      exps[index] = static_cast<int>(weights.entries[j]);
    }
    out.emplace(roster->name(j), Polynomial::monomial(roster, exps, 1));
  }
  return out;
}

ChartMap chart_map(const WeightVector& w, std::size_t i,
                   const std::optional<LatticeData>& group) {
  if (i >= w.entries.size()) throw DomainError("chart index out of range");
  if (w.entries[i] <= 0)
    throw DomainError("chart variable has weight zero, no chart exists");
  LatticeData lattice =
      group.has_value() ? *group : LatticeData::standard(w.entries.size());
  auto ambient = cyclic_quotient_type(lattice, w, i);
  if (!ambient.has_value())
    throw DomainError("chart is not a cyclic quotient space");
  ChartMap out;
  out.index = i;
  out.weights = w;
  out.ambient = *ambient;
  return out;
}

LiftResult lift(const Polynomial& f, const WeightVector& w, std::size_t i) {
  if (f.is_zero()) throw DomainError("cannot lift the zero polynomial");
  validate_weights(w, *f.roster());
  if (i >= w.entries.size() || w.entries[i] <= 0)
    throw DomainError("chart variable has weight zero, no chart exists");

  auto m = weighted_valuation(f, w);
  // Monomial x^M maps to x_i^{<w,M>} times the same monomial with slot i
  // removed; dividing by x_i^m shifts slot i to <w,M> - m.
  TermMap lifted;
  for (const auto& [mono, coeff] : f.terms()) {
    Monomial image = mono;
    long value = weighted_value(mono, w);
    image[i] = static_cast<int>(value - *m);
    lifted[image] += coeff;
  }
  LiftResult out;
  out.lifted = make_polynomial(f.roster(), std::move(lifted));
  out.m = *m;
  return out;
}

std::vector<LiftResult> proper_transform(const std::vector<Polynomial>& gens,
                                         const WeightVector& w,
                                         std::size_t i) {
  std::vector<LiftResult> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(lift(g, w, i));
  return out;
}

ExceptionalIdeal exceptional_ideal(const std::vector<Polynomial>& gens,
                                   const WeightVector& w) {
  ExceptionalIdeal out;
  out.lowest_parts.reserve(gens.size());
  for (const auto& g : gens) out.lowest_parts.push_back(lowest_part(g, w).part);
  if (gens.size() == 1)
    out.verdict = irreducibility_over_closure(out.lowest_parts[0], w);
  return out;
}

}  // namespace ctc
