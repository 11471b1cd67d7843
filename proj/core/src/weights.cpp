#include "ctc/weights.hpp"

#include <algorithm>

namespace ctc {

void validate_weights(const WeightVector& w, const Roster& roster) {
  if (w.entries.size() != roster.size()) {
    throw DomainError("weight vector length does not match roster");
  }
  if (w.denom < 1) throw DomainError("weight denominator must be >= 1");
  bool positive = false;
  for (long a : w.entries) {
    if (a < 0) throw DomainError("negative weight entry");
    if (a > 0) positive = true;
  }
  if (!positive) throw DomainError("weight vector must have a positive entry");
}

long weighted_value(const Monomial& m, const WeightVector& w) {
  if (m.size() != w.entries.size()) {
    throw DomainError("weight vector length does not match exponent vector");
  }
  long v = 0;
  for (std::size_t i = 0; i < m.size(); ++i) v += w.entries[i] * m[i];
  return v;
}

std::optional<long> weighted_valuation(const Polynomial& f, const WeightVector& w) {
  validate_weights(w, *f.roster());
  std::optional<long> best;
  for (const auto& [m, c] : f.terms()) {
    long v = weighted_value(m, w);
    if (!best || v < *best) best = v;
  }
  return best;
}

Polynomial homogeneous_part(const Polynomial& f, const WeightVector& w, long n) {
  validate_weights(w, *f.roster());
  TermMap out;
  for (const auto& [m, c] : f.terms()) {
    if (weighted_value(m, w) == n) out.emplace(m, c);
  }
  return make_polynomial(f.roster(), std::move(out));
}

WeightedPart lowest_part(const Polynomial& f, const WeightVector& w) {
  auto v = weighted_valuation(f, w);
  if (!v) throw DomainError("lowest_part: zero polynomial");
  return WeightedPart{*v, homogeneous_part(f, w, *v)};
}

Polynomial higher_part(const Polynomial& f, const WeightVector& w) {
  if (f.is_zero()) return f;
  return f - lowest_part(f, w).part;
}

std::map<long, Polynomial> weighted_components(const Polynomial& f,
                                               const WeightVector& w) {
  validate_weights(w, *f.roster());
  std::map<long, TermMap> split;
  for (const auto& [m, c] : f.terms()) {
    split[weighted_value(m, w)].emplace(m, c);
  }
  std::map<long, Polynomial> out;
  for (auto& [n, terms] : split) {
    out.emplace(n, make_polynomial(f.roster(), std::move(terms)));
  }
  return out;
}

bool is_weighted_homogeneous(const Polynomial& f, const WeightVector& w) {
  return weighted_components(f, w).size() <= 1;
}

}  // namespace ctc
