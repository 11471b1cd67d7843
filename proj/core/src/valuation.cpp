#include "ctc/valuation.hpp"

#include "ctc/error.hpp"

namespace ctc {
namespace {

bool monomial_divides(const Monomial& d, const Monomial& m) {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > m[i]) return false;
  return true;
}

// Multivariate division of a weighted-homogeneous element by homogeneous
// divisors; lead terms are lex-largest, reducers tried in generator order.
// Fills quotients when requested and returns the remainder.
Polynomial divide_homogeneous(Polynomial fv,
                              const std::vector<Polynomial>& divisors,
                              std::vector<Polynomial>* quotients) {
  const RosterPtr& roster = fv.roster();
  Polynomial rem = Polynomial::zero(roster);
  while (!fv.is_zero()) {
    const auto& lead = *fv.terms().rbegin();
    bool reduced = false;
    for (std::size_t j = 0; j < divisors.size(); ++j) {
      const auto& lt = *divisors[j].terms().rbegin();
      if (!monomial_divides(lt.first, lead.first)) continue;
      Monomial q = lead.first;
      for (std::size_t c = 0; c < q.size(); ++c) q[c] -= lt.first[c];
      Polynomial qmono =
          Polynomial::monomial(roster, std::move(q), lead.second / lt.second);
      fv = fv - qmono * divisors[j];
      if (quotients) (*quotients)[j] = (*quotients)[j] + qmono;
      reduced = true;
      break;
    }
    if (!reduced) {
      Polynomial head =
          Polynomial::monomial(roster, lead.first, lead.second);
      rem = rem + head;
      fv = fv - head;
    }
  }
  return rem;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kYes:
      return "yes";
    case Verdict::kNo:
      return "no";
    default:
      return "unknown";
  }
}

MaximalRepresentative maximize_representative(const Polynomial& f,
                                              const PreValuationRep& rep) {
  if (f.is_zero())
    throw DomainError("the zero element has no restricted value");
  if (!(*f.roster() == *rep.roster))
    throw DomainError("element roster does not match the representation");
  validate_weights(rep.weights, *rep.roster);

  std::vector<Polynomial> lows;
  lows.reserve(rep.relations.size());
  for (const auto& g : rep.relations) {
    if (g.is_zero()) throw DomainError("relations must be non-zero");
    lows.push_back(lowest_part(g, rep.weights).part);
  }

  Polynomial cur = f;
  for (;;) {
    long v = *weighted_valuation(cur, rep.weights);
    if (v > rep.value_bound) return {cur, v, false};
    Polynomial fv = homogeneous_part(cur, rep.weights, v);
    std::vector<Polynomial> q(lows.size(), Polynomial::zero(rep.roster));
    Polynomial remainder = divide_homogeneous(fv, lows, &q);
    if (!remainder.is_zero()) return {cur, v, true};
    Polynomial next = cur;
    for (std::size_t j = 0; j < q.size(); ++j)
      next = next - q[j] * rep.relations[j];
    if (next.is_zero())
      throw DomainError("element lies in the ideal of the variety");
    cur = next;
  }
}

RestrictedValue restricted_value(const Polynomial& f,
                                 const PreValuationRep& rep) {
  MaximalRepresentative m = maximize_representative(f, rep);
  return {m.value, m.exact};
}

RestrictedValue restricted_value(const Polynomial& f,
                                 const std::vector<Polynomial>& vbasis,
                                 const WeightVector& w, long value_bound) {
  PreValuationRep rep;
  rep.roster = f.roster();
  rep.weights = w;
  rep.relations = vbasis;
  rep.value_bound = value_bound;
  return restricted_value(f, rep);
}

Verdict restriction_is_valuation(const std::vector<Polynomial>& vbasis,
                                 const WeightVector& w) {
  if (vbasis.size() != 1) return Verdict::kUnknown;
  switch (irreducibility_over_closure(lowest_part(vbasis[0], w).part, w)) {
    case Irreducibility::kIrreducible:
      return Verdict::kYes;
    case Irreducibility::kReducible:
      return Verdict::kNo;
    default:
      return Verdict::kUnknown;
  }
}

std::string next_tilt_variable(const Roster& roster) {
  if (!roster.index("t").has_value()) return "t";
  for (int k = 2;; ++k) {
    std::string name = "t" + std::to_string(k);
    if (!roster.index(name).has_value()) return name;
  }
}

PreValuationRep tilt_prevaluation(const PreValuationRep& rep,
                                  const Polynomial& s, long a) {
  if (s.is_zero()) throw DomainError("cannot tilt by the zero element");
  if (!(*s.roster() == *rep.roster))
    throw DomainError("tilt element roster does not match");
  long vs = *weighted_valuation(s, rep.weights);
  if (a <= vs)
    throw DomainError("tilt value does not exceed v(s), a no-op tilt");

  std::vector<std::string> names = rep.roster->names();
  names.push_back(next_tilt_variable(*rep.roster));
  RosterPtr fresh = make_roster(names);

  PreValuationRep out;
  out.roster = fresh;
  out.weights = rep.weights;
  out.weights.entries.push_back(a);
  out.value_bound = rep.value_bound;
  out.relations.reserve(rep.relations.size() + 1);
  for (const auto& g : rep.relations) out.relations.push_back(reindex(g, fresh));
  out.relations.push_back(Polynomial::variable(fresh, names.back()) -
                          reindex(s, fresh));
  return out;
}

}  // namespace ctc
