#pragma once

#include <string>
#include <vector>

#include "ctc/irreducibility.hpp"
#include "ctc/polynomial.hpp"
#include "ctc/weights.hpp"

namespace ctc {

enum class Verdict { kYes, kNo, kUnknown };

std::string to_string(Verdict v);

// A monomial pre-valuation on the ambient ring together with the ideal of
// the embedded variety, representing the restriction of the valuation to
// the variety. Filtration levels are never materialized; membership is
// decided by weighted reduction against the relation lowest parts.
struct PreValuationRep {
  RosterPtr roster;
  WeightVector weights;
  std::vector<Polynomial> relations;
  // Reduction stops once the working value exceeds this bound (same integer
  // units as weighted values, i.e. multiples of 1/denom).
  long value_bound = 4 * kDefaultTruncationOrder;
};

struct RestrictedValue {
  long value = 0;
  bool exact = true;  // false: reduction hit the value bound, lower bound only
};

// Value of f on the subvariety: repeatedly replaces f by f minus an ideal
// element with the same lowest part for as long as the lowest part reduces
// to zero against the relation lowest parts. Errors when f reduces to zero
// (f lies in the ideal, up to the bound).
RestrictedValue restricted_value(const Polynomial& f,
                                 const PreValuationRep& rep);

// The element the reduction ends on: congruent to f modulo the relation
// ideal, with its ambient weighted value equal to the restricted value of f
// (exact) or past the value bound (not exact). Same errors as
// restricted_value.
struct MaximalRepresentative {
  Polynomial rep;
  long value = 0;
  bool exact = true;
};
MaximalRepresentative maximize_representative(const Polynomial& f,
                                              const PreValuationRep& rep);
RestrictedValue restricted_value(const Polynomial& f,
                                 const std::vector<Polynomial>& vbasis,
                                 const WeightVector& w,
                                 long value_bound = 4 * kDefaultTruncationOrder);

// Whether the restriction of the monomial valuation to the variety cut out
// by the v-basis is a valuation, i.e. whether the lowest-part ideal is
// prime. Decided for hypersurfaces through irreducibility_over_closure;
// complete intersections from the tilting algorithm are judged by its
// structural test instead, so plain multi-generator input returns unknown.
Verdict restriction_is_valuation(const std::vector<Polynomial>& vbasis,
                                 const WeightVector& w);

// Tilt by (s, a): extends the roster by a fresh variable of weight a and
// records the relation fresh - s. Requires a > v_w(s); anything else is a
// no-op tilt and is rejected. Restricted values weakly increase, and the
// value of s itself rises to at least a.
PreValuationRep tilt_prevaluation(const PreValuationRep& rep,
                                  const Polynomial& s, long a);

// Name used for the fresh variable of the next tilt: t, t2, t3, ...
std::string next_tilt_variable(const Roster& roster);

}  // namespace ctc
