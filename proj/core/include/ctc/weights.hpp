#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ctc/polynomial.hpp"

namespace ctc {

// Non-negative integer weights a_1..a_n aligned with a roster, representing
// the weight vector (1/denom)(a_1,...,a_n). All weighted values below are
// reported in units of 1/denom, i.e. as the integer sum of entry*exponent.
struct WeightVector {
  std::vector<long> entries;
  long denom = 1;

  WeightVector() = default;
  WeightVector(std::vector<long> e, long d = 1) : entries(std::move(e)), denom(d) {}

  bool operator==(const WeightVector& other) const {
    return entries == other.entries && denom == other.denom;
  }
};

// A weighted-homogeneous slice of a polynomial together with its weight.
struct WeightedPart {
  long value = 0;
  Polynomial part;
};

// Throws unless the vector is aligned with the roster, entries are >= 0,
// at least one entry is positive and denom >= 1.
void validate_weights(const WeightVector& w, const Roster& roster);

// Weighted value of one exponent vector.
long weighted_value(const Monomial& m, const WeightVector& w);

// min over terms of the weighted value; empty for the zero polynomial.
std::optional<long> weighted_valuation(const Polynomial& f, const WeightVector& w);

// Sum of the terms of weighted value exactly n.
Polynomial homogeneous_part(const Polynomial& f, const WeightVector& w, long n);

// (v_w(f), f_v). Errors on zero input.
WeightedPart lowest_part(const Polynomial& f, const WeightVector& w);

// f minus its lowest part.
Polynomial higher_part(const Polynomial& f, const WeightVector& w);

// All nonzero slices keyed by weighted value; they sum to f.
std::map<long, Polynomial> weighted_components(const Polynomial& f,
                                               const WeightVector& w);

bool is_weighted_homogeneous(const Polynomial& f, const WeightVector& w);

}  // namespace ctc
