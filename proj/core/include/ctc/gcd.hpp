#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ctc/polynomial.hpp"

namespace ctc {

// Greatest common divisor over the rationals, normalized so the
// lexicographically leading coefficient is 1. gcd(f, 0) = normalize(f);
// gcd(0, 0) = 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// Exact quotient a/b, or nullopt when b does not divide a. Errors on b = 0.
std::optional<Polynomial> exact_divide(const Polynomial& a, const Polynomial& b);

// f viewed as a polynomial in fiber_vars: the (monic, content-normalized)
// gcd of its coefficients, which live in the remaining variables.
// Errors on zero input or unknown fiber variable.
Polynomial coefficient_gcd(const Polynomial& f,
                           const std::vector<std::string>& fiber_vars);

// Largest monomial dividing f and the stripped cofactor. Errors on zero input.
std::pair<Monomial, Polynomial> monomial_content(const Polynomial& f);

// Smallest exponent of the variable across terms; errors on zero input.
int min_exponent(const Polynomial& f, std::size_t var);

// Multiplicities of the distinct linear factors of a binary form over the
// closed field, sorted descending; the individual roots are not computed.
// Requires a non-constant total-degree-homogeneous polynomial in at most two
// effective variables.
std::vector<int> binary_form_profile(const Polynomial& f);

// Rank of a homogeneous quadratic form (0 for the zero polynomial).
int quadratic_form_rank(const Polynomial& q);

// Rational splitting data of a homogeneous quadratic form.
struct QuadricSplit {
  enum class Kind {
    kZero,        // q = 0
    kSquare,      // q = c*l1^2
    kSplit,       // q = c*l1*l2 with independent rational linear forms
    kAnisotropic, // q = c*(l1^2 + d*l2^2), -d not a rational square
    kHigherRank,  // rank >= 3
  };
  Kind kind = Kind::kZero;
  Rational c = 0;
  Rational d = 0;
  Polynomial l1, l2;
};
QuadricSplit split_quadric(const Polynomial& q);

// The monic linear form l with f = c*l^3, when the cubic form f is a cube.
std::optional<Polynomial> cube_root_linear(const Polynomial& f);

// sqrt in the rationals, when it exists (r >= 0 and both parts squares).
std::optional<Rational> rational_sqrt(const Rational& r);

}  // namespace ctc
