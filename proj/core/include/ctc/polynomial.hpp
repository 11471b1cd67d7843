#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ctc/error.hpp"

namespace ctc {

// Exact rational scalar. GMP keeps every coefficient canonical (coprime
// numerator/denominator, positive denominator).
using Rational = mpq_class;

// Ordered list of variable names defining one ambient polynomial ring.
// Shared by every polynomial of that ring.
class Roster {
 public:
  explicit Roster(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index(const std::string& name) const;

  bool operator==(const Roster& other) const { return names_ == other.names_; }
  bool operator!=(const Roster& other) const { return !(*this == other); }

 private:
  std::vector<std::string> names_;
};

using RosterPtr = std::shared_ptr<const Roster>;

RosterPtr make_roster(std::vector<std::string> names);

// Exponent vector aligned with a roster; entry i is the exponent of
// variable i. Vector comparison gives the lexicographic term order.
using Monomial = std::vector<int>;

using TermMap = std::map<Monomial, Rational>;

// Degree-truncation context modeling a power-series ring: operations given a
// Truncation drop every term of total degree > order and record that they
// did. A null Truncation pointer means exact arithmetic.
struct Truncation {
  int order = 12;
  mutable bool hit = false;

  void note() const { hit = true; }
};

inline constexpr int kDefaultTruncationOrder = 12;
inline constexpr int kMinTruncationOrder = 6;

// Immutable exact multivariate polynomial over the rationals.
class Polynomial {
 public:
  // Zero polynomial over the empty roster; a placeholder value.
  Polynomial();
  // Zero polynomial over the given roster.
  explicit Polynomial(RosterPtr roster);

  static Polynomial zero(RosterPtr roster);
  static Polynomial constant(RosterPtr roster, const Rational& c);
  static Polynomial variable(RosterPtr roster, std::size_t index);
  static Polynomial variable(RosterPtr roster, const std::string& name);
  static Polynomial monomial(RosterPtr roster, Monomial exponents,
                             const Rational& coefficient);

  const RosterPtr& roster() const { return roster_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }

  // Coefficient of the given exponent vector (zero if absent).
  Rational coefficient(const Monomial& exponents) const;
  // The unique constant coefficient (the coefficient of the 1 monomial).
  Rational constant_term() const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Rational& scalar) const;
  bool operator==(const Polynomial& other) const;
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

  // Highest total degree of a term; -1 for the zero polynomial.
  int total_degree() const;
  // Lowest total degree of a term; errors on zero input.
  int multiplicity_at_origin() const;
  // Degree in one variable; -1 for the zero polynomial.
  int degree_in(std::size_t var) const;
  // True when the variable occurs in some term.
  bool uses(std::size_t var) const;
  // Indices of the variables that occur.
  std::vector<std::size_t> effective_vars() const;

  // Coefficient of var^k, as a polynomial over the same roster (the
  // extracted variable no longer occurs in it).
  Polynomial coefficient_of(std::size_t var, int k) const;

  // Exact evaluation at a rational point (one value per roster variable).
  Rational evaluate(const std::vector<Rational>& point) const;

 private:
  RosterPtr roster_;
  TermMap terms_;  // invariant: no zero coefficients stored

  friend Polynomial make_polynomial(RosterPtr, TermMap);
};

// Internal constructor from a prepared term map; drops zero coefficients.
Polynomial make_polynomial(RosterPtr roster, TermMap terms);

// Product with optional truncation.
Polynomial mul(const Polynomial& a, const Polynomial& b,
               const Truncation* trunc);
// Non-negative power with optional truncation.
Polynomial pow(const Polynomial& base, int exponent, const Truncation* trunc);

// Drops terms of total degree > order; sets *hit when something was dropped.
Polynomial truncate_total_degree(const Polynomial& f, int order,
                                 bool* hit = nullptr);

// Composition f(images). Every roster variable of f must either have an
// image (a polynomial over `target`) or exist, by name, in `target`, in
// which case it maps to itself. Exact when trunc is null.
Polynomial substitute(const Polynomial& f,
                      const std::map<std::string, Polynomial>& images,
                      RosterPtr target, const Truncation* trunc = nullptr);

// Same-name transport into another roster; errors if f uses a variable the
// target lacks.
Polynomial reindex(const Polynomial& f, RosterPtr target);

// Partial derivative.
Polynomial derivative(const Polynomial& f, std::size_t var);

// Canonical text form; parseable back to an equal polynomial.
std::string to_string(const Polynomial& f);

}  // namespace ctc
