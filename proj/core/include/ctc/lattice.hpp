#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ctc/weights.hpp"

namespace ctc {

// Cyclic quotient descriptor 1/r(b_1..b_n): the group mu_r acting on
// coordinates with the given exponents. r = 1 means the trivial group.
// Also used as input group-action data.
struct QuotientType {
  long r = 1;
  std::vector<long> b;

  QuotientType() = default;
  QuotientType(long order, std::vector<long> exps);

  // Lexicographically least representative over unit multiples mod r and
  // coordinate permutations (ascending sort).
  QuotientType canonical() const;
  bool same_type(const QuotientType& other) const;

  bool is_trivial() const { return r == 1; }
};

using GroupAction = QuotientType;

std::string to_string(const QuotientType& q);

// Parses the CLI literal "r=4;1,3,1,2" into (1/4)(1,3,1,2).
GroupAction parse_group_action(const std::string& text);

// The lattice N = Z^n + Z*(1/r)(b_1..b_n) of a (possibly trivial) cyclic
// quotient ambient space.
struct LatticeData {
  std::size_t rank = 0;
  GroupAction action;  // trivial action gives N = Z^n

  static LatticeData standard(std::size_t n);
  static LatticeData from_action(const GroupAction& g);
};

// Index [N : N_w] of the chart sublattice N_w = <e_1,..,w,..,e_n> (the i-th
// basis vector replaced by w). Errors when a_i = 0 or w is not in N.
long sublattice_index(const LatticeData& n, const WeightVector& w,
                      std::size_t i);

// Index [A : B] for two overlattices of Z^n. Throws unless B is contained
// in A.
long lattice_index(const LatticeData& a, const LatticeData& b);

// Quotient type of the chart U_i when N/N_w is cyclic; nullopt when the
// quotient group is non-cyclic. Exponent j is the coefficient of e_j (the
// coefficient of w at slot i) in r_i*u for a generator u of N/N_w.
std::optional<QuotientType> cyclic_quotient_type(const LatticeData& n,
                                                 const WeightVector& w,
                                                 std::size_t i);

// True iff every chart with a_i > 0 has a cyclic quotient group.
bool is_admissible(const LatticeData& n, const WeightVector& w);

// Terminality of an isolated 3-dimensional cyclic quotient: true iff the
// type is 1/r(1,a,r-a) with gcd(a,r)=1 up to unit and permutation.
// Requires exactly three exponents.
bool is_terminal_quotient(const QuotientType& q);

// Independent Reid-Tai check: every k in 1..r-1 must have residue sum
// strictly above r. Used to cross-validate is_terminal_quotient.
bool reid_tai_terminal_oracle(const QuotientType& q);

// Independent chart-group computation by explicit coset enumeration.
struct QuotientGroupData {
  long order = 1;
  bool cyclic = true;
  std::optional<QuotientType> type;  // present iff cyclic
};
QuotientGroupData enumerate_quotient_oracle(const LatticeData& n,
                                            const WeightVector& w,
                                            std::size_t i);

}  // namespace ctc
