#include "ctc/irreducibility.hpp"

#include <numeric>

#include "ctc/gcd.hpp"

namespace ctc {

namespace {

bool is_total_degree_homogeneous(const Polynomial& f, int* degree) {
  int d = -1;
  for (const auto& [m, c] : f.terms()) {
    int t = std::accumulate(m.begin(), m.end(), 0);
    if (d < 0) d = t;
    if (t != d) return false;
  }
  if (degree) *degree = d;
  return true;
}

// f = A*v + B with deg_v f == 1: irreducible over the closure iff
// gcd(A, B) is constant (the gcd is stable under field extension).
Irreducibility linear_variable_verdict(const Polynomial& f, std::size_t v) {
  Polynomial a = f.coefficient_of(v, 1);
  Polynomial b = f.coefficient_of(v, 0);
  if (b.is_zero()) {
    // f = A*v: the strip step already removed monomial factors, so A is
    // constant and f is a variable.
    return Irreducibility::kIrreducible;
  }
  return poly_gcd(a, b).is_constant() ? Irreducibility::kIrreducible
                                      : Irreducibility::kReducible;
}

// Two effective variables s, t. A quasi-homogeneous polynomial with reduced
// coprime weights (p, q) and no monomial factor collapses to a binary form F
// in (s^q, t^p); it is irreducible exactly when that form is linear.
Irreducibility two_variable_verdict(const Polynomial& f, std::size_t s,
                                    std::size_t t) {
  // Derive the weight direction from the exponents themselves: every
  // difference of exponent vectors must be parallel to (q, -p).
  long q = 0, p = 0;  // weights of s and t
  auto it = f.terms().begin();
  const Monomial& first = it->first;
  for (++it; it != f.terms().end(); ++it) {
    long di = it->first[s] - first[s];
    long dj = it->first[t] - first[t];
    if (di == 0 && dj == 0) continue;
    if (di == 0 || dj == 0 || (di > 0) == (dj > 0)) {
      return Irreducibility::kUnknown;  // not positively quasi-homogeneous
    }
    long g = std::gcd(std::abs(di), std::abs(dj));
    long cq = std::abs(di) / g, cp = std::abs(dj) / g;
    if (q == 0) {
      q = cq;
      p = cp;
    } else if (q != cq || p != cp) {
      return Irreducibility::kUnknown;
    }
  }
  if (q == 0) return Irreducibility::kUnknown;  // single term; handled earlier

  // With no monomial factor, exponents of s are multiples of q and exponents
  // of t are multiples of p; the collapsed form degree is the verdict.
  long degree = 0;
  for (const auto& [m, c] : f.terms()) {
    if (m[s] % q != 0 || m[t] % p != 0) return Irreducibility::kUnknown;
    degree = std::max(degree, m[s] / q + m[t] / p);
  }
  return degree == 1 ? Irreducibility::kIrreducible : Irreducibility::kReducible;
}

Polynomial hessian_determinant(const Polynomial& f,
                               const std::vector<std::size_t>& vars) {
  const std::size_t n = vars.size();
  std::vector<std::vector<Polynomial>> h(n, std::vector<Polynomial>(n));
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial di = derivative(f, vars[i]);
    for (std::size_t j = 0; j < n; ++j) h[i][j] = derivative(di, vars[j]);
  }
  // Cofactor expansion; n is 3 or 4.
  std::vector<std::size_t> rows(n), cols(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = cols[i] = i;
  struct Det {
    const std::vector<std::vector<Polynomial>>& m;
    Polynomial run(std::vector<std::size_t> r, std::vector<std::size_t> c) {
      if (r.size() == 1) return m[r[0]][c[0]];
      Polynomial sum = Polynomial::zero(m[0][0].roster());
      std::vector<std::size_t> rest(r.begin() + 1, r.end());
      for (std::size_t k = 0; k < c.size(); ++k) {
        std::vector<std::size_t> sub;
        for (std::size_t j = 0; j < c.size(); ++j) {
          if (j != k) sub.push_back(c[j]);
        }
        Polynomial term = m[r[0]][c[k]] * run(rest, sub);
        sum = (k % 2 == 0) ? sum + term : sum - term;
      }
      return sum;
    }
  };
  return Det{h}.run(rows, cols);
}

// Homogeneous cubic form with 3 or 4 effective variables, no monomial
// factor, no linear variable. A linear-form component of f divides the
// Hessian determinant, and an irreducible cubic never divides its own
// Hessian, so the gcd decides (with two honest gaps in dimension 4).
Irreducibility cubic_verdict(const Polynomial& f,
                             const std::vector<std::size_t>& vars) {
  Polynomial sing = f;
  for (std::size_t v : vars) sing = poly_gcd(sing, derivative(f, v));
  if (!sing.is_constant()) {
    // Repeated factor: a cubic with one is l^2*m or l^3.
    return Irreducibility::kReducible;
  }
  Polynomial h = hessian_determinant(f, vars);
  if (h.is_zero()) {
    // Ternary: a vanishing Hessian forces a cone, i.e. a product of lines.
    // Quaternary: irreducible cones over plane cubics also qualify.
    return vars.size() == 3 ? Irreducibility::kReducible
                            : Irreducibility::kUnknown;
  }
  Polynomial g = poly_gcd(f, h);
  if (g.is_constant()) return Irreducibility::kIrreducible;
  if (vars.size() == 3) return Irreducibility::kReducible;
  // Quaternary: a proper common factor is a component; the full cubic
  // dividing its Hessian is not decisive.
  return g.total_degree() < 3 ? Irreducibility::kReducible
                              : Irreducibility::kUnknown;
}

}  // namespace

const char* to_string(Irreducibility v) {
  switch (v) {
    case Irreducibility::kIrreducible:
      return "irreducible";
    case Irreducibility::kReducible:
      return "reducible";
    default:
      return "unknown";
  }
}

Irreducibility irreducibility_over_closure(const Polynomial& f,
                                           const WeightVector& w) {
  if (f.is_zero() || f.is_constant()) {
    throw DomainError("irreducibility_over_closure: constant input");
  }
  if (!is_weighted_homogeneous(f, w)) {
    throw DomainError("irreducibility_over_closure: non-homogeneous input");
  }

  auto [common, core] = monomial_content(f);
  int stripped_degree = std::accumulate(common.begin(), common.end(), 0);
  if (core.is_constant()) {
    // f is a monomial.
    return stripped_degree == 1 ? Irreducibility::kIrreducible
                                : Irreducibility::kReducible;
  }
  if (stripped_degree > 0) return Irreducibility::kReducible;

  auto vars = core.effective_vars();
  if (vars.size() == 1) {
    // No monomial factor, so the constant term is present: a univariate
    // polynomial splits completely over the closure.
    return core.total_degree() == 1 ? Irreducibility::kIrreducible
                                    : Irreducibility::kReducible;
  }

  for (std::size_t v : vars) {
    if (core.degree_in(v) == 1) return linear_variable_verdict(core, v);
  }

  if (vars.size() == 2) return two_variable_verdict(core, vars[0], vars[1]);

  int degree = 0;
  if (is_total_degree_homogeneous(core, &degree)) {
    if (degree == 2) {
      return quadratic_form_rank(core) >= 3 ? Irreducibility::kIrreducible
                                            : Irreducibility::kReducible;
    }
    if (degree == 3 && vars.size() <= 4) return cubic_verdict(core, vars);
  }
  return Irreducibility::kUnknown;
}

}  // namespace ctc
