#include "ctc/gcd.hpp"

#include <algorithm>
#include <map>

namespace ctc {

namespace {

// Divide by the lexicographically leading coefficient.
Polynomial normalize(const Polynomial& f) {
  if (f.is_zero()) return f;
  const auto& lead = *f.terms().rbegin();
  Rational inv = 1 / lead.second;
  return f * inv;
}

int degree_in_var(const Polynomial& f, std::size_t v) { return f.degree_in(v); }

// f as a dense-by-degree view in variable v. Coefficients do not use v.
std::map<int, Polynomial> univariate_view(const Polynomial& f, std::size_t v) {
  std::map<int, Polynomial> out;
  for (int k = 0; k <= f.degree_in(v); ++k) {
    Polynomial c = f.coefficient_of(v, k);
    if (!c.is_zero()) out.emplace(k, std::move(c));
  }
  return out;
}

Polynomial from_univariate_view(const std::map<int, Polynomial>& view,
                                RosterPtr roster, std::size_t v) {
  Polynomial sum = Polynomial::zero(roster);
  for (const auto& [k, c] : view) {
    Monomial m(roster->size(), 0);
    m[v] = k;
    sum = sum + c * Polynomial::monomial(roster, m, 1);
  }
  return sum;
}

Polynomial gcd_impl(Polynomial a, Polynomial b);

// gcd of the v-coefficients of f (a polynomial not using v).
Polynomial content_in_var(const Polynomial& f, std::size_t v) {
  Polynomial g = Polynomial::zero(f.roster());
  for (const auto& [k, c] : univariate_view(f, v)) g = gcd_impl(g, c);
  return g;
}

Polynomial primitive_part(const Polynomial& f, std::size_t v) {
  if (f.is_zero()) return f;
  Polynomial cont = content_in_var(f, v);
  auto q = exact_divide(f, cont);
  if (!q) throw DomainError("internal error: content does not divide");
  return *q;
}

// Pseudo-remainder of a by b in the variable v (deg_v b >= 1).
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, std::size_t v) {
  const int db = b.degree_in(v);
  const Polynomial lc_b = b.coefficient_of(v, db);
  while (!a.is_zero() && a.degree_in(v) >= db) {
    const int da = a.degree_in(v);
    const Polynomial lc_a = a.coefficient_of(v, da);
    Monomial shift(a.roster()->size(), 0);
    shift[v] = da - db;
    a = a * lc_b - b * lc_a * Polynomial::monomial(a.roster(), shift, 1);
  }
  return a;
}

Polynomial gcd_impl(Polynomial a, Polynomial b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_constant() || b.is_constant()) {
    return Polynomial::constant(a.roster(), 1);
  }

  // Main variable: the highest-index variable occurring in either operand,
  // so every recursive call (contents, coefficients) uses lower indices only.
  std::size_t v = 0;
  for (std::size_t i = 0; i < a.roster()->size(); ++i) {
    if (a.uses(i) || b.uses(i)) v = i;
  }

  if (a.degree_in(v) == 0) return gcd_impl(content_in_var(b, v), a);
  if (b.degree_in(v) == 0) return gcd_impl(content_in_var(a, v), b);

  Polynomial cont_a = content_in_var(a, v);
  Polynomial cont_b = content_in_var(b, v);
  Polynomial cont = gcd_impl(cont_a, cont_b);

  Polynomial pa = primitive_part(a, v);
  Polynomial pb = primitive_part(b, v);
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  while (!pb.is_zero() && pb.degree_in(v) > 0) {
    Polynomial r = pseudo_remainder(pa, pb, v);
    pa = std::move(pb);
    pb = primitive_part(r, v);
  }
  Polynomial pp = pb.is_zero() ? pa : Polynomial::constant(a.roster(), 1);
  return cont * pp;
}

}  // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  return normalize(gcd_impl(a, b));
}

std::optional<Polynomial> exact_divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  Polynomial r = a;
  TermMap q_terms;
  const auto& lead_b = *b.terms().rbegin();
  const std::size_t n = a.roster()->size();
  while (!r.is_zero()) {
    const auto& lead_r = *r.terms().rbegin();
    Monomial diff(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      diff[i] = lead_r.first[i] - lead_b.first[i];
      if (diff[i] < 0) return std::nullopt;
    }
    Rational c = lead_r.second / lead_b.second;
    q_terms.emplace(diff, c);
    r = r - b * Polynomial::monomial(a.roster(), diff, c);
  }
  return make_polynomial(a.roster(), std::move(q_terms));
}

Polynomial coefficient_gcd(const Polynomial& f,
                           const std::vector<std::string>& fiber_vars) {
  if (f.is_zero()) throw DomainError("coefficient_gcd: zero polynomial");
  std::vector<std::size_t> fiber;
  for (const auto& name : fiber_vars) {
    auto idx = f.roster()->index(name);
    if (!idx) throw DomainError("coefficient_gcd: unknown variable " + name);
    fiber.push_back(*idx);
  }
  // Group terms by their fiber exponents; each group is one coefficient.
  std::map<Monomial, TermMap> groups;
  for (const auto& [m, c] : f.terms()) {
    Monomial key(f.roster()->size(), 0);
    Monomial rest = m;
    for (std::size_t i : fiber) {
      key[i] = m[i];
      rest[i] = 0;
    }
    groups[key].emplace(rest, c);
  }
  Polynomial g = Polynomial::zero(f.roster());
  for (auto& [key, terms] : groups) {
    g = poly_gcd(g, make_polynomial(f.roster(), std::move(terms)));
  }
  return normalize(g);
}

std::pair<Monomial, Polynomial> monomial_content(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("monomial_content: zero polynomial");
  const std::size_t n = f.roster()->size();
  Monomial common = f.terms().begin()->first;
  for (const auto& [m, c] : f.terms()) {
    for (std::size_t i = 0; i < n; ++i) common[i] = std::min(common[i], m[i]);
  }
  TermMap out;
  for (const auto& [m, c] : f.terms()) {
    Monomial reduced(n, 0);
    for (std::size_t i = 0; i < n; ++i) reduced[i] = m[i] - common[i];
    out.emplace(std::move(reduced), c);
  }
  return {common, make_polynomial(f.roster(), std::move(out))};
}

int min_exponent(const Polynomial& f, std::size_t var) {
  if (f.is_zero()) throw DomainError("min_exponent: zero polynomial");
  int best = -1;
  for (const auto& [m, c] : f.terms()) {
    if (best < 0 || m.at(var) < best) best = m[var];
  }
  return best;
}

std::vector<int> binary_form_profile(const Polynomial& f) {
  if (f.is_zero() || f.is_constant()) {
    throw DomainError("binary_form_profile: constant input");
  }
  auto vars = f.effective_vars();
  if (vars.size() > 2) {
    throw DomainError("binary_form_profile: more than two variables");
  }
  int deg = f.total_degree();
  for (const auto& [m, c] : f.terms()) {
    int d = 0;
    for (int e : m) d += e;
    if (d != deg) throw DomainError("binary_form_profile: not homogeneous");
  }

  std::vector<int> profile;
  auto [common, stripped] = monomial_content(f);
  for (std::size_t i : vars) {
    if (common[i] > 0) profile.push_back(common[i]);
  }
  if (!stripped.is_constant()) {
    // Dehomogenize on the second effective variable; the result is a
    // univariate polynomial with nonzero constant term, so its root
    // multiplicities are exactly the remaining factor multiplicities.
    std::size_t s = stripped.effective_vars().front();
    Polynomial p = stripped;
    for (std::size_t i : stripped.effective_vars()) {
      if (i != s) {
        p = substitute(p, {{f.roster()->name(i), Polynomial::constant(f.roster(), 1)}},
                       f.roster());
      }
    }
    // Yun squarefree decomposition in the variable s.
    Polynomial b = *exact_divide(p, poly_gcd(p, derivative(p, s)));
    Polynomial c = *exact_divide(derivative(p, s), poly_gcd(p, derivative(p, s)));
    Polynomial d = c - derivative(b, s);
    int i = 1;
    while (b.degree_in(s) > 0) {
      Polynomial h = poly_gcd(b, d);
      for (int k = 0; k < h.degree_in(s); ++k) profile.push_back(i);
      b = *exact_divide(b, h);
      c = *exact_divide(d, h);
      d = c - derivative(b, s);
      ++i;
    }
  }
  std::sort(profile.rbegin(), profile.rend());
  return profile;
}

int quadratic_form_rank(const Polynomial& q) {
  if (q.is_zero()) return 0;
  const std::size_t n = q.roster()->size();
  for (const auto& [m, c] : q.terms()) {
    int d = 0;
    for (int e : m) d += e;
    if (d != 2) throw DomainError("quadratic_form_rank: not a quadratic form");
  }
  // Symmetric Gram matrix.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n, Rational(0)));
  for (const auto& [m, c] : q.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
      for (int e = 0; e < m[i]; ++e) idx.push_back(i);
    }
    if (idx[0] == idx[1]) {
      a[idx[0]][idx[0]] = c;
    } else {
      a[idx[0]][idx[1]] = c / 2;
      a[idx[1]][idx[0]] = c / 2;
    }
  }
  // Gaussian elimination rank.
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t pivot = row;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) continue;
    std::swap(a[pivot], a[row]);
    for (std::size_t i = row + 1; i < n; ++i) {
      if (a[i][col] == 0) continue;
      Rational factor = a[i][col] / a[row][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= factor * a[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  mpz_class num = r.get_num(), den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  Rational s(sn, sd);
  s.canonicalize();
  return s;
}

QuadricSplit split_quadric(const Polynomial& q) {
  QuadricSplit out;
  out.l1 = Polynomial::zero(q.roster());
  out.l2 = Polynomial::zero(q.roster());
  if (q.is_zero()) {
    out.kind = QuadricSplit::Kind::kZero;
    return out;
  }
  const std::size_t n = q.roster()->size();
  for (const auto& [m, c] : q.terms()) {
    int d = 0;
    for (int e : m) d += e;
    if (d != 2) throw DomainError("split_quadric: not a quadratic form");
  }

  // A variable with a square term lets us complete the square directly.
  for (std::size_t v = 0; v < n; ++v) {
    Monomial sq(n, 0);
    sq[v] = 2;
    Rational a = q.coefficient(sq);
    if (a == 0) continue;

    Polynomial lin = q.coefficient_of(v, 1);
    Polynomial A = Polynomial::variable(q.roster(), v) + lin * (1 / (2 * a));
    Polynomial rest = q - A * A * a;
    if (rest.is_zero()) {
      out.kind = QuadricSplit::Kind::kSquare;
      out.c = a;
      out.l1 = A;
      return out;
    }
    QuadricSplit inner = split_quadric(rest);
    if (inner.kind != QuadricSplit::Kind::kSquare) {
      out.kind = QuadricSplit::Kind::kHigherRank;
      return out;
    }
    // q = a*A^2 + b*B^2
    Rational b = inner.c;
    const Polynomial& B = inner.l1;
    auto delta = rational_sqrt(-b / a);
    if (delta) {
      out.kind = QuadricSplit::Kind::kSplit;
      out.c = a;
      out.l1 = A - B * *delta;
      out.l2 = A + B * *delta;
    } else {
      out.kind = QuadricSplit::Kind::kAnisotropic;
      out.c = a;
      out.d = b / a;
      out.l1 = A;
      out.l2 = B;
    }
    return out;
  }

  // No square term: q starts with a cross term v*w. Shear v := v + w to
  // produce one, split, and shear the factors back.
  for (const auto& [m, c] : q.terms()) {
    std::size_t v = 0, w = 0;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
      for (int e = 0; e < m[i]; ++e) idx.push_back(i);
    }
    v = idx[0];
    w = idx[1];
    const std::string vn = q.roster()->name(v);
    Polynomial vv = Polynomial::variable(q.roster(), v);
    Polynomial ww = Polynomial::variable(q.roster(), w);
    Polynomial sheared = substitute(q, {{vn, vv + ww}}, q.roster());
    QuadricSplit inner = split_quadric(sheared);
    auto back = [&](const Polynomial& l) {
      return substitute(l, {{vn, vv - ww}}, q.roster());
    };
    inner.l1 = back(inner.l1);
    inner.l2 = back(inner.l2);
    return inner;
  }
  throw DomainError("split_quadric: unreachable");
}

std::optional<Polynomial> cube_root_linear(const Polynomial& f) {
  if (f.is_zero()) return std::nullopt;
  for (const auto& [m, c] : f.terms()) {
    int d = 0;
    for (int e : m) d += e;
    if (d != 3) throw DomainError("cube_root_linear: not a cubic form");
  }
  Polynomial g = f;
  for (std::size_t v : f.effective_vars()) g = poly_gcd(g, derivative(f, v));
  auto l = exact_divide(f, g);
  if (!l || l->total_degree() != 1) return std::nullopt;
  Polynomial candidate = normalize(*l);
  auto c = exact_divide(f, candidate * candidate * candidate);
  if (!c || !c->is_constant()) return std::nullopt;
  return candidate;
}

}  // namespace ctc
