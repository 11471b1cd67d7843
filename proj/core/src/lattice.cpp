#include "ctc/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "ctc/error.hpp"

namespace ctc {
namespace {

using VecQ = std::vector<Rational>;
using MatQ = std::vector<VecQ>;
using VecZ = std::vector<long long>;
using MatZ = std::vector<VecZ>;

long long mod_reduce(long long x, long long r) {
  long long m = x % r;
  return m < 0 ? m + r : m;
}

Rational to_rational(long long x) {
  mpz_class z;
  if (x >= 0) {
    z = static_cast<unsigned long>(x);
  } else {
    z = static_cast<unsigned long>(-x);
    z = -z;
  }
  return Rational(z);
}

Rational rational_floor(const Rational& q) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(fl);
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

long long to_ll(const Rational& q) {
  if (!is_integer(q)) throw DomainError("expected an integer value");
  mpz_class num = q.get_num();
  if (!num.fits_slong_p()) throw DomainError("integer value out of range");
  return num.get_si();
}

MatZ identity_z(std::size_t n) {
  MatZ m(n, VecZ(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// Row-style integer echelon reduction. Returns the nonzero rows, which form
// a triangular basis of the row lattice (pivot columns increase).
MatZ row_lattice_basis(MatZ rows) {
  if (rows.empty()) return rows;
  std::size_t n = rows[0].size();
  std::size_t top = 0;
  for (std::size_t col = 0; col < n && top < rows.size(); ++col) {
    std::size_t pivot = rows.size();
    for (std::size_t r = top; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      if (pivot == rows.size()) {
        pivot = r;
        continue;
      }
      // Combine rows pivot and r to leave a single nonzero entry in col.
      while (rows[r][col] != 0) {
        long long q = rows[pivot][col] / rows[r][col];
        for (std::size_t c = 0; c < n; ++c) rows[pivot][c] -= q * rows[r][c];
        std::swap(rows[pivot], rows[r]);
      }
    }
    if (pivot == rows.size()) continue;
    std::swap(rows[top], rows[pivot]);
    if (rows[top][col] < 0)
      for (std::size_t c = 0; c < n; ++c) rows[top][c] = -rows[top][c];
    ++top;
  }
  rows.resize(top);
  return rows;
}

// Basis of the lattice spanned by rational generator rows. Throws when the
// span has rank below the ambient dimension.
MatQ lattice_basis(const MatQ& gens) {
  if (gens.empty()) throw DomainError("lattice needs at least one generator");
  std::size_t n = gens[0].size();
  mpz_class scale = 1;
  for (const auto& row : gens)
    for (const auto& q : row)
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
  MatZ scaled;
  for (const auto& row : gens) {
    VecZ r;
    r.reserve(n);
    for (const auto& q : row) r.push_back(to_ll(Rational(scale) * q));
    scaled.push_back(std::move(r));
  }
  MatZ basis = row_lattice_basis(std::move(scaled));
  if (basis.size() != n)
    throw DomainError("lattice generators do not have full rank");
  MatQ out(n, VecQ(n));
  Rational s(scale);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = to_rational(basis[i][j]) / s;
  return out;
}

// Gauss-Jordan inverse of a square rational matrix.
MatQ invert(MatQ m) {
  std::size_t n = m.size();
  MatQ inv(n, VecQ(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) throw DomainError("singular matrix");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    Rational p = m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

MatQ mat_mul(const MatQ& a, const MatQ& b) {
  std::size_t n = a.size(), k = b.size(), m = b[0].size();
  MatQ out(n, VecQ(m, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

MatQ lattice_rows(const LatticeData& n) {
  MatQ gens;
  for (std::size_t i = 0; i < n.rank; ++i) {
    VecQ e(n.rank, Rational(0));
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  if (!n.action.is_trivial()) {
    if (n.action.b.size() != n.rank)
      throw DomainError("group action dimension mismatch");
    VecQ v(n.rank);
    for (std::size_t j = 0; j < n.rank; ++j)
      v[j] = Rational(n.action.b[j]) / Rational(n.action.r);
    gens.push_back(std::move(v));
  }
  return gens;
}

VecQ weight_row(const WeightVector& w) {
  VecQ row(w.entries.size());
  for (std::size_t j = 0; j < w.entries.size(); ++j)
    row[j] = Rational(w.entries[j]) / Rational(w.denom);
  return row;
}

// Generators of A and B as rational rows; returns the integer matrix X with
// row j of B's list expressed in a basis of A. Throws when B is not inside A.
MatZ coords_in(const MatQ& a_gens, const MatQ& b_rows) {
  MatQ basis = lattice_basis(a_gens);
  MatQ x = mat_mul(b_rows, invert(basis));
  MatZ out;
  for (const auto& row : x) {
    VecZ r;
    for (const auto& q : row) {
      if (!is_integer(q))
        throw DomainError("vector is not in the ambient lattice");
      r.push_back(to_ll(q));
    }
    out.push_back(std::move(r));
  }
  return out;
}

long long det_of_lattice(const MatZ& x) {
  MatZ basis = row_lattice_basis(x);
  if (basis.size() != x[0].size())
    throw DomainError("sublattice does not have full rank");
  long long d = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) d *= basis[i][i];
  return std::llabs(d);
}

// Smith normal form with transform tracking: u * x * v = d with u, v
// unimodular and the diagonal satisfying d[0] | d[1] | ... .
struct Snf {
  MatZ u, v;
  VecZ d;
};

Snf smith_normal_form(MatZ a) {
  std::size_t n = a.size();
  MatZ u = identity_z(n);
  MatZ v = identity_z(n);

  auto row_sub = [&](std::size_t i, std::size_t k, long long q) {
    for (std::size_t c = 0; c < n; ++c) {
      a[i][c] -= q * a[k][c];
      u[i][c] -= q * u[k][c];
    }
  };
  auto col_sub = [&](std::size_t j, std::size_t k, long long q) {
    for (std::size_t r = 0; r < n; ++r) {
      a[r][j] -= q * a[r][k];
      v[r][j] -= q * v[r][k];
    }
  };
  auto row_swap = [&](std::size_t i, std::size_t k) {
    std::swap(a[i], a[k]);
    std::swap(u[i], u[k]);
  };
  auto col_swap = [&](std::size_t j, std::size_t k) {
    for (std::size_t r = 0; r < n; ++r) {
      std::swap(a[r][j], a[r][k]);
      std::swap(v[r][j], v[r][k]);
    }
  };
  auto row_negate = [&](std::size_t i) {
    for (std::size_t c = 0; c < n; ++c) {
      a[i][c] = -a[i][c];
      u[i][c] = -u[i][c];
    }
  };

  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      std::size_t pi = n, pj = n;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a[i][j] != 0 &&
              (pi == n || std::llabs(a[i][j]) < std::llabs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == n) throw DomainError("singular chart lattice matrix");
      if (pi != t) row_swap(t, pi);
      if (pj != t) col_swap(t, pj);
      if (a[t][t] < 0) row_negate(t);

      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (a[i][t] == 0) continue;
        long long q = a[i][t] / a[t][t];
        if (a[i][t] % a[t][t] < 0) q -= 1;
        row_sub(i, t, q);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        long long q = a[t][j] / a[t][t];
        if (a[t][j] % a[t][t] < 0) q -= 1;
        col_sub(j, t, q);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      bool fixed = true;
      for (std::size_t i = t + 1; i < n && fixed; ++i)
        for (std::size_t j = t + 1; j < n && fixed; ++j)
          if (a[i][j] % a[t][t] != 0) {
            row_sub(t, i, -1);  // adds row i into row t
            fixed = false;
          }
      if (fixed) break;
    }
  }

  Snf out;
  out.u = std::move(u);
  out.v = std::move(v);
  out.d.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.d[i] = a[i][i];
  return out;
}

// Chart sublattice generators: e_j for j != i, with slot i replaced by w.
MatQ chart_rows(const LatticeData& n, const WeightVector& w, std::size_t i) {
  if (w.entries.size() != n.rank)
    throw DomainError("weight vector dimension mismatch");
  if (i >= n.rank) throw DomainError("chart index out of range");
  if (w.entries[i] <= 0)
    throw DomainError("chart variable has weight zero, no chart exists");
  MatQ rows;
  for (std::size_t j = 0; j < n.rank; ++j) {
    if (j == i) {
      rows.push_back(weight_row(w));
    } else {
      VecQ e(n.rank, Rational(0));
      e[j] = 1;
      rows.push_back(std::move(e));
    }
  }
  return rows;
}

}  // namespace

QuotientType::QuotientType(long order, std::vector<long> exps)
    : r(order), b(std::move(exps)) {
  if (r < 1) throw DomainError("quotient order must be positive");
  for (auto& e : b) e = static_cast<long>(mod_reduce(e, r));
}

QuotientType QuotientType::canonical() const {
  QuotientType out(r, b);
  if (r == 1) {
    std::fill(out.b.begin(), out.b.end(), 0L);
    return out;
  }
  std::vector<long> best;
  for (long c = 1; c < r; ++c) {
    if (std::gcd(c, r) != 1) continue;
    std::vector<long> cand(b.size());
    for (std::size_t j = 0; j < b.size(); ++j)
      cand[j] = static_cast<long>(mod_reduce(c * b[j], r));
    std::sort(cand.begin(), cand.end());
    if (best.empty() || cand < best) best = std::move(cand);
  }
  out.b = std::move(best);
  return out;
}

bool QuotientType::same_type(const QuotientType& other) const {
  if (r != other.r || b.size() != other.b.size()) return false;
  return canonical().b == other.canonical().b;
}

std::string to_string(const QuotientType& q) {
  std::ostringstream os;
  os << "1/" << q.r << "(";
  for (std::size_t j = 0; j < q.b.size(); ++j) {
    if (j) os << ",";
    os << q.b[j];
  }
  os << ")";
  return os.str();
}

GroupAction parse_group_action(const std::string& text) {
  if (text.size() < 2 || text[0] != 'r' || text[1] != '=')
    throw ParseError("group action must look like r=4;1,3,1,2", 0);
  std::size_t semi = text.find(';');
  if (semi == std::string::npos)
    throw ParseError("group action is missing ';'", text.size());
  long order = 0;
  try {
    std::size_t used = 0;
    order = std::stol(text.substr(2, semi - 2), &used);
    if (used != semi - 2) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw ParseError("bad group order", 2);
  }
  if (order < 1) throw ParseError("group order must be positive", 2);
  std::vector<long> exps;
  std::size_t at = semi + 1;
  while (at <= text.size()) {
    std::size_t comma = text.find(',', at);
    std::string piece = text.substr(
        at, comma == std::string::npos ? std::string::npos : comma - at);
    try {
      std::size_t used = 0;
      exps.push_back(std::stol(piece, &used));
      if (used != piece.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ParseError("bad group exponent", at);
    }
    if (comma == std::string::npos) break;
    at = comma + 1;
  }
  if (exps.empty()) throw ParseError("group action has no exponents", semi);
  return GroupAction(order, std::move(exps));
}

LatticeData LatticeData::standard(std::size_t n) {
  LatticeData out;
  out.rank = n;
  out.action = GroupAction(1, std::vector<long>(n, 0));
  return out;
}

LatticeData LatticeData::from_action(const GroupAction& g) {
  LatticeData out;
  out.rank = g.b.size();
  out.action = g;
  return out;
}

long sublattice_index(const LatticeData& n, const WeightVector& w,
                      std::size_t i) {
  MatZ x = coords_in(lattice_rows(n), chart_rows(n, w, i));
  return static_cast<long>(det_of_lattice(x));
}

long lattice_index(const LatticeData& a, const LatticeData& b) {
  if (a.rank != b.rank) throw DomainError("lattice rank mismatch");
  MatZ x = coords_in(lattice_rows(a), lattice_rows(b));
  return static_cast<long>(det_of_lattice(x));
}

std::optional<QuotientType> cyclic_quotient_type(const LatticeData& n,
                                                 const WeightVector& w,
                                                 std::size_t i) {
  MatZ x = coords_in(lattice_rows(n), chart_rows(n, w, i));
  Snf s = smith_normal_form(std::move(x));
  long long order = 1;
  std::size_t big = 0, last = 0;
  for (std::size_t k = 0; k < s.d.size(); ++k) {
    order *= s.d[k];
    if (s.d[k] > 1) {
      ++big;
      last = k;
    }
  }
  if (big > 1) return std::nullopt;
  std::vector<long> exps(n.rank, 0);
  if (order == 1) return QuotientType(1, std::move(exps));
  // A generator u of N/N_w sits at slot `last`; row `last` of u expresses
  // order*u in the chart generators e_1, .., w, .., e_n.
  for (std::size_t j = 0; j < n.rank; ++j)
    exps[j] = static_cast<long>(mod_reduce(s.u[last][j], order));
  return QuotientType(static_cast<long>(order), std::move(exps));
}

bool is_admissible(const LatticeData& n, const WeightVector& w) {
  if (w.entries.size() != n.rank)
    throw DomainError("weight vector dimension mismatch");
  for (std::size_t i = 0; i < n.rank; ++i) {
    if (w.entries[i] <= 0) continue;
    if (!cyclic_quotient_type(n, w, i).has_value()) return false;
  }
  return true;
}

bool is_terminal_quotient(const QuotientType& q) {
  if (q.b.size() != 3)
    throw DomainError("terminality check needs exactly three exponents");
  if (q.r == 1) return true;
  for (long e : q.b)
    if (std::gcd(e, q.r) != 1) return false;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if ((q.b[i] + q.b[j]) % q.r == 0) return true;
  return false;
}

bool reid_tai_terminal_oracle(const QuotientType& q) {
  if (q.b.size() != 3)
    throw DomainError("terminality check needs exactly three exponents");
  for (long k = 1; k < q.r; ++k) {
    long long sum = 0;
    for (long e : q.b) sum += mod_reduce(static_cast<long long>(k) * e, q.r);
    if (sum <= q.r) return false;
  }
  return true;
}

QuotientGroupData enumerate_quotient_oracle(const LatticeData& n,
                                            const WeightVector& w,
                                            std::size_t i) {
  MatQ chart = chart_rows(n, w, i);
  MatQ chart_inv = invert(chart);

  auto frac_coords = [&](const VecQ& vec) {
    VecQ c(n.rank, Rational(0));
    for (std::size_t col = 0; col < n.rank; ++col) {
      for (std::size_t t = 0; t < n.rank; ++t)
        c[col] += vec[t] * chart_inv[t][col];
      c[col] -= rational_floor(c[col]);
    }
    return c;
  };

  std::vector<VecQ> gens;
  {
    VecQ ei(n.rank, Rational(0));
    ei[i] = 1;
    gens.push_back(frac_coords(ei));
  }
  if (!n.action.is_trivial()) {
    VecQ v(n.rank);
    for (std::size_t j = 0; j < n.rank; ++j)
      v[j] = Rational(n.action.b[j]) / Rational(n.action.r);
    gens.push_back(frac_coords(v));
  }

  std::set<VecQ> seen;
  std::queue<VecQ> work;
  VecQ zero(n.rank, Rational(0));
  seen.insert(zero);
  work.push(zero);
  while (!work.empty()) {
    VecQ cur = work.front();
    work.pop();
    for (const auto& g : gens) {
      VecQ next(n.rank);
      for (std::size_t j = 0; j < n.rank; ++j) {
        next[j] = cur[j] + g[j];
        next[j] -= rational_floor(next[j]);
      }
      if (seen.insert(next).second) work.push(next);
    }
  }

  QuotientGroupData out;
  out.order = static_cast<long>(seen.size());
  if (out.order == 1) {
    out.cyclic = true;
    out.type = QuotientType(1, std::vector<long>(n.rank, 0));
    return out;
  }
  out.cyclic = false;
  for (const auto& elem : seen) {
    mpz_class ord(1);
    for (const auto& q : elem)
      mpz_lcm(ord.get_mpz_t(), ord.get_mpz_t(), q.get_den_mpz_t());
    if (ord != out.order) continue;
    out.cyclic = true;
    std::vector<long> exps(n.rank);
    for (std::size_t j = 0; j < n.rank; ++j)
      exps[j] = static_cast<long>(to_ll(Rational(out.order) * elem[j]));
    out.type = QuotientType(out.order, std::move(exps));
    break;
  }
  return out;
}

}  // namespace ctc
