#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <utility>

#include "ctc/blowup.hpp"
#include "ctc/classify.hpp"
#include "ctc/error.hpp"
#include "ctc/gcd.hpp"

namespace ctc {
namespace {

long mod_r(long v, long r) {
  if (r <= 1) return 0;
  long m = v % r;
  return m < 0 ? m + r : m;
}

long inverse_mod(long a, long r) {
  a = mod_r(a, r);
  for (long x = 1; x < r; ++x)
    if (mod_r(a * x, r) == 1) return x;
  throw DomainError("no inverse modulo " + std::to_string(r));
}

Polynomial degree_part(const Polynomial& f, int d) {
  TermMap kept;
  for (const auto& [mono, c] : f.terms()) {
    int total = 0;
    for (int e : mono) total += e;
    if (total == d) kept[mono] = c;
  }
  return make_polynomial(f.roster(), std::move(kept));
}

// Quadratic coefficient of x_i*x_j (or x_i^2 when i = j).
Rational quad_coeff(const Polynomial& f2, std::size_t i, std::size_t j) {
  Monomial m(f2.roster()->size(), 0);
  m[i] += 1;
  m[j] += 1;
  return f2.coefficient(m);
}

// Solves grad_{i,j} f = 0 for the pair as series in the other variables
// and returns f on the solution sheet. The constant 2x2 Hessian block of
// the pair must be invertible; the iteration gains one degree per round.
Polynomial split_off_pair(const Polynomial& f, std::size_t i, std::size_t j,
                          int trunc) {
  const RosterPtr roster = f.roster();
  const Polynomial f2 = degree_part(f, 2);
  const Rational aii = quad_coeff(f2, i, i);
  const Rational aij = quad_coeff(f2, i, j);
  const Rational ajj = quad_coeff(f2, j, j);
  const Rational det = aii * ajj * 4 - aij * aij;
  if (det == 0) throw DomainError("degenerate quadratic block");
  Truncation tr{trunc};
  const Polynomial di = derivative(f, i);
  const Polynomial dj = derivative(f, j);
  const std::string ni = roster->names()[i];
  const std::string nj = roster->names()[j];
  Polynomial s = Polynomial::zero(roster);
  Polynomial t = Polynomial::zero(roster);
  for (int round = 0; round <= trunc + 1; ++round) {
    const std::map<std::string, Polynomial> at{{ni, s}, {nj, t}};
    const Polynomial g1 = substitute(di, at, roster, &tr);
    const Polynomial g2 = substitute(dj, at, roster, &tr);
    if (g1.is_zero() && g2.is_zero()) break;
    s = truncate_total_degree(s - (g1 * (ajj * 2) - g2 * aij) * (1 / det),
                              trunc);
    t = truncate_total_degree(t - (g2 * (aii * 2) - g1 * aij) * (1 / det),
                              trunc);
  }
  const std::map<std::string, Polynomial> at{{ni, s}, {nj, t}};
  return substitute(f, at, roster, &tr);
}

// One-variable version along a direction with nonzero square coefficient.
Polynomial split_off_direction(const Polynomial& f, std::size_t v,
                               int trunc) {
  const RosterPtr roster = f.roster();
  const Rational d = quad_coeff(degree_part(f, 2), v, v) * 2;
  if (d == 0) throw DomainError("degenerate square direction");
  Truncation tr{trunc};
  const Polynomial dv = derivative(f, v);
  const std::string nv = roster->names()[v];
  Polynomial s = Polynomial::zero(roster);
  for (int round = 0; round <= trunc + 1; ++round) {
    const Polynomial g = substitute(dv, {{nv, s}}, roster, &tr);
    if (g.is_zero()) break;
    s = truncate_total_degree(s - g * (1 / d), trunc);
  }
  return substitute(f, {{nv, s}}, roster, &tr);
}

GermVerdict unrecognized(const QuotientType& q, std::string why) {
  GermVerdict out;
  out.kind = GermVerdict::Kind::kUnrecognized;
  out.label = "unrecognized";
  out.quotient = q.canonical();
  out.notes.push_back(std::move(why));
  return out;
}

bool scaled_multiset_match(const std::vector<long>& values, long lambda,
                           long r, std::vector<long> target) {
  std::vector<long> scaled;
  scaled.reserve(values.size());
  for (long v : values) scaled.push_back(mod_r(lambda * v, r));
  std::sort(scaled.begin(), scaled.end());
  std::sort(target.begin(), target.end());
  return scaled == target;
}

std::vector<long> units_mod(long r) {
  std::vector<long> out;
  for (long x = 1; x < std::max<long>(r, 2); ++x)
    if (std::gcd(x, r) == 1) out.push_back(x);
  if (out.empty()) out.push_back(1);
  return out;
}

}  // namespace

std::string case_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::kI: return "I";
    case CaseTag::kII: return "II";
    case CaseTag::kIII: return "III";
    case CaseTag::kIV: return "IV";
    case CaseTag::kV: return "V";
    case CaseTag::kVI: return "VI";
    case CaseTag::kVII: return "VII";
    case CaseTag::kVIII: return "VIII";
    case CaseTag::kIX: return "IX";
    case CaseTag::kX: return "X";
  }
  throw DomainError("unknown case tag");
}

std::map<long, Polynomial> semi_invariant_decomposition(
    const Polynomial& u, const GroupAction& group) {
  if (group.r < 1) throw DomainError("group order must be positive");
  const RosterPtr roster = u.roster();
  if (!group.is_trivial() && group.b.size() != roster->size())
    throw DomainError("action is not aligned with the variable roster");
  std::map<long, TermMap> buckets;
  for (const auto& [mono, c] : u.terms()) {
    long chi = 0;
    if (!group.is_trivial())
      for (std::size_t i = 0; i < mono.size(); ++i)
        chi += group.b[i] * mono[i];
    buckets[mod_r(chi, group.r)][mono] = c;
  }
  std::map<long, Polynomial> out;
  for (auto& [chi, terms] : buckets)
    out.emplace(chi, make_polynomial(roster, std::move(terms)));
  return out;
}

std::optional<long> single_character(const Polynomial& u,
                                     const GroupAction& group) {
  const auto parts = semi_invariant_decomposition(u, group);
  if (parts.empty()) return 0;
  if (parts.size() == 1) return parts.begin()->first;
  return std::nullopt;
}

int axial_weight(const Polynomial& h, const std::string& axis) {
  const auto idx = h.roster()->index(axis);
  if (!idx) throw DomainError("unknown axis variable: " + axis);
  int best = -1;
  for (const auto& [mono, c] : h.terms()) {
    bool pure = true;
    for (std::size_t t = 0; t < mono.size(); ++t)
      if (t != *idx && mono[t] != 0) {
        pure = false;
        break;
      }
    const int e = mono[*idx];
    if (pure && e > 0 && (best < 0 || e < best)) best = e;
  }
  return best;
}

std::string singularity_column(const std::vector<ChartSingularity>& list) {
  if (list.empty()) return "-";
  std::string out;
  for (const auto& s : list) {
    if (!out.empty()) out += " + ";
    out += s.label;
    if (s.axial_weight > 0)
      out += "[aw=" + std::to_string(s.axial_weight) + "]";
  }
  return out;
}

std::string cdv_type(const Polynomial& f) {
  if (f.is_zero() || f.multiplicity_at_origin() != 2)
    throw DomainError("the germ must have multiplicity two at the origin");
  const Polynomial f2 = degree_part(f, 2);
  const int rank = quadratic_form_rank(f2);
  if (rank >= 3) return "cA";
  if (rank == 2)
    return split_quadric(f2).kind == QuadricSplit::Kind::kSplit ? "cA" : "cAx";
  // Rank one: remove the square direction and test the cubic remainder.
  const QuadricSplit sp = split_quadric(f2);
  std::size_t v = f.roster()->size();
  for (std::size_t t = 0; t < f.roster()->size(); ++t) {
    Monomial m(f.roster()->size(), 0);
    m[t] = 1;
    if (sp.l1.coefficient(m) != 0) {
      v = t;
      break;
    }
  }
  const Polynomial w = split_off_direction(f, v, kDefaultTruncationOrder);
  const Polynomial w3 = degree_part(w, 3);
  if (w3.is_zero())
    throw DomainError("no cubic term survives splitting off the square");
  return cube_root_linear(w3) ? "cE" : "cD";
}

GermVerdict match_germ(const Polynomial& f, const QuotientType& quotient,
                       int trunc) {
  const RosterPtr roster = f.roster();
  const std::size_t n = roster->size();
  if (quotient.r < 1) throw DomainError("group order must be positive");
  if (!quotient.is_trivial() && quotient.b.size() != n)
    throw DomainError("action is not aligned with the variable roster");
  if (n != 4)
    return unrecognized(quotient, "the catalogue needs four slice variables");

  const long r = quotient.r;
  std::vector<long> chi(n, 0);
  for (std::size_t i = 0; i < n && i < quotient.b.size(); ++i)
    chi[i] = mod_r(quotient.b[i], r);

  if (f.is_zero()) return unrecognized(quotient, "zero equation");
  if (f.multiplicity_at_origin() != 2)
    return unrecognized(quotient, "multiplicity at the origin is not two");
  const auto chi_f_opt = single_character(f, quotient);
  if (!chi_f_opt)
    return unrecognized(quotient, "equation is not semi-invariant");
  const long chi_f = *chi_f_opt;
  const Polynomial f2 = degree_part(f, 2);

  GermVerdict out;
  out.kind = GermVerdict::Kind::kHypersurface;
  out.quotient = quotient.canonical();

  // Two transversal branches: x*y + h(z, u) with the axis fixed.
  if (chi_f == 0) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        if (mod_r(chi[i] + chi[j], r) != 0) continue;
        const Rational det = quad_coeff(f2, i, i) * quad_coeff(f2, j, j) * 4 -
                             quad_coeff(f2, i, j) * quad_coeff(f2, i, j);
        if (det == 0) continue;
        std::vector<std::size_t> rest;
        for (std::size_t t = 0; t < n; ++t)
          if (t != i && t != j) rest.push_back(t);
        for (int o = 0; o < 2; ++o) {
          const std::size_t zs = rest[o], us = rest[1 - o];
          if (r > 1) {
            if (chi[us] != 0) continue;
            if (std::gcd(chi[zs], r) != 1) continue;
            const long a = mod_r(chi[i] * inverse_mod(chi[zs], r), r);
            if (std::gcd(a, r) != 1) continue;
          }
          const Polynomial h = split_off_pair(f, i, j, trunc);
          if (h.is_zero())
            return unrecognized(quotient,
                                "nothing survives splitting the branch pair");
          out.label = r == 1 ? "cA" : "cA/" + std::to_string(r);
          int aw = axial_weight(h, roster->names()[us]);
          if (r == 1) {
            const int other = axial_weight(h, roster->names()[zs]);
            if (aw < 0 || (other > 0 && other < aw)) aw = other;
          }
          if (aw < 0) {
            out.axial_truncated = true;
            out.notes.push_back("no pure axis power below the truncation "
                                "order");
          } else {
            out.axial_weight = aw;
          }
          return out;
        }
      }
  }

  // Two squares exchanged by the action.
  if ((r == 2 && chi_f == 0) || (r == 4 && chi_f == 2)) {
    const std::vector<long> square_slots = r == 2 ? std::vector<long>{1, 0}
                                                  : std::vector<long>{1, 3};
    const std::vector<long> rest_slots = r == 2 ? std::vector<long>{1, 1}
                                                : std::vector<long>{1, 2};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        if (quad_coeff(f2, i, i) == 0 || quad_coeff(f2, j, j) == 0) continue;
        if (chi[i] == chi[j]) continue;
        for (long lambda : units_mod(r)) {
          if (!scaled_multiset_match({chi[i], chi[j]}, lambda, r,
                                     square_slots))
            continue;
          std::vector<long> rest_chi;
          for (std::size_t t = 0; t < n; ++t)
            if (t != i && t != j) rest_chi.push_back(chi[t]);
          if (!scaled_multiset_match(rest_chi, lambda, r, rest_slots))
            continue;
          const Polynomial h = split_off_pair(f, i, j, trunc);
          if (h.is_zero())
            return unrecognized(quotient,
                                "nothing survives splitting the squares");
          out.label = "cAx/" + std::to_string(r);
          return out;
        }
      }
  }

  // One square: the cD and cE families.
  if (f2.is_zero())
    return unrecognized(quotient, "quadratic part vanishes");
  const QuadricSplit sp = split_quadric(f2);
  if (sp.kind != QuadricSplit::Kind::kSquare)
    return unrecognized(quotient,
                        "quadratic part fits no catalogue template");
  const auto chi_l_opt = single_character(sp.l1, quotient);
  if (!chi_l_opt)
    return unrecognized(quotient, "split line is not semi-invariant");
  const long chi_l = *chi_l_opt;
  bool shape_ok = false;
  if (r == 1) {
    shape_ok = true;
  } else if (r == 2 && chi_f == 0 && chi_l == 1) {
    shape_ok = scaled_multiset_match(chi, 1, r, {1, 1, 1, 0});
  } else if (r == 3 && chi_f == 0 && chi_l == 0) {
    for (long lambda : units_mod(r))
      shape_ok = shape_ok || scaled_multiset_match(chi, lambda, r,
                                                   {0, 1, 2, 2});
  }
  if (!shape_ok)
    return unrecognized(quotient,
                        "square slot characters fit no catalogue template");
  std::size_t v = n;
  for (std::size_t t = 0; t < n; ++t) {
    Monomial m(n, 0);
    m[t] = 1;
    if (sp.l1.coefficient(m) != 0) {
      v = t;
      break;
    }
  }
  if (v == n) return unrecognized(quotient, "split line has no variable");
  const Polynomial w = split_off_direction(f, v, trunc);
  const Polynomial w3 = degree_part(w, 3);
  if (w3.is_zero())
    return unrecognized(quotient, "no cubic part survives the splitting");
  const bool cube = cube_root_linear(w3).has_value();
  if (r == 3) {
    out.label = "cD/3";
    if (cube)
      out.notes.push_back(
          "residual cubic is a perfect cube; the order-three catalogue "
          "only admits the cD label for this slot pattern");
  } else if (r == 2) {
    out.label = cube ? "cE/2" : "cD/2";
  } else {
    out.label = cube ? "cE" : "cD";
  }
  return out;
}

GermVerdict chart_germ(const std::vector<Polynomial>& equations,
                       const WeightVector& w, std::size_t chart,
                       const GroupAction& group, int trunc) {
  if (equations.empty()) throw DomainError("no equations supplied");
  const RosterPtr roster = equations.front().roster();
  const std::size_t n = roster->size();
  validate_weights(w, *roster);
  if (chart >= n) throw DomainError("chart index out of range");
  const LatticeData lattice = group.is_trivial()
                                  ? LatticeData::standard(n)
                                  : LatticeData::from_action(group);
  const auto quot = cyclic_quotient_type(lattice, w, chart);
  if (!quot) {
    GermVerdict out;
    out.kind = GermVerdict::Kind::kUnrecognized;
    out.label = "non-cyclic quotient";
    out.notes.push_back("the chart group is not cyclic");
    return out;
  }
  const long r = quot->r;
  std::vector<long> chi(n, 0);
  for (std::size_t i = 0; i < n; ++i) chi[i] = mod_r(quot->b[i], r);
  const QuotientType chart_action(r, chi);

  Truncation tr{trunc};
  const auto lifts = proper_transform(equations, w, chart);
  std::vector<Polynomial> work;
  bool lift_truncated = false;
  for (const auto& l : lifts) {
    bool hit = false;
    work.push_back(truncate_total_degree(l.lifted, trunc, &hit));
    lift_truncated = lift_truncated || hit || l.truncated;
  }
  std::vector<std::string> notes;
  if (lift_truncated)
    notes.push_back("chart equations truncated at the working order");
  if (r > 1)
    for (const auto& e : work)
      if (!e.is_zero() && !single_character(e, chart_action)) {
        auto out = unrecognized(*quot, "chart equation is not semi-invariant");
        out.notes.insert(out.notes.end(), notes.begin(), notes.end());
        return out;
      }

  std::vector<bool> live(n, true);
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t ei = 0; ei < work.size() && !progress; ++ei) {
      Polynomial& e = work[ei];
      if (e.is_zero()) {
        notes.push_back("an equation vanished during elimination");
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(ei));
        progress = true;
        break;
      }
      if (e.constant_term() != 0) {
        GermVerdict out;
        out.kind = GermVerdict::Kind::kEmpty;
        out.label = "empty";
        out.notes = notes;
        out.notes.push_back("a chart equation has a unit term: the origin "
                            "is off the variety");
        return out;
      }
      for (std::size_t v = 0; v < n && !progress; ++v) {
        if (!live[v]) continue;
        Monomial bare(n, 0);
        bare[v] = 1;
        const Rational c = e.coefficient(bare);
        if (c == 0) continue;
        // Fixed-point solve of e = 0 for variable v.
        const std::string name = roster->names()[v];
        Polynomial vstar = Polynomial::zero(roster);
        for (int round = 0; round <= trunc + 1; ++round) {
          const Polynomial val = substitute(e, {{name, vstar}}, roster, &tr);
          if (val.is_zero()) break;
          vstar = truncate_total_degree(vstar - val * (1 / c), trunc);
        }
        const std::map<std::string, Polynomial> img{{name, vstar}};
        std::vector<Polynomial> next;
        for (std::size_t oj = 0; oj < work.size(); ++oj) {
          if (oj == ei) continue;
          next.push_back(truncate_total_degree(
              substitute(work[oj], img, roster, &tr), trunc));
        }
        work = std::move(next);
        live[v] = false;
        progress = true;
      }
    }
  }

  std::vector<std::size_t> alive;
  for (std::size_t v = 0; v < n; ++v)
    if (live[v]) alive.push_back(v);

  if (work.empty()) {
    if (alive.size() != 3) {
      auto out = unrecognized(*quot, "slice dimension is off after "
                                     "elimination");
      out.notes.insert(out.notes.end(), notes.begin(), notes.end());
      return out;
    }
    GermVerdict out;
    std::vector<long> b;
    for (std::size_t v : alive) b.push_back(chi[v]);
    const QuotientType residual(r, b);
    out.quotient = residual.canonical();
    out.notes = notes;
    if (r == 1) {
      out.kind = GermVerdict::Kind::kSmoothPoint;
      out.label = "smooth";
    } else {
      out.kind = GermVerdict::Kind::kQuotient;
      out.label = to_string(out.quotient);
    }
    return out;
  }
  if (work.size() > 1) {
    auto out =
        unrecognized(*quot, "several equations survive elimination");
    out.notes.insert(out.notes.end(), notes.begin(), notes.end());
    return out;
  }
  if (alive.size() != 4) {
    auto out = unrecognized(*quot, "hypersurface slice is not "
                                   "four-dimensional");
    out.notes.insert(out.notes.end(), notes.begin(), notes.end());
    return out;
  }
  std::vector<std::string> names;
  std::vector<long> b;
  for (std::size_t v : alive) {
    names.push_back(roster->names()[v]);
    b.push_back(chi[v]);
  }
  const RosterPtr slice = make_roster(names);
  const Polynomial germ = reindex(work.front(), slice);
  auto out = match_germ(germ, QuotientType(r, b), trunc);
  out.notes.insert(out.notes.end(), notes.begin(), notes.end());
  if (tr.hit)
    out.notes.push_back("truncation bound reached during elimination");
  return out;
}

std::vector<ChartSingularity> chart_singularities(
    const std::vector<Polynomial>& equations, const WeightVector& w,
    const GroupAction& group, int trunc) {
  if (equations.empty()) throw DomainError("no equations supplied");
  const RosterPtr roster = equations.front().roster();
  const std::size_t n = roster->size();
  validate_weights(w, *roster);
  const LatticeData lattice = group.is_trivial()
                                  ? LatticeData::standard(n)
                                  : LatticeData::from_action(group);
  std::vector<ChartSingularity> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (w.entries[i] <= 0) continue;
    const auto quot = cyclic_quotient_type(lattice, w, i);
    if (!quot) {
      ChartSingularity s;
      s.chart = roster->names()[i];
      s.label = "non-cyclic quotient";
      out.push_back(std::move(s));
      continue;
    }
    if (quot->r == 1) continue;
    const GermVerdict v = chart_germ(equations, w, i, group, trunc);
    if (v.kind == GermVerdict::Kind::kEmpty) continue;
    ChartSingularity s;
    s.chart = roster->names()[i];
    s.label = v.label;
    s.axial_weight = v.axial_weight;
    s.quotient = v.quotient;
    s.notes = v.notes;
    if (v.axial_truncated) s.notes.push_back("axial weight at least the "
                                             "truncation order");
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace ctc
