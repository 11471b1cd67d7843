#include "ctc/classify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "ctc/error.hpp"
#include "ctc/gcd.hpp"
#include "ctc/tilting.hpp"

namespace ctc {
namespace {

long mod_r(long v, long r) {
  if (r <= 1) return 0;
  long m = v % r;
  return m < 0 ? m + r : m;
}

std::optional<long> inverse_mod(long a, long r) {
  a = mod_r(a, r);
  for (long x = 1; x < r; ++x)
    if (mod_r(a * x, r) == 1) return x;
  return std::nullopt;
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

// Terms whose z- and u-exponents sum to exactly j.
Polynomial zu_slice(const Polynomial& f, int j) {
  TermMap kept;
  for (const auto& [mono, c] : f.terms())
    if (mono[2] + mono[3] == j) kept[mono] = c;
  return make_polynomial(f.roster(), std::move(kept));
}

const WeightVector& zu_weights() {
  static const WeightVector w({0, 0, 1, 1});
  return w;
}

Rational coeff_of(const Polynomial& f, std::initializer_list<int> exps) {
  Monomial m(exps);
  m.resize(f.roster()->size(), 0);
  return f.coefficient(m);
}

// Truncated inverse of a series with a unit constant term.
Polynomial invert_unit(const Polynomial& p, int order) {
  const Rational c = p.constant_term();
  if (c == 0) throw DomainError("cannot invert a series without a unit term");
  const RosterPtr roster = p.roster();
  const Polynomial rest = p - Polynomial::constant(roster, c);
  Polynomial inv = Polynomial::constant(roster, 1 / c);
  if (rest.is_zero()) return inv;
  for (int round = 0; round <= order; ++round) {
    // inv <- (1 - rest*inv)/c, the fixed point of p*inv = 1.
    inv = truncate_total_degree(
        (Polynomial::constant(roster, 1) - rest * inv) * (1 / c), order);
  }
  return inv;
}

// Rebuilds the split data of a normal form from a full equation.
void set_from(NormalForm& nf, const Polynomial& f) {
  const RosterPtr roster = nf.roster;
  TermMap hterms, gterms;
  for (const auto& [mono, c] : f.terms()) {
    if (mono[1] > 0) {
      Monomial m = mono;
      m[1] -= 1;
      hterms[m] = c;
    } else {
      if (mono[2] == 0 && mono[3] == 0)
        throw DomainError("the surviving terms leave the curve ideal");
      gterms[mono] = c;
    }
  }
  nf.h = make_polynomial(roster, std::move(hterms));
  nf.g = make_polynomial(roster, std::move(gterms));
  if (nf.g.is_zero())
    throw DomainError("the equation is divisible by the section");
  nf.mult_h = nf.h.is_zero() ? 0 : nf.h.multiplicity_at_origin();
  nf.m = static_cast<int>(*weighted_valuation(nf.g, zu_weights()));
  const Polynomial full = nf.h * Polynomial::variable(roster, 1) + nf.g;
  nf.f2 = degree_part(full, 2);
  nf.f3 = degree_part(full, 3);
  nf.x_in_h = coeff_of(nf.h, {1, 0, 0, 0}) != 0;
  nf.y_in_h = coeff_of(nf.h, {0, 1, 0, 0}) != 0;
  nf.z_in_h = coeff_of(nf.h, {0, 0, 1, 0}) != 0;
  nf.xz_in_g = coeff_of(nf.g, {1, 0, 1, 0}) != 0;
  nf.zu_in_g = coeff_of(nf.g, {0, 0, 1, 1}) != 0;
  nf.k = -1;
  for (const auto& [mono, c] : nf.h.terms()) {
    if (mono[1] != 0 || mono[2] != 0 || mono[3] != 0) continue;
    if (nf.k < 0 || mono[0] < nf.k) nf.k = mono[0];
  }
}

void apply_change(NormalForm& nf, const std::map<std::string, Polynomial>& img,
                  const Truncation* tr) {
  Polynomial f = substitute(recompose(nf), img, nf.roster, tr);
  if (tr) f = truncate_total_degree(f, tr->order);
  std::ostringstream line;
  bool first = true;
  for (const auto& [name, image] : img) {
    if (!first) line << "; ";
    first = false;
    line << name << " -> " << to_string(image);
  }
  set_from(nf, f);
  nf.changes.push_back(line.str());
}

void swap_zu(NormalForm& nf, GroupAction& group) {
  const RosterPtr roster = nf.roster;
  apply_change(nf,
               {{"z", Polynomial::variable(roster, 3)},
                {"u", Polynomial::variable(roster, 2)}},
               nullptr);
  if (!group.is_trivial()) std::swap(group.b[2], group.b[3]);
}

// Moves the axis coefficient of the equation into the first coordinate and
// empties the transversal part of x, leaving f = x*y + g(z, u).
void normalize_branch_case(NormalForm& nf, int trunc) {
  const RosterPtr roster = nf.roster;
  const Polynomial xvar = Polynomial::variable(roster, 0);
  const Polynomial yvar = Polynomial::variable(roster, 1);
  Truncation tr{trunc};
  int guard = 0;
  while (nf.h != xvar) {
    if (++guard > trunc + 4)
      throw DomainError("the axis absorption does not stabilize");
    const Rational c = coeff_of(nf.h, {1, 0, 0, 0});
    if (c == 0)
      throw DomainError("the axis coefficient lost its linear term");
    const Polynomial rest = nf.h - xvar * c;
    Polynomial psi = xvar * (1 / c);
    if (!rest.is_zero()) {
      for (int round = 0; round <= trunc + 1; ++round) {
        const Polynomial r = substitute(rest, {{"x", psi}}, roster, &tr);
        psi = truncate_total_degree((xvar - r) * (1 / c), trunc);
      }
    }
    apply_change(nf, {{"x", psi}}, &tr);
  }
  int rounds = 0;
  while (true) {
    const Polynomial gx =
        nf.g - substitute(nf.g, {{"x", Polynomial::zero(roster)}}, roster);
    if (gx.is_zero()) break;
    if (++rounds > 3)
      throw DomainError("the transversal translation does not stabilize");
    const auto b = exact_divide(gx, xvar);
    if (!b) throw DomainError("the axis content of the equation is broken");
    apply_change(nf, {{"y", yvar - *b}}, nullptr);
  }
}

// Aligns g_{v=1} = x*(unit*z + series*u) with the coordinate z.
void align_linear_slice(NormalForm& nf, int trunc) {
  const RosterPtr roster = nf.roster;
  const Polynomial slice = homogeneous_part(nf.g, zu_weights(), 1);
  const auto quotient = exact_divide(slice, Polynomial::variable(roster, 0));
  if (!quotient)
    throw DomainError("the linear slice is not divisible by the axis");
  const Polynomial gamma_z = quotient->coefficient_of(2, 1);
  const Polynomial gamma_u = quotient->coefficient_of(3, 1);
  if (gamma_z.constant_term() == 0)
    throw DomainError("the linear slice has no unit z part");
  const Polynomial zvar = Polynomial::variable(roster, 2);
  if (*quotient == zvar) return;
  Truncation tr{trunc};
  const Polynomial zimg = truncate_total_degree(
      mul(zvar - mul(gamma_u, Polynomial::variable(roster, 3), &tr),
          invert_unit(gamma_z, trunc), &tr),
      trunc);
  apply_change(nf, {{"z", zimg}}, &tr);
}

// Linear change sending the two rational factor lines of the quadric slice
// to the coordinate axes, so the slice becomes the plain product z*u.
void align_split_quadric(NormalForm& nf, const QuadricSplit& sp) {
  const RosterPtr roster = nf.roster;
  const Polynomial g2 = degree_part(nf.g, 2);
  Monomial zu(roster->size(), 0);
  zu[2] = 1;
  zu[3] = 1;
  if (g2.term_count() == 1 && g2.coefficient(zu) != 0) return;
  Monomial ze(roster->size(), 0), ue(roster->size(), 0);
  ze[2] = 1;
  ue[3] = 1;
  const Rational a1 = sp.l1.coefficient(ze), b1 = sp.l1.coefficient(ue);
  const Rational a2 = sp.l2.coefficient(ze) * sp.c;
  const Rational b2 = sp.l2.coefficient(ue) * sp.c;
  const Rational det = a1 * b2 - b1 * a2;
  if (det == 0) throw DomainError("the quadric factors are not independent");
  const Polynomial Z = Polynomial::variable(roster, 2);
  const Polynomial U = Polynomial::variable(roster, 3);
  apply_change(nf,
               {{"z", (Z * b2 - U * b1) * (1 / det)},
                {"u", (Z * (-a2) + U * a1) * (1 / det)}},
               nullptr);
}

// Aligns a line inside the (z, u) plane with the coordinate z: a swap when
// the line is the u axis, a shear otherwise.
void align_line_to_z(NormalForm& nf, GroupAction& group, const Polynomial& l) {
  const RosterPtr roster = nf.roster;
  Monomial ze(roster->size(), 0), ue(roster->size(), 0);
  ze[2] = 1;
  ue[3] = 1;
  const Rational cz = l.coefficient(ze);
  const Rational cu = l.coefficient(ue);
  if (cz == 0 && cu == 0)
    throw DomainError("the distinguished line leaves the transversal plane");
  if (cz == 0) {
    swap_zu(nf, group);
    return;
  }
  if (cu == 0) return;
  const Polynomial Z = Polynomial::variable(roster, 2);
  const Polynomial U = Polynomial::variable(roster, 3);
  apply_change(nf, {{"z", Z - U * (cu / cz)}}, nullptr);
}

bool is_pure_in(const Polynomial& l, std::size_t var) {
  for (const auto& [mono, c] : l.terms())
    for (std::size_t i = 0; i < mono.size(); ++i)
      if (i != var && mono[i] != 0) return false;
  return true;
}

// --- table row machinery -------------------------------------------------

struct BulletEntry {
  std::string chart;
  std::string label;  // catalogue label, or empty when quot is set
  std::optional<QuotientType> quot;
};

BulletEntry point(std::string chart, long r, std::vector<long> b) {
  BulletEntry e;
  e.chart = std::move(chart);
  e.quot = QuotientType(r, std::move(b)).canonical();
  e.label = to_string(*e.quot);
  return e;
}

BulletEntry germ_entry(std::string chart, std::string label) {
  BulletEntry e;
  e.chart = std::move(chart);
  e.label = std::move(label);
  return e;
}

// Expected chart singularities per table row; m and a resolve the
// order parameters that vary inside a family.
std::vector<BulletEntry> bullet_route(const std::string& row, long m, long a) {
  const std::string cam = "cA/" + std::to_string(m);
  const std::string caa = "cA/" + std::to_string(a);
  if (row == "1") return {point("y", m, {m - 1, 1, 1})};
  if (row == "2") return {germ_entry("y", cam)};
  if (row == "3") return {germ_entry("y", cam), germ_entry("t", caa)};
  if (row == "4") return {point("t", a, {1, 1, a - 1})};
  if (row == "5" || row == "6" || row == "7")
    return {germ_entry("y", "cA/2")};
  if (row == "8" || row == "30") return {germ_entry("y", "cD/3")};
  if (row == "9" || row == "31") return {germ_entry("t", "cD/3")};
  if (row == "10" || row == "32")
    return {point("y", 2, {1, 1, 1}), germ_entry("t", "cD/3")};
  if (row == "11" || row == "33")
    return {germ_entry("y", "cA/2"), germ_entry("t", "cD/3")};
  if (row == "12" || row == "34")
    return {germ_entry("y", "cAx/2"), germ_entry("t", "cD/3")};
  if (row == "13" || row == "35")
    return {germ_entry("y", "cD/2"), germ_entry("t", "cD/3")};
  if (row == "14" || row == "36")
    return {germ_entry("y", "cE/2"), germ_entry("t", "cD/3")};
  if (row == "15")
    return {point("y", 2, {1, 1, 1}), point("t", 3, {1, 1, 2})};
  if (row == "16")
    return {germ_entry("y", "cA/2"), point("t", 3, {1, 1, 2})};
  if (row == "17")
    return {germ_entry("y", "cAx/2"), point("t", 3, {1, 1, 2})};
  if (row == "18")
    return {germ_entry("y", "cD/2"), point("t", 3, {1, 1, 2})};
  if (row == "19") return {germ_entry("t", "cAx/4")};
  if (row == "20" || row == "27" || row == "37")
    return {germ_entry("t", "cAx/2")};
  if (row == "21" || row == "28") return {germ_entry("t", "cD/2")};
  if (row == "22" || row == "29") return {germ_entry("t", "cE/2")};
  if (row == "23") return {germ_entry("y", "cAx/2")};
  if (row == "24" || row == "25") return {germ_entry("y", "cD/2")};
  if (row == "26" || row == "38") return {germ_entry("y", "cE/2")};
  if (row == "39") return {germ_entry("t", "cE/2")};
  if (row == "Q3" || row == "Q4") return {germ_entry("y", "cAx/4")};
  throw DomainError("no bullet data for row " + row);
}

bool has_monomial(const Polynomial& f, std::initializer_list<int> exps) {
  Monomial m(exps);
  m.resize(f.roster()->size(), 0);
  return f.coefficient(m) != 0;
}

std::string germ_row(const GermVerdict& v,
                     const std::map<std::string, std::string>& by_label,
                     const std::string& empty_row,
                     const std::string& quotient_row) {
  if (v.kind == GermVerdict::Kind::kEmpty) return empty_row;
  if (v.kind == GermVerdict::Kind::kQuotient) return quotient_row;
  if (v.kind == GermVerdict::Kind::kHypersurface) {
    auto it = by_label.find(v.label);
    if (it != by_label.end()) return it->second;
  }
  return "";
}

}  // namespace

Polynomial recompose(const NormalForm& nf) {
  return nf.h * Polynomial::variable(nf.roster, 1) + nf.g;
}

NormalForm normal_form(const Polynomial& f0,
                       const std::vector<std::string>& curve,
                       int truncation_order) {
  if (truncation_order < kMinTruncationOrder)
    throw DomainError("the truncation order is too small");
  if (curve.size() != 3) throw DomainError("the curve needs three sections");
  const RosterPtr source = f0.roster();
  if (source->size() != 4)
    throw DomainError("the ambient space must have four coordinates");
  std::set<std::string> seen(curve.begin(), curve.end());
  if (seen.size() != 3) throw DomainError("the curve sections repeat a name");
  std::string xrole;
  for (const auto& name : source->names())
    if (!seen.count(name)) {
      if (!xrole.empty())
        throw DomainError("a curve section is not a coordinate");
      xrole = name;
    }
  if (xrole.empty()) throw DomainError("a curve section is not a coordinate");

  NormalForm nf;
  nf.roster = make_roster({"x", "y", "z", "u"});
  const std::map<std::string, Polynomial> transport{
      {xrole, Polynomial::variable(nf.roster, 0)},
      {curve[0], Polynomial::variable(nf.roster, 1)},
      {curve[1], Polynomial::variable(nf.roster, 2)},
      {curve[2], Polynomial::variable(nf.roster, 3)}};
  const Polynomial f = substitute(f0, transport, nf.roster);
  if (f.is_zero()) throw DomainError("the equation is zero");
  for (const auto& [mono, c] : f.terms())
    if (mono[1] == 0 && mono[2] == 0 && mono[3] == 0)
      throw DomainError("the equation does not vanish on the curve");
  if (f.multiplicity_at_origin() != 2)
    throw DomainError("the equation must have multiplicity two at the origin");
  set_from(nf, f);
  if (nf.k < 0)
    throw DomainError("no pure axis power occurs alongside the section");
  if (nf.k == 1) normalize_branch_case(nf, truncation_order);
  return nf;
}

CaseTag case_dispatch(NormalForm& nf) {
  GroupAction trivial;
  return case_dispatch(nf, trivial);
}

CaseTag case_dispatch(NormalForm& nf, GroupAction& group) {
  const int trunc = kDefaultTruncationOrder;
  if (nf.k == 1) return CaseTag::kI;
  if (nf.z_in_h) return CaseTag::kII;
  if (coeff_of(nf.h, {0, 0, 0, 1}) != 0) {
    swap_zu(nf, group);
    return CaseTag::kII;
  }
  if (nf.xz_in_g) {
    align_linear_slice(nf, trunc);
    return CaseTag::kIII;
  }
  if (coeff_of(nf.g, {1, 0, 0, 1}) != 0) {
    swap_zu(nf, group);
    align_linear_slice(nf, trunc);
    return CaseTag::kIII;
  }
  const Polynomial g2 = degree_part(nf.g, 2);
  const QuadricSplit sp =
      g2.is_zero() ? QuadricSplit{} : split_quadric(g2);
  if (sp.kind == QuadricSplit::Kind::kSplit) {
    align_split_quadric(nf, sp);
    return CaseTag::kIV;
  }
  if (nf.y_in_h) {
    if (!g2.is_zero()) {
      if (sp.kind == QuadricSplit::Kind::kSquare)
        align_line_to_z(nf, group, sp.l1);
      return CaseTag::kV;
    }
    const Polynomial g3 = degree_part(nf.g, 3);
    if (!g3.is_zero()) {
      const auto root = cube_root_linear(g3);
      if (!root) return CaseTag::kVI;
      align_line_to_z(nf, group, *root);
      return CaseTag::kVII;
    }
  }
  if (nf.mult_h > 1 && sp.kind == QuadricSplit::Kind::kAnisotropic)
    return CaseTag::kVIII;
  if (nf.mult_h > 1 && sp.kind == QuadricSplit::Kind::kSquare &&
      !nf.f3.is_zero()) {
    align_line_to_z(nf, group, sp.l1);
    return cube_root_linear(nf.f3) ? CaseTag::kX : CaseTag::kIX;
  }
  throw DomainError("the equation fits no dispatch branch");
}

Polynomial general_elephant(const std::string& row) {
  static const std::set<std::string> u_rows{"1",  "2",  "3",  "23", "30",
                                            "31", "32", "33", "34", "35",
                                            "36", "37", "Q3"};
  static const std::set<std::string> y_rows{"4", "5", "6", "7",
                                            "24", "26", "Q4"};
  static const std::set<std::string> mixed_rows{
      "8",  "9",  "10", "11", "12", "13", "14", "15", "16", "17", "18",
      "19", "20", "21", "22", "25", "27", "28", "29", "38", "39", "Q1",
      "Q2"};
  const RosterPtr roster = make_roster({"y", "u", "mu"});
  if (u_rows.count(row)) return Polynomial::variable(roster, 1);
  if (y_rows.count(row)) return Polynomial::variable(roster, 0);
  if (mixed_rows.count(row))
    return Polynomial::variable(roster, 0) +
           Polynomial::variable(roster, 1) * Polynomial::variable(roster, 2);
  throw DomainError("unknown table row: " + row);
}

GroupVerdict group_admissibility(const Polynomial& f, const GroupAction& group,
                                 int truncation_order) {
  const ClassificationReport report = classify(f, group, truncation_order);
  GroupVerdict out;
  out.admissible = report.admissible;
  out.reason = report.group_note;
  return out;
}

namespace {

// Sub-case of the dispatch branch, from the slice data of the final
// normal form and the tilt count.
std::string sub_case(const NormalForm& nf, CaseTag tag, long tilts) {
  const std::string base = case_name(tag);
  const Polynomial g3 = degree_part(nf.g, 3);
  const Polynomial g32 = zu_slice(g3, 2);
  const Polynomial g33 = zu_slice(g3, 3);
  switch (tag) {
    case CaseTag::kII:
      return tilts == 0 ? "II-1" : "II-2";
    case CaseTag::kVI: {
      if (nf.m >= 3) return "VI-1";
      if (nf.m == 2) {
        if (g32.is_zero()) return "VI-2";
        const Polynomial gv3 = homogeneous_part(nf.g, zu_weights(), 3);
        return gv3.is_zero() ? "VI-4" : "VI-3";
      }
      return "VI-5";
    }
    case CaseTag::kVII: {
      if (nf.m >= 3) return "VII-1";
      return nf.m == 2 ? "VII-2" : "VII-3";
    }
    case CaseTag::kIX: {
      if (nf.m == 1) return "IX-5";
      if (nf.k == 2) return "IX-1";
      if (!g32.is_zero()) return "IX-2";
      if (has_monomial(nf.f3, {1, 2, 0, 0}) ||
          has_monomial(nf.f3, {1, 1, 0, 1}))
        return "IX-3";
      return "IX-4";
    }
    case CaseTag::kX: {
      if (nf.m >= 2) return g33.is_zero() ? "X-2" : "X-1";
      const auto root = cube_root_linear(nf.f3);
      if (root && is_pure_in(*root, 1)) return "X-4";
      return "X-3";
    }
    default:
      return base;
  }
}

std::string select_row(const std::string& sub, CaseTag tag, long tilts,
                       long kprime, const GermVerdict& germ_y,
                       const std::optional<GermVerdict>& germ_t,
                       std::vector<std::string>& diagnostics) {
  static const std::map<std::string, std::string> vi2{{"cA/2", "11"},
                                                      {"cAx/2", "12"},
                                                      {"cD/2", "13"},
                                                      {"cE/2", "14"}};
  static const std::map<std::string, std::string> vi3{{"cA/2", "16"},
                                                      {"cAx/2", "17"},
                                                      {"cD/2", "18"}};
  static const std::map<std::string, std::string> vi5{{"cAx/2", "20"},
                                                      {"cD/2", "21"},
                                                      {"cE/2", "22"}};
  static const std::map<std::string, std::string> vii2{{"cA/2", "33"},
                                                       {"cAx/2", "34"},
                                                       {"cD/2", "35"},
                                                       {"cE/2", "36"}};
  static const std::map<std::string, std::string> ix5{{"cD/2", "28"},
                                                      {"cE/2", "29"}};
  std::string row;
  switch (tag) {
    case CaseTag::kI:
      row = "1";
      break;
    case CaseTag::kII:
      if (tilts == 0) row = "2";
      if (tilts == 1) row = "3";
      break;
    case CaseTag::kIII:
      row = "4";
      break;
    case CaseTag::kIV:
      row = "5";
      break;
    case CaseTag::kV:
      row = "6";
      break;
    case CaseTag::kVIII:
      row = "7";
      break;
    case CaseTag::kVI:
      if (sub == "VI-1") row = "8";
      if (sub == "VI-2") row = germ_row(germ_y, vi2, "9", "10");
      if (sub == "VI-3") row = germ_row(germ_y, vi3, "", "15");
      if (sub == "VI-4") row = "19";
      if (sub == "VI-5" && germ_t) row = germ_row(*germ_t, vi5, "", "");
      break;
    case CaseTag::kVII:
      if (sub == "VII-1") row = "30";
      if (sub == "VII-2") row = germ_row(germ_y, vii2, "31", "32");
      if (sub == "VII-3") row = "37";
      break;
    case CaseTag::kIX:
      if (sub == "IX-1") row = "23";
      if (sub == "IX-2") row = "24";
      if (sub == "IX-3") row = "25";
      if (sub == "IX-4") row = "26";
      if (sub == "IX-5") {
        if (kprime == 2)
          row = "27";
        else if (germ_t)
          row = germ_row(*germ_t, ix5, "", "");
      }
      break;
    case CaseTag::kX:
      row = (sub == "X-1" || sub == "X-2") ? "38" : "39";
      break;
  }
  if (row.empty())
    diagnostics.push_back(
        "no table row matches the chart analysis for sub-case " + sub);
  return row;
}

struct TemplateResult {
  std::string row;
  bool admissible = true;
  std::string note;
  long alpha = 0;  // the free exponent of the matched pattern
};

// Non-trivial actions only exist for four families; the quotient
// templates pin the character patterns and the coprimality conditions.
TemplateResult quotient_template(CaseTag tag, const GroupAction& g, long m,
                                 long a) {
  TemplateResult out;
  const long r = g.r;
  auto reject = [&out](std::string why) {
    out.admissible = false;
    out.note = std::move(why);
    return out;
  };
  switch (tag) {
    case CaseTag::kI: {
      const auto lambda = inverse_mod(g.b[1], r);
      if (!lambda)
        return reject("the section character is not a unit of the action");
      std::vector<long> bp(4);
      for (int i = 0; i < 4; ++i) bp[i] = mod_r(*lambda * g.b[i], r);
      long alpha = 0;
      if (bp[0] == r - 1 && bp[3] == 0 && std::gcd(bp[2], r) == 1)
        alpha = bp[2];
      else if (bp[0] == r - 1 && bp[2] == 0 && std::gcd(bp[3], r) == 1)
        alpha = bp[3];
      else
        return reject("the action does not match the branch-family template");
      if (std::gcd(m * alpha - 1, m * r) != 1)
        return reject("the template coprimality condition fails");
      out.row = "Q1";
      out.alpha = alpha;
      return out;
    }
    case CaseTag::kIII: {
      const auto lambda = inverse_mod(g.b[2], r);
      if (!lambda)
        return reject("the aligned slice character is not a unit");
      std::vector<long> bp(4);
      for (int i = 0; i < 4; ++i) bp[i] = mod_r(*lambda * g.b[i], r);
      long alpha = 0;
      if (bp[0] == r - 1 && bp[3] == 0 && std::gcd(bp[1], r) == 1)
        alpha = bp[1];
      else if (bp[0] == r - 1 && bp[1] == 0 && std::gcd(bp[3], r) == 1)
        alpha = bp[3];
      else
        return reject("the action does not match the slice-family template");
      if (std::gcd(a * alpha - 1, a * r) != 1)
        return reject("the template coprimality condition fails");
      out.row = "Q2";
      out.alpha = alpha;
      return out;
    }
    case CaseTag::kV:
    case CaseTag::kVIII: {
      const std::vector<long> want_v{1, 1, 0, 1}, want_w{1, 1, 1, 0};
      if (r == 2 && (g.b == want_v || g.b == want_w)) {
        out.row = tag == CaseTag::kV ? "Q3" : "Q4";
        return out;
      }
      return reject("the action does not match the involution template");
    }
    default:
      return reject("no admissible non-trivial group for this family");
  }
}

// The quotient bullets whose order data depends on the action.
std::vector<BulletEntry> quotient_bullets(const std::string& row,
                                          const GroupAction& g, long m,
                                          long a, long alpha) {
  const long r = g.r;
  if (row == "Q1")
    return {point("y", m * r, {1, m * alpha - 1, m * r - 1})};
  if (row == "Q2")
    return {point("t", a * r, {a * alpha - 1, 1, a * r - 1})};
  return bullet_route(row, m, a);
}

bool looks_like_quotient(const ChartSingularity& s) {
  return !s.quotient.is_trivial() && s.label == to_string(s.quotient);
}

long label_order(const std::string& label) {
  const auto slash = label.rfind('/');
  if (slash == std::string::npos) return 1;
  try {
    return std::stol(label.substr(slash + 1));
  } catch (const std::exception&) {
    return 0;
  }
}

}  // namespace

ClassificationReport classify(const Polynomial& f, const GroupAction& group,
                              int truncation_order) {
  ClassificationReport report;
  if (group.r < 1) throw DomainError("the group order must be positive");
  GroupAction gx = group;
  if (!gx.is_trivial()) {
    if (gx.b.size() != 4)
      throw DomainError("the action needs one exponent per coordinate");
    if (f.roster()->names() != std::vector<std::string>{"x", "y", "z", "u"})
      throw DomainError(
          "a non-trivial action needs the canonical coordinate order");
    for (auto& e : gx.b) e = mod_r(e, gx.r);
    report.group = gx;
    if (!single_character(f, gx)) {
      report.admissible = false;
      report.group_note = "the equation is not semi-invariant";
      report.case_label = "-";
      return report;
    }
  }

  NormalForm nf = normal_form(f, {"y", "z", "u"}, truncation_order);
  report.tag = case_dispatch(nf, gx);
  report.normalizations = nf.changes;
  const Polynomial fc = recompose(nf);
  if (!gx.is_trivial() && !single_character(fc, gx)) {
    report.admissible = false;
    report.group_note = "a normalization breaks the equivariance";
    report.case_label = case_name(report.tag);
    return report;
  }
  report.cdv = cdv_type(fc);

  EmbeddingState st =
      init_embedding(fc, {"z", "u", "y"}, {nf.m, 1, 1});
  st.truncation_order = truncation_order;
  const FinalEmbedding fin = run_tilting(st);
  const long tilts = static_cast<long>(fin.kappas.size());
  report.embedding_dim = 4 + static_cast<std::size_t>(tilts);
  report.weights = fin.weights;
  report.equations = fin.vbasis;
  for (std::size_t i = 1; i < fin.state.roster->size(); ++i)
    if (i != 2 && i != 3) report.curve_ideal.push_back(fin.state.roster->name(i));
  report.curve_ideal.insert(report.curve_ideal.begin() + 1, {"z", "u"});
  long kprime = 0;
  if (!fin.thetas.empty())
    kprime = monomial_content(fin.thetas.front()).first[0];
  const long a_first =
      tilts > 0 ? fin.weights.entries[4] : 0;

  GroupAction gext;
  if (!gx.is_trivial()) {
    std::vector<long> bx = gx.b;
    for (long j = 0; j < tilts; ++j) {
      std::vector<long> padded = bx;
      padded.resize(4 + static_cast<std::size_t>(tilts), 0);
      const auto chi =
          single_character(fin.kappas[static_cast<std::size_t>(j)],
                           GroupAction(gx.r, padded));
      if (!chi) {
        report.admissible = false;
        report.group_note = "a tilt target is not semi-invariant";
        report.case_label = case_name(report.tag);
        return report;
      }
      bx.push_back(*chi);
    }
    gext = GroupAction(gx.r, bx);
  }

  // The family templates carry the paper-level verdicts; their rejection
  // reasons take precedence over the generic lattice message.
  std::optional<TemplateResult> tmpl;
  if (!gx.is_trivial()) {
    tmpl = quotient_template(report.tag, gx, nf.m, a_first);
    if (!tmpl->admissible) {
      report.admissible = false;
      report.group_note = tmpl->note;
    }
  }

  const LatticeData lattice =
      gext.is_trivial()
          ? LatticeData::standard(fin.state.roster->size())
          : LatticeData::from_action(gext);
  const bool lattice_ok = is_admissible(lattice, fin.weights);
  if (!lattice_ok && report.admissible) {
    report.admissible = false;
    report.group_note = "a chart stabilizer is not cyclic";
  }

  const std::vector<ChartSingularity> germ_list = chart_singularities(
      fin.vbasis, fin.weights, gext, truncation_order);
  const GermVerdict germ_y =
      chart_germ(fin.vbasis, fin.weights, 1, gext, truncation_order);
  std::optional<GermVerdict> germ_t;
  if (tilts > 0)
    germ_t = chart_germ(fin.vbasis, fin.weights, 4, gext, truncation_order);

  report.case_label = sub_case(nf, report.tag, tilts);
  std::string row;
  long template_alpha = 0;
  if (report.admissible) {
    if (gx.is_trivial()) {
      row = select_row(report.case_label, report.tag, tilts, kprime, germ_y,
                       germ_t, report.diagnostics);
    } else {
      row = tmpl->row;
      template_alpha = tmpl->alpha;
    }
  }
  report.row = row;

  // Cross-check the table bullets against the structural chart analysis;
  // any disagreement demotes the report to the chart list.
  std::vector<ChartSingularity> chosen = germ_list;
  if (!row.empty()) {
    const std::vector<BulletEntry> bullets =
        gx.is_trivial()
            ? bullet_route(row, nf.m, a_first)
            : quotient_bullets(row, gx, nf.m, a_first, template_alpha);
    bool consistent = bullets.size() == germ_list.size();
    std::vector<ChartSingularity> merged;
    for (std::size_t i = 0; consistent && i < bullets.size(); ++i) {
      const BulletEntry& b = bullets[i];
      ChartSingularity s = germ_list[i];
      if (s.chart != b.chart) {
        consistent = false;
        break;
      }
      if (b.quot) {
        consistent = looks_like_quotient(s) &&
                     s.quotient.same_type(*b.quot);
      } else if (s.label == b.label) {
        // structural match
      } else if (looks_like_quotient(s) &&
                 b.label.rfind("cA/", 0) == 0 &&
                 label_order(b.label) == s.quotient.r) {
        s.label = b.label;
        s.axial_weight = 1;
        s.notes.push_back(
            "transversal slice refines to the branch template");
      } else {
        consistent = false;
      }
      if (consistent) merged.push_back(std::move(s));
    }
    if (consistent) {
      chosen = std::move(merged);
    } else {
      report.diagnostics.push_back(
          "table row data and chart analysis disagree; reporting the "
          "chart analysis");
    }
  }
  report.singularities = std::move(chosen);

  for (const auto& s : report.singularities)
    if (looks_like_quotient(s) && s.quotient.b.size() == 3 &&
        !is_terminal_quotient(s.quotient))
      report.diagnostics.push_back("the " + s.chart +
                                   " chart quotient fails the terminal test");
  if (row == "2" && !report.singularities.empty() &&
      report.singularities[0].axial_weight != nf.k)
    report.diagnostics.push_back(
        "the axial weight differs from the axis order of the branch");
  if (row == "3" && report.singularities.size() == 2) {
    if (report.singularities[0].axial_weight != nf.k - kprime ||
        report.singularities[1].axial_weight != kprime)
      report.diagnostics.push_back(
          "the axial weights differ from the axis order split");
  }
  if (row == "27" || row == "28" || row == "29")
    report.diagnostics.push_back(
        "cubic membership conditions are tested on the normalized equation");
  if (row == "28" && !(has_monomial(fc, {1, 2, 0, 0}) ||
                       has_monomial(fc, {1, 1, 0, 1}) ||
                       has_monomial(fc, {1, 0, 0, 2})))
    report.diagnostics.push_back(
        "row 28 side condition: no mixed axis cubic term is present");
  if (row == "29") {
    static const std::vector<Monomial> probes{
        {0, 3, 0, 0}, {0, 2, 1, 0}, {0, 2, 0, 1}, {0, 1, 1, 1},
        {0, 1, 0, 2}, {0, 0, 1, 2}, {0, 0, 0, 3}};
    bool any = false;
    for (const auto& p : probes)
      if (fc.coefficient(p) != 0) any = true;
    if (!any)
      report.diagnostics.push_back(
          "row 29 side condition: no transversal cubic term is present");
  }

  if (!row.empty()) report.elephant = to_string(general_elephant(row));
  report.diagnostics.push_back("exceptional ideal primality: " +
                               to_string(fin.primality));
  if (fin.state.truncation_hit)
    report.diagnostics.push_back(
        "tilting reductions reached the value bound");
  return report;
}

std::string format_report(const ClassificationReport& report) {
  std::ostringstream os;
  const auto block = [&os](const std::string& name,
                           const std::vector<std::string>& lines) {
    if (lines.empty()) {
      os << name << ": -\n";
      return;
    }
    os << name << ":\n";
    for (const auto& l : lines) os << "  " << l << "\n";
  };
  os << "row: " << (report.row.empty() ? "-" : report.row) << "\n";
  os << "case: " << (report.case_label.empty() ? "-" : report.case_label)
     << "\n";
  os << "cdv: " << (report.cdv.empty() ? "-" : report.cdv) << "\n";
  os << "weights: ";
  if (report.weights.entries.empty()) {
    os << "-\n";
  } else {
    os << "(";
    for (std::size_t i = 0; i < report.weights.entries.size(); ++i) {
      if (i) os << ",";
      os << report.weights.entries[i];
    }
    os << ")\n";
  }
  os << "embedding dimension: " << report.embedding_dim << "\n";
  os << "curve ideal: ";
  if (report.curve_ideal.empty()) {
    os << "-\n";
  } else {
    os << "(";
    for (std::size_t i = 0; i < report.curve_ideal.size(); ++i) {
      if (i) os << ", ";
      os << report.curve_ideal[i];
    }
    os << ")\n";
  }
  os << "group: "
     << (report.group.is_trivial() ? "trivial" : to_string(report.group))
     << "\n";
  os << "admissible: " << (report.admissible ? "yes" : "no");
  if (!report.group_note.empty()) os << " (" << report.group_note << ")";
  os << "\n";
  os << "singularities: " << singularity_column(report.singularities) << "\n";
  os << "elephant: " << (report.elephant.empty() ? "-" : report.elephant)
     << "\n";
  std::vector<std::string> eqs;
  for (const auto& e : report.equations) eqs.push_back(to_string(e));
  block("equations", eqs);
  block("normalizations", report.normalizations);
  block("diagnostics", report.diagnostics);
  return os.str();
}

}  // namespace ctc
