#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ctc/lattice.hpp"
#include "ctc/polynomial.hpp"
#include "ctc/weights.hpp"

namespace ctc {

// Decomposition f = h*y + g of an equation through the contracted curve
// (y = z = u = 0), with g free of y and contained in (z, u). The slices
// f2, f3 are total-degree parts of the recomposed equation after the
// logged normalizations.
struct NormalForm {
  RosterPtr roster;  // canonical order (x, y, z, u)
  Polynomial h, g;
  Polynomial f2, f3;
  int k = 0;       // h(x, 0, 0, 0) = c*x^k + higher
  int mult_h = 0;  // multiplicity of h at the origin
  int m = 0;       // (z, u)-adic order of g
  bool x_in_h = false;
  bool y_in_h = false;
  bool z_in_h = false;
  bool xz_in_g = false;
  bool zu_in_g = false;
  std::vector<std::string> changes;  // one line per applied substitution
};

// h*y + g over the roster of the normal form.
Polynomial recompose(const NormalForm& nf);

// The ten dispatch branches, in match order.
enum class CaseTag { kI, kII, kIII, kIV, kV, kVI, kVII, kVIII, kIX, kX };

std::string case_name(CaseTag tag);

// Local verdict for one blow-up chart at its origin.
struct GermVerdict {
  enum class Kind {
    kEmpty,         // the chart origin is off the variety
    kSmoothPoint,   // everything eliminated, trivial residual group
    kQuotient,      // smooth transversal slice, nontrivial cyclic group
    kHypersurface,  // one equation in four slice variables, catalogue match
    kUnrecognized,  // no catalogue template fits
  };
  Kind kind = Kind::kUnrecognized;
  std::string label;     // "cA/2", "cD/3", "1/4(1,1,3)", ...
  int axial_weight = 0;  // cA-family germs; 0 elsewhere
  bool axial_truncated = false;  // no pure axis power below the bound
  QuotientType quotient;         // residual action on the slice variables
  std::vector<std::string> notes;
};

// One reported singular point of the blown-up space.
struct ChartSingularity {
  std::string chart;  // chart variable name
  std::string label;
  int axial_weight = 0;  // 0 when not applicable
  QuotientType quotient;
  std::vector<std::string> notes;
};

// Canonical one-line rendering of the singularity list, e.g.
// "cA/2[aw=2] + cD/3"; "-" for an empty list.
std::string singularity_column(const std::vector<ChartSingularity>& list);

struct GroupVerdict {
  bool admissible = true;
  std::string reason;
};

struct ClassificationReport {
  std::string cdv;         // "cA", "cAx", "cD" or "cE"
  CaseTag tag = CaseTag::kI;
  std::string case_label;  // tag with sub-case, e.g. "VI-2"
  std::string row;         // table row id; empty when nothing matched
  std::vector<std::string> curve_ideal;
  std::size_t embedding_dim = 4;
  WeightVector weights;
  std::vector<Polynomial> equations;  // final generator list
  std::vector<ChartSingularity> singularities;
  GroupAction group;
  bool admissible = true;
  std::string group_note;
  std::string elephant;  // printed surface equation; empty without a row
  std::vector<std::string> normalizations;
  std::vector<std::string> diagnostics;
};

// Splits f = h*y + g over the curve roles (y, z, u), checking f lies in
// the curve ideal with multiplicity two. For k = 1 the y-translations
// that empty g of the non-curve variable are applied and logged. The
// curve argument names the roles in order (y, z, u); the leftover roster
// variable takes the x role and the result lives on the canonical roster.
NormalForm normal_form(const Polynomial& f,
                       const std::vector<std::string>& curve = {"y", "z",
                                                                "u"},
                       int truncation_order = kDefaultTruncationOrder);

// Coarse type of the hypersurface germ: rank of f2, rational splitting in
// rank two, and the cube test on the cubic left after splitting off the
// rank-one square. Errors when the multiplicity is not two or no cubic
// term survives.
std::string cdv_type(const Polynomial& f);

// First matching branch in the fixed order I..X. Normalizations the
// branch needs (swapping z and u, aligning the cube of case VII with z)
// are applied to the normal form, mirrored on the action, and logged.
CaseTag case_dispatch(NormalForm& nf, GroupAction& group);
CaseTag case_dispatch(NormalForm& nf);

// min{ k : axis^k occurs in h with nonzero coefficient }, or -1 when no
// pure power of the axis occurs.
int axial_weight(const Polynomial& h, const std::string& axis);

// Character components of u under the diagonal action; keys are residues
// mod r. Components sum to u and have disjoint supports.
std::map<long, Polynomial> semi_invariant_decomposition(
    const Polynomial& u, const GroupAction& group);

// The character of u when u is a semi-invariant, nullopt otherwise.
std::optional<long> single_character(const Polynomial& u,
                                     const GroupAction& group);

// Matches one hypersurface germ (four variables, multiplicity two)
// against the singularity catalogue under the given residual action.
GermVerdict match_germ(const Polynomial& f, const QuotientType& quotient,
                       int truncation_order = kDefaultTruncationOrder);

// Full local analysis of chart `chart` of the weighted blow-up: proper
// transform, elimination of unit-linear variables, then the catalogue
// match on what survives. The action must be aligned with the roster of
// the equations (trivial action for no group).
GermVerdict chart_germ(const std::vector<Polynomial>& equations,
                       const WeightVector& w, std::size_t chart,
                       const GroupAction& group,
                       int truncation_order = kDefaultTruncationOrder);

// Verdicts for every chart with positive weight and nontrivial residual
// group, skipping charts whose origin is off the variety.
std::vector<ChartSingularity> chart_singularities(
    const std::vector<Polynomial>& equations, const WeightVector& w,
    const GroupAction& group,
    int truncation_order = kDefaultTruncationOrder);

// Admissibility of the action for the classified families: semi-invariance
// of the equation, equivariance of the normalizations and tilts, cyclicity
// of every chart group, and the per-family arithmetic conditions.
GroupVerdict group_admissibility(
    const Polynomial& f, const GroupAction& group,
    int truncation_order = kDefaultTruncationOrder);

// The general-elephant cut for a table row: u, y, or y + mu*u with a
// symbolic generic parameter mu, over the roster (y, u, mu). Errors on an
// unknown row id.
Polynomial general_elephant(const std::string& row);

// The classification pipeline: normal form, dispatch, tilting, blow-up
// charts, catalogue matching, row selection, group admissibility and the
// elephant cut, with cross-checks between the row data and the structural
// chart analysis reported as diagnostics.
ClassificationReport classify(const Polynomial& f,
                              const GroupAction& group = GroupAction{},
                              int truncation_order = kDefaultTruncationOrder);

// Stable multi-line text rendering of a report.
std::string format_report(const ClassificationReport& report);

}  // namespace ctc
