#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "heunkit/types.hpp"

namespace heunkit {

// Point on the Riemann sphere.
struct SpherePoint {
  bool at_infinity = false;
  Complex z{0.0, 0.0};

  static SpherePoint finite(Complex z) { return {false, z}; }
  static SpherePoint infinity() { return {true, Complex{}}; }
};

bool same_point(const SpherePoint& u, const SpherePoint& v, double tol = location_tol);
std::string point_to_string(const SpherePoint& p);

// One column of a Riemann P-symbol: a marked point and the characteristic
// exponents attached to it (two for second-order symbols, three for
// third-order ones).
struct PColumn {
  SpherePoint location;
  std::vector<Complex> exponents;
};

struct PSymbol {
  std::vector<PColumn> columns;

  std::size_t order() const { return columns.empty() ? 0 : columns.front().exponents.size(); }
  const PColumn* find(const SpherePoint& at, double tol = location_tol) const;
};

// Sum of every exponent in the symbol.
Complex fuchs_sum(const PSymbol& p);
// For second-order symbols the exponent sum must be (#columns - 2); this is
// the deviation from that value.
Complex fuchs_defect(const PSymbol& p);

// Equality up to column order and within-column exponent order.
bool equal_psymbol(const PSymbol& p, const PSymbol& q, double tol = location_tol);

// Fixed-width textual rendering: location header row, exponent rows.
std::string render(const PSymbol& p);

// Fractional linear map (a z + b) / (c z + d), det != 0.
struct MobiusMap {
  Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};

  Complex det() const noexcept { return a * d - b * c; }
  SpherePoint apply(const SpherePoint& p) const;
  Complex apply(Complex z) const;
  MobiusMap inverse() const;
  bool is_identity(double tol = location_tol) const;

  // Map with m(0) = p0, m(1) = p1, m(inf) = pinf.
  static MobiusMap from_images_of_0_1_inf(const SpherePoint& p0, const SpherePoint& p1,
                                          const SpherePoint& pinf);
};

// Composition: (m2 * m1)(z) = m2(m1(z)).
MobiusMap operator*(const MobiusMap& m2, const MobiusMap& m1);

// Change of variable x = m(t): every column relocates from x0 to m^{-1}(x0);
// exponents are untouched.
PSymbol mobius_lift(const PSymbol& p, const MobiusMap& m);

// Multiplication of the solution space by (x - x0)^{-zeta}: subtracts zeta
// from the exponents at finite x0 and adds zeta at infinity.  When auto_add
// is false, a missing column raises missing_column; otherwise the absent
// point is first adjoined as an ordinary one ({0,1} finite, {0,-1} infinity).
PSymbol f_homotopy(const PSymbol& p, Complex x0, Complex zeta, bool auto_add = false);

// One fiber entry of a rational map: preimage |-> image with local
// multiplicity (ramification index).
struct BranchPoint {
  SpherePoint preimage;
  SpherePoint image;
  int multiplicity = 1;
};

// Rational map descriptor: degree plus the full branch table over the marked
// image points.  The table is supplied, not computed; the quadratic and
// biquadratic substitution maps have closed-form tables.
struct RationalMap {
  int degree = 1;
  std::vector<BranchPoint> branch_table;
  std::string name;
};

// Pullback of a second-order symbol along r.  Exponents multiply by the
// local multiplicity; a preimage is omitted when the lifted exponents are
// {0, 1} (an ordinary point); a preimage of an unmarked (table-listed but
// non-column) point with multiplicity k > 1 acquires exponents {0, k}.
// Every column location must appear among the table images, and for every
// distinct image the multiplicities must sum to the degree.
PSymbol rational_lift(const PSymbol& p, const RationalMap& r);

struct NormalizeResult {
  PSymbol symbol;
  // The substitution used: normalize applied mobius_lift(input, map).
  MobiusMap map;
  // F-homotopy shifts applied at finite columns, in application order.
  std::vector<std::pair<SpherePoint, Complex>> shifts;
};

// Relocates the three lexicographically smallest column locations (infinity
// ordered last) to {0, 1, inf} and applies F-homotopies so every finite
// column carries a zero exponent.  Requires a second-order symbol with at
// least three columns.
NormalizeResult normalize(const PSymbol& p);

// Shape transform of a 4-column second-order symbol under N-fold
// differentiation when the infinity column contains the exponent 1 - N:
// finite nonzero exponents drop by N, infinity becomes {1 + N, beta + N}.
PSymbol derivative_symbol(const PSymbol& p, std::size_t n);

// --- standard symbols -----------------------------------------------------

PSymbol gauss_symbol(const GaussParams& p);
PSymbol heun_symbol(const HeunParams& p);
// Third-order symbol of the 3F2 equation: {0, 1-b1, 1-b2} at 0,
// {0, 1, b1+b2-a1-a2-a3} at 1, {a1, a2, a3} at infinity.
PSymbol clausen_symbol(const ThreeF2Params& p);

}
