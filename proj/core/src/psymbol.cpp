#include "heunkit/psymbol.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace heunkit {

namespace {

std::string complex_to_string(Complex z) {
  char buf[64];
  const double scale = std::max(std::abs(z.real()), 1.0);
  if (std::abs(z.imag()) <= 1e-13 * scale) {
    std::snprintf(buf, sizeof(buf), "%.6g", z.real() == 0.0 ? 0.0 : z.real());
  } else {
    std::snprintf(buf, sizeof(buf), "%.6g%+.6gi", z.real(), z.imag());
  }
  return buf;
}

bool exponents_equal(std::vector<Complex> u, std::vector<Complex> v, double tol) {
  if (u.size() != v.size()) return false;
  std::sort(u.begin(), u.end(), complex_less);
  std::sort(v.begin(), v.end(), complex_less);
  for (std::size_t i = 0; i < u.size(); ++i)
    if (std::abs(u[i] - v[i]) > tol) return false;
  return true;
}

bool location_less(const SpherePoint& u, const SpherePoint& v) {
  if (u.at_infinity != v.at_infinity) return v.at_infinity;  // infinity sorts last
  return complex_less(u.z, v.z);
}

void require_uniform(const PSymbol& p) {
  for (const auto& col : p.columns)
    if (col.exponents.size() != p.order())
      fail(errc::shape_error, "ragged symbol: columns disagree on order");
}

}  // namespace

bool same_point(const SpherePoint& u, const SpherePoint& v, double tol) {
  if (u.at_infinity || v.at_infinity) return u.at_infinity && v.at_infinity;
  return std::abs(u.z - v.z) <= tol;
}

std::string point_to_string(const SpherePoint& p) {
  return p.at_infinity ? "inf" : complex_to_string(p.z);
}

const PColumn* PSymbol::find(const SpherePoint& at, double tol) const {
  for (const auto& col : columns)
    if (same_point(col.location, at, tol)) return &col;
  return nullptr;
}

Complex fuchs_sum(const PSymbol& p) {
  Complex s = 0.0;
  for (const auto& col : p.columns)
    for (const auto& e : col.exponents) s += e;
  return s;
}

Complex fuchs_defect(const PSymbol& p) {
  if (p.order() != 2)
    fail(errc::shape_error, "exponent-sum constraint applies to second-order symbols");
  return fuchs_sum(p) - Complex(static_cast<double>(p.columns.size()) - 2.0, 0.0);
}

bool equal_psymbol(const PSymbol& p, const PSymbol& q, double tol) {
  if (p.columns.size() != q.columns.size() || p.order() != q.order()) return false;
  std::vector<bool> used(q.columns.size(), false);
  for (const auto& pc : p.columns) {
    bool matched = false;
    for (std::size_t j = 0; j < q.columns.size(); ++j) {
      if (used[j] || !same_point(pc.location, q.columns[j].location, tol)) continue;
      if (!exponents_equal(pc.exponents, q.columns[j].exponents, tol)) return false;
      used[j] = true;
      matched = true;
      break;
    }
    if (!matched) return false;
  }
  return true;
}

std::string render(const PSymbol& p) {
  const std::size_t ncol = p.columns.size();
  const std::size_t nrow = p.order();
  std::vector<std::vector<std::string>> cells(nrow + 1, std::vector<std::string>(ncol));
  std::vector<std::size_t> width(ncol, 0);
  for (std::size_t j = 0; j < ncol; ++j) {
    cells[0][j] = point_to_string(p.columns[j].location);
    for (std::size_t i = 0; i < nrow; ++i) cells[i + 1][j] = complex_to_string(p.columns[j].exponents[i]);
    for (std::size_t i = 0; i <= nrow; ++i) width[j] = std::max(width[j], cells[i][j].size());
  }
  std::string out;
  for (std::size_t i = 0; i <= nrow; ++i) {
    out += (i == 0) ? "P{ " : "   ";
    for (std::size_t j = 0; j < ncol; ++j) {
      out += cells[i][j];
      if (j + 1 < ncol) out.append(width[j] - cells[i][j].size() + 2, ' ');
    }
    if (i == nrow) out += " }";
    out += '\n';
  }
  return out;
}

SpherePoint MobiusMap::apply(const SpherePoint& p) const {
  if (p.at_infinity) {
    if (std::abs(c) <= location_tol * std::max(std::abs(a), 1.0)) return SpherePoint::infinity();
    return SpherePoint::finite(a / c);
  }
  const Complex num = a * p.z + b;
  const Complex den = c * p.z + d;
  const double scale = std::max({std::abs(c * p.z), std::abs(d), 1e-30});
  if (std::abs(den) <= 1e-12 * scale) return SpherePoint::infinity();
  return SpherePoint::finite(num / den);
}

Complex MobiusMap::apply(Complex z) const { return (a * z + b) / (c * z + d); }

MobiusMap MobiusMap::inverse() const {
  const double scale = std::max({std::abs(a * d), std::abs(b * c), 1e-30});
  if (std::abs(det()) <= 1e-12 * scale)
    fail(errc::singular_map, "fractional linear map has vanishing determinant");
  return {d, -b, -c, a};
}

bool MobiusMap::is_identity(double tol) const {
  // Projectively: b = c = 0 and a = d.
  const double scale = std::max(std::abs(a), std::abs(d));
  return std::abs(b) <= tol * scale && std::abs(c) <= tol * scale && std::abs(a - d) <= tol * scale;
}

MobiusMap MobiusMap::from_images_of_0_1_inf(const SpherePoint& p0, const SpherePoint& p1,
                                            const SpherePoint& pinf) {
  if (same_point(p0, p1) || same_point(p0, pinf) || same_point(p1, pinf))
    fail(errc::invalid_parameter, "three-point interpolation needs distinct targets");
  if (pinf.at_infinity) return {p1.z - p0.z, p0.z, 0.0, 1.0};
  if (p0.at_infinity) return {pinf.z, p1.z - pinf.z, 1.0, 0.0};
  if (p1.at_infinity) return {pinf.z, -p0.z, 1.0, -1.0};
  return {pinf.z * (p1.z - p0.z), p0.z * (pinf.z - p1.z), p1.z - p0.z, pinf.z - p1.z};
}

MobiusMap operator*(const MobiusMap& m2, const MobiusMap& m1) {
  return {m2.a * m1.a + m2.b * m1.c, m2.a * m1.b + m2.b * m1.d,
          m2.c * m1.a + m2.d * m1.c, m2.c * m1.b + m2.d * m1.d};
}

PSymbol mobius_lift(const PSymbol& p, const MobiusMap& m) {
  const MobiusMap minv = m.inverse();
  PSymbol out = p;
  for (auto& col : out.columns) col.location = minv.apply(col.location);
  return out;
}

PSymbol f_homotopy(const PSymbol& p, Complex x0, Complex zeta, bool auto_add) {
  PSymbol out = p;
  const std::size_t ord = out.order();
  auto locate = [&](const SpherePoint& at) -> PColumn* {
    for (auto& col : out.columns)
      if (same_point(col.location, at)) return &col;
    return nullptr;
  };

  PColumn* at_x0 = locate(SpherePoint::finite(x0));
  if (!at_x0) {
    if (!auto_add) fail(errc::missing_column, "no column at the homotopy base point");
    PColumn ordinary{SpherePoint::finite(x0), std::vector<Complex>(ord)};
    for (std::size_t i = 0; i < ord; ++i) ordinary.exponents[i] = static_cast<double>(i);
    out.columns.push_back(ordinary);
    at_x0 = &out.columns.back();
  }
  PColumn* at_inf = locate(SpherePoint::infinity());
  if (!at_inf) {
    if (!auto_add) fail(errc::missing_column, "no column at infinity");
    PColumn ordinary{SpherePoint::infinity(), std::vector<Complex>(ord)};
    for (std::size_t i = 0; i < ord; ++i) ordinary.exponents[i] = -static_cast<double>(i);
    out.columns.push_back(ordinary);
    at_inf = locate(SpherePoint::infinity());
    at_x0 = locate(SpherePoint::finite(x0));  // vector may have reallocated
  }

  for (auto& e : at_x0->exponents) e -= zeta;
  for (auto& e : at_inf->exponents) e += zeta;
  return out;
}

PSymbol rational_lift(const PSymbol& p, const RationalMap& r) {
  require_uniform(p);
  if (p.order() != 2)
    fail(errc::shape_error, "pullback is implemented for second-order symbols");
  if (r.degree < 1) fail(errc::invalid_parameter, "rational map degree must be positive");

  // Distinct preimages, and per-image multiplicity sums equal to the degree.
  for (std::size_t i = 0; i < r.branch_table.size(); ++i)
    for (std::size_t j = i + 1; j < r.branch_table.size(); ++j)
      if (same_point(r.branch_table[i].preimage, r.branch_table[j].preimage))
        fail(errc::inconsistent_branching, "duplicate preimage in branch table");
  std::vector<bool> seen(r.branch_table.size(), false);
  for (std::size_t i = 0; i < r.branch_table.size(); ++i) {
    if (seen[i]) continue;
    int total = 0;
    for (std::size_t j = i; j < r.branch_table.size(); ++j) {
      if (same_point(r.branch_table[i].image, r.branch_table[j].image)) {
        total += r.branch_table[j].multiplicity;
        seen[j] = true;
      }
    }
    if (total != r.degree)
      fail(errc::inconsistent_branching, "fiber multiplicities do not sum to the degree");
  }

  PSymbol out;
  for (const auto& col : p.columns) {
    bool found = false;
    for (const auto& entry : r.branch_table) {
      if (!same_point(entry.image, col.location)) continue;
      found = true;
      const double k = static_cast<double>(entry.multiplicity);
      std::vector<Complex> lifted{k * col.exponents[0], k * col.exponents[1]};
      if (exponents_equal(lifted, {Complex(0.0), Complex(1.0)}, location_tol))
        continue;  // ordinary after lifting
      out.columns.push_back({entry.preimage, lifted});
    }
    if (!found)
      fail(errc::missing_column, "branch table does not cover column at " +
                                     point_to_string(col.location));
  }
  // Critical points over unmarked image points become {0, k} columns.
  for (const auto& entry : r.branch_table) {
    if (p.find(entry.image)) continue;
    if (entry.multiplicity > 1)
      out.columns.push_back(
          {entry.preimage, {Complex(0.0), Complex(static_cast<double>(entry.multiplicity))}});
  }
  return out;
}

NormalizeResult normalize(const PSymbol& p) {
  require_uniform(p);
  if (p.order() != 2) fail(errc::shape_error, "normalization applies to second-order symbols");
  if (p.columns.size() < 3)
    fail(errc::shape_error, "normalization needs at least three columns");

  std::vector<std::size_t> idx(p.columns.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
    return location_less(p.columns[i].location, p.columns[j].location);
  });

  NormalizeResult result;
  result.map = MobiusMap::from_images_of_0_1_inf(
      p.columns[idx[0]].location, p.columns[idx[1]].location, p.columns[idx[2]].location);
  result.symbol = mobius_lift(p, result.map);
  // Snap the three relocated anchors onto exact targets.
  const SpherePoint targets[3] = {SpherePoint::finite(0.0), SpherePoint::finite(1.0),
                                  SpherePoint::infinity()};
  for (int k = 0; k < 3; ++k) result.symbol.columns[idx[k]].location = targets[k];

  // Zero one exponent at every finite column, smallest location first.
  std::vector<std::size_t> order(result.symbol.columns.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return location_less(result.symbol.columns[i].location, result.symbol.columns[j].location);
  });
  for (std::size_t i : order) {
    const PColumn& col = result.symbol.columns[i];
    if (col.location.at_infinity) continue;
    bool has_zero = false;
    for (const auto& e : col.exponents)
      if (std::abs(e) <= location_tol) { has_zero = true; break; }
    if (has_zero) continue;
    Complex zeta = col.exponents[0];
    for (const auto& e : col.exponents)
      if (complex_less(e, zeta)) zeta = e;
    result.symbol = f_homotopy(result.symbol, col.location.z, zeta);
    result.shifts.emplace_back(result.symbol.columns[i].location, zeta);
  }
  return result;
}

PSymbol derivative_symbol(const PSymbol& p, std::size_t n) {
  require_uniform(p);
  if (p.order() != 2 || p.columns.size() != 4)
    fail(errc::shape_error, "expected a four-point second-order symbol");
  const double nd = static_cast<double>(n);
  PSymbol out = p;
  PColumn* inf_col = nullptr;
  for (auto& col : out.columns) {
    if (col.location.at_infinity) {
      if (inf_col) fail(errc::shape_error, "duplicate infinity column");
      inf_col = &col;
      continue;
    }
    std::size_t zero_at = col.exponents.size();
    for (std::size_t i = 0; i < col.exponents.size(); ++i)
      if (std::abs(col.exponents[i]) <= location_tol) { zero_at = i; break; }
    if (zero_at == col.exponents.size())
      fail(errc::shape_error, "finite column lacks a zero exponent");
    col.exponents[1 - zero_at] -= nd;
  }
  if (!inf_col) fail(errc::shape_error, "missing infinity column");
  std::size_t tag_at = inf_col->exponents.size();
  for (std::size_t i = 0; i < inf_col->exponents.size(); ++i)
    if (std::abs(inf_col->exponents[i] - (1.0 - nd)) <= location_tol) { tag_at = i; break; }
  if (tag_at == inf_col->exponents.size())
    fail(errc::shape_error, "infinity column must contain the exponent 1 - N");
  inf_col->exponents[tag_at] = 1.0 + nd;
  inf_col->exponents[1 - tag_at] += nd;
  return out;
}

PSymbol gauss_symbol(const GaussParams& p) {
  PSymbol s;
  s.columns = {
      {SpherePoint::finite(0.0), {0.0, 1.0 - p.gamma}},
      {SpherePoint::finite(1.0), {0.0, p.gamma - p.alpha - p.beta}},
      {SpherePoint::infinity(), {p.alpha, p.beta}},
  };
  return s;
}

PSymbol heun_symbol(const HeunParams& p) {
  PSymbol s;
  s.columns = {
      {SpherePoint::finite(0.0), {0.0, 1.0 - p.gamma}},
      {SpherePoint::finite(1.0), {0.0, 1.0 - p.delta}},
      {SpherePoint::finite(p.a), {0.0, 1.0 - p.epsilon()}},
      {SpherePoint::infinity(), {p.alpha, p.beta}},
  };
  return s;
}

PSymbol clausen_symbol(const ThreeF2Params& p) {
  PSymbol s;
  s.columns = {
      {SpherePoint::finite(0.0), {0.0, 1.0 - p.b1, 1.0 - p.b2}},
      {SpherePoint::finite(1.0), {0.0, 1.0, p.b1 + p.b2 - p.a1 - p.a2 - p.a3}},
      {SpherePoint::infinity(), {p.a1, p.a2, p.a3}},
  };
  return s;
}

}
