#pragma once

#include "pfpos/classifier.hpp"
#include "pfpos/rational.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pfpos {

struct RegionMapRow {
  Rational u, v;
  std::optional<int> min_rho;
  GKRegion proven_region = GKRegion::Outside;
};

/// Strictly inside |u| - 1 < v < 1.
bool in_triangle(const Rational& u, const Rational& v);

/// Length-rho induction implication for f(n+3) = (1-u) f(n+2) + (u-v) f(n+1) + v f(n),
/// decided by exact cone containment. Throws std::domain_error outside the
/// triangle, std::invalid_argument for rho < 3.
bool cfinite_phi(const Rational& u, const Rational& v, int rho);

/// Least rho in [3, rho_max] with cfinite_phi true.
std::optional<int> cfinite_min_rho(const Rational& u, const Rational& v, int rho_max);

/// Grid points (i * step, j * step) strictly inside the triangle, sorted by (u, v).
std::vector<std::pair<Rational, Rational>> triangle_grid(const Rational& grid_step);

/// Requires 0 < grid_step <= 1/4 and 3 <= rho_max <= 16. Points are evaluated
/// on `threads` workers (0: hardware concurrency); output order is canonical.
std::vector<RegionMapRow> map_region(const Rational& grid_step, int rho_max, unsigned threads = 0);

/// Fraction of grid points in the mu region or with no positive root of
/// x^2 + u x + v. Zero when the grid has no interior point.
Rational coverage_fraction(const Rational& grid_step);

struct RegionFindings {
  size_t points = 0;
  std::map<std::string, size_t> per_region;
  std::map<std::string, size_t> min_rho_histogram;  // "none" for absent
  /// Triangle rows whose min_rho is not 3.
  std::vector<RegionMapRow> triangle_mismatch;
  /// Outside rows that still found a rho.
  std::vector<RegionMapRow> outside_with_rho;
  /// ConjectureOnly rows without a rho up to rho_max.
  std::vector<RegionMapRow> conjecture_without_rho;
  /// min_rho = 3 at points outside the closed triangle (0,0),(1,0),(1,1).
  std::vector<RegionMapRow> rho3_outside_closure;
};

RegionFindings summarize(const std::vector<RegionMapRow>& rows);

std::string to_csv(const std::vector<RegionMapRow>& rows);
nlohmann::json to_json(const RegionMapRow& row);
nlohmann::json to_json(const std::vector<RegionMapRow>& rows);
nlohmann::json to_json(const RegionFindings& f);

}  // namespace pfpos
