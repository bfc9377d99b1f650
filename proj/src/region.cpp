#include "pfpos/region.hpp"

#include "pfpos/qe.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace pfpos {

namespace {

using Row = std::vector<Rational>;

// rows[i] expresses f(n+i) in terms of f(n), f(n+1), f(n+2).
std::vector<Row> cfinite_rows(const Rational& u, const Rational& v, int last) {
  const Rational c0 = v, c1 = u - v, c2 = 1 - u;
  std::vector<Row> rows = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int i = 3; i <= last; ++i) {
    Row r(3);
    for (size_t k = 0; k < 3; ++k) r[k] = c0 * rows[i - 3][k] + c1 * rows[i - 2][k] + c2 * rows[i - 1][k];
    rows.push_back(std::move(r));
  }
  return rows;
}

bool phi_from_rows(const std::vector<Row>& rows, int rho) {
  std::vector<Row> gens(rows.begin(), rows.begin() + rho);
  return cone_contains(gens, rows[static_cast<size_t>(rho)]);
}

void check_triangle(const Rational& u, const Rational& v) {
  if (!in_triangle(u, v))
    throw std::domain_error("(" + to_string(u) + ", " + to_string(v) + ") is not inside |u|-1 < v < 1");
}

std::string rho_key(const std::optional<int>& r) { return r ? std::to_string(*r) : "none"; }

}  // namespace

bool in_triangle(const Rational& u, const Rational& v) { return abs(u) - 1 < v && v < 1; }

bool cfinite_phi(const Rational& u, const Rational& v, int rho) {
  check_triangle(u, v);
  if (rho < 3) throw std::invalid_argument("rho must be at least 3");
  return phi_from_rows(cfinite_rows(u, v, rho), rho);
}

std::optional<int> cfinite_min_rho(const Rational& u, const Rational& v, int rho_max) {
  check_triangle(u, v);
  const auto rows = cfinite_rows(u, v, rho_max);
  for (int rho = 3; rho <= rho_max; ++rho)
    if (phi_from_rows(rows, rho)) return rho;
  return std::nullopt;
}

std::vector<std::pair<Rational, Rational>> triangle_grid(const Rational& grid_step) {
  if (grid_step <= 0) throw std::invalid_argument("grid step must be positive");
  std::vector<std::pair<Rational, Rational>> pts;
  const Integer imax = ceil(Rational(2 / grid_step));
  const Integer jmax = ceil(Rational(1 / grid_step));
  for (Integer i = -imax; i <= imax; ++i) {
    Rational u = grid_step * Rational(i);
    for (Integer j = -jmax; j <= jmax; ++j) {
      Rational v = grid_step * Rational(j);
      if (in_triangle(u, v)) pts.emplace_back(u, v);
    }
  }
  return pts;
}

std::vector<RegionMapRow> map_region(const Rational& grid_step, int rho_max, unsigned threads) {
  if (!(grid_step > 0 && grid_step <= Rational(1, 4))) throw std::invalid_argument("grid step must be in (0, 1/4]");
  if (rho_max < 3 || rho_max > 16) throw std::invalid_argument("rho_max must be in [3, 16]");
  const auto pts = triangle_grid(grid_step);
  std::vector<RegionMapRow> rows(pts.size());
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t k; (k = next.fetch_add(1)) < pts.size();) {
      const auto& [u, v] = pts[k];
      rows[k] = {u, v, cfinite_min_rho(u, v, rho_max), region_gk_order3(u, v)};
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return rows;
}

Rational coverage_fraction(const Rational& grid_step) {
  const auto pts = triangle_grid(grid_step);
  if (pts.empty()) return 0;
  long hit = 0;
  for (const auto& [u, v] : pts)
    if (region_mu_order3(u, v) || no_positive_root(u, v)) ++hit;
  return make_rational(hit, static_cast<long>(pts.size()));
}

RegionFindings summarize(const std::vector<RegionMapRow>& rows) {
  RegionFindings f;
  f.points = rows.size();
  for (const auto& r : rows) {
    ++f.per_region[to_string(r.proven_region)];
    ++f.min_rho_histogram[rho_key(r.min_rho)];
    if (r.proven_region == GKRegion::Triangle && r.min_rho != 3) f.triangle_mismatch.push_back(r);
    if (r.proven_region == GKRegion::Outside && r.min_rho) f.outside_with_rho.push_back(r);
    if (r.proven_region == GKRegion::ConjectureOnly && !r.min_rho) f.conjecture_without_rho.push_back(r);
    if (r.min_rho == 3 && !(0 <= r.v && r.v <= r.u && r.u <= 1)) f.rho3_outside_closure.push_back(r);
  }
  return f;
}

std::string to_csv(const std::vector<RegionMapRow>& rows) {
  std::ostringstream out;
  out << "u,v,min_rho,proven_region\n";
  for (const auto& r : rows)
    out << r.u.get_str() << ',' << r.v.get_str() << ',' << (r.min_rho ? std::to_string(*r.min_rho) : "") << ','
        << to_string(r.proven_region) << '\n';
  return out.str();
}

nlohmann::json to_json(const RegionMapRow& r) {
  nlohmann::json j = {{"u", r.u.get_str()}, {"v", r.v.get_str()}, {"proven_region", to_string(r.proven_region)}};
  j["min_rho"] = r.min_rho ? nlohmann::json(*r.min_rho) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const std::vector<RegionMapRow>& rows) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& r : rows) a.push_back(to_json(r));
  return a;
}

nlohmann::json to_json(const RegionFindings& f) {
  auto pts = [](const std::vector<RegionMapRow>& rs) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& r : rs) a.push_back({r.u.get_str(), r.v.get_str()});
    return a;
  };
  return {{"points", f.points},
          {"per_region", f.per_region},
          {"min_rho_histogram", f.min_rho_histogram},
          {"triangle_mismatch", pts(f.triangle_mismatch)},
          {"outside_with_rho", pts(f.outside_with_rho)},
          {"conjecture_without_rho", pts(f.conjecture_without_rho)},
          {"rho3_outside_closure", pts(f.rho3_outside_closure)}};
}

}  // namespace pfpos
