#include "pfpos/qe.hpp"

#include <stdexcept>

namespace pfpos {

bool cone_contains(const std::vector<std::vector<Rational>>& gens, const std::vector<Rational>& target) {
  const size_t m = gens.size();
  const size_t d = target.size();
  for (const auto& g : gens)
    if (g.size() > d) throw std::invalid_argument("cone_contains: generator dimension mismatch");
  // Phase I simplex for sum_i lambda_i gens[i] = target, lambda >= 0.
  // Columns 0..m-1 are lambda, m..m+d-1 artificials.
  const size_t cols = m + d;
  std::vector<std::vector<Rational>> t(d, std::vector<Rational>(cols + 1));
  std::vector<size_t> basis(d);
  for (size_t r = 0; r < d; ++r) {
    int s = sign(target[r]) < 0 ? -1 : 1;
    for (size_t i = 0; i < m; ++i)
      if (r < gens[i].size()) t[r][i] = gens[i][r] * s;
    t[r][m + r] = 1;
    t[r][cols] = target[r] * s;
    basis[r] = m + r;
  }
  std::vector<Rational> cost(cols + 1);
  for (size_t r = 0; r < d; ++r)
    for (size_t j = 0; j < m; ++j) cost[j] -= t[r][j];
  for (size_t r = 0; r < d; ++r) cost[cols] -= t[r][cols];

  for (;;) {
    size_t enter = cols;
    for (size_t j = 0; j < cols; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;
    size_t leave = d;
    Rational best;
    for (size_t r = 0; r < d; ++r) {
      if (t[r][enter] <= 0) continue;
      Rational ratio = t[r][cols] / t[r][enter];
      if (leave == d || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == d) break;  // unbounded direction; cannot happen in phase I
    Rational piv = t[leave][enter];
    for (auto& v : t[leave]) v /= piv;
    for (size_t r = 0; r < d; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      Rational f = t[r][enter];
      for (size_t j = 0; j <= cols; ++j) t[r][j] -= f * t[leave][j];
    }
    Rational f = cost[enter];
    for (size_t j = 0; j <= cols; ++j) cost[j] -= f * t[leave][j];
    basis[leave] = enter;
  }
  return cost[cols] == 0;
}

bool farkas_decide_at(const LinearConeFormula& f, const Rational& x0, const Rational& mu0) {
  const size_t dim = static_cast<size_t>(f.dimension());
  std::vector<std::vector<Rational>> gens;
  for (const auto& h : f.hypotheses) {
    if (!h.homogeneous()) throw std::invalid_argument("farkas_decide_at: hypotheses must be homogeneous");
    auto v = h.eval(x0, mu0);
    v.resize(dim);
    gens.push_back(std::move(v));
  }
  if (!f.conclusion.homogeneous()) throw std::invalid_argument("farkas_decide_at: conclusion must be homogeneous");
  auto target = f.conclusion.eval(x0, mu0);
  target.resize(dim);
  return cone_contains(gens, target);
}

}  // namespace pfpos
