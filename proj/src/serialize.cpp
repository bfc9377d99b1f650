#include "pfpos/serialize.hpp"

namespace pfpos {

nlohmann::json to_json(const UniPoly& p) {
  std::vector<std::string> coeffs;
  for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
  return coeffs;
}

nlohmann::json to_json(const RealAlgebraic& a) {
  if (a.is_rational()) return {{"rational", a.rational_value().get_str()}};
  return {{"polynomial", to_json(a.defining())}, {"interval", {a.lo().get_str(), a.hi().get_str()}}, {"approx", a.hi().get_d()}};
}

}  // namespace pfpos
