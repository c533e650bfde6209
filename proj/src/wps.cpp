#include "pezzo/wps.hpp"
#include "pezzo/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace pezzo {

WeightedSpace::WeightedSpace(std::vector<std::int64_t> w) : weights(std::move(w)) {
  if (weights.empty()) throw Error(ErrorKind::InvalidWeights, "empty weight list");
  for (auto a : weights)
    if (a < 1) throw Error(ErrorKind::InvalidWeights, "weights must be positive");
  std::sort(weights.begin(), weights.end());
}

std::string WeightedSpace::str() const {
  std::ostringstream os;
  os << "P(";
  for (std::size_t i = 0; i < weights.size(); ++i) os << (i ? "," : "") << weights[i];
  os << ")";
  return os.str();
}

std::string WeightedSpace::compact() const {
  std::ostringstream os;
  os << "P(";
  for (std::size_t i = 0; i < weights.size();) {
    std::size_t j = i;
    while (j < weights.size() && weights[j] == weights[i]) ++j;
    if (i) os << ",";
    os << weights[i];
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  os << ")";
  return os.str();
}

bool is_wellformed_space(const WeightedSpace& ws) {
  const auto& w = ws.weights;
  for (std::size_t skip = 0; skip < w.size(); ++skip) {
    std::int64_t g = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (i != skip) g = std::gcd(g, w[i]);
    if (g != 1) return false;
  }
  return true;
}

std::vector<Stratum> strata(const WeightedSpace& ws) {
  std::set<std::int64_t, std::greater<>> ks;
  for (auto a : ws.weights)
    for (std::int64_t k = 2; k <= a; ++k)
      if (a % k == 0) ks.insert(k);
  std::vector<Stratum> out;
  for (auto k : ks) {
    Stratum s;
    s.k = k;
    for (std::size_t i = 0; i < ws.weights.size(); ++i)
      if (ws.weights[i] % k == 0) s.indices.push_back(static_cast<int>(i));
    out.push_back(std::move(s));
  }
  return out;
}

FletcherCount fletcher_count(std::int64_t a0, std::int64_t a1, std::int64_t d) {
  if (a0 < 1 || a1 < 1 || d < 1) throw Error(ErrorKind::InvalidWeights, "fletcher_count needs positive data");
  if (std::gcd(a0, a1) != 1) throw Error(ErrorKind::NotCoprime, "fletcher_count weights share a factor");
  // Every degree-d form is x^al y^be g(x^a1, y^a0) with al < a1, be < a0 and
  // g binary of degree k; its k roots are the torus points. The bare
  // floor(d / a0 a1) overcounts by one when al a0 + be a1 >= a0 a1.
  std::int64_t al = 0, be = 0;
  while ((al * a0 - d) % a1 != 0) ++al;
  while ((be * a1 - d) % a0 != 0) ++be;
  std::int64_t rest = d - al * a0 - be * a1;
  if (rest < 0) throw Error(ErrorKind::DegreeMismatch, "P(" + std::to_string(a0) + "," + std::to_string(a1) +
                                                           ") has no nonzero form of degree " + std::to_string(d));
  FletcherCount c;
  c.on_p0 = be != 0;
  c.on_p1 = al != 0;
  c.interior = rest / (a0 * a1);
  return c;
}

}  // namespace pezzo
