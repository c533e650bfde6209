#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pezzo {

struct WeightedSpace {
  std::vector<std::int64_t> weights;  // sorted ascending, all >= 1

  WeightedSpace() = default;
  explicit WeightedSpace(std::vector<std::int64_t> w);
  std::size_t size() const { return weights.size(); }
  std::string str() const;  // "P(1,1,2,3,3,5)"
  // Compact exponent form, "P(1^2,2,3^2,5)".
  std::string compact() const;
  friend bool operator==(const WeightedSpace&, const WeightedSpace&) = default;
};

struct Stratum {
  std::int64_t k = 0;
  std::vector<int> indices;  // positions i with k | a_i
};

bool is_wellformed_space(const WeightedSpace& ws);

// One entry per k >= 2 dividing some weight, k descending.
std::vector<Stratum> strata(const WeightedSpace& ws);

struct FletcherCount {
  bool on_p0 = false;
  bool on_p1 = false;
  std::int64_t interior = 0;
  std::int64_t total() const { return interior + (on_p0 ? 1 : 0) + (on_p1 ? 1 : 0); }
};

// Points of a general degree-d curve section of P(a0, a1).
FletcherCount fletcher_count(std::int64_t a0, std::int64_t a1, std::int64_t d);

}  // namespace pezzo
