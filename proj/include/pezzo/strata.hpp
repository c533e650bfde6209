#pragma once

// Orbifold strata of a family: wellformedness, point counts and local types
// of the points with nontrivial isotropy, computed on one random member.

#include "pezzo/formats.hpp"
#include "pezzo/singularity.hpp"
#include "pezzo/wps.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pezzo {

struct StrataOptions {
  std::uint32_t prime = 32003;
  std::uint64_t seed = 7;
};

enum class BasketStatus { Ok, NotWellformed, NotIsolated, Undetermined };
const char* to_string(BasketStatus s);

struct StratumCheck {
  std::int64_t k = 0;
  std::vector<int> vars;
  int projective_dimension = -1;  // of X restricted to the stratum
};

struct CharacterRank {
  std::int64_t chi = 0;
  int rows = 0;
  int cols = 0;
  int rank = 0;
};

struct PointReport {
  std::vector<int> support;            // member variables with x_i != 0
  std::vector<int> support_weights;
  std::int64_t isotropy = 0;
  std::int64_t points = 0;
  std::vector<CharacterRank> ranks;
  std::vector<std::int64_t> local_weights;  // characters of the tangent plane
  std::optional<QuotientSingularity> type;
  // patch variable and the tangent monomials x_p^m x_k found on it; the
  // rank counts only those independent at the points themselves
  std::string patch;
  std::vector<std::string> tangent_vars;
  int tangent_rank = 0;
  std::vector<std::pair<std::string, int>> patch_ranks;  // every variable of the support as patch
  int codim = 0;
  bool tangent_deficit() const { return tangent_rank < codim; }
  std::optional<FletcherCount> fletcher;
  bool fletcher_agrees = true;
  std::string note;
};

struct BasketResult {
  BasketStatus status = BasketStatus::Undetermined;
  Basket basket;
  std::vector<StratumCheck> strata;
  std::vector<PointReport> points;
  std::vector<std::string> var_names;
  std::string message;

  bool ok() const { return status == BasketStatus::Ok; }
  bool any_tangent_deficit() const;
  std::string describe() const;
};

BasketResult strata_basket(const FamilyDescriptor& f, const StrataOptions& opt = {});

struct BasketCheck {
  bool match = false;
  Basket computed;
  Basket claimed;
  BasketStatus status = BasketStatus::Undetermined;
  std::vector<std::string> problems;
};

BasketCheck basket_verify(const FamilyDescriptor& f, const Basket& claimed, const StrataOptions& opt = {});

}  // namespace pezzo
