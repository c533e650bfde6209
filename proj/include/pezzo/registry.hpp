#pragma once

// The model and sporadic tables as data: parametric entries whose weights,
// sections and invariants are expressions in r (and y), with the printed
// value and any corrected value kept side by side.

#include "pezzo/expr.hpp"
#include "pezzo/formats.hpp"
#include "pezzo/singularity.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace pezzo {

// param = modulus*n + residue with param >= min.
struct Congruence {
  std::string param;
  std::int64_t modulus = 1;
  std::int64_t residue = 0;
  std::int64_t min = 1;

  bool holds(std::int64_t v) const;
  std::string str() const;  // "r=3n+1, r>=7"
  friend bool operator==(const Congruence&, const Congruence&) = default;
};

struct BasketTerm {
  ParamExpr r, a, b, mult;
};

// A table cell: the printed value, optionally superseded by a corrected one.
struct Cell {
  std::optional<ParamExpr> printed;
  std::optional<ParamExpr> corrected;
  std::string note;

  bool present() const { return printed || corrected; }
  const ParamExpr& value() const;  // corrected if present, else printed
  bool flagged() const { return corrected.has_value(); }
};

struct RegistryEntry {
  std::string id;
  int table = 0;  // 0: not in any table (the negative control)
  int row = 0;    // 1-based row for sporadic tables
  FormatKind format = FormatKind::Grass;
  std::vector<ParamExpr> weights;  // five for Grass; a1,a2,a3,b1,b2,b3 for Segre
  std::vector<ParamExpr> cones;
  std::vector<ParamExpr> sections;
  std::vector<ParamExpr> ambient;  // as printed, used as a self-check
  std::vector<Congruence> congruence;
  std::vector<BasketTerm> basket;
  std::vector<BasketTerm> basket_printed;  // printed basket when it differs from `basket`
  std::string basket_note;
  std::int64_t index = 1;
  Cell minus_k2;
  Cell h0;
  bool negative_control = false;
  std::string note;

  std::vector<std::string> params() const;  // from the congruences, sorted
  bool parametric() const { return !congruence.empty(); }
  bool admissible(const Params& p) const;
  // First n admissible parameter points, ordered by the sum of parameters then lexicographically.
  std::vector<Params> first_admissible(std::size_t n) const;

  Format format_at(const Params& p) const;
  FamilyDescriptor instantiate(const Params& p) const;  // InadmissibleParameter
  Basket basket_at(const Params& p) const;
  Basket printed_basket_at(const Params& p) const;
  bool basket_flagged() const { return !basket_printed.empty(); }
  std::vector<std::int64_t> ambient_at(const Params& p) const;
  std::string label(const Params& p) const;  // "Pf21 r=6"
};

class Registry {
public:
  static Registry load(const std::string& path);      // SchemaError, ValidationError
  static Registry from_json(const nlohmann::json& j);  // SchemaError, ValidationError
  nlohmann::json to_json() const;

  const std::vector<RegistryEntry>& entries() const { return entries_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  const RegistryEntry& find(const std::string& id) const;  // UnknownEntry
  const RegistryEntry* find_if_present(const std::string& id) const;
  std::vector<const RegistryEntry*> table(int t) const;

private:
  std::vector<RegistryEntry> entries_;
  std::vector<std::string> warnings_;
};

std::string default_registry_path();
std::string params_str(const Params& p);  // "r=6 y=7"

}  // namespace pezzo
