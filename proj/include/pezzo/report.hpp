#pragma once

// Check records for verification runs and byte-stable table renderers.

#include "pezzo/quasismooth.hpp"
#include "pezzo/registry.hpp"
#include "pezzo/strata.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pezzo {

enum class CheckStatus { Pass, Fail, Inconclusive };
const char* to_string(CheckStatus s);

struct CheckRecord {
  std::string check;
  std::string expected;
  std::string actual;
  CheckStatus status = CheckStatus::Pass;
  double seconds = 0;
  std::vector<std::uint64_t> seeds;
  std::string note;

  nlohmann::json to_json() const;
};

struct VerifyOptions {
  bool quasismooth = true;  // the Gröbner sub-suite
  QsOptions qs{};
  StrataOptions strata{};
  // Pass when quasismoothness fails; for negative controls.
  bool expect_fail = false;
};

struct VerifyReport {
  std::string target;  // "Pf12 r=5"
  std::vector<CheckRecord> checks;

  CheckStatus overall() const;  // Fail beats Inconclusive beats Pass
  int exit_code() const;        // 0, 1, 2
  nlohmann::json to_json() const;
  std::string text() const;
};

VerifyReport verify_entry(const RegistryEntry& e, const Params& p, const VerifyOptions& opt = {});

// Everything cli info prints about one instance.
struct FamilyInfo {
  std::string label;
  FamilyDescriptor family;
  std::string syzygy;
  std::optional<Rat> minus_k2_closed;  // registry expression
  Rat minus_k2_pipeline;
  Rat minus_k2_formula;  // I^2 * format degree * prod sections / prod cones
  Int h0;                // coefficient of t^I
  Int first_plurigenus;  // coefficient of t
  Basket basket;         // registry basket
  bool toric_obstruction = false;

  nlohmann::json to_json() const;
  std::string text() const;
};

FamilyInfo family_info(const RegistryEntry& e, const Params& p);

// A rendered cell; `printed` carries the printed value when it disagrees.
struct TableCell {
  std::string value;
  std::optional<std::string> printed;
  bool mismatch = false;  // derived value disagrees with the stored (corrected) one
};

struct Table {
  int id = 0;
  std::vector<std::string> headers;
  std::vector<std::vector<TableCell>> rows;

  std::size_t flagged() const;
  std::size_t mismatches() const;
  std::string markdown() const;
  std::string csv() const;
  nlohmann::json to_json() const;
};

// Re-derives every cell. Parametric entries use their first `per_model`
// admissible parameters; InvalidWeights for an unknown table id.
Table build_table(const Registry& reg, int id, std::size_t per_model = 3, bool parallel = true);

}  // namespace pezzo
