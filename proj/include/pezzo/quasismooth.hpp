#pragma once

// Quasismoothness by the Jacobian criterion on the affine cone: the locus
// where the Jacobian drops rank is stable under the weighted C* action, so
// it is supported at the vertex exactly when its ideal has dimension <= 0.

#include "pezzo/equations.hpp"
#include "pezzo/formats.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pezzo {

enum class Verdict { Quasismooth, NotQuasismooth, Inconclusive };
const char* to_string(Verdict v);

struct TrialResult {
  std::uint64_t seed = 0;
  int dimension = -2;          // -2 when the trial did not finish
  bool early_exit = false;     // pure powers of every variable were reached
  bool origin_supported = false;
  double seconds = 0;
  std::size_t generators = 0;
  std::size_t basis_size = 0;
  std::string error;
};

struct QsVerdict {
  Verdict verdict = Verdict::Inconclusive;
  std::vector<TrialResult> trials;
  std::uint32_t prime = 0;
  bool rational = false;
  std::uint64_t master_seed = 0;
};

struct QsOptions {
  std::uint32_t prime = 32003;
  int trials = 3;
  int negative_trials = 5;  // minimum before declaring NotQuasismooth
  std::uint64_t seed = 1;
  bool rational = false;
  bool parallel = true;
  CoefficientPool pool = CoefficientPool::Uniform;
  alg::GroebnerOptions budget{};
};

// One trial: a random member, its Jacobian subrank ideal, and the dimension.
TrialResult quasismooth_trial(const FamilyDescriptor& f, const QsOptions& opt, std::uint64_t seed);

QsVerdict quasismooth_check(const FamilyDescriptor& f, const QsOptions& opt = {});

// Trial seeds derived from the master seed.
std::uint64_t trial_seed(std::uint64_t master, int index);

}  // namespace pezzo
