#include "pezzo/quasismooth.hpp"

#include <chrono>

#include <omp.h>

namespace pezzo {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Quasismooth: return "Quasismooth";
    case Verdict::NotQuasismooth: return "NotQuasismooth";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::uint64_t trial_seed(std::uint64_t master, int index) {
  return splitmix64(master * 0x100000001B3ull + static_cast<std::uint64_t>(index));
}

namespace {

template <class F>
TrialResult run_trial(const FamilyDescriptor& f, const F& field, const QsOptions& opt, std::uint64_t seed) {
  TrialResult tr;
  tr.seed = seed;
  auto t0 = std::chrono::steady_clock::now();
  try {
    Member<F> mem = random_member(f, field, seed, opt.pool);
    auto gens = jacobian_subrank_ideal(mem.ring, mem.equations, f.codimension());
    tr.generators = gens.size();
    const int n = mem.ring.nvars();
    unsigned seen = 0;
    alg::GroebnerOptions go = opt.budget;
    go.reduce = false;
    go.on_new_lead = [&seen, n](const alg::Monomial& m) {
      unsigned s = alg::support_mask(m);
      if (std::popcount(s) == 1) seen |= s;
      return s == 0 || seen == (1u << n) - 1;
    };
    auto gb = alg::groebner(mem.ring, std::move(gens), go);
    tr.basis_size = gb.polys.size();
    auto lt = gb.leading();
    tr.early_exit = gb.stopped_early;
    tr.dimension = gb.stopped_early ? 0 : alg::krull_dimension(lt, n);
    tr.origin_supported = alg::has_all_pure_powers(lt, n);
  } catch (const Error& e) {
    tr.dimension = -2;
    tr.error = e.what();
  }
  tr.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return tr;
}

}  // namespace

TrialResult quasismooth_trial(const FamilyDescriptor& f, const QsOptions& opt, std::uint64_t seed) {
  if (opt.rational) return run_trial(f, alg::RationalField{}, opt, seed);
  return run_trial(f, alg::PrimeField(opt.prime), opt, seed);
}

QsVerdict quasismooth_check(const FamilyDescriptor& f, const QsOptions& opt) {
  QsVerdict v;
  v.prime = opt.rational ? 0 : opt.prime;
  v.rational = opt.rational;
  v.master_seed = opt.seed;

  auto run_batch = [&](int from, int to) {
    std::vector<TrialResult> out(static_cast<std::size_t>(to - from));
    if (opt.parallel) {
#pragma omp parallel for schedule(dynamic, 1)
      for (int i = from; i < to; ++i) out[i - from] = quasismooth_trial(f, opt, trial_seed(opt.seed, i));
    } else {
      for (int i = from; i < to; ++i) out[i - from] = quasismooth_trial(f, opt, trial_seed(opt.seed, i));
    }
    v.trials.insert(v.trials.end(), out.begin(), out.end());
  };

  const int trials = std::max(1, opt.trials);
  run_batch(0, trials);
  auto all = [&](auto pred) {
    for (const auto& t : v.trials)
      if (!pred(t)) return false;
    return true;
  };
  auto positive = [](const TrialResult& t) { return t.dimension >= 1; };
  // a negative verdict needs the larger trial count
  if (all(positive) && trials < opt.negative_trials) run_batch(trials, opt.negative_trials);

  if (all([](const TrialResult& t) { return t.dimension >= -1 && t.dimension <= 0; }))
    v.verdict = Verdict::Quasismooth;
  else if (all(positive))
    v.verdict = Verdict::NotQuasismooth;
  else
    v.verdict = Verdict::Inconclusive;
  return v;
}

}  // namespace pezzo
