#pragma once

// Buchberger's algorithm with the Gebauer-Moeller criteria and the normal
// selection strategy on sugar degree. Homogeneous input is reduced in dense
// per-degree accumulators; everything else goes through an ordered map.

#include "pezzo/field.hpp"
#include "pezzo/poly.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <queue>
#include <unordered_map>
#include <vector>

namespace pezzo::alg {

struct GroebnerOptions {
  std::size_t max_basis = 100000;
  std::size_t max_reductions = 50000000;
  double max_seconds = 0;            // 0 disables the clock
  std::size_t max_dense = 3000000;   // largest per-degree monomial table
  bool reduce = true;                // interreduce the final basis
  // Called with each new leading monomial; returning true stops the run.
  std::function<bool(const Monomial&)> on_new_lead;
};

template <class F>
struct GroebnerBasis {
  std::vector<Poly<F>> polys;
  bool complete = false;
  bool stopped_early = false;
  std::size_t reductions = 0;
  std::size_t zero_reductions = 0;

  std::vector<Monomial> leading() const {
    std::vector<Monomial> out;
    for (const auto& p : polys) out.push_back(p.lead());
    return out;
  }
};

// Krull dimension of k[x_0..x_{n-1}] / <leading>: the largest set of
// variables containing the support of no leading monomial. -1 when a
// leading monomial is 1.
int krull_dimension(std::span<const Monomial> leading, int nvars);

// Monomials outside the leading-term ideal when finitely many; nullopt
// otherwise or when more than `cap` exist.
std::optional<std::vector<Monomial>> standard_monomials(std::span<const Monomial> leading,
                                                     std::span<const int> weights, std::size_t cap = 1000000);

// True iff every variable has a pure power among the leading monomials.
bool has_all_pure_powers(std::span<const Monomial> leading, int nvars);

template <class F>
class Buchberger {
public:
  using Elem = typename F::Elem;
  using P = Poly<F>;

  Buchberger(const Ring<F>& ring, GroebnerOptions opts) : R_(ring), opts_(std::move(opts)) {}

  GroebnerBasis<F> run(std::vector<P> gens) {
    start_ = std::chrono::steady_clock::now();
    homogeneous_ = true;
    for (auto& g : gens) {
      if (g.is_zero()) continue;
      if (!R_.is_homogeneous(g)) homogeneous_ = false;
      inputs_.push_back(std::move(g));
    }
    std::stable_sort(inputs_.begin(), inputs_.end(), [&](const P& a, const P& b) {
      if (sugar_of(a) != sugar_of(b)) return sugar_of(a) < sugar_of(b);
      return a.size() < b.size();
    });

    GroebnerBasis<F> out;
    std::size_t next_input = 0;
    bool stopped = false;
    while (!stopped) {
      std::optional<int> pair_idx = top_pair();
      bool take_input = next_input < inputs_.size() &&
                        (!pair_idx || sugar_of(inputs_[next_input]) <= pairs_[*pair_idx].sugar);
      if (!take_input && !pair_idx) break;
      P h;
      int sugar = 0;
      if (take_input) {
        h = std::move(inputs_[next_input]);
        sugar = sugar_of(h);
        ++next_input;
      } else {
        queue_.pop();
        Pair& pr = pairs_[*pair_idx];
        pr.alive = false;
        h = spoly(pr);
        sugar = pr.sugar;
      }
      check_budget();
      ++reductions_;
      P r = reduce_full(h);
      if (r.is_zero()) {
        ++zero_reductions_;
        continue;
      }
      r = R_.monic(r);
      if (homogeneous_) sugar = r.degree();
      else sugar = std::max(sugar, top_degree(r));
      insert(std::move(r), sugar);
      if (opts_.on_new_lead && opts_.on_new_lead(basis_.back().lead())) stopped = true;
      if (basis_.back().lead().is_one()) break;  // the unit ideal
    }

    out.stopped_early = stopped;
    out.complete = !stopped;
    out.reductions = reductions_;
    out.zero_reductions = zero_reductions_;
    std::vector<int> keep;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (active_[i]) keep.push_back(static_cast<int>(i));
    if (!basis_.empty() && basis_.back().lead().is_one()) {
      out.polys = {R_.constant(R_.field().one())};
      out.complete = true;
      out.stopped_early = false;
      return out;
    }
    if (out.complete && opts_.reduce) {
      out.polys = interreduce(keep);
    } else {
      for (int i : keep) out.polys.push_back(basis_[i]);
    }
    return out;
  }

  // Full normal form of f against an arbitrary list of polynomials.
  static P normal_form(const Ring<F>& R, const P& f, std::span<const P> basis) {
    const F& K = R.field();
    std::map<Monomial, Elem, MonoGreater> acc;
    for (const auto& t : f.terms) acc.emplace(t.m, t.c);
    std::vector<Term<F>> rem;
    while (!acc.empty()) {
      auto it = acc.begin();
      Monomial m = it->first;
      Elem c = it->second;
      acc.erase(it);
      const P* g = nullptr;
      for (const auto& b : basis)
        if (!b.is_zero() && divides(b.lead(), m)) {
          g = &b;
          break;
        }
      if (!g) {
        rem.push_back({m, c});
        continue;
      }
      Monomial u = mono_div(m, g->lead());
      Elem k = K.mul(c, K.inv(g->lead_coeff()));
      for (std::size_t s = 1; s < g->terms.size(); ++s) {
        Monomial mm = mono_mul(u, g->terms[s].m);
        Elem v = K.mul(k, g->terms[s].c);
        auto [jt, fresh] = acc.try_emplace(mm, K.neg(v));
        if (!fresh) {
          jt->second = K.sub(jt->second, v);
          if (K.is_zero(jt->second)) acc.erase(jt);
        }
      }
    }
    return P{std::move(rem)};
  }

private:
  struct Pair {
    int i, j;
    Monomial lcm;
    int sugar;
    bool alive;
  };

  struct QueueEntry {
    int sugar;
    Monomial lcm;
    int idx;
  };
  struct QueueCmp {
    // min-heap on (sugar, lcm)
    bool operator()(const QueueEntry& a, const QueueEntry& b) const {
      if (a.sugar != b.sugar) return a.sugar > b.sugar;
      int c = mono_cmp(a.lcm, b.lcm);
      if (c != 0) return c > 0;
      return a.idx > b.idx;
    }
  };

  struct DegreeTable {
    std::vector<Monomial> monos;
    std::unordered_map<Monomial, int, MonoHash> index;
    std::vector<int> reducer;
    std::vector<int> checked;
    std::vector<Elem> acc;
    std::vector<char> queued;
  };

  static int top_degree(const P& p) {
    int d = 0;
    for (const auto& t : p.terms) d = std::max(d, static_cast<int>(t.m.deg));
    return d;
  }
  int sugar_of(const P& p) const { return homogeneous_ ? p.degree() : top_degree(p); }

  void check_budget() {
    if (reductions_ >= opts_.max_reductions)
      throw Error(ErrorKind::ResourceBudget, "reduction budget exhausted");
    if (basis_.size() >= opts_.max_basis) throw Error(ErrorKind::ResourceBudget, "basis size budget exhausted");
    if (opts_.max_seconds > 0) {
      double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
      if (el > opts_.max_seconds) throw Error(ErrorKind::ResourceBudget, "time budget exhausted");
    }
  }

  std::optional<int> top_pair() {
    while (!queue_.empty()) {
      int idx = queue_.top().idx;
      if (pairs_[idx].alive) return idx;
      queue_.pop();
    }
    return std::nullopt;
  }

  P spoly(const Pair& pr) const {
    const P& f = basis_[pr.i];
    const P& g = basis_[pr.j];
    P a = R_.mul_term(f, mono_div(pr.lcm, f.lead()), R_.field().one());
    P b = R_.mul_term(g, mono_div(pr.lcm, g.lead()), R_.field().one());
    return R_.sub(a, b);
  }

  static Monomial mono_lcm(const Monomial& a, const Monomial& b, const std::vector<int>& w) {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) m.e[i] = std::max(a.e[i], b.e[i]);
    for (std::size_t i = 0; i < w.size(); ++i) m.deg += m.e[i] * w[i];
    return m;
  }

  // Gebauer-Moeller update for a new basis element.
  void insert(P h, int sugar) {
    const int hn = static_cast<int>(basis_.size());
    const Monomial lh = h.lead();
    basis_.push_back(std::move(h));
    active_.push_back(true);
    sugar_.push_back(sugar);

    struct Cand {
      int g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> cands;
    for (int g = 0; g < hn; ++g) {
      if (!active_[g]) continue;
      const Monomial& lg = basis_[g].lead();
      cands.push_back({g, mono_lcm(lh, lg, R_.weights()), coprime(lh, lg)});
    }
    std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
      if (a.lcm.deg != b.lcm.deg) return a.lcm.deg < b.lcm.deg;
      return mono_cmp(a.lcm, b.lcm) < 0;
    });
    // keep one pair per lcm not divisible by a smaller kept lcm
    std::vector<Cand> kept;
    for (std::size_t s = 0; s < cands.size();) {
      std::size_t e = s;
      bool any_coprime = false;
      while (e < cands.size() && cands[e].lcm == cands[s].lcm) {
        any_coprime = any_coprime || cands[e].coprime;
        ++e;
      }
      bool divisible = false;
      for (const auto& k : kept)
        if (divides(k.lcm, cands[s].lcm)) {
          divisible = true;
          break;
        }
      if (!divisible) {
        Cand rep = cands[s];
        rep.coprime = any_coprime;
        kept.push_back(rep);
      }
      s = e;
    }

    // chain criterion on the old pairs
    for (int idx : live_pairs_) {
      Pair& pr = pairs_[idx];
      if (!pr.alive) continue;
      if (!divides(lh, pr.lcm)) continue;
      const Monomial& li = basis_[pr.i].lead();
      const Monomial& lj = basis_[pr.j].lead();
      if (mono_lcm(li, lh, R_.weights()) != pr.lcm && mono_lcm(lj, lh, R_.weights()) != pr.lcm) pr.alive = false;
    }
    std::erase_if(live_pairs_, [&](int idx) { return !pairs_[idx].alive; });

    for (const auto& k : kept) {
      if (k.coprime) continue;
      int s_g = sugar_[k.g] + (k.lcm.deg - basis_[k.g].lead().deg);
      int s_h = sugar + (k.lcm.deg - lh.deg);
      int idx = static_cast<int>(pairs_.size());
      pairs_.push_back({k.g, hn, k.lcm, homogeneous_ ? k.lcm.deg : std::max(s_g, s_h), true});
      live_pairs_.push_back(idx);
      queue_.push({pairs_.back().sugar, k.lcm, idx});
    }

    for (int g = 0; g < hn; ++g)
      if (active_[g] && divides(lh, basis_[g].lead())) active_[g] = false;
  }

  P reduce_full(const P& f) {
    if (f.is_zero()) return f;
    if (homogeneous_) {
      DegreeTable* t = table(f.degree());
      if (t) return reduce_dense(f, *t);
    }
    return reduce_map(f);
  }

  DegreeTable* table(int d) {
    auto it = tables_.find(d);
    if (it != tables_.end()) return it->second.get();
    auto monos = R_.monomials_of_degree(d);
    if (monos.size() > opts_.max_dense) {
      tables_.emplace(d, nullptr);
      return nullptr;
    }
    auto t = std::make_unique<DegreeTable>();
    t->monos = std::move(monos);
    t->index.reserve(t->monos.size() * 2);
    for (std::size_t i = 0; i < t->monos.size(); ++i) t->index.emplace(t->monos[i], static_cast<int>(i));
    t->reducer.assign(t->monos.size(), -1);
    t->checked.assign(t->monos.size(), 0);
    t->acc.assign(t->monos.size(), R_.field().zero());
    t->queued.assign(t->monos.size(), 0);
    DegreeTable* raw = t.get();
    tables_.emplace(d, std::move(t));
    return raw;
  }

  int find_reducer(DegreeTable& t, int k) {
    if (t.reducer[k] >= 0) return t.reducer[k];
    const Monomial& m = t.monos[k];
    for (int g = t.checked[k]; g < static_cast<int>(basis_.size()); ++g)
      if (divides(basis_[g].lead(), m)) {
        t.reducer[k] = g;
        return g;
      }
    t.checked[k] = static_cast<int>(basis_.size());
    return -1;
  }

  P reduce_dense(const P& f, DegreeTable& t) {
    const F& K = R_.field();
    std::priority_queue<int, std::vector<int>, std::greater<int>> todo;
    auto touch = [&](int idx) {
      if (!t.queued[idx]) {
        t.queued[idx] = 1;
        todo.push(idx);
      }
    };
    for (const auto& term : f.terms) {
      int idx = t.index.at(term.m);
      t.acc[idx] = K.add(t.acc[idx], term.c);
      touch(idx);
    }
    std::vector<Term<F>> rem;
    while (!todo.empty()) {
      int k = todo.top();
      todo.pop();
      t.queued[k] = 0;
      Elem c = t.acc[k];
      t.acc[k] = K.zero();
      if (K.is_zero(c)) continue;
      int g = find_reducer(t, k);
      if (g < 0) {
        rem.push_back({t.monos[k], c});
        continue;
      }
      const P& b = basis_[g];
      Monomial u = mono_div(t.monos[k], b.lead());
      for (std::size_t s = 1; s < b.terms.size(); ++s) {
        int idx = t.index.at(mono_mul(u, b.terms[s].m));
        t.acc[idx] = K.sub(t.acc[idx], K.mul(c, b.terms[s].c));
        touch(idx);
      }
    }
    return P{std::move(rem)};
  }

  P reduce_map(const P& f) {
    return normal_form(R_, f, std::span<const P>(basis_));
  }

  std::vector<P> interreduce(const std::vector<int>& keep) {
    std::vector<P> min;
    for (int i : keep) min.push_back(basis_[i]);
    std::sort(min.begin(), min.end(), [](const P& a, const P& b) { return mono_cmp(a.lead(), b.lead()) < 0; });
    std::vector<P> out;
    for (std::size_t i = 0; i < min.size(); ++i) {
      std::vector<P> others;
      for (std::size_t j = 0; j < min.size(); ++j)
        if (j != i) others.push_back(min[j]);
      P tail{std::vector<Term<F>>(min[i].terms.begin() + 1, min[i].terms.end())};
      P nf = normal_form(R_, tail, others);
      P g;
      g.terms.push_back(min[i].terms.front());
      g = R_.add(g, nf);
      out.push_back(R_.monic(g));
    }
    return out;
  }

  const Ring<F>& R_;
  GroebnerOptions opts_;
  std::chrono::steady_clock::time_point start_;
  bool homogeneous_ = true;
  std::vector<P> inputs_;
  std::vector<P> basis_;
  std::vector<char> active_;
  std::vector<int> sugar_;
  std::vector<Pair> pairs_;
  std::vector<int> live_pairs_;
  std::priority_queue<QueueEntry, std::vector<QueueEntry>, QueueCmp> queue_;
  std::unordered_map<int, std::unique_ptr<DegreeTable>> tables_;
  std::size_t reductions_ = 0;
  std::size_t zero_reductions_ = 0;
};

template <class F>
GroebnerBasis<F> groebner(const Ring<F>& ring, std::vector<Poly<F>> gens, GroebnerOptions opts = {}) {
  Buchberger<F> b(ring, std::move(opts));
  return b.run(std::move(gens));
}

template <class F>
Poly<F> normal_form(const Ring<F>& ring, const Poly<F>& f, std::span<const Poly<F>> basis) {
  return Buchberger<F>::normal_form(ring, f, basis);
}

template <class F>
int dimension(const GroebnerBasis<F>& gb, int nvars) {
  auto lt = gb.leading();
  return krull_dimension(lt, nvars);
}

// Affine dimension of V(gens).
template <class F>
int ideal_dimension(const Ring<F>& ring, std::vector<Poly<F>> gens, GroebnerOptions opts = {}) {
  opts.reduce = false;
  auto gb = groebner(ring, std::move(gens), std::move(opts));
  return dimension(gb, ring.nvars());
}

extern template class Buchberger<PrimeField>;
extern template class Buchberger<RationalField>;

}  // namespace pezzo::alg
