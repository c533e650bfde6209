#include "pezzo/search.hpp"

#include "pezzo/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pezzo {

namespace {

std::int64_t sum(const std::vector<std::int64_t>& v) {
  return std::accumulate(v.begin(), v.end(), std::int64_t{0});
}

// Sorted W = 2w of one parity, sum q, smallest Plücker weight W1 + W2 >= 2.
void grass_tuples(std::int64_t q, std::vector<Format>& out) {
  std::array<std::int64_t, 5> W{};
  for (W[1] = 1; 2 + 3 * W[1] <= q; ++W[1])
    for (W[0] = 2 - W[1]; W[0] <= W[1]; ++W[0]) {
      if ((W[0] - W[1]) % 2 != 0) continue;
      std::int64_t rest = q - W[0] - W[1];
      for (W[2] = W[1]; 3 * W[2] <= rest; W[2] += 2)
        for (W[3] = W[2]; W[2] + 2 * W[3] <= rest; W[3] += 2) {
          W[4] = rest - W[2] - W[3];
          if (W[4] < W[3] || (W[4] - W[3]) % 2 != 0) continue;
          std::array<Rat, 5> w;
          for (int i = 0; i < 5; ++i) w[i] = Rat(Int(W[i]), Int(2));
          out.emplace_back(make_grass(w));
        }
    }
}

// a1 = 0 <= a2 <= a3, 1 <= b1 <= b2 <= b3, sum q/2.
void segre_tuples(std::int64_t q, std::vector<Format>& out) {
  if (q % 2 != 0) return;
  std::int64_t d = q / 2;
  for (std::int64_t a2 = 0; 2 * a2 + 3 <= d; ++a2)
    for (std::int64_t a3 = a2; a2 + a3 + 3 <= d; ++a3)
      for (std::int64_t b1 = 1; a2 + a3 + 3 * b1 <= d; ++b1)
        for (std::int64_t b2 = b1; a2 + a3 + b1 + 2 * b2 <= d; ++b2) {
          std::int64_t b3 = d - a2 - a3 - b1 - b2;
          if (b3 < b2) continue;
          out.emplace_back(make_segre({Rat(0), Rat(a2), Rat(a3)}, {Rat(b1), Rat(b2), Rat(b3)}));
        }
}

// Sub-multisets of `pool` with `count` elements and the given sum.
void section_choices(const std::vector<std::pair<std::int64_t, int>>& pool, std::size_t i, int count,
                     std::int64_t total, std::vector<std::int64_t>& cur,
                     std::vector<std::vector<std::int64_t>>& out) {
  if (count == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  if (i == pool.size() || total <= 0) return;
  auto [value, mult] = pool[i];
  for (int k = 0; k <= std::min(mult, count); ++k) {
    if (k * value > total) break;
    for (int j = 0; j < k; ++j) cur.push_back(value);
    section_choices(pool, i + 1, count - k, total - k * value, cur, out);
    for (int j = 0; j < k; ++j) cur.pop_back();
  }
}

// Degrees d >= 1 reachable as nonnegative combinations of `w`.
bool representable(std::int64_t d, const std::vector<std::int64_t>& w) {
  std::vector<char> ok(d + 1, 0);
  ok[0] = 1;
  for (std::int64_t t = 1; t <= d; ++t)
    for (auto a : w)
      if (a <= t && ok[t - a]) {
        ok[t] = 1;
        break;
      }
  return ok[d];
}

// Restricted to a stratum with m coordinates, only equations of representable
// degree survive; fewer than m - 1 of them leave a curve of X in the stratum.
bool strata_dimension_bound(const FamilyDescriptor& f) {
  for (const auto& st : strata(f.ambient)) {
    std::vector<std::int64_t> w;
    for (int i : st.indices) w.push_back(f.ambient.weights[i]);
    if (w.size() < 2) continue;
    std::size_t live = 0;
    for (auto d : f.equation_degrees)
      if (representable(d, w)) ++live;
    if (live + 1 < w.size()) return false;
  }
  return true;
}

// A coordinate point of weight >= 2 that lies on X for degree reasons needs
// codim independent tangent monomials x_i^m x_k; count the rows and columns
// that can carry one.
bool coordinate_points_bound(const FamilyDescriptor& f) {
  const auto& w = f.ambient.weights;
  const std::size_t codim = static_cast<std::size_t>(f.codimension());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const std::int64_t a = w[i];
    if (a < 2) continue;
    bool avoided = false;
    for (auto d : f.equation_degrees)
      if (d % a == 0) avoided = true;
    if (avoided) continue;
    std::size_t rows = 0;
    std::vector<char> col(w.size(), 0);
    for (auto d : f.equation_degrees) {
      bool any = false;
      for (std::size_t k = 0; k < w.size(); ++k)
        if (k != i && d - w[k] >= a && (d - w[k]) % a == 0) {
          any = true;
          col[k] = 1;
        }
      if (any) ++rows;
    }
    std::size_t cols = std::count(col.begin(), col.end(), 1);
    if (std::min(rows, cols) < codim) return false;
  }
  return true;
}

struct Pending {
  FamilyDescriptor family;
  std::int64_t q;
  Rat minus_k2;
  DedupKey key;
  std::string format;
};

struct TupleCounts {
  std::size_t families = 0, wellformed = 0, positive = 0, bounded = 0;
};

// Cone choices, sections and the cheap filters for one format tuple.
std::vector<Pending> expand_tuple(const Format& fmt, const SearchSpec& spec, TupleCounts& counts) {
  std::vector<Pending> out;
  const bool grass = kind_of(fmt) == FormatKind::Grass;
  const std::vector<std::int64_t> emb = embedding_weights(fmt);
  const std::int64_t q = grass ? sum(emb) / 2 : 2 * sum(emb) / 3;  // q = 2d

  std::vector<std::vector<std::int64_t>> cone_sets{{}};
  // Cone weights stay at most q_max; sets are sorted to avoid repeats.
  for (int n = 1; n <= spec.max_cones; ++n) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& cs : cone_sets) {
      if (static_cast<int>(cs.size()) != n - 1) continue;
      for (std::int64_t c = cs.empty() ? 1 : cs.back(); c <= spec.q_max; ++c) {
        auto t = cs;
        t.push_back(c);
        next.push_back(std::move(t));
      }
    }
    cone_sets.insert(cone_sets.end(), next.begin(), next.end());
  }

  std::string fstr = format_str(fmt);
  for (const auto& cones : cone_sets) {
    std::vector<std::int64_t> avail = emb;
    for (auto c : cones) avail.push_back(c);
    std::map<std::int64_t, int> mult;
    for (auto v : avail) ++mult[v];
    for (auto c : cones) mult.erase(c);  // a cut of a cone weight undoes the cone
    std::vector<std::pair<std::int64_t, int>> pool(mult.begin(), mult.end());

    int count = (grass ? 4 : 2) + static_cast<int>(cones.size());
    std::int64_t target = (grass ? q : q / 2) + sum(cones) - spec.index;
    std::vector<std::vector<std::int64_t>> choices;
    std::vector<std::int64_t> cur;
    section_choices(pool, 0, count, target, cur, choices);

    for (auto& sections : choices) {
      FamilyDescriptor f;
      try {
        f = build_family(fmt, cones, sections);
      } catch (const Error&) {
        continue;
      }
      if (f.fano_index != spec.index) continue;
      ++counts.families;
      if (!is_wellformed_space(f.ambient)) continue;
      ++counts.wellformed;
      Rat k2;
      try {
        k2 = anticanonical_degree(f);
      } catch (const Error&) {
        continue;
      }
      ++counts.positive;
      if (!strata_dimension_bound(f) || !coordinate_points_bound(f)) continue;
      ++counts.bounded;
      DedupKey key = dedup_key(f);
      out.push_back(Pending{std::move(f), q, k2, std::move(key), fstr});
    }
  }
  return out;
}

bool rigid_basket(const Basket& b, std::int64_t index) {
  for (const auto& [pt, m] : b.points()) {
    (void)m;
    if (!pg_admissible(pt, index) || classify_tr(pt) != TRClass::R) return false;
  }
  return true;
}

bool admissible_basket(const Basket& b, std::int64_t index) {
  for (const auto& [pt, m] : b.points()) {
    (void)m;
    if (!pg_admissible(pt, index)) return false;
  }
  return true;
}

SearchResult run(const SearchSpec& spec, const Registry* reg, bool parallel) {
  if (spec.q_max < 1) throw Error(ErrorKind::InvalidWeights, "q_max must be at least 1");
  if (spec.index < 1) throw Error(ErrorKind::InvalidWeights, "index must be at least 1");
  SearchResult res;
  res.spec = spec;
  res.spec.parallel = parallel;

  std::vector<Format> tuples;
  for (std::int64_t q = std::max<std::int64_t>(spec.q_min, 1); q <= spec.q_max; ++q) {
    auto t = format_tuples(spec.kind, q);
    tuples.insert(tuples.end(), t.begin(), t.end());
  }
  res.stats.format_tuples = tuples.size();

  const long n = static_cast<long>(tuples.size());
  std::vector<std::vector<Pending>> parts(tuples.size());
  std::vector<TupleCounts> counts(tuples.size());
#pragma omp parallel for schedule(dynamic, 4) if (parallel)
  for (long i = 0; i < n; ++i) parts[i] = expand_tuple(tuples[i], spec, counts[i]);

  std::vector<Pending> all;
  for (long i = 0; i < n; ++i) {
    res.stats.families += counts[i].families;
    res.stats.wellformed_space += counts[i].wellformed;
    res.stats.positive += counts[i].positive;
    res.stats.strata_bound += counts[i].bounded;
    for (auto& p : parts[i]) all.push_back(std::move(p));
  }
  parts.clear();

  std::stable_sort(all.begin(), all.end(), [](const Pending& x, const Pending& y) {
    return std::tie(x.q, x.family.ambient.weights, x.family.equation_degrees, x.format) <
           std::tie(y.q, y.family.ambient.weights, y.family.equation_degrees, y.format);
  });
  std::vector<Pending> distinct;
  {
    std::vector<DedupKey> seen;
    for (auto& p : all) {
      auto it = std::lower_bound(seen.begin(), seen.end(), p.key);
      if (it != seen.end() && *it == p.key) continue;
      seen.insert(it, p.key);
      distinct.push_back(std::move(p));
    }
  }
  res.stats.distinct = distinct.size();

  const long m = static_cast<long>(distinct.size());
  std::vector<BasketResult> baskets(distinct.size());
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (long i = 0; i < m; ++i) baskets[i] = strata_basket(distinct[i].family, spec.strata);

  std::optional<RegistryMatcher> matcher;
  if (reg) matcher.emplace(*reg, spec.kind, spec.index, spec.q_max);

  for (long i = 0; i < m; ++i) {
    const auto& b = baskets[i];
    if (!b.ok()) {
      ++res.stats.rejected_basket;
      continue;
    }
    if (!admissible_basket(b.basket, spec.index)) continue;
    ++res.stats.candidates;
    if (!rigid_basket(b.basket, spec.index)) continue;
    ++res.stats.rigid;
    CandidateReport c;
    c.family = std::move(distinct[i].family);
    c.q = distinct[i].q;
    c.minus_k2 = distinct[i].minus_k2;
    c.basket = b.basket;
    c.rigid = true;
    if (matcher) matcher->tag(c);
    if (!c.model_match) ++res.stats.sporadic;
    res.candidates.push_back(std::move(c));
  }

  if (spec.qs_postpass) {
    QsOptions qo = spec.qs;
    qo.parallel = false;
    std::vector<long> idx;
    for (long i = 0; i < static_cast<long>(res.candidates.size()); ++i)
      if (!res.candidates[i].model_match) idx.push_back(i);
    const long k = static_cast<long>(idx.size());
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
    for (long j = 0; j < k; ++j) {
      auto& c = res.candidates[idx[j]];
      c.quasismooth = quasismooth_check(c.family, qo).verdict;
    }
    for (long i : idx)
      if (res.candidates[i].quasismooth == Verdict::Quasismooth) ++res.stats.sporadic_qs;
  }
  return res;
}

}  // namespace

std::vector<Format> format_tuples(FormatKind kind, std::int64_t q) {
  std::vector<Format> out;
  if (q < 1) return out;
  if (kind == FormatKind::Grass)
    grass_tuples(q, out);
  else
    segre_tuples(q, out);
  return out;
}

DedupKey dedup_key(const FamilyDescriptor& f) {
  return DedupKey{f.kind(), f.ambient.weights, f.equation_degrees, f.hilbert.str()};
}

nlohmann::json CandidateReport::to_json() const {
  nlohmann::json j;
  j["format"] = to_string(family.kind());
  j["weights"] = format_str(family.format);
  j["cones"] = family.cones;
  j["sections"] = family.sections;
  j["ambient"] = family.ambient.str();
  j["equation_degrees"] = family.equation_degrees;
  j["q"] = q;
  j["index"] = family.fano_index;
  j["minus_k2"] = minus_k2.str();
  j["basket"] = basket.str();
  j["rigid"] = rigid;
  j["tag"] = tag;
  if (!match_id.empty()) j["match"] = match_id;
  j["model"] = model_match;
  if (quasismooth) j["quasismooth"] = to_string(*quasismooth);
  return j;
}

RegistryMatcher::RegistryMatcher(const Registry& reg, FormatKind kind, std::int64_t index, std::int64_t q_max) {
  auto add = [&](const RegistryEntry& e, bool model) {
    if (e.format != kind || e.index != index) return;
    // per-parameter budget; the ambient sum grows with every parameter
    std::size_t budget = e.params().size() > 1 ? 40 : 300;
    std::vector<Params> points = e.parametric() ? e.first_admissible(budget) : std::vector<Params>{Params{}};
    for (const auto& p : points) {
      FamilyDescriptor f;
      try {
        f = e.instantiate(p);
      } catch (const Error&) {
        continue;
      }
      if (sum(f.ambient.weights) > q_max + index) continue;
      std::string tag = e.parametric() ? e.label(p) : e.id;
      // the control is not a model: it stays among the sporadic survivors
      if (e.negative_control) tag += " (control)";
      instances_.push_back(Instance{dedup_key(f), tag, e.id, model && !e.negative_control});
    }
  };
  for (const auto& e : reg.entries())
    if (e.parametric()) add(e, true);
  for (const auto& e : reg.entries())
    if (!e.parametric()) add(e, false);
}

void RegistryMatcher::tag(CandidateReport& c) const {
  DedupKey key = dedup_key(c.family);
  for (const auto& inst : instances_)
    if (inst.key == key) {
      c.tag = inst.tag;
      c.match_id = inst.id;
      c.model_match = inst.model;
      return;
    }
  c.tag = "new";
  c.match_id.clear();
  c.model_match = false;
}

SearchResult enumerate(const SearchSpec& spec, const Registry* reg) { return run(spec, reg, spec.parallel); }

SearchResult enumerate_serial(SearchSpec spec, const Registry* reg) { return run(spec, reg, false); }

std::string match_registry(CandidateReport& c, const Registry& reg) {
  std::int64_t bound = sum(c.family.ambient.weights) - c.family.fano_index;
  RegistryMatcher(reg, c.family.kind(), c.family.fano_index, bound).tag(c);
  return c.tag;
}

bool revalidate(const CandidateReport& c, const SearchSpec& spec) {
  FamilyDescriptor f;
  try {
    f = build_family(c.family.format, c.family.cones, c.family.sections);
  } catch (const Error&) {
    return false;
  }
  if (f.fano_index != spec.index || f.kind() != spec.kind) return false;
  if (!(f.ambient == c.family.ambient) || !is_wellformed_space(f.ambient)) return false;
  if (sum(f.ambient.weights) > spec.q_max + spec.index) return false;
  try {
    if (anticanonical_degree(f) != c.minus_k2) return false;
  } catch (const Error&) {
    return false;
  }
  auto b = strata_basket(f, spec.strata);
  return b.ok() && b.basket == c.basket && rigid_basket(b.basket, spec.index);
}

std::optional<SummaryReference> summary_reference(FormatKind kind, std::int64_t index) {
  if (kind == FormatKind::Grass && index == 1) return SummaryReference{60, 39, 39, 12, 10};
  if (kind == FormatKind::Grass && index == 2) return SummaryReference{52, 116, 46, 29, 6};
  if (kind == FormatKind::Segre && index == 1) return SummaryReference{80, 49, 49, 14, 7};
  if (kind == FormatKind::Segre && index == 2) return SummaryReference{68, 127, 44, 5, 0};
  return std::nullopt;
}

nlohmann::json summary_json(const SearchResult& r) {
  const auto& s = r.stats;
  nlohmann::json j;
  j["format"] = to_string(r.spec.kind);
  j["index"] = r.spec.index;
  j["q_max"] = r.spec.q_max;
  j["max_cones"] = r.spec.max_cones;
  j["stages"] = {{"format_tuples", s.format_tuples}, {"families", s.families},
                 {"wellformed_space", s.wellformed_space}, {"positive", s.positive}, {"strata_bound", s.strata_bound},
                 {"distinct", s.distinct}, {"rejected_basket", s.rejected_basket}};
  j["X_c"] = s.candidates;
  j["X_rc"] = s.rigid;
  j["X_src"] = s.sporadic;
  if (r.spec.qs_postpass)
    j["QS_X_src"] = s.sporadic_qs;
  else
    j["QS_X_src"] = nullptr;
  if (auto ref = summary_reference(r.spec.kind, r.spec.index)) {
    nlohmann::json rj = {{"q_max", ref->q_max}, {"X_c", ref->candidates}, {"X_rc", ref->rigid},
                         {"X_src", ref->sporadic}, {"QS_X_src", ref->sporadic_qs}};
    j["reference"] = rj;
    if (ref->q_max == r.spec.q_max) {
      auto diff = [](std::size_t a, std::int64_t b) { return static_cast<std::int64_t>(a) - b; };
      j["diff"] = {{"X_c", diff(s.candidates, ref->candidates)},
                   {"X_rc", diff(s.rigid, ref->rigid)},
                   {"X_src", diff(s.sporadic, ref->sporadic)}};
      if (r.spec.qs_postpass) j["diff"]["QS_X_src"] = diff(s.sporadic_qs, ref->sporadic_qs);
    }
  }
  return j;
}

std::string summary_text(const SearchResult& r) {
  const auto& s = r.stats;
  std::ostringstream os;
  const char* name = r.spec.kind == FormatKind::Grass ? "wG" : "wF";
  os << name << "-" << r.spec.index << " q<=" << r.spec.q_max << ": tuples " << s.format_tuples
     << ", families " << s.families << ", wellformed " << s.wellformed_space << ", -K^2>0 " << s.positive << ", strata bound " << s.strata_bound
     << ", distinct " << s.distinct << "\n";
  os << "  #X_c " << s.candidates << "  #X_rc " << s.rigid << "  #X_src " << s.sporadic << "  #QS-X_src ";
  if (r.spec.qs_postpass)
    os << s.sporadic_qs;
  else
    os << "-";
  os << "\n";
  if (auto ref = summary_reference(r.spec.kind, r.spec.index)) {
    os << "  reference q<=" << ref->q_max << ": " << ref->candidates << "/" << ref->rigid << "/"
       << ref->sporadic << "/" << ref->sporadic_qs;
    if (ref->q_max != r.spec.q_max) os << " (different bound, no diff)";
    os << "\n";
  }
  return os.str();
}

}  // namespace pezzo
