#pragma once

// Candidate families by adjunction number: every format weight tuple with
// sum of ambient weights q + I <= q_max + I, every choice of at most
// max_cones projective cones, and every quasilinear set of sections that
// brings the dimension down to 2.

#include "pezzo/formats.hpp"
#include "pezzo/quasismooth.hpp"
#include "pezzo/registry.hpp"
#include "pezzo/strata.hpp"

#include <json.hpp>

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace pezzo {

struct SearchSpec {
  FormatKind kind = FormatKind::Grass;
  std::int64_t index = 1;
  std::int64_t q_max = 20;
  std::int64_t q_min = 1;
  int max_cones = 1;
  bool parallel = true;
  StrataOptions strata{};
  // Quasismoothness of the sporadic survivors, run after the search.
  bool qs_postpass = false;
  QsOptions qs{};
};

struct DedupKey {
  FormatKind kind;
  std::vector<std::int64_t> ambient;
  std::vector<std::int64_t> equation_degrees;
  std::string hilbert;
  friend auto operator<=>(const DedupKey&, const DedupKey&) = default;
};

DedupKey dedup_key(const FamilyDescriptor& f);

struct CandidateReport {
  FamilyDescriptor family;
  std::int64_t q = 0;  // adjunction number
  Rat minus_k2;
  Basket basket;
  bool rigid = false;  // every basket point R and PG-admissible
  std::string tag = "new";  // "Pf12 r=3", "T3-1" or "new"
  std::string match_id;     // registry id when matched
  bool model_match = false;  // matched a parametric model (not a sporadic row)
  std::optional<Verdict> quasismooth;

  nlohmann::json to_json() const;
};

// Counts after each filter stage; the last four mirror the summary columns.
struct SearchStats {
  std::size_t format_tuples = 0;
  std::size_t families = 0;     // cones/sections choices that built
  std::size_t wellformed_space = 0;
  std::size_t positive = 0;     // -K^2 > 0
  std::size_t strata_bound = 0;  // no stratum forced to contain a curve of X
  std::size_t distinct = 0;     // after dedup
  std::size_t candidates = 0;   // basket determined, isolated, PG-admissible
  std::size_t rigid = 0;        // additionally every point R
  std::size_t sporadic = 0;     // rigid and not an instance of a parametric model
  std::size_t sporadic_qs = 0;  // sporadic and quasismooth (post-pass only)
  std::size_t rejected_basket = 0;
};

struct SearchResult {
  SearchSpec spec;
  std::vector<CandidateReport> candidates;  // rigid ones, sorted by (q, ambient)
  SearchStats stats;
};

// Matches families against registry instances: parametric models first,
// then sporadic rows.
class RegistryMatcher {
public:
  RegistryMatcher(const Registry& reg, FormatKind kind, std::int64_t index, std::int64_t q_max);
  // Fills tag, match_id, model_match.
  void tag(CandidateReport& c) const;

  struct Instance {
    DedupKey key;
    std::string tag;
    std::string id;
    bool model = false;
  };
  const std::vector<Instance>& instances() const { return instances_; }

private:
  std::vector<Instance> instances_;
};

SearchResult enumerate(const SearchSpec& spec, const Registry* reg = nullptr);
// Serial reference path, same output as the parallel one.
SearchResult enumerate_serial(SearchSpec spec, const Registry* reg = nullptr);

std::string match_registry(CandidateReport& c, const Registry& reg);

// Recomputes every hard filter from the family data alone.
bool revalidate(const CandidateReport& c, const SearchSpec& spec);

struct SummaryReference {
  std::int64_t q_max, candidates, rigid, sporadic, sporadic_qs;
};
std::optional<SummaryReference> summary_reference(FormatKind kind, std::int64_t index);

nlohmann::json summary_json(const SearchResult& r);
std::string summary_text(const SearchResult& r);

// Format weight tuples of adjunction number q: doubled Grass weights, or
// Segre (a, b) with a1 = 0.
std::vector<Format> format_tuples(FormatKind kind, std::int64_t q);

}  // namespace pezzo
