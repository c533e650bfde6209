#include "pezzo/registry.hpp"
#include "pezzo/search.hpp"

#include <doctest.h>

#include <set>

using namespace pezzo;

namespace {

const Registry& shipped() {
  static const Registry reg = Registry::load(default_registry_path());
  return reg;
}

bool has_tag(const SearchResult& r, const std::string& tag) {
  for (const auto& c : r.candidates)
    if (c.tag == tag) return true;
  return false;
}

void no_collisions(const SearchResult& r) {
  std::set<DedupKey> keys;
  for (const auto& c : r.candidates) CHECK(keys.insert(dedup_key(c.family)).second);
}

}  // namespace

TEST_CASE("format tuples") {
  auto g = format_tuples(FormatKind::Grass, 5);
  REQUIRE_FALSE(g.empty());
  for (const auto& f : g) {
    const auto& w = std::get<GrassWeights>(f).w;
    CHECK(Rat(2) * (w[0] + w[1] + w[2] + w[3] + w[4]) == Rat(5));
  }
  for (const auto& f : format_tuples(FormatKind::Segre, 8)) {
    const auto& s = std::get<SegreWeights>(f);
    CHECK(s.a[0] == Rat(0));
    CHECK(s.a[0] + s.a[1] + s.a[2] + s.b[0] + s.b[1] + s.b[2] == Rat(4));
  }
}

TEST_CASE("Grassmannian index 1 up to q = 24 contains the small known families") {
  SearchSpec spec;
  spec.kind = FormatKind::Grass;
  spec.index = 1;
  spec.q_max = 24;
  auto r = enumerate(spec, &shipped());
  for (const char* t : {"Pf11 r=2", "Pf11 r=3", "Pf12 r=3", "Pf12 r=5", "T3-1"}) {
    INFO(t);
    CHECK(has_tag(r, t));
  }
  no_collisions(r);
  for (const auto& c : r.candidates) {
    CHECK(c.rigid);
    CHECK(c.q <= 24);
    CHECK(c.family.fano_index == 1);
    CHECK(revalidate(c, spec));
  }
  CHECK(r.stats.rigid == r.candidates.size());
  CHECK(r.stats.distinct <= r.stats.strata_bound);

  auto s = enumerate_serial(spec, &shipped());
  REQUIRE(s.candidates.size() == r.candidates.size());
  for (std::size_t i = 0; i < s.candidates.size(); ++i) {
    CHECK(dedup_key(s.candidates[i].family) == dedup_key(r.candidates[i].family));
    CHECK(s.candidates[i].tag == r.candidates[i].tag);
  }
  CHECK(summary_json(s) == summary_json(r));
}

TEST_CASE("Segre index 1 up to q = 20 contains P11 r=2") {
  SearchSpec spec;
  spec.kind = FormatKind::Segre;
  spec.index = 1;
  spec.q_max = 20;
  auto r = enumerate(spec, &shipped());
  CHECK(has_tag(r, "P11 r=2"));
  no_collisions(r);
  for (const auto& c : r.candidates) CHECK(revalidate(c, spec));
  for (const auto& c : r.candidates)
    if (c.tag == "P11 r=2") CHECK(c.q == 10);

  // P(1,1,1,1,2,2,3) has adjunction number 10, one past this bound
  spec.q_max = 9;
  CHECK_FALSE(has_tag(enumerate(spec, &shipped()), "P11 r=2"));
}

TEST_CASE("swapping the two Segre factors gives the same key") {
  auto ab = build_family(make_segre({Rat(0), Rat(1), Rat(2)}, {Rat(1), Rat(2), Rat(3)}), {}, {4, 4});
  auto ba = build_family(make_segre({Rat(1), Rat(2), Rat(3)}, {Rat(0), Rat(1), Rat(2)}), {}, {4, 4});
  CHECK(dedup_key(ab) == dedup_key(ba));
}

TEST_CASE("registry matching") {
  const auto& reg = shipped();
  CandidateReport c;
  c.family = reg.find("Pf21").instantiate({{"r", Rat(6)}});
  CHECK(match_registry(c, reg) == "Pf21 r=6");
  CHECK(c.model_match);
  CandidateReport t;
  t.family = reg.find("T3-1").instantiate({});
  CHECK(match_registry(t, reg) == "T3-1");
  CHECK_FALSE(t.model_match);
  CandidateReport n;
  n.family = build_family(make_grass({Rat(Int(1), Int(2)), Rat(Int(1), Int(2)), Rat(Int(1), Int(2)),
                                      Rat(Int(1), Int(2)), Rat(Int(1), Int(2))}),
                          {}, {1, 1, 1, 1});
  CHECK(match_registry(n, reg) == "new");
}

TEST_CASE("candidate JSON and summary") {
  SearchSpec spec;
  spec.q_max = 12;
  auto r = enumerate(spec, &shipped());
  REQUIRE_FALSE(r.candidates.empty());
  auto j = r.candidates.front().to_json();
  for (const char* k : {"ambient", "q", "minus_k2", "basket", "tag"}) CHECK(j.contains(k));
  auto s = summary_json(r);
  CHECK(s.at("X_rc") == r.stats.rigid);
  CHECK(s.contains("reference"));
  CHECK_FALSE(s.contains("diff"));
  CHECK(summary_text(r).rfind("wG-1 q<=12", 0) == 0);
  auto ref = summary_reference(FormatKind::Grass, 2);
  REQUIRE(ref);
  CHECK(ref->q_max == 52);
  CHECK(ref->candidates == 116);
  CHECK_FALSE(summary_reference(FormatKind::Grass, 3));
}
