#include "pezzo/registry.hpp"
#include "pezzo/strata.hpp"

#include <doctest.h>

using namespace pezzo;

namespace {

Rat half(long long n) { return Rat(Int(n), Int(2)); }

QuotientSingularity Q(std::int64_t r, std::int64_t a, std::int64_t b) { return normalize(r, a, b); }

Basket basket(std::vector<std::pair<QuotientSingularity, std::int64_t>> pts) {
  Basket b;
  for (auto& [q, m] : pts) b.add(q, m);
  return b;
}

const Registry& shipped() {
  static const Registry reg = Registry::load(default_registry_path());
  return reg;
}

}  // namespace

TEST_CASE("baskets of named families") {
  auto pf11 = build_family(make_grass({half(1), half(1), half(1), half(3), half(3)}), {}, {2, 2, 2, 2});
  auto b = strata_basket(pf11);
  REQUIRE(b.ok());
  CHECK(b.basket == basket({{Q(3, 1, 1), 1}}));

  auto pf14 = build_family(make_grass({half(1), half(3), half(5), half(5), half(7)}), {}, {4, 4, 6, 6});
  auto c = strata_basket(pf14);
  REQUIRE(c.ok());
  CHECK(c.basket == basket({{Q(5, 2, 4), 1}, {Q(5, 1, 1), 1}, {Q(3, 2, 2), 3}}));

  auto p13 = build_family(make_segre({Rat(0), Rat(1), Rat(2)}, {Rat(1), Rat(2), Rat(3)}), {}, {4, 4});
  auto d = strata_basket(p13);
  REQUIRE(d.ok());
  CHECK(d.basket == basket({{Q(3, 1, 1), 3}, {Q(5, 1, 1), 1}}));
}

TEST_CASE("basket_verify against the registry") {
  const auto& pf12 = shipped().find("Pf12");
  Params r3{{"r", Rat(3)}};
  auto f = pf12.instantiate(r3);
  auto ok = basket_verify(f, pf12.basket_at(r3));
  CHECK(ok.match);
  CHECK(ok.problems.empty());
  Basket wrong = pf12.basket_at(r3);
  wrong.add(Q(7, 1, 3));
  auto bad = basket_verify(f, wrong);
  CHECK_FALSE(bad.match);
  CHECK_FALSE(bad.problems.empty());
}

TEST_CASE("a surface containing a curve of orbifold points is not wellformed") {
  auto f = build_family(make_grass({half(1), half(1), half(1), half(1), half(3)}), {}, {1, 1, 2, 2});
  REQUIRE(f.ambient == WeightedSpace({1, 1, 1, 1, 2, 2}));
  auto b = strata_basket(f);
  CHECK(b.status == BasketStatus::NotWellformed);
  CHECK(b.message.find("weight 2") != std::string::npos);
}

TEST_CASE("the Pf23 control shows a tangent deficit at the weight-3 locus") {
  const auto& x = shipped().find("Pf23x");
  Params r7{{"r", Rat(7)}};
  auto f = x.instantiate(r7);
  CHECK(f.ambient == WeightedSpace({1, 3, 7, 8, 9, 10}));
  auto b = strata_basket(f);
  REQUIRE(b.ok());
  CHECK(b.any_tangent_deficit());
  bool at_three = false;
  for (const auto& p : b.points)
    if (p.points > 0 && p.isotropy == 3 && p.tangent_deficit()) {
      at_three = true;
      CHECK(p.tangent_rank == 2);
      CHECK(p.codim == 3);
    }
  CHECK(at_three);
  CHECK(b.basket == x.basket_at(r7));
}

TEST_CASE("strata results do not depend on the seed") {
  auto f = shipped().find("Pf21").instantiate({{"r", Rat(6)}});
  StrataOptions a, c;
  c.seed = 12345;
  CHECK(strata_basket(f, a).basket == strata_basket(f, c).basket);
}

TEST_CASE("Fletcher cross-check on two-variable strata") {
  auto f = shipped().find("T3-1").instantiate({});
  auto b = strata_basket(f);
  REQUIRE(b.ok());
  for (const auto& p : b.points)
    if (p.fletcher) CHECK(p.fletcher_agrees);
}
