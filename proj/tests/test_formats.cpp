#include "pezzo/error.hpp"
#include "pezzo/formats.hpp"
#include "pezzo/hilbert.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <numeric>

using namespace pezzo;

namespace {

Rat half(long long n) { return Rat(Int(n), Int(2)); }

FamilyDescriptor pf11(long long r) {
  return build_family(make_grass({half(1), half(1), half(1), half(2 * r - 1), half(2 * r - 1)}), {},
                      {r, r, r, r});
}

Int ambient_sum(const FamilyDescriptor& f) {
  return Int(std::accumulate(f.ambient.weights.begin(), f.ambient.weights.end(), std::int64_t{0}));
}

}  // namespace

TEST_CASE("families from Grassmannian data") {
  auto f = pf11(2);
  CHECK(f.ambient == WeightedSpace({1, 1, 1, 2, 2, 3}));
  CHECK(f.fano_index == 1);
  CHECK(f.canonical_degree == -1);
  CHECK(f.equation_degrees == std::vector<std::int64_t>{3, 3, 4, 4, 4});
  CHECK(f.codimension() == 3);

  auto pf24 = build_family(make_grass({half(5), half(7), half(7), half(9), half(9)}), {3}, {8, 8, 9, 7, 6});
  CHECK(pf24.ambient == WeightedSpace({3, 6, 7, 7, 8, 8}));
  CHECK(pf24.fano_index == 2);
}

TEST_CASE("Pfaffian degrees are d - w_i") {
  auto f = build_family(make_grass({Rat(0), Rat(1), Rat(1), Rat(2), Rat(3)}), {}, {2, 3, 4, 4});
  CHECK(f.equation_degrees == std::vector<std::int64_t>{4, 5, 6, 6, 7});
  CHECK(f.ambient == WeightedSpace({1, 1, 2, 3, 3, 5}));
  CHECK(f.fano_index == 1);
}

TEST_CASE("families from Segre data") {
  auto f = build_family(make_segre({Rat(0), Rat(0), Rat(1)}, {Rat(1), Rat(1), Rat(2)}), {}, {2, 2});
  CHECK(f.ambient == WeightedSpace({1, 1, 1, 1, 2, 2, 3}));
  CHECK(f.fano_index == 1);
  CHECK(f.codimension() == 4);
  CHECK(f.equation_degrees.size() == 9);
}

TEST_CASE("build_family rejects bad input") {
  auto w = make_grass({Rat(0), Rat(1), Rat(1), Rat(2), Rat(3)});
  auto code = [&](std::vector<std::int64_t> cones, std::vector<std::int64_t> sections) {
    try {
      build_family(w, std::move(cones), std::move(sections));
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::UnknownEntry;
  };
  CHECK(code({}, {2, 3, 4, 6}) == ErrorKind::NotQuasilinear);
  CHECK(code({}, {2, 3}) == ErrorKind::WrongDimension);
  CHECK(code({}, {3, 4, 4, 5}) == ErrorKind::NonFano);
  CHECK_THROWS_AS(make_grass({Rat(0), Rat(0), Rat(1), Rat(1), Rat(1)}), Error);
  CHECK_THROWS_AS(make_grass({half(1), Rat(1), Rat(1), Rat(1), Rat(1)}), Error);
  CHECK_THROWS_AS(make_segre({Rat(0), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(1)}), Error);
}

TEST_CASE("weight matrices render like the model tables") {
  CHECK(syzygy_matrix(pf11(2).format).render() == "1 1 2 2 / 1 2 2 / 2 2 / 3");
  auto p12 = make_segre({Rat(0), Rat(1), Rat(2)}, {Rat(1), Rat(3), Rat(4)});
  CHECK(syzygy_matrix(p12).render() == "1 2 3 / 3 4 5 / 4 5 6");
  auto sym = syzygy_matrix(make_segre({Rat(1), Rat(2), Rat(4)}, {Rat(1), Rat(2), Rat(4)}));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(sym.entries[i][j] == sym.entries[j][i]);
  auto g = syzygy_matrix(pf11(3).format);
  for (int i = 0; i < 5; ++i) CHECK(g.entries[i][i] == 0);
}

TEST_CASE("closed-form degrees") {
  CHECK(deg_grass(std::get<GrassWeights>(pf11(2).format)) == Rat(Int(7), Int(48)));
  CHECK(deg_grass(make_grass({Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)})) == Rat(Int(5), Int(128)));  // 5 / 2^7
  CHECK(deg_segre(make_segre({Rat(1), Rat(1), Rat(1)}, {Rat(1), Rat(1), Rat(1)})) == Rat(Int(3), Int(16)));  // 6 / 2^5
}

TEST_CASE("closed-form degrees agree with the series limit and the derivative oracle") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    auto g = oracle::random_grass(rng, 6);
    auto hs = format_series(g);
    CHECK(deg_grass(std::get<GrassWeights>(g)) == degree_limit(hs, 6));
    CHECK(oracle::degree(hs, 6) == degree_limit(hs, 6));
    auto s = oracle::random_segre(rng, 6);
    auto ht = format_series(s);
    CHECK(deg_segre(std::get<SegreWeights>(s)) == degree_limit(ht, 4));
    CHECK(oracle::degree(ht, 4) == degree_limit(ht, 4));
  }
}

TEST_CASE("anticanonical degree of named families") {
  CHECK(anticanonical_degree(pf11(2)) == Rat(Int(7), Int(3)));
  auto pf21 = build_family(make_grass({Rat(0), Rat(1), Rat(1), Rat(2), Rat(5)}), {}, {2, 3, 5, 6});
  CHECK(pf21.fano_index == 2);
  CHECK(anticanonical_degree(pf21) == Rat(Int(22), Int(7)));
  auto p21 = build_family(make_segre({Rat(0), Rat(1), Rat(5)}, {Rat(1), Rat(2), Rat(6)}), {}, {2, 11});
  CHECK(p21.fano_index == 2);
  CHECK(anticanonical_degree(p21) == Rat(Int(20), Int(21)));
}

TEST_CASE("complete intersections: -K^2 = I^2 * prod(sections) * deg") {
  for (long long r = 2; r <= 8; ++r) {
    auto f = pf11(r);
    Rat prod(1);
    for (auto s : f.sections) prod = prod * Rat(static_cast<long long>(s));
    Rat I(static_cast<long long>(f.fano_index));
    CHECK(anticanonical_degree(f) == I * I * prod * deg_grass(std::get<GrassWeights>(f.format)));
  }
}

TEST_CASE("adjunction: I = sum of ambient weights - q") {
  std::vector<FamilyDescriptor> fs{pf11(2), pf11(5),
                                   build_family(make_grass({Rat(0), Rat(1), Rat(1), Rat(2), Rat(3)}), {}, {2, 3, 4, 4}),
                                   build_family(make_segre({Rat(0), Rat(0), Rat(1)}, {Rat(1), Rat(1), Rat(2)}), {},
                                                {2, 2})};
  for (const auto& f : fs) {
    CHECK(ambient_sum(f) - Int(adjunction_number(f.hilbert)) == Int(f.fano_index));
    CHECK(gorenstein_symmetry(f.hilbert) == (f.codimension() % 2 ? -1 : 1));
  }
}

TEST_CASE("h0(-K) and the toric flag") {
  CHECK(anticanonical_sections(pf11(2)) == 3);
  CHECK_FALSE(toric_obstruction(pf11(2)));
  auto pf14 = build_family(make_grass({half(1), half(3), half(5), half(5), half(7)}), {}, {4, 4, 6, 6});
  CHECK(pf14.fano_index == 1);
  CHECK(toric_obstruction(pf14));
  auto p14 = build_family(make_segre({Rat(0), Rat(1), Rat(4)}, {Rat(2), Rat(5), Rat(6)}), {5}, {6, 6, 10});
  CHECK(p14.fano_index == 1);
  CHECK(toric_obstruction(p14));
  auto pf21 = build_family(make_grass({Rat(0), Rat(1), Rat(1), Rat(2), Rat(5)}), {}, {2, 3, 5, 6});
  CHECK(first_plurigenus(pf21) == 2);
  CHECK(anticanonical_sections(pf21) == 4);
}
