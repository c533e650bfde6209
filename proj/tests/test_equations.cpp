#include "pezzo/equations.hpp"
#include "pezzo/quasismooth.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace pezzo;
using alg::PrimeField;
using Fp = alg::Poly<PrimeField>;

namespace {

const PrimeField K(32003);

FamilyDescriptor pf12(long long r) {
  return build_family(make_grass({Rat(0), Rat(1), Rat(1), Rat(r - 1), Rat(r)}), {}, {r - 1, r, r + 1, r + 1});
}

FamilyDescriptor p11(long long r) {
  return build_family(make_segre({Rat(0), Rat(0), Rat(r - 1)}, {Rat(1), Rat(1), Rat(r)}), {}, {r, r});
}

// Jacobian of eqs at a point, as an integer matrix.
std::vector<std::vector<std::int64_t>> jacobian_at(const alg::Ring<PrimeField>& R, const std::vector<Fp>& eqs,
                                                   const std::vector<PrimeField::Elem>& pt) {
  auto J = jacobian(R, eqs);
  std::vector<std::vector<std::int64_t>> out(J.size());
  for (std::size_t i = 0; i < J.size(); ++i)
    for (const auto& e : J[i]) out[i].push_back(R.evaluate(e, pt));
  return out;
}

}  // namespace

TEST_CASE("Pfaffian syzygy: M times the signed Pfaffian vector vanishes") {
  alg::Ring<PrimeField> R(K, std::vector<int>(10, 1));
  PolyMatrix<PrimeField> M(5, std::vector<Fp>(5));
  int v = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      M[i][j] = R.var(v++);
      M[j][i] = R.neg(M[i][j]);
    }
  auto pf = pfaffian_equations(R, M);
  REQUIRE(pf.size() == 5);
  for (int i = 0; i < 5; ++i) {
    Fp row;
    for (int j = 0; j < 5; ++j) {
      auto t = R.mul(M[i][j], pf[j]);
      row = j % 2 ? R.sub(row, t) : R.add(row, t);
    }
    CHECK(row.is_zero());
  }
}

TEST_CASE("rank probes at smooth points of the two cones") {
  std::mt19937_64 rng(17);
  // Gr(2,5): Plücker coordinates of a random 2x5 matrix
  alg::Ring<PrimeField> G(K, std::vector<int>(10, 1));
  PolyMatrix<PrimeField> M(5, std::vector<Fp>(5));
  int v = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      M[i][j] = G.var(v++);
      M[j][i] = G.neg(M[i][j]);
    }
  auto pf = pfaffian_equations(G, M);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<PrimeField::Elem> u(5), w(5), pt;
    for (int i = 0; i < 5; ++i) u[i] = K.random_nonzero(rng), w[i] = K.random_nonzero(rng);
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) pt.push_back(K.sub(K.mul(u[i], w[j]), K.mul(u[j], w[i])));
    for (const auto& f : pf) CHECK(G.evaluate(f, pt) == 0);
    CHECK(oracle::rank_mod_p(jacobian_at(G, pf, pt), 32003) == 3);
  }
  // P2 x P2: u_i v_j
  alg::Ring<PrimeField> S(K, std::vector<int>(9, 1));
  PolyMatrix<PrimeField> N(3, std::vector<Fp>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) N[i][j] = S.var(3 * i + j);
  auto mi = minor_equations(S, N);
  REQUIRE(mi.size() == 9);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<PrimeField::Elem> pt;
    std::vector<PrimeField::Elem> a(3), b(3);
    for (int i = 0; i < 3; ++i) a[i] = K.random_nonzero(rng), b[i] = K.random_nonzero(rng);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) pt.push_back(K.mul(a[i], b[j]));
    for (const auto& f : mi) CHECK(S.evaluate(f, pt) == 0);
    CHECK(oracle::rank_mod_p(jacobian_at(S, mi, pt), 32003) == 4);
  }
}

TEST_CASE("random members carry the family's degrees") {
  for (long long r : {3, 5}) {
    auto f = pf12(r);
    auto m = random_member(f, K, 99);
    REQUIRE(m.equations.size() == 5);
    std::vector<std::int64_t> degs;
    for (const auto& e : m.equations) {
      CHECK(m.ring.is_homogeneous(e));
      degs.push_back(e.degree());
    }
    std::sort(degs.begin(), degs.end());
    CHECK(degs == f.equation_degrees);
    CHECK_NOTHROW(check_entry_degrees(m.matrix, syzygy_matrix(f.format)));
    std::vector<std::int64_t> ws(m.ring.weights().begin(), m.ring.weights().end());
    CHECK(WeightedSpace(ws) == f.ambient);
  }
  auto g = p11(3);
  auto m = random_member(g, K, 5);
  std::vector<std::int64_t> degs;
  for (const auto& e : m.equations) degs.push_back(e.degree());
  std::sort(degs.begin(), degs.end());
  CHECK(degs == g.equation_degrees);
}

TEST_CASE("equations are C*-equivariant for the grading") {
  auto f = pf12(5);
  auto m = random_member(f, K, 3);
  std::mt19937_64 rng(2);
  const auto& w = m.ring.weights();
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<PrimeField::Elem> x(w.size()), lx(w.size());
    auto lambda = K.random_nonzero(rng);
    for (std::size_t i = 0; i < w.size(); ++i) {
      x[i] = K.random_nonzero(rng);
      PrimeField::Elem s = 1;
      for (int k = 0; k < w[i]; ++k) s = K.mul(s, lambda);
      lx[i] = K.mul(s, x[i]);
    }
    for (const auto& e : m.equations) {
      PrimeField::Elem ld = 1;
      for (int k = 0; k < e.degree(); ++k) ld = K.mul(ld, lambda);
      CHECK(m.ring.evaluate(e, lx) == K.mul(ld, m.ring.evaluate(e, x)));
    }
  }
}

TEST_CASE("quasismooth trials on small families") {
  QsOptions o;
  o.trials = 1;
  o.parallel = false;
  auto v = quasismooth_check(pf12(3), o);
  CHECK(v.verdict == Verdict::Quasismooth);
  REQUIRE(v.trials.size() == 1);
  CHECK(v.trials[0].dimension <= 0);
  auto s = quasismooth_check(p11(2), o);
  CHECK(s.verdict == Verdict::Quasismooth);
  CHECK(trial_seed(1, 0) != trial_seed(1, 1));
  CHECK(trial_seed(1, 0) == trial_seed(1, 0));
}

TEST_CASE("a singular member is caught") {
  // q = x0 x1 - x2^2 in A^4 is singular along the x3-line; q^2 is singular
  // along all of V(q)
  alg::Ring<PrimeField> R(K, {1, 1, 1, 1});
  auto q = R.sub(R.mul(R.var(0), R.var(1)), R.mul(R.var(2), R.var(2)));
  auto sq = R.mul(q, q);
  auto ideal = jacobian_subrank_ideal(R, {sq}, 1);
  CHECK(alg::ideal_dimension(R, ideal) == 3);
  auto cone = jacobian_subrank_ideal(R, {q}, 1);
  CHECK(alg::ideal_dimension(R, cone) == 1);
}
