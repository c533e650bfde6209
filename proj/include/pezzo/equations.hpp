#pragma once

// Generic members of a family: variables and random forms placed in the
// cells of the syzygy matrix, then Pfaffians or 2x2 minors.

#include "pezzo/formats.hpp"
#include "pezzo/groebner.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace pezzo {

enum class CoefficientPool { Uniform, Small };  // Small draws from {1..7}

std::uint64_t splitmix64(std::uint64_t x);

template <class F>
using PolyMatrix = std::vector<std::vector<alg::Poly<F>>>;

template <class F>
alg::Poly<F> random_form(const alg::Ring<F>& ring, int d, std::mt19937_64& rng,
                         CoefficientPool pool = CoefficientPool::Uniform) {
  alg::Poly<F> p;
  if (d < 0) return p;
  const F& K = ring.field();
  std::uniform_int_distribution<int> small(1, 7);
  for (const auto& m : ring.monomials_of_degree(d)) {
    auto c = pool == CoefficientPool::Small ? K.from_int(small(rng)) : K.random_nonzero(rng);
    if (!K.is_zero(c)) p.terms.push_back({m, c});
  }
  return p;
}

// Where each embedding cell and cone ends up in a member.
struct CellLayout {
  FormatKind kind;
  std::vector<std::int64_t> cell_weight;  // 10 (Grass, i<j row-major) or 9 (Segre, a_i + b_j)
  std::vector<int> cell_var;              // ring variable, or -1 when cut
  std::vector<int> cone_var;              // ring variable per cone, or -1 when cut
  std::vector<int> var_weight;            // ring variables, ascending weight
  std::vector<std::string> var_name;
};

CellLayout layout_cells(const FamilyDescriptor& f);

template <class F>
struct Member {
  alg::Ring<F> ring;
  CellLayout layout;
  PolyMatrix<F> matrix;               // 5x5 skew or 3x3
  std::vector<alg::Poly<F>> equations;
};

// The five maximal Pfaffians of the skew matrix carried by the strict upper
// triangle of m; entry i is the Pfaffian omitting row and column i.
template <class F>
std::vector<alg::Poly<F>> pfaffian_equations(const alg::Ring<F>& R, const PolyMatrix<F>& m) {
  auto e = [&](int i, int j) -> const alg::Poly<F>& { return m[i][j]; };
  std::vector<alg::Poly<F>> out;
  for (int omit = 0; omit < 5; ++omit) {
    int idx[4], n = 0;
    for (int k = 0; k < 5; ++k)
      if (k != omit) idx[n++] = k;
    int a = idx[0], b = idx[1], c = idx[2], d = idx[3];
    alg::Poly<F> t1 = R.mul(e(a, b), e(c, d));
    alg::Poly<F> t2 = R.mul(e(a, c), e(b, d));
    alg::Poly<F> t3 = R.mul(e(a, d), e(b, c));
    std::int32_t deg = -1;
    for (const auto* t : {&t1, &t2, &t3}) {
      if (t->is_zero()) continue;
      if (!R.is_homogeneous(*t) || (deg >= 0 && t->degree() != deg))
        throw Error(ErrorKind::DegreeMismatch, "Pfaffian summands of different degrees");
      deg = t->degree();
    }
    out.push_back(R.add(R.sub(t1, t2), t3));
  }
  return out;
}

// The nine 2x2 minors, rows i<k and columns j<l, in that nesting order.
template <class F>
std::vector<alg::Poly<F>> minor_equations(const alg::Ring<F>& R, const PolyMatrix<F>& m) {
  std::vector<alg::Poly<F>> out;
  for (int i = 0; i < 3; ++i)
    for (int k = i + 1; k < 3; ++k)
      for (int j = 0; j < 3; ++j)
        for (int l = j + 1; l < 3; ++l) {
          alg::Poly<F> t1 = R.mul(m[i][j], m[k][l]);
          alg::Poly<F> t2 = R.mul(m[i][l], m[k][j]);
          if (!t1.is_zero() && !t2.is_zero() && t1.degree() != t2.degree())
            throw Error(ErrorKind::DegreeMismatch, "minor summands of different degrees");
          out.push_back(R.sub(t1, t2));
        }
  return out;
}

// Checks entry degrees against the syzygy weights (zero entries pass).
template <class F>
void check_entry_degrees(const PolyMatrix<F>& m, const SyzygyMatrix& w, bool transpose_segre = true) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (m[i][j].is_zero()) continue;
      if (w.kind == FormatKind::Grass && i >= j) continue;
      std::int64_t expect = (w.kind == FormatKind::Segre && transpose_segre) ? w.entries[j][i] : w.entries[i][j];
      if (m[i][j].degree() != expect)
        throw Error(ErrorKind::DegreeMismatch, "cell (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
}

template <class F>
Member<F> random_member(const FamilyDescriptor& f, const F& field, std::uint64_t seed,
                        CoefficientPool pool = CoefficientPool::Uniform) {
  CellLayout lay = layout_cells(f);
  alg::Ring<F> R(field, lay.var_weight, lay.var_name);
  std::mt19937_64 rng(seed);
  auto entry = [&](std::size_t cell) {
    if (lay.cell_var[cell] >= 0) return R.var(lay.cell_var[cell]);
    return random_form(R, static_cast<int>(lay.cell_weight[cell]), rng, pool);
  };
  PolyMatrix<F> m;
  if (lay.kind == FormatKind::Grass) {
    m.assign(5, std::vector<alg::Poly<F>>(5));
    std::size_t cell = 0;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) {
        m[i][j] = entry(cell++);
        m[j][i] = R.neg(m[i][j]);
      }
  } else {
    m.assign(3, std::vector<alg::Poly<F>>(3));
    std::size_t cell = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[i][j] = entry(cell++);
  }
  auto eqs = lay.kind == FormatKind::Grass ? pfaffian_equations(R, m) : minor_equations(R, m);
  return Member<F>{std::move(R), std::move(lay), std::move(m), std::move(eqs)};
}

template <class F>
PolyMatrix<F> jacobian(const alg::Ring<F>& R, const std::vector<alg::Poly<F>>& eqs) {
  PolyMatrix<F> J(eqs.size(), std::vector<alg::Poly<F>>(R.nvars()));
  for (std::size_t j = 0; j < eqs.size(); ++j)
    for (int i = 0; i < R.nvars(); ++i) J[j][i] = R.derivative(eqs[j], i);
  return J;
}

// All k x k minors of a polynomial matrix, computed bottom-up by Laplace
// expansion along the first selected row so each smaller minor is formed once.
template <class F>
std::vector<alg::Poly<F>> all_minors(const alg::Ring<F>& R, const PolyMatrix<F>& J, int k) {
  const int rows = static_cast<int>(J.size());
  const int cols = rows ? static_cast<int>(J[0].size()) : 0;
  std::vector<alg::Poly<F>> out;
  if (k <= 0 || k > rows || k > cols) return out;
  using Key = std::pair<unsigned, unsigned>;
  std::map<Key, alg::Poly<F>> prev;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) prev[{1u << r, 1u << c}] = J[r][c];
  auto subsets = [](int n, int size) {
    std::vector<unsigned> s;
    for (unsigned m = 0; m < (1u << n); ++m)
      if (std::popcount(m) == size) s.push_back(m);
    return s;
  };
  for (int size = 2; size <= k; ++size) {
    std::map<Key, alg::Poly<F>> cur;
    for (unsigned rm : subsets(rows, size)) {
      int r0 = std::countr_zero(rm);
      unsigned rest = rm & ~(1u << r0);
      for (unsigned cm : subsets(cols, size)) {
        alg::Poly<F> det;
        int sign = 0;
        for (int c = 0; c < cols; ++c) {
          if (!(cm & (1u << c))) continue;
          const auto& a = J[r0][c];
          if (!a.is_zero()) {
            const auto& sub = prev.at({rest, cm & ~(1u << c)});
            if (!sub.is_zero()) {
              auto t = R.mul(a, sub);
              det = (sign % 2 == 0) ? R.add(det, t) : R.sub(det, t);
            }
          }
          ++sign;
        }
        cur[{rm, cm}] = std::move(det);
      }
    }
    prev = std::move(cur);
  }
  for (auto& [key, p] : prev)
    if (!p.is_zero()) out.push_back(std::move(p));
  return out;
}

template <class F>
std::vector<alg::Poly<F>> jacobian_subrank_ideal(const alg::Ring<F>& R, const std::vector<alg::Poly<F>>& eqs,
                                                 int codim) {
  std::vector<alg::Poly<F>> gens;
  for (const auto& e : eqs)
    if (!e.is_zero()) gens.push_back(e);
  auto minors = all_minors(R, jacobian(R, eqs), codim);
  gens.insert(gens.end(), std::make_move_iterator(minors.begin()), std::make_move_iterator(minors.end()));
  return gens;
}

}  // namespace pezzo
