#include "pezzo/strata.hpp"
#include "pezzo/equations.hpp"
#include "pezzo/groebner.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace pezzo {

using alg::Monomial;
using alg::PrimeField;
using Ring = alg::Ring<PrimeField>;
using P = alg::Poly<PrimeField>;
using Elem = PrimeField::Elem;

const char* to_string(BasketStatus s) {
  switch (s) {
    case BasketStatus::Ok: return "Ok";
    case BasketStatus::NotWellformed: return "NotWellformed";
    case BasketStatus::NotIsolated: return "NotIsolated";
    case BasketStatus::Undetermined: return "Undetermined";
  }
  return "?";
}

bool BasketResult::any_tangent_deficit() const {
  for (const auto& p : points)
    if (p.points > 0 && p.tangent_deficit()) return true;
  return false;
}

std::string BasketResult::describe() const {
  std::ostringstream os;
  os << to_string(status) << " basket {" << basket.str() << "}";
  if (!message.empty()) os << " (" << message << ")";
  for (const auto& p : points) {
    if (p.points == 0) continue;
    os << "\n  support {";
    for (std::size_t i = 0; i < p.support.size(); ++i) os << (i ? "," : "") << var_names[p.support[i]];
    os << "} isotropy " << p.isotropy << ": " << p.points << " point(s)";
    if (p.type) os << " of type " << p.type->str();
    os << "; ranks";
    for (const auto& r : p.ranks) os << " chi" << r.chi << "=" << r.rank << "/" << r.rows << "x" << r.cols;
    os << "; patch " << p.patch << " tangent rank " << p.tangent_rank << "/" << p.codim;
    if (!p.tangent_vars.empty()) {
      os << " (";
      for (std::size_t i = 0; i < p.tangent_vars.size(); ++i) os << (i ? "," : "") << p.tangent_vars[i];
      os << ")";
    }
    if (p.patch_ranks.size() > 1) {
      os << " [";
      for (std::size_t i = 0; i < p.patch_ranks.size(); ++i)
        os << (i ? " " : "") << p.patch_ranks[i].first << ":" << p.patch_ranks[i].second;
      os << "]";
    }
    if (p.fletcher) os << "; fletcher " << p.fletcher->interior << (p.fletcher_agrees ? " agrees" : " differs");
    if (!p.note.empty()) os << "; " << p.note;
  }
  return os.str();
}

namespace {

// Univariate polynomials over F_p, low degree first.
using UPoly = std::vector<Elem>;

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

UPoly umod(UPoly a, const UPoly& b, const PrimeField& K) {
  trim(a);
  Elem inv = K.inv(b.back());
  while (a.size() >= b.size()) {
    Elem q = K.mul(a.back(), inv);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = K.sub(a[shift + i], K.mul(q, b[i]));
    trim(a);
  }
  return a;
}

UPoly udiv(UPoly a, const UPoly& b, const PrimeField& K) {
  trim(a);
  if (a.size() < b.size()) return {};
  UPoly q(a.size() - b.size() + 1, 0);
  Elem inv = K.inv(b.back());
  while (a.size() >= b.size()) {
    Elem c = K.mul(a.back(), inv);
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = K.sub(a[shift + i], K.mul(c, b[i]));
    trim(a);
  }
  return q;
}

UPoly ugcd(UPoly a, UPoly b, const PrimeField& K) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = umod(a, b, K);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

UPoly squarefree_part(const UPoly& f, const PrimeField& K) {
  UPoly df;
  for (std::size_t i = 1; i < f.size(); ++i) df.push_back(K.mul(K.from_int(static_cast<std::int64_t>(i)), f[i]));
  trim(df);
  if (df.empty()) return f;
  UPoly g = ugcd(f, df, K);
  if (g.size() <= 1) return f;
  return udiv(f, g, K);
}

// Rank of a dense matrix over F_p.
int rank_of(std::vector<std::vector<Elem>> m, const PrimeField& K) {
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c]) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    Elem inv = K.inv(m[rank][c]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || !m[r][c]) continue;
      Elem f = K.mul(m[r][c], inv);
      for (int k = c; k < cols; ++k) m[r][k] = K.sub(m[r][k], K.mul(f, m[rank][k]));
    }
    ++rank;
  }
  return rank;
}

bool is_unit(const alg::GroebnerBasis<PrimeField>& gb) {
  return gb.polys.size() == 1 && gb.polys[0].lead().is_one();
}

// A zero-dimensional affine ideal in a slice ring.
struct Slice {
  Ring ring;
  std::vector<P> gens;
  alg::GroebnerBasis<PrimeField> gb;
};

// Monomial-basis coordinates of the normal form.
std::vector<Elem> coords(const P& nf, const std::vector<Monomial>& basis) {
  std::vector<Elem> v(basis.size(), 0);
  for (const auto& t : nf.terms) {
    auto it = std::find(basis.begin(), basis.end(), t.m);
    if (it != basis.end()) v[static_cast<std::size_t>(it - basis.begin())] = t.c;
  }
  return v;
}

// Adds the squarefree part of each variable's minimal polynomial (Seidenberg);
// returns the number of distinct points, or -1 if the ideal is not zero-dimensional.
long count_points(Slice& s) {
  const PrimeField& K = s.ring.field();
  alg::GroebnerOptions go;
  for (int v = 0; v < s.ring.nvars(); ++v) {
    if (is_unit(s.gb)) return 0;
    auto lt = s.gb.leading();
    auto basis = alg::standard_monomials(lt, s.ring.weights(), 20000);
    if (!basis) return -1;
    const std::size_t N = basis->size();
    // reduced rows of [coords | combination] for 1, v, v^2, ...
    std::vector<std::vector<Elem>> rows;
    std::vector<int> pivots;
    P power = s.ring.constant(K.one());
    UPoly minpoly;
    for (std::size_t k = 0; k <= N; ++k) {
      P nf = alg::normal_form(s.ring, power, std::span<const P>(s.gb.polys));
      std::vector<Elem> row = coords(nf, *basis);
      row.resize(N + N + 1, 0);
      row[N + k] = 1;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        Elem c = row[static_cast<std::size_t>(pivots[r])];
        if (!c) continue;
        for (std::size_t j = 0; j < row.size(); ++j) row[j] = K.sub(row[j], K.mul(c, rows[r][j]));
      }
      int piv = -1;
      for (std::size_t j = 0; j < N; ++j)
        if (row[j]) {
          piv = static_cast<int>(j);
          break;
        }
      if (piv < 0) {
        minpoly.assign(row.begin() + static_cast<long>(N), row.begin() + static_cast<long>(N + k + 1));
        break;
      }
      Elem inv = K.inv(row[static_cast<std::size_t>(piv)]);
      for (auto& x : row) x = K.mul(x, inv);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        Elem c = rows[r][static_cast<std::size_t>(piv)];
        if (!c) continue;
        for (std::size_t j = 0; j < row.size(); ++j) rows[r][j] = K.sub(rows[r][j], K.mul(c, row[j]));
      }
      rows.push_back(std::move(row));
      pivots.push_back(piv);
      power = s.ring.mul(power, s.ring.var(v));
    }
    trim(minpoly);
    UPoly sq = squarefree_part(minpoly, K);
    if (sq.size() == minpoly.size()) continue;
    P g;
    for (std::size_t i = 0; i < sq.size(); ++i)
      if (sq[i]) g = s.ring.add(g, s.ring.term(s.ring.var_mono(v, static_cast<int>(i)), sq[i]));
    s.gens.push_back(g);
    s.gb = alg::groebner(s.ring, s.gens, go);
  }
  if (is_unit(s.gb)) return 0;
  auto basis = alg::standard_monomials(s.gb.leading(), s.ring.weights(), 20000);
  return basis ? static_cast<long>(basis->size()) : -1;
}

class Analyzer {
public:
  Analyzer(const FamilyDescriptor& f, const StrataOptions& opt)
      : f_(f), K_(opt.prime), mem_(random_member(f, K_, opt.seed)), R_(mem_.ring) {
    for (const auto& e : mem_.equations)
      if (!e.is_zero()) eqs_.push_back(e);
    jac_ = jacobian(R_, eqs_);
    n_ = R_.nvars();
    codim_ = f.codimension();
  }

  BasketResult run() {
    BasketResult res;
    res.var_names = R_.names();
    // wellformedness: X meets every orbifold stratum in finitely many points
    for (const auto& st : strata(f_.ambient)) {
      StratumCheck sc;
      sc.k = st.k;
      for (int v = 0; v < n_; ++v)
        if (R_.weights()[v] % st.k == 0) sc.vars.push_back(v);
      sc.projective_dimension = restricted_dimension(sc.vars) - 1;
      res.strata.push_back(sc);
      if (sc.projective_dimension > 0) {
        res.status = BasketStatus::NotWellformed;
        res.message = "X meets the stratum of weight " + std::to_string(st.k) + " in dimension " +
                      std::to_string(sc.projective_dimension);
        return res;
      }
    }
    bool undetermined = false, non_isolated = false;
    for (unsigned mask = 1; mask < (1u << n_); ++mask) {
      std::vector<int> S;
      int g = 0;
      for (int v = 0; v < n_; ++v)
        if (mask & (1u << v)) {
          S.push_back(v);
          g = std::gcd(g, R_.weights()[v]);
        }
      if (g < 2) continue;
      PointReport pr = analyze(S, g);
      if (pr.points > 0) {
        if (!pr.note.empty() && !pr.type) {
          if (pr.note.rfind("non-isolated", 0) == 0) non_isolated = true;
          else undetermined = true;
        }
        if (pr.type) res.basket.add(*pr.type, pr.points);
      } else if (pr.points < 0) {
        undetermined = true;
      }
      res.points.push_back(std::move(pr));
    }
    if (undetermined) {
      res.status = BasketStatus::Undetermined;
      res.message = "local analysis failed on at least one support";
    } else if (non_isolated) {
      res.status = BasketStatus::NotIsolated;
      res.message = "an orbifold point is not isolated";
    } else {
      res.status = BasketStatus::Ok;
    }
    return res;
  }

private:
  // Ring on the given variables plus, optionally, a saturation variable.
  Ring subring(const std::vector<int>& vars, bool with_t) const {
    std::vector<int> w;
    std::vector<std::string> names;
    for (int v : vars) {
      w.push_back(R_.weights()[v]);
      names.push_back(R_.names()[v]);
    }
    if (with_t) {
      w.push_back(1);
      names.push_back("T");
    }
    return Ring(K_, w, names);
  }

  int restricted_dimension(const std::vector<int>& vars) const {
    Ring sub = subring(vars, false);
    std::vector<int> image(static_cast<std::size_t>(n_), alg::kToZero);
    for (std::size_t i = 0; i < vars.size(); ++i) image[static_cast<std::size_t>(vars[i])] = static_cast<int>(i);
    std::vector<P> gens;
    for (const auto& e : eqs_) {
      P q = alg::transport(R_, e, sub, image);
      if (!q.is_zero()) gens.push_back(std::move(q));
    }
    if (gens.empty()) return static_cast<int>(vars.size());
    return alg::ideal_dimension(sub, gens);
  }

  PointReport analyze(const std::vector<int>& S, int g) {
    PointReport pr;
    pr.support = S;
    for (int v : S) pr.support_weights.push_back(R_.weights()[v]);
    pr.isotropy = g;
    pr.codim = codim_;
    int patch = S.front();
    for (int v : S)
      if (R_.weights()[v] >= R_.weights()[patch]) patch = v;
    pr.patch = R_.names()[patch];
    tangent_monomials(patch, pr);

    if (S.size() == 1) {
      coordinate_point(S.front(), g, pr);
      return pr;
    }
    torus_points(S, g, pr);
    return pr;
  }

  // Monomials x_p^m * x_k in the equations, matched to distinct k.
  void tangent_monomials(int patch, PointReport& pr) {
    auto& adj = adj_;
    adj.assign(eqs_.size(), {});
    for (std::size_t j = 0; j < eqs_.size(); ++j)
      for (const auto& t : eqs_[j].terms) {
        int other = -1, count = 0;
        for (int v = 0; v < n_; ++v) {
          if (v == patch || !t.m.e[v]) continue;
          other = v;
          count += t.m.e[v];
        }
        if (count == 1 && t.m.e[patch] >= 1) adj[j].push_back(other);
      }
    for (auto& a : adj) {
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    // recover one maximum matching for reporting
    std::vector<int> match(static_cast<std::size_t>(n_), -1);
    for (std::size_t u = 0; u < adj.size(); ++u) {
      std::vector<char> seen(static_cast<std::size_t>(n_), 0);
      std::function<bool(int)> aug = [&](int x) {
        for (int y : adj[static_cast<std::size_t>(x)]) {
          if (seen[static_cast<std::size_t>(y)]) continue;
          seen[static_cast<std::size_t>(y)] = 1;
          if (match[static_cast<std::size_t>(y)] < 0 || aug(match[static_cast<std::size_t>(y)])) {
            match[static_cast<std::size_t>(y)] = x;
            return true;
          }
        }
        return false;
      };
      aug(static_cast<int>(u));
    }
    for (int v = 0; v < n_; ++v)
      if (match[static_cast<std::size_t>(v)] >= 0) pr.tangent_vars.push_back(R_.names()[static_cast<std::size_t>(v)]);
  }

  std::int64_t eq_degree(std::size_t j) const { return eqs_[j].degree(); }

  void finish_type(PointReport& pr, int g) {
    int total = 0;
    for (const auto& r : pr.ranks) total += r.rank;
    if (total != codim_) {
      pr.note = "rank " + std::to_string(total) + " below codimension " + std::to_string(codim_);
      return;
    }
    std::vector<std::int64_t> chars;
    bool euler_removed = false;
    for (const auto& r : pr.ranks)
      for (int k = 0; k < r.cols - r.rank; ++k) {
        if (r.chi == 0 && !euler_removed) {
          euler_removed = true;
          continue;
        }
        chars.push_back(r.chi);
      }
    pr.local_weights = chars;
    if (!euler_removed || chars.size() != 2) {
      pr.note = "unexpected tangent characters";
      return;
    }
    if (std::gcd(chars[0], static_cast<std::int64_t>(g)) != 1 || std::gcd(chars[1], static_cast<std::int64_t>(g)) != 1) {
      pr.note = "non-isolated: local weights " + std::to_string(chars[0]) + "," + std::to_string(chars[1]) + " mod " +
                std::to_string(g);
      return;
    }
    pr.type = normalize(g, chars[0], chars[1]);
  }

  void coordinate_point(int v, int g, PointReport& pr) {
    for (const auto& e : eqs_) {
      // on X iff no pure power of x_v occurs
      for (const auto& t : e.terms)
        if (t.m.e[v] && t.m.deg == t.m.e[v] * R_.weights()[v]) {
          pr.points = 0;
          return;
        }
    }
    pr.points = 1;
    std::vector<Elem> pt(static_cast<std::size_t>(n_), 0);
    pt[static_cast<std::size_t>(v)] = 1;
    {
      std::vector<std::vector<Elem>> m;
      for (const auto& row : masked_jacobian()) {
        std::vector<Elem> vals;
        for (const auto& e : row) vals.push_back(R_.evaluate(e, pt));
        m.push_back(vals);
      }
      pr.tangent_rank = rank_of(m, K_);
    }
    for (std::int64_t chi = 0; chi < g; ++chi) {
      std::vector<std::size_t> rows;
      std::vector<int> cols;
      for (std::size_t j = 0; j < eqs_.size(); ++j)
        if (mod(eq_degree(j), g) == chi) rows.push_back(j);
      for (int i = 0; i < n_; ++i)
        if (mod(R_.weights()[i], g) == chi) cols.push_back(i);
      if (cols.empty()) continue;
      std::vector<std::vector<Elem>> m;
      for (auto j : rows) {
        std::vector<Elem> row;
        for (int i : cols) row.push_back(R_.evaluate(jac_[j][static_cast<std::size_t>(i)], pt));
        m.push_back(row);
      }
      pr.ranks.push_back({chi, static_cast<int>(rows.size()), static_cast<int>(cols.size()), rank_of(m, K_)});
    }
    finish_type(pr, g);
  }

  void torus_points(const std::vector<int>& S, int g, PointReport& pr) {
    int x0 = S.front();
    for (int v : S)
      if (R_.weights()[v] < R_.weights()[x0]) x0 = v;
    std::vector<int> rest;
    for (int v : S)
      if (v != x0) rest.push_back(v);
    Ring sl = subring(rest, true);
    const int tvar = static_cast<int>(rest.size());
    std::vector<int> image(static_cast<std::size_t>(n_), alg::kToZero);
    image[static_cast<std::size_t>(x0)] = alg::kToOne;
    for (std::size_t i = 0; i < rest.size(); ++i) image[static_cast<std::size_t>(rest[i])] = static_cast<int>(i);

    std::vector<P> gens;
    for (const auto& e : eqs_) {
      P q = alg::transport(R_, e, sl, image);
      if (!q.is_zero()) gens.push_back(std::move(q));
    }
    // saturate by the coordinates of S
    alg::Monomial prod = sl.var_mono(tvar);
    for (std::size_t i = 0; i < rest.size(); ++i) prod = alg::mono_mul(prod, sl.var_mono(static_cast<int>(i)));
    gens.push_back(sl.sub(sl.term(prod, K_.one()), sl.constant(K_.one())));

    alg::GroebnerOptions go;
    Slice s{sl, gens, alg::groebner(sl, gens, go)};
    if (is_unit(s.gb)) {
      pr.points = 0;
      return;
    }
    long n_slice = count_points(s);
    if (n_slice < 0) {
      pr.points = -1;
      pr.note = "points with this support are not finite";
      return;
    }
    long numer = n_slice * g;
    if (numer % R_.weights()[x0] != 0) {
      pr.points = -1;
      pr.note = "slice count not divisible by the orbit size";
      return;
    }
    pr.points = numer / R_.weights()[x0];
    if (pr.points == 0) return;

    if (S.size() == 2) fletcher_check(S, g, pr);

    // largest k whose k-minors have no common zero on the points
    auto rank_on_points = [&](const PolyMatrix<PrimeField>& full, const std::vector<std::size_t>& rows,
                              const std::vector<int>& cols) {
      PolyMatrix<PrimeField> block;
      for (auto j : rows) {
        std::vector<P> row;
        for (int i : cols) row.push_back(alg::transport(R_, full[j][static_cast<std::size_t>(i)], sl, image));
        block.push_back(std::move(row));
      }
      int top = static_cast<int>(std::min(rows.size(), cols.size()));
      for (int k = std::min(top, codim_); k >= 1; --k) {
        auto minors = all_minors(sl, block, k);
        if (minors.empty()) continue;
        std::vector<P> test = s.gens;
        test.insert(test.end(), minors.begin(), minors.end());
        if (is_unit(alg::groebner(sl, test, go))) return k;
      }
      return 0;
    };
    const auto masked = masked_jacobian();
    for (std::int64_t chi = 0; chi < g; ++chi) {
      std::vector<std::size_t> rows;
      std::vector<int> cols;
      for (std::size_t j = 0; j < eqs_.size(); ++j)
        if (mod(eq_degree(j), g) == chi) rows.push_back(j);
      for (int i = 0; i < n_; ++i)
        if (mod(R_.weights()[i], g) == chi) cols.push_back(i);
      if (cols.empty()) continue;
      pr.ranks.push_back(
          {chi, static_cast<int>(rows.size()), static_cast<int>(cols.size()), rank_on_points(jac_, rows, cols)});
      pr.tangent_rank += rank_on_points(masked, rows, cols);
    }
    pr.tangent_rank = std::min(pr.tangent_rank, codim_);
    const auto main_adj = adj_;
    for (int p : S) {
      PointReport scratch;
      tangent_monomials(p, scratch);
      const auto mp = masked_jacobian();
      int rk = 0;
      for (std::int64_t chi = 0; chi < g; ++chi) {
        std::vector<std::size_t> rows;
        std::vector<int> cols;
        for (std::size_t j = 0; j < eqs_.size(); ++j)
          if (mod(eq_degree(j), g) == chi) rows.push_back(j);
        for (int i = 0; i < n_; ++i)
          if (mod(R_.weights()[i], g) == chi) cols.push_back(i);
        if (!cols.empty()) rk += rank_on_points(mp, rows, cols);
      }
      pr.patch_ranks.emplace_back(R_.names()[static_cast<std::size_t>(p)], std::min(rk, codim_));
    }
    adj_ = main_adj;
    finish_type(pr, g);
  }

  void fletcher_check(const std::vector<int>& S, int g, PointReport& pr) {
    Ring sub = subring(S, false);
    std::vector<int> image(static_cast<std::size_t>(n_), alg::kToZero);
    for (std::size_t i = 0; i < S.size(); ++i) image[static_cast<std::size_t>(S[i])] = static_cast<int>(i);
    std::vector<P> gens;
    for (const auto& e : eqs_) {
      P q = alg::transport(R_, e, sub, image);
      if (!q.is_zero()) gens.push_back(std::move(q));
    }
    if (gens.empty()) return;
    auto gb = alg::groebner(sub, gens);
    if (gb.polys.size() != 1) return;
    std::int64_t a0 = R_.weights()[static_cast<std::size_t>(S[0])] / g;
    std::int64_t a1 = R_.weights()[static_cast<std::size_t>(S[1])] / g;
    std::int64_t d = gb.polys[0].degree() / g;
    if (d < 1 || std::gcd(a0, a1) != 1) return;
    pr.fletcher = fletcher_count(a0, a1, d);
    pr.fletcher_agrees = pr.fletcher->interior == pr.points;
  }

  // Jacobian with only the columns of variables that carry a tangent monomial.
  PolyMatrix<PrimeField> masked_jacobian() const {
    std::vector<char> keep(static_cast<std::size_t>(n_), 0);
    for (const auto& a : adj_)
      for (int k : a) keep[static_cast<std::size_t>(k)] = 1;
    PolyMatrix<PrimeField> m(eqs_.size(), std::vector<P>(static_cast<std::size_t>(n_)));
    for (std::size_t j = 0; j < eqs_.size(); ++j)
      for (int k = 0; k < n_; ++k)
        if (keep[static_cast<std::size_t>(k)]) m[j][static_cast<std::size_t>(k)] = jac_[j][static_cast<std::size_t>(k)];
    return m;
  }

  const FamilyDescriptor& f_;
  std::vector<std::vector<int>> adj_;
  PrimeField K_;
  Member<PrimeField> mem_;
  const Ring& R_;
  std::vector<P> eqs_;
  PolyMatrix<PrimeField> jac_;
  int n_ = 0;
  int codim_ = 0;
};

}  // namespace

BasketResult strata_basket(const FamilyDescriptor& f, const StrataOptions& opt) {
  Analyzer a(f, opt);
  return a.run();
}

BasketCheck basket_verify(const FamilyDescriptor& f, const Basket& claimed, const StrataOptions& opt) {
  BasketCheck bc;
  bc.claimed = claimed;
  BasketResult r = strata_basket(f, opt);
  bc.status = r.status;
  bc.computed = r.basket;
  if (!r.ok()) bc.problems.push_back(std::string("analysis ") + to_string(r.status) + ": " + r.message);
  for (const auto& [q, m] : claimed.points()) {
    if (!pg_admissible(q, f.fano_index)) bc.problems.push_back(q.str() + " is not PG-admissible for I=" + std::to_string(f.fano_index));
    if (classify_tr(q) != TRClass::R) bc.problems.push_back(q.str() + " is not an R-singularity");
  }
  if (r.ok() && !(r.basket == claimed))
    bc.problems.push_back("computed {" + r.basket.str() + "} differs from claimed {" + claimed.str() + "}");
  bc.match = bc.problems.empty();
  return bc;
}

}  // namespace pezzo
