#pragma once

// Sparse polynomials in a weighted-graded ring. Terms are kept sorted in
// descending monomial order: weighted degree first, ties broken by reverse
// lexicographic comparison on the variable order.

#include "pezzo/error.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

namespace pezzo::alg {

inline constexpr int kMaxVars = 12;

struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};
  std::int32_t deg = 0;

  bool operator==(const Monomial& o) const { return deg == o.deg && e == o.e; }
  bool is_one() const { return deg == 0 && std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; }); }
};

// Positive when a > b in the monomial order.
inline int mono_cmp(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
  for (int i = kMaxVars - 1; i >= 0; --i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  return 0;
}

struct MonoGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return mono_cmp(a, b) > 0; }
};

struct MonoHash {
  std::size_t operator()(const Monomial& m) const {
    std::uint64_t w[3];
    static_assert(sizeof(w) == sizeof(m.e));
    std::memcpy(w, m.e.data(), sizeof(w));
    std::uint64_t h = w[0] * 0x9E3779B97F4A7C15ull;
    h ^= (w[1] + 0x632BE59BD9B4E019ull) * 0xC2B2AE3D27D4EB4Full;
    h ^= (w[2] + 0x165667B19E3779F9ull) * 0x27D4EB2F165667C5ull;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

inline bool divides(const Monomial& a, const Monomial& b) {
  if (a.deg > b.deg) return false;
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
  m.deg = a.deg + b.deg;
  return m;
}

// a / b; requires divides(b, a).
inline Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::uint16_t>(a.e[i] - b.e[i]);
  m.deg = a.deg - b.deg;
  return m;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

inline unsigned support_mask(const Monomial& m) {
  unsigned s = 0;
  for (int i = 0; i < kMaxVars; ++i)
    if (m.e[i]) s |= 1u << i;
  return s;
}

template <class F>
struct Term {
  Monomial m;
  typename F::Elem c;
};

template <class F>
struct Poly {
  std::vector<Term<F>> terms;  // descending, nonzero coefficients

  bool is_zero() const { return terms.empty(); }
  std::size_t size() const { return terms.size(); }
  const Monomial& lead() const { return terms.front().m; }
  const typename F::Elem& lead_coeff() const { return terms.front().c; }
  std::int32_t degree() const { return terms.empty() ? -1 : terms.front().m.deg; }
};

template <class F>
class Ring {
public:
  using Elem = typename F::Elem;
  using P = Poly<F>;

  Ring(F field, std::vector<int> weights, std::vector<std::string> names = {})
      : field_(std::move(field)), weights_(std::move(weights)), names_(std::move(names)) {
    if (weights_.empty() || weights_.size() > static_cast<std::size_t>(kMaxVars))
      throw Error(ErrorKind::InvalidWeights, "ring needs 1.." + std::to_string(kMaxVars) + " variables");
    for (int w : weights_)
      if (w < 1) throw Error(ErrorKind::InvalidWeights, "variable weights must be positive");
    if (names_.empty())
      for (std::size_t i = 0; i < weights_.size(); ++i) names_.push_back("x" + std::to_string(i));
  }

  int nvars() const { return static_cast<int>(weights_.size()); }
  const std::vector<int>& weights() const { return weights_; }
  const std::vector<std::string>& names() const { return names_; }
  const F& field() const { return field_; }

  Monomial monomial(std::span<const int> exps) const {
    Monomial m;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      m.e[i] = static_cast<std::uint16_t>(exps[i]);
      m.deg += exps[i] * weights_[i];
    }
    return m;
  }
  Monomial var_mono(int i, int power = 1) const {
    Monomial m;
    m.e[i] = static_cast<std::uint16_t>(power);
    m.deg = power * weights_[i];
    return m;
  }
  std::int32_t degree_of(const Monomial& m) const {
    std::int32_t d = 0;
    for (int i = 0; i < nvars(); ++i) d += m.e[i] * weights_[i];
    return d;
  }

  P zero() const { return P{}; }
  P constant(const Elem& c) const {
    P p;
    if (!field_.is_zero(c)) p.terms.push_back({Monomial{}, c});
    return p;
  }
  P var(int i) const {
    P p;
    p.terms.push_back({var_mono(i), field_.one()});
    return p;
  }
  P term(const Monomial& m, const Elem& c) const {
    P p;
    if (!field_.is_zero(c)) p.terms.push_back({m, c});
    return p;
  }

  // Sorts, merges equal monomials, drops zeros.
  P from_terms(std::vector<Term<F>> ts) const {
    std::sort(ts.begin(), ts.end(), [](const Term<F>& a, const Term<F>& b) { return mono_cmp(a.m, b.m) > 0; });
    P out;
    for (auto& t : ts) {
      if (!out.terms.empty() && out.terms.back().m == t.m) {
        out.terms.back().c = field_.add(out.terms.back().c, t.c);
        if (field_.is_zero(out.terms.back().c)) out.terms.pop_back();
      } else if (!field_.is_zero(t.c)) {
        out.terms.push_back(std::move(t));
      }
    }
    return out;
  }

  P add(const P& a, const P& b) const { return combine(a, b, false); }
  P sub(const P& a, const P& b) const { return combine(a, b, true); }

  P neg(const P& a) const {
    P out = a;
    for (auto& t : out.terms) t.c = field_.neg(t.c);
    return out;
  }

  P scale(const P& a, const Elem& c) const {
    if (field_.is_zero(c)) return P{};
    P out = a;
    for (auto& t : out.terms) t.c = field_.mul(t.c, c);
    return out;
  }

  P mul_term(const P& a, const Monomial& m, const Elem& c) const {
    if (field_.is_zero(c)) return P{};
    P out;
    out.terms.reserve(a.terms.size());
    for (const auto& t : a.terms) out.terms.push_back({mono_mul(t.m, m), field_.mul(t.c, c)});
    return out;
  }

  P mul(const P& a, const P& b) const {
    if (a.is_zero() || b.is_zero()) return P{};
    if (a.size() == 1) return mul_term(b, a.lead(), a.lead_coeff());
    if (b.size() == 1) return mul_term(a, b.lead(), b.lead_coeff());
    std::unordered_map<Monomial, Elem, MonoHash> acc;
    acc.reserve(a.size() * b.size());
    for (const auto& s : a.terms)
      for (const auto& t : b.terms) {
        Monomial m = mono_mul(s.m, t.m);
        auto [it, fresh] = acc.try_emplace(m, field_.zero());
        it->second = field_.add(it->second, field_.mul(s.c, t.c));
      }
    std::vector<Term<F>> ts;
    ts.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!field_.is_zero(c)) ts.push_back({m, c});
    std::sort(ts.begin(), ts.end(), [](const Term<F>& x, const Term<F>& y) { return mono_cmp(x.m, y.m) > 0; });
    return P{std::move(ts)};
  }

  P pow(const P& a, int n) const {
    P r = constant(field_.one());
    for (int i = 0; i < n; ++i) r = mul(r, a);
    return r;
  }

  P derivative(const P& a, int v) const {
    std::vector<Term<F>> ts;
    for (const auto& t : a.terms) {
      if (t.m.e[v] == 0) continue;
      Monomial m = t.m;
      Elem k = field_.from_int(m.e[v]);
      m.e[v] -= 1;
      m.deg -= weights_[v];
      ts.push_back({m, field_.mul(t.c, k)});
    }
    // the order is preserved except where the multiplier vanishes mod p
    return from_terms(std::move(ts));
  }

  Elem evaluate(const P& a, std::span<const Elem> point) const {
    Elem s = field_.zero();
    for (const auto& t : a.terms) {
      Elem v = t.c;
      for (int i = 0; i < nvars(); ++i)
        for (int k = 0; k < t.m.e[i]; ++k) v = field_.mul(v, point[i]);
      s = field_.add(s, v);
    }
    return s;
  }

  P monic(const P& a) const {
    if (a.is_zero() || field_.is_one(a.lead_coeff())) return a;
    return scale(a, field_.inv(a.lead_coeff()));
  }

  bool is_homogeneous(const P& a) const {
    for (const auto& t : a.terms)
      if (t.m.deg != a.terms.front().m.deg) return false;
    return true;
  }

  // All monomials of weighted degree d, descending.
  std::vector<Monomial> monomials_of_degree(int d) const {
    std::vector<Monomial> out;
    if (d < 0) return out;
    Monomial cur;
    enumerate(0, d, cur, out);
    std::sort(out.begin(), out.end(), MonoGreater{});
    return out;
  }

  std::string str(const Monomial& m) const {
    std::ostringstream os;
    bool any = false;
    for (int i = 0; i < nvars(); ++i) {
      if (!m.e[i]) continue;
      if (any) os << "*";
      os << names_[i];
      if (m.e[i] > 1) os << "^" << m.e[i];
      any = true;
    }
    if (!any) os << "1";
    return os.str();
  }

  std::string str(const P& a) const {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    for (std::size_t k = 0; k < a.terms.size(); ++k) {
      if (k) os << " + ";
      const auto& t = a.terms[k];
      if (t.m.is_one()) {
        os << field_.str(t.c);
      } else {
        if (!field_.is_one(t.c)) os << field_.str(t.c) << "*";
        os << str(t.m);
      }
    }
    return os.str();
  }

private:
  P combine(const P& a, const P& b, bool subtract) const {
    P out;
    out.terms.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      int c = i == a.size() ? -1 : (j == b.size() ? 1 : mono_cmp(a.terms[i].m, b.terms[j].m));
      if (c > 0) {
        out.terms.push_back(a.terms[i++]);
      } else if (c < 0) {
        Elem v = subtract ? field_.neg(b.terms[j].c) : b.terms[j].c;
        out.terms.push_back({b.terms[j].m, v});
        ++j;
      } else {
        Elem v = subtract ? field_.sub(a.terms[i].c, b.terms[j].c) : field_.add(a.terms[i].c, b.terms[j].c);
        if (!field_.is_zero(v)) out.terms.push_back({a.terms[i].m, v});
        ++i;
        ++j;
      }
    }
    return out;
  }

  void enumerate(int v, int remaining, Monomial& cur, std::vector<Monomial>& out) const {
    if (v == nvars() - 1) {
      if (remaining % weights_[v] != 0) return;
      cur.e[v] = static_cast<std::uint16_t>(remaining / weights_[v]);
      Monomial m = cur;
      m.deg = degree_of(m);
      out.push_back(m);
      cur.e[v] = 0;
      return;
    }
    for (int k = 0; k * weights_[v] <= remaining; ++k) {
      cur.e[v] = static_cast<std::uint16_t>(k);
      enumerate(v + 1, remaining - k * weights_[v], cur, out);
    }
    cur.e[v] = 0;
  }

  F field_;
  std::vector<int> weights_;
  std::vector<std::string> names_;
};

// Rewrites p from one ring into another. image[i] >= 0 sends variable i to
// that target variable; kToZero kills terms containing it; kToOne drops it.
inline constexpr int kToZero = -1;
inline constexpr int kToOne = -2;

template <class F>
Poly<F> transport(const Ring<F>& from, const Poly<F>& p, const Ring<F>& to, std::span<const int> image) {
  std::vector<Term<F>> ts;
  ts.reserve(p.size());
  for (const auto& t : p.terms) {
    Monomial m;
    bool dead = false;
    for (int i = 0; i < from.nvars() && !dead; ++i) {
      if (!t.m.e[i]) continue;
      if (image[i] == kToZero) dead = true;
      else if (image[i] >= 0) m.e[image[i]] = static_cast<std::uint16_t>(m.e[image[i]] + t.m.e[i]);
    }
    if (dead) continue;
    m.deg = to.degree_of(m);
    ts.push_back({m, t.c});
  }
  return to.from_terms(std::move(ts));
}

}  // namespace pezzo::alg
