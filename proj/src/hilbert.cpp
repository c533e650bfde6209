#include "pezzo/hilbert.hpp"
#include "pezzo/error.hpp"

#include <algorithm>
#include <sstream>

namespace pezzo {

UniPoly UniPoly::one() {
  UniPoly p;
  p.add_term(0, 1);
  return p;
}

void UniPoly::add_term(std::int64_t exponent, const Int& coeff) {
  if (exponent < 0) throw Error(ErrorKind::NonIntegralExponent, "negative exponent in numerator");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Int UniPoly::coeff(std::int64_t exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Int(0) : it->second;
}

std::int64_t UniPoly::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

UniPoly UniPoly::times_one_minus(std::int64_t e) const {
  UniPoly out = *this;
  for (const auto& [k, c] : terms_) out.add_term(k + e, -c);
  return out;
}

Int UniPoly::value_at_one() const {
  Int s = 0;
  for (const auto& [k, c] : terms_) s += c;
  return s;
}

UniPoly UniPoly::divide_one_minus_t() const {
  if (value_at_one() != 0) throw Error(ErrorKind::OrderMismatch, "numerator does not vanish at t=1");
  // N = (1-t) Q  <=>  Q_k = sum_{j<=k} N_j
  UniPoly q;
  Int running = 0;
  std::int64_t top = degree();
  auto it = terms_.begin();
  for (std::int64_t k = 0; k < top; ++k) {
    if (it != terms_.end() && it->first == k) {
      running += it->second;
      ++it;
    }
    q.add_term(k, running);
  }
  return q;
}

std::string UniPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Int mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "t";
    if (k != 1) os << "^" << k;
  }
  return os.str();
}

std::string HilbertSeries::str() const {
  std::ostringstream os;
  os << "(" << numerator.str() << ") / prod(1-t^a) over a in {";
  for (std::size_t i = 0; i < denominator.size(); ++i) os << (i ? "," : "") << denominator[i];
  os << "}";
  return os.str();
}

namespace {

std::int64_t exponent_of(const Rat& r, const char* what) {
  if (!r.is_integer()) throw Error(ErrorKind::NonIntegralExponent, std::string(what) + " = " + r.str());
  return r.to_i64();
}

}  // namespace

HilbertSeries hs_grass(const std::array<Rat, 5>& w) {
  Rat d = 0;
  for (const auto& x : w) d += x;
  HilbertSeries hs;
  hs.numerator.add_term(0, 1);
  for (const auto& x : w) {
    hs.numerator.add_term(exponent_of(d - x, "d - w_i"), -1);
    hs.numerator.add_term(exponent_of(d + x, "d + w_i"), 1);
  }
  hs.numerator.add_term(exponent_of(2 * d, "2d"), -1);
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) hs.denominator.push_back(exponent_of(w[i] + w[j], "w_i + w_j"));
  std::sort(hs.denominator.begin(), hs.denominator.end());
  return hs;
}

HilbertSeries hs_segre(const std::array<Rat, 3>& a, const std::array<Rat, 3>& b) {
  Rat d = 0;
  for (int i = 0; i < 3; ++i) d += a[i] + b[i];
  std::int64_t de = exponent_of(d, "d");
  HilbertSeries hs;
  UniPoly& n = hs.numerator;
  n.add_term(0, 1);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Rat alpha = a[i] + b[j];
      n.add_term(exponent_of(d - alpha, "d - a_i - b_j"), -1);
      n.add_term(exponent_of(d + alpha, "d + a_i + b_j"), -1);
      hs.denominator.push_back(exponent_of(alpha, "a_i + b_j"));
    }
  n.add_term(de, 4);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      n.add_term(exponent_of(d + a[i] - a[j], "d + a_i - a_j"), 1);
      n.add_term(exponent_of(d + b[i] - b[j], "d + b_i - b_j"), 1);
    }
  n.add_term(2 * de, 1);
  std::sort(hs.denominator.begin(), hs.denominator.end());
  return hs;
}

HilbertSeries hs_cut(const HilbertSeries& hs, std::int64_t e) {
  if (e < 1) throw Error(ErrorKind::InvalidWeights, "cut degree must be positive");
  HilbertSeries out = hs;
  auto it = std::find(out.denominator.begin(), out.denominator.end(), e);
  if (it != out.denominator.end())
    out.denominator.erase(it);
  else
    out.numerator = out.numerator.times_one_minus(e);
  return out;
}

HilbertSeries hs_cone(const HilbertSeries& hs, std::int64_t k) {
  if (k < 1) throw Error(ErrorKind::InvalidWeights, "cone weight must be positive");
  HilbertSeries out = hs;
  out.denominator.insert(std::upper_bound(out.denominator.begin(), out.denominator.end(), k), k);
  return out;
}

std::vector<Int> expand(const HilbertSeries& hs, std::int64_t N) {
  std::vector<Int> h(static_cast<std::size_t>(N + 1), Int(0));
  for (const auto& [k, c] : hs.numerator.terms())
    if (k <= N) h[static_cast<std::size_t>(k)] += c;
  // dividing by (1 - t^a) is a strided prefix sum
  for (std::int64_t a : hs.denominator)
    for (std::int64_t k = a; k <= N; ++k) h[static_cast<std::size_t>(k)] += h[static_cast<std::size_t>(k - a)];
  return h;
}

std::int64_t adjunction_number(const HilbertSeries& hs) { return hs.numerator.degree(); }

int gorenstein_symmetry(const HilbertSeries& hs) {
  const auto& t = hs.numerator.terms();
  if (t.empty()) throw Error(ErrorKind::NotGorensteinSymmetric, "zero numerator");
  std::int64_t q = hs.numerator.degree();
  for (int sigma : {1, -1}) {
    bool ok = true;
    for (const auto& [k, c] : t)
      if (hs.numerator.coeff(q - k) != sigma * c) {
        ok = false;
        break;
      }
    if (ok) return sigma;
  }
  throw Error(ErrorKind::NotGorensteinSymmetric, hs.numerator.str());
}

Rat degree_limit(const HilbertSeries& hs, int dim) {
  long order = static_cast<long>(hs.denominator.size()) - dim - 1;
  if (order < 0) throw Error(ErrorKind::OrderMismatch, "fewer denominator weights than dim + 1");
  UniPoly n = hs.numerator;
  for (long i = 0; i < order; ++i) n = n.divide_one_minus_t();
  Int v = n.value_at_one();
  if (v == 0) throw Error(ErrorKind::OrderMismatch, "numerator vanishes to higher order than expected");
  Int prod = 1;
  for (std::int64_t a : hs.denominator) prod *= a;
  return Rat(v, prod);
}

}  // namespace pezzo
