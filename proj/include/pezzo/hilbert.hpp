#pragma once

// Hilbert series N(t) / prod (1 - t^a) with the denominator kept as a weight
// multiset. Cuts and cones are bookkeeping on that multiset.

#include "pezzo/arith.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace pezzo {

class UniPoly {
public:
  UniPoly() = default;
  static UniPoly one();

  void add_term(std::int64_t exponent, const Int& coeff);
  Int coeff(std::int64_t exponent) const;
  const std::map<std::int64_t, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Largest exponent; -1 for the zero polynomial.
  std::int64_t degree() const;

  // Multiply by (1 - t^e).
  UniPoly times_one_minus(std::int64_t e) const;
  Int value_at_one() const;
  // Exact division by (1 - t); OrderMismatch when N(1) != 0.
  UniPoly divide_one_minus_t() const;

  std::string str() const;
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

private:
  std::map<std::int64_t, Int> terms_;
};

struct HilbertSeries {
  UniPoly numerator;
  std::vector<std::int64_t> denominator;  // sorted ascending

  std::string str() const;
  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;
};

HilbertSeries hs_grass(const std::array<Rat, 5>& w);
HilbertSeries hs_segre(const std::array<Rat, 3>& a, const std::array<Rat, 3>& b);
HilbertSeries hs_cut(const HilbertSeries& hs, std::int64_t e);
HilbertSeries hs_cone(const HilbertSeries& hs, std::int64_t k);

// Coefficients h_0 .. h_N of the power series.
std::vector<Int> expand(const HilbertSeries& hs, std::int64_t N);

std::int64_t adjunction_number(const HilbertSeries& hs);
int gorenstein_symmetry(const HilbertSeries& hs);

// lim_{t->1} (1-t)^{dim+1} P(t).
Rat degree_limit(const HilbertSeries& hs, int dim);

}  // namespace pezzo
