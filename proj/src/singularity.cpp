#include "pezzo/singularity.hpp"
#include "pezzo/arith.hpp"
#include "pezzo/error.hpp"

#include <numeric>
#include <set>
#include <sstream>

namespace pezzo {

std::string QuotientSingularity::str() const {
  return "1/" + std::to_string(r) + "(1," + std::to_string(bprime) + ")";
}

const char* to_string(TRClass c) {
  switch (c) {
    case TRClass::T: return "T";
    case TRClass::R: return "R";
    case TRClass::Neither: return "Neither";
  }
  return "?";
}

QuotientSingularity normalize(std::int64_t r, std::int64_t a, std::int64_t b) {
  if (r < 2) throw Error(ErrorKind::InvalidWeights, "singularity order must be at least 2");
  a = mod(a, r);
  b = mod(b, r);
  if (std::gcd(a, r) != 1 || std::gcd(b, r) != 1)
    throw Error(ErrorKind::NotIsolated,
                "1/" + std::to_string(r) + "(" + std::to_string(a) + "," + std::to_string(b) + ")");
  std::int64_t x = mod(mod_inverse(a, r) * b, r);
  std::int64_t y = mod(mod_inverse(b, r) * a, r);
  return QuotientSingularity{r, std::min(x, y)};
}

TRClass classify_tr(const QuotientSingularity& q) {
  std::int64_t m = std::gcd(1 + q.bprime, q.r);
  std::int64_t k = q.r / m;
  if (m % k == 0) return TRClass::T;
  if (m < k) return TRClass::R;
  return TRClass::Neither;
}

bool pg_admissible(const QuotientSingularity& q, std::int64_t index) {
  // lambda u = -I mod r with u = 1 + b': g = gcd(u, r) must divide I, and the
  // reduced solution mod r/g lifts to a unit only if it is a unit mod r/g.
  std::int64_t g = std::gcd(1 + q.bprime, q.r);
  if (index % g != 0) return false;
  return std::gcd(index / g, q.r / g) == 1;
}

void Basket::add(const QuotientSingularity& q, std::int64_t mult) {
  if (mult <= 0) return;
  points_[q] += mult;
}

std::int64_t Basket::size() const {
  std::int64_t n = 0;
  for (const auto& [q, m] : points_) n += m;
  return n;
}

std::string Basket::str() const {
  if (points_.empty()) return "{}";
  std::ostringstream os;
  bool first = true;
  for (const auto& [q, m] : points_) {
    if (!first) os << ", ";
    first = false;
    if (m > 1) os << m << "x";
    os << q.str();
  }
  return os.str();
}

RigidPartition rigid_partition(std::int64_t index, std::int64_t r_max) {
  RigidPartition rp;
  rp.index = index;
  rp.r_max = r_max;
  for (std::int64_t r = 2; r <= r_max; ++r) {
    std::set<QuotientSingularity> seen;
    for (std::int64_t b = 1; b < r; ++b) {
      if (std::gcd(b, r) != 1) continue;
      auto q = normalize(r, 1, b);
      if (!seen.insert(q).second) continue;
      if (!pg_admissible(q, index)) continue;
      rp.admissible.push_back(q);
      switch (classify_tr(q)) {
        case TRClass::T: rp.t_set.push_back(q); break;
        case TRClass::R: ++rp.r_count; break;
        case TRClass::Neither: rp.neither.push_back(q); break;
      }
    }
  }
  return rp;
}

}  // namespace pezzo
