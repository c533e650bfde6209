#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace pezzo {

// 1/r(1, bprime), stored in canonical form.
struct QuotientSingularity {
  std::int64_t r = 0;
  std::int64_t bprime = 0;

  std::string str() const;  // "1/7(1,3)"
  friend auto operator<=>(const QuotientSingularity&, const QuotientSingularity&) = default;
};

enum class TRClass { T, R, Neither };
const char* to_string(TRClass c);

// b' = min(a^-1 b, b^-1 a) mod r; NotIsolated unless gcd(r,a) = gcd(r,b) = 1.
QuotientSingularity normalize(std::int64_t r, std::int64_t a, std::int64_t b);

TRClass classify_tr(const QuotientSingularity& q);

// Solvability of lambda(a+b) + I = 0 mod r over units lambda.
bool pg_admissible(const QuotientSingularity& q, std::int64_t index);

class Basket {
public:
  void add(const QuotientSingularity& q, std::int64_t mult = 1);
  const std::map<QuotientSingularity, std::int64_t>& points() const { return points_; }
  std::int64_t size() const;
  bool empty() const { return points_.empty(); }
  std::string str() const;  // "2x1/3(1,1), 1/5(1,2)"
  friend bool operator==(const Basket&, const Basket&) = default;

private:
  std::map<QuotientSingularity, std::int64_t> points_;
};

struct RigidPartition {
  std::int64_t index = 0;
  std::int64_t r_max = 0;
  std::vector<QuotientSingularity> admissible;  // isolated, PG-admissible
  std::vector<QuotientSingularity> t_set;
  std::vector<QuotientSingularity> neither;
  std::int64_t r_count = 0;
};

RigidPartition rigid_partition(std::int64_t index, std::int64_t r_max);

}  // namespace pezzo
