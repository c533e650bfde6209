#pragma once

// Coefficient fields for the polynomial engine. Both expose the same small
// interface so the engine can be instantiated over either.

#include "pezzo/arith.hpp"

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

namespace pezzo::alg {

class PrimeField {
public:
  using Elem = std::uint32_t;

  explicit PrimeField(std::uint32_t p = 32003);

  std::uint32_t characteristic() const { return p_; }
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }
  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a ? p_ - a : 0; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Elem inv(Elem a) const;
  Elem from_int(std::int64_t v) const;
  Elem from_rat(const Rat& r) const;
  Elem random_nonzero(std::mt19937_64& rng) const;
  std::string str(Elem a) const { return std::to_string(a); }

private:
  std::uint32_t p_;
  std::shared_ptr<const std::vector<std::uint32_t>> inverses_;
};

class RationalField {
public:
  using Elem = Rat;

  Elem zero() const { return Rat(0); }
  Elem one() const { return Rat(1); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool is_one(const Elem& a) const { return a == Rat(1); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const { return Rat(1) / a; }
  Elem from_int(std::int64_t v) const { return Rat(static_cast<long long>(v)); }
  Elem from_rat(const Rat& r) const { return r; }
  // Integers drawn uniformly from [1, 1000].
  Elem random_nonzero(std::mt19937_64& rng) const;
  std::string str(const Elem& a) const { return a.str(); }
};

bool is_prime(std::uint64_t n);

}  // namespace pezzo::alg
