#include "pezzo/field.hpp"
#include "pezzo/error.hpp"

#include <map>
#include <mutex>

namespace pezzo::alg {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

std::uint32_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

// Shared per prime; fields are built once per random member.
std::shared_ptr<const std::vector<std::uint32_t>> inverse_table(std::uint32_t p) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::shared_ptr<const std::vector<std::uint32_t>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[p];
  if (!slot) {
    auto table = std::make_shared<std::vector<std::uint32_t>>(p, 0);
    // inv(i) = -(p / i) * inv(p mod i)
    (*table)[1] = 1;
    for (std::uint64_t i = 2; i < p; ++i)
      (*table)[i] = static_cast<std::uint32_t>((p - (p / i) * (*table)[p % i] % p) % p);
    slot = std::move(table);
  }
  return slot;
}

}  // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p) || p > (1u << 31))
    throw Error(ErrorKind::InvalidWeights, "field characteristic " + std::to_string(p) + " is not a usable prime");
  if (p <= (1u << 22)) inverses_ = inverse_table(p);
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw Error(ErrorKind::NotInvertible, "zero in prime field");
  if (inverses_) return (*inverses_)[a];
  return pow_mod(a, p_ - 2, p_);
}

PrimeField::Elem PrimeField::from_int(std::int64_t v) const {
  std::int64_t m = v % static_cast<std::int64_t>(p_);
  if (m < 0) m += p_;
  return static_cast<Elem>(m);
}

PrimeField::Elem PrimeField::from_rat(const Rat& r) const {
  Int n = r.num() % p_;
  Int d = r.den() % p_;
  if (n < 0) n += p_;
  if (d == 0) throw Error(ErrorKind::NotInvertible, "denominator divisible by the characteristic");
  return mul(n.convert_to<Elem>(), inv(d.convert_to<Elem>()));
}

PrimeField::Elem PrimeField::random_nonzero(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::uint32_t> dist(1, p_ - 1);
  return dist(rng);
}

RationalField::Elem RationalField::random_nonzero(std::mt19937_64& rng) const {
  std::uniform_int_distribution<int> dist(1, 1000);
  return Rat(dist(rng));
}

}  // namespace pezzo::alg
