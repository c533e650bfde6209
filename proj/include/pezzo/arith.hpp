#pragma once

// Exact integers and reduced fractions, plus the small number theory
// used by the invariant formulas.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace pezzo {

using Int = boost::multiprecision::cpp_int;

class Rat {
public:
  Rat() : num_(0), den_(1) {}
  Rat(int v) : num_(v), den_(1) {}
  Rat(long v) : num_(v), den_(1) {}
  Rat(long long v) : num_(v), den_(1) {}
  Rat(const Int& v) : num_(v), den_(1) {}
  Rat(Int num, Int den);

  // Accepts "7", "-3/2", " 4 / 6 ".
  static Rat parse(const std::string& text);

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

  // Integer value; throws NonIntegral otherwise.
  Int to_int() const;
  std::int64_t to_i64() const;
  Int floor() const;

  std::string str() const;

  Rat operator-() const { return Rat(-num_, den_, true); }
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) { return a.num_ * b.den_ < b.num_ * a.den_; }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
  Rat(Int num, Int den, bool /*already reduced*/) : num_(std::move(num)), den_(std::move(den)) {}
  void reduce();

  Int num_;
  Int den_;
};

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

// Inverse of a modulo r in [1, r-1]; NotInvertible if gcd(a, r) != 1.
Int mod_inverse(const Int& a, const Int& r);
std::int64_t mod_inverse(std::int64_t a, std::int64_t r);

// Nonnegative residue.
std::int64_t mod(std::int64_t a, std::int64_t m);

// Polynomial extensions n(n-1)/2, n(n-1)(n-2)/6, n(n-1)(n-2)(n-3)/24.
Int binom2(const Int& n);
Int binom3(const Int& n);
Int binom4(const Int& n);
// Rat overloads reject non-integers with NonIntegral.
Int binom3(const Rat& n);
Int binom4(const Rat& n);

}  // namespace pezzo
