#include "pezzo/arith.hpp"
#include "pezzo/error.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace pezzo {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NonIntegral: return "NonIntegral";
    case ErrorKind::NonIntegralExponent: return "NonIntegralExponent";
    case ErrorKind::NotGorensteinSymmetric: return "NotGorensteinSymmetric";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::InvalidWeights: return "InvalidWeights";
    case ErrorKind::NotQuasilinear: return "NotQuasilinear";
    case ErrorKind::WrongDimension: return "WrongDimension";
    case ErrorKind::NonFano: return "NonFano";
    case ErrorKind::NonPositiveDegree: return "NonPositiveDegree";
    case ErrorKind::NotIsolated: return "NotIsolated";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::ResourceBudget: return "ResourceBudget";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::InadmissibleParameter: return "InadmissibleParameter";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownEntry: return "UnknownEntry";
  }
  return "Error";
}

Int gcd(const Int& a, const Int& b) {
  Int x = abs(a), y = abs(b);
  while (y != 0) {
    Int t = x % y;
    x = std::move(y);
    y = std::move(t);
  }
  return x;
}

Int lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

Rat::Rat(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw Error(ErrorKind::NotInvertible, "zero denominator");
  reduce();
}

void Rat::reduce() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  Int g = gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rat Rat::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto parse_int = [&](const std::string& part) {
    if (part.empty()) throw Error(ErrorKind::ParseError, "empty number in '" + text + "'");
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) throw Error(ErrorKind::ParseError, "bad number '" + text + "'");
    for (std::size_t j = i; j < part.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(part[j])))
        throw Error(ErrorKind::ParseError, "bad number '" + text + "'");
    return Int(part[0] == '+' ? part.substr(1) : part);
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_int(s));
  return Rat(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

Int Rat::to_int() const {
  if (den_ != 1) throw Error(ErrorKind::NonIntegral, str() + " is not an integer");
  return num_;
}

std::int64_t Rat::to_i64() const { return to_int().convert_to<std::int64_t>(); }

Int Rat::floor() const {
  Int q = num_ / den_;  // truncates toward zero
  if (num_ < 0 && q * den_ != num_) q -= 1;
  return q;
}

std::string Rat::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

Rat& Rat::operator+=(const Rat& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  reduce();
  return *this;
}

Rat& Rat::operator-=(const Rat& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  reduce();
  return *this;
}

Rat& Rat::operator*=(const Rat& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  reduce();
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.num_ == 0) throw Error(ErrorKind::NotInvertible, "division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  reduce();
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
  os << r.num_;
  if (r.den_ != 1) os << '/' << r.den_;
  return os;
}

Int mod_inverse(const Int& a, const Int& r) {
  if (r < 2) throw Error(ErrorKind::NotInvertible, "modulus must be at least 2");
  Int a0 = a % r;
  if (a0 < 0) a0 += r;
  // extended Euclid on (a0, r)
  Int old_r = a0, cur_r = r, old_s = 1, cur_s = 0;
  while (cur_r != 0) {
    Int q = old_r / cur_r;
    Int t = old_r - q * cur_r;
    old_r = cur_r;
    cur_r = t;
    t = old_s - q * cur_s;
    old_s = cur_s;
    cur_s = t;
  }
  if (old_r != 1) {
    std::ostringstream os;
    os << a << " mod " << r;
    throw Error(ErrorKind::NotInvertible, os.str());
  }
  Int x = old_s % r;
  if (x < 0) x += r;
  return x;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t r) {
  return mod_inverse(Int(a), Int(r)).convert_to<std::int64_t>();
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t x = a % m;
  return x < 0 ? x + m : x;
}

Int binom2(const Int& n) { return n * (n - 1) / 2; }
Int binom3(const Int& n) { return n * (n - 1) * (n - 2) / 6; }
Int binom4(const Int& n) { return n * (n - 1) * (n - 2) * (n - 3) / 24; }

Int binom3(const Rat& n) {
  if (!n.is_integer()) throw Error(ErrorKind::NonIntegral, "binom3 of " + n.str());
  return binom3(n.num());
}

Int binom4(const Rat& n) {
  if (!n.is_integer()) throw Error(ErrorKind::NonIntegral, "binom4 of " + n.str());
  return binom4(n.num());
}

}  // namespace pezzo
