#pragma once

// Rational expressions in the table parameters r and y, as written in the
// registry: "2*r-1", "(3*r+1)/(r*(3*r-2))", "r^2+y".

#include "pezzo/arith.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace pezzo {

using Params = std::map<std::string, Rat>;  // "r" -> 7, "y" -> 6

class ParamExpr {
public:
  ParamExpr() = default;
  static ParamExpr parse(const std::string& src);  // ParseError
  static ParamExpr constant(const Rat& v);

  // UnknownEntry for an unbound variable, NotInvertible on division by zero.
  Rat eval(const Params& p) const;
  Int eval_int(const Params& p) const;  // NonIntegral unless integral

  const std::string& str() const { return src_; }
  bool empty() const { return !root_; }
  // Variables appearing in the expression, sorted.
  std::vector<std::string> variables() const;

  friend bool operator==(const ParamExpr& a, const ParamExpr& b) { return a.src_ == b.src_; }

  struct Node;

private:
  std::string src_;
  std::shared_ptr<const Node> root_;
};

}  // namespace pezzo
