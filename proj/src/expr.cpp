#include "pezzo/expr.hpp"
#include "pezzo/error.hpp"

#include <cctype>
#include <set>

namespace pezzo {

struct ParamExpr::Node {
  char op = 0;  // 'n' number, 'v' variable, '~' negate, or a binary operator
  Rat value;
  std::string name;
  std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using NodeP = std::shared_ptr<const ParamExpr::Node>;

NodeP leaf_num(Rat v) {
  auto n = std::make_shared<ParamExpr::Node>();
  n->op = 'n';
  n->value = std::move(v);
  return n;
}

NodeP make(char op, NodeP a, NodeP b = nullptr) {
  auto n = std::make_shared<ParamExpr::Node>();
  n->op = op;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}

// expr   := term (('+'|'-') term)*
// term   := unary (('*'|'/') unary)*
// unary  := '-' unary | power
// power  := atom ('^' unary)?
// atom   := number | name | '(' expr ')'
class Parser {
public:
  explicit Parser(const std::string& s) : s_(s) {}

  NodeP parse() {
    NodeP e = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return e;
  }

private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::ParseError, "expression \"" + s_ + "\" at " + std::to_string(i_) + ": " + why);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  NodeP expr() {
    NodeP a = term();
    for (;;) {
      if (eat('+')) a = make('+', a, term());
      else if (eat('-')) a = make('-', a, term());
      else return a;
    }
  }
  NodeP term() {
    NodeP a = unary();
    for (;;) {
      if (eat('*')) a = make('*', a, unary());
      else if (eat('/')) a = make('/', a, unary());
      else return a;
    }
  }
  NodeP unary() {
    if (eat('-')) return make('~', unary());
    if (eat('+')) return unary();
    return power();
  }
  NodeP power() {
    NodeP a = atom();
    if (eat('^')) return make('^', a, unary());
    return a;
  }
  NodeP atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end");
    if (eat('(')) {
      NodeP e = expr();
      if (!eat(')')) fail("missing ')'");
      return e;
    }
    char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      NodeP n = leaf_num(Rat(Int(s_.substr(i_, j - i_))));
      i_ = j;
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < s_.size() && std::isalnum(static_cast<unsigned char>(s_[j]))) ++j;
      auto n = std::make_shared<ParamExpr::Node>();
      n->op = 'v';
      n->name = s_.substr(i_, j - i_);
      i_ = j;
      return n;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

Rat eval_node(const ParamExpr::Node& n, const Params& p) {
  switch (n.op) {
    case 'n': return n.value;
    case 'v': {
      auto it = p.find(n.name);
      if (it == p.end()) throw Error(ErrorKind::UnknownEntry, "unbound parameter " + n.name);
      return it->second;
    }
    case '~': return -eval_node(*n.lhs, p);
    case '+': return eval_node(*n.lhs, p) + eval_node(*n.rhs, p);
    case '-': return eval_node(*n.lhs, p) - eval_node(*n.rhs, p);
    case '*': return eval_node(*n.lhs, p) * eval_node(*n.rhs, p);
    case '/': {
      Rat d = eval_node(*n.rhs, p);
      if (d.is_zero()) throw Error(ErrorKind::NotInvertible, "division by zero");
      return eval_node(*n.lhs, p) / d;
    }
    case '^': {
      Rat base = eval_node(*n.lhs, p);
      Rat e = eval_node(*n.rhs, p);
      if (!e.is_integer()) throw Error(ErrorKind::NonIntegralExponent, "exponent " + e.str());
      std::int64_t k = e.to_i64();
      Rat out(1);
      Rat b = k < 0 ? Rat(1) / base : base;
      for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) out = out * b;
      return out;
    }
  }
  return Rat(0);
}

void collect(const ParamExpr::Node& n, std::set<std::string>& out) {
  if (n.op == 'v') out.insert(n.name);
  if (n.lhs) collect(*n.lhs, out);
  if (n.rhs) collect(*n.rhs, out);
}

}  // namespace

ParamExpr ParamExpr::parse(const std::string& src) {
  ParamExpr e;
  e.src_ = src;
  e.root_ = Parser(src).parse();
  return e;
}

ParamExpr ParamExpr::constant(const Rat& v) {
  ParamExpr e;
  e.src_ = v.str();
  e.root_ = leaf_num(v);
  return e;
}

Rat ParamExpr::eval(const Params& p) const {
  if (!root_) throw Error(ErrorKind::ParseError, "empty expression");
  return eval_node(*root_, p);
}

Int ParamExpr::eval_int(const Params& p) const {
  Rat v = eval(p);
  if (!v.is_integer()) throw Error(ErrorKind::NonIntegral, "\"" + src_ + "\" evaluates to " + v.str());
  return v.num();
}

std::vector<std::string> ParamExpr::variables() const {
  std::set<std::string> s;
  if (root_) collect(*root_, s);
  return {s.begin(), s.end()};
}

}  // namespace pezzo
