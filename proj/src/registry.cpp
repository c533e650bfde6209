#include "pezzo/registry.hpp"
#include "pezzo/error.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace pezzo {

using nlohmann::json;

bool Congruence::holds(std::int64_t v) const {
  return v >= min && mod(v - residue, modulus) == 0;
}

std::string Congruence::str() const {
  std::ostringstream os;
  os << param;
  if (modulus > 1) {
    os << "=" << modulus << "n";
    if (residue) os << "+" << residue;
    os << ", ";
  } else {
    os << ">=" << min;
    return os.str();
  }
  os << param << ">=" << min;
  return os.str();
}

const ParamExpr& Cell::value() const {
  if (corrected) return *corrected;
  if (printed) return *printed;
  throw Error(ErrorKind::UnknownEntry, "empty table cell");
}

std::vector<std::string> RegistryEntry::params() const {
  std::set<std::string> s;
  for (const auto& c : congruence) s.insert(c.param);
  return {s.begin(), s.end()};
}

bool RegistryEntry::admissible(const Params& p) const {
  for (const auto& c : congruence) {
    auto it = p.find(c.param);
    if (it == p.end() || !it->second.is_integer()) return false;
    if (!c.holds(it->second.to_i64())) return false;
  }
  for (const auto& [k, v] : p) {
    (void)v;
    if (std::none_of(congruence.begin(), congruence.end(), [&](const Congruence& c) { return c.param == k; }))
      return false;
  }
  return true;
}

std::vector<Params> RegistryEntry::first_admissible(std::size_t n) const {
  if (congruence.empty()) return {Params{}};
  // per-parameter candidate values
  std::map<std::string, std::vector<std::int64_t>> values;
  for (const auto& name : params()) {
    std::vector<std::int64_t> vs;
    for (std::int64_t v = 1; vs.size() < n; ++v) {
      bool ok = true;
      for (const auto& c : congruence)
        if (c.param == name && !c.holds(v)) ok = false;
      if (ok) vs.push_back(v);
    }
    values[name] = vs;
  }
  std::vector<Params> all{Params{}};
  for (const auto& [name, vs] : values) {
    std::vector<Params> next;
    for (const auto& p : all)
      for (auto v : vs) {
        Params q = p;
        q[name] = Rat(static_cast<long long>(v));
        next.push_back(q);
      }
    all = std::move(next);
  }
  auto total = [](const Params& p) {
    Rat s(0);
    for (const auto& [k, v] : p) {
      (void)k;
      s = s + v;
    }
    return s;
  };
  std::stable_sort(all.begin(), all.end(), [&](const Params& a, const Params& b) {
    Rat sa = total(a), sb = total(b);
    if (sa != sb) return sa < sb;
    return a < b;
  });
  if (all.size() > n) all.resize(n);
  return all;
}

Format RegistryEntry::format_at(const Params& p) const {
  std::vector<Rat> w;
  for (const auto& e : weights) w.push_back(e.eval(p));
  if (format == FormatKind::Grass) {
    if (w.size() != 5) throw Error(ErrorKind::ValidationError, id + ": Grass entries need 5 weights");
    return make_grass({w[0], w[1], w[2], w[3], w[4]});
  }
  if (w.size() != 6) throw Error(ErrorKind::ValidationError, id + ": Segre entries need 3+3 weights");
  return make_segre({w[0], w[1], w[2]}, {w[3], w[4], w[5]});
}

namespace {
std::vector<std::int64_t> eval_list(const std::vector<ParamExpr>& es, const Params& p) {
  std::vector<std::int64_t> out;
  for (const auto& e : es) out.push_back(e.eval(p).to_i64());
  for (std::size_t i = 0; i < es.size(); ++i)
    if (!es[i].eval(p).is_integer())
      throw Error(ErrorKind::NonIntegral, "\"" + es[i].str() + "\" is not integral at " + params_str(p));
  return out;
}
}  // namespace

FamilyDescriptor RegistryEntry::instantiate(const Params& p) const {
  if (!admissible(p)) {
    std::string rule;
    for (const auto& c : congruence) rule += (rule.empty() ? "" : "; ") + c.str();
    throw Error(ErrorKind::InadmissibleParameter,
                id + " at " + params_str(p) + " (needs " + (rule.empty() ? "no parameters" : rule) + ")");
  }
  return build_family(format_at(p), eval_list(cones, p), eval_list(sections, p));
}

namespace {
Basket eval_basket(const std::vector<BasketTerm>& terms, const Params& p) {
  Basket b;
  for (const auto& t : terms) {
    auto r = t.r.eval_int(p);
    auto a = t.a.eval_int(p);
    auto bb = t.b.eval_int(p);
    auto m = t.mult.eval_int(p);
    b.add(normalize(static_cast<std::int64_t>(r), static_cast<std::int64_t>(a), static_cast<std::int64_t>(bb)),
          static_cast<std::int64_t>(m));
  }
  return b;
}
}  // namespace

Basket RegistryEntry::basket_at(const Params& p) const { return eval_basket(basket, p); }

Basket RegistryEntry::printed_basket_at(const Params& p) const {
  return eval_basket(basket_printed.empty() ? basket : basket_printed, p);
}

std::vector<std::int64_t> RegistryEntry::ambient_at(const Params& p) const {
  auto v = eval_list(ambient, p);
  std::sort(v.begin(), v.end());
  return v;
}

std::string RegistryEntry::label(const Params& p) const {
  if (p.empty()) return id;
  return id + " " + params_str(p);
}

std::string params_str(const Params& p) {
  std::string s;
  for (const auto& [k, v] : p) s += (s.empty() ? "" : " ") + k + "=" + v.str();
  return s;
}

// ---------------------------------------------------------------- JSON

namespace {

[[noreturn]] void schema(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::SchemaError, where + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) schema(where, std::string("missing field '") + key + "'");
  return j.at(key);
}

ParamExpr expr_of(const json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return ParamExpr::parse(std::to_string(j.get<long long>()));
    if (j.is_string()) return ParamExpr::parse(j.get<std::string>());
  } catch (const Error& e) {
    schema(where, e.what());
  }
  schema(where, "expected an expression string");
}

std::vector<ParamExpr> exprs_of(const json& j, const std::string& where) {
  if (!j.is_array()) schema(where, "expected an array");
  std::vector<ParamExpr> out;
  for (const auto& e : j) out.push_back(expr_of(e, where));
  return out;
}

json exprs_json(const std::vector<ParamExpr>& es) {
  json a = json::array();
  for (const auto& e : es) a.push_back(e.str());
  return a;
}

Cell cell_of(const json& j, const std::string& where) {
  if (!j.is_object()) schema(where, "expected an object");
  Cell c;
  if (j.contains("printed") && !j["printed"].is_null()) c.printed = expr_of(j["printed"], where + ".printed");
  if (j.contains("corrected")) c.corrected = expr_of(j["corrected"], where + ".corrected");
  if (j.contains("note")) c.note = j["note"].get<std::string>();
  return c;
}

json cell_json(const Cell& c) {
  json j = json::object();
  j["printed"] = c.printed ? json(c.printed->str()) : json(nullptr);
  if (c.corrected) j["corrected"] = c.corrected->str();
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

std::int64_t int_of(const json& j, const std::string& where) {
  if (!j.is_number_integer()) schema(where, "expected an integer");
  return j.get<std::int64_t>();
}

std::vector<BasketTerm> basket_of(const json& bj, const std::string& where) {
  if (!bj.is_array()) schema(where, "basket must be an array");
  std::vector<BasketTerm> out;
  for (const auto& t : bj) {
    BasketTerm bt;
    bt.r = expr_of(field(t, "r", where), where + ".r");
    bt.a = expr_of(field(t, "a", where), where + ".a");
    bt.b = expr_of(field(t, "b", where), where + ".b");
    bt.mult = t.contains("mult") ? expr_of(t["mult"], where + ".mult") : ParamExpr::parse("1");
    out.push_back(bt);
  }
  return out;
}

json basket_json(const std::vector<BasketTerm>& terms) {
  json b = json::array();
  for (const auto& t : terms)
    b.push_back({{"r", t.r.str()}, {"a", t.a.str()}, {"b", t.b.str()}, {"mult", t.mult.str()}});
  return b;
}

RegistryEntry entry_of(const json& j, const std::string& where0) {
  RegistryEntry e;
  if (!j.is_object()) schema(where0, "entry must be an object");
  const auto& idj = field(j, "id", where0);
  if (!idj.is_string()) schema(where0, "id must be a string");
  e.id = idj.get<std::string>();
  const std::string where = e.id;
  e.table = static_cast<int>(int_of(field(j, "table", where), where + ".table"));
  if (j.contains("row")) e.row = static_cast<int>(int_of(j["row"], where + ".row"));
  const auto& fj = field(j, "format", where);
  if (!fj.is_string()) schema(where, "format must be a string");
  try {
    e.format = parse_format_kind(fj.get<std::string>());
  } catch (const Error& ex) {
    schema(where, ex.what());
  }
  if (e.format == FormatKind::Grass) {
    e.weights = exprs_of(field(j, "weights", where), where + ".weights");
  } else {
    auto a = exprs_of(field(j, "a", where), where + ".a");
    auto b = exprs_of(field(j, "b", where), where + ".b");
    if (a.size() != 3 || b.size() != 3) schema(where, "a and b need three entries each");
    e.weights = a;
    e.weights.insert(e.weights.end(), b.begin(), b.end());
  }
  e.cones = exprs_of(field(j, "cones", where), where + ".cones");
  e.sections = exprs_of(field(j, "sections", where), where + ".sections");
  e.ambient = exprs_of(field(j, "ambient", where), where + ".ambient");
  e.index = int_of(field(j, "index", where), where + ".index");
  const auto& cj = field(j, "congruence", where);
  if (!cj.is_array()) schema(where, "congruence must be an array");
  for (const auto& c : cj) {
    Congruence g;
    const auto& pj = field(c, "param", where + ".congruence");
    if (!pj.is_string()) schema(where, "congruence param must be a string");
    g.param = pj.get<std::string>();
    g.modulus = int_of(field(c, "modulus", where), where + ".congruence.modulus");
    g.residue = int_of(field(c, "residue", where), where + ".congruence.residue");
    g.min = int_of(field(c, "min", where), where + ".congruence.min");
    if (g.modulus < 1) schema(where, "congruence modulus must be positive");
    e.congruence.push_back(g);
  }
  e.basket = basket_of(field(j, "basket", where), where + ".basket");
  if (j.contains("basket_printed")) e.basket_printed = basket_of(j["basket_printed"], where + ".basket_printed");
  if (j.contains("basket_note")) e.basket_note = j["basket_note"].get<std::string>();
  e.minus_k2 = cell_of(field(j, "minus_k2", where), where + ".minus_k2");
  e.h0 = cell_of(field(j, "h0", where), where + ".h0");
  if (j.contains("negative_control")) e.negative_control = j["negative_control"].get<bool>();
  if (j.contains("note")) e.note = j["note"].get<std::string>();
  // every expression may only use declared parameters
  std::set<std::string> declared;
  for (const auto& c : e.congruence) declared.insert(c.param);
  auto check_vars = [&](const ParamExpr& x) {
    for (const auto& v : x.variables())
      if (!declared.count(v)) schema(where, "undeclared parameter '" + v + "' in \"" + x.str() + "\"");
  };
  for (const auto* list : {&e.weights, &e.cones, &e.sections, &e.ambient})
    for (const auto& x : *list) check_vars(x);
  for (const auto* terms : {&e.basket, &e.basket_printed})
    for (const auto& t : *terms)
      for (const auto* x : {&t.r, &t.a, &t.b, &t.mult}) check_vars(*x);
  return e;
}

json entry_json(const RegistryEntry& e) {
  json j = json::object();
  j["id"] = e.id;
  j["table"] = e.table;
  if (e.row) j["row"] = e.row;
  j["format"] = to_string(e.format);
  if (e.format == FormatKind::Grass) {
    j["weights"] = exprs_json(e.weights);
  } else {
    j["a"] = exprs_json({e.weights.begin(), e.weights.begin() + 3});
    j["b"] = exprs_json({e.weights.begin() + 3, e.weights.end()});
  }
  j["cones"] = exprs_json(e.cones);
  j["sections"] = exprs_json(e.sections);
  j["ambient"] = exprs_json(e.ambient);
  j["index"] = e.index;
  json c = json::array();
  for (const auto& g : e.congruence)
    c.push_back({{"param", g.param}, {"modulus", g.modulus}, {"residue", g.residue}, {"min", g.min}});
  j["congruence"] = c;
  j["basket"] = basket_json(e.basket);
  if (!e.basket_printed.empty()) j["basket_printed"] = basket_json(e.basket_printed);
  if (!e.basket_note.empty()) j["basket_note"] = e.basket_note;
  j["minus_k2"] = cell_json(e.minus_k2);
  j["h0"] = cell_json(e.h0);
  if (e.negative_control) j["negative_control"] = true;
  if (!e.note.empty()) j["note"] = e.note;
  return j;
}

// Instantiation smoke test at the smallest admissible parameter.
void validate(const RegistryEntry& e) {
  auto fail = [&](const std::string& why) { throw Error(ErrorKind::ValidationError, e.id + ": " + why); };
  auto ps = e.first_admissible(1);
  if (ps.empty()) fail("no admissible parameter");
  const Params& p = ps.front();
  try {
    for (const auto& w : e.ambient)
      if (w.eval(p) <= Rat(0)) fail("ambient weight \"" + w.str() + "\" is not positive at " + params_str(p));
    FamilyDescriptor f = e.instantiate(p);
    if (f.ambient.weights != e.ambient_at(p))
      fail("instantiates to " + f.ambient.str() + ", table says " + WeightedSpace(e.ambient_at(p)).str());
    if (f.fano_index != e.index)
      fail("Fano index " + std::to_string(f.fano_index) + ", table says " + std::to_string(e.index));
    e.basket_at(p);
    e.printed_basket_at(p);
    if (e.minus_k2.present()) e.minus_k2.value().eval(p);
    if (e.h0.present()) e.h0.value().eval(p);
  } catch (const Error& ex) {
    if (ex.kind() == ErrorKind::ValidationError) throw;
    fail(std::string(ex.what()) + " at " + params_str(p));
  }
}

}  // namespace

Registry Registry::from_json(const json& j) {
  Registry reg;
  if (!j.is_object()) schema("registry", "top level must be an object");
  for (const char* key : {"models", "sporadics"}) {
    const auto& arr = field(j, key, "registry");
    if (!arr.is_array()) schema("registry", std::string(key) + " must be an array");
    for (std::size_t i = 0; i < arr.size(); ++i)
      reg.entries_.push_back(entry_of(arr[i], std::string(key) + "[" + std::to_string(i) + "]"));
  }
  std::set<std::string> seen;
  for (const auto& e : reg.entries_) {
    if (!seen.insert(e.id).second) throw Error(ErrorKind::ValidationError, e.id + ": duplicate id");
    validate(e);
  }
  if (std::none_of(reg.entries_.begin(), reg.entries_.end(), [](const auto& e) { return e.negative_control; }))
    reg.warnings_.push_back("registry has no negative-control entry");
  return reg;
}

Registry Registry::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::SchemaError, "cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& ex) {
    throw Error(ErrorKind::SchemaError, path + ": " + ex.what());
  }
  return from_json(j);
}

json Registry::to_json() const {
  json models = json::array(), sporadics = json::array();
  for (const auto& e : entries_) (e.parametric() ? models : sporadics).push_back(entry_json(e));
  return {{"models", models}, {"sporadics", sporadics}};
}

const RegistryEntry* Registry::find_if_present(const std::string& id) const {
  for (const auto& e : entries_)
    if (e.id == id) return &e;
  return nullptr;
}

const RegistryEntry& Registry::find(const std::string& id) const {
  if (const auto* e = find_if_present(id)) return *e;
  throw Error(ErrorKind::UnknownEntry, "no registry entry " + id);
}

std::vector<const RegistryEntry*> Registry::table(int t) const {
  std::vector<const RegistryEntry*> out;
  for (const auto& e : entries_)
    if (e.table == t) out.push_back(&e);
  return out;
}

std::string default_registry_path() { return std::string(PEZZO_DATA_DIR) + "/registry.json"; }

}  // namespace pezzo
