#include "pezzo/formats.hpp"
#include "pezzo/error.hpp"

#include <algorithm>
#include <sstream>

namespace pezzo {

const char* to_string(FormatKind k) { return k == FormatKind::Grass ? "grass" : "segre"; }

FormatKind parse_format_kind(const std::string& s) {
  if (s == "grass" || s == "wgr" || s == "pfaffian") return FormatKind::Grass;
  if (s == "segre" || s == "wp" || s == "minors") return FormatKind::Segre;
  throw Error(ErrorKind::ParseError, "unknown format '" + s + "'");
}

Rat GrassWeights::d() const {
  Rat s = 0;
  for (const auto& x : w) s += x;
  return s;
}

Rat SegreWeights::d() const {
  Rat s = 0;
  for (int i = 0; i < 3; ++i) s += a[i] + b[i];
  return s;
}

namespace {

void check_denominator(const Rat& r) {
  if (r.den() != 1 && r.den() != 2)
    throw Error(ErrorKind::InvalidWeights, "weight " + r.str() + " is not an integer or half integer");
}

std::int64_t integral(const Rat& r, const char* what) {
  if (!r.is_integer()) throw Error(ErrorKind::InvalidWeights, std::string(what) + " " + r.str() + " is not integral");
  return r.to_i64();
}

}  // namespace

GrassWeights make_grass(std::array<Rat, 5> w) {
  for (const auto& x : w) check_denominator(x);
  std::sort(w.begin(), w.end());
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      Rat s = w[i] + w[j];
      if (integral(s, "w_i + w_j") <= 0) throw Error(ErrorKind::InvalidWeights, "w_i + w_j must be positive");
    }
  return GrassWeights{w};
}

SegreWeights make_segre(std::array<Rat, 3> a, std::array<Rat, 3> b) {
  for (const auto& x : a) check_denominator(x);
  for (const auto& x : b) check_denominator(x);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) integral(a[i] + b[j], "a_i + b_j");
  if (a[0] + b[0] <= 0) throw Error(ErrorKind::InvalidWeights, "a_1 + b_1 must be positive");
  return SegreWeights{a, b};
}

FormatKind kind_of(const Format& f) {
  return std::holds_alternative<GrassWeights>(f) ? FormatKind::Grass : FormatKind::Segre;
}

std::string format_str(const Format& f) {
  std::ostringstream os;
  auto list = [&](const auto& arr) {
    os << "(";
    for (std::size_t i = 0; i < arr.size(); ++i) os << (i ? "," : "") << arr[i];
    os << ")";
  };
  if (auto g = std::get_if<GrassWeights>(&f)) {
    os << "w=";
    list(g->w);
  } else {
    const auto& s = std::get<SegreWeights>(f);
    os << "a=";
    list(s.a);
    os << " b=";
    list(s.b);
  }
  return os.str();
}

std::vector<std::int64_t> embedding_weights(const Format& f) {
  std::vector<std::int64_t> out;
  if (auto g = std::get_if<GrassWeights>(&f)) {
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) out.push_back((g->w[i] + g->w[j]).to_i64());
  } else {
    const auto& s = std::get<SegreWeights>(f);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) out.push_back((s.a[i] + s.b[j]).to_i64());
  }
  return out;
}

std::vector<std::int64_t> format_equation_degrees(const Format& f) {
  std::vector<std::int64_t> out;
  if (auto g = std::get_if<GrassWeights>(&f)) {
    Rat d = g->d();
    for (const auto& x : g->w) out.push_back(integral(d - x, "d - w_i"));
  } else {
    const auto& s = std::get<SegreWeights>(f);
    for (int i = 0; i < 3; ++i)
      for (int k = i + 1; k < 3; ++k)
        for (int j = 0; j < 3; ++j)
          for (int l = j + 1; l < 3; ++l) out.push_back((s.a[i] + s.a[k] + s.b[j] + s.b[l]).to_i64());
  }
  std::sort(out.begin(), out.end());
  return out;
}

HilbertSeries format_series(const Format& f) {
  if (auto g = std::get_if<GrassWeights>(&f)) return hs_grass(g->w);
  const auto& s = std::get<SegreWeights>(f);
  return hs_segre(s.a, s.b);
}

SyzygyMatrix syzygy_matrix(const Format& f) {
  SyzygyMatrix m;
  m.kind = kind_of(f);
  if (auto g = std::get_if<GrassWeights>(&f)) {
    m.entries.assign(5, std::vector<std::int64_t>(5, 0));
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        if (i != j) m.entries[i][j] = (g->w[i] + g->w[j]).to_i64();
  } else {
    const auto& s = std::get<SegreWeights>(f);
    m.entries.assign(3, std::vector<std::int64_t>(3, 0));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m.entries[i][j] = (s.b[i] + s.a[j]).to_i64();
  }
  return m;
}

std::string SyzygyMatrix::render() const {
  std::ostringstream os;
  std::size_t n = entries.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t start = kind == FormatKind::Grass ? i + 1 : 0;
    if (start >= n) break;
    if (i) os << " / ";
    for (std::size_t j = start; j < n; ++j) os << (j > start ? " " : "") << entries[i][j];
  }
  return os.str();
}

std::string FamilyDescriptor::str() const {
  std::ostringstream os;
  os << to_string(kind()) << " " << format_str(format);
  if (!cones.empty()) {
    os << " cones={";
    for (std::size_t i = 0; i < cones.size(); ++i) os << (i ? "," : "") << cones[i];
    os << "}";
  }
  os << " sections={";
  for (std::size_t i = 0; i < sections.size(); ++i) os << (i ? "," : "") << sections[i];
  os << "} -> " << ambient.str() << " I=" << fano_index;
  return os.str();
}

FamilyDescriptor build_family(const Format& format, std::vector<std::int64_t> cones,
                              std::vector<std::int64_t> sections) {
  FamilyDescriptor f{format, std::move(cones), std::move(sections), {}, {}, 0, 0, {}};
  for (auto c : f.cones)
    if (c < 1) throw Error(ErrorKind::InvalidWeights, "cone weight must be positive");
  std::vector<std::int64_t> current = embedding_weights(format);
  current.insert(current.end(), f.cones.begin(), f.cones.end());
  for (auto e : f.sections) {
    auto it = std::find(current.begin(), current.end(), e);
    if (it == current.end())
      throw Error(ErrorKind::NotQuasilinear, "section degree " + std::to_string(e) + " is not an ambient weight");
    current.erase(it);
  }
  int ambient_dim = f.kind() == FormatKind::Grass ? 6 : 4;
  long dim = ambient_dim + static_cast<long>(f.cones.size()) - static_cast<long>(f.sections.size());
  if (dim != 2) throw Error(ErrorKind::WrongDimension, "family has dimension " + std::to_string(dim));
  f.ambient = WeightedSpace(current);
  f.equation_degrees = format_equation_degrees(format);

  std::int64_t cone_sum = 0, section_sum = 0;
  for (auto c : f.cones) cone_sum += c;
  for (auto e : f.sections) section_sum += e;
  Rat d = std::visit([](const auto& x) { return x.d(); }, format);
  Rat index = (f.kind() == FormatKind::Grass ? 2 * d : d) + Rat(cone_sum - section_sum);
  f.fano_index = integral(index, "Fano index");
  if (f.fano_index <= 0) throw Error(ErrorKind::NonFano, "Fano index " + std::to_string(f.fano_index));
  f.canonical_degree = -f.fano_index;

  HilbertSeries hs = format_series(format);
  for (auto c : f.cones) hs = hs_cone(hs, c);
  for (auto e : f.sections) hs = hs_cut(hs, e);
  f.hilbert = std::move(hs);
  return f;
}

Rat deg_grass(const GrassWeights& g) {
  Rat d = g.d();
  Int num = binom3(2 * d);
  for (const auto& x : g.w) num += binom3(d - x) - binom3(d + x);
  Int den = 1;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) den *= (g.w[i] + g.w[j]).to_int();
  return Rat(num, den);
}

Rat deg_segre(const SegreWeights& s) {
  Rat d = s.d();
  Int num = binom4(2 * d) + 4 * binom4(d);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i != j) num += binom4(d + s.b[i] - s.b[j]) + binom4(d + s.a[i] - s.a[j]);
      Rat alpha = s.a[i] + s.b[j];
      num -= binom4(d + alpha) + binom4(d - alpha);
    }
  Int den = 1;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) den *= (s.a[i] + s.b[j]).to_int();
  return Rat(num, den);
}

Rat anticanonical_degree(const FamilyDescriptor& f) {
  Rat k2 = Rat(f.fano_index * f.fano_index) * degree_limit(f.hilbert, 2);
  if (k2 <= 0) throw Error(ErrorKind::NonPositiveDegree, "-K^2 = " + k2.str());
  return k2;
}

Int anticanonical_sections(const FamilyDescriptor& f) {
  return expand(f.hilbert, f.fano_index)[static_cast<std::size_t>(f.fano_index)];
}

Int first_plurigenus(const FamilyDescriptor& f) { return expand(f.hilbert, 1)[1]; }

bool toric_obstruction(const FamilyDescriptor& f) { return anticanonical_sections(f) == 0; }

}  // namespace pezzo
