#include "pezzo/report.hpp"

#include "pezzo/error.hpp"

#include <chrono>
#include <numeric>
#include <sstream>

namespace pezzo {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::int64_t sum(const std::vector<std::int64_t>& v) {
  return std::accumulate(v.begin(), v.end(), std::int64_t{0});
}

Rat formula_degree(const FamilyDescriptor& f) {
  Rat d = f.kind() == FormatKind::Grass ? deg_grass(std::get<GrassWeights>(f.format))
                                        : deg_segre(std::get<SegreWeights>(f.format));
  for (auto s : f.sections) d = d * Rat(s);
  for (auto c : f.cones) d = d / Rat(c);
  return Rat(f.fano_index * f.fano_index) * d;
}

CheckRecord compare(std::string name, const std::string& expected, const std::string& actual) {
  CheckRecord c;
  c.check = std::move(name);
  c.expected = expected;
  c.actual = actual;
  c.status = expected == actual ? CheckStatus::Pass : CheckStatus::Fail;
  return c;
}

}  // namespace

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

nlohmann::json CheckRecord::to_json() const {
  nlohmann::json j{{"check", check}, {"expected", expected}, {"actual", actual},
                   {"status", to_string(status)}, {"timing", seconds}, {"seeds", seeds}};
  if (!note.empty()) j["note"] = note;
  return j;
}

CheckStatus VerifyReport::overall() const {
  CheckStatus s = CheckStatus::Pass;
  for (const auto& c : checks) {
    if (c.status == CheckStatus::Fail) return CheckStatus::Fail;
    if (c.status == CheckStatus::Inconclusive) s = CheckStatus::Inconclusive;
  }
  return s;
}

int VerifyReport::exit_code() const {
  switch (overall()) {
    case CheckStatus::Pass: return 0;
    case CheckStatus::Fail: return 1;
    case CheckStatus::Inconclusive: return 2;
  }
  return 2;
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json j{{"target", target}, {"status", to_string(overall())}};
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) j["checks"].push_back(c.to_json());
  return j;
}

std::string VerifyReport::text() const {
  std::ostringstream os;
  os << target << "\n";
  for (const auto& c : checks) {
    os << "  " << to_string(c.status) << "  " << c.check << ": " << c.actual;
    if (c.status != CheckStatus::Pass) os << " (expected " << c.expected << ")";
    if (!c.note.empty()) os << "  [" << c.note << "]";
    os << "\n";
  }
  os << to_string(overall()) << "\n";
  return os.str();
}

VerifyReport verify_entry(const RegistryEntry& e, const Params& p, const VerifyOptions& opt) {
  VerifyReport rep;
  rep.target = e.label(p);
  auto t0 = Clock::now();
  FamilyDescriptor f = e.instantiate(p);

  auto push = [&](CheckRecord c, Clock::time_point start) {
    c.seconds = since(start);
    rep.checks.push_back(std::move(c));
  };

  push(compare("ambient", WeightedSpace(e.ambient_at(p)).str(), f.ambient.str()), t0);
  push(compare("index", std::to_string(e.index), std::to_string(f.fano_index)), Clock::now());

  auto t = Clock::now();
  push(compare("adjunction", std::to_string(sum(f.ambient.weights) - f.fano_index),
               std::to_string(adjunction_number(f.hilbert))),
       t);

  t = Clock::now();
  {
    CheckRecord c;
    c.check = "symmetry";
    // N(t) = (-1)^codim t^q N(1/t)
    c.expected = f.codimension() % 2 ? "antisymmetric" : "symmetric";
    try {
      int s = gorenstein_symmetry(f.hilbert);
      c.actual = s > 0 ? "symmetric" : "antisymmetric";
      c.status = c.actual == c.expected ? CheckStatus::Pass : CheckStatus::Fail;
    } catch (const Error& ex) {
      c.actual = ex.what();
      c.status = CheckStatus::Fail;
    }
    push(c, t);
  }

  t = Clock::now();
  Rat k2 = anticanonical_degree(f);
  if (e.minus_k2.present()) {
    auto c = compare("minus_k2", e.minus_k2.value().eval(p).str(), k2.str());
    if (e.minus_k2.flagged()) c.note = "printed " + e.minus_k2.printed->eval(p).str() + ", corrected";
    push(c, t);
  }
  push(compare("minus_k2_formula", k2.str(), formula_degree(f).str()), Clock::now());

  t = Clock::now();
  Int h1 = first_plurigenus(f);
  if (e.h0.present()) {
    auto c = compare("h0", e.h0.value().eval(p).str(), Rat(h1).str());
    if (e.h0.flagged() && e.h0.printed) c.note = "printed " + e.h0.printed->eval(p).str() + ", corrected";
    push(c, t);
  }

  t = Clock::now();
  {
    auto bc = basket_verify(f, e.basket_at(p), opt.strata);
    CheckRecord c;
    c.check = "basket";
    c.expected = bc.claimed.str();
    c.actual = bc.status == BasketStatus::Ok ? bc.computed.str() : to_string(bc.status);
    c.status = bc.match ? CheckStatus::Pass
                        : (bc.status == BasketStatus::Undetermined ? CheckStatus::Inconclusive : CheckStatus::Fail);
    c.seeds = {opt.strata.seed};
    for (const auto& pr : bc.problems) c.note += (c.note.empty() ? "" : "; ") + pr;
    if (e.basket_flagged()) {
      std::string printed = "printed " + e.printed_basket_at(p).str();
      c.note = c.note.empty() ? printed : c.note + "; " + printed;
    }
    push(c, t);
  }

  if (opt.quasismooth) {
    t = Clock::now();
    auto v = quasismooth_check(f, opt.qs);
    CheckRecord c;
    c.check = "quasismooth";
    c.expected = opt.expect_fail ? to_string(Verdict::NotQuasismooth) : to_string(Verdict::Quasismooth);
    c.actual = to_string(v.verdict);
    if (v.verdict == Verdict::Inconclusive)
      c.status = CheckStatus::Inconclusive;
    else
      c.status = c.expected == c.actual ? CheckStatus::Pass : CheckStatus::Fail;
    std::ostringstream dims;
    dims << "prime " << v.prime << (v.rational ? " (over Q)" : "") << ", dims";
    for (const auto& tr : v.trials) {
      c.seeds.push_back(tr.seed);
      dims << " " << tr.dimension;
      if (!tr.error.empty()) dims << " (" << tr.error << ")";
    }
    c.note = dims.str();
    push(c, t);
  }
  return rep;
}

FamilyInfo family_info(const RegistryEntry& e, const Params& p) {
  FamilyInfo info;
  info.label = e.label(p);
  info.family = e.instantiate(p);
  info.syzygy = syzygy_matrix(info.family.format).render();
  if (e.minus_k2.present()) info.minus_k2_closed = e.minus_k2.value().eval(p);
  info.minus_k2_pipeline = anticanonical_degree(info.family);
  info.minus_k2_formula = formula_degree(info.family);
  info.h0 = anticanonical_sections(info.family);
  info.first_plurigenus = first_plurigenus(info.family);
  info.basket = e.basket_at(p);
  info.toric_obstruction = toric_obstruction(info.family);
  return info;
}

nlohmann::json FamilyInfo::to_json() const {
  nlohmann::json j;
  j["label"] = label;
  j["format"] = to_string(family.kind());
  j["weights"] = format_str(family.format);
  j["cones"] = family.cones;
  j["sections"] = family.sections;
  j["ambient"] = family.ambient.str();
  j["syzygy_matrix"] = syzygy;
  j["equation_degrees"] = family.equation_degrees;
  j["index"] = family.fano_index;
  j["minus_k2_closed"] = minus_k2_closed ? nlohmann::json(minus_k2_closed->str()) : nlohmann::json(nullptr);
  j["minus_k2_pipeline"] = minus_k2_pipeline.str();
  j["minus_k2_formula"] = minus_k2_formula.str();
  j["h0"] = h0.str();
  j["first_plurigenus"] = first_plurigenus.str();
  j["basket"] = basket.str();
  j["toric_obstruction"] = toric_obstruction;
  return j;
}

std::string FamilyInfo::text() const {
  std::ostringstream os;
  os << label << "\n";
  os << "  format        " << to_string(family.kind()) << " " << format_str(family.format) << "\n";
  os << "  ambient       " << family.ambient.str() << "\n";
  os << "  syzygy matrix " << syzygy << "\n";
  os << "  equations     degrees";
  for (auto d : family.equation_degrees) os << " " << d;
  os << "\n";
  os << "  index         " << family.fano_index << "\n";
  os << "  -K^2          " << minus_k2_pipeline.str() << " (pipeline), "
     << (minus_k2_closed ? minus_k2_closed->str() : std::string("-")) << " (closed form)\n";
  os << "  h0(-K)        " << h0.str() << " (t^" << family.fano_index << "), t^1 coefficient "
     << first_plurigenus.str() << "\n";
  os << "  basket        " << basket.str() << "\n";
  os << "  toric obstr.  " << (toric_obstruction ? "yes" : "no") << "\n";
  return os.str();
}

// ---- tables

namespace {

TableCell cell(std::string derived, const std::optional<std::string>& stored,
               const std::optional<std::string>& printed) {
  TableCell c;
  c.mismatch = stored && *stored != derived;
  if (printed && *printed != derived) c.printed = *printed;
  c.value = std::move(derived);
  return c;
}

std::string cell_text(const TableCell& c) {
  std::string s = c.value;
  if (c.printed) s += " [printed: " + *c.printed + "]";
  if (c.mismatch) s += " [MISMATCH]";
  return s;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

struct Job {
  const RegistryEntry* entry;
  Params params;
};

std::vector<TableCell> derive_row(const Job& job, bool sporadic) {
  const auto& e = *job.entry;
  const auto& p = job.params;
  std::vector<TableCell> row;
  FamilyDescriptor f = e.instantiate(p);

  if (sporadic)
    row.push_back(TableCell{std::to_string(e.row), std::nullopt, false});
  else {
    row.push_back(TableCell{e.id, std::nullopt, false});
    row.push_back(TableCell{params_str(p), std::nullopt, false});
  }
  row.push_back(cell(format_str(f.format), std::nullopt, std::nullopt));
  row.push_back(cell(f.ambient.str(), WeightedSpace(e.ambient_at(p)).str(), std::nullopt));
  row.push_back(cell(std::to_string(f.fano_index), std::to_string(e.index), std::nullopt));

  auto b = strata_basket(f);
  std::string derived_basket = b.ok() ? b.basket.str() : to_string(b.status);
  row.push_back(cell(derived_basket, e.basket_at(p).str(), e.printed_basket_at(p).str()));

  auto eval_cell = [&](const Cell& c, std::string derived) {
    std::optional<std::string> stored, printed;
    if (c.present()) stored = c.value().eval(p).str();
    if (c.printed) printed = c.printed->eval(p).str();
    return cell(std::move(derived), stored, printed);
  };
  row.push_back(eval_cell(e.minus_k2, anticanonical_degree(f).str()));
  row.push_back(eval_cell(e.h0, first_plurigenus(f).str()));
  return row;
}

}  // namespace

std::size_t Table::flagged() const {
  std::size_t n = 0;
  for (const auto& r : rows)
    for (const auto& c : r)
      if (c.printed) ++n;
  return n;
}

std::size_t Table::mismatches() const {
  std::size_t n = 0;
  for (const auto& r : rows)
    for (const auto& c : r)
      if (c.mismatch) ++n;
  return n;
}

std::string Table::markdown() const {
  std::ostringstream os;
  os << "Table " << id << "\n\n|";
  for (const auto& h : headers) os << " " << h << " |";
  os << "\n|";
  for (std::size_t i = 0; i < headers.size(); ++i) os << "---|";
  os << "\n";
  for (const auto& r : rows) {
    os << "|";
    for (const auto& c : r) os << " " << cell_text(c) << " |";
    os << "\n";
  }
  os << "\n" << rows.size() << " rows, " << flagged() << " cells differ from the printed value, " << mismatches()
     << " mismatches\n";
  return os.str();
}

std::string Table::csv() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < headers.size(); ++i) os << (i ? "," : "") << csv_escape(headers[i]);
  os << "\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_escape(cell_text(r[i]));
    os << "\n";
  }
  return os.str();
}

nlohmann::json Table::to_json() const {
  nlohmann::json j;
  j["table"] = id;
  j["headers"] = headers;
  j["rows"] = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& c : r) {
      nlohmann::json cj{{"value", c.value}};
      if (c.printed) cj["printed"] = *c.printed;
      if (c.mismatch) cj["mismatch"] = true;
      row.push_back(cj);
    }
    j["rows"].push_back(row);
  }
  j["flagged"] = flagged();
  j["mismatches"] = mismatches();
  return j;
}

Table build_table(const Registry& reg, int id, std::size_t per_model, bool parallel) {
  if (id < 1 || id > 5) throw Error(ErrorKind::InvalidWeights, "table id must be 1..5");
  const bool sporadic = id == 3 || id == 4;
  Table t;
  t.id = id;
  if (sporadic)
    t.headers = {"Row", "Weights", "Ambient", "I", "Basket", "-K^2", "h0"};
  else
    t.headers = {"Model", "Params", "Weights", "Ambient", "I", "Basket", "-K^2", "h0"};

  std::vector<Job> jobs;
  for (const auto* e : reg.table(id))
    for (auto& p : e->first_admissible(per_model)) jobs.push_back(Job{e, p});

  std::vector<std::vector<TableCell>> rows(jobs.size());
  const long n = static_cast<long>(jobs.size());
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (long i = 0; i < n; ++i) {
    try {
      rows[i] = derive_row(jobs[i], sporadic);
    } catch (const std::exception& ex) {
      rows[i] = {TableCell{jobs[i].entry->label(jobs[i].params), std::nullopt, true},
                 TableCell{ex.what(), std::nullopt, true}};
    }
  }
  t.rows = std::move(rows);
  return t;
}

}  // namespace pezzo
