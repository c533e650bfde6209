// pezzo: info, verify, table and search over the model registry.
// Exit codes: 0 pass, 1 a check failed, 2 inconclusive or error.

#include "pezzo/error.hpp"
#include "pezzo/registry.hpp"
#include "pezzo/report.hpp"
#include "pezzo/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>

using namespace pezzo;

namespace {

struct Common {
  std::string registry = default_registry_path();
  std::string out = "text";
};

struct Target {
  std::string model;
  std::optional<long long> r, y;
  std::size_t count = 0;

  std::vector<Params> params(const RegistryEntry& e) const {
    if (!e.parametric()) return {Params{}};
    if (count > 0) return e.first_admissible(count);
    Params p;
    if (r) p["r"] = Rat(*r);
    if (y) p["y"] = Rat(*y);
    for (const auto& name : e.params())
      if (!p.count(name))
        throw Error(ErrorKind::InadmissibleParameter, e.id + " needs --" + name);
    for (const auto& [name, v] : p) {
      (void)v;
      auto ps = e.params();
      if (std::find(ps.begin(), ps.end(), name) == ps.end())
        throw Error(ErrorKind::InadmissibleParameter, e.id + " has no parameter " + name);
    }
    return {p};
  }
};

void add_target(CLI::App* cmd, Target& t) {
  cmd->add_option("--model", t.model, "registry id, e.g. Pf12, P21, T3-1");
  cmd->add_option("--r", t.r, "parameter r");
  cmd->add_option("--y", t.y, "parameter y");
}

void add_common(CLI::App* cmd, Common& c, const std::string& default_out) {
  c.out = default_out;
  cmd->add_option("--registry", c.registry, "registry JSON");
  cmd->add_option("--out", c.out, "output format")->check(CLI::IsMember({"text", "json", "csv", "md"}));
}

int run_info(const Common& c, const Target& t) {
  auto reg = Registry::load(c.registry);
  const auto& e = reg.find(t.model);
  nlohmann::json all = nlohmann::json::array();
  for (const auto& p : t.params(e)) {
    auto info = family_info(e, p);
    if (c.out == "json")
      all.push_back(info.to_json());
    else
      std::cout << info.text();
  }
  if (c.out == "json") std::cout << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
  return 0;
}

// A family given directly: {"format": "grass", "weights": [...], "cones": [...], "sections": [...]}
// with Segre weights as "a" and "b"; optional "index" and "basket" strings are not parsed.
RegistryEntry entry_from_family_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::SchemaError, "cannot open " + path);
  nlohmann::json j = nlohmann::json::parse(in);
  nlohmann::json wrapped = {{"models", nlohmann::json::array()}, {"sporadics", nlohmann::json::array()}};
  nlohmann::json e = j;
  if (!e.contains("id")) e["id"] = "family";
  if (!e.contains("table")) e["table"] = 0;
  for (const char* k : {"cones", "congruence"})
    if (!e.contains(k)) e[k] = nlohmann::json::array();
  for (const char* k : {"minus_k2", "h0"})
    if (!e.contains(k)) e[k] = nlohmann::json::object();
  if (!e.contains("index") || !e.contains("ambient")) {
    // fill the self-check fields from the pipeline
    Format fmt = [&]() -> Format {
      auto rats = [](const nlohmann::json& a) {
        std::vector<Rat> v;
        for (const auto& x : a) v.push_back(ParamExpr::parse(x.is_string() ? x.get<std::string>() : x.dump()).eval({}));
        return v;
      };
      if (parse_format_kind(e.at("format").get<std::string>()) == FormatKind::Grass) {
        auto w = rats(e.at("weights"));
        if (w.size() != 5) throw Error(ErrorKind::SchemaError, "grass needs five weights");
        return make_grass({w[0], w[1], w[2], w[3], w[4]});
      }
      auto a = rats(e.at("a")), b = rats(e.at("b"));
      if (a.size() != 3 || b.size() != 3) throw Error(ErrorKind::SchemaError, "segre needs a and b of length 3");
      return make_segre({a[0], a[1], a[2]}, {b[0], b[1], b[2]});
    }();
    auto f = build_family(fmt, e.value("cones", std::vector<std::int64_t>{}),
                          e.value("sections", std::vector<std::int64_t>{}));
    if (!e.contains("index")) e["index"] = f.fano_index;
    if (!e.contains("ambient")) e["ambient"] = f.ambient.weights;
    if (!e.contains("basket")) {
      auto b = strata_basket(f);
      nlohmann::json bj = nlohmann::json::array();
      for (const auto& [pt, m] : b.basket.points())
        bj.push_back({{"r", pt.r}, {"a", 1}, {"b", pt.bprime}, {"mult", m}});
      e["basket"] = bj;
    }
  }
  wrapped["sporadics"].push_back(e);
  return Registry::from_json(wrapped).entries().front();
}

int run_verify(const Common& c, const Target& t, const VerifyOptions& opt, bool all, const std::string& family) {
  std::vector<std::pair<RegistryEntry, Params>> jobs;
  std::optional<Registry> reg;
  if (!family.empty()) {
    jobs.emplace_back(entry_from_family_json(family), Params{});
  } else {
    reg = Registry::load(c.registry);
    if (all) {
      for (const auto& e : reg->entries())
        for (const auto& p : e.first_admissible(t.count ? t.count : 3)) jobs.emplace_back(e, p);
    } else {
      const auto& e = reg->find(t.model);
      for (const auto& p : t.params(e)) jobs.emplace_back(e, p);
    }
  }

  std::vector<VerifyReport> reports(jobs.size());
  std::vector<std::string> errors(jobs.size());
  VerifyOptions inner = opt;
  inner.qs.parallel = jobs.size() == 1;
  const long n = static_cast<long>(jobs.size());
#pragma omp parallel for schedule(dynamic, 1) if (n > 1)
  for (long i = 0; i < n; ++i) {
    try {
      VerifyOptions o = inner;
      if (jobs[i].first.negative_control && !opt.expect_fail && all) o.expect_fail = true;
      reports[i] = verify_entry(jobs[i].first, jobs[i].second, o);
    } catch (const std::exception& ex) {
      errors[i] = ex.what();
    }
  }

  int code = 0;
  nlohmann::json out = nlohmann::json::array();
  for (long i = 0; i < n; ++i) {
    if (!errors[i].empty()) {
      std::cerr << jobs[i].first.label(jobs[i].second) << ": " << errors[i] << "\n";
      code = std::max(code, 2);
      continue;
    }
    int e = reports[i].exit_code();
    // fail outranks inconclusive
    if (e == 1 || code == 1) code = 1; else code = std::max(code, e);
    if (c.out == "json")
      out.push_back(reports[i].to_json());
    else
      std::cout << reports[i].text();
  }
  if (c.out == "json") std::cout << (out.size() == 1 ? out[0] : out).dump(2) << "\n";
  return code;
}

int run_table(const Common& c, int id, std::size_t count) {
  auto reg = Registry::load(c.registry);
  Table t = build_table(reg, id, count);
  if (c.out == "json")
    std::cout << t.to_json().dump(2) << "\n";
  else if (c.out == "csv")
    std::cout << t.csv();
  else
    std::cout << t.markdown();
  return t.mismatches() == 0 ? 0 : 1;
}

int run_search(const Common& c, const SearchSpec& spec) {
  auto reg = Registry::load(c.registry);
  auto res = enumerate(spec, &reg);
  if (c.out == "json") {
    for (const auto& cand : res.candidates) std::cout << cand.to_json().dump() << "\n";
    std::cout << nlohmann::json{{"summary", summary_json(res)}}.dump() << "\n";
  } else if (c.out == "csv") {
    std::cout << "q,ambient,weights,cones,sections,basket,minus_k2,tag,quasismooth\n";
    for (const auto& cand : res.candidates) {
      auto j = cand.to_json();
      auto quote = [](const std::string& s) { return "\"" + s + "\""; };
      std::cout << cand.q << "," << quote(j["ambient"]) << "," << quote(j["weights"]) << ","
                << quote(j["cones"].dump()) << "," << quote(j["sections"].dump()) << "," << quote(j["basket"]) << ","
                << cand.minus_k2.str() << "," << quote(cand.tag) << ","
                << (cand.quasismooth ? to_string(*cand.quasismooth) : "") << "\n";
    }
  } else {
    std::cout << "| q | ambient | weights | basket | -K^2 | tag |\n|---|---|---|---|---|---|\n";
    for (const auto& cand : res.candidates)
      std::cout << "| " << cand.q << " | " << cand.family.ambient.str() << " | " << format_str(cand.family.format)
                << " | " << cand.basket.str() << " | " << cand.minus_k2.str() << " | " << cand.tag << " |\n";
    std::cout << "\n" << summary_text(res);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"log del Pezzo surfaces in Pfaffian and Segre formats"};
  app.require_subcommand(1);

  Common ci, cv, ct, cs;
  Target ti, tv;

  auto* info = app.add_subcommand("info", "ambient, syzygy matrix, invariants and basket of one instance");
  add_target(info, ti);
  info->add_option("--count", ti.count, "first N admissible parameters instead of --r/--y");
  add_common(info, ci, "text");

  VerifyOptions vo;
  bool all = false, no_qs = false;
  std::string family;
  auto* verify = app.add_subcommand("verify", "invariant cross-checks, basket and quasismoothness");
  add_target(verify, tv);
  verify->add_option("--count", tv.count, "first N admissible parameters");
  verify->add_flag("--all", all, "every registry entry (first 3 parameters unless --count)");
  verify->add_option("--family", family, "family JSON instead of a registry id");
  verify->add_option("--prime", vo.qs.prime, "characteristic for random members");
  verify->add_option("--trials", vo.qs.trials, "quasismoothness trials");
  verify->add_option("--seed", vo.qs.seed, "master seed");
  verify->add_flag("--rational", vo.qs.rational, "run the Gröbner basis over Q");
  verify->add_flag("--expect-fail", vo.expect_fail, "pass iff the member is not quasismooth");
  verify->add_flag("--no-qs", no_qs, "skip the Gröbner sub-suite");
  add_common(verify, cv, "text");

  int table_id = 1;
  std::size_t table_count = 3;
  auto* table = app.add_subcommand("table", "re-derive a table from the pipeline");
  table->add_option("--table", table_id, "1-5")->check(CLI::Range(1, 5));
  table->add_option("--count", table_count, "admissible parameters per model");
  add_common(table, ct, "md");

  SearchSpec spec;
  std::string fmt = "grass";
  auto* search = app.add_subcommand("search", "candidate search by adjunction number");
  search->add_option("--format", fmt, "grass or segre");
  search->add_option("--index", spec.index, "Fano index")->check(CLI::PositiveNumber);
  search->add_option("--qmax", spec.q_max, "largest adjunction number")->check(CLI::PositiveNumber);
  search->add_option("--qmin", spec.q_min, "smallest adjunction number");
  search->add_option("--max-cones", spec.max_cones, "projective cones per family");
  search->add_flag("--qs", spec.qs_postpass, "quasismoothness of sporadic survivors");
  search->add_option("--prime", spec.qs.prime, "characteristic for the post-pass");
  search->add_option("--trials", spec.qs.trials, "post-pass trials");
  search->add_option("--seed", spec.qs.seed, "post-pass master seed");
  search->add_flag("--serial", [&](std::int64_t) { spec.parallel = false; }, "serial reference path");
  add_common(search, cs, "text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*info) {
      if (ti.model.empty()) throw Error(ErrorKind::UnknownEntry, "--model is required");
      return run_info(ci, ti);
    }
    if (*verify) {
      vo.quasismooth = !no_qs;
      if (!all && family.empty() && tv.model.empty())
        throw Error(ErrorKind::UnknownEntry, "--model, --family or --all is required");
      return run_verify(cv, tv, vo, all, family);
    }
    if (*table) return run_table(ct, table_id, table_count);
    if (*search) {
      spec.kind = parse_format_kind(fmt);
      return run_search(cs, spec);
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 2;
}
