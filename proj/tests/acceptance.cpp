// Acceptance suite: one verdict line per criterion, exit 0 only when all pass.

#include "pezzo/equations.hpp"
#include "pezzo/quasismooth.hpp"
#include "pezzo/registry.hpp"
#include "pezzo/search.hpp"
#include "pezzo/strata.hpp"

#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

using namespace pezzo;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

// Collects failures for one criterion; detail lines go to stdout as they happen.
struct Criterion {
  int id;
  std::string title;
  std::vector<std::string> failures;
  std::vector<std::string> info;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void note(const std::string& s) { info.push_back(s); }
};

struct Outcome {
  int id;
  std::string title;
  bool pass;
  double seconds;
};

std::vector<Outcome> outcomes;

void run(int id, const std::string& title, const std::function<void(Criterion&)>& body) {
  Criterion c{id, title, {}, {}};
  auto t0 = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.failures.push_back(std::string("exception: ") + e.what());
  }
  double s = since(t0);
  for (const auto& n : c.info) std::cout << "    " << n << "\n";
  for (const auto& f : c.failures) std::cout << "    FAIL: " << f << "\n";
  bool pass = c.failures.empty();
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << id << ". " << title << " (" << std::fixed;
  std::cout.precision(2);
  std::cout << s << " s)" << std::endl;
  std::cout.unsetf(std::ios::fixed);
  outcomes.push_back({id, title, pass, s});
}

const Registry& registry() {
  static const Registry reg = Registry::load(default_registry_path());
  return reg;
}

std::string str(const Rat& r) { return r.str(); }

std::string label_of(const RegistryEntry& e, const Params& p) { return e.label(p); }

// Closed form and h0 of a table row against the pipeline, with the per-instance time bound.
void table_row(Criterion& c, const RegistryEntry& e, const Params& p) {
  auto t0 = Clock::now();
  auto f = e.instantiate(p);
  Rat k2 = anticanonical_degree(f);
  Int h0 = first_plurigenus(f);
  double s = since(t0);
  std::string l = label_of(e, p);
  Rat want = e.minus_k2.value().eval(p);
  c.expect(k2 == want, l + ": -K^2 " + str(k2) + " vs row " + str(want));
  if (e.h0.present())
    c.expect(h0 == e.h0.value().eval_int(p), l + ": h0 " + h0.str() + " vs row " + e.h0.value().eval_int(p).str());
  c.expect(s < 1.0, l + ": took " + std::to_string(s) + " s");
}

Params r_is(long long r) { return {{"r", Rat(r)}}; }

void criterion_1(Criterion& c) {
  int n = 0;
  for (const auto* e : registry().table(1)) {
    for (const auto& p : e->first_admissible(3)) {
      table_row(c, *e, p);
      ++n;
    }
  }
  const auto& pf11 = registry().find("Pf11");
  const auto& pf21 = registry().find("Pf21");
  c.expect(anticanonical_degree(pf11.instantiate(r_is(2))) == Rat(Int(7), Int(3)), "Pf11 r=2 is not 7/3");
  c.expect(anticanonical_degree(pf21.instantiate(r_is(6))) == Rat(Int(22), Int(7)), "Pf21 r=6 is not 22/7");
  c.expect(registry().table(1).size() == 8, "expected 8 Pfaffian models");
  c.note(std::to_string(n) + " instances; Pf11 r=2 -> 7/3, Pf21 r=6 -> 22/7");
}

void criterion_2(Criterion& c) {
  int n = 0;
  for (const auto* e : registry().table(2)) {
    for (const auto& p : e->first_admissible(3)) {
      table_row(c, *e, p);
      ++n;
    }
  }
  c.expect(registry().table(2).size() == 4, "expected 4 Segre index-1 models");
  const auto& p11 = registry().find("P11");
  c.expect(p11.minus_k2.flagged(), "P11 -K^2 printed cell is not flagged");
  for (const auto& p : p11.first_admissible(3)) {
    Rat printed = p11.minus_k2.printed->eval(p);
    Rat got = anticanonical_degree(p11.instantiate(p));
    c.expect(printed != got, "P11 printed value unexpectedly matches at " + params_str(p));
    c.expect(printed == -got, "P11 printed value is not the sign-flipped pipeline value at " + params_str(p));
  }
  c.note(std::to_string(n) + " instances; P11 printed -K^2 flagged (sign)");
}

void criterion_3(Criterion& c) {
  const std::vector<std::pair<long long, long long>> pts{{6, 6}, {9, 6}, {6, 7}, {9, 10}};
  auto formula = [](const Rat& r, const Rat& y) {
    Rat num = Rat(4) * (r * r * (Rat(2) * y + Rat(3)) + r * (Rat(2) * y * y + Rat(4) * y + Rat(3)) +
                        Rat(3) * y * (y + Rat(1)));
    Rat den = Rat(3) * r * y * (r + Rat(1)) * (y + Rat(1));
    return num / den;
  };
  for (auto [r, y] : pts) {
    const auto& e = registry().find(y % 3 == 0 ? "P21" : "P22");
    Params p{{"r", Rat(r)}, {"y", Rat(y)}};
    std::string l = label_of(e, p);
    c.expect(e.admissible(p), l + " not admissible");
    auto f = e.instantiate(p);
    Rat k2 = anticanonical_degree(f);
    c.expect(k2 == formula(Rat(r), Rat(y)), l + ": -K^2 " + str(k2) + " vs formula " + str(formula(Rat(r), Rat(y))));
    auto bv = basket_verify(f, e.basket_at(p));
    c.expect(bv.match, l + ": basket " + bv.computed.str() + " vs table " + bv.claimed.str());
    c.note(l + ": -K^2 = " + str(k2) + ", basket " + bv.computed.str());
  }
  c.expect(anticanonical_degree(registry().find("P21").instantiate({{"r", Rat(6)}, {"y", Rat(6)}})) ==
               Rat(Int(20), Int(21)),
           "(6,6) is not 20/21");
}

void criterion_4(Criterion& c) {
  int n = 0;
  auto check = [&](const Format& fm, const std::string& where) {
    auto hs = format_series(fm);
    if (auto g = std::get_if<GrassWeights>(&fm)) {
      Rat lim = degree_limit(hs, 6);
      c.expect(deg_grass(*g) == lim, where + ": closed form " + str(deg_grass(*g)) + " vs limit " + str(lim));
      c.expect(oracle::degree(hs, 6) == lim, where + ": derivative oracle disagrees");
    } else {
      const auto& s = std::get<SegreWeights>(fm);
      Rat lim = degree_limit(hs, 4);
      c.expect(deg_segre(s) == lim, where + ": closed form " + str(deg_segre(s)) + " vs limit " + str(lim));
      c.expect(oracle::degree(hs, 4) == lim, where + ": derivative oracle disagrees");
    }
    ++n;
  };
  auto t0 = Clock::now();
  for (const auto& e : registry().entries())
    for (const auto& p : e.first_admissible(3)) check(e.format_at(p), label_of(e, p));
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 50; ++i) check(oracle::random_grass(rng, 8), "random Grass #" + std::to_string(i));
  for (int i = 0; i < 50; ++i) check(oracle::random_segre(rng, 8), "random Segre #" + std::to_string(i));
  double s = since(t0);
  c.expect(s < 30.0, "suite took " + std::to_string(s) + " s");
  c.note(std::to_string(n) + " formats");
}

void criterion_5(Criterion& c) {
  int n = 0, flagged = 0;
  auto check = [&](const RegistryEntry& e, const Params& p) {
    auto f = e.instantiate(p);
    auto bv = basket_verify(f, e.basket_at(p));
    std::string l = label_of(e, p);
    c.expect(bv.status != BasketStatus::Undetermined, l + ": Undetermined");
    c.expect(bv.match, l + ": computed " + bv.computed.str() + " vs table " + bv.claimed.str());
    if (e.basket_flagged()) {
      ++flagged;
      c.note(l + ": printed basket " + e.printed_basket_at(p).str() + " differs; compared with " +
             e.basket_at(p).str());
    }
    ++n;
  };
  for (const auto& e : registry().entries()) {
    if (e.negative_control || !e.parametric() || e.table == 0) continue;
    for (const auto& p : e.first_admissible(2)) check(e, p);
  }
  for (int t : {3, 4}) {
    auto rows = registry().table(t);
    std::sort(rows.begin(), rows.end(), [](auto* a, auto* b) { return a->row < b->row; });
    for (std::size_t i = 0; i < rows.size() && i < 5; ++i) check(*rows[i], {});
  }
  // table 5: the first five admissible points across the two biparametric models
  std::vector<std::pair<const RegistryEntry*, Params>> bi;
  for (const auto* e : registry().table(5))
    for (const auto& p : e->first_admissible(5)) bi.push_back({e, p});
  auto key = [](const Params& p) {
    return std::make_pair(p.at("r") + p.at("y"), std::make_pair(p.at("r"), p.at("y")));
  };
  std::sort(bi.begin(), bi.end(), [&](const auto& a, const auto& b) { return key(a.second) < key(b.second); });
  for (std::size_t i = 0; i < bi.size() && i < 5; ++i) check(*bi[i].first, bi[i].second);
  c.note(std::to_string(n) + " baskets, " + std::to_string(flagged) + " with a flagged printed basket");
}

void criterion_6(Criterion& c) {
  struct Job {
    std::string id;
    Params p;
  };
  std::vector<Job> jobs{{"Pf12", r_is(3)}, {"Pf12", r_is(5)}, {"Pf12", r_is(7)}, {"P11", r_is(2)},
                        {"P11", r_is(3)},  {"P11", r_is(4)},  {"Pf24", r_is(6)}, {"Pf24", r_is(9)},
                        {"Pf21", r_is(6)}, {"P13", r_is(3)},  {"P21", {{"r", Rat(6)}, {"y", Rat(6)}}}};
  QsOptions o;
  o.prime = 32003;
  o.trials = 3;
  auto t0 = Clock::now();
  for (const auto& j : jobs) {
    const auto& e = registry().find(j.id);
    auto f = e.instantiate(j.p);
    auto t1 = Clock::now();
    auto v = quasismooth_check(f, o);
    std::ostringstream dims;
    for (const auto& t : v.trials) dims << " " << t.dimension;
    std::string l = label_of(e, j.p);
    c.expect(v.verdict == Verdict::Quasismooth, l + ": " + to_string(v.verdict) + " dims" + dims.str());
    c.note(l + ": " + to_string(v.verdict) + ", dims" + dims.str() + ", " + std::to_string(since(t1)) + " s");
  }
  double s = since(t0);
  c.expect(s < 1800.0, "total " + std::to_string(s) + " s exceeds 30 min");
}

void criterion_7(Criterion& c) {
  const auto& e = registry().find("Pf23x");
  QsOptions o;
  o.prime = 32003;
  o.trials = 5;
  o.negative_trials = 5;
  for (long long r : {7, 10}) {
    Params p = r_is(r);
    auto f = e.instantiate(p);
    std::string l = label_of(e, p);
    auto v = quasismooth_check(f, o);
    std::ostringstream dims;
    for (const auto& t : v.trials) dims << " " << t.dimension;
    c.note(l + " " + f.ambient.str() + ": " + to_string(v.verdict) + " over " + std::to_string(v.trials.size()) +
           " trials, Jacobian subrank dims" + dims.str());
    c.expect(v.verdict == Verdict::NotQuasismooth && v.trials.size() >= 5,
             l + ": expected NotQuasismooth across 5 trials, got " + to_string(v.verdict));
    auto b = strata_basket(f);
    bool flagged_at_three = b.status == BasketStatus::Undetermined;
    for (const auto& pt : b.points)
      if (pt.points > 0 && pt.isotropy == 3 && pt.tangent_deficit()) {
        flagged_at_three = true;
        c.note(l + ": weight-3 stratum, patch " + pt.patch + " tangent rank " + std::to_string(pt.tangent_rank) +
               "/" + std::to_string(pt.codim));
      }
    c.expect(flagged_at_three, l + ": no Undetermined status or tangent deficit at the weight-3 stratum");
  }
}

void criterion_8(Criterion& c) {
  auto one = rigid_partition(1, 50);
  c.expect(one.t_set.empty(), "I=1 has T-singularities");
  c.expect(one.neither.empty(), "I=1 has points that are neither T nor R");
  auto two = rigid_partition(2, 50);
  std::set<QuotientSingularity> want{normalize(2, 1, 1), normalize(4, 1, 1)};
  std::set<QuotientSingularity> got(two.t_set.begin(), two.t_set.end());
  c.expect(got == want, "I=2 T-set differs from {1/2(1,1), 1/4(1,1)}");
  c.expect(two.neither.empty(), "I=2 has points that are neither T nor R");
  // independent enumeration with the brute-force oracles
  for (std::int64_t I : {1, 2}) {
    std::set<QuotientSingularity> t;
    for (std::int64_t r = 2; r <= 50; ++r)
      for (std::int64_t b = 1; b < r; ++b) {
        if (std::gcd(b, r) != 1 || !oracle::pg_admissible(r, 1, b, I)) continue;
        auto q = oracle::normalize(r, 1, b);
        if (oracle::is_t_singularity(r, q.bprime)) t.insert(q);
      }
    c.expect(t == (I == 1 ? std::set<QuotientSingularity>{} : want),
             "oracle T-set for I=" + std::to_string(I) + " differs");
  }
  int n = 0;
  for (const auto& e : registry().entries())
    for (const auto& p : e.first_admissible(3)) {
      const Basket b = e.basket_at(p);
      for (const auto& [q, m] : b.points()) {
        c.expect(classify_tr(q) == TRClass::R, label_of(e, p) + ": " + q.str() + " is not R");
        c.expect(pg_admissible(q, e.index), label_of(e, p) + ": " + q.str() + " is not PG-admissible");
        ++n;
      }
    }
  c.note(std::to_string(two.admissible.size()) + " admissible points for I=2; " + std::to_string(n) +
         " registry basket points all R");
}

void criterion_9(Criterion& c) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::int64_t> w(1, 30), dd(1, 60);
  int n = 0, on_p = 0;
  while (n < 200) {
    std::int64_t a0 = w(rng), a1 = w(rng), d = dd(rng);
    if (a0 * a1 > 30 || std::gcd(a0, a1) != 1) continue;
    FletcherCount ours;
    try {
      ours = fletcher_count(a0, a1, d);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::DegreeMismatch) continue;  // no nonzero form of degree d
      throw;
    }
    auto ref = oracle::fletcher(a0, a1, d, rng());
    std::string l = "P(" + std::to_string(a0) + "," + std::to_string(a1) + ") d=" + std::to_string(d);
    c.expect(ours.on_p0 == ref.on_p0 && ours.on_p1 == ref.on_p1 && ours.interior == ref.interior,
             l + ": " + std::to_string(ours.total()) + " vs oracle " + std::to_string(ref.total()));
    on_p += ours.on_p0 + ours.on_p1;
    ++n;
  }
  c.note(std::to_string(n) + " instances, " + std::to_string(on_p) + " coordinate points");
}

void criterion_10(Criterion& c) {
  auto present = [](const SearchResult& r, const std::string& tag) {
    return std::any_of(r.candidates.begin(), r.candidates.end(), [&](const auto& x) { return x.tag == tag; });
  };
  auto keys_unique = [&](const SearchResult& r, const std::string& what) {
    std::set<DedupKey> keys;
    for (const auto& x : r.candidates) c.expect(keys.insert(dedup_key(x.family)).second, what + ": collision");
  };
  SearchSpec g;
  g.kind = FormatKind::Grass;
  g.index = 1;
  g.q_max = 24;
  auto rg = enumerate(g, &registry());
  for (const char* t : {"Pf11 r=2", "Pf11 r=3", "Pf11 r=4", "Pf12 r=3", "Pf12 r=5", "T3-1"})
    c.expect(present(rg, t), std::string("Grass q<=24 is missing ") + t);
  keys_unique(rg, "Grass q<=24");
  for (const auto& x : rg.candidates) c.expect(revalidate(x, g), x.family.str() + " fails revalidation");

  SearchSpec s;
  s.kind = FormatKind::Segre;
  s.index = 1;
  s.q_max = 20;
  auto rs = enumerate(s, &registry());
  c.expect(present(rs, "P11 r=2"), "Segre q<=20 is missing P11 r=2");
  keys_unique(rs, "Segre q<=20");
  for (const auto& x : rs.candidates) c.expect(revalidate(x, s), x.family.str() + " fails revalidation");
  c.note("Grass q<=24: " + std::to_string(rg.candidates.size()) + " rigid candidates; Segre q<=20: " +
         std::to_string(rs.candidates.size()));

  // summary counts against the reference values, informative only
  for (auto kind : {FormatKind::Grass, FormatKind::Segre})
    for (std::int64_t I : {1, 2}) {
      auto ref = summary_reference(kind, I);
      if (!ref) continue;
      SearchSpec spec;
      spec.kind = kind;
      spec.index = I;
      spec.q_max = ref->q_max;
      spec.qs_postpass = true;
      spec.qs.trials = 1;
      auto t0 = Clock::now();
      auto r = enumerate(spec, &registry());
      std::ostringstream os;
      os << "summary (informative, " << static_cast<int>(since(t0)) << " s): " << summary_text(r);
      c.note(os.str());
    }
}

void criterion_11(Criterion& c) {
  int pf = 0, segre = 0;
  for (const char* id : {"Pf14", "Pf24", "P14"}) {
    const auto& e = registry().find(id);
    bool all = true;
    for (const auto& p : e.first_admissible(3)) {
      bool flag = toric_obstruction(e.instantiate(p));
      c.expect(flag, label_of(e, p) + ": toric flag false");
      all = all && flag;
    }
    if (all) (e.format == FormatKind::Grass ? pf : segre)++;
  }
  // obstruction across all parametric models, to compare with the counts claimed for each format
  int pf_all = 0, segre_all = 0;
  for (const auto& e : registry().entries()) {
    if (!e.parametric() || e.negative_control || e.table == 0) continue;
    auto ps = e.first_admissible(1);
    if (!ps.empty() && toric_obstruction(e.instantiate(ps[0]))) (e.format == FormatKind::Grass ? pf_all : segre_all)++;
  }
  c.expect(pf >= 2 && pf_all >= 2, "fewer than 2 Pfaffian models carry the obstruction");
  c.expect(segre >= 1 && segre_all >= 1, "no Segre model carries the obstruction");
  int rows = 0;
  for (const auto& e : registry().entries()) {
    if (e.parametric() || !e.h0.present()) continue;
    if (e.h0.value().eval_int({}) != 0) continue;
    bool flag = toric_obstruction(e.instantiate({}));
    c.expect(flag, e.id + ": h0 = 0 row without the toric flag");
    ++rows;
  }
  c.note("models flagged: " + std::to_string(pf_all) + " Pfaffian, " + std::to_string(segre_all) + " Segre; " +
         std::to_string(rows) + " sporadic rows with h0 = 0, all flagged");
}

void criterion_12(Criterion& c) {
  using alg::PrimeField;
  using Fp = alg::Poly<PrimeField>;
  const PrimeField K(32003);
  auto t0 = Clock::now();
  int fams = 0;
  for (const auto& e : registry().entries())
    for (const auto& p : e.first_admissible(3)) {
      auto f = e.instantiate(p);
      std::string l = label_of(e, p);
      int want = f.codimension() % 2 ? -1 : 1;
      c.expect(gorenstein_symmetry(f.hilbert) == want, l + ": numerator symmetry");
      auto sum = std::accumulate(f.ambient.weights.begin(), f.ambient.weights.end(), std::int64_t{0});
      c.expect(sum - adjunction_number(f.hilbert) == f.fano_index, l + ": I != sum - q");
      ++fams;
    }
  // Pfaffian syzygy M * (signed Pfaffians) = 0 on random members
  int syz = 0;
  for (const char* id : {"Pf12", "Pf21", "Pf24", "T3-1"}) {
    const auto& e = registry().find(id);
    auto ps = e.first_admissible(1);
    auto f = e.instantiate(ps.empty() ? Params{} : ps[0]);
    auto m = random_member(f, K, 77);
    for (int i = 0; i < 5; ++i) {
      Fp row;
      for (int j = 0; j < 5; ++j) {
        auto t = m.ring.mul(m.matrix[i][j], m.equations[j]);
        row = j % 2 ? m.ring.sub(row, t) : m.ring.add(row, t);
      }
      c.expect(row.is_zero(), std::string(id) + ": syzygy row " + std::to_string(i) + " nonzero");
    }
    ++syz;
  }
  // rank at smooth points of the two affine cones
  std::mt19937_64 rng(12);
  auto jac_rank = [&](const alg::Ring<PrimeField>& R, const std::vector<Fp>& eqs,
                      const std::vector<PrimeField::Elem>& pt) {
    auto J = jacobian(R, eqs);
    std::vector<std::vector<std::int64_t>> M(J.size());
    for (std::size_t i = 0; i < J.size(); ++i)
      for (const auto& x : J[i]) M[i].push_back(R.evaluate(x, pt));
    return oracle::rank_mod_p(M, 32003);
  };
  alg::Ring<PrimeField> G(K, std::vector<int>(10, 1));
  PolyMatrix<PrimeField> S(5, std::vector<Fp>(5));
  for (int i = 0, v = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      S[i][j] = G.var(v++);
      S[j][i] = G.neg(S[i][j]);
    }
  auto pf = pfaffian_equations(G, S);
  alg::Ring<PrimeField> P(K, std::vector<int>(9, 1));
  PolyMatrix<PrimeField> N(3, std::vector<Fp>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) N[i][j] = P.var(3 * i + j);
  auto mi = minor_equations(P, N);
  for (int t = 0; t < 10; ++t) {
    std::vector<PrimeField::Elem> u(5), w(5), x;
    for (int i = 0; i < 5; ++i) u[i] = K.random_nonzero(rng), w[i] = K.random_nonzero(rng);
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) x.push_back(K.sub(K.mul(u[i], w[j]), K.mul(u[j], w[i])));
    c.expect(jac_rank(G, pf, x) == 3, "Grassmannian cone rank != 3");
    std::vector<PrimeField::Elem> y;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) y.push_back(K.mul(u[i], w[j]));
    c.expect(jac_rank(P, mi, y) == 4, "Segre cone rank != 4");
  }
  // the Jacobian subrank locus is C*-stable (weighted homogeneous generators), so a
  // zero-dimensional locus is the vertex: every variable has a pure power in the leading terms
  for (const char* id : {"Pf12", "P11"}) {
    const auto& e = registry().find(id);
    auto f = e.instantiate(e.first_admissible(1)[0]);
    auto m = random_member(f, K, 5);
    auto gens = jacobian_subrank_ideal(m.ring, m.equations, f.codimension());
    for (const auto& g : gens) c.expect(m.ring.is_homogeneous(g), std::string(id) + ": inhomogeneous generator");
    auto gb = alg::groebner(m.ring, gens);
    auto lt = gb.leading();
    int dim = alg::krull_dimension(lt, m.ring.nvars());
    c.expect(dim <= 0, std::string(id) + ": subrank locus has dimension " + std::to_string(dim));
    c.expect(alg::has_all_pure_powers(lt, m.ring.nvars()), std::string(id) + ": locus not supported at the vertex");
  }
  double s = since(t0);
  c.expect(s < 60.0, "suite took " + std::to_string(s) + " s");
  c.note(std::to_string(fams) + " families, " + std::to_string(syz) + " syzygy checks, 20 rank probes");
}

}  // namespace

int main() {
  std::cout << "acceptance suite, registry " << default_registry_path() << "\n";
  run(1, "Pfaffian model rows: closed-form -K^2 and h0 at the first 3 parameters", criterion_1);
  run(2, "Segre index-1 model rows, P11 printed sign flagged", criterion_2);
  run(3, "biparametric -K^2 formula and baskets at (6,6),(9,6),(6,7),(9,10)", criterion_3);
  run(4, "closed-form degrees vs Hilbert-series limit, registry + 50 random per format", criterion_4);
  run(5, "basket reproduction for models and the smallest sporadic rows", criterion_5);
  run(6, "quasismooth positives over F_32003, 3 trials", criterion_6);
  run(7, "Pf23 data at r=7,10: NotQuasismooth in 5 trials and a weight-3 tangent diagnostic", criterion_7);
  run(8, "rigidity partition for r <= 50 and R-classified registry baskets", criterion_8);
  run(9, "Fletcher point count vs Groebner oracle, 200 instances", criterion_9);
  run(10, "search finds the known small families, no collisions, all revalidate", criterion_10);
  run(11, "toric obstruction flags", criterion_11);
  run(12, "structural invariants: symmetry, adjunction, syzygy, ranks, vertex support", criterion_12);
  int failed = 0;
  for (const auto& o : outcomes) failed += !o.pass;
  std::cout << "\n" << outcomes.size() - failed << "/" << outcomes.size() << " criteria passed";
  if (failed) {
    std::cout << "; failed:";
    for (const auto& o : outcomes)
      if (!o.pass) std::cout << " " << o.id;
  }
  std::cout << std::endl;
  return failed ? 1 : 0;
}
