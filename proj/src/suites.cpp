#include "braidlcs/suites.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "braidlcs/b2t2.hpp"
#include "braidlcs/int_matrix.hpp"
#include "braidlcs/nq.hpp"
#include "braidlcs/rank_formulas.hpp"
#include "json.hpp"

namespace braidlcs {

namespace {

using catalog::Pr4Reading;

struct Outcome {
  std::string expected;
  std::string computed;
  bool passed;
};

AbelianInvariants group(std::size_t free_rank, std::vector<long> torsion = {}) {
  AbelianInvariants a;
  a.free_rank = free_rank;
  for (long d : torsion) a.torsion.emplace_back(d);
  return a;
}

Outcome compare(AbelianInvariants const& expected,
                AbelianInvariants const& computed) {
  return {to_string(expected), to_string(computed), expected == computed};
}

std::string join(std::vector<std::string> const& parts) {
  std::string out = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ", ";
    out += parts[i];
  }
  return out + "]";
}

std::string quotient_list(NqResult const& r, std::size_t from) {
  std::vector<std::string> parts;
  for (std::size_t i = from; i <= r.quotients.size(); ++i) {
    parts.push_back(to_string(r.quotients[i - 1]));
  }
  return join(parts);
}

std::string pad(std::size_t i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%02zu", i);
  return buf;
}

class Runner {
 public:
  Runner(std::string suite, SuiteParams params)
      : params_(std::move(params)) {
    report_.suite = std::move(suite);
  }

  SuiteParams const& params() const { return params_; }

  std::size_t nq_class(std::size_t at_least) const {
    return std::max(params_.max_class, at_least);
  }

  long value(std::string const& key, long fallback) const {
    auto it = params_.values.find(key);
    return it == params_.values.end() ? fallback : it->second;
  }
  bool has(std::string const& key) const { return params_.values.count(key); }

  NqResult const& nq(Presentation const& p, std::size_t c,
                     std::string const& tag = "") {
    std::string key = p.name() + "|" + tag + "|" + std::to_string(c);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      it = cache_.emplace(key, nilpotent_quotient(p, c, params_.nq)).first;
    }
    return it->second;
  }

  void check(std::string const& suite, std::string const& item,
             std::string description, std::function<Outcome()> const& body) {
    auto start = std::chrono::steady_clock::now();
    Outcome o = body();
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    report_.checks.push_back(Check{suite + "." + item, std::move(description),
                                   std::move(o.expected), std::move(o.computed),
                                   o.passed, dt.count()});
  }

  SuiteReport finish() {
    std::stable_sort(report_.checks.begin(), report_.checks.end(),
                     [](Check const& a, Check const& b) { return a.name < b.name; });
    return std::move(report_);
  }

 private:
  SuiteParams params_;
  SuiteReport report_;
  std::map<std::string, NqResult> cache_;
};

Outcome trivial_from(NqResult const& r, std::size_t weight) {
  bool ok = true;
  for (std::size_t i = weight; i <= r.quotients.size(); ++i) {
    ok = ok && r.quotients[i - 1].trivial();
  }
  std::vector<std::string> zeros(r.quotients.size() + 1 - weight, "0");
  return {join(zeros), quotient_list(r, weight), ok};
}

void theorem1(Runner& run) {
  std::vector<std::pair<long, long>> cases{{3, 1}, {4, 1}, {3, 2}};
  if (run.has("n") || run.has("g")) cases = {{run.value("n", 3), run.value("g", 1)}};
  std::size_t c = run.nq_class(3);
  for (auto [n, g] : cases) {
    auto p = catalog::surface_braid_closed(n, g);
    std::string tag = "n" + std::to_string(n) + "_g" + std::to_string(g);
    run.check("theorem1", "abelianization_" + tag,
              "B_n(closed genus g) abelianizes to Z^2g + Z/2", [&] {
                return compare(group(2 * g, {2}), abelian_invariants(p));
              });
    run.check("theorem1", "gamma2_" + tag,
              "Gamma2/Gamma3 is cyclic of order n-1+g", [&] {
                return compare(group(0, {n - 1 + g}), run.nq(p, c).quotients[1]);
              });
    run.check("theorem1", "gamma3_" + tag,
              "Gamma3 = Gamma4: quotients of weight >= 3 vanish up to class " +
                  std::to_string(c),
              [&] { return trivial_from(run.nq(p, c), 3); });
  }
}

void theorem2(Runner& run) {
  std::vector<std::array<long, 3>> cases{{3, 1, 1}, {3, 1, 2}};
  if (run.has("n") || run.has("g") || run.has("m")) {
    cases = {{run.value("n", 3), run.value("g", 1), run.value("m", 1)}};
  }
  std::size_t c = run.nq_class(3);
  for (auto [n, g, m] : cases) {
    auto p = catalog::surface_braid_boundary(n, g, m);
    std::string tag = "n" + std::to_string(n) + "_g" + std::to_string(g) +
                      "_m" + std::to_string(m);
    run.check("theorem2", "abelianization_" + tag,
              "B_n(genus g, m boundary components) abelianizes to "
              "Z^(2g+m-1) + Z/2",
              [&] {
                return compare(group(2 * g + m - 1, {2}), abelian_invariants(p));
              });
    run.check("theorem2", "gamma2_" + tag, "Gamma2/Gamma3 is infinite cyclic",
              [&] { return compare(group(1), run.nq(p, c).quotients[1]); });
    run.check("theorem2", "gamma3_" + tag,
              "Gamma3 = Gamma4: quotients of weight >= 3 vanish up to class " +
                  std::to_string(c),
              [&] { return trivial_from(run.nq(p, c), 3); });
  }
}

void theorem3(Runner& run) {
  std::size_t c = run.nq_class(3);
  auto b2t2 = catalog::b2t2_alpha_beta_gamma();
  auto z2 = catalog::z2_free_cubed();
  run.check("theorem3", "abelianization_b2t2", "B2(T2) abelianizes to Z^2 + Z/2",
            [&] { return compare(group(2, {2}), abelian_invariants(b2t2)); });
  run.check("theorem3", "elementary_abelian_z2",
            "Z2*Z2*Z2: every quotient of weight >= 2 is a sum of Z/2", [&] {
              auto const& r = run.nq(z2, c);
              bool ok = true;
              for (std::size_t i = 2; i <= c; ++i) {
                auto const& q = r.quotients[i - 1];
                ok = ok && q.free_rank == 0;
                for (auto const& d : q.torsion) ok = ok && d == 2;
              }
              return Outcome{"exponent 2 for weights 2.." + std::to_string(c),
                             quotient_list(r, 2), ok};
            });
  run.check("theorem3", "gaglione_values", "R_i for i = 2..6 from the closed form",
            [&] {
              std::vector<std::string> got;
              for (std::size_t i = 2; i <= 6; ++i) got.push_back(gaglione_R(i).get_str());
              std::string want = "[0, 3, 5, 8, 14]";
              return Outcome{want, join(got), join(got) == want};
            });
  run.check("theorem3", "rank_alignment",
            "a single index shift s makes rank(Gamma_{i+s}/Gamma_{i+s+1}) of "
            "Z2*Z2*Z2 equal R_i",
            [&] {
              auto const& r = run.nq(z2, c);
              std::vector<std::string> shifts;
              for (long s = -3; s <= 3; ++s) {
                std::size_t compared = 0;
                bool ok = true;
                for (long w = 2; w <= static_cast<long>(c); ++w) {
                  long i = w - s;
                  if (i < 2) continue;
                  ++compared;
                  ok = ok && BigInt(static_cast<unsigned long>(
                                 r.quotients[w - 1].torsion.size())) ==
                                 gaglione_R(static_cast<std::size_t>(i));
                }
                if (ok && compared >= 2) shifts.push_back(std::to_string(s));
              }
              std::vector<std::string> ranks;
              for (std::size_t w = 2; w <= c; ++w) {
                ranks.push_back(std::to_string(r.quotients[w - 1].torsion.size()));
              }
              return Outcome{"exactly one shift",
                             "shifts " + join(shifts) + " for weight 2.." +
                                 std::to_string(c) + " ranks " + join(ranks),
                             shifts.size() == 1};
            });
  run.check("theorem3", "b2t2_matches_z2_above_weight1",
            "B2(T2) and Z2*Z2*Z2 have the same quotients in weights >= 2", [&] {
              auto const& a = run.nq(b2t2, c);
              auto const& b = run.nq(z2, c);
              std::string qa = quotient_list(a, 2), qb = quotient_list(b, 2);
              return Outcome{qb, qa, qa == qb};
            });
  run.check("theorem3", "weight1_difference",
            "weight 1: B2(T2) gives Z^2 + Z/2 where Z2*Z2*Z2 gives (Z/2)^3", [&] {
              auto const& a = run.nq(b2t2, c).quotients[0];
              auto const& b = run.nq(z2, c).quotients[0];
              bool ok = a == group(2, {2}) && b == group(0, {2, 2, 2});
              return Outcome{"Z^2 + Z/2 vs Z/2 + Z/2 + Z/2",
                             to_string(a) + " vs " + to_string(b), ok};
            });
  run.check("theorem3", "rational_ranks_b2t2",
            "B2(T2)/D2 is Z^2 and the rational series stabilizes", [&] {
              auto ranks = rational_ranks(run.nq(b2t2, c));
              std::vector<std::string> got, want;
              for (std::size_t i = 0; i < ranks.size(); ++i) {
                got.push_back(std::to_string(ranks[i]));
                want.push_back(i == 0 ? "2" : "0");
              }
              return Outcome{join(want), join(got), got == want};
            });
  run.check("theorem3", "series_identity",
            "k [x^k] of -ln((1+x)^2 (1-2x)) equals 2^k + 2(-1)^k for k <= 12",
            [&] {
              bool ok = series_check(12);
              return Outcome{"true", ok ? "true" : "false", ok};
            });
  run.check("theorem3", "torsion_witness",
            "g = alpha beta gamma^-1 is a nontrivial generalized torsion element",
            [&] {
              using b2t2::Alpha, b2t2::Beta, b2t2::Gamma;
              Word g{gen(Alpha), gen(Beta), inv(Gamma)};
              std::vector<Word> h{Word{gen(Alpha), gen(Gamma)}, Word{gen(Gamma)},
                                  Word{gen(Alpha)}, Word{}};
              bool witness = b2t2::generalized_torsion_witness(g, h);
              auto nf = b2t2::to_normal_form(g);
              bool ok = witness && !b2t2::is_identity(nf);
              return Outcome{"witness holds, g = (m,n,shadow) != (0,0,ε)",
                             std::string(witness ? "witness holds" : "no witness") +
                                 ", g = " + b2t2::to_string(nf),
                             ok};
            });
}

void artin(Runner& run) {
  std::size_t c = run.nq_class(3);
  struct Case {
    std::string tag;
    Presentation p;
    std::size_t rank;
  };
  using M = std::vector<std::vector<std::size_t>>;
  std::vector<Case> cases{
      {"braid3", catalog::artin_braid(3), 1},
      {"braid4", catalog::artin_braid(4), 1},
      {"type_b3", catalog::artin_tits(M{{1, 4, 2}, {4, 1, 3}, {2, 3, 1}}), 2},
      {"type_d4", catalog::artin_tits(M{{1, 3, 2, 2}, {3, 1, 3, 3},
                                        {2, 3, 1, 2}, {2, 3, 2, 1}}),
       1},
      {"type_f4", catalog::artin_tits(M{{1, 3, 2, 2}, {3, 1, 4, 2},
                                        {2, 4, 1, 3}, {2, 2, 3, 1}}),
       2},
      {"type_h3", catalog::artin_tits(M{{1, 5, 2}, {5, 1, 3}, {2, 3, 1}}), 1},
      {"type_i2_5", catalog::artin_tits(M{{1, 5}, {5, 1}}), 1},
  };
  for (auto const& k : cases) {
    run.check("artin", "abelianization_" + k.tag,
              "spherical Artin-Tits group abelianizes to Z or Z^2", [&] {
                return compare(group(k.rank), abelian_invariants(k.p));
              });
    run.check("artin", "gamma2_" + k.tag, "Gamma2 = Gamma3 (trivial weight-2 quotient)",
              [&] {
                return compare(group(0), run.nq(k.p, c).quotients[1]);
              });
  }
  auto d2 = catalog::dihedral_artin(2);
  run.check("artin", "gamma2_dihedral_2",
            "<a,b | (ab)^2 = (ba)^2> is the exception: Gamma2/Gamma3 nontrivial",
            [&] {
              auto const& q = run.nq(d2, c).quotients[1];
              return Outcome{"nontrivial", to_string(q), !q.trivial()};
            });
}

void witt(Runner& run) {
  std::vector<long> ks{2, 3};
  if (run.has("k")) ks = {run.value("k", 2)};
  std::size_t c = static_cast<std::size_t>(
      run.value("c", static_cast<long>(run.params().max_class)));
  for (long k : ks) {
    auto p = catalog::free_group(k);
    for (std::size_t i = 1; i <= c; ++i) {
      run.check("witt", "k" + std::to_string(k) + "_weight" + pad(i),
                "free group quotient is free abelian of Witt rank", [&, i] {
                  BigInt w = witt_rank(k, i);
                  return compare(group(w.get_ui()), run.nq(p, c).quotients[i - 1]);
                });
    }
  }
}

void dihedral(Runner& run) {
  std::vector<long> ms{2, 3, 4};
  if (run.has("m")) ms = {run.value("m", 2)};
  std::size_t c = run.nq_class(3);
  for (long m : ms) {
    auto d = catalog::dihedral_artin(m);
    auto bs = catalog::baumslag_solitar_mm(m);
    std::string tag = "m" + std::to_string(m);
    run.check("dihedral", "gamma2_" + tag,
              "even-length relator (ab)^m = (ba)^m leaves Gamma2/Gamma3 nontrivial",
              [&] {
                auto const& q = run.nq(d, c).quotients[1];
                return Outcome{"nontrivial", to_string(q), !q.trivial()};
              });
    run.check("dihedral", "matches_bs_" + tag,
              "same quotients as <a,c | [a, c^m]> (c = ba)", [&] {
                std::string a = quotient_list(run.nq(d, c), 1);
                std::string b = quotient_list(run.nq(bs, c), 1);
                return Outcome{b, a, a == b};
              });
  }
}

std::string reading_tag(Pr4Reading r) {
  return r == Pr4Reading::OddOrLarge ? "odd-or-large" : "odd-only";
}

void pure(Runner& run) {
  std::vector<std::pair<long, long>> cases{{2, 1}, {3, 1}, {2, 2}, {4, 1}};
  if (run.has("n") || run.has("g")) cases = {{run.value("n", 2), run.value("g", 1)}};
  std::size_t c = std::min<std::size_t>(run.params().max_class, 3);
  Pr4Reading chosen = run.params().reading;
  Pr4Reading other = chosen == Pr4Reading::OddOrLarge ? Pr4Reading::OddOnly
                                                      : Pr4Reading::OddOrLarge;
  run.check("pure", "counts_n2_g1", "relator counts per family for n = 2, g = 1",
            [&] {
              auto counts = catalog::pure_surface_braid_counts(2, 1, chosen);
              std::vector<std::string> got;
              for (auto const& [k, v] : counts) got.push_back(k + "=" + std::to_string(v));
              std::string want =
                  "[ER1=1, ER2=0, PR1=0, PR2=2, PR3=2, PR4=0]";
              return Outcome{want, join(got), join(got) == want};
            });
  for (auto [n, g] : cases) {
    auto p = catalog::pure_surface_braid(n, g, chosen);
    std::string tag = "n" + std::to_string(n) + "_g" + std::to_string(g);
    run.check("pure", "abelianization_" + tag,
              "(ER1) kills the puncture generators: H1 = Z^(2gn)", [&] {
                return compare(group(2 * g * n), abelian_invariants(p));
              });
    run.check("pure", "readings_" + tag,
              "NQ under both readings of the (PR4) side condition, class " +
                  std::to_string(c) + "; tables must be consistent",
              [&] {
                auto q = catalog::pure_surface_braid(n, g, other);
                auto const& a = run.nq(p, c, reading_tag(chosen));
                auto const& b = run.nq(q, c, reading_tag(other));
                bool consistent = consistency_violations(a.table).empty() &&
                                  consistency_violations(b.table).empty();
                std::string qa = quotient_list(a, 1), qb = quotient_list(b, 1);
                std::string computed =
                    reading_tag(chosen) + " " + qa +
                    (qa == qb ? ", same under " : ", differs under ") +
                    reading_tag(other) + (qa == qb ? "" : " " + qb);
                return Outcome{"consistent tables", computed, consistent};
              });
  }
}

using SuiteFn = void (*)(Runner&);

std::vector<std::pair<std::string, SuiteFn>> const& registry() {
  static std::vector<std::pair<std::string, SuiteFn>> const suites{
      {"theorem1", theorem1}, {"theorem2", theorem2}, {"theorem3", theorem3},
      {"artin", artin},       {"witt", witt},         {"dihedral", dihedral},
      {"pure", pure},
  };
  return suites;
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](Check const& c) { return c.passed; });
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (auto const& [name, fn] : registry()) names.push_back(name);
  names.push_back("b2t2");
  names.push_back("all");
  return names;
}

SuiteReport run_suite(std::string const& name, SuiteParams const& params) {
  std::string key = name == "b2t2" ? "theorem3" : name;
  Runner run(name, params);
  bool found = false;
  for (auto const& [suite, fn] : registry()) {
    if (key == "all" || key == suite) {
      fn(run);
      found = true;
    }
  }
  if (!found) throw UnknownSuite("unknown suite '" + name + "'");
  return run.finish();
}

std::string to_json(SuiteReport const& r, bool timing) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["status"] = r.passed() ? "pass" : "fail";
  j["checks"] = nlohmann::ordered_json::array();
  for (auto const& c : r.checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["description"] = c.description;
    e["expected"] = c.expected;
    e["computed"] = c.computed;
    e["status"] = c.passed ? "pass" : "fail";
    j["checks"].push_back(e);
  }
  if (timing) {
    nlohmann::ordered_json t = nlohmann::ordered_json::object();
    for (auto const& c : r.checks) t[c.name] = c.elapsed_seconds;
    j["elapsed_seconds"] = t;
  }
  return j.dump(2) + "\n";
}

std::string to_text(SuiteReport const& r) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (auto const& c : r.checks) {
    passed += c.passed;
    out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.description
        << " (expected " << c.expected << ", computed " << c.computed << ")\n";
  }
  out << r.suite << ": " << passed << "/" << r.checks.size() << " checks passed\n";
  return out.str();
}

}  // namespace braidlcs
