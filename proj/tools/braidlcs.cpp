// Command-line front end. Exit codes: 0 success, 1 failed checks or a
// computation that hit a limit, 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "braidlcs/b2t2.hpp"
#include "braidlcs/catalog.hpp"
#include "braidlcs/int_matrix.hpp"
#include "braidlcs/nq.hpp"
#include "braidlcs/presentation.hpp"
#include "braidlcs/rank_formulas.hpp"
#include "braidlcs/suites.hpp"

using namespace braidlcs;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

long parse_long(std::string const& s) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (std::exception const&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) {
    throw UsageError("expected an integer, got '" + s + "'");
  }
  return v;
}

catalog::Pr4Reading parse_reading(std::string const& s) {
  if (s == "odd-or-large") return catalog::Pr4Reading::OddOrLarge;
  if (s == "odd-only") return catalog::Pr4Reading::OddOnly;
  throw UsageError("--ambiguous-pr4 takes odd-or-large or odd-only");
}

NqOptions nq_options() {
  NqOptions o;
  if (char const* cap = std::getenv("BRAIDLCS_PC_CAP")) {
    long v = parse_long(cap);
    if (v < 1) throw UsageError("BRAIDLCS_PC_CAP must be positive");
    o.max_pc_generators = static_cast<std::size_t>(v);
  }
  return o;
}

Presentation build_family(std::vector<std::string> const& args,
                          catalog::Pr4Reading reading) {
  if (args.empty()) throw UsageError("missing family name");
  if (args[0] == "direct_product") {
    std::vector<std::vector<std::string>> parts(1);
    for (std::size_t i = 1; i < args.size(); ++i) {
      if (args[i] == ",") {
        parts.emplace_back();
      } else {
        parts.back().push_back(args[i]);
      }
    }
    if (parts.size() != 2 || parts[0].empty() || parts[1].empty()) {
      throw UsageError("direct_product takes FAMILY PARAMS , FAMILY PARAMS");
    }
    return catalog::direct_product(build_family(parts[0], reading),
                                   build_family(parts[1], reading));
  }
  catalog::FamilySpec spec{args[0], {}};
  for (std::size_t i = 1; i < args.size(); ++i) {
    spec.params.push_back(parse_long(args[i]));
  }
  return catalog::build(spec, reading);
}

Presentation read_presentation(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  Presentation p = parse_presentation(buf.str());
  if (p.name().empty()) p.set_name(path);
  return p;
}

Word parse_b2t2_word(std::string const& text) {
  Presentation full("b2t2", {"alpha", "beta", "gamma"});
  try {
    return parse_word(text, full);
  } catch (ParseError const&) {
    Presentation letters("b2t2", {"a", "b", "c"});
    return parse_word(text, letters);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lower central series of braid and surface braid groups"};
  app.require_subcommand(1);

  auto* catalog_cmd = app.add_subcommand("catalog", "List presentation families");

  std::vector<std::string> family_args;
  std::string out_path;
  std::string reading_text = "odd-or-large";
  auto* present = app.add_subcommand(
      "present", "Write a catalog presentation in the text format");
  present->add_option("family", family_args, "FAMILY PARAMS...")->required();
  present->add_option("-o,--output", out_path, "Output file (default stdout)");
  present->add_option("--ambiguous-pr4", reading_text,
                      "Reading of the pure braid (PR4) side condition: "
                      "odd-or-large or odd-only");

  std::string file;
  auto* abelianize = app.add_subcommand("abelianize", "Abelian invariants of G/[G,G]");
  abelianize->add_option("file", file, "Presentation file")->required();

  std::size_t nq_class = 3;
  bool json = false;
  auto* nq = app.add_subcommand("nq", "Nilpotent quotient G/Gamma_{c+1}");
  nq->add_option("file", file, "Presentation file")->required();
  nq->add_option("-c,--class", nq_class, "Nilpotency class")
      ->check(CLI::PositiveNumber);
  nq->add_flag("--json", json, "Emit JSON");

  std::vector<std::string> rank_args;
  std::size_t rank_max = 8;
  auto* ranks = app.add_subcommand(
      "ranks", "Rank table: free_group K (Witt), z2_free_cubed (R_i), or any "
               "catalog family (engine rational ranks)");
  ranks->add_option("family", rank_args, "FAMILY PARAMS...")->required();
  ranks->add_option("--max", rank_max, "Last index")->check(CLI::PositiveNumber);
  ranks->add_option("--ambiguous-pr4", reading_text, "See present");

  std::string word_text;
  auto* b2t2_cmd = app.add_subcommand("b2t2", "Computations in B2(T2)");
  b2t2_cmd->require_subcommand(1);
  auto* nf = b2t2_cmd->add_subcommand(
      "nf", "Normal form (m,n,shadow) of a word in alpha beta gamma (or a b c)");
  nf->add_option("word", word_text, "Word, e.g. 'alpha beta gamma^-1' or abC")
      ->required();

  std::string suite = "all";
  std::size_t max_class = 4;
  bool timing = false;
  std::vector<std::string> suite_values;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("suite", suite, "Suite name or all");
  verify->add_option("--max-class", max_class, "Class for the NQ checks")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--json", json, "Emit JSON");
  verify->add_flag("--timing", timing, "Include per-check timings in JSON");
  verify->add_option("--set", suite_values,
                     "Suite parameter KEY=VALUE (n, g, m, k, c)");
  verify->add_option("--ambiguous-pr4", reading_text, "See present");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    auto reading = parse_reading(reading_text);
    if (*catalog_cmd) {
      for (auto const& [name, params] : catalog::families()) {
        std::cout << name << (params.empty() ? "" : " " + params) << '\n';
      }
      return kOk;
    }
    if (*present) {
      std::string text = to_text(build_family(family_args, reading));
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path);
        if (!(out << text)) throw UsageError("cannot write '" + out_path + "'");
      }
      return kOk;
    }
    if (*abelianize) {
      std::cout << to_string(abelian_invariants(read_presentation(file))) << '\n';
      return kOk;
    }
    if (*nq) {
      auto result = nilpotent_quotient(read_presentation(file), nq_class, nq_options());
      if (json) {
        std::cout << to_json(result) << '\n';
      } else {
        for (std::size_t i = 0; i < result.quotients.size(); ++i) {
          std::cout << "weight " << i + 1 << ": " << to_string(result.quotients[i])
                    << '\n';
        }
        std::cout << "pc generators: " << result.table.size() << '\n';
      }
      return kOk;
    }
    if (*ranks) {
      RankTable table;
      if (rank_args[0] == "free_group") {
        if (rank_args.size() != 2) throw UsageError("free_group takes K");
        long k = parse_long(rank_args[1]);
        if (k < 1) throw UsageError("free_group needs K >= 1");
        table = witt_table(static_cast<std::size_t>(k), rank_max);
      } else if (rank_args[0] == "z2_free_cubed" && rank_args.size() == 1) {
        table = gaglione_table(std::max<std::size_t>(rank_max, 2));
      } else {
        auto p = build_family(rank_args, reading);
        auto result = nilpotent_quotient(p, rank_max, nq_options());
        table.label = p.name();
        for (auto r : rational_ranks(result)) {
          table.ranks.emplace_back(static_cast<unsigned long>(r));
        }
      }
      std::cout << "# " << table.label << '\n' << to_string(table);
      return kOk;
    }
    if (*b2t2_cmd) {
      std::cout << b2t2::to_string(b2t2::to_normal_form(parse_b2t2_word(word_text)))
                << '\n';
      return kOk;
    }
    if (*verify) {
      SuiteParams params;
      params.max_class = max_class;
      params.reading = reading;
      params.nq = nq_options();
      for (auto const& kv : suite_values) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw UsageError("--set takes KEY=VALUE");
        params.values[kv.substr(0, eq)] = parse_long(kv.substr(eq + 1));
      }
      SuiteReport report = run_suite(suite, params);
      std::cout << (json ? to_json(report, timing) : to_text(report));
      return report.passed() ? kOk : kFailed;
    }
  } catch (UsageError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (UnknownSuite const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (ParseError const& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (std::invalid_argument const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (ResourceLimitExceeded const& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kFailed;
  } catch (std::exception const& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}
