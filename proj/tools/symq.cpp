// symq: command-line front end for the permutation, A(5), logic, ordinal and
// classifier libraries.
//
// Exit status: 0 on success or PASS, 1 when a verification fails, 2 on a
// usage or input error. Reports go to stdout; timing and progress to stderr.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "symq/alt5.hpp"
#include "symq/classifier.hpp"
#include "symq/group_formula.hpp"
#include "symq/ordinal.hpp"
#include "symq/perm.hpp"
#include "symq/translate.hpp"

namespace {

using namespace symq;

struct UsageError : Error {
  using Error::Error;
};

class Out {
 public:
  explicit Out(bool machine) : machine_(machine) {}
  void kv(const std::string& key, const std::string& value) const {
    std::cout << key << (machine_ ? "\t" : ": ") << value << '\n';
  }
  void line(const std::string& s) const { std::cout << s << '\n'; }

 private:
  bool machine_;
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

bool print_report(const Out& out, const Report& r) {
  out.kv(r.name, r.pass() ? "PASS" : "FAIL");
  for (const auto& [k, v] : r.facts) out.kv(k, v);
  for (const auto& n : r.notes) out.kv("note", n);
  for (const auto& v : r.violations) out.kv("violation", v);
  return r.pass();
}

perm::TrivialConvention convention(bool exclude) {
  return exclude ? perm::TrivialConvention::kExclude : perm::TrivialConvention::kInclude;
}

struct PoolEntry {
  std::size_t arity;
  std::string formula;
};

std::vector<PoolEntry> read_pool(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open pool file " + path);
  std::vector<PoolEntry> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line);
    std::size_t arity;
    if (!(ls >> arity)) throw UsageError(path + ":" + std::to_string(lineno) + ": expected an arity");
    std::string rest;
    std::getline(ls, rest);
    const auto f = rest.find_first_not_of(" \t");
    if (f == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": missing formula");
    out.push_back({arity, rest.substr(f)});
  }
  return out;
}

std::string fact(const Report& r, const std::string& key) {
  for (const auto& [k, v] : r.facts)
    if (k == key) return v;
  return "";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetric group quotients: verification campaigns, formula translation and invariants"};
  app.require_subcommand(1);
  bool machine = false;
  app.add_flag("--machine", machine, "Emit key<TAB>value records");

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification campaign");
  verify->require_subcommand(1);
  auto* verify_a5 = verify->add_subcommand("a5", "Exhaustive checks on A(5)");
  std::string lemma = "all";
  verify_a5->add_option("--lemma", lemma, "3.3, 3.4, 3.5 or all")
      ->check(CLI::IsMember({"3.3", "3.4", "3.5", "all"}));
  auto* verify_ord = verify->add_subcommand("ordinal", "Randomized ordinal law checks");
  std::uint64_t seed = 1;
  std::size_t instances = 10000;
  verify_ord->add_option("--seed", seed, "Random seed");
  verify_ord->add_option("--instances", instances, "Instances per law");

  // census / conjugate
  std::size_t omega = 4;
  bool exclude = false;
  auto* census_cmd = app.add_subcommand("census", "Census of a tuple of permutations");
  std::string tuple_text;
  census_cmd->add_option("--omega", omega, "Ground set size")->required();
  census_cmd->add_option("tuple", tuple_text, "Comma-separated cycle notations, e.g. \"(0 1), (1 2 3)\"")->required();
  census_cmd->add_flag("--exclude-trivial", exclude, "Do not record one-point orbits");

  auto* conj_cmd = app.add_subcommand("conjugate", "Decide whether two tuples are conjugate");
  std::string tuple2_text;
  conj_cmd->add_option("--omega", omega, "Ground set size")->required();
  conj_cmd->add_option("first", tuple_text, "First tuple")->required();
  conj_cmd->add_option("second", tuple2_text, "Second tuple")->required();

  // translate / check-translation
  std::size_t arity = 0;
  std::string formula_text;
  bool weighted = false;
  auto* translate_cmd = app.add_subcommand("translate", "Compile a group formula into the census language");
  translate_cmd->add_option("--arity", arity, "Number of free variables x0..x{n-1}")->required();
  translate_cmd->add_flag("--weighted", weighted, "Use the orbit-size weighted Eq and Prod");
  translate_cmd->add_option("formula", formula_text, "Group formula")->required();

  auto* check_cmd = app.add_subcommand("check-translation", "Compare both evaluators on every assignment");
  std::string pool_path;
  check_cmd->add_option("--omega", omega, "Ground set size")->required();
  auto* arity_opt = check_cmd->add_option("--arity", arity, "Arity of a single formula");
  auto* pool_opt = check_cmd->add_option("--pool", pool_path, "File of 'arity formula' lines");
  auto* formula_opt = check_cmd->add_option("formula", formula_text, "Group formula");
  check_cmd->add_flag("--exclude-trivial", exclude, "Census model without one-point orbits");
  check_cmd->add_flag("--weighted", weighted, "Use the orbit-size weighted Eq and Prod");
  formula_opt->needs(arity_opt);
  formula_opt->excludes(pool_opt);

  // ordinal
  auto* ordinal = app.add_subcommand("ordinal", "Base-W ordinal calculator");
  ordinal->require_subcommand(1);
  std::string a_text, b_text;
  std::uint32_t k = 0;
  auto* cnf = ordinal->add_subcommand("cnf", "Normal form and coefficients");
  cnf->add_option("a", a_text)->required();
  auto* cf_cmd = ordinal->add_subcommand("cf", "Cofinality");
  cf_cmd->add_option("a", a_text)->required();
  auto* simk = ordinal->add_subcommand("simk", "Decide a ~_k b");
  simk->add_option("--k", k)->required();
  simk->add_option("a", a_text)->required();
  simk->add_option("b", b_text)->required();
  auto* canon = ordinal->add_subcommand("canon", "Canonical representative of the ~_k class");
  canon->add_option("--k", k)->required();
  canon->add_option("a", a_text)->required();
  auto* sum = ordinal->add_subcommand("sum", "Ordinal sum a + b");
  sum->add_option("a", a_text)->required();
  sum->add_option("b", b_text)->required();

  // classify / equiv
  std::string kappa, lambda, mu, continuum, spec1, spec2;
  auto* classify_cmd = app.add_subcommand("classify", "Invariants of a quotient");
  classify_cmd->add_option("--kappa", kappa)->required();
  classify_cmd->add_option("--lambda", lambda, "An aleph or mu+")->required();
  classify_cmd->add_option("--mu", mu)->required();
  classify_cmd->add_option("--continuum", continuum, "theta with 2^aleph_0 = aleph_theta")->required();
  classify_cmd->add_option("--k", k, "Highest level compared")->required();
  auto* equiv_cmd = app.add_subcommand("equiv", "Compare the invariants of two quotients");
  equiv_cmd->add_option("--spec1", spec1, "\"kappa, lambda, mu\"")->required();
  equiv_cmd->add_option("--spec2", spec2, "\"kappa, lambda, mu\"")->required();
  equiv_cmd->add_option("--continuum", continuum, "theta with 2^aleph_0 = aleph_theta")->required();
  equiv_cmd->add_option("--k", k, "Highest level compared")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return 2;
  }

  const Out out(machine);
  try {
    if (verify_a5->parsed()) {
      bool ok = true;
      auto run = [&](const char* name, Report (*fn)()) {
        std::cerr << "running lemma " << name << "...\n";
        Stopwatch sw;
        auto r = fn();
        std::cerr << "lemma " << name << " took " << sw.seconds() << " s\n";
        ok = print_report(out, r) && ok;
      };
      if (lemma == "3.3" || lemma == "all") run("3.3", alt5::check_lemma_3_3);
      if (lemma == "3.4" || lemma == "all") run("3.4", alt5::check_lemma_3_4);
      if (lemma == "3.5" || lemma == "all") run("3.5", alt5::check_lemma_3_5);
      return ok ? 0 : 1;
    }
    if (verify_ord->parsed()) {
      bool ok = true;
      for (auto fn : {ord::check_canonical_law, ord::check_absorption_law, ord::property_sum_congruence,
                      ord::check_map_law})
        ok = print_report(out, fn(seed, instances)) && ok;
      return ok ? 0 : 1;
    }
    if (census_cmd->parsed()) {
      const auto t = perm::PermTuple::parse(tuple_text, omega);
      const auto c = perm::census(t, convention(exclude));
      out.kv("arity", std::to_string(c.arity()));
      out.kv("weight", std::to_string(c.weight()));
      for (const auto& [type, count] : c.counts())
        out.kv("orbit type on " + std::to_string(type.degree) + " points [" + type.to_tuple().to_string() + "]",
               std::to_string(count));
      return 0;
    }
    if (conj_cmd->parsed()) {
      const auto t1 = perm::PermTuple::parse(tuple_text, omega);
      const auto t2 = perm::PermTuple::parse(tuple2_text, omega);
      const auto h = perm::tuples_conjugate(t1, t2);
      out.kv("conjugate", h ? "yes" : "no");
      if (h) out.kv("witness", h->to_string());
      return 0;
    }
    if (translate_cmd->parsed()) {
      const auto phi = logic::parse_group_formula(formula_text);
      out.line(logic::render(logic::translate(phi, arity, {.weighted = weighted})));
      return 0;
    }
    if (check_cmd->parsed()) {
      std::vector<PoolEntry> pool;
      if (!pool_path.empty()) pool = read_pool(pool_path);
      else if (!formula_text.empty()) pool.push_back({arity, formula_text});
      else throw UsageError("check-translation needs a formula or --pool");
      std::size_t failures = 0;
      Stopwatch total;
      // One model per census arity; a larger model serves smaller arities too.
      std::map<std::size_t, std::shared_ptr<const logic::MFinModel>> models;
      for (const auto& e : pool) {
        const auto phi = logic::parse_group_formula(e.formula);
        const auto model_arity = logic::translation_arity(phi, e.arity);
        auto& model = models[model_arity];
        if (!model) {
          std::cerr << "building census model for arity " << model_arity << "...\n";
          model = logic::build_m_fin(omega, model_arity, convention(exclude));
        }
        Stopwatch sw;
        const auto r = logic::check_translation(phi, e.arity, *model, {.weighted = weighted});
        std::cerr << e.formula << ": " << sw.seconds() << " s\n";
        if (!r.pass()) ++failures;
        const std::string row = fact(r, "agree") + "/" + fact(r, "assignments");
        if (machine) {
          out.line(std::string(r.pass() ? "PASS" : "FAIL") + "\t" + std::to_string(e.arity) + "\t" + row + "\t" +
                   e.formula);
        } else {
          out.line(std::string(r.pass() ? "PASS" : "FAIL") + "  arity " + std::to_string(e.arity) + "  " + row +
                   "  " + e.formula);
        }
        for (const auto& v : r.violations) out.kv("  violation", v);
      }
      std::cerr << "total " << total.seconds() << " s\n";
      out.kv("formulas", std::to_string(pool.size()));
      out.kv("failed", std::to_string(failures));
      return failures == 0 ? 0 : 1;
    }
    if (cnf->parsed()) {
      const auto a = ord::OrdOmega::parse(a_text);
      out.kv("cnf", a.to_string());
      for (const auto& t : a.terms()) {
        std::string level = t.level.k == 0 ? std::to_string(t.level.m)
                                           : "w*" + std::to_string(t.level.k) + "+" + std::to_string(t.level.m);
        out.kv("coefficient W^(" + level + ")", t.coeff.to_string());
      }
      return 0;
    }
    if (cf_cmd->parsed()) {
      out.kv("cf", ord::to_string(ord::cf(ord::OrdOmega::parse(a_text))));
      return 0;
    }
    if (simk->parsed()) {
      out.line(ord::sim_k(ord::OrdOmega::parse(a_text), ord::OrdOmega::parse(b_text), k) ? "true" : "false");
      return 0;
    }
    if (canon->parsed()) {
      out.line(ord::canonical_k(ord::OrdOmega::parse(a_text), k).to_string());
      return 0;
    }
    if (sum->parsed()) {
      out.line((ord::OrdOmega::parse(a_text) + ord::OrdOmega::parse(b_text)).to_string());
      return 0;
    }
    if (classify_cmd->parsed()) {
      const auto spec = classify::QuotientSpec::parse(kappa + ", " + lambda + ", " + mu,
                                                      ord::OrdOmega::parse(continuum));
      for (const auto& [key, value] : classify::invariants(spec, k).lines()) out.kv(key, value);
      return 0;
    }
    if (equiv_cmd->parsed()) {
      const auto theta = ord::OrdOmega::parse(continuum);
      const auto v = classify::equivalent(classify::QuotientSpec::parse(spec1, theta),
                                          classify::QuotientSpec::parse(spec2, theta), k);
      out.kv("verdict", v.agree ? "InvariantsAgree" : "Distinguished");
      if (!v.agree) out.kv("reason", v.reason);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
