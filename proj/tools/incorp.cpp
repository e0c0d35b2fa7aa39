// Command-line front end: incorporate new elements into a clause database,
// check the simplifier laws, or re-verify a previously produced database.
//
// Exit codes: 0 success (all checks pass), 1 a property failed (law
// counterexample, unsound or reducible output, measure violation), 2 bad
// input (unreadable or malformed file, bad usage).
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "incorp/incorp.hpp"

namespace {

using nlohmann::json;

struct cli_failure {
  int code;
  std::string message;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw cli_failure{2, "incorp: " + path + ": cannot open file"};
  return in;
}

std::vector<incorp::clauses::Clause> read_clauses(const std::string& path) {
  std::ifstream in = open_input(path);
  try {
    return incorp::clauses::read_clause_set(in);
  } catch (const incorp::parse_error& e) {
    throw cli_failure{2, "incorp: " + path + ": " + e.what()};
  }
}

std::vector<incorp::equations::Equation> read_equations(const std::string& path,
                                                        incorp::equations::Signature& sig) {
  std::ifstream in = open_input(path);
  try {
    return incorp::equations::read_equation_set(in, sig);
  } catch (const incorp::parse_error& e) {
    throw cli_failure{2, "incorp: " + path + ": " + e.what()};
  }
}

struct IncorporateOpts {
  std::string theory;
  std::string db_path;
  std::string new_path;
  std::string out_path;
  std::string procedure = "direct";
  bool trace = false;
};

struct ConformOpts {
  std::string theory;
  std::int64_t iters = 1000;
  std::uint64_t seed = 0;
};

struct VerifyOpts {
  std::string theory;
  std::string db_path;
  std::string new_path;
  std::string out_path;
  std::int64_t iters = 64;
  int atom_cap = 12;
  std::uint64_t seed = 0;
};

json stats_json(const IncorporateOpts& o, const incorp::IncorporationStats& st,
                std::size_t initial_queue, std::size_t initial_db, std::size_t final_db) {
  json j;
  j["procedure"] = o.procedure;
  j["theory"] = o.theory;
  j["initial_queue"] = initial_queue;
  j["initial_db"] = initial_db;
  j["final_db"] = final_db;
  j["iterations"] = st.iterations;
  j["true_discards"] = st.true_discards;
  j["back_simplifications"] = st.back_simplifications;
  j["nonempty_extractions"] = st.nonempty_extractions;
  j["empty_extractions"] = st.empty_extractions;
  if (o.trace) {
    json trace = json::array();
    for (const incorp::MeasurePair& m : st.measure_trace) trace.push_back({m.first, m.second});
    j["measure_trace"] = std::move(trace);
  }
  return j;
}

template <incorp::Simplifier S>
incorp::IncorporationResult<S> run_procedure(const S& sim, const std::string& procedure,
                                             incorp::element_set_t<S> q,
                                             incorp::element_set_t<S> s) {
  if (procedure == "limbo") return incorp::limbo_incorporate(sim, q, s);
  return incorp::direct_incorporate(sim, std::move(q), std::move(s));
}

template <typename Set>
void write_output(const std::string& path, const Set& set,
                  void (*writer)(std::ostream&, const Set&)) {
  std::ofstream out(path);
  if (!out) throw cli_failure{2, "incorp: " + path + ": cannot open file for writing"};
  writer(out, set);
  if (!out) throw cli_failure{2, "incorp: " + path + ": write failed"};
}

int run_incorporate(const IncorporateOpts& o) {
  json stats;
  try {
    if (o.theory == "clauses") {
      incorp::clauses::ClauseSimplifier sim;
      auto db = read_clauses(o.db_path);
      auto fresh = read_clauses(o.new_path);
      auto result = run_procedure(sim, o.procedure, fresh, db);
      write_output(o.out_path, result.final_db, incorp::clauses::write_clause_set);
      stats = stats_json(o, result.stats, fresh.size(), db.size(), result.final_db.size());
    } else {
      incorp::equations::Signature sig;
      incorp::equations::EquationSimplifier sim;
      auto db = read_equations(o.db_path, sig);
      auto fresh = read_equations(o.new_path, sig);
      auto result = run_procedure(sim, o.procedure, fresh, db);
      write_output(o.out_path, result.final_db, incorp::equations::write_equation_set);
      stats = stats_json(o, result.stats, fresh.size(), db.size(), result.final_db.size());
    }
  } catch (const incorp::measure_violation& e) {
    std::cerr << "incorp: " << e.what() << "\n";
    return 1;
  }
  std::cout << stats.dump(2) << "\n";
  return 0;
}

template <incorp::PrintableSimplifier S, incorp::GeneratorFor<S> G>
int run_conform_checks(const S& sim, const G& gen, const ConformOpts& o) {
  std::vector<incorp::LawReport> reports = incorp::check_laws(sim, gen, o.iters, o.seed);
  json j;
  j["theory"] = o.theory;
  j["iters"] = o.iters;
  j["seed"] = o.seed;
  json laws = json::array();
  bool all_passed = true;
  for (const incorp::LawReport& r : reports) {
    json entry;
    entry["law"] = r.law;
    entry["cases"] = r.cases;
    entry["passed"] = r.passed();
    if (r.counterexample) {
      entry["counterexample"] = {{"case", r.counterexample->case_index},
                                 {"description", r.counterexample->description}};
    } else {
      entry["counterexample"] = nullptr;
    }
    laws.push_back(std::move(entry));

    std::cerr << r.law;
    for (std::size_t pad = r.law.size(); pad < 22; ++pad) std::cerr << ' ';
    if (r.passed()) {
      std::cerr << "pass  (" << r.cases << " cases)\n";
    } else {
      all_passed = false;
      std::cerr << "FAIL  at case " << r.counterexample->case_index << ": "
                << r.counterexample->description << "\n";
    }
  }
  j["laws"] = std::move(laws);
  j["all_passed"] = all_passed;
  std::cout << j.dump(2) << "\n";
  return all_passed ? 0 : 1;
}

int run_conform(const ConformOpts& o) {
  if (o.theory == "clauses")
    return run_conform_checks(incorp::clauses::ClauseSimplifier{},
                              incorp::clauses::ClauseGenerator{}, o);
  return run_conform_checks(incorp::equations::EquationSimplifier{},
                            incorp::equations::EquationGenerator{}, o);
}

int report_verify(const VerifyOpts& o, bool irreducible, bool sound, std::size_t interps,
                  bool exhaustive) {
  json j;
  j["theory"] = o.theory;
  j["irreducible"] = irreducible;
  j["sound"] = sound;
  j["interpretations"] = interps;
  j["exhaustive"] = exhaustive;
  j["passed"] = irreducible && sound;
  std::cout << j.dump(2) << "\n";
  std::cerr << "irreducible: " << (irreducible ? "yes" : "NO") << "; sound: "
            << (sound ? "yes" : "NO") << " (" << interps << " interpretation"
            << (interps == 1 ? "" : "s") << (exhaustive ? ", exhaustive" : ", sampled") << ")\n";
  return irreducible && sound ? 0 : 1;
}

int run_verify(const VerifyOpts& o) {
  if (o.theory == "clauses") {
    incorp::clauses::ClauseSimplifier sim;
    auto db = read_clauses(o.db_path);
    auto fresh = read_clauses(o.new_path);
    auto after = read_clauses(o.out_path);

    std::set<std::string> atoms = incorp::clauses::atoms_of(db);
    for (const std::string& a : incorp::clauses::atoms_of(fresh)) atoms.insert(a);
    for (const std::string& a : incorp::clauses::atoms_of(after)) atoms.insert(a);
    std::vector<std::string> universe(atoms.begin(), atoms.end());

    std::vector<incorp::clauses::Valuation> interps;
    bool exhaustive = static_cast<int>(universe.size()) <= o.atom_cap;
    if (exhaustive) {
      interps = incorp::enumerate_valuations(universe, o.atom_cap);
    } else {
      incorp::Rng rng(o.seed);
      for (std::int64_t i = 0; i < o.iters; ++i)
        interps.push_back(incorp::clauses::random_valuation(universe, rng));
    }
    bool irreducible = incorp::irreducible_list(sim, after);
    bool sound = incorp::soundness_oracle(sim, fresh, db, after, interps);
    return report_verify(o, irreducible, sound, interps.size(), exhaustive);
  }

  incorp::equations::Signature sig;
  incorp::equations::EquationSimplifier sim;
  auto db = read_equations(o.db_path, sig);
  auto fresh = read_equations(o.new_path, sig);
  auto after = read_equations(o.out_path, sig);

  std::vector<incorp::equations::FiniteAlgebra> interps;
  incorp::Rng rng(o.seed);
  for (std::int64_t i = 0; i < o.iters; ++i)
    interps.push_back(incorp::equations::random_algebra(sig, rng));
  bool irreducible = incorp::irreducible_list(sim, after);
  bool sound = incorp::soundness_oracle(sim, fresh, db, after, interps);
  return report_verify(o, irreducible, sound, interps.size(), false);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"incorporate new elements into a simplified clause database"};
  app.require_subcommand(1);

  IncorporateOpts inc;
  CLI::App* inc_cmd =
      app.add_subcommand("incorporate", "incorporate a file of new elements into a database");
  inc_cmd->add_option("--theory", inc.theory, "element theory")
      ->required()
      ->check(CLI::IsMember({"clauses", "equations"}));
  inc_cmd->add_option("--db", inc.db_path, "database file")->required();
  inc_cmd->add_option("--new", inc.new_path, "file of new elements")->required();
  inc_cmd->add_option("--out", inc.out_path, "output database file")->required();
  inc_cmd->add_option("--procedure", inc.procedure, "incorporation procedure")
      ->check(CLI::IsMember({"direct", "limbo"}));
  inc_cmd->add_flag("--trace", inc.trace, "include the measure trace in the stats");

  ConformOpts con;
  CLI::App* con_cmd =
      app.add_subcommand("conform", "check the simplifier laws on random inputs");
  con_cmd->add_option("--theory", con.theory, "element theory")
      ->required()
      ->check(CLI::IsMember({"clauses", "equations"}));
  con_cmd->add_option("--iters", con.iters, "cases per law")->check(CLI::PositiveNumber);
  con_cmd->add_option("--seed", con.seed, "random seed");

  VerifyOpts ver;
  CLI::App* ver_cmd =
      app.add_subcommand("verify", "re-check an incorporation output independently");
  ver_cmd->add_option("--theory", ver.theory, "element theory")
      ->required()
      ->check(CLI::IsMember({"clauses", "equations"}));
  ver_cmd->add_option("--db", ver.db_path, "database file before incorporation")->required();
  ver_cmd->add_option("--new", ver.new_path, "file of new elements")->required();
  ver_cmd->add_option("--out", ver.out_path, "incorporation output to verify")->required();
  ver_cmd->add_option("--iters", ver.iters, "sampled interpretations")
      ->check(CLI::PositiveNumber);
  ver_cmd->add_option("--atom-cap", ver.atom_cap,
                      "largest atom universe checked exhaustively (clauses)")
      ->check(CLI::PositiveNumber);
  ver_cmd->add_option("--seed", ver.seed, "random seed for sampled interpretations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*inc_cmd) return run_incorporate(inc);
    if (*con_cmd) return run_conform(con);
    return run_verify(ver);
  } catch (const cli_failure& e) {
    std::cerr << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "incorp: " << e.what() << "\n";
    return 2;
  }
}
