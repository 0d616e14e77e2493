// Command-line front end: derivation chains, machine export, splitting and
// factorization queries, the two proof pipelines, table verification, and
// the growth-rate eigenvalue.
//
// Exit codes: 0 = success / all gates passed, 1 = usage or domain error,
// 2 = proof-gate failure, 3 = resource limit.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "audioactive/chemistry.hpp"
#include "audioactive/io.hpp"
#include "audioactive/machines.hpp"
#include "audioactive/theorems.hpp"

namespace {

namespace chem = audioactive::chemistry;
namespace fst = audioactive::fst;
namespace io = audioactive::io;
namespace machines = audioactive::machines;
namespace theorems = audioactive::theorems;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitGateFailure = 2;
constexpr int kExitResourceLimit = 3;

// Exact integer rendering: single digits as themselves, larger run counts
// bracketed so "[10]2" cannot be misread as four symbols.
std::string render_int_word(const chem::IntWord& w) {
  std::string out;
  for (int v : w) {
    if (v >= 0 && v <= 9)
      out.push_back(static_cast<char>('0' + v));
    else
      out += "[" + std::to_string(v) + "]";
  }
  return out;
}

std::string ascii_word(const fst::SymbolTable& table, const fst::Word& w) {
  return fst::format_word(table, w, /*ascii_mark=*/true);
}

int cmd_derive(const std::string& word, int n, const std::string& format) {
  std::vector<std::string> steps;
  if (word.find('d') != std::string::npos) {
    // d-words live in the projected alphabet where every value >= 4
    // renders as d; exact counts above 9 cannot occur alongside d in a
    // meaningful word, so the projected view is the faithful one.
    std::string w(word);
    for (int i = 0; i < n; ++i) {
      w = chem::derive(w);
      steps.push_back(w);
    }
  } else {
    chem::IntWord w = chem::to_int_word(word);
    for (int i = 0; i < n; ++i) {
      w = chem::derive(w);
      steps.push_back(render_int_word(w));
    }
  }
  if (format == "json") {
    nlohmann::json j;
    j["word"] = word;
    j["steps"] = steps;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const std::string& s : steps) std::cout << s << "\n";
  }
  return kExitOk;
}

int cmd_audio(const std::string& word, int n, const std::string& format) {
  const bool marked = word.find('*') != std::string::npos;
  const fst::SymbolTable& table =
      marked ? machines::marked_alphabet() : machines::base_alphabet();
  const fst::Transducer machine =
      marked ? machines::audio_plus() : machines::audio();
  std::set<fst::Word> words = {fst::parse_word(table, word)};
  for (int i = 0; i < n; ++i) {
    std::set<fst::Word> next;
    for (const fst::Word& w : words)
      for (fst::Word& v : fst::transduce(machine, w))
        next.insert(std::move(v));
    words = std::move(next);
  }
  std::vector<std::string> outputs;
  for (const fst::Word& w : words) outputs.push_back(ascii_word(table, w));
  if (format == "json") {
    nlohmann::json j;
    j["word"] = word;
    j["steps"] = n;
    j["outputs"] = outputs;
    std::cout << j.dump(2) << "\n";
  } else if (outputs.empty()) {
    std::cout << "(no output: word is outside the input language)\n";
  } else {
    for (const std::string& s : outputs) std::cout << s << "\n";
  }
  return kExitOk;
}

// Depth of the first derivation step at which the two halves merge, or -1
// if they stay independent through `depth` steps.
int first_merge_depth(const std::string& u, const std::string& v, int depth) {
  const int last = chem::to_int_word(u).back();
  const std::vector<int> heads = chem::leading_symbols(v, depth);
  for (std::size_t i = 0; i < heads.size(); ++i)
    if (heads[i] == last) return static_cast<int>(i) + 1;
  return -1;
}

int cmd_split(const std::string& query, int depth, const std::string& format) {
  const std::size_t pos = query.find('*');
  if (pos == std::string::npos || query.find('*', pos + 1) != std::string::npos)
    throw std::invalid_argument("split expects exactly one mark, e.g. 3*2212");
  const std::string u = query.substr(0, pos);
  const std::string v = query.substr(pos + 1);
  if (u.empty() || v.empty())
    throw std::invalid_argument("split: both sides of the mark must be nonempty");
  const int fails_at = first_merge_depth(u, v, depth);
  if (format == "json") {
    nlohmann::json j;
    j["left"] = u;
    j["right"] = v;
    j["depth"] = depth;
    j["valid"] = fails_at < 0;
    if (fails_at >= 0) j["fails_at_depth"] = fails_at;
    std::cout << j.dump(2) << "\n";
  } else if (fails_at < 0) {
    std::cout << "valid splitting\n";
  } else {
    std::cout << "not a splitting (fails at depth " << fails_at << ")\n";
  }
  return kExitOk;
}

int cmd_factorize(const std::string& word, int depth,
                  const std::string& format) {
  const std::vector<std::string> factors =
      chem::atomic_factorization(word, depth);
  const auto& table = chem::PeriodicTable::standard();
  if (format == "json") {
    nlohmann::json parts = nlohmann::json::array();
    for (const std::string& f : factors) {
      nlohmann::json p;
      p["word"] = f;
      if (const chem::Element* e = table.find_by_word(f)) p["name"] = e->name;
      parts.push_back(std::move(p));
    }
    nlohmann::json j;
    j["word"] = word;
    j["factors"] = parts;
    j["atom"] = factors.size() == 1;
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  if (factors.size() == 1) {
    if (const chem::Element* e = table.find_by_word(factors.front()))
      std::cout << word << " = " << e->name << "\n";
    else
      std::cout << word << " (atom)\n";
    return kExitOk;
  }
  std::string line = word + " =";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const chem::Element* e = table.find_by_word(factors[i]);
    if (i > 0) line += " ·";
    line += " " + (e ? e->name : factors[i]);
  }
  std::cout << line << "\n";
  return kExitOk;
}

int cmd_elements(const std::string& format) {
  const auto& table = chem::PeriodicTable::standard();
  if (format == "json") {
    std::cout << table.to_json() << "\n";
    return kExitOk;
  }
  for (const chem::Element& e : table.elements()) {
    std::string decay;
    for (const std::string& name : e.decay)
      decay += (decay.empty() ? "" : " ") + name;
    std::printf("%3d %-3s -> %-18s %s\n", e.atomic_number, e.name.c_str(),
                decay.c_str(), e.word.c_str());
  }
  return kExitOk;
}

int cmd_growth(const std::string& format) {
  const chem::GrowthReport r =
      chem::growth_rate(chem::PeriodicTable::standard());
  if (format == "json") {
    nlohmann::json j;
    j["lambda"] = r.lambda;
    j["residual"] = r.residual;
    j["iterations"] = r.iterations;
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("lambda   = %.10f\n", r.lambda);
    std::printf("residual = %.3e (%d iterations)\n", r.residual, r.iterations);
  }
  return kExitOk;
}

// Collects gate results; in JSON output mode the commentary goes to stderr
// so stdout stays a single parseable document.
class GateLog {
 public:
  explicit GateLog(std::ostream& out) : out_(out) {}

  void check(bool passed, const std::string& what,
             const std::string& detail = "") {
    ok_ = ok_ && passed;
    out_ << "gate: " << what << ": " << (passed ? "ok" : "FAILED");
    if (!passed && !detail.empty()) out_ << " — " << detail;
    out_ << "\n";
  }

  void note(const std::string& text) { out_ << "note: " << text << "\n"; }

  bool ok() const { return ok_; }

 private:
  std::ostream& out_;
  bool ok_ = true;
};

std::string resolve_golden_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("AUDIOACTIVE_GOLDEN")) return env;
  return {};
}

void golden_gate(GateLog& log, const std::string& golden_dir,
                 const std::string& filename, const std::string& produced) {
  if (golden_dir.empty()) return;
  const std::string path = golden_dir + "/" + filename;
  std::ifstream in(path);
  if (!in) {
    log.note("golden file " + path + " not found; comparison skipped");
    return;
  }
  nlohmann::json expected, actual;
  try {
    in >> expected;
    actual = nlohmann::json::parse(produced);
  } catch (const nlohmann::json::exception& ex) {
    log.check(false, "golden comparison against " + path, ex.what());
    return;
  }
  log.check(expected == actual, "golden comparison against " + path,
            "report differs from the recorded one");
}

void splitting_gates(const theorems::SplittingReport& r, GateLog& log) {
  const std::vector<int>& expected = theorems::expected_splitting_sizes();
  const bool sizes_ok =
      r.sizes.size() >= expected.size() &&
      std::equal(expected.begin(), expected.end(), r.sizes.begin());
  log.check(sizes_ok, "state counts for n=1..9 match the reference series");
  if (r.sizes.size() >= 10)
    log.check(r.sizes[9] == 21, "state count stays 21 at n=10");
  log.check(r.found_fixed_point && r.fixed_point_n == 9, "fixed point at n=9",
            r.found_fixed_point
                ? "found at n=" + std::to_string(r.fixed_point_n)
                : "no fixed point within bound");
  if (!r.found_fixed_point) return;
  log.check(r.splitting_recognizer.num_states == 21,
            "splitting recognizer has 21 states",
            std::to_string(r.splitting_recognizer.num_states) + " states");
  log.check(fst::canonicalize(r.splitting_recognizer) ==
                fst::canonicalize(theorems::reference_splitting_dfa()),
            "splitting recognizer matches the hand-entered reference");
}

struct ProvenPipeline {
  theorems::SplittingReport splitting;
  fst::Dfa atom;
  fst::Transducer atomicf;
};

ProvenPipeline build_pipeline(int splitting_max_n = 11) {
  ProvenPipeline p;
  p.splitting = theorems::prove_splitting(splitting_max_n);
  if (!p.splitting.found_fixed_point)
    throw std::runtime_error(
        "splitting iteration found no fixed point; cannot continue");
  p.atom = theorems::build_atom_recognizer(p.splitting.splitting_recognizer);
  p.atomicf =
      theorems::build_atomicf(p.splitting.splitting_recognizer, p.atom);
  return p;
}

void atom_gates(const ProvenPipeline& p, GateLog& log) {
  log.check(p.atom.num_states == 26, "atom recognizer has 26 states",
            std::to_string(p.atom.num_states) + " states");
  log.check(fst::canonicalize(p.atom) ==
                fst::canonicalize(theorems::reference_atom_dfa()),
            "atom recognizer matches the hand-entered reference");
}

void cosmology_gates(const theorems::CosmologyReport& r,
                     const theorems::Verdict& verdict, GateLog& log) {
  log.check(r.found_fixed_point && r.fixed_point_n == 24,
            "generated language stabilizes at n=24",
            r.found_fixed_point
                ? "stabilized at n=" + std::to_string(r.fixed_point_n)
                : "no fixed point within bound");
  if (!r.found_fixed_point) return;
  log.check(r.stabilized_one_more, "fixed point holds one step further");
  log.check(r.elements.size() == 94, "fixed-point language has 94 words",
            std::to_string(r.elements.size()) + " words");
  const std::vector<int>& expected = theorems::expected_cosmology_sizes();
  auto hard = [&](std::size_t n, int count) {
    log.check(r.sizes.size() >= n && r.sizes[n - 1] == count,
              "generator has " + std::to_string(count) +
                  " states at n=" + std::to_string(n),
              r.sizes.size() >= n ? std::to_string(r.sizes[n - 1]) + " states"
                                  : "series too short");
  };
  hard(1, 43);
  hard(6, 592);
  hard(24, 243);
  hard(25, 243);
  for (std::size_t i = 0; i < expected.size() && i < r.sizes.size(); ++i) {
    if (r.sizes[i] != expected[i] && i != 0 && i != 5 && i != 23 && i != 24)
      log.note("size at n=" + std::to_string(i + 1) + " is " +
               std::to_string(r.sizes[i]) + ", reference series has " +
               std::to_string(expected[i]));
  }
  log.check(verdict.ok, "periodic table verification",
            verdict.failures.empty() ? "" : verdict.failures.front());
  for (const std::string& f : verdict.failures) log.note(f);
}

int cmd_prove_splitting(int max_n, const std::string& format,
                        const std::string& golden_flag) {
  const theorems::SplittingReport report = theorems::prove_splitting(max_n);
  const std::string produced = theorems::splitting_report_json(report);
  const bool json = format == "json";
  GateLog log(json ? std::cerr : std::cout);
  if (json) {
    std::cout << produced << "\n";
  } else {
    for (std::size_t i = 0; i < report.sizes.size(); ++i)
      std::cout << "n=" << i + 1 << ": " << report.sizes[i] << " states\n";
    if (report.found_fixed_point)
      std::cout << "fixed point n=" << report.fixed_point_n << "\n";
    else
      std::cout << "no fixed point within bound\n";
  }
  splitting_gates(report, log);
  golden_gate(log, resolve_golden_dir(golden_flag), "splitting.json",
              produced);
  if (!json)
    std::cout << (log.ok() ? "all gates passed\n" : "proof gates failed\n");
  return log.ok() ? kExitOk : kExitGateFailure;
}

int cmd_prove_cosmological(int max_n, const std::string& format,
                           const std::string& golden_flag) {
  const ProvenPipeline p = build_pipeline();
  const theorems::CosmologyReport report =
      theorems::prove_cosmological(p.atomicf, max_n);
  const theorems::Verdict verdict = theorems::verify_periodic_table(
      report, chem::PeriodicTable::standard());
  const std::string produced =
      theorems::cosmology_report_json(report, &verdict);
  const bool json = format == "json";
  GateLog log(json ? std::cerr : std::cout);
  if (json) {
    std::cout << produced << "\n";
  } else {
    for (std::size_t i = 0; i < report.sizes.size(); ++i)
      std::cout << "n=" << i + 1 << ": " << report.sizes[i] << " states\n";
    if (report.found_fixed_point)
      std::cout << "E stabilizes at n=" << report.fixed_point_n << " with "
                << report.elements.size() << " elements\n";
    else
      std::cout << "no fixed point within bound\n";
  }
  splitting_gates(p.splitting, log);
  atom_gates(p, log);
  cosmology_gates(report, verdict, log);
  golden_gate(log, resolve_golden_dir(golden_flag), "cosmological.json",
              produced);
  if (!json)
    std::cout << (log.ok() ? "all gates passed\n" : "proof gates failed\n");
  return log.ok() ? kExitOk : kExitGateFailure;
}

int cmd_verify_table(int max_n, const std::string& format) {
  const ProvenPipeline p = build_pipeline();
  const theorems::CosmologyReport report =
      theorems::prove_cosmological(p.atomicf, max_n);
  const theorems::Verdict verdict = theorems::verify_periodic_table(
      report, chem::PeriodicTable::standard());
  if (format == "json") {
    std::cout << theorems::cosmology_report_json(report, &verdict) << "\n";
  } else if (verdict.ok) {
    std::cout << "periodic table verified: " << report.elements.size()
              << " elements, every decay matches\n";
  } else {
    for (const std::string& f : verdict.failures)
      std::cout << "mismatch: " << f << "\n";
  }
  return verdict.ok ? kExitOk : kExitGateFailure;
}

int cmd_audit(int n, std::size_t limit_states, const std::string& format) {
  const theorems::AuditResult r = theorems::audit_audio_src(n, limit_states);
  if (format == "json") {
    nlohmann::json j;
    j["n"] = r.n;
    j["aborted"] = r.aborted;
    if (r.aborted)
      j["message"] = r.message;
    else
      j["states"] = r.states;
    std::cout << j.dump(2) << "\n";
  } else if (r.aborted) {
    std::cout << "audit aborted: " << r.message << "\n";
  } else {
    std::cout << "n=" << r.n << ": " << r.states << " states\n";
  }
  return r.aborted ? kExitResourceLimit : kExitOk;
}

int cmd_export(const std::string& name, const std::string& format) {
  const std::optional<machines::MachineId> id = machines::parse_machine_id(name);
  if (!id)
    throw std::invalid_argument("unknown machine '" + name + "'");
  std::string graph_name = name;
  std::replace(graph_name.begin(), graph_name.end(), '+', 'p');
  std::string text;
  if (!machines::is_derived(*id)) {
    const fst::Transducer t = machines::build(*id);
    text = format == "dot" ? io::to_dot(t, graph_name) : io::to_json(t);
  } else {
    const ProvenPipeline p = build_pipeline();
    switch (*id) {
      case machines::MachineId::splitting:
        text = format == "dot"
                   ? io::to_dot(p.splitting.splitting_recognizer, graph_name)
                   : io::to_json(p.splitting.splitting_recognizer);
        break;
      case machines::MachineId::atom:
        text = format == "dot" ? io::to_dot(p.atom, graph_name)
                               : io::to_json(p.atom);
        break;
      default:
        text = format == "dot" ? io::to_dot(p.atomicf, graph_name)
                               : io::to_json(p.atomicf);
        break;
    }
  }
  std::cout << text << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "run-length derivation machines: queries, proofs and exports"};
  app.require_subcommand(1);

  std::string word, query, machine, which;
  std::string format = "human";
  std::string golden_dir;
  int steps = 1;
  int depth = 30;
  int max_n = -1;
  int audit_n = 0;
  std::size_t limit_states = 0;

  auto add_format = [&](CLI::App* sub, bool with_dot) {
    sub->add_option("--format", format,
                    with_dot ? "output format (json|dot)"
                             : "output format (human|json)")
        ->check(CLI::IsMember(with_dot
                                  ? std::vector<std::string>{"json", "dot"}
                                  : std::vector<std::string>{"human", "json"}));
  };

  CLI::App* derive = app.add_subcommand(
      "derive", "print the run-length derivation chain of a word "
                "(the letter d stands for any digit >= 4)");
  derive->add_option("word", word)->required();
  derive->add_option("-n,--steps", steps, "number of steps (default 1)")
      ->check(CLI::NonNegativeNumber);
  add_format(derive, false);

  CLI::App* audio = app.add_subcommand(
      "audio", "apply the derivation transducer (marked words use *)");
  audio->add_option("word", word)->required();
  audio->add_option("-n,--steps", steps, "number of applications (default 1)")
      ->check(CLI::NonNegativeNumber);
  add_format(audio, false);

  CLI::App* split = app.add_subcommand(
      "split", "test whether u*v derives as two independent halves");
  split->add_option("word", query, "marked word, e.g. 3*2212")->required();
  split->add_option("--depth", depth, "derivation depth to check (default 30)")
      ->check(CLI::PositiveNumber);
  add_format(split, false);

  CLI::App* factorize =
      app.add_subcommand("factorize", "atomic factorization of a word");
  factorize->add_option("word", word)->required();
  factorize
      ->add_option("--depth", depth, "derivation depth to check (default 30)")
      ->check(CLI::PositiveNumber);
  add_format(factorize, false);

  CLI::App* elements =
      app.add_subcommand("elements", "print the 94-element periodic table");
  add_format(elements, false);

  CLI::App* growth =
      app.add_subcommand("growth", "dominant eigenvalue of the decay matrix");
  add_format(growth, false);

  CLI::App* prove = app.add_subcommand(
      "prove", "run a proof pipeline and check its gates");
  prove->add_option("which", which, "splitting | cosmological")
      ->required()
      ->check(CLI::IsMember({"splitting", "cosmological"}));
  prove->add_option("--max-n", max_n, "iteration bound")
      ->check(CLI::PositiveNumber);
  prove->add_option("--golden", golden_dir,
                    "directory with recorded reports (also via "
                    "AUDIOACTIVE_GOLDEN)");
  add_format(prove, false);

  CLI::App* verify = app.add_subcommand(
      "verify-table", "verify the periodic table against the enumeration");
  verify->add_option("--max-n", max_n, "iteration bound (default 26)")
      ->check(CLI::PositiveNumber);
  add_format(verify, false);

  CLI::App* audit = app.add_subcommand(
      "audit-audio-src", "minimized state count of the n-step generator "
                         "without factor folding (expensive)");
  audit->add_option("-n,--steps", audit_n, "number of steps (1..25)")
      ->required();
  audit->add_option("--limit-states", limit_states,
                    "abort if a determinization exceeds this many states");
  add_format(audit, false);

  CLI::App* exp = app.add_subcommand("export", "emit a machine as JSON or DOT");
  exp->add_option("machine", machine,
                  "multi|mark|scissors|counter1|counter2|counter3|counterd|"
                  "sink|src|audio|audio+|splitting|atom|atomicf")
      ->required();
  format = "human";
  add_format(exp, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (derive->parsed()) return cmd_derive(word, steps, format);
    if (audio->parsed()) return cmd_audio(word, steps, format);
    if (split->parsed()) return cmd_split(query, depth, format);
    if (factorize->parsed()) return cmd_factorize(word, depth, format);
    if (elements->parsed()) return cmd_elements(format);
    if (growth->parsed()) return cmd_growth(format);
    if (prove->parsed()) {
      if (which == "splitting")
        return cmd_prove_splitting(max_n > 0 ? max_n : 11, format, golden_dir);
      return cmd_prove_cosmological(max_n > 0 ? max_n : 26, format,
                                    golden_dir);
    }
    if (verify->parsed())
      return cmd_verify_table(max_n > 0 ? max_n : 26, format);
    if (audit->parsed()) return cmd_audit(audit_n, limit_states, format);
    if (exp->parsed())
      return cmd_export(machine, format == "human" ? "json" : format);
  } catch (const fst::ResourceLimit& ex) {
    std::cerr << "resource limit: " << ex.what() << "\n";
    return kExitResourceLimit;
  } catch (const fst::LimitExceeded& ex) {
    std::cerr << "resource limit: " << ex.what() << "\n";
    return kExitResourceLimit;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const chem::NotFound& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitGateFailure;
  }
  return kExitUsage;
}
