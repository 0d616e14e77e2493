#include "audioactive/theorems.hpp"

#include <algorithm>
#include <new>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "audioactive/machines.hpp"

namespace audioactive::theorems {

using fst::Dfa;
using fst::Transducer;
using machines::base_alphabet;
using machines::marked_alphabet;

namespace {

// Minimize a generator by viewing it through the transpose: swap the tape
// roles so it becomes a recognizer, minimize that, and swap back.
Transducer min_gen(const Transducer& g, std::size_t max_states = 0) {
  return fst::transpose(
      fst::minimize(fst::transpose(g), max_states).to_transducer());
}

Dfa make_dfa(const fst::SymbolTable& alphabet, int num_states,
             const std::vector<int>& finals,
             const std::vector<std::vector<int>>& rows) {
  Dfa d;
  d.alphabet = alphabet;
  d.num_states = num_states;
  d.accepting.assign(static_cast<std::size_t>(num_states), 0);
  for (int f : finals) d.accepting[static_cast<std::size_t>(f)] = 1;
  const std::size_t width = static_cast<std::size_t>(alphabet.size());
  d.next.assign(static_cast<std::size_t>(num_states) * width, fst::no_state);
  for (int s = 0; s < num_states; ++s)
    for (std::size_t a = 0; a < width; ++a)
      d.next[static_cast<std::size_t>(s) * width + a] =
          rows[static_cast<std::size_t>(s)][a];
  d.validate();
  return d;
}

}  // namespace

SplittingReport prove_splitting(int max_n) {
  if (max_n < 2)
    throw std::invalid_argument("prove_splitting: max_n must be at least 2");
  SplittingReport report;
  const Transducer step = machines::audio_plus();
  // R_0 accepts every marked word; each iteration keeps the words that
  // survive one more derivation step with the mark still legally placed.
  Transducer r = machines::sink(marked_alphabet());
  for (int n = 1; n <= max_n; ++n) {
    Dfa m = fst::minimize(fst::compose(step, r));
    report.sizes.push_back(m.num_states);
    report.recognizers.push_back(m);
    r = report.recognizers.back().to_transducer();
    if (n >= 2 && !report.found_fixed_point &&
        report.recognizers[static_cast<std::size_t>(n) - 2] ==
            report.recognizers[static_cast<std::size_t>(n) - 1]) {
      report.found_fixed_point = true;
      report.fixed_point_n = n - 1;
      report.splitting_recognizer =
          report.recognizers[static_cast<std::size_t>(n) - 2];
    }
  }
  return report;
}

Dfa build_atom_recognizer(const Dfa& splitting) {
  // Words some interior cut of which is a splitting, read back over the
  // unmarked alphabet.
  const Transducer divisible =
      fst::compose(machines::mark(), splitting.to_transducer());
  const Dfa not_divisible = fst::complement(divisible);
  // Day-one filter: the image of one derivation step.
  const Dfa day_one =
      fst::minimize(fst::compose(machines::audio(), machines::sink()));
  return fst::minimize(fst::compose(fst::to_filter(day_one.to_transducer()),
                                    not_divisible.to_transducer()));
}

Transducer build_atomicf(const Dfa& splitting, const Dfa& atom) {
  // Insert marks every way, keep only markings that are splittings, cut
  // out one marked factor, keep only factors that are atoms.
  Transducer t = machines::multi();
  t = fst::compose(t, fst::to_filter(splitting.to_transducer()));
  t = fst::compose(t, machines::scissors());
  t = fst::compose(t, fst::to_filter(atom.to_transducer()));
  return fst::reduce_transducer(t);
}

CosmologyReport prove_cosmological(const Transducer& atomicf, int max_n) {
  if (max_n < 2)
    throw std::invalid_argument(
        "prove_cosmological: max_n must be at least 2");
  CosmologyReport report;
  // One interleaved step: derive once, then take atomic factors. Folding
  // the factor map into every step keeps the generators small without
  // changing the generated language (the atomic factors of a derivation
  // are the atomic factors of the derivations of the atomic factors).
  const Transducer step =
      fst::reduce_transducer(fst::compose(machines::audio(), atomicf));
  Transducer h = min_gen(fst::compose(machines::src(base_alphabet()), atomicf));
  std::vector<Dfa> langs;  // minimized recognizer views of each H_n
  std::vector<Transducer> gens;
  for (int n = 1; n <= max_n; ++n) {
    Dfa lang = fst::minimize(fst::transpose(fst::compose(h, step)));
    h = fst::transpose(lang.to_transducer());
    report.sizes.push_back(lang.num_states);
    langs.push_back(std::move(lang));
    gens.push_back(h);
  }
  for (std::size_t i = 0; i + 1 < langs.size(); ++i) {
    if (langs[i] == langs[i + 1]) {
      report.found_fixed_point = true;
      report.fixed_point_n = static_cast<int>(i) + 1;
      report.stabilized_one_more =
          i + 2 < langs.size() && langs[i + 1] == langs[i + 2];
      report.fixed_point_generator = gens[i];
      break;
    }
  }
  if (!report.found_fixed_point) return report;
  std::vector<fst::Word> words =
      fst::enumerate_language(report.fixed_point_generator, 1000);
  const auto& table = chemistry::PeriodicTable::standard();
  for (const fst::Word& w : words) {
    std::string text = fst::format_word(base_alphabet(), w);
    const chemistry::Element* e = table.find_by_word(text);
    report.named[text] = e ? e->name : std::string();
    report.elements.push_back(std::move(text));
  }
  return report;
}

Verdict verify_periodic_table(const CosmologyReport& report,
                              const chemistry::PeriodicTable& table) {
  Verdict verdict;
  auto fail = [&verdict](std::string line) {
    verdict.ok = false;
    verdict.failures.push_back(std::move(line));
  };
  if (!report.found_fixed_point) {
    fail("no fixed point: nothing to verify");
    return verdict;
  }

  std::vector<std::string> enumerated = report.elements;
  std::sort(enumerated.begin(), enumerated.end());
  std::vector<std::string> expected;
  expected.reserve(table.elements().size());
  for (const auto& e : table.elements()) expected.push_back(e.word);
  std::sort(expected.begin(), expected.end());
  for (const std::string& w : enumerated)
    if (!std::binary_search(expected.begin(), expected.end(), w))
      fail("enumerated word not in the table: " + w);
  for (const std::string& w : expected)
    if (!std::binary_search(enumerated.begin(), enumerated.end(), w))
      fail("table word not enumerated: " + w);

  for (const auto& e : table.elements()) {
    std::vector<std::string> factors;
    try {
      factors = chemistry::atomic_factorization(chemistry::derive(e.word));
    } catch (const std::exception& ex) {
      fail("decay of " + e.name + ": " + ex.what());
      continue;
    }
    std::vector<std::string> names;
    names.reserve(factors.size());
    bool resolved = true;
    for (const std::string& f : factors) {
      const chemistry::Element* p = table.find_by_word(f);
      if (!p) {
        fail("decay of " + e.name + ": factor " + f + " is not an element");
        resolved = false;
        break;
      }
      names.push_back(p->name);
    }
    if (resolved && names != e.decay)
      fail("decay of " + e.name + " does not match its decay list");
    for (const std::string& name : e.decay) {
      const std::string& w = table.by_name(name).word;
      if (!std::binary_search(enumerated.begin(), enumerated.end(), w))
        fail("decay product " + name + " of " + e.name + " not enumerated");
    }
  }
  return verdict;
}

AuditResult audit_audio_src(int n, std::size_t max_states) {
  if (n < 1 || n > 25)
    throw std::invalid_argument("audit_audio_src: n must be in 1..25");
  AuditResult result;
  result.n = n;
  try {
    Transducer h = fst::compose(machines::src(base_alphabet()),
                                machines::audio());
    h = min_gen(h, max_states);
    for (int k = 2; k <= n; ++k)
      h = min_gen(fst::compose(h, machines::audio()), max_states);
    result.states = h.num_states;
  } catch (const fst::ResourceLimit& ex) {
    result.aborted = true;
    result.message = ex.what();
  } catch (const std::bad_alloc&) {
    result.aborted = true;
    result.message = "out of memory";
  }
  return result;
}

Dfa reference_splitting_dfa() {
  // Hand-entered 21-state recognizer of splittings (columns 1,2,3,d,mark;
  // -1 = no transition). State 0 is the start state.
  static const std::vector<std::vector<int>> rows = {
      {1, 4, 7, 10, 0},      // 0
      {2, 4, 7, 10, 13},     // 1
      {3, 4, 7, 10, 13},     // 2
      {-1, 4, 7, 10, 13},    // 3
      {1, 5, 7, 10, 15},     // 4
      {1, 6, 7, 10, 15},     // 5
      {1, -1, 7, 10, 15},    // 6
      {1, 4, 8, 10, 13},     // 7
      {1, 4, 9, 10, 13},     // 8
      {1, 4, -1, 10, 13},    // 9
      {1, 4, 7, 11, 12},     // 10
      {1, 4, 7, 12, 12},     // 11
      {1, 4, 7, -1, 12},     // 12
      {-1, 14, -1, -1, 13},  // 13
      {-1, 15, -1, -1, -1},  // 14
      {16, -1, 18, 19, 15},  // 15
      {17, 6, 9, 12, -1},    // 16
      {3, -1, -1, -1, -1},   // 17
      {2, 5, -1, 11, 13},    // 18
      {1, 4, 7, 20, 12},     // 19
      {-1, -1, -1, 12, -1},  // 20
  };
  std::vector<int> finals;
  for (int s = 0; s < 21; ++s)
    if (s != 14 && s != 16 && s != 17 && s != 20) finals.push_back(s);
  return make_dfa(marked_alphabet(), 21, finals, rows);
}

Dfa reference_atom_dfa() {
  // Hand-entered 26-state recognizer of atoms (columns 1,2,3,d).
  static const std::vector<std::vector<int>> rows = {
      {1, 24, 23, 16},    // 0
      {2, 4, 23, 16},     // 1
      {3, 4, 23, 16},     // 2
      {-1, 4, 23, 16},    // 3
      {5, 7, 9, 20},      // 4
      {3, 6, 21, 22},     // 5
      {-1, 7, -1, -1},    // 6
      {5, 8, 9, 20},      // 7
      {5, -1, 9, 20},     // 8
      {10, 12, 14, 19},   // 9
      {11, -1, -1, -1},   // 10
      {3, -1, -1, -1},    // 11
      {-1, 13, -1, -1},   // 12
      {-1, 8, -1, -1},    // 13
      {1, 4, 15, 16},     // 14
      {1, 4, -1, 16},     // 15
      {-1, -1, -1, 17},   // 16
      {-1, -1, -1, 18},   // 17
      {-1, -1, -1, -1},   // 18
      {-1, -1, -1, 20},   // 19
      {-1, -1, -1, 18},   // 20
      {-1, -1, 14, -1},   // 21
      {-1, -1, -1, 17},   // 22
      {1, 4, 14, 16},     // 23
      {5, 25, 9, 20},     // 24
      {5, 8, 9, 20},      // 25
  };
  static const std::vector<int> finals = {1,  2,  3,  4,  5,  8,  14,
                                          15, 16, 17, 18, 23, 24, 25};
  return make_dfa(base_alphabet(), 26, finals, rows);
}

const std::vector<int>& expected_splitting_sizes() {
  static const std::vector<int> sizes = {13, 25, 37, 40, 37, 29, 28, 27, 21};
  return sizes;
}

const std::vector<int>& expected_cosmology_sizes() {
  static const std::vector<int> sizes = {
      43,  138, 266, 409, 534, 592, 570, 513, 430, 361, 320, 310, 308,
      278, 248, 255, 258, 266, 277, 273, 267, 258, 251, 243, 243};
  return sizes;
}

std::string splitting_report_json(const SplittingReport& report, int indent) {
  nlohmann::json j;
  j["sizes"] = report.sizes;
  j["fixed_point_n"] = report.fixed_point_n;
  j["verdict"] = report.found_fixed_point ? "ok" : "no fixed point";
  return j.dump(indent);
}

std::string cosmology_report_json(const CosmologyReport& report,
                                  const Verdict* verdict, int indent) {
  nlohmann::json j;
  j["sizes"] = report.sizes;
  j["fixed_point_n"] = report.fixed_point_n;
  j["elements"] = report.elements;
  j["named"] = report.named;
  if (verdict) {
    j["verdict"] = verdict->ok ? "ok" : "failed";
    if (!verdict->ok) j["failures"] = verdict->failures;
  } else {
    j["verdict"] = report.found_fixed_point ? "ok" : "no fixed point";
  }
  return j.dump(indent);
}

}  // namespace audioactive::theorems
