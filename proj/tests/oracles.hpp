#pragma once

// Brute-force reference implementations used to cross-check the library.
// Everything here is deliberately naive — correctness over speed — and
// works straight off the public data members, independently of the
// engine's internal indexing.

#include <algorithm>
#include <cstddef>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "audioactive/chemistry.hpp"
#include "audioactive/fst.hpp"

namespace oracles {

using audioactive::fst::State;
using audioactive::fst::Symbol;
using audioactive::fst::Transducer;
using audioactive::fst::Word;
namespace chem = audioactive::chemistry;

// NFA membership by depth-first search over (state, position) with a
// visited set; epsilon input labels are free moves.
inline bool nfa_accepts(const Transducer& t, const Word& input) {
  std::set<std::pair<State, std::size_t>> seen;
  std::vector<std::pair<State, std::size_t>> stack;
  for (State s : t.initial) stack.emplace_back(s, 0);
  std::vector<char> is_final(static_cast<std::size_t>(t.num_states), 0);
  for (State s : t.final) is_final[static_cast<std::size_t>(s)] = 1;
  while (!stack.empty()) {
    auto [s, pos] = stack.back();
    stack.pop_back();
    if (!seen.emplace(s, pos).second) continue;
    if (pos == input.size() && is_final[static_cast<std::size_t>(s)])
      return true;
    for (const auto& e : t.transitions) {
      if (e.src != s) continue;
      if (e.in == audioactive::fst::epsilon)
        stack.emplace_back(e.dst, pos);
      else if (pos < input.size() && e.in == input[pos])
        stack.emplace_back(e.dst, pos + 1);
    }
  }
  return false;
}

// Relation membership: does the machine transduce u into v along some
// accepting path?
inline bool relates(const Transducer& t, const Word& u, const Word& v) {
  std::set<std::tuple<State, std::size_t, std::size_t>> seen;
  std::vector<std::tuple<State, std::size_t, std::size_t>> stack;
  for (State s : t.initial) stack.emplace_back(s, 0, 0);
  std::vector<char> is_final(static_cast<std::size_t>(t.num_states), 0);
  for (State s : t.final) is_final[static_cast<std::size_t>(s)] = 1;
  while (!stack.empty()) {
    auto [s, i, j] = stack.back();
    stack.pop_back();
    if (!seen.emplace(s, i, j).second) continue;
    if (i == u.size() && j == v.size() &&
        is_final[static_cast<std::size_t>(s)])
      return true;
    for (const auto& e : t.transitions) {
      if (e.src != s) continue;
      std::size_t ni = i, nj = j;
      if (e.in != audioactive::fst::epsilon) {
        if (i >= u.size() || e.in != u[i]) continue;
        ni = i + 1;
      }
      if (e.out != audioactive::fst::epsilon) {
        if (j >= v.size() || e.out != v[j]) continue;
        nj = j + 1;
      }
      stack.emplace_back(e.dst, ni, nj);
    }
  }
  return false;
}

// Every word of length <= max_len over symbols 0..num_symbols-1, in
// shortlex order.
inline std::vector<Word> all_words(int num_symbols, int max_len) {
  std::vector<Word> out = {Word{}};
  std::size_t level_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (Symbol a = 0; a < num_symbols; ++a) {
        Word w = out[i];
        w.push_back(a);
        out.push_back(std::move(w));
      }
    level_begin = level_end;
  }
  return out;
}

// The literal definition of a splitting: the derivation of the whole is
// the concatenation of the derivations of the parts, at every step up to
// depth.
inline bool naive_split(const std::string& u, const std::string& v,
                        int depth) {
  chem::IntWord a = chem::to_int_word(u);
  chem::IntWord b = chem::to_int_word(v);
  chem::IntWord whole = chem::to_int_word(u + v);
  for (int n = 0; n <= depth; ++n) {
    chem::IntWord joined = a;
    joined.insert(joined.end(), b.begin(), b.end());
    if (joined != whole) return false;
    if (n < depth) {
      a = chem::derive(a);
      b = chem::derive(b);
      whole = chem::derive(whole);
    }
  }
  return true;
}

// Random word over {1,2,3,d} with no aaaa run, built run by run.
inline std::string random_day_one(std::mt19937& rng, int max_len) {
  static const char symbols[] = {'1', '2', '3', 'd'};
  std::uniform_int_distribution<int> len_dist(1, max_len);
  std::uniform_int_distribution<int> sym_dist(0, 3);
  std::uniform_int_distribution<int> run_dist(1, 3);
  const int target = len_dist(rng);
  std::string w;
  int prev = -1;
  while (static_cast<int>(w.size()) < target) {
    int s = sym_dist(rng);
    while (s == prev) s = sym_dist(rng);
    const int run = run_dist(rng);
    for (int i = 0; i < run && static_cast<int>(w.size()) < target; ++i)
      w.push_back(symbols[s]);
    prev = s;
  }
  return w;
}

inline std::string random_digits(std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> len_dist(1, max_len);
  std::uniform_int_distribution<int> digit(1, 9);
  std::string w;
  const int target = len_dist(rng);
  for (int i = 0; i < target; ++i)
    w.push_back(static_cast<char>('0' + digit(rng)));
  return w;
}

// Random epsilon-NFA recognizer over the first num_symbols letters
// a, b, c, ...; roughly edge_per_state transitions per state.
inline Transducer random_recognizer(std::mt19937& rng, int num_states,
                                    int num_symbols,
                                    double edges_per_state = 3.0) {
  static const char* letters[] = {"a", "b", "c", "e", "f", "g"};
  std::vector<std::string> labels(letters, letters + num_symbols);
  Transducer t;
  t.input_table = audioactive::fst::SymbolTable(labels);
  t.num_states = num_states;
  t.initial = {0};
  std::uniform_int_distribution<State> state_dist(0, num_states - 1);
  std::uniform_int_distribution<Symbol> sym_dist(0, num_symbols - 1);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const int num_edges =
      std::max(1, static_cast<int>(edges_per_state * num_states));
  for (int i = 0; i < num_edges; ++i) {
    const Symbol in =
        coin(rng) < 0.1 ? audioactive::fst::epsilon : sym_dist(rng);
    t.transitions.push_back(
        {state_dist(rng), in, audioactive::fst::epsilon, state_dist(rng)});
  }
  for (State s = 0; s < num_states; ++s)
    if (coin(rng) < 0.4) t.final.push_back(s);
  t.validate();
  return t;
}

// Same language, outputs erased: the recognizer of the input projection.
inline Transducer input_recognizer(const Transducer& t) {
  Transducer r = t;
  r.output_table = audioactive::fst::SymbolTable();
  for (auto& e : r.transitions) e.out = audioactive::fst::epsilon;
  r.validate();
  return r;
}

// Same machine under a random renumbering of the states.
inline Transducer permute_states(const Transducer& t, std::mt19937& rng) {
  std::vector<State> perm(static_cast<std::size_t>(t.num_states));
  for (State s = 0; s < t.num_states; ++s)
    perm[static_cast<std::size_t>(s)] = s;
  std::shuffle(perm.begin(), perm.end(), rng);
  Transducer p = t;
  for (auto& e : p.transitions) {
    e.src = perm[static_cast<std::size_t>(e.src)];
    e.dst = perm[static_cast<std::size_t>(e.dst)];
  }
  for (State& s : p.initial) s = perm[static_cast<std::size_t>(s)];
  for (State& s : p.final) s = perm[static_cast<std::size_t>(s)];
  std::sort(p.initial.begin(), p.initial.end());
  std::sort(p.final.begin(), p.final.end());
  return p;
}

}  // namespace oracles
