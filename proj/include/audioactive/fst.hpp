#pragma once

// Nondeterministic finite-state transducers over small alphabets, with the
// handful of constructions everything else in this project is built from:
// composition, transposition, subset determinization, Brzozowski
// minimization, complement, bounded transduction and language enumeration.
//
// Machines are deliberately plain aggregates; all algorithms are free
// functions that return fresh machines.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace audioactive::fst {

using Symbol = std::int32_t;
using State = std::int32_t;

// Absent label on an edge (epsilon). Never an index into a SymbolTable.
inline constexpr Symbol epsilon = -1;
inline constexpr State no_state = -1;

// A precondition was violated or a machine is structurally malformed.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// transduce() was asked for an output set that is provably infinite.
class UnboundedTransduction : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// enumerate_language() was asked for a language that is provably infinite.
class InfiniteLanguage : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A finite result exists but exceeds the caller-supplied bound.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A state/memory budget was exhausted mid-construction.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Immutable, ordered set of symbol labels. Symbol i names labels()[i].
// Labels must be nonempty, distinct, and must not be "*" (reserved as the
// ASCII serialization of the mark symbol "◊").
class SymbolTable {
 public:
  SymbolTable() = default;
  explicit SymbolTable(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  bool empty() const { return labels_.empty(); }
  const std::string& label(Symbol s) const;
  const std::vector<std::string>& labels() const { return labels_; }

  bool contains(std::string_view label) const;
  Symbol index_of(std::string_view label) const;  // throws if absent

  bool operator==(const SymbolTable&) const = default;

 private:
  std::vector<std::string> labels_;
};

using Word = std::vector<Symbol>;

// Greedy longest-label tokenization of `text`; "*" is accepted as an alias
// for "◊" when the table contains "◊". Throws ContractViolation on any
// untokenizable residue.
Word parse_word(const SymbolTable& table, std::string_view text);

// Concatenated labels; with ascii_mark, "◊" prints as "*".
std::string format_word(const SymbolTable& table, const Word& word,
                        bool ascii_mark = false);

// Length-first, then lexicographic by symbol index.
bool shortlex_less(const Word& a, const Word& b);

struct Transition {
  State src = 0;
  Symbol in = epsilon;   // consumed input symbol, or epsilon
  Symbol out = epsilon;  // emitted output symbol, or epsilon
  State dst = 0;

  friend bool operator==(const Transition&, const Transition&) = default;
};

// Nondeterministic transducer. A recognizer has an empty output table (all
// edges emit epsilon); a generator has an empty input table. States are
// 0..num_states-1; initial/final are sorted and duplicate-free.
struct Transducer {
  SymbolTable input_table;
  SymbolTable output_table;
  State num_states = 0;
  std::vector<State> initial;
  std::vector<State> final;
  std::vector<Transition> transitions;

  bool is_recognizer() const { return output_table.empty(); }
  bool is_generator() const { return input_table.empty(); }

  // Structural sanity: state indices in range, labels in range, initial and
  // final sorted/unique, recognizers/generators label-consistent.
  void validate() const;
};

// Deterministic, possibly partial recognizer. State 0 is always the initial
// state (a representation invariant, relied on by equality). A missing
// transition (no_state) rejects.
struct Dfa {
  SymbolTable alphabet;
  State num_states = 0;
  std::vector<std::uint8_t> accepting;  // size num_states
  std::vector<State> next;              // size num_states * alphabet.size()

  State step(State s, Symbol a) const {
    return next[static_cast<std::size_t>(s) * alphabet.size() + a];
  }

  bool operator==(const Dfa&) const = default;

  // Equivalent one-initial-state recognizer Transducer.
  Transducer to_transducer() const;

  void validate() const;
};

// --- Constructions ---------------------------------------------------------

// Pipeline composition: the relation {(x, y) : exists z, x -U-> z -V-> y}.
// Requires output_table(u) == input_table(v). The result is trim.
Transducer compose(const Transducer& u, const Transducer& v);

// Swap input and output on every edge (inverts the relation).
Transducer transpose(const Transducer& t);

// Reverse the language of a recognizer: flip every edge, swap initial/final.
Transducer reverse(const Transducer& t);

// Subset construction with epsilon closure; input must be a recognizer.
// States are numbered in BFS discovery order (symbol order within a state).
// The empty subset is never materialized, so the result is a partial DFA
// with every state reachable (dead subsets may remain; minimize() removes
// them). max_states > 0 bounds the construction (ResourceLimit beyond it).
Dfa determinize(const Transducer& t, std::size_t max_states = 0);

// Minimal partial DFA for a recognizer's language, canonically numbered
// (Brzozowski: reverse, determinize, reverse, determinize). Two recognizers
// have equal languages iff their minimize() results compare ==. The empty
// language is one non-accepting state.
Dfa minimize(const Transducer& t, std::size_t max_states = 0);
Dfa minimize(const Dfa& d, std::size_t max_states = 0);

// Language equality of two recognizers over the same alphabet.
bool equivalent(const Transducer& a, const Transducer& b);
bool equivalent(const Dfa& a, const Dfa& b);

// Minimal DFA for the complemented language (determinize, complete with a
// dead state, swap accepting/rejecting, minimize).
Dfa complement(const Transducer& t);
Dfa complement(const Dfa& d);

// Identity transducer restricted to a recognizer's language: every edge
// copies its input symbol to the output.
Transducer to_filter(const Transducer& t);

// n-fold pipeline composition of t with itself (n >= 1); t's input and
// output tables must be equal. Folds trimming (via compose) and a
// reduce_transducer() pass after each step to keep intermediates small.
Transducer power(const Transducer& t, int n);

// Membership of `word` in the input-side language of t (NFA simulation) or
// in the language of a DFA.
bool accepts(const Transducer& t, const Word& word);
bool accepts(const Dfa& d, const Word& word);

// The full output set {y : (word, y) in relation(t)}, shortlex-sorted.
// Throws UnboundedTransduction if the set is infinite, LimitExceeded if it
// is finite but larger than `limit`.
std::vector<Word> transduce(const Transducer& t, const Word& word,
                            std::size_t limit = 10000);

// All words of a recognizer's language (generators are transposed first),
// shortlex-sorted. Throws InfiniteLanguage / LimitExceeded.
std::vector<Word> enumerate_language(const Transducer& t,
                                     std::size_t max_count);
std::vector<Word> enumerate_language(const Dfa& d, std::size_t max_count);

// Relation-preserving state reduction: minimize t viewed as a recognizer
// over the alphabet of (input, output) edge labels, then map back. The
// result defines exactly the same relation (path labels are preserved), is
// trim, and is canonically numbered for that pair-language.
Transducer reduce_transducer(const Transducer& t);

// Drop states that are not both reachable from an initial state and able to
// reach a final state; renumber survivors in increasing old order. An empty
// relation yields the canonical one-state machine with no final states.
Transducer trim(const Transducer& t);

// Product-construction intersection of two partial DFAs over one alphabet.
Dfa intersect(const Dfa& a, const Dfa& b);

// BFS renumbering from state 0 in symbol order; requires every state
// reachable. Idempotent on determinize/minimize output.
Dfa canonicalize(const Dfa& d);

}  // namespace audioactive::fst
