#pragma once

// Automaton-free ground truth for the run-length ("look-and-say") world:
// direct derivation on integer sequences, splitting/atom oracles computed
// from first principles, the embedded periodic table, and the growth-rate
// eigenvalue.
//
// Base words are strings over {'1','2','3','d'}; the letter d stands for
// any digit >= 4 and is derived as if it were the digit 4 (digits >= 4
// never interact with their neighbours after the first step, so any
// representative works). Exact integer sequences (IntWord) carry run
// counts that may exceed 9.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace audioactive::chemistry {

// Exact derivation domain: sequences of integers >= 1.
using IntWord = std::vector<int>;

class NotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// '1'..'9' map to their values, 'd' maps to 4. Other characters are
// rejected (std::invalid_argument).
IntWord to_int_word(std::string_view word);

// Values 1..3 print as digits, everything >= 4 prints as 'd'.
std::string project_to_base(const IntWord& w);

// One derivation step: each maximal run of k copies of v becomes (k, v).
IntWord derive(const IntWord& w);
IntWord derive_n(IntWord w, int n);

// Convenience over base words; the result is projected back to {1,2,3,d}.
std::string derive(std::string_view word);
std::string derive_n(std::string_view word, int n);

// True iff no symbol occurs four or more times in a row (the image of the
// derivation map is exactly these words).
bool is_day_one(std::string_view word);

// The integer that starts derive_n(w, n), for each n in [0, depth).
// Computed with a truncated-prefix window (a bounded prefix of a word
// determines a bounded prefix of its derivation), so it stays cheap even
// at depth 30 where full derivations would be large.
std::vector<int> leading_symbols(std::string_view w, int depth);

// True iff derive_n(uv, n) == derive_n(u, n) ++ derive_n(v, n) for all
// n <= depth. Runs merge across the cut exactly when the last symbol of
// derive_n(u, n) (which never changes: it is u's last symbol) equals the
// first symbol of derive_n(v, n), so the check reduces to leading_symbols.
// Both parts must be nonempty.
bool split_oracle(std::string_view u, std::string_view v, int depth = 30);

// True iff w is nonempty, day-one, and no proper cut passes split_oracle.
bool atom_oracle(std::string_view w, int depth = 30);

// The unique finest factorization of a nonempty day-one word: cut at every
// position where split_oracle holds. Throws std::invalid_argument for
// empty or non-day-one input, std::logic_error if a factor fails
// atom_oracle (which would falsify the unique-factorization property).
std::vector<std::string> atomic_factorization(std::string_view w,
                                              int depth = 30);

struct Element {
  std::string name;
  int atomic_number = 0;  // 1..94; 93 and 94 are the transuranic pair
  std::string word;
  std::vector<std::string> decay;  // element names, leftmost factor first
};

class PeriodicTable {
 public:
  // The embedded 94-row table: 92 common elements plus the two
  // d-parameterized transuranic ones (Np, Pu).
  static const PeriodicTable& standard();

  const std::vector<Element>& elements() const { return elements_; }
  const Element& by_name(std::string_view name) const;  // throws NotFound
  const Element& by_word(std::string_view word) const;  // throws NotFound
  const Element* find_by_word(std::string_view word) const;  // or nullptr

  static bool is_transuranic(const Element& e) {
    return e.atomic_number > 92;
  }

  std::string to_json(int indent = 2) const;

 private:
  explicit PeriodicTable(std::vector<Element> elements);
  std::vector<Element> elements_;
};

// The element whose word equals w exactly; throws NotFound otherwise.
const Element& lookup_element(std::string_view word);

struct GrowthReport {
  double lambda = 0.0;
  int iterations = 0;
  double residual = 0.0;  // ||Mx - lambda x||_inf at exit
};

// Dominant eigenvalue of the decay matrix M over the 92 common elements
// (M[i][j] = multiplicity of element j in the decay of element i, indexed
// in shortlex order of the element words), by power iteration. Throws
// std::runtime_error if the residual does not reach `tolerance` within
// `max_iterations`.
GrowthReport growth_rate(const PeriodicTable& table, double tolerance = 1e-10,
                         int max_iterations = 100000);

}  // namespace audioactive::chemistry
