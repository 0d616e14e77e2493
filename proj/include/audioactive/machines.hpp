#pragma once

// The small zoo of hand-built machines everything else is composed from.
//
// Two alphabets are in play: the base alphabet A = {1, 2, 3, d} of run-length
// words (d stands for any digit >= 4), and its marked extension
// B = A + {◊}. The mark ◊ is a cut point; ASCII I/O writes it as "*".

#include <optional>
#include <string_view>

#include "audioactive/fst.hpp"

namespace audioactive::machines {

const fst::SymbolTable& base_alphabet();    // {1, 2, 3, d}
const fst::SymbolTable& marked_alphabet();  // {1, 2, 3, d, ◊}

// Indices of the shared symbols (identical in both alphabets).
inline constexpr fst::Symbol sym_1 = 0;
inline constexpr fst::Symbol sym_2 = 1;
inline constexpr fst::Symbol sym_3 = 2;
inline constexpr fst::Symbol sym_d = 3;
inline constexpr fst::Symbol sym_mark = 4;  // marked_alphabet() only

// Copies its input and nondeterministically inserts any number of marks
// anywhere (A -> B).
fst::Transducer multi();

// Copies its input and inserts exactly one mark at an interior position
// (A -> B); both sides of the mark are nonempty.
fst::Transducer mark();

// Cuts out one mark-delimited fragment: maps x◊y◊z to the mark-free y,
// deleting everything else (B -> A).
fst::Transducer scissors();

// Run-length block for one symbol a: reads a run of one, two or three a's
// and writes its description (1a, 2a or 3a). The count must be guessed on
// the first symbol, so wrong guesses die.
fst::Transducer counter(fst::Symbol a);

// Accepts every word over the alphabet (recognizer).
fst::Transducer sink(const fst::SymbolTable& alphabet = base_alphabet());

// Emits every word over the alphabet (generator).
fst::Transducer src(const fst::SymbolTable& alphabet = marked_alphabet());

// The run-length derivation step as a transducer (A -> A): chains counter
// blocks, forcing adjacent runs to use different symbols. Its input
// language is exactly the words with no aaaa factor.
fst::Transducer audio();

// audio() lifted to marked words (B -> B): marks are only legal at run
// boundaries and are copied through in place.
fst::Transducer audio_plus();

enum class MachineId {
  multi,
  mark,
  scissors,
  counter1,
  counter2,
  counter3,
  counterd,
  sink,
  src,
  audio,
  audio_plus,
  splitting,
  atom,
  atomicf,
};

std::optional<MachineId> parse_machine_id(std::string_view name);
std::string_view machine_name(MachineId id);

// splitting/atom/atomicf are not hand-built: they come out of the proof
// pipelines (see theorems.hpp).
bool is_derived(MachineId id);

// Builds a hand-built machine; throws fst::ContractViolation for derived
// ids.
fst::Transducer build(MachineId id);

}  // namespace audioactive::machines
