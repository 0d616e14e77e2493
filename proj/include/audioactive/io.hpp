#pragma once

// JSON and Graphviz serialization for machines.
//
// JSON shape (keys emitted in sorted order, so exports are byte-stable):
//   {
//     "final": [..], "initial": [..],
//     "input_alphabet": ["1","2","3","d","*"],
//     "num_states": n,
//     "output_alphabet": [..],
//     "transitions": [[src, in|null, out|null, dst], ...]
//   }
// The mark symbol "◊" is written as "*" and mapped back on import; null
// stands for an epsilon (absent) label.

#include <string>
#include <string_view>

#include "audioactive/fst.hpp"

namespace audioactive::io {

std::string to_json(const fst::Transducer& t, int indent = 2);
std::string to_json(const fst::Dfa& d, int indent = 2);

// Parses and structurally validates; throws fst::ContractViolation on
// malformed input.
fst::Transducer transducer_from_json(std::string_view text);

// Graphviz digraph: accepting states are doubled circles, each initial
// state gets an arrow from an unlabeled point, edges read "in|out" with
// "ε" marking an absent label.
std::string to_dot(const fst::Transducer& t, std::string_view name = "fst");
std::string to_dot(const fst::Dfa& d, std::string_view name = "dfa");

}  // namespace audioactive::io
