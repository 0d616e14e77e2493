#include "audioactive/machines.hpp"

namespace audioactive::machines {

using fst::epsilon;
using fst::State;
using fst::Symbol;
using fst::SymbolTable;
using fst::Transducer;

const SymbolTable& base_alphabet() {
  static const SymbolTable table({"1", "2", "3", "d"});
  return table;
}

const SymbolTable& marked_alphabet() {
  static const SymbolTable table({"1", "2", "3", "d", "◊"});
  return table;
}

Transducer multi() {
  Transducer t;
  t.input_table = base_alphabet();
  t.output_table = marked_alphabet();
  t.num_states = 1;
  t.initial = {0};
  t.final = {0};
  for (Symbol a = 0; a < base_alphabet().size(); ++a)
    t.transitions.push_back({0, a, a, 0});
  t.transitions.push_back({0, epsilon, sym_mark, 0});
  return t;
}

Transducer mark() {
  Transducer t;
  t.input_table = base_alphabet();
  t.output_table = marked_alphabet();
  t.num_states = 4;  // 0 before anything, 1 left of ◊, 2 right of ◊, 3 done
  t.initial = {0};
  t.final = {0, 3};
  for (Symbol a = 0; a < base_alphabet().size(); ++a) {
    t.transitions.push_back({0, a, a, 1});
    t.transitions.push_back({1, a, a, 1});
    t.transitions.push_back({2, a, a, 2});
    t.transitions.push_back({2, a, a, 3});
  }
  t.transitions.push_back({1, epsilon, sym_mark, 2});
  return t;
}

Transducer scissors() {
  Transducer t;
  t.input_table = marked_alphabet();
  t.output_table = base_alphabet();
  t.num_states = 3;  // 0 delete, 1 copy (between two marks), 2 delete
  t.initial = {0};
  t.final = {2};
  for (Symbol b = 0; b < marked_alphabet().size(); ++b) {
    t.transitions.push_back({0, b, epsilon, 0});
    t.transitions.push_back({2, b, epsilon, 2});
  }
  for (Symbol a = 0; a < base_alphabet().size(); ++a)
    t.transitions.push_back({1, a, a, 1});
  t.transitions.push_back({0, sym_mark, epsilon, 1});
  t.transitions.push_back({1, sym_mark, epsilon, 2});
  return t;
}

namespace {

// Appends one run-length block for symbol `a` to `t`: six fresh states
// head, c1..c4, tail. The run's length (1, 2 or 3) is guessed at the head,
// which writes the count digit; the run's symbol is written once after.
// Returns {head, tail}.
std::pair<State, State> append_counter_block(Transducer& t, Symbol a) {
  const State head = t.num_states;
  const State c1 = head + 1, c2 = head + 2, c3 = head + 3, c4 = head + 4;
  const State tail = head + 5;
  t.num_states += 6;
  t.transitions.push_back({head, a, sym_1, c1});
  t.transitions.push_back({head, a, sym_2, c2});
  t.transitions.push_back({head, a, sym_3, c3});
  t.transitions.push_back({c1, epsilon, a, tail});
  t.transitions.push_back({c2, a, a, tail});
  t.transitions.push_back({c3, a, a, c4});
  t.transitions.push_back({c4, a, epsilon, tail});
  return {head, tail};
}

Transducer audio_core(bool marked) {
  const SymbolTable& table = marked ? marked_alphabet() : base_alphabet();
  Transducer t;
  t.input_table = table;
  t.output_table = table;

  // 0/1 pick the first run's symbol class; 26/27 force a class switch
  // between a 1-or-2 run and a 3-or-d run.
  const State pick12 = 0, pick3d = 1;
  t.num_states = 2;
  t.initial = {pick12, pick3d};

  State head[4], tail[4];
  for (Symbol a = 0; a < 4; ++a) {
    auto [h, tl] = append_counter_block(t, a);
    head[a] = h;
    tail[a] = tl;
    t.final.push_back(h);
    if (marked) t.transitions.push_back({h, sym_mark, sym_mark, h});
  }
  const State next12 = t.num_states, next3d = t.num_states + 1;
  t.num_states += 2;

  auto link = [&](State from, State to) {
    t.transitions.push_back({from, epsilon, epsilon, to});
  };
  link(pick12, head[sym_1]);
  link(pick12, head[sym_2]);
  link(pick3d, head[sym_3]);
  link(pick3d, head[sym_d]);
  link(tail[sym_1], head[sym_2]);  // the only same-class successor
  link(tail[sym_2], head[sym_1]);
  link(tail[sym_3], head[sym_d]);
  link(tail[sym_d], head[sym_3]);
  link(tail[sym_1], next12);
  link(tail[sym_2], next12);
  link(tail[sym_3], next3d);
  link(tail[sym_d], next3d);
  link(next12, pick3d);  // cross into the other class
  link(next3d, pick12);

  std::sort(t.final.begin(), t.final.end());
  return t;
}

}  // namespace

Transducer counter(Symbol a) {
  if (a < 0 || a >= base_alphabet().size())
    throw fst::ContractViolation("counter: symbol outside the base alphabet");
  Transducer t;
  t.input_table = base_alphabet();
  t.output_table = base_alphabet();
  auto [head, tail] = append_counter_block(t, a);
  t.initial = {head};
  t.final = {tail};
  return t;
}

Transducer audio() { return audio_core(/*marked=*/false); }

Transducer audio_plus() { return audio_core(/*marked=*/true); }

namespace {

struct IdName {
  MachineId id;
  std::string_view name;
};

constexpr IdName kIdNames[] = {
    {MachineId::multi, "multi"},       {MachineId::mark, "mark"},
    {MachineId::scissors, "scissors"}, {MachineId::counter1, "counter1"},
    {MachineId::counter2, "counter2"}, {MachineId::counter3, "counter3"},
    {MachineId::counterd, "counterd"}, {MachineId::sink, "sink"},
    {MachineId::src, "src"},           {MachineId::audio, "audio"},
    {MachineId::audio_plus, "audio+"}, {MachineId::splitting, "splitting"},
    {MachineId::atom, "atom"},         {MachineId::atomicf, "atomicf"},
};

}  // namespace

std::optional<MachineId> parse_machine_id(std::string_view name) {
  for (const IdName& entry : kIdNames)
    if (entry.name == name) return entry.id;
  return std::nullopt;
}

std::string_view machine_name(MachineId id) {
  for (const IdName& entry : kIdNames)
    if (entry.id == id) return entry.name;
  throw fst::ContractViolation("machine_name: unknown id");
}

bool is_derived(MachineId id) {
  return id == MachineId::splitting || id == MachineId::atom ||
         id == MachineId::atomicf;
}

Transducer build(MachineId id) {
  switch (id) {
    case MachineId::multi:
      return multi();
    case MachineId::mark:
      return mark();
    case MachineId::scissors:
      return scissors();
    case MachineId::counter1:
      return counter(sym_1);
    case MachineId::counter2:
      return counter(sym_2);
    case MachineId::counter3:
      return counter(sym_3);
    case MachineId::counterd:
      return counter(sym_d);
    case MachineId::sink:
      return sink();
    case MachineId::src:
      return src();
    case MachineId::audio:
      return audio();
    case MachineId::audio_plus:
      return audio_plus();
    default:
      throw fst::ContractViolation(
          "build: this machine is produced by a proof pipeline, not built "
          "by hand");
  }
}

Transducer sink(const SymbolTable& alphabet) {
  Transducer t;
  t.input_table = alphabet;
  t.num_states = 1;
  t.initial = {0};
  t.final = {0};
  for (Symbol a = 0; a < alphabet.size(); ++a)
    t.transitions.push_back({0, a, epsilon, 0});
  return t;
}

Transducer src(const SymbolTable& alphabet) {
  Transducer t;
  t.output_table = alphabet;
  t.num_states = 1;
  t.initial = {0};
  t.final = {0};
  for (Symbol a = 0; a < alphabet.size(); ++a)
    t.transitions.push_back({0, epsilon, a, 0});
  return t;
}

}  // namespace audioactive::machines
