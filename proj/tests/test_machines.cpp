#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "audioactive/chemistry.hpp"
#include "audioactive/fst.hpp"
#include "audioactive/machines.hpp"
#include "oracles.hpp"

using namespace audioactive;
using namespace audioactive::machines;
using fst::Transducer;
using fst::Word;

namespace {

Word base_word(std::string_view text) {
  return fst::parse_word(base_alphabet(), text);
}

Word marked_word(std::string_view text) {
  return fst::parse_word(marked_alphabet(), text);
}

std::set<std::string> transduce_strings(const Transducer& t,
                                        std::string_view input) {
  const fst::SymbolTable& in_table =
      t.input_table.empty() ? base_alphabet() : t.input_table;
  std::set<std::string> out;
  for (const Word& w : fst::transduce(t, fst::parse_word(in_table, input)))
    out.insert(fst::format_word(t.output_table, w));
  return out;
}

}  // namespace

TEST_CASE("alphabets") {
  CHECK(base_alphabet().size() == 4);
  CHECK(marked_alphabet().size() == 5);
  CHECK(base_alphabet().label(sym_d) == "d");
  CHECK(marked_alphabet().label(sym_mark) == "◊");
  CHECK(marked_alphabet().index_of("◊") == 4);
}

TEST_CASE("multi inserts any number of marks anywhere") {
  const Transducer m = multi();
  CHECK(oracles::relates(m, base_word("312"), marked_word("3◊1◊◊2◊◊")));
  CHECK(oracles::relates(m, base_word("312"), marked_word("312")));
  CHECK(oracles::relates(m, base_word(""), marked_word("◊◊◊")));
  CHECK(oracles::relates(m, base_word(""), marked_word("")));
  CHECK(!oracles::relates(m, base_word("312"), marked_word("321")));
  CHECK(!oracles::relates(m, base_word("312"), marked_word("31")));
  // Unboundedly many outputs per input.
  CHECK_THROWS_AS(fst::transduce(m, base_word("1")),
                  fst::UnboundedTransduction);
  // Input side accepts everything.
  for (const Word& w : oracles::all_words(4, 4))
    CHECK(oracles::nfa_accepts(m, w));
}

TEST_CASE("mark inserts exactly one interior mark") {
  const Transducer m = mark();
  CHECK(transduce_strings(m, "12") == std::set<std::string>{"1◊2"});
  CHECK(transduce_strings(m, "123") ==
        std::set<std::string>{"1◊23", "12◊3"});
  CHECK(transduce_strings(m, "1") == std::set<std::string>{});
  CHECK(transduce_strings(m, "") == std::set<std::string>{""});
  CHECK(!oracles::relates(m, base_word("12"), marked_word("◊12")));
  CHECK(!oracles::relates(m, base_word("12"), marked_word("12◊")));
  CHECK(!oracles::relates(m, base_word("12"), marked_word("12")));
}

TEST_CASE("scissors cuts out one marked factor") {
  const Transducer s = scissors();
  auto cut = [&](std::string_view in) {
    std::set<std::string> out;
    for (const Word& w : fst::transduce(s, fst::parse_word(marked_alphabet(), in)))
      out.insert(fst::format_word(base_alphabet(), w));
    return out;
  };
  CHECK(cut("12◊33◊21") == std::set<std::string>{"33"});
  CHECK(cut("◊◊") == std::set<std::string>{""});
  CHECK(cut("123") == std::set<std::string>{});
  CHECK(cut("1◊2◊3◊d") == std::set<std::string>{"2", "3"});
  CHECK(cut("1◊◊3") == std::set<std::string>{""});
  CHECK(cut("◊22◊") == std::set<std::string>{"22"});
}

TEST_CASE("counters guess the run length on entry") {
  for (fst::Symbol a : {sym_1, sym_2, sym_3, sym_d}) {
    const Transducer c = counter(a);
    CHECK(c.num_states == 6);
    const std::string letter = base_alphabet().label(a);
    const std::string count_names = "123";
    // Exhaustive over every base word of length <= 4: only the pure runs
    // a, aa, aaa transduce, to "1a", "2a", "3a".
    for (const Word& w : oracles::all_words(4, 4)) {
      const std::set<Word> image = [&] {
        auto v = fst::transduce(c, w);
        return std::set<Word>(v.begin(), v.end());
      }();
      const bool pure_run =
          !w.empty() && w.size() <= 3 &&
          std::all_of(w.begin(), w.end(), [&](fst::Symbol s) { return s == a; });
      if (pure_run) {
        const std::string expected =
            std::string(1, count_names[w.size() - 1]) + letter;
        CHECK(image == std::set<Word>{base_word(expected)});
      } else {
        CHECK(image.empty());
      }
    }
  }
}

TEST_CASE("counter2 matches its reference description") {
  const Transducer c = counter(sym_2);
  CHECK(transduce_strings(c, "2") == std::set<std::string>{"12"});
  CHECK(transduce_strings(c, "22") == std::set<std::string>{"22"});
  CHECK(transduce_strings(c, "222") == std::set<std::string>{"32"});
  CHECK(transduce_strings(c, "2222") == std::set<std::string>{});
  CHECK(transduce_strings(c, "") == std::set<std::string>{});
}

TEST_CASE("audio has 28 states and derives single steps") {
  const Transducer a = audio();
  CHECK(a.num_states == 28);
  CHECK(transduce_strings(a, "1113") == std::set<std::string>{"3113"});
  CHECK(transduce_strings(a, "d") == std::set<std::string>{"1d"});
  CHECK(transduce_strings(a, "1111") == std::set<std::string>{});
  CHECK(transduce_strings(a, "") == std::set<std::string>{""});
}

TEST_CASE("audio implements the derivation exactly on day-one words") {
  const Transducer a = audio();
  std::mt19937 rng(20250819);
  for (int i = 0; i < 1000; ++i) {
    const std::string w = oracles::random_day_one(rng, 20);
    CHECK(transduce_strings(a, w) ==
          std::set<std::string>{chemistry::derive(w)});
  }
}

TEST_CASE("derivations of arbitrary words are day-one") {
  // Day-one recognizer built from the machine layer itself.
  const fst::Dfa day_one = fst::minimize(fst::compose(audio(), sink()));
  std::mt19937 rng(77007);
  for (int i = 0; i < 1000; ++i) {
    const std::string u = oracles::random_digits(rng, 30);
    const std::string v =
        chemistry::project_to_base(chemistry::derive(chemistry::to_int_word(u)));
    CHECK(chemistry::is_day_one(v));
    CHECK(fst::accepts(day_one, base_word(v)));
  }
  // The recognizer agrees with the direct predicate, exhaustively.
  for (const Word& w : oracles::all_words(4, 8)) {
    const std::string text = fst::format_word(base_alphabet(), w);
    CHECK(fst::accepts(day_one, w) == chemistry::is_day_one(text));
  }
}

TEST_CASE("audio_plus restricted to mark-free words is audio") {
  const Transducer a = audio();
  const Transducer ap = audio_plus();
  std::mt19937 rng(4321);
  for (int i = 0; i < 200; ++i) {
    const std::string w = oracles::random_day_one(rng, 15);
    std::set<Word> plain, lifted;
    for (const Word& out : fst::transduce(a, base_word(w)))
      plain.insert(out);
    for (const Word& out : fst::transduce(ap, marked_word(w)))
      lifted.insert(out);  // same symbol indices in both alphabets
    CHECK(plain == lifted);
  }
}

TEST_CASE("audio_plus handles marks at run boundaries only") {
  const Transducer ap = audio_plus();
  auto out = [&](std::string_view in) {
    std::set<std::string> r;
    for (const Word& w : fst::transduce(ap, fst::parse_word(marked_alphabet(), in)))
      r.insert(fst::format_word(marked_alphabet(), w));
    return r;
  };
  CHECK(out("22◊33") == std::set<std::string>{"22◊23"});
  CHECK(!fst::accepts(ap, marked_word("22◊22")));
  CHECK(!fst::accepts(ap, marked_word("1◊◊1")));
  CHECK(fst::accepts(ap, marked_word("1◊◊2")));
  CHECK(fst::accepts(ap, marked_word("◊")));
  CHECK(out("◊") == std::set<std::string>{"◊"});
  CHECK(out("2◊2") == std::set<std::string>{});
}

TEST_CASE("sink accepts everything, src emits everything") {
  const Transducer snk = sink();
  CHECK(snk.is_recognizer());
  for (const Word& w : oracles::all_words(4, 4))
    CHECK(oracles::nfa_accepts(snk, w));
  const Transducer source = src(base_alphabet());
  CHECK(source.is_generator());
  for (const Word& w : oracles::all_words(4, 4))
    CHECK(oracles::relates(source, Word{}, w));
  CHECK_THROWS_AS(fst::enumerate_language(source, 1000),
                  fst::InfiniteLanguage);
}

TEST_CASE("machine ids round-trip and derived ids are fenced") {
  using machines::MachineId;
  for (MachineId id :
       {MachineId::multi, MachineId::mark, MachineId::scissors,
        MachineId::counter1, MachineId::counter2, MachineId::counter3,
        MachineId::counterd, MachineId::sink, MachineId::src,
        MachineId::audio, MachineId::audio_plus, MachineId::splitting,
        MachineId::atom, MachineId::atomicf}) {
    const auto parsed = parse_machine_id(machine_name(id));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == id);
    if (is_derived(id)) {
      CHECK_THROWS_AS(build(id), fst::ContractViolation);
    } else {
      const Transducer t = build(id);
      t.validate();
      CHECK(t.num_states > 0);
    }
  }
  CHECK(!parse_machine_id("nonsense").has_value());
  CHECK(parse_machine_id("audio+").has_value());
}
