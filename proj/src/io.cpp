#include "audioactive/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace audioactive::io {

using fst::ContractViolation;
using fst::Dfa;
using fst::Symbol;
using fst::SymbolTable;
using fst::Transducer;
using fst::Transition;

namespace {

constexpr const char* kMark = "◊";

std::string export_label(const std::string& label) {
  return label == kMark ? "*" : label;
}

std::string import_label(const std::string& label) {
  return label == "*" ? kMark : label;
}

nlohmann::json alphabet_json(const SymbolTable& table) {
  nlohmann::json arr = nlohmann::json::array();
  for (const std::string& l : table.labels()) arr.push_back(export_label(l));
  return arr;
}

SymbolTable alphabet_from_json(const nlohmann::json& arr, const char* key) {
  if (!arr.is_array())
    throw ContractViolation(std::string("import: ") + key +
                            " must be an array of labels");
  std::vector<std::string> labels;
  for (const auto& l : arr) {
    if (!l.is_string())
      throw ContractViolation(std::string("import: ") + key +
                              " entries must be strings");
    labels.push_back(import_label(l.get<std::string>()));
  }
  return SymbolTable(std::move(labels));
}

nlohmann::json label_or_null(const SymbolTable& table, Symbol s) {
  if (s == fst::epsilon) return nullptr;
  return export_label(table.label(s));
}

Symbol symbol_from_json(const SymbolTable& table, const nlohmann::json& v,
                        const char* side) {
  if (v.is_null()) return fst::epsilon;
  if (!v.is_string())
    throw ContractViolation(std::string("import: ") + side +
                            " label must be a string or null");
  return table.index_of(import_label(v.get<std::string>()));
}

}  // namespace

std::string to_json(const Transducer& t, int indent) {
  nlohmann::json j;
  j["input_alphabet"] = alphabet_json(t.input_table);
  j["output_alphabet"] = alphabet_json(t.output_table);
  j["num_states"] = t.num_states;
  j["initial"] = t.initial;
  j["final"] = t.final;
  nlohmann::json trans = nlohmann::json::array();
  for (const Transition& tr : t.transitions)
    trans.push_back({tr.src, label_or_null(t.input_table, tr.in),
                     label_or_null(t.output_table, tr.out), tr.dst});
  j["transitions"] = std::move(trans);
  return j.dump(indent) + "\n";
}

std::string to_json(const Dfa& d, int indent) {
  return to_json(d.to_transducer(), indent);
}

Transducer transducer_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ContractViolation(std::string("import: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ContractViolation("import: expected an object");
  for (const char* key : {"input_alphabet", "output_alphabet", "num_states",
                          "initial", "final", "transitions"})
    if (!j.contains(key))
      throw ContractViolation(std::string("import: missing key \"") + key +
                              "\"");

  Transducer t;
  t.input_table = alphabet_from_json(j["input_alphabet"], "input_alphabet");
  t.output_table = alphabet_from_json(j["output_alphabet"], "output_alphabet");
  if (!j["num_states"].is_number_integer())
    throw ContractViolation("import: num_states must be an integer");
  t.num_states = j["num_states"].get<fst::State>();

  auto states_from = [&](const nlohmann::json& arr, const char* key) {
    if (!arr.is_array())
      throw ContractViolation(std::string("import: ") + key +
                              " must be an array");
    std::vector<fst::State> v;
    for (const auto& s : arr) {
      if (!s.is_number_integer())
        throw ContractViolation(std::string("import: ") + key +
                                " entries must be integers");
      v.push_back(s.get<fst::State>());
    }
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  };
  t.initial = states_from(j["initial"], "initial");
  t.final = states_from(j["final"], "final");

  if (!j["transitions"].is_array())
    throw ContractViolation("import: transitions must be an array");
  for (const auto& row : j["transitions"]) {
    if (!row.is_array() || row.size() != 4)
      throw ContractViolation(
          "import: each transition must be [src, in, out, dst]");
    if (!row[0].is_number_integer() || !row[3].is_number_integer())
      throw ContractViolation("import: transition endpoints must be integers");
    t.transitions.push_back({row[0].get<fst::State>(),
                             symbol_from_json(t.input_table, row[1], "input"),
                             symbol_from_json(t.output_table, row[2], "output"),
                             row[3].get<fst::State>()});
  }
  t.validate();
  return t;
}

std::string to_dot(const Transducer& t, std::string_view name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=circle];\n";
  std::vector<char> is_final(t.num_states, 0);
  for (fst::State s : t.final) is_final[s] = 1;
  for (fst::State s = 0; s < t.num_states; ++s)
    out << "  q" << s << " [shape="
        << (is_final[s] ? "doublecircle" : "circle") << "];\n";
  for (std::size_t i = 0; i < t.initial.size(); ++i) {
    out << "  start" << i << " [shape=point, label=\"\"];\n";
    out << "  start" << i << " -> q" << t.initial[i] << ";\n";
  }
  auto edge_label = [](const SymbolTable& table, Symbol s) {
    return s == fst::epsilon ? std::string("ε")
                             : export_label(table.label(s));
  };
  for (const Transition& tr : t.transitions)
    out << "  q" << tr.src << " -> q" << tr.dst << " [label=\""
        << edge_label(t.input_table, tr.in) << "|"
        << edge_label(t.output_table, tr.out) << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const Dfa& d, std::string_view name) {
  return to_dot(d.to_transducer(), name);
}

}  // namespace audioactive::io
