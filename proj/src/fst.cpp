#include "audioactive/fst.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <unordered_map>
#include <utility>

namespace audioactive::fst {

namespace {

void sort_unique(std::vector<State>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool sorted_unique(const std::vector<State>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] >= v[i]) return false;
  return true;
}

// Transition indices bucketed by (src, label), label epsilon in the last
// bucket. Buckets of one source state are contiguous, so the whole out-list
// of a state is a single range. Order within a bucket follows the original
// transition order.
struct LabelIndex {
  int nbuckets = 1;
  std::vector<std::int32_t> start;  // (num_states * nbuckets) + 1 offsets
  std::vector<std::int32_t> items;  // transition indices

  LabelIndex(const Transducer& t, bool by_input) {
    const int nsym =
        by_input ? t.input_table.size() : t.output_table.size();
    nbuckets = nsym + 1;
    const std::size_t rows =
        static_cast<std::size_t>(t.num_states) * nbuckets;
    auto bucket_of = [&](const Transition& tr) {
      const Symbol s = by_input ? tr.in : tr.out;
      return static_cast<std::size_t>(tr.src) * nbuckets +
             (s == epsilon ? nsym : s);
    };
    start.assign(rows + 1, 0);
    for (const Transition& tr : t.transitions) ++start[bucket_of(tr) + 1];
    for (std::size_t i = 1; i <= rows; ++i) start[i] += start[i - 1];
    items.resize(t.transitions.size());
    std::vector<std::int32_t> cursor(start.begin(), start.end() - 1);
    for (std::int32_t i = 0;
         i < static_cast<std::int32_t>(t.transitions.size()); ++i)
      items[cursor[bucket_of(t.transitions[i])]++] = i;
  }

  // All transition indices out of `s` with the given label bucket.
  std::pair<const std::int32_t*, const std::int32_t*> bucket(
      State s, int b) const {
    const std::size_t row = static_cast<std::size_t>(s) * nbuckets + b;
    return {items.data() + start[row], items.data() + start[row + 1]};
  }

  // All transition indices out of `s`, any label.
  std::pair<const std::int32_t*, const std::int32_t*> all(State s) const {
    const std::size_t row = static_cast<std::size_t>(s) * nbuckets;
    return {items.data() + start[row], items.data() + start[row + nbuckets]};
  }
};

// Input-side NFA stepping with reusable buffers. State sets are kept as
// sorted vectors; membership is tracked with a version-stamped array so no
// per-step clearing is needed.
class Stepper {
 public:
  explicit Stepper(const Transducer& t)
      : t_(t), idx_(t, /*by_input=*/true), stamp_(t.num_states, 0) {}

  // Replace `set` with its epsilon closure, sorted.
  void close(std::vector<State>& set) {
    ++version_;
    stack_.assign(set.begin(), set.end());
    for (State s : set) stamp_[s] = version_;
    const int eps_bucket = t_.input_table.size();
    while (!stack_.empty()) {
      const State q = stack_.back();
      stack_.pop_back();
      auto [b, e] = idx_.bucket(q, eps_bucket);
      for (; b != e; ++b) {
        const State d = t_.transitions[*b].dst;
        if (stamp_[d] != version_) {
          stamp_[d] = version_;
          set.push_back(d);
          stack_.push_back(d);
        }
      }
    }
    std::sort(set.begin(), set.end());
  }

  // out = closure(step(from, a)), sorted. `out` may alias nothing.
  void step(const std::vector<State>& from, Symbol a,
            std::vector<State>& out) {
    out.clear();
    ++version_;
    for (State q : from) {
      auto [b, e] = idx_.bucket(q, a);
      for (; b != e; ++b) {
        const State d = t_.transitions[*b].dst;
        if (stamp_[d] != version_) {
          stamp_[d] = version_;
          out.push_back(d);
        }
      }
    }
    close(out);
  }

 private:
  const Transducer& t_;
  LabelIndex idx_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t version_ = 0;
  std::vector<State> stack_;
};

struct StateVecHash {
  std::size_t operator()(const std::vector<State>& v) const {
    std::uint64_t h = 1469598103934665603ull;
    for (State s : v) {
      h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(s));
      h *= 1099511628211ull;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }
};

void check_word_symbols(const SymbolTable& table, const Word& word,
                        const char* who) {
  for (Symbol a : word)
    if (a < 0 || a >= table.size())
      throw ContractViolation(std::string(who) +
                              ": word symbol outside the alphabet");
}

// ---------------------------------------------------------------------------
// Path collection: the suffix-output sets of a labeled graph, used by both
// transduce() (labels = emitted symbols) and enumerate_language() (labels =
// consumed symbols). Works on the trimmed subgraph; any cycle on a useful
// path must be silent (all-epsilon) or the answer is infinite.

struct PathGraph {
  std::int32_t nodes = 0;
  std::vector<std::int32_t> head;  // CSR offsets, size nodes+1
  std::vector<std::int32_t> dst;
  std::vector<Symbol> emit;
  std::vector<std::int32_t> starts;
  std::vector<std::int32_t> accepts;
};

enum class InfinityKind { unbounded_transduction, infinite_language };

[[noreturn]] void throw_infinite(InfinityKind kind) {
  if (kind == InfinityKind::unbounded_transduction)
    throw UnboundedTransduction("transduce: output set is infinite");
  throw InfiniteLanguage("enumerate_language: language is infinite");
}

std::vector<Word> collect_paths(const PathGraph& g, std::size_t limit,
                                InfinityKind kind) {
  const std::int32_t n = g.nodes;
  std::vector<char> fwd(n, 0), bwd(n, 0);

  {  // forward reachability from the start nodes
    std::vector<std::int32_t> stack;
    for (auto s : g.starts)
      if (!fwd[s]) {
        fwd[s] = 1;
        stack.push_back(s);
      }
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (auto i = g.head[u]; i < g.head[u + 1]; ++i)
        if (!fwd[g.dst[i]]) {
          fwd[g.dst[i]] = 1;
          stack.push_back(g.dst[i]);
        }
    }
  }
  {  // backward reachability from the accept nodes
    std::vector<std::int32_t> rhead(n + 1, 0), rdst(g.dst.size());
    for (auto d : g.dst) ++rhead[d + 1];
    for (std::int32_t i = 1; i <= n; ++i) rhead[i] += rhead[i - 1];
    {
      std::vector<std::int32_t> cursor(rhead.begin(), rhead.end() - 1);
      for (std::int32_t u = 0; u < n; ++u)
        for (auto i = g.head[u]; i < g.head[u + 1]; ++i)
          rdst[cursor[g.dst[i]]++] = u;
    }
    std::vector<std::int32_t> stack;
    for (auto s : g.accepts)
      if (!bwd[s]) {
        bwd[s] = 1;
        stack.push_back(s);
      }
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (auto i = rhead[u]; i < rhead[u + 1]; ++i)
        if (!bwd[rdst[i]]) {
          bwd[rdst[i]] = 1;
          stack.push_back(rdst[i]);
        }
    }
  }

  std::vector<char> useful(n, 0);
  bool any_useful = false;
  for (std::int32_t u = 0; u < n; ++u) {
    useful[u] = fwd[u] && bwd[u];
    any_useful |= useful[u] != 0;
  }
  if (!any_useful) return {};

  // Tarjan SCC over the useful subgraph (iterative). Components come out in
  // reverse topological order of the condensation: every edge leaving a
  // component points at a lower component id.
  std::vector<std::int32_t> comp(n, -1), low(n, 0), order(n, -1);
  std::int32_t timer = 0, ncomp = 0;
  {
    std::vector<char> on(n, 0);
    std::vector<std::int32_t> scc_stack;
    std::vector<std::pair<std::int32_t, std::int32_t>> frames;
    for (std::int32_t root = 0; root < n; ++root) {
      if (!useful[root] || order[root] != -1) continue;
      frames.emplace_back(root, g.head[root]);
      order[root] = low[root] = timer++;
      scc_stack.push_back(root);
      on[root] = 1;
      while (!frames.empty()) {
        auto& [u, cursor] = frames.back();
        if (cursor < g.head[u + 1]) {
          const auto i = cursor++;
          const auto w = g.dst[i];
          if (!useful[w]) continue;
          if (order[w] == -1) {
            frames.emplace_back(w, g.head[w]);
            order[w] = low[w] = timer++;
            scc_stack.push_back(w);
            on[w] = 1;
          } else if (on[w]) {
            low[u] = std::min(low[u], order[w]);
          }
        } else {
          const auto u_done = u;
          if (low[u_done] == order[u_done]) {
            while (true) {
              const auto w = scc_stack.back();
              scc_stack.pop_back();
              on[w] = 0;
              comp[w] = ncomp;
              if (w == u_done) break;
            }
            ++ncomp;
          }
          frames.pop_back();
          if (!frames.empty())
            low[frames.back().first] =
                std::min(low[frames.back().first], low[u_done]);
        }
      }
    }
  }

  // Any emitting edge inside a component lies on a start->accept path (the
  // subgraph is trimmed), so it pumps: the answer is infinite.
  for (std::int32_t u = 0; u < n; ++u) {
    if (!useful[u]) continue;
    for (auto i = g.head[u]; i < g.head[u + 1]; ++i)
      if (useful[g.dst[i]] && comp[g.dst[i]] == comp[u] &&
          g.emit[i] != epsilon)
        throw_infinite(kind);
  }

  std::vector<char> is_accept(n, 0);
  for (auto a : g.accepts) is_accept[a] = 1;

  // Suffix-output sets per component, in component order (successors of a
  // component always have smaller ids, so their sets are already final).
  // Silent intra-component edges never change a path's output, so one set
  // per component is exact. Any node's set injects into some start's set by
  // prefixing, so the limit check on every set is neither lossy nor late.
  std::vector<std::vector<std::int32_t>> members(ncomp);
  for (std::int32_t u = 0; u < n; ++u)
    if (useful[u]) members[comp[u]].push_back(u);
  std::vector<std::set<Word>> suffixes(ncomp);
  for (std::int32_t k = 0; k < ncomp; ++k) {
    std::set<Word>& out = suffixes[k];
    for (auto u : members[k]) {
      if (is_accept[u]) out.insert(Word{});
      for (auto i = g.head[u]; i < g.head[u + 1]; ++i) {
        const auto v = g.dst[i];
        if (!useful[v] || comp[v] == k) continue;
        for (const Word& w : suffixes[comp[v]]) {
          Word ext;
          ext.reserve(w.size() + 1);
          if (g.emit[i] != epsilon) ext.push_back(g.emit[i]);
          ext.insert(ext.end(), w.begin(), w.end());
          out.insert(std::move(ext));
        }
      }
      if (out.size() > limit)
        throw LimitExceeded("path collection: more than " +
                            std::to_string(limit) + " words");
    }
  }

  std::set<Word> result;
  for (auto s : g.starts)
    if (useful[s]) {
      result.insert(suffixes[comp[s]].begin(), suffixes[comp[s]].end());
      if (result.size() > limit)
        throw LimitExceeded("path collection: more than " +
                            std::to_string(limit) + " words");
    }
  std::vector<Word> words(result.begin(), result.end());
  std::sort(words.begin(), words.end(), shortlex_less);
  return words;
}

}  // namespace

// --- SymbolTable ------------------------------------------------------------

SymbolTable::SymbolTable(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  std::set<std::string_view> seen;
  for (const std::string& l : labels_) {
    if (l.empty())
      throw ContractViolation("SymbolTable: empty label");
    if (l == "*")
      throw ContractViolation(
          "SymbolTable: \"*\" is reserved as the ASCII form of \"◊\"");
    if (!seen.insert(l).second)
      throw ContractViolation("SymbolTable: duplicate label \"" + l + "\"");
  }
}

const std::string& SymbolTable::label(Symbol s) const {
  if (s < 0 || s >= size())
    throw ContractViolation("SymbolTable: symbol out of range");
  return labels_[static_cast<std::size_t>(s)];
}

bool SymbolTable::contains(std::string_view label) const {
  for (const std::string& l : labels_)
    if (l == label) return true;
  return false;
}

Symbol SymbolTable::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<Symbol>(i);
  throw ContractViolation("SymbolTable: unknown label \"" +
                          std::string(label) + "\"");
}

Word parse_word(const SymbolTable& table, std::string_view text) {
  Word word;
  const bool mark_alias = table.contains("◊");
  std::size_t pos = 0;
  while (pos < text.size()) {
    Symbol best = epsilon;
    std::size_t best_len = 0;
    for (Symbol i = 0; i < table.size(); ++i) {
      const std::string& l = table.label(i);
      if (l.size() > best_len && text.substr(pos, l.size()) == l) {
        best = i;
        best_len = l.size();
      }
    }
    if (best == epsilon && mark_alias && text[pos] == '*') {
      best = table.index_of("◊");
      best_len = 1;
    }
    if (best == epsilon)
      throw ContractViolation("parse_word: cannot tokenize \"" +
                              std::string(text) + "\" at byte " +
                              std::to_string(pos));
    word.push_back(best);
    pos += best_len;
  }
  return word;
}

std::string format_word(const SymbolTable& table, const Word& word,
                        bool ascii_mark) {
  std::string out;
  for (Symbol a : word) {
    const std::string& l = table.label(a);
    if (ascii_mark && l == "◊")
      out += '*';
    else
      out += l;
  }
  return out;
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// --- Structure checks -------------------------------------------------------

void Transducer::validate() const {
  if (num_states < 0) throw ContractViolation("Transducer: negative state count");
  auto check_states = [&](const std::vector<State>& v, const char* what) {
    if (!sorted_unique(v))
      throw ContractViolation(std::string("Transducer: ") + what +
                              " states not sorted/unique");
    for (State s : v)
      if (s < 0 || s >= num_states)
        throw ContractViolation(std::string("Transducer: ") + what +
                                " state out of range");
  };
  check_states(initial, "initial");
  check_states(final, "final");
  for (const Transition& t : transitions) {
    if (t.src < 0 || t.src >= num_states || t.dst < 0 || t.dst >= num_states)
      throw ContractViolation("Transducer: transition endpoint out of range");
    if (t.in != epsilon && (t.in < 0 || t.in >= input_table.size()))
      throw ContractViolation("Transducer: input label out of range");
    if (t.out != epsilon && (t.out < 0 || t.out >= output_table.size()))
      throw ContractViolation("Transducer: output label out of range");
  }
}

void Dfa::validate() const {
  if (num_states < 1) throw ContractViolation("Dfa: needs at least one state");
  if (accepting.size() != static_cast<std::size_t>(num_states))
    throw ContractViolation("Dfa: accepting vector size mismatch");
  if (next.size() !=
      static_cast<std::size_t>(num_states) * alphabet.size())
    throw ContractViolation("Dfa: transition table size mismatch");
  for (State s : next)
    if (s != no_state && (s < 0 || s >= num_states))
      throw ContractViolation("Dfa: transition target out of range");
}

Transducer Dfa::to_transducer() const {
  Transducer t;
  t.input_table = alphabet;
  t.num_states = num_states;
  t.initial = {0};
  for (State s = 0; s < num_states; ++s) {
    if (accepting[s]) t.final.push_back(s);
    for (Symbol a = 0; a < alphabet.size(); ++a) {
      const State d = step(s, a);
      if (d != no_state) t.transitions.push_back({s, a, epsilon, d});
    }
  }
  return t;
}

// --- Core constructions -----------------------------------------------------

Transducer compose(const Transducer& u, const Transducer& v) {
  if (u.output_table != v.input_table)
    throw ContractViolation(
        "compose: output alphabet of the first machine must equal the input "
        "alphabet of the second");

  const LabelIndex uidx(u, /*by_input=*/true);   // whole-row iteration
  const LabelIndex vidx(v, /*by_input=*/true);   // lookup by consumed symbol
  const int v_eps_bucket = v.input_table.size();

  std::vector<char> ufin(u.num_states, 0), vfin(v.num_states, 0);
  for (State s : u.final) ufin[s] = 1;
  for (State s : v.final) vfin[s] = 1;

  std::unordered_map<std::uint64_t, State> ids;
  std::vector<std::pair<State, State>> nodes;
  auto intern = [&](State qu, State qv) -> State {
    const std::uint64_t key =
        (static_cast<std::uint64_t>(static_cast<std::uint32_t>(qu)) << 32) |
        static_cast<std::uint32_t>(qv);
    auto [it, inserted] =
        ids.try_emplace(key, static_cast<State>(nodes.size()));
    if (inserted) nodes.emplace_back(qu, qv);
    return it->second;
  };

  Transducer r;
  r.input_table = u.input_table;
  r.output_table = v.output_table;
  for (State i : u.initial)
    for (State j : v.initial) {
      const State id = intern(i, j);
      if (std::find(r.initial.begin(), r.initial.end(), id) ==
          r.initial.end())
        r.initial.push_back(id);
    }

  for (std::size_t qi = 0; qi < nodes.size(); ++qi) {
    const auto [qu, qv] = nodes[qi];
    const State src = static_cast<State>(qi);
    auto [ub, ue] = uidx.all(qu);
    for (; ub != ue; ++ub) {
      const Transition& t = u.transitions[*ub];
      if (t.out == epsilon) {
        r.transitions.push_back({src, t.in, epsilon, intern(t.dst, qv)});
      } else {
        auto [vb, ve] = vidx.bucket(qv, t.out);
        for (; vb != ve; ++vb) {
          const Transition& s = v.transitions[*vb];
          r.transitions.push_back({src, t.in, s.out, intern(t.dst, s.dst)});
        }
      }
    }
    auto [vb, ve] = vidx.bucket(qv, v_eps_bucket);
    for (; vb != ve; ++vb) {
      const Transition& s = v.transitions[*vb];
      r.transitions.push_back({src, epsilon, s.out, intern(qu, s.dst)});
    }
  }

  r.num_states = static_cast<State>(nodes.size());
  for (std::size_t qi = 0; qi < nodes.size(); ++qi)
    if (ufin[nodes[qi].first] && vfin[nodes[qi].second])
      r.final.push_back(static_cast<State>(qi));
  sort_unique(r.initial);
  return trim(r);
}

Transducer transpose(const Transducer& t) {
  Transducer r = t;
  std::swap(r.input_table, r.output_table);
  for (Transition& tr : r.transitions) std::swap(tr.in, tr.out);
  return r;
}

Transducer reverse(const Transducer& t) {
  if (!t.is_recognizer())
    throw ContractViolation("reverse: input must be a recognizer");
  Transducer r;
  r.input_table = t.input_table;
  r.num_states = t.num_states;
  r.initial = t.final;
  r.final = t.initial;
  r.transitions.reserve(t.transitions.size());
  for (const Transition& tr : t.transitions)
    r.transitions.push_back({tr.dst, tr.in, tr.out, tr.src});
  return r;
}

Dfa determinize(const Transducer& t, std::size_t max_states) {
  if (!t.is_recognizer())
    throw ContractViolation("determinize: input must be a recognizer");
  const int nsym = t.input_table.size();
  Dfa d;
  d.alphabet = t.input_table;

  Stepper engine(t);
  std::vector<State> start(t.initial);
  engine.close(start);
  if (start.empty()) {  // canonical empty-language machine
    d.num_states = 1;
    d.accepting.assign(1, 0);
    d.next.assign(nsym, no_state);
    return d;
  }

  std::vector<char> is_fin(t.num_states, 0);
  for (State s : t.final) is_fin[s] = 1;
  auto subset_accepts = [&](const std::vector<State>& sub) {
    for (State s : sub)
      if (is_fin[s]) return true;
    return false;
  };

  std::unordered_map<std::vector<State>, State, StateVecHash> ids;
  std::vector<const std::vector<State>*> subset_of;  // stable node pointers
  auto intern = [&](std::vector<State>&& sub) -> State {
    auto [it, inserted] =
        ids.try_emplace(std::move(sub), static_cast<State>(subset_of.size()));
    if (inserted) {
      subset_of.push_back(&it->first);
      d.accepting.push_back(subset_accepts(it->first) ? 1 : 0);
      if (max_states && subset_of.size() > max_states)
        throw ResourceLimit("determinize: state budget of " +
                            std::to_string(max_states) + " exceeded");
    }
    return it->second;
  };

  intern(std::move(start));
  std::vector<State> out;
  for (std::size_t qi = 0; qi < subset_of.size(); ++qi) {
    d.next.resize((qi + 1) * nsym, no_state);
    const std::vector<State>& cur = *subset_of[qi];
    for (Symbol a = 0; a < nsym; ++a) {
      engine.step(cur, a, out);
      if (out.empty()) continue;
      d.next[qi * nsym + a] = intern(std::move(out));
      out.clear();
    }
  }
  d.num_states = static_cast<State>(subset_of.size());
  return d;
}

Dfa minimize(const Transducer& t, std::size_t max_states) {
  if (!t.is_recognizer())
    throw ContractViolation("minimize: input must be a recognizer");
  const Dfa back = determinize(reverse(t), max_states);
  return determinize(reverse(back.to_transducer()), max_states);
}

Dfa minimize(const Dfa& d, std::size_t max_states) {
  return minimize(d.to_transducer(), max_states);
}

bool equivalent(const Transducer& a, const Transducer& b) {
  if (!a.is_recognizer() || !b.is_recognizer())
    throw ContractViolation("equivalent: both machines must be recognizers");
  if (a.input_table != b.input_table)
    throw ContractViolation("equivalent: alphabets differ");
  return minimize(a) == minimize(b);
}

bool equivalent(const Dfa& a, const Dfa& b) {
  if (a.alphabet != b.alphabet)
    throw ContractViolation("equivalent: alphabets differ");
  return minimize(a) == minimize(b);
}

Dfa complement(const Dfa& d) {
  const int nsym = d.alphabet.size();
  const State dead = d.num_states;
  Dfa full;
  full.alphabet = d.alphabet;
  full.num_states = d.num_states + 1;
  full.accepting.resize(full.num_states);
  full.next.resize(static_cast<std::size_t>(full.num_states) * nsym);
  for (State s = 0; s < d.num_states; ++s) {
    full.accepting[s] = d.accepting[s] ? 0 : 1;
    for (Symbol a = 0; a < nsym; ++a) {
      const State n = d.step(s, a);
      full.next[static_cast<std::size_t>(s) * nsym + a] =
          n == no_state ? dead : n;
    }
  }
  full.accepting[dead] = 1;
  for (Symbol a = 0; a < nsym; ++a)
    full.next[static_cast<std::size_t>(dead) * nsym + a] = dead;
  return minimize(full.to_transducer());
}

Dfa complement(const Transducer& t) { return complement(determinize(t)); }

Transducer to_filter(const Transducer& t) {
  if (!t.is_recognizer())
    throw ContractViolation("to_filter: input must be a recognizer");
  Transducer r = t;
  r.output_table = t.input_table;
  for (Transition& tr : r.transitions) tr.out = tr.in;
  return r;
}

Transducer power(const Transducer& t, int n) {
  if (n < 1) throw ContractViolation("power: exponent must be >= 1");
  if (t.input_table != t.output_table)
    throw ContractViolation("power: input and output alphabets must match");
  Transducer r = t;
  for (int i = 2; i <= n; ++i) r = reduce_transducer(compose(r, t));
  return r;
}

bool accepts(const Transducer& t, const Word& word) {
  check_word_symbols(t.input_table, word, "accepts");
  Stepper engine(t);
  std::vector<State> cur(t.initial), nxt;
  engine.close(cur);
  for (Symbol a : word) {
    if (cur.empty()) return false;
    engine.step(cur, a, nxt);
    cur.swap(nxt);
  }
  std::vector<char> is_fin(t.num_states, 0);
  for (State s : t.final) is_fin[s] = 1;
  for (State s : cur)
    if (is_fin[s]) return true;
  return false;
}

bool accepts(const Dfa& d, const Word& word) {
  check_word_symbols(d.alphabet, word, "accepts");
  State s = 0;
  for (Symbol a : word) {
    s = d.step(s, a);
    if (s == no_state) return false;
  }
  return d.accepting[s] != 0;
}

std::vector<Word> transduce(const Transducer& t, const Word& word,
                            std::size_t limit) {
  check_word_symbols(t.input_table, word, "transduce");
  const std::int32_t n = t.num_states;
  const std::int32_t len = static_cast<std::int32_t>(word.size());
  if (n == 0) return {};

  const LabelIndex idx(t, /*by_input=*/true);
  PathGraph g;
  g.nodes = (len + 1) * n;
  auto node = [&](std::int32_t i, State q) { return i * n + q; };

  g.head.assign(g.nodes + 1, 0);
  for (std::int32_t i = 0; i <= len; ++i)
    for (State q = 0; q < n; ++q) {
      auto [b, e] = idx.all(q);
      std::int32_t deg = 0;
      for (; b != e; ++b) {
        const Transition& tr = t.transitions[*b];
        if (tr.in == epsilon || (i < len && tr.in == word[i])) ++deg;
      }
      g.head[node(i, q) + 1] = deg;
    }
  for (std::int32_t i = 1; i <= g.nodes; ++i) g.head[i] += g.head[i - 1];
  g.dst.resize(g.head.back());
  g.emit.resize(g.head.back());
  {
    std::vector<std::int32_t> cursor(g.head.begin(), g.head.end() - 1);
    for (std::int32_t i = 0; i <= len; ++i)
      for (State q = 0; q < n; ++q) {
        auto [b, e] = idx.all(q);
        for (; b != e; ++b) {
          const Transition& tr = t.transitions[*b];
          std::int32_t to;
          if (tr.in == epsilon)
            to = node(i, tr.dst);
          else if (i < len && tr.in == word[i])
            to = node(i + 1, tr.dst);
          else
            continue;
          const auto slot = cursor[node(i, q)]++;
          g.dst[slot] = to;
          g.emit[slot] = tr.out;
        }
      }
  }
  for (State s : t.initial) g.starts.push_back(node(0, s));
  for (State s : t.final) g.accepts.push_back(node(len, s));
  return collect_paths(g, limit, InfinityKind::unbounded_transduction);
}

std::vector<Word> enumerate_language(const Transducer& t,
                                     std::size_t max_count) {
  if (!t.is_recognizer()) {
    if (t.is_generator()) return enumerate_language(transpose(t), max_count);
    throw ContractViolation(
        "enumerate_language: input must be a recognizer or generator");
  }
  if (t.num_states == 0) return {};
  PathGraph g;
  g.nodes = t.num_states;
  g.head.assign(g.nodes + 1, 0);
  for (const Transition& tr : t.transitions) ++g.head[tr.src + 1];
  for (std::int32_t i = 1; i <= g.nodes; ++i) g.head[i] += g.head[i - 1];
  g.dst.resize(t.transitions.size());
  g.emit.resize(t.transitions.size());
  {
    std::vector<std::int32_t> cursor(g.head.begin(), g.head.end() - 1);
    for (const Transition& tr : t.transitions) {
      const auto slot = cursor[tr.src]++;
      g.dst[slot] = tr.dst;
      g.emit[slot] = tr.in;
    }
  }
  g.starts.assign(t.initial.begin(), t.initial.end());
  g.accepts.assign(t.final.begin(), t.final.end());
  return collect_paths(g, max_count, InfinityKind::infinite_language);
}

std::vector<Word> enumerate_language(const Dfa& d, std::size_t max_count) {
  return enumerate_language(d.to_transducer(), max_count);
}

Transducer reduce_transducer(const Transducer& t) {
  // View each edge label pair as one letter; minimizing that recognizer
  // preserves the set of label-pair paths exactly, hence the relation.
  // Fully silent edges (epsilon in, epsilon out) add nothing to either
  // string, so they stay epsilon moves and get folded away by closure
  // instead of surviving as observable letters.
  std::map<std::pair<Symbol, Symbol>, Symbol> pair_id;
  for (const Transition& tr : t.transitions)
    if (tr.in != epsilon || tr.out != epsilon)
      pair_id.emplace(std::make_pair(tr.in, tr.out), 0);
  std::vector<std::pair<Symbol, Symbol>> pairs;
  pairs.reserve(pair_id.size());
  for (auto& [p, id] : pair_id) {
    id = static_cast<Symbol>(pairs.size());
    pairs.push_back(p);
  }

  auto half_label = [&](const SymbolTable& table, Symbol s) {
    return s == epsilon ? std::string("-") : table.label(s);
  };
  std::vector<std::string> labels;
  labels.reserve(pairs.size());
  for (const auto& [in, out] : pairs)
    labels.push_back(half_label(t.input_table, in) + "|" +
                     half_label(t.output_table, out));

  Transducer letters;
  letters.input_table = SymbolTable(std::move(labels));
  letters.num_states = t.num_states;
  letters.initial = t.initial;
  letters.final = t.final;
  letters.transitions.reserve(t.transitions.size());
  for (const Transition& tr : t.transitions) {
    const bool silent = tr.in == epsilon && tr.out == epsilon;
    letters.transitions.push_back(
        {tr.src, silent ? epsilon : pair_id.at({tr.in, tr.out}), epsilon,
         tr.dst});
  }

  const Dfa m = minimize(letters);
  Transducer r;
  r.input_table = t.input_table;
  r.output_table = t.output_table;
  r.num_states = m.num_states;
  r.initial = {0};
  for (State s = 0; s < m.num_states; ++s) {
    if (m.accepting[s]) r.final.push_back(s);
    for (Symbol p = 0; p < static_cast<Symbol>(pairs.size()); ++p) {
      const State d = m.step(s, p);
      if (d != no_state)
        r.transitions.push_back({s, pairs[p].first, pairs[p].second, d});
    }
  }
  return r;
}

Transducer trim(const Transducer& t) {
  const std::int32_t n = t.num_states;
  std::vector<char> fwd(n, 0), bwd(n, 0);
  {
    std::vector<std::vector<State>> adj(n), radj(n);
    for (const Transition& tr : t.transitions) {
      adj[tr.src].push_back(tr.dst);
      radj[tr.dst].push_back(tr.src);
    }
    std::vector<State> stack;
    for (State s : t.initial)
      if (!fwd[s]) {
        fwd[s] = 1;
        stack.push_back(s);
      }
    while (!stack.empty()) {
      const State u = stack.back();
      stack.pop_back();
      for (State v : adj[u])
        if (!fwd[v]) {
          fwd[v] = 1;
          stack.push_back(v);
        }
    }
    for (State s : t.final)
      if (!bwd[s]) {
        bwd[s] = 1;
        stack.push_back(s);
      }
    while (!stack.empty()) {
      const State u = stack.back();
      stack.pop_back();
      for (State v : radj[u])
        if (!bwd[v]) {
          bwd[v] = 1;
          stack.push_back(v);
        }
    }
  }

  std::vector<State> renum(n, no_state);
  State kept = 0;
  for (State s = 0; s < n; ++s)
    if (fwd[s] && bwd[s]) renum[s] = kept++;

  Transducer r;
  r.input_table = t.input_table;
  r.output_table = t.output_table;
  if (kept == 0) {  // empty relation
    r.num_states = 1;
    r.initial = {0};
    return r;
  }
  r.num_states = kept;
  for (State s : t.initial)
    if (renum[s] != no_state) r.initial.push_back(renum[s]);
  for (State s : t.final)
    if (renum[s] != no_state) r.final.push_back(renum[s]);
  for (const Transition& tr : t.transitions)
    if (renum[tr.src] != no_state && renum[tr.dst] != no_state)
      r.transitions.push_back(
          {renum[tr.src], tr.in, tr.out, renum[tr.dst]});
  return r;
}

Dfa intersect(const Dfa& a, const Dfa& b) {
  if (a.alphabet != b.alphabet)
    throw ContractViolation("intersect: alphabets differ");
  const int nsym = a.alphabet.size();
  std::unordered_map<std::uint64_t, State> ids;
  std::vector<std::pair<State, State>> nodes;
  auto intern = [&](State x, State y) -> State {
    const std::uint64_t key =
        (static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)) << 32) |
        static_cast<std::uint32_t>(y);
    auto [it, inserted] =
        ids.try_emplace(key, static_cast<State>(nodes.size()));
    if (inserted) nodes.emplace_back(x, y);
    return it->second;
  };
  Dfa r;
  r.alphabet = a.alphabet;
  intern(0, 0);
  for (std::size_t qi = 0; qi < nodes.size(); ++qi) {
    r.next.resize((qi + 1) * nsym, no_state);
    const auto [x, y] = nodes[qi];
    r.accepting.push_back(a.accepting[x] && b.accepting[y] ? 1 : 0);
    for (Symbol s = 0; s < nsym; ++s) {
      const State nx = a.step(x, s), ny = b.step(y, s);
      if (nx == no_state || ny == no_state) continue;
      r.next[qi * nsym + s] = intern(nx, ny);
    }
  }
  r.num_states = static_cast<State>(nodes.size());
  return r;
}

Dfa canonicalize(const Dfa& d) {
  const int nsym = d.alphabet.size();
  std::vector<State> renum(d.num_states, no_state), order;
  renum[0] = 0;
  order.push_back(0);
  for (std::size_t qi = 0; qi < order.size(); ++qi) {
    const State s = order[qi];
    for (Symbol a = 0; a < nsym; ++a) {
      const State n = d.step(s, a);
      if (n != no_state && renum[n] == no_state) {
        renum[n] = static_cast<State>(order.size());
        order.push_back(n);
      }
    }
  }
  if (static_cast<State>(order.size()) != d.num_states)
    throw ContractViolation("canonicalize: unreachable state present");
  Dfa r;
  r.alphabet = d.alphabet;
  r.num_states = d.num_states;
  r.accepting.resize(d.num_states);
  r.next.assign(d.next.size(), no_state);
  for (State s = 0; s < d.num_states; ++s) {
    r.accepting[renum[s]] = d.accepting[s];
    for (Symbol a = 0; a < nsym; ++a) {
      const State n = d.step(s, a);
      if (n != no_state)
        r.next[static_cast<std::size_t>(renum[s]) * nsym + a] = renum[n];
    }
  }
  return r;
}

}  // namespace audioactive::fst
