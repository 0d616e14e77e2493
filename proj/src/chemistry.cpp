#include "audioactive/chemistry.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <utility>

#include <json.hpp>

namespace audioactive::chemistry {

IntWord to_int_word(std::string_view word) {
  IntWord out;
  out.reserve(word.size());
  for (char c : word) {
    if (c >= '1' && c <= '9') {
      out.push_back(c - '0');
    } else if (c == 'd') {
      out.push_back(4);
    } else {
      throw std::invalid_argument(std::string("invalid symbol '") + c +
                                  "' in word");
    }
  }
  return out;
}

std::string project_to_base(const IntWord& w) {
  std::string out;
  out.reserve(w.size());
  for (int v : w) {
    if (v < 1) throw std::invalid_argument("word entries must be >= 1");
    out.push_back(v >= 4 ? 'd' : static_cast<char>('0' + v));
  }
  return out;
}

IntWord derive(const IntWord& w) {
  IntWord out;
  out.reserve(w.size() * 2);
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i + 1;
    while (j < w.size() && w[j] == w[i]) ++j;
    out.push_back(static_cast<int>(j - i));
    out.push_back(w[i]);
    i = j;
  }
  return out;
}

IntWord derive_n(IntWord w, int n) {
  if (n < 0) throw std::invalid_argument("derive_n: negative step count");
  for (int k = 0; k < n; ++k) w = derive(w);
  return w;
}

std::string derive(std::string_view word) {
  return project_to_base(derive(to_int_word(word)));
}

std::string derive_n(std::string_view word, int n) {
  return project_to_base(derive_n(to_int_word(word), n));
}

bool is_day_one(std::string_view word) {
  IntWord w = to_int_word(word);
  std::size_t run = 0;
  int prev = 0;
  for (int v : w) {
    run = (v == prev) ? run + 1 : 1;
    if (run >= 4) return false;
    prev = v;
  }
  return true;
}

namespace {

// One derivation step applied to a trusted prefix. `win` is a correct
// prefix of the true word at the current step; `exact` means it is the
// whole word. Runs that end strictly inside the prefix (or at its end
// when the prefix is the whole word) are certainly complete; a run
// touching the truncation point might continue past it and is dropped.
void step_window(std::vector<int>& win, bool& exact, std::size_t cap) {
  std::vector<int> out;
  out.reserve(win.size() + 8);
  std::size_t i = 0;
  while (i < win.size()) {
    std::size_t j = i + 1;
    while (j < win.size() && win[j] == win[i]) ++j;
    if (j == win.size() && !exact) break;
    out.push_back(static_cast<int>(j - i));
    out.push_back(win[i]);
    i = j;
  }
  if (out.size() > cap) {
    out.resize(cap);
    exact = false;
  }
  win = std::move(out);
}

}  // namespace

std::vector<int> leading_symbols(std::string_view w, int depth) {
  if (w.empty())
    throw std::invalid_argument("leading_symbols: empty word");
  if (depth <= 0) return {};
  const IntWord full = to_int_word(w);
  for (std::size_t cap = 512;; cap *= 4) {
    std::vector<int> win = full;
    bool exact = win.size() <= cap;
    if (!exact) win.resize(cap);
    std::vector<int> heads;
    heads.reserve(static_cast<std::size_t>(depth));
    bool ok = true;
    for (int n = 0; n < depth; ++n) {
      if (win.empty()) {
        ok = false;  // validity underflow: retry with a wider window
        break;
      }
      heads.push_back(win[0]);
      if (n + 1 < depth) step_window(win, exact, cap);
    }
    if (ok) return heads;
    if (cap > (1u << 22))
      throw std::runtime_error("leading_symbols: window kept underflowing");
  }
}

bool split_oracle(std::string_view u, std::string_view v, int depth) {
  if (u.empty() || v.empty())
    throw std::invalid_argument("split_oracle: both parts must be nonempty");
  if (depth < 0) throw std::invalid_argument("split_oracle: negative depth");
  // The last symbol of derive_n(u, n) is u's last symbol for every n (the
  // final run's value survives each step), so the halves stay independent
  // through step depth iff that symbol never leads derive_n(v, n) for
  // n < depth.
  const int last = to_int_word(u).back();
  const std::vector<int> heads = leading_symbols(v, depth);
  return std::find(heads.begin(), heads.end(), last) == heads.end();
}

bool atom_oracle(std::string_view w, int depth) {
  if (w.empty() || !is_day_one(w)) return false;
  const IntWord iw = to_int_word(w);
  for (std::size_t cut = 1; cut < w.size(); ++cut) {
    const std::vector<int> heads = leading_symbols(w.substr(cut), depth);
    if (std::find(heads.begin(), heads.end(), iw[cut - 1]) == heads.end())
      return false;  // this cut splits, so w is divisible
  }
  return true;
}

std::vector<std::string> atomic_factorization(std::string_view w, int depth) {
  if (w.empty())
    throw std::invalid_argument("atomic_factorization: empty word");
  if (!is_day_one(w))
    throw std::invalid_argument(
        "atomic_factorization: input must contain no aaaa run");
  const IntWord iw = to_int_word(w);
  std::vector<std::string> factors;
  std::size_t start = 0;
  for (std::size_t cut = 1; cut < w.size(); ++cut) {
    // A cut's validity depends only on the symbol before it and the
    // suffix after it, so cutting at every valid position of w at once
    // yields the finest factorization.
    const std::vector<int> heads = leading_symbols(w.substr(cut), depth);
    if (std::find(heads.begin(), heads.end(), iw[cut - 1]) == heads.end()) {
      factors.emplace_back(w.substr(start, cut - start));
      start = cut;
    }
  }
  factors.emplace_back(w.substr(start));
  for (const std::string& f : factors) {
    if (!atom_oracle(f, depth))
      throw std::logic_error(
          "atomic_factorization: factor is further divisible");
  }
  return factors;
}

PeriodicTable::PeriodicTable(std::vector<Element> elements)
    : elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const Element& e = elements_[i];
    if (e.atomic_number != static_cast<int>(i) + 1)
      throw std::logic_error("periodic table rows out of order");
    for (std::size_t j = 0; j < i; ++j) {
      if (elements_[j].name == e.name || elements_[j].word == e.word)
        throw std::logic_error("duplicate periodic table entry");
    }
  }
  for (const Element& e : elements_) {
    for (const std::string& name : e.decay) by_name(name);
  }
}

const Element& PeriodicTable::by_name(std::string_view name) const {
  for (const Element& e : elements_)
    if (e.name == name) return e;
  throw NotFound("no element named '" + std::string(name) + "'");
}

const Element& PeriodicTable::by_word(std::string_view word) const {
  if (const Element* e = find_by_word(word)) return *e;
  throw NotFound("no element with word '" + std::string(word) + "'");
}

const Element* PeriodicTable::find_by_word(std::string_view word) const {
  for (const Element& e : elements_)
    if (e.word == word) return &e;
  return nullptr;
}

std::string PeriodicTable::to_json(int indent) const {
  nlohmann::json arr = nlohmann::json::array();
  for (const Element& e : elements_) {
    nlohmann::json obj;
    obj["name"] = e.name;
    obj["number"] = e.atomic_number;
    obj["word"] = e.word;
    obj["decay"] = e.decay;
    arr.push_back(std::move(obj));
  }
  return arr.dump(indent);
}

const Element& lookup_element(std::string_view word) {
  return PeriodicTable::standard().by_word(word);
}

GrowthReport growth_rate(const PeriodicTable& table, double tolerance,
                         int max_iterations) {
  // Decay matrix over the 92 common elements, rows/columns indexed in
  // shortlex order of the element words. The transuranic pair is excluded:
  // it never occurs in the decay of a common element, and its own cycle
  // has growth one, so it does not carry the dominant eigenvalue.
  std::vector<const Element*> common;
  for (const Element& e : table.elements())
    if (!PeriodicTable::is_transuranic(e)) common.push_back(&e);
  std::sort(common.begin(), common.end(),
            [](const Element* a, const Element* b) {
              if (a->word.size() != b->word.size())
                return a->word.size() < b->word.size();
              return a->word < b->word;
            });
  const std::size_t n = common.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[common[i]->name] = i;
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (const std::string& name : common[i]->decay) {
      auto it = index.find(name);
      if (it == index.end())
        throw std::logic_error(
            "growth_rate: common element decays into a transuranic one");
      m[i][it->second] += 1.0;
    }
  }

  std::vector<double> x(n, 1.0), y(n, 0.0);
  double lambda = 0.0;
  for (int iter = 1; iter <= max_iterations; ++iter) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += m[i][j] * x[j];
      y[i] = s;
    }
    lambda = 0.0;
    for (double v : y) lambda = std::max(lambda, std::abs(v));
    if (lambda == 0.0)
      throw std::runtime_error("growth_rate: decay matrix is nilpotent");
    double residual = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      residual = std::max(residual, std::abs(y[i] - lambda * x[i]));
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / lambda;
    if (residual <= tolerance) return {lambda, iter, residual};
  }
  throw std::runtime_error("growth_rate: power iteration did not converge");
}

}  // namespace audioactive::chemistry
