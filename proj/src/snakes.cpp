#include "mdh/snakes.hpp"

#include "mdh/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <set>
#include <sstream>

namespace mdh {
namespace {

std::optional<int> letter_index(const std::string& letter) {
  if (letter.size() < 2 || letter[0] != 'x' || letter[1] == '0') return std::nullopt;
  int n = 0;
  auto [ptr, ec] = std::from_chars(letter.data() + 1, letter.data() + letter.size(), n);
  if (ec != std::errc() || ptr != letter.data() + letter.size() || n < 1) return std::nullopt;
  return n;
}

SnakeWord reversed(SnakeWord w) {
  std::reverse(w.begin(), w.end());
  return w;
}

}  // namespace

std::vector<NameViolation> validate_snake_name(const SnakeWord& word) {
  std::vector<NameViolation> out;
  if (word.empty()) {
    out.push_back({"empty word", 0, "a snake name has at least one letter"});
    return out;
  }
  std::map<std::string, int> count;
  int next = 1;
  bool order_reported = false;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const auto& w = word[i];
    const auto idx = letter_index(w);
    if (!idx) out.push_back({"bad letter", i, "'" + w + "' is not of the form x<n>"});
    if (i > 0 && word[i - 1] == w) out.push_back({"consecutive repeat", i, "'" + w + "' repeats the previous letter"});
    if (count[w]++ == 0 && idx && !order_reported) {
      if (*idx != next) {
        out.push_back({"non-canonical order", i,
                       "first new letter here should be x" + std::to_string(next) + ", found " + w});
        order_reported = true;
      }
      ++next;
    }
  }
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (count[word[i]] == 1) out.push_back({"single occurrence", i, "'" + word[i] + "' occurs only once"});
  }
  return out;
}

void require_snake_name(const SnakeWord& word) {
  const auto vs = validate_snake_name(word);
  if (vs.empty()) return;
  std::string msg = "invalid snake name " + word_to_string(word) + ":";
  for (const auto& v : vs) msg += "\n  " + v.kind + " at position " + std::to_string(v.position) + ": " + v.detail;
  throw InputError(msg);
}

SnakeWord normalize_word(const SnakeWord& word) {
  std::map<std::string, std::string> rename;
  SnakeWord out;
  for (const auto& w : word) {
    auto it = rename.find(w);
    if (it == rename.end()) it = rename.emplace(w, "x" + std::to_string(rename.size() + 1)).first;
    out.push_back(it->second);
  }
  return out;
}

bool same_snake_name(const SnakeWord& a, const SnakeWord& b) {
  const auto na = normalize_word(a);
  return na == normalize_word(b) || na == normalize_word(reversed(b));
}

bool same_snake_name_reversed_only(const SnakeWord& a, const SnakeWord& b) {
  const auto na = normalize_word(a);
  return na != normalize_word(b) && na == normalize_word(reversed(b));
}

NodeCounts node_counts(const SnakeWord& word) {
  require_snake_name(word);
  const std::set<std::string> letters(word.begin(), word.end());
  return {static_cast<int>(letters.size()), static_cast<int>(word.size())};
}

SnakeWord make_gluing_word(int k) {
  if (k < 2) throw DomainError("gluing words need k >= 2, got " + std::to_string(k));
  SnakeWord w{"x1", "x2", "x1", "x2"};
  for (int j = 3; j <= k; ++j) {
    const std::string x = "x" + std::to_string(j);
    w.insert(w.end() - 1, x);
    w.push_back(x);
  }
  return w;
}

SnakeWord parse_word(const std::string& text) {
  SnakeWord out;
  std::size_t i = 0;
  while (i < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c) || c == ',' || c == '[' || c == ']') {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i + 1) {
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != ',') ++j;
    }
    out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string word_to_string(const SnakeWord& word) {
  std::string out = "[";
  for (std::size_t i = 0; i < word.size(); ++i) out += (i ? " " : "") + word[i];
  return out + "]";
}

void validate_spec(const SnakeSpec& spec) {
  require_snake_name(spec.word);
  if (spec.beta.is_infinite() || spec.beta < Exponent(1)) {
    throw InputError("snake exponent beta = " + spec.beta.to_string() + " must be finite and >= 1");
  }
  const std::set<std::string> letters(spec.word.begin(), spec.word.end());
  for (const auto& letter : letters) {
    auto it = spec.spectra.find(letter);
    if (it == spec.spectra.end() || it->second.empty()) throw InputError("letter " + letter + " has no spectrum");
    for (const auto& q : it->second) {
      if (!(q > spec.beta)) {
        throw InputError("spectrum value " + q.to_string() + " of " + letter + " does not exceed beta = " +
                         spec.beta.to_string());
      }
      if (q.is_infinite()) throw InputError("spectrum value of " + letter + " must be finite");
    }
  }
  for (const auto& [letter, values] : spec.spectra) {
    if (!letters.contains(letter)) throw InputError("spectrum given for letter " + letter + " not in the word");
  }
}

std::optional<std::map<std::string, Exponent>> singleton_spectra(const SnakeSpec& spec) {
  std::map<std::string, Exponent> out;
  for (const auto& [letter, values] : spec.spectra) {
    std::set<Exponent> distinct(values.begin(), values.end());
    if (distinct.size() != 1) return std::nullopt;
    out.emplace(letter, *distinct.begin());
  }
  return out;
}

std::optional<Exponent> uniform_alpha(const SnakeSpec& spec) {
  const auto s = singleton_spectra(spec);
  if (!s || s->empty()) return std::nullopt;
  const Exponent first = s->begin()->second;
  for (const auto& [letter, q] : *s) {
    if (q != first) return std::nullopt;
  }
  return first;
}

SnakeSpec uniform_spec(const SnakeWord& word, const Exponent& beta, const Exponent& alpha) {
  SnakeSpec spec{beta, word, {}};
  for (const auto& w : word) spec.spectra[w] = {alpha};
  return spec;
}

RankProfile mdh1_basic_snake(const SnakeSpec& spec) {
  validate_spec(spec);
  const auto alpha = uniform_alpha(spec);
  if (!alpha) throw PreconditionError("closed form needs one common singleton spectrum; use the oracle instead");
  const auto [k, m] = node_counts(spec.word);
  const std::vector<ProfileCase> rows{
      {Exponent(1), spec.beta, 0}, {spec.beta, *alpha, m - k}, {*alpha, Exponent::infinity(), 0}};
  return profile_from_cases(rows);
}

std::vector<SnakeWord> enumerate_double_occurrence_names(int letters) {
  std::vector<SnakeWord> out;
  if (letters < 1) return out;
  const std::size_t m = 2 * static_cast<std::size_t>(letters);
  SnakeWord cur;
  std::vector<int> used(static_cast<std::size_t>(letters) + 1, 0);
  int introduced = 0;
  std::function<void()> extend = [&] {
    if (cur.size() == m) {
      out.push_back(cur);
      return;
    }
    // Reuse an introduced letter still missing its second occurrence, or introduce the next one.
    for (int x = 1; x <= introduced + 1 && x <= letters; ++x) {
      const std::string name = "x" + std::to_string(x);
      if (used[static_cast<std::size_t>(x)] == 2) continue;
      if (!cur.empty() && cur.back() == name) continue;
      const bool fresh = x == introduced + 1;
      ++used[static_cast<std::size_t>(x)];
      if (fresh) ++introduced;
      cur.push_back(name);
      extend();
      cur.pop_back();
      if (fresh) --introduced;
      --used[static_cast<std::size_t>(x)];
    }
  };
  extend();
  return out;
}

}  // namespace mdh
