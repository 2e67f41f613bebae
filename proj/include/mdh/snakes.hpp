#pragma once

#include "mdh/exponent.hpp"
#include "mdh/profile.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mdh {

using SnakeWord = std::vector<std::string>;

struct NameViolation {
  std::string kind;  // "empty word", "bad letter", "consecutive repeat", "non-canonical order", "single occurrence"
  std::size_t position = 0;
  std::string detail;
};

/// Checks the snake-name conditions: letters are x1, x2, ...; no letter is
/// immediately repeated; the first occurrences read x1, x2, x3, ... in order;
/// every letter occurs at least twice. Positions are 0-based.
std::vector<NameViolation> validate_snake_name(const SnakeWord& word);

/// Throws InputError listing the violations.
void require_snake_name(const SnakeWord& word);

/// Renames arbitrary letters to x1, x2, ... by order of first occurrence.
SnakeWord normalize_word(const SnakeWord& word);

/// Equal after normalization, possibly after reversing one of them.
bool same_snake_name(const SnakeWord& a, const SnakeWord& b);

/// True when the words agree only after reversal (not as read).
bool same_snake_name_reversed_only(const SnakeWord& a, const SnakeWord& b);

struct NodeCounts {
  int nodes = 0;        // k, distinct letters
  int nodal_zones = 0;  // m, word length
  friend bool operator==(const NodeCounts&, const NodeCounts&) = default;
};

NodeCounts node_counts(const SnakeWord& word);

/// W_2 = x1 x2 x1 x2; W_k inserts x_k before the last letter of W_{k-1} and
/// appends x_k again.
SnakeWord make_gluing_word(int k);

SnakeWord parse_word(const std::string& text);  // "x1 x2 x1 x2" or "x1x2x1x2"
std::string word_to_string(const SnakeWord& word);

struct SnakeSpec {
  Exponent beta{1};
  SnakeWord word;
  std::map<std::string, std::vector<Exponent>> spectra;
};

/// Word is a snake name, beta is finite and >= 1, every letter has a non-empty
/// spectrum and every spectrum value exceeds beta. Throws InputError.
void validate_spec(const SnakeSpec& spec);

/// The common value when every spectrum is the same singleton.
std::optional<Exponent> uniform_alpha(const SnakeSpec& spec);

/// Each letter's spectrum when all spectra are singletons.
std::optional<std::map<std::string, Exponent>> singleton_spectra(const SnakeSpec& spec);

/// Spec with the given word and the same singleton spectrum for every letter.
SnakeSpec uniform_spec(const SnakeWord& word, const Exponent& beta, const Exponent& alpha);

/// Closed form for basic snakes: rank m - k on [beta, alpha), 0 elsewhere.
/// Throws PreconditionError unless the spectrum is a uniform singleton.
RankProfile mdh1_basic_snake(const SnakeSpec& spec);

/// All valid snake names with `letters` letters each occurring exactly twice.
std::vector<SnakeWord> enumerate_double_occurrence_names(int letters);

}  // namespace mdh
