#include <doctest.h>

#include "mdh/errors.hpp"
#include "mdh/snakes.hpp"

#include <set>

using namespace mdh;

namespace {

bool has_kind(const SnakeWord& w, const std::string& kind) {
  for (const auto& v : validate_snake_name(w)) {
    if (v.kind == kind) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("snake name validation") {
  CHECK(validate_snake_name(parse_word("x1 x2 x1 x3 x2 x3")).empty());
  CHECK(validate_snake_name(parse_word("x1x2x1x2")).empty());
  CHECK(has_kind(parse_word("x1 x1 x2 x2"), "consecutive repeat"));
  CHECK(has_kind({}, "empty word"));
  CHECK(has_kind(parse_word("x2 x1 x2 x1"), "non-canonical order"));
  CHECK(has_kind(parse_word("x1 x2 x1"), "single occurrence"));
  CHECK(has_kind({"x1", "y", "x1"}, "bad letter"));
  CHECK_THROWS_AS(require_snake_name(parse_word("x1 x1")), InputError);

  const auto v = validate_snake_name(parse_word("x1 x3 x1 x3"));
  REQUIRE(v.size() == 1);
  CHECK(v[0].position == 1);
}

TEST_CASE("parsing and printing words") {
  CHECK(parse_word("x1x2x3x1x4x3x2x4").size() == 8);
  CHECK(parse_word("  x1  x2 x1 x2 ") == parse_word("x1x2x1x2"));
  CHECK(word_to_string(parse_word("x1x2x1x2")) == "[x1 x2 x1 x2]");
}

TEST_CASE("normalization and name equality") {
  CHECK(normalize_word({"b", "a", "b", "a"}) == parse_word("x1 x2 x1 x2"));
  CHECK(same_snake_name({"p", "q", "p", "q"}, parse_word("x1x2x1x2")));
  // reversal of x1x2x3x1x3x2... reads x2x3x1x3x2x1 -> x1x2x3x2x1x3
  const auto w = parse_word("x1 x2 x3 x1 x3 x2");
  const SnakeWord rev(w.rbegin(), w.rend());
  CHECK(same_snake_name(w, rev));
  CHECK_FALSE(same_snake_name(w, parse_word("x1 x2 x3 x1 x2 x3")));
  CHECK(same_snake_name_reversed_only(w, normalize_word(rev)) == (normalize_word(rev) != w));
  CHECK_FALSE(same_snake_name_reversed_only(w, w));
}

TEST_CASE("node counts") {
  CHECK(node_counts(parse_word("x1 x2 x1 x3 x2 x3")) == NodeCounts{3, 6});
  CHECK(node_counts(parse_word("x1 x2 x1 x2")) == NodeCounts{2, 4});
  CHECK_THROWS_AS(node_counts(parse_word("x1 x1")), InputError);
  for (int k = 2; k <= 8; ++k) CHECK(node_counts(make_gluing_word(k)) == NodeCounts{k, 2 * k});
}

TEST_CASE("gluing words") {
  CHECK(make_gluing_word(2) == parse_word("x1 x2 x1 x2"));
  CHECK(make_gluing_word(3) == parse_word("x1 x2 x1 x3 x2 x3"));
  CHECK(make_gluing_word(4) == parse_word("x1 x2 x1 x3 x2 x4 x3 x4"));
  CHECK_THROWS_AS(make_gluing_word(1), DomainError);
  for (int k = 2; k <= 12; ++k) CHECK(validate_snake_name(make_gluing_word(k)).empty());
}

TEST_CASE("snake data validation and spectra") {
  auto spec = uniform_spec(parse_word("x1x2x1x2"), 1, 2);
  CHECK_NOTHROW(validate_spec(spec));
  CHECK(uniform_alpha(spec) == Exponent(2));

  spec.spectra["x2"] = {Exponent(3)};
  CHECK_FALSE(uniform_alpha(spec).has_value());
  CHECK(singleton_spectra(spec)->at("x2") == Exponent(3));

  spec.spectra["x2"] = {Exponent(3), Exponent(4)};
  CHECK_FALSE(singleton_spectra(spec).has_value());
  CHECK_THROWS_AS(mdh1_basic_snake(spec), PreconditionError);

  spec.spectra["x2"] = {Exponent(1)};
  CHECK_THROWS_AS(validate_spec(spec), InputError);
  spec.spectra.erase("x2");
  CHECK_THROWS_AS(validate_spec(spec), InputError);
}

TEST_CASE("basic snake closed form") {
  const auto w2 = mdh1_basic_snake(uniform_spec(parse_word("x1x2x1x2"), 1, 2));
  CHECK(w2.eval(1) == 2);
  CHECK(w2.eval(Exponent(3, 2)) == 2);
  CHECK(w2.eval(2) == 0);
  CHECK(w2.at_infinity() == 0);

  const auto w3 = mdh1_basic_snake(uniform_spec(parse_word("x1 x2 x1 x3 x2 x3"), Exponent(3, 2), 3));
  CHECK(w3.eval(1) == 0);
  CHECK(w3.eval(Exponent(3, 2)) == 3);
  CHECK(w3.eval(3) == 0);

  for (int k = 2; k <= 6; ++k) {
    CHECK(mdh1_basic_snake(uniform_spec(make_gluing_word(k), 1, 2)).eval(1) == k);
  }
}

TEST_CASE("enumerated names") {
  // counts 1, 5, 36, 329 checked by brute force over permutations
  std::set<SnakeWord> seen;
  for (int letters = 2; letters <= 5; ++letters) {
    const auto names = enumerate_double_occurrence_names(letters);
    CHECK_FALSE(names.empty());
    for (const auto& w : names) {
      CHECK(validate_snake_name(w).empty());
      const auto [k, m] = node_counts(w);
      CHECK(k == letters);
      CHECK(m == 2 * letters);
      CHECK(m - k >= 1);
      CHECK(seen.insert(w).second);
    }
  }
  CHECK(enumerate_double_occurrence_names(2).size() == 1);
  CHECK(enumerate_double_occurrence_names(3).size() == 5);
  CHECK(enumerate_double_occurrence_names(4).size() == 36);
  CHECK(enumerate_double_occurrence_names(5).size() == 329);
}
