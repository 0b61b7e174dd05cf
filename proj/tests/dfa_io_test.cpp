#include <doctest.h>

#include "groupmin/dfa_io.hpp"
#include "groupmin/errors.hpp"
#include "groupmin/examples.hpp"
#include "test_util.hpp"

using namespace groupmin;

TEST_CASE("the altdfa file parses") {
  std::string text =
      "# the A4 example\n"
      "states: 4\n"
      "alphabet: a b\n"
      "initial: 1\n"
      "final: 3 4\n"
      "trans a: 1 3 4 2\n"
      "trans b: 2 1 4 3\n";
  Dfa d = parse_dfa_file(text);
  CHECK(d.state_count == 4);
  CHECK(d.finals == std::vector<Point>{2, 3});
  CHECK(d.initial == 0);
  Dfa expected = examples::altdfa();
  for (std::size_t l = 0; l < 2; ++l)
    CHECK(d.delta[l].images() == expected.delta[l].images());
}

TEST_CASE("serialization is canonical and round-trips") {
  Dfa alt = examples::altdfa();
  std::string text = serialize_dfa(alt);
  CHECK(text ==
        "states: 4\n"
        "alphabet: a b\n"
        "initial: 1\n"
        "final: 3 4\n"
        "trans a: 1 3 4 2\n"
        "trans b: 2 1 4 3\n");
  Dfa back = parse_dfa_file(text);
  CHECK(serialize_dfa(back) == text);

  // Final states come back sorted regardless of input order.
  std::string shuffled =
      "states: 4\nalphabet: a b\ninitial: 1\nfinal: 4 3\n"
      "trans a: 1 3 4 2\ntrans b: 2 1 4 3\n";
  CHECK(serialize_dfa(parse_dfa_file(shuffled)) == text);

  std::string empty_final =
      "states: 2\nalphabet: a\ninitial: 2\nfinal:\ntrans a: 2 1\n";
  Dfa ef = parse_dfa_file(empty_final);
  CHECK(ef.finals.empty());
  CHECK(serialize_dfa(ef) == empty_final);
}

TEST_CASE("round trip on random DFAs") {
  test_util::Rng rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 1 + test_util::rand_index(rng, 8);
    std::size_t k = 1 + test_util::rand_index(rng, 3);
    std::vector<Transformation> delta;
    for (std::size_t l = 0; l < k; ++l)
      delta.push_back(test_util::random_transformation(rng, n));
    std::vector<Point> finals;
    for (Point q = 0; q < n; ++q)
      if (rng() & 1) finals.push_back(q);
    Dfa d(n, test_util::letter_names(k), std::move(delta),
          static_cast<Point>(test_util::rand_index(rng, n)), std::move(finals));
    Dfa back = parse_dfa_file(serialize_dfa(d));
    CHECK(back.state_count == d.state_count);
    CHECK(back.alphabet == d.alphabet);
    CHECK(back.initial == d.initial);
    CHECK(back.finals == d.finals);
    for (std::size_t l = 0; l < k; ++l)
      CHECK(back.delta[l].images() == d.delta[l].images());
  }
}

TEST_CASE("parse errors carry line numbers and kinds") {
  auto kind_at = [](const std::string& text, std::size_t* line) {
    try {
      parse_dfa_file(text);
    } catch (const ParseError& e) {
      *line = e.line();
      return e.kind();
    }
    *line = 0;
    return ParseError::Kind::Syntax;
  };

  std::size_t line = 0;
  // Missing trans row for letter b.
  CHECK(kind_at("states: 2\nalphabet: a b\ninitial: 1\nfinal: 1\n"
                "trans a: 2 1\n",
                &line) == ParseError::Kind::Syntax);

  // Final state out of range.
  CHECK(kind_at("states: 2\nalphabet: a\ninitial: 1\nfinal: 3\n"
                "trans a: 2 1\n",
                &line) == ParseError::Kind::OutOfRange);
  CHECK(line == 4);

  // Transition image out of range.
  CHECK(kind_at("states: 2\nalphabet: a\ninitial: 1\nfinal: 1\n"
                "trans a: 2 5\n",
                &line) == ParseError::Kind::OutOfRange);
  CHECK(line == 5);

  // Wrong image count.
  CHECK(kind_at("states: 3\nalphabet: a\ninitial: 1\nfinal: 1\n"
                "trans a: 2 1\n",
                &line) == ParseError::Kind::Semantic);

  // Undeclared letter.
  CHECK(kind_at("states: 2\nalphabet: a\ninitial: 1\nfinal: 1\n"
                "trans b: 2 1\n",
                &line) == ParseError::Kind::Semantic);

  // Duplicate letters in the alphabet.
  CHECK(kind_at("states: 2\nalphabet: a a\ninitial: 1\nfinal: 1\n"
                "trans a: 2 1\ntrans a: 1 2\n",
                &line) == ParseError::Kind::Semantic);

  // Missing lines entirely.
  CHECK(kind_at("states: 2\n", &line) == ParseError::Kind::Syntax);
}

TEST_CASE("comments and blank lines are ignored") {
  std::string text =
      "# header comment\n"
      "\n"
      "states: 2  # trailing comment\n"
      "alphabet: a\n"
      "\n"
      "initial: 1\n"
      "final: 1\n"
      "trans a: 2 1\n";
  Dfa d = parse_dfa_file(text);
  CHECK(d.state_count == 2);
  CHECK(d.finals == std::vector<Point>{0});
}
