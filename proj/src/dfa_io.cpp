#include "groupmin/dfa_io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "groupmin/errors.hpp"

namespace groupmin {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::vector<Line> content_lines(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream probe(raw);
    std::string word;
    if (probe >> word) lines.push_back(Line{number, raw});
  }
  return lines;
}

[[noreturn]] void fail(ParseError::Kind kind, std::size_t line,
                       const std::string& msg) {
  throw ParseError(kind, line, msg);
}

// Splits "key: rest" and checks the key.
std::string expect_keyed(const Line& line, const std::string& key) {
  auto colon = line.text.find(':');
  if (colon == std::string::npos)
    fail(ParseError::Kind::Syntax, line.number, "expected '" + key + ": ...'");
  std::istringstream head(line.text.substr(0, colon));
  std::string k1, extra;
  head >> k1;
  if (k1 != key || (head >> extra))
    fail(ParseError::Kind::Syntax, line.number,
         "expected '" + key + ":', found '" + line.text.substr(0, colon) + "'");
  return line.text.substr(colon + 1);
}

std::vector<std::string> words_of(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

std::uint64_t parse_number(const std::string& w, std::size_t line,
                           const std::string& what) {
  if (w.empty() || w.find_first_not_of("0123456789") != std::string::npos)
    fail(ParseError::Kind::Syntax, line, what + " must be a number, got '" + w + "'");
  return std::stoull(w);
}

Point parse_state(const std::string& w, std::size_t n, std::size_t line,
                  const std::string& what) {
  std::uint64_t v = parse_number(w, line, what);
  if (v < 1 || v > n)
    fail(ParseError::Kind::OutOfRange, line,
         what + " " + w + " out of range 1.." + std::to_string(n));
  return static_cast<Point>(v - 1);
}

}  // namespace

Dfa parse_dfa_file(const std::string& text) {
  std::vector<Line> lines = content_lines(text);
  std::size_t at = 0;
  auto next_line = [&]() -> const Line& {
    if (at >= lines.size())
      fail(ParseError::Kind::Syntax, lines.empty() ? 0 : lines.back().number,
           "unexpected end of file");
    return lines[at++];
  };

  const Line& states_line = next_line();
  auto state_words = words_of(expect_keyed(states_line, "states"));
  if (state_words.size() != 1)
    fail(ParseError::Kind::Syntax, states_line.number,
         "states line needs exactly one number");
  std::uint64_t n = parse_number(state_words[0], states_line.number, "state count");
  if (n < 1)
    fail(ParseError::Kind::Semantic, states_line.number,
         "state count must be positive");

  const Line& alpha_line = next_line();
  std::vector<std::string> alphabet = words_of(expect_keyed(alpha_line, "alphabet"));
  std::unordered_map<std::string, std::size_t> letter_index;
  for (std::size_t i = 0; i < alphabet.size(); ++i)
    if (!letter_index.emplace(alphabet[i], i).second)
      fail(ParseError::Kind::Semantic, alpha_line.number,
           "duplicate letter '" + alphabet[i] + "'");

  const Line& init_line = next_line();
  auto init_words = words_of(expect_keyed(init_line, "initial"));
  if (init_words.size() != 1)
    fail(ParseError::Kind::Syntax, init_line.number,
         "initial line needs exactly one state");
  Point initial = parse_state(init_words[0], n, init_line.number, "initial state");

  const Line& final_line = next_line();
  std::vector<Point> finals;
  for (const auto& w : words_of(expect_keyed(final_line, "final")))
    finals.push_back(parse_state(w, n, final_line.number, "final state"));

  std::vector<Transformation> delta(alphabet.size(), Transformation::identity(n));
  std::vector<bool> have(alphabet.size(), false);
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    const Line& line = next_line();
    std::istringstream head(line.text);
    std::string kw, letter;
    head >> kw >> letter;
    if (kw != "trans" || letter.empty())
      fail(ParseError::Kind::Syntax, line.number, "expected 'trans <letter>: ...'");
    if (letter.back() != ':')
      fail(ParseError::Kind::Syntax, line.number, "expected ':' after letter");
    letter.pop_back();
    auto found = letter_index.find(letter);
    if (found == letter_index.end())
      fail(ParseError::Kind::Semantic, line.number,
           "undeclared letter '" + letter + "'");
    if (have[found->second])
      fail(ParseError::Kind::Semantic, line.number,
           "duplicate trans row for letter '" + letter + "'");
    std::vector<std::string> images;
    std::string w;
    while (head >> w) images.push_back(w);
    if (images.size() != n)
      fail(ParseError::Kind::Semantic, line.number,
           "trans row needs " + std::to_string(n) + " images, got " +
               std::to_string(images.size()));
    std::vector<Point> im(n);
    for (std::size_t q = 0; q < n; ++q)
      im[q] = parse_state(images[q], n, line.number, "transition image");
    delta[found->second] = Transformation(std::move(im));
    have[found->second] = true;
  }
  for (std::size_t i = 0; i < alphabet.size(); ++i)
    if (!have[i])
      fail(ParseError::Kind::Semantic,
           lines.empty() ? 0 : lines.back().number,
           "missing trans row for letter '" + alphabet[i] + "'");
  if (at != lines.size())
    fail(ParseError::Kind::Syntax, lines[at].number, "unexpected extra line");

  return Dfa(static_cast<std::size_t>(n), std::move(alphabet), std::move(delta),
             initial, std::move(finals));
}

std::string serialize_dfa(const Dfa& d) {
  std::ostringstream out;
  out << "states: " << d.state_count << '\n';
  out << "alphabet:";
  for (const auto& a : d.alphabet) out << ' ' << a;
  out << '\n';
  out << "initial: " << d.initial + 1 << '\n';
  out << "final:";
  for (Point f : d.finals) out << ' ' << f + 1;
  out << '\n';
  for (std::size_t i = 0; i < d.alphabet.size(); ++i) {
    out << "trans " << d.alphabet[i] << ':';
    for (Point q = 0; q < d.state_count; ++q)
      out << ' ' << d.delta[i].apply(q) + 1;
    out << '\n';
  }
  return out.str();
}

Dfa load_dfa(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_dfa_file(buf.str());
}

void save_dfa(const Dfa& d, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << serialize_dfa(d);
}

}  // namespace groupmin
