#include "groupmin/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "groupmin/errors.hpp"

namespace groupmin {

Transformation::Transformation(std::vector<Point> images)
    : images_(std::move(images)) {
  if (images_.empty())
    throw std::invalid_argument("transformation degree must be positive");
  for (Point x : images_) {
    if (x >= images_.size())
      throw std::invalid_argument("transformation image out of range");
  }
}

Transformation Transformation::identity(std::size_t degree) {
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), 0);
  return Transformation(std::move(im));
}

bool Transformation::is_permutation() const {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

bool Transformation::is_identity() const {
  for (Point x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

Permutation::Permutation(std::vector<Point> images)
    : Transformation(std::move(images)) {
  if (!is_permutation())
    throw std::invalid_argument("image array is not a bijection");
}

Permutation::Permutation(const Transformation& t) : Transformation(t) {
  if (!is_permutation())
    throw std::invalid_argument("transformation is not a bijection");
}

Permutation Permutation::identity(std::size_t degree) {
  return Permutation(Transformation::identity(degree));
}

Transformation compose(const Transformation& p, const Transformation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<Point> im(p.degree());
  for (Point x = 0; x < p.degree(); ++x) im[x] = q.apply(p.apply(x));
  return Transformation(std::move(im));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  return Permutation(compose(static_cast<const Transformation&>(p),
                             static_cast<const Transformation&>(q)));
}

Permutation inverse(const Permutation& p) {
  std::vector<Point> im(p.degree());
  for (Point x = 0; x < p.degree(); ++x) im[p.apply(x)] = x;
  return Permutation(std::move(im));
}

namespace {

std::uint64_t lcm_checked(std::uint64_t a, std::uint64_t b) {
  std::uint64_t g = std::gcd(a, b);
  std::uint64_t q = a / g;
  if (b != 0 && q > UINT64_MAX / b)
    throw std::overflow_error("element order overflows 64 bits");
  return q * b;
}

// Cycle decomposition as lists of points, each cycle starting at its
// least point, cycles ordered by least point. Fixed points included
// only when include_fixed is set.
std::vector<std::vector<Point>> cycles_of(const Permutation& p,
                                          bool include_fixed) {
  std::vector<std::vector<Point>> cycles;
  std::vector<bool> seen(p.degree(), false);
  for (Point start = 0; start < p.degree(); ++start) {
    if (seen[start]) continue;
    std::vector<Point> cyc;
    Point x = start;
    do {
      cyc.push_back(x);
      seen[x] = true;
      x = p.apply(x);
    } while (x != start);
    if (cyc.size() > 1 || include_fixed) cycles.push_back(std::move(cyc));
  }
  return cycles;
}

}  // namespace

std::uint64_t element_order(const Permutation& p) {
  std::uint64_t order = 1;
  for (const auto& cyc : cycles_of(p, false))
    order = lcm_checked(order, cyc.size());
  return order;
}

std::vector<Point> apply_to_set(const Transformation& p,
                                const std::vector<Point>& s) {
  std::vector<Point> out;
  out.reserve(s.size());
  for (Point x : s) {
    if (x >= p.degree())
      throw std::invalid_argument("apply_to_set: point out of range");
    out.push_back(p.apply(x));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Permutation parse_cycles(const std::string& text, std::size_t degree) {
  if (degree == 0) throw std::invalid_argument("degree must be positive");
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), 0);
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto syntax = [&](const std::string& msg) {
    return ParseError(ParseError::Kind::Syntax, 0,
                      "cycle notation: " + msg + " at offset " +
                          std::to_string(i));
  };
  if (text.empty()) throw syntax("empty input");
  while (i < text.size()) {
    if (text[i] != '(') throw syntax("expected '('");
    ++i;
    std::vector<Point> cyc;
    if (i < text.size() && text[i] == ')') {
      ++i;  // empty cycle: identity contribution
      continue;
    }
    while (true) {
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw syntax("expected point number");
      std::uint64_t val = 0;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        val = val * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (val > degree) break;
        ++i;
      }
      if (val < 1 || val > degree)
        throw ParseError(ParseError::Kind::OutOfRange, 0,
                         "cycle notation: point " + std::to_string(val) +
                             " out of range 1.." + std::to_string(degree));
      Point pt = static_cast<Point>(val - 1);
      if (used[pt])
        throw ParseError(ParseError::Kind::Repeated, 0,
                         "cycle notation: point " + std::to_string(val) +
                             " repeated; cycles must be disjoint");
      used[pt] = true;
      cyc.push_back(pt);
      if (i >= text.size()) throw syntax("unterminated cycle");
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (text[i] == ')') {
        ++i;
        break;
      }
      throw syntax("expected ',' or ')'");
    }
    for (std::size_t j = 0; j < cyc.size(); ++j)
      im[cyc[j]] = cyc[(j + 1) % cyc.size()];
  }
  return Permutation(std::move(im));
}

std::string format_cycles(const Permutation& p) {
  auto cycles = cycles_of(p, false);
  if (cycles.empty()) return "()";
  std::ostringstream out;
  for (const auto& cyc : cycles) {
    out << '(';
    for (std::size_t j = 0; j < cyc.size(); ++j) {
      if (j) out << ',';
      out << cyc[j] + 1;
    }
    out << ')';
  }
  return out.str();
}

bool is_even(const Permutation& p) {
  std::size_t num_cycles = cycles_of(p, true).size();
  return ((p.degree() - num_cycles) % 2) == 0;
}

std::size_t hash_value(const Transformation& t) {
  std::size_t h = 1469598103934665603ull;
  for (Point x : t.images()) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace groupmin
