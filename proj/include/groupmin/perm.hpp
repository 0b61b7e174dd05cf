#ifndef GROUPMIN_PERM_HPP
#define GROUPMIN_PERM_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace groupmin {

using Point = std::uint32_t;

// A total map of {0..degree-1} into itself, stored as an image array.
// Functions compose left to right: x is sent to (x t) u by t then u.
class Transformation {
 public:
  explicit Transformation(std::vector<Point> images);

  static Transformation identity(std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point apply(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_permutation() const;
  bool is_identity() const;

  friend bool operator==(const Transformation& a, const Transformation& b) {
    return a.images_ == b.images_;
  }
  friend bool operator!=(const Transformation& a, const Transformation& b) {
    return !(a == b);
  }
  friend bool operator<(const Transformation& a, const Transformation& b) {
    return a.images_ < b.images_;
  }

 protected:
  std::vector<Point> images_;
};

// A bijective transformation. Bijectivity is validated at construction.
class Permutation : public Transformation {
 public:
  explicit Permutation(std::vector<Point> images);
  explicit Permutation(const Transformation& t);

  static Permutation identity(std::size_t degree);
};

Transformation compose(const Transformation& p, const Transformation& q);
Permutation compose(const Permutation& p, const Permutation& q);

Permutation inverse(const Permutation& p);

// Least n >= 1 with p^n = identity; the lcm of the cycle lengths.
std::uint64_t element_order(const Permutation& p);

// Image of a point set under a transformation, as a sorted set.
std::vector<Point> apply_to_set(const Transformation& p,
                                const std::vector<Point>& s);

// Parses cycle notation over 1-based points, e.g. "(2,3,4)" or
// "(1,2)(3,4)". "()" denotes the identity. Cycles must be disjoint.
Permutation parse_cycles(const std::string& text, std::size_t degree);

// Canonical cycle notation: 1-based, each cycle starts at its least
// point, cycles ordered by least point, fixed points omitted, identity
// printed as "()".
std::string format_cycles(const Permutation& p);

// Parity of a permutation: true iff it is a product of an even number
// of 2-cycles. Computed as (degree - number of cycles) mod 2.
bool is_even(const Permutation& p);

std::size_t hash_value(const Transformation& t);

struct TransformationHash {
  std::size_t operator()(const Transformation& t) const {
    return hash_value(t);
  }
};
struct PermutationHash {
  std::size_t operator()(const Permutation& p) const { return hash_value(p); }
};

}  // namespace groupmin

#endif
