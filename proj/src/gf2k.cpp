#include "groupmin/gf2k.hpp"

#include <array>
#include <numeric>
#include <stdexcept>

#include "groupmin/errors.hpp"

namespace groupmin {

namespace {

int poly_degree(std::uint64_t p) {
  int d = -1;
  while (p) {
    ++d;
    p >>= 1;
  }
  return d;
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
  int dm = poly_degree(m);
  while (a != 0 && poly_degree(a) >= dm)
    a ^= m << (poly_degree(a) - dm);
  return a;
}

// Smallest irreducible modulus per degree for which the element x also
// generates the multiplicative group.
constexpr std::array<std::uint32_t, 17> kDefaultModuli = {
    0,     3,     7,     11,    19,    37,    67,    131,   285,
    529,   1033,  2053,  4179,  8219,  16427, 32771, 65581};

}  // namespace

bool Gf2kField::is_irreducible(std::uint32_t poly) {
  int k = poly_degree(poly);
  if (k < 1) return false;
  if ((poly & 1) == 0) return poly == 2;  // divisible by x
  for (std::uint64_t d = 2; poly_degree(d) <= k / 2; ++d)
    if (poly_mod(poly, d) == 0) return false;
  return true;
}

std::uint32_t Gf2kField::default_modulus(std::size_t k) {
  if (k < 1 || k > 16)
    throw std::invalid_argument("field degree must be in 1..16");
  return kDefaultModuli[k];
}

Gf2kField::Gf2kField(std::size_t k) : k_(k), modulus_(default_modulus(k)) {
  init();
}

Gf2kField::Gf2kField(std::size_t k, std::uint32_t modulus)
    : k_(k), modulus_(modulus) {
  if (k < 1 || k > 16)
    throw std::invalid_argument("field degree must be in 1..16");
  if (poly_degree(modulus) != static_cast<int>(k))
    throw std::invalid_argument("modulus degree does not match field degree");
  if (!is_irreducible(modulus))
    throw std::invalid_argument("modulus polynomial is reducible");
  init();
}

void Gf2kField::init() {
  std::uint64_t group_order = size() - 1;
  std::vector<std::uint64_t> prime_factors;
  std::uint64_t rest = group_order;
  for (std::uint64_t p = 2; p * p <= rest; ++p)
    if (rest % p == 0) {
      prime_factors.push_back(p);
      while (rest % p == 0) rest /= p;
    }
  if (rest > 1) prime_factors.push_back(rest);

  for (Elem cand = 2; cand < size(); ++cand) {
    if (pow(cand, group_order) != 1) continue;
    bool primitive = true;
    for (std::uint64_t p : prime_factors)
      if (pow(cand, group_order / p) == 1) {
        primitive = false;
        break;
      }
    if (primitive) {
      generator_ = cand;
      return;
    }
  }
  generator_ = 1;  // k = 1: the multiplicative group is trivial
}

Gf2kField::Elem Gf2kField::mul(Elem a, Elem b) const {
  std::uint64_t prod = 0;
  std::uint64_t aa = a;
  while (b) {
    if (b & 1) prod ^= aa;
    aa <<= 1;
    b >>= 1;
  }
  return static_cast<Elem>(poly_mod(prod, modulus_));
}

Gf2kField::Elem Gf2kField::pow(Elem a, std::uint64_t e) const {
  Elem result = 1;
  while (e) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Gf2kField::Elem Gf2kField::inv(Elem a) const {
  if (a == 0) throw std::invalid_argument("zero has no inverse");
  return pow(a, size() - 2);
}

Gf2kField::Elem Gf2kField::x() const {
  return static_cast<Elem>(poly_mod(2, modulus_));
}

AffineMap affine_compose(const Gf2kField& field, const AffineMap& s,
                         const AffineMap& t) {
  return AffineMap{field.mul(s.alpha, t.alpha),
                   field.add(field.mul(s.beta, t.alpha), t.beta)};
}

Permutation affine_permutation(const Gf2kField& field, Gf2kField::Elem alpha,
                               Gf2kField::Elem beta) {
  if (alpha == 0)
    throw std::invalid_argument("affine map needs a nonzero alpha");
  std::vector<Point> im(field.size());
  for (Gf2kField::Elem xi = 0; xi < field.size(); ++xi)
    im[xi] = field.add(field.mul(alpha, xi), beta);
  return Permutation(std::move(im));
}

PermGroup agl_group(const Gf2kField& field, std::size_t cap) {
  return PermGroup::from_generators(
      {affine_permutation(field, field.mult_generator(), 0),
       affine_permutation(field, 1, 1)},
      cap);
}

std::vector<Point> translation_block(const Gf2kField& field) {
  std::vector<Point> block;
  std::uint32_t half = 1u << (field.k() - 1);
  for (std::uint32_t e = 0; e < half; ++e) block.push_back(e);
  return block;
}

std::vector<Point> subspace_span(const Gf2kField& field,
                                 const std::vector<Gf2kField::Elem>& basis) {
  std::vector<bool> in_span(field.size(), false);
  in_span[0] = true;
  std::vector<Point> span{0};
  for (Gf2kField::Elem b : basis) {
    if (b >= field.size())
      throw std::invalid_argument("basis element out of range");
    std::vector<Point> next;
    for (Point e : span) {
      Gf2kField::Elem sum = field.add(static_cast<Gf2kField::Elem>(e), b);
      if (!in_span[sum]) {
        in_span[sum] = true;
        next.push_back(sum);
      }
    }
    span.insert(span.end(), next.begin(), next.end());
  }
  std::sort(span.begin(), span.end());
  return span;
}

std::pair<Dfa, Dfa> affine_pair_non_ubm(const Gf2kField& field) {
  Permutation a = affine_permutation(field, field.mult_generator(), 0);
  Permutation b = affine_permutation(field, 1, 1);
  Permutation c = Permutation::identity(field.size());
  std::vector<Point> finals = translation_block(field);
  Dfa left(field.size(), {"a", "b", "c"},
           {Transformation(a), Transformation(b), Transformation(c)}, 0,
           finals);
  Dfa right(field.size(), {"a", "b", "c"},
            {Transformation(a), Transformation(c), Transformation(b)}, 0,
            finals);
  return {std::move(left), std::move(right)};
}

std::pair<Dfa, Dfa> affine_pair_ubm(const Gf2kField& field) {
  Permutation a = affine_permutation(field, field.mult_generator(), 0);
  Permutation b = affine_permutation(field, 1, 1);
  std::vector<Point> finals = translation_block(field);
  Dfa left(field.size(), {"a", "b"}, {Transformation(a), Transformation(b)}, 0,
           finals);
  Dfa right(field.size(), {"a", "b"},
            {Transformation(inverse(a)), Transformation(b)}, 0, finals);
  return {std::move(left), std::move(right)};
}

namespace {

Transformation cycle_all(std::size_t n) {
  std::vector<Point> im(n);
  for (Point q = 0; q < n; ++q) im[q] = static_cast<Point>((q + 1) % n);
  return Transformation(std::move(im));
}

}  // namespace

std::pair<Dfa, Dfa> maslov_pair(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1)
    throw std::invalid_argument("witness family needs m, n >= 1");
  Dfa left(m, {"1", "0"}, {cycle_all(m), Transformation::identity(m)}, 0,
           {static_cast<Point>(m - 1)});
  Dfa right(n, {"1", "0"}, {Transformation::identity(n), cycle_all(n)}, 0,
            {static_cast<Point>(n - 1)});
  return {std::move(left), std::move(right)};
}

std::pair<Dfa, Dfa> yzs_pair(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1)
    throw std::invalid_argument("witness family needs m, n >= 1");
  Dfa left(m, {"a", "b"}, {cycle_all(m), Transformation::identity(m)}, 0, {0});
  Dfa right(n, {"a", "b"}, {Transformation::identity(n), cycle_all(n)}, 0,
            {0});
  return {std::move(left), std::move(right)};
}

Dfa cyclic_dfa(std::size_t n) {
  if (n < 2) throw std::invalid_argument("cyclic family needs n >= 2");
  return Dfa(n, {"a"}, {cycle_all(n)}, 0, {static_cast<Point>(n - 1)});
}

Dfa symmetric_dfa(std::size_t n) {
  if (n < 2) throw std::invalid_argument("symmetric family needs n >= 2");
  std::vector<Point> swap_im(n);
  std::iota(swap_im.begin(), swap_im.end(), 0);
  std::swap(swap_im[0], swap_im[1]);
  return Dfa(n, {"a", "b"}, {Transformation(std::move(swap_im)), cycle_all(n)},
             0, {static_cast<Point>(n - 1)});
}

Dfa alternating_dfa(std::size_t n) {
  if (n < 3) throw std::invalid_argument("alternating family needs n >= 3");
  std::vector<Point> three(n);
  std::iota(three.begin(), three.end(), 0);
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  std::vector<Point> cyc(n);
  std::iota(cyc.begin(), cyc.end(), 0);
  if (n % 2 == 1) {
    for (Point q = 0; q < n; ++q) cyc[q] = static_cast<Point>((q + 1) % n);
  } else {
    // (2,...,n): an (n-1)-cycle, an even permutation for even n.
    for (Point q = 1; q < n; ++q)
      cyc[q] = static_cast<Point>(q + 1 == n ? 1 : q + 1);
  }
  return Dfa(n, {"a", "b"},
             {Transformation(std::move(three)), Transformation(std::move(cyc))},
             0, {static_cast<Point>(n - 1)});
}

}  // namespace groupmin
