#ifndef GROUPMIN_GF2K_HPP
#define GROUPMIN_GF2K_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "groupmin/dfa.hpp"
#include "groupmin/perm.hpp"
#include "groupmin/perm_group.hpp"

namespace groupmin {

// GF(2^k) as GF(2)[x] modulo an irreducible polynomial of degree k.
// Elements are bit-vectors of length k: the coefficient of x^i sits at
// bit i, so the element sum c_i x^i is the integer sum c_i 2^i. That
// integer also numbers DFA states built on the field.
class Gf2kField {
 public:
  using Elem = std::uint32_t;

  // Uses the hardcoded default modulus for k (1 <= k <= 16).
  explicit Gf2kField(std::size_t k);

  // Custom modulus; checked for irreducibility by trial division.
  Gf2kField(std::size_t k, std::uint32_t modulus);

  std::size_t k() const { return k_; }
  std::size_t size() const { return std::size_t{1} << k_; }
  std::uint32_t modulus() const { return modulus_; }

  // A generator of the cyclic multiplicative group. With the default
  // moduli this is the element x itself.
  Elem mult_generator() const { return generator_; }

  Elem add(Elem a, Elem b) const { return a ^ b; }
  Elem mul(Elem a, Elem b) const;
  Elem pow(Elem a, std::uint64_t e) const;
  Elem inv(Elem a) const;

  // The element x (the monomial), reduced.
  Elem x() const;

  static std::uint32_t default_modulus(std::size_t k);
  static bool is_irreducible(std::uint32_t poly);

 private:
  void init();

  std::size_t k_;
  std::uint32_t modulus_;
  Elem generator_ = 1;
};

// The affine map xi -> alpha xi + beta with alpha nonzero. Obeys the
// composition law t(a,b) t(c,d) = t(ac, bc + d).
struct AffineMap {
  Gf2kField::Elem alpha;
  Gf2kField::Elem beta;
};

AffineMap affine_compose(const Gf2kField& field, const AffineMap& s,
                         const AffineMap& t);

// The affine map as a permutation of the 2^k bit-indexed field elements.
Permutation affine_permutation(const Gf2kField& field, Gf2kField::Elem alpha,
                               Gf2kField::Elem beta);

// AGL(1,2^k), generated by t_{x,0} and t_{1,1}; order 2^k (2^k - 1).
PermGroup agl_group(const Gf2kField& field,
                    std::size_t cap = kDefaultElementCap);

// The subspace block of the translation subgroup: all elements whose
// x^(k-1) coefficient is zero, i.e. the span of 1, x, ..., x^(k-2).
std::vector<Point> translation_block(const Gf2kField& field);

// Closure of the given elements under addition (a GF(2)-subspace).
std::vector<Point> subspace_span(const Gf2kField& field,
                                 const std::vector<Gf2kField::Elem>& basis);

// The three-letter pair whose product is not uniformly boolean minimal:
// a = t_{x,0}, b = t_{1,1}, c = t_{1,0} on the left and the roles of b
// and c swapped on the right; initial 0, finals the translation block.
std::pair<Dfa, Dfa> affine_pair_non_ubm(const Gf2kField& field);

// The two-letter pair a = t_{x,0}, b = t_{1,1} versus a' = t_{x,0}^-1,
// b' = t_{1,1}; uniformly boolean minimal for k = 3 even though the
// double stabilizer projections are imprimitive.
std::pair<Dfa, Dfa> affine_pair_ubm(const Gf2kField& field);

// The classic union witnesses: m-cycle on letter "1" with "0" idle on
// the left, n-cycle on "0" with "1" idle on the right; initial first
// state, final last state.
std::pair<Dfa, Dfa> maslov_pair(std::size_t m, std::size_t n);

// Letter-counting witnesses: cyclic action with initial = final = 0.
std::pair<Dfa, Dfa> yzs_pair(std::size_t m, std::size_t n);

Dfa cyclic_dfa(std::size_t n);
Dfa symmetric_dfa(std::size_t n);
Dfa alternating_dfa(std::size_t n);

}  // namespace groupmin

#endif
