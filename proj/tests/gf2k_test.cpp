#include <doctest.h>

#include <algorithm>

#include "groupmin/boolean_ops.hpp"
#include "groupmin/errors.hpp"
#include "groupmin/gf2k.hpp"
#include "test_util.hpp"

using namespace groupmin;

TEST_CASE("field arithmetic in F_8 matches the worked example") {
  Gf2kField f(3);
  CHECK(f.modulus() == 0b1011);  // x^3 + x + 1
  Gf2kField::Elem x = f.x();
  CHECK(x == 2);
  CHECK(f.mult_generator() == x);
  CHECK(f.pow(x, 3) == 0b011);  // x^3 = x + 1
  CHECK(f.pow(x, 4) == 0b110);  // x^4 = x^2 + x
  CHECK(f.pow(x, 5) == 0b111);
  CHECK(f.pow(x, 6) == 0b101);
  CHECK(f.pow(x, 7) == 1);
  for (Gf2kField::Elem a = 0; a < 8; ++a) CHECK(f.add(a, a) == 0);
  CHECK(f.add(0b111, 0b101) == 0b010);  // (x^2+x+1) + (x^2+1) = x
}

TEST_CASE("default moduli are irreducible for every supported degree") {
  for (std::size_t k = 1; k <= 16; ++k) {
    std::uint32_t m = Gf2kField::default_modulus(k);
    CHECK(Gf2kField::is_irreducible(m));
    Gf2kField f(k);
    std::uint64_t order = f.size() - 1;
    CHECK(f.pow(f.mult_generator(), order) == 1);
  }
  CHECK_THROWS_AS(Gf2kField(17), std::invalid_argument);
  CHECK_THROWS_AS(Gf2kField(3, 0b1111), std::invalid_argument);  // reducible
  CHECK_NOTHROW(Gf2kField(3, 0b1101));  // x^3 + x^2 + 1
}

TEST_CASE("field axioms at desk scale") {
  for (std::size_t k = 1; k <= 4; ++k) {
    Gf2kField f(k);
    std::size_t n = f.size();
    for (Gf2kField::Elem a = 0; a < n; ++a) {
      for (Gf2kField::Elem b = 0; b < n; ++b) {
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (Gf2kField::Elem c = 0; c < n; ++c) {
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
    }
  }
}

TEST_CASE("affine permutations have the expected cycle forms") {
  Gf2kField f(3);
  Permutation a = affine_permutation(f, f.x(), 0);
  // The 7-cycle (x, x^2, x^3=x+1, x^4=x^2+x, x^5, x^6, x^7=1) on the
  // nonzero elements, written over 1-based bit-pattern state names.
  CHECK(format_cycles(a) == "(2,3,5,4,7,8,6)");
  CHECK(a.apply(0) == 0);
  CHECK(a.apply(2) == 4);  // x * x = x^2

  Permutation b = affine_permutation(f, 1, 1);
  CHECK(format_cycles(b) == "(1,2)(3,4)(5,6)(7,8)");
  CHECK(affine_permutation(f, 1, 0).is_identity());
  CHECK_THROWS_AS(affine_permutation(f, 0, 1), std::invalid_argument);
}

TEST_CASE("affine composition law matches permutation composition") {
  for (std::size_t k = 1; k <= 4; ++k) {
    Gf2kField f(k);
    for (Gf2kField::Elem alpha = 1; alpha < f.size(); ++alpha)
      for (Gf2kField::Elem gamma = 1; gamma < f.size(); ++gamma)
        for (Gf2kField::Elem beta = 0; beta < f.size(); ++beta) {
          Gf2kField::Elem xi = f.add(beta, gamma);  // arbitrary second shift
          AffineMap lhs = affine_compose(f, {alpha, beta}, {gamma, xi});
          CHECK(compose(affine_permutation(f, alpha, beta),
                        affine_permutation(f, gamma, xi)) ==
                affine_permutation(f, lhs.alpha, lhs.beta));
        }
  }
}

TEST_CASE("the affine group") {
  CHECK(agl_group(Gf2kField(3)).order() == 56);
  CHECK(agl_group(Gf2kField(1)).order() == 2);
  PermGroup agl4 = agl_group(Gf2kField(2));
  CHECK(agl4.order() == 12);
  CHECK(classify_sym_or_alt(agl4) == SymOrAlt::Alternating);

  // Oracle: the element set is exactly every affine map.
  Gf2kField f(3);
  std::vector<Permutation> all_maps;
  for (Gf2kField::Elem alpha = 1; alpha < 8; ++alpha)
    for (Gf2kField::Elem beta = 0; beta < 8; ++beta)
      all_maps.push_back(affine_permutation(f, alpha, beta));
  PermGroup oracle = PermGroup::from_elements(std::move(all_maps));
  CHECK(same_element_set(agl_group(f), oracle));

  for (std::size_t k = 1; k <= 4; ++k) {
    PermGroup g = agl_group(Gf2kField(k));
    CHECK(g.order() == (1u << k) * ((1u << k) - 1));
    if (k >= 1) CHECK(is_k_transitive(g, std::min<std::size_t>(2, 1u << k)));
  }
}

TEST_CASE("the translation block") {
  Gf2kField f(3);
  std::vector<Point> b = translation_block(f);
  CHECK(b == std::vector<Point>{0, 1, 2, 3});  // {0, 1, x, x+1}
  CHECK(translation_block(Gf2kField(1)) == std::vector<Point>{0});

  for (std::size_t k = 1; k <= 4; ++k) {
    Gf2kField field(k);
    std::vector<Point> block = translation_block(field);
    CHECK(block.size() == (1u << (k - 1)));
    for (Gf2kField::Elem beta = 0; beta < field.size(); ++beta) {
      std::vector<Point> image =
          apply_to_set(affine_permutation(field, 1, beta), block);
      std::vector<Point> inter;
      std::set_intersection(image.begin(), image.end(), block.begin(),
                            block.end(), std::back_inserter(inter));
      CHECK((inter.empty() || inter == block));
    }
  }

  CHECK(subspace_span(Gf2kField(3), {1, 2}) == std::vector<Point>{0, 1, 2, 3});
  CHECK(subspace_span(Gf2kField(3), {}) == std::vector<Point>{0});
}

TEST_CASE("affine pair constructions") {
  Gf2kField f(3);
  auto [a, ap] = affine_pair_non_ubm(f);
  CHECK(a.alphabet == std::vector<std::string>{"a", "b", "c"});
  CHECK(a.state_count == 8);
  CHECK(a.initial == 0);
  CHECK(a.finals == translation_block(f));
  CHECK(a.delta[0].images() == ap.delta[0].images());
  CHECK(a.delta[1].images() == ap.delta[2].images());
  CHECK(a.delta[2].images() == ap.delta[1].images());
  CHECK(Transformation(a.delta[2]).is_identity());

  auto [ba, bap] = affine_pair_ubm(f);
  CHECK(ba.alphabet == std::vector<std::string>{"a", "b"});
  CHECK(Permutation(bap.delta[0]) == inverse(Permutation(ba.delta[0])));
  CHECK(ba.delta[1].images() == bap.delta[1].images());
}

TEST_CASE("witness families") {
  auto [m, n] = maslov_pair(3, 4);
  CHECK(m.alphabet == std::vector<std::string>{"1", "0"});
  CHECK(m.state_count == 3);
  CHECK(n.state_count == 4);
  CHECK(m.initial == 0);
  CHECK(m.finals == std::vector<Point>{2});
  CHECK(n.finals == std::vector<Point>{3});
  CHECK(Transformation(m.delta[1]).is_identity());
  CHECK(Transformation(n.delta[0]).is_identity());
  CHECK(is_accessible(direct_product(m, n).packed));

  auto [y, z] = yzs_pair(3, 4);
  CHECK(y.initial == 0);
  CHECK(y.finals == std::vector<Point>{0});
  CHECK(z.finals == std::vector<Point>{0});
  CHECK(is_minimal(y));
  CHECK(is_minimal(z));

  CHECK_THROWS_AS(maslov_pair(0, 3), std::invalid_argument);
}

TEST_CASE("cyclic, symmetric and alternating families") {
  CHECK(is_uniformly_minimal_via_primitivity(cyclic_dfa(5)));
  CHECK_FALSE(is_uniformly_minimal_via_primitivity(cyclic_dfa(6)));
  CHECK_THROWS_AS(cyclic_dfa(1), std::invalid_argument);

  for (std::size_t n = 2; n <= 7; ++n) {
    Dfa s = symmetric_dfa(n);
    CHECK(classify_sym_or_alt(transition_group(s)) == SymOrAlt::Symmetric);
    CHECK(is_uniformly_minimal_via_primitivity(s));
  }
  for (std::size_t n = 3; n <= 8; ++n) {
    Dfa alt = alternating_dfa(n);
    CHECK(classify_sym_or_alt(transition_group(alt)) == SymOrAlt::Alternating);
  }
  CHECK_THROWS_AS(alternating_dfa(2), std::invalid_argument);
}

TEST_CASE("every element of the non-UBM product group is balanced") {
  for (std::size_t k = 1; k <= 3; ++k) {
    Gf2kField f(k);
    auto [a, ap] = affine_pair_non_ubm(f);
    ProductGroup gx = product_group(a, ap);
    CHECK(gx.order() == (1u << k) * (1u << k) * ((1u << k) - 1));
    for (const auto& e : gx.elements()) {
      Gf2kField::Elem alpha_left = f.add(e.left.apply(1), e.left.apply(0));
      Gf2kField::Elem alpha_right = f.add(e.right.apply(1), e.right.apply(0));
      CHECK(alpha_left == alpha_right);
    }
  }
}

TEST_CASE("the socle of the affine group is the abelian translation subgroup") {
  Gf2kField f(3);
  PermGroup s = socle(agl_group(f));
  CHECK(s.order() == 8);
  CHECK(is_abelian(s));
  std::vector<Permutation> translations;
  for (Gf2kField::Elem beta = 0; beta < 8; ++beta)
    translations.push_back(affine_permutation(f, 1, beta));
  CHECK(same_element_set(s, PermGroup::from_elements(std::move(translations))));
}

TEST_CASE("carry-less products reduce by the modulus rule") {
  Gf2kField f(3);
  CHECK(f.mul(f.x(), f.pow(f.x(), 3)) == f.pow(f.x(), 4));
  CHECK(f.mul(0b011, 0b011) == f.pow(f.x(), 6));  // (x+1)^2 = x^2+1
}

TEST_CASE("degenerate one-state witness families") {
  auto [m1, n1] = maslov_pair(1, 2);
  CHECK(m1.state_count == 1);
  CHECK(m1.finals == std::vector<Point>{0});
  CHECK(is_minimal(m1));
}
