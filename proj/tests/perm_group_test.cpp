#include <doctest.h>

#include <algorithm>

#include "groupmin/errors.hpp"
#include "groupmin/perm_group.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace groupmin;
namespace oracles = groupmin::test_oracles;

namespace {

PermGroup gens(std::initializer_list<const char*> cycles, std::size_t degree,
               std::size_t cap = kDefaultElementCap) {
  std::vector<Permutation> list;
  for (const char* c : cycles) list.push_back(parse_cycles(c, degree));
  return PermGroup::from_generators(std::move(list), cap);
}

}  // namespace

TEST_CASE("enumeration matches an independent closure and known orders") {
  PermGroup s5 = gens({"(1,2)", "(1,2,3,4,5)"}, 5);
  CHECK(s5.order() == 120);
  auto oracle = oracles::elements_left_mult(s5.generators());
  CHECK(oracle.size() == 120);
  for (const auto& e : oracle) CHECK(s5.contains(e));

  PermGroup a4 = gens({"(2,3,4)", "(1,2)(3,4)"}, 4);
  CHECK(a4.order() == 12);

  CHECK(PermGroup::trivial(3).order() == 1);
}

TEST_CASE("element sets are closed under composition and inverse") {
  test_util::Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 2 + test_util::rand_index(rng, 4);
    PermGroup g = PermGroup::from_generators(
        {test_util::random_permutation(rng, n),
         test_util::random_permutation(rng, n)});
    const auto& elems = g.elements();
    CHECK(std::count_if(elems.begin(), elems.end(), [](const Permutation& p) {
            return p.is_identity();
          }) == 1);
    for (std::size_t i = 0; i < std::min<std::size_t>(elems.size(), 8); ++i) {
      CHECK(g.contains(inverse(elems[i])));
      for (std::size_t j = 0; j < std::min<std::size_t>(elems.size(), 8); ++j)
        CHECK(g.contains(compose(elems[i], elems[j])));
    }
  }
}

TEST_CASE("enumeration cap is an explicit error") {
  CHECK_THROWS_AS(gens({"(1,2)", "(1,2,3,4,5)"}, 5, 100).elements(),
                  CapExceededError);
  CHECK_THROWS_AS(PermGroup::from_generators({parse_cycles("(1,2)", 2),
                                              parse_cycles("(1,2,3)", 3)}),
                  std::invalid_argument);
}

TEST_CASE("orbits") {
  BlockSystem two = orbits(gens({"(1,2,3)", "(4,5,6)"}, 6));
  CHECK(two.classes == std::vector<std::vector<Point>>{{0, 1, 2}, {3, 4, 5}});
  CHECK(orbits(gens({"(1,2,3,4,5,6)"}, 6)).num_classes() == 1);
  CHECK(orbits(PermGroup::trivial(2)).classes ==
        std::vector<std::vector<Point>>{{0}, {1}});
}

TEST_CASE("transitivity of the running examples") {
  CHECK(is_transitive(gens({"(1,2,3,4,5,6)"}, 6)));
  CHECK_FALSE(is_transitive(gens({"(1,2,3)", "(4,5,6)"}, 6)));
  CHECK(is_transitive(gens({"(2,4,6)", "(1,5)(2,4)", "(1,4,5,2)(3,6)"}, 6)));
}

TEST_CASE("k-transitivity") {
  PermGroup a4 = gens({"(2,3,4)", "(1,2)(3,4)"}, 4);
  CHECK(is_k_transitive(a4, 2));
  CHECK_FALSE(is_k_transitive(gens({"(1,2,3,4,5)"}, 5), 2));
  CHECK(is_k_transitive(gens({"(1,2,3,4,5,6)"}, 6), 1));
  CHECK_THROWS_AS(is_k_transitive(a4, 5), std::invalid_argument);
}

TEST_CASE("minimal blocks of the cyclic groups") {
  PermGroup c6 = gens({"(1,2,3,4,5,6)"}, 6);
  CHECK(minimal_block_containing(c6, 0, 3) == std::vector<Point>{0, 3});
  CHECK(minimal_block_containing(c6, 0, 2) == std::vector<Point>{0, 2, 4});
  PermGroup c5 = gens({"(1,2,3,4,5)"}, 5);
  CHECK(minimal_block_containing(c5, 0, 1) ==
        std::vector<Point>{0, 1, 2, 3, 4});
  CHECK_THROWS_AS(minimal_block_containing(gens({"(1,2,3)", "(4,5,6)"}, 6), 0, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(minimal_block_containing(c5, 2, 2), std::invalid_argument);
}

TEST_CASE("a minimal block really is a block") {
  test_util::Rng rng(22);
  int checked = 0;
  while (checked < 40) {
    std::size_t n = 3 + test_util::rand_index(rng, 5);
    PermGroup g = PermGroup::from_generators(
        {test_util::random_permutation(rng, n),
         test_util::random_permutation(rng, n)});
    if (!is_transitive(g)) continue;
    ++checked;
    Point y = 1 + static_cast<Point>(test_util::rand_index(rng, n - 1));
    std::vector<Point> block = minimal_block_containing(g, 0, y);
    for (const auto& gen : g.generators()) {
      std::vector<Point> image = apply_to_set(gen, block);
      std::vector<Point> inter;
      std::set_intersection(image.begin(), image.end(), block.begin(),
                            block.end(), std::back_inserter(inter));
      CHECK((inter.empty() || inter == block));
    }
  }
}

TEST_CASE("primitivity on the worked examples") {
  CHECK(is_primitive(gens({"(1,2,3,4,5)"}, 5)));
  CHECK_FALSE(is_primitive(gens({"(1,2,3,4,5,6)"}, 6)));
  CHECK(is_primitive(gens({"(1,2,3,4,6)", "(1,2)(3,4)(5,6)"}, 6)));
  CHECK_FALSE(is_primitive(gens({"(2,4,6)", "(1,5)(2,4)", "(1,4,5,2)(3,6)"}, 6)));
  // The trivial subgroup of S_2: intransitive, so imprimitive by definition.
  CHECK_FALSE(is_primitive(PermGroup::trivial(2)));
}

TEST_CASE("primitivity agrees with the subset brute force") {
  test_util::Rng rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 2 + test_util::rand_index(rng, 7);
    std::size_t count = 1 + test_util::rand_index(rng, 2);
    std::vector<Permutation> list;
    for (std::size_t i = 0; i < count; ++i)
      list.push_back(test_util::random_permutation(rng, n));
    PermGroup g = PermGroup::from_generators(std::move(list));
    CHECK(is_primitive(g) == oracles::is_primitive_subset_oracle(g));
  }
}

TEST_CASE("every transitive group of prime degree is primitive") {
  test_util::Rng rng(24);
  for (std::size_t degree : {2u, 3u, 5u, 7u}) {
    for (int trial = 0; trial < 30; ++trial) {
      std::size_t count = 1 + test_util::rand_index(rng, 3);
      std::vector<Permutation> list;
      for (std::size_t i = 0; i < count; ++i)
        list.push_back(test_util::random_permutation(rng, degree));
      PermGroup g = PermGroup::from_generators(std::move(list));
      if (is_transitive(g)) CHECK(is_primitive(g));
    }
  }
}

TEST_CASE("2-transitive implies primitive implies transitive") {
  test_util::Rng rng(25);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 2 + test_util::rand_index(rng, 6);
    PermGroup g = PermGroup::from_generators(
        {test_util::random_permutation(rng, n),
         test_util::random_permutation(rng, n)});
    if (is_k_transitive(g, std::min<std::size_t>(2, n)))
      CHECK((n < 2 || is_primitive(g)));
    if (is_primitive(g)) CHECK(is_transitive(g));
  }
}

TEST_CASE("exhaustive blocks of the order-six cycle") {
  std::vector<std::vector<Point>> expected = {
      {0, 3}, {1, 4}, {2, 5}, {0, 2, 4}, {1, 3, 5}};
  PermGroup c6 = gens({"(1,2,3,4,5,6)"}, 6);
  CHECK(all_nontrivial_blocks(c6) == expected);
  CHECK(oracles::all_blocks_subset_sweep(c6) == expected);
  CHECK_THROWS_AS(all_nontrivial_blocks(PermGroup::trivial(13)),
                  LimitExceededError);
}

TEST_CASE("setwise stabilizers") {
  PermGroup s2 = gens({"(1,2)"}, 2);
  CHECK(setwise_stabilizer(s2, {0, 1}).order() == 2);
  PermGroup a4 = gens({"(2,3,4)", "(1,2)(3,4)"}, 4);
  CHECK(setwise_stabilizer(a4, {0}).order() == 3);
  CHECK(setwise_stabilizer(a4, {0, 1, 2, 3}).order() == 12);
}

TEST_CASE("normal closures") {
  PermGroup s5 = gens({"(1,2)", "(1,2,3,4,5)"}, 5);
  PermGroup closure = normal_closure(s5, parse_cycles("(1,2,3)", 5));
  CHECK(closure.order() == 60);
  for (const auto& e : closure.elements()) CHECK(is_even(e));

  CHECK(normal_closure(s5, Permutation::identity(5)).order() == 1);

  PermGroup c6 = gens({"(1,2,3,4,5,6)"}, 6);
  Permutation g2 = compose(c6.generators()[0], c6.generators()[0]);
  CHECK(normal_closure(c6, g2).order() == 3);

  CHECK_THROWS_AS(normal_closure(c6, parse_cycles("(1,2)", 6)),
                  std::invalid_argument);
}

TEST_CASE("simplicity") {
  PermGroup a5 = gens({"(1,2,3)", "(1,2,3,4,5)"}, 5);
  CHECK(a5.order() == 60);
  CHECK(is_simple(a5));
  PermGroup a4 = gens({"(2,3,4)", "(1,2)(3,4)"}, 4);
  CHECK_FALSE(is_simple(a4));
  CHECK(normal_closure(a4, parse_cycles("(1,2)(3,4)", 4)).order() == 4);
  CHECK(is_simple(gens({"(1,2,3,4,5)"}, 5)));
}

TEST_CASE("minimal normal subgroups and socle") {
  PermGroup s5 = gens({"(1,2)", "(1,2,3,4,5)"}, 5);
  auto mins = minimal_normal_subgroups(s5);
  REQUIRE(mins.size() == 1);
  CHECK(mins[0].order() == 60);
  CHECK(socle(s5).order() == 60);

  PermGroup a4 = gens({"(2,3,4)", "(1,2)(3,4)"}, 4);
  auto mins_a4 = minimal_normal_subgroups(a4);
  REQUIRE(mins_a4.size() == 1);
  CHECK(mins_a4[0].order() == 4);

  PermGroup a5 = gens({"(1,2,3)", "(1,2,3,4,5)"}, 5);
  auto mins_a5 = minimal_normal_subgroups(a5);
  REQUIRE(mins_a5.size() == 1);
  CHECK(same_element_set(mins_a5[0], a5));
  CHECK(same_element_set(socle(a5), a5));
}

TEST_CASE("minimal normal subgroups against the full lattice") {
  test_util::Rng rng(26);
  int done = 0;
  while (done < 15) {
    std::size_t n = 3 + test_util::rand_index(rng, 4);
    PermGroup g = PermGroup::from_generators(
        {test_util::random_permutation(rng, n),
         test_util::random_permutation(rng, n)});
    if (g.order() > 200 || g.order() < 2) continue;
    ++done;
    auto lattice = oracles::all_normal_subgroups(g);
    auto mins = minimal_normal_subgroups(g);
    // Each reported subgroup appears in the lattice and is minimal there.
    for (const auto& m : mins) {
      std::set<Permutation> m_set(m.elements().begin(), m.elements().end());
      bool in_lattice = false;
      for (const auto& candidate : lattice)
        if (candidate == m_set) in_lattice = true;
      CHECK(in_lattice);
      for (const auto& candidate : lattice) {
        if (candidate.size() <= 1 || candidate.size() >= m_set.size()) continue;
        CHECK_FALSE(std::includes(m_set.begin(), m_set.end(),
                                  candidate.begin(), candidate.end()));
      }
    }
    // Every non-trivial lattice member contains some minimal subgroup.
    for (const auto& candidate : lattice) {
      if (candidate.size() <= 1) continue;
      bool contains_min = false;
      for (const auto& m : mins) {
        std::set<Permutation> m_set(m.elements().begin(), m.elements().end());
        if (std::includes(candidate.begin(), candidate.end(), m_set.begin(),
                          m_set.end()))
          contains_min = true;
      }
      CHECK(contains_min);
    }
  }
}

TEST_CASE("socle is normal") {
  test_util::Rng rng(27);
  int done = 0;
  while (done < 15) {
    std::size_t n = 3 + test_util::rand_index(rng, 4);
    PermGroup g = PermGroup::from_generators(
        {test_util::random_permutation(rng, n),
         test_util::random_permutation(rng, n)});
    if (g.order() > 400 || g.order() < 2) continue;
    ++done;
    PermGroup s = socle(g);
    for (const auto& gen : g.generators())
      for (const auto& e : s.elements())
        CHECK(s.contains(compose(compose(gen, e), inverse(gen))));
  }
}

TEST_CASE("abelian detection") {
  CHECK(is_abelian(gens({"(1,2,3,4,5)"}, 5)));
  CHECK_FALSE(is_abelian(gens({"(2,3,4)", "(1,2)(3,4)"}, 4)));
  CHECK(is_abelian(PermGroup::trivial(4)));
}

TEST_CASE("symmetric or alternating classification") {
  CHECK(classify_sym_or_alt(gens({"(2,3,4)", "(1,2)(3,4)"}, 4)) ==
        SymOrAlt::Alternating);
  CHECK(classify_sym_or_alt(gens({"(1,2)", "(1,2,3,4,5)"}, 5)) ==
        SymOrAlt::Symmetric);
  CHECK(classify_sym_or_alt(gens({"(1,2,3,4,5,6)"}, 6)) == SymOrAlt::Neither);
  CHECK(classify_sym_or_alt(gens({"(1,2)"}, 2)) == SymOrAlt::Symmetric);
}

TEST_CASE("groups print as generator lists") {
  CHECK(gens({"(2,3,4)", "(1,2)(3,4)"}, 4).to_string() ==
        "<(2,3,4), (1,2)(3,4)>");
  CHECK(PermGroup::trivial(2).to_string() == "<()>");
}
