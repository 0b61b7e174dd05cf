#ifndef GROUPMIN_TESTS_ORACLES_HPP
#define GROUPMIN_TESTS_ORACLES_HPP

// Brute-force oracles kept independent of the library implementation
// paths they check: different closure direction, subset enumeration
// instead of union-find, word search instead of partition refinement.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <vector>

#include "groupmin/dfa.hpp"
#include "groupmin/perm.hpp"
#include "groupmin/perm_group.hpp"

namespace groupmin::test_oracles {

// Closure under left multiplication with ordered-set storage (the
// library enumerates by right multiplication into a hash set).
inline std::vector<Permutation> elements_left_mult(
    const std::vector<Permutation>& gens) {
  std::set<Permutation> seen;
  seen.insert(Permutation::identity(gens.front().degree()));
  std::deque<Permutation> queue(seen.begin(), seen.end());
  while (!queue.empty()) {
    Permutation cur = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      Permutation next = compose(g, cur);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return {seen.begin(), seen.end()};
}

// Block test straight from the definition: quantified over all group
// elements, not generators.
inline bool is_block_all_elements(const std::vector<Permutation>& elements,
                                  const std::vector<Point>& b) {
  std::vector<Point> sorted = b;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& g : elements) {
    std::vector<Point> image = apply_to_set(g, sorted);
    std::vector<Point> inter;
    std::set_intersection(image.begin(), image.end(), sorted.begin(),
                          sorted.end(), std::back_inserter(inter));
    if (!inter.empty() && inter != sorted) return false;
  }
  return true;
}

// Every non-trivial block by subset sweep over all elements; degree <= 16.
inline std::vector<std::vector<Point>> all_blocks_subset_sweep(
    const PermGroup& g) {
  std::vector<std::vector<Point>> out;
  std::size_t n = g.degree();
  const auto& elements = g.elements();
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    if ((mask & (mask - 1)) == 0) continue;
    std::vector<Point> b;
    for (Point p = 0; p < n; ++p)
      if (mask & (1u << p)) b.push_back(p);
    if (is_block_all_elements(elements, b)) out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end(),
            [](const std::vector<Point>& a, const std::vector<Point>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return out;
}

inline bool is_primitive_subset_oracle(const PermGroup& g) {
  return is_transitive(g) && all_blocks_subset_sweep(g).empty();
}

// All normal subgroups as element sets: the join closure of the normal
// closures of single elements.
inline std::vector<std::set<Permutation>> all_normal_subgroups(
    const PermGroup& g) {
  std::vector<std::set<Permutation>> subgroups;
  auto add_unique = [&](std::set<Permutation> s) {
    for (const auto& existing : subgroups)
      if (existing == s) return false;
    subgroups.push_back(std::move(s));
    return true;
  };
  for (const auto& e : g.elements()) {
    if (e.is_identity()) continue;
    PermGroup n = normal_closure(g, e);
    add_unique({n.elements().begin(), n.elements().end()});
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::size_t count = subgroups.size();
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = i + 1; j < count; ++j) {
        std::vector<Permutation> both(subgroups[i].begin(), subgroups[i].end());
        both.insert(both.end(), subgroups[j].begin(), subgroups[j].end());
        std::sort(both.begin(), both.end());
        both.erase(std::unique(both.begin(), both.end()), both.end());
        PermGroup joined = PermGroup::from_generators(both, g.element_cap());
        std::set<Permutation> join(joined.elements().begin(),
                                   joined.elements().end());
        if (add_unique(std::move(join))) grew = true;
      }
  }
  return subgroups;
}

// Minimality by explicit word search: two states are distinguishable iff
// a breadth-first search over state pairs reaches a final/non-final pair.
inline bool distinguishable_pair_bfs(const Dfa& d, Point p, Point q) {
  std::vector<bool> in_f(d.state_count, false);
  for (Point f : d.finals) in_f[f] = true;
  std::set<std::pair<Point, Point>> seen{{p, q}};
  std::deque<std::pair<Point, Point>> queue{{p, q}};
  while (!queue.empty()) {
    auto [a, b] = queue.front();
    queue.pop_front();
    if (in_f[a] != in_f[b]) return true;
    for (const auto& t : d.delta) {
      std::pair<Point, Point> next{t.apply(a), t.apply(b)};
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return false;
}

inline bool is_minimal_word_oracle(const Dfa& d) {
  std::vector<Point> reach = reachable_states(d);
  if (reach.size() != d.state_count) return false;
  for (std::size_t i = 0; i < reach.size(); ++i)
    for (std::size_t j = i + 1; j < reach.size(); ++j)
      if (!distinguishable_pair_bfs(d, reach[i], reach[j])) return false;
  return true;
}

inline std::size_t state_complexity_word_oracle(const Dfa& d) {
  std::vector<Point> reach = reachable_states(d);
  std::vector<Point> representatives;
  for (Point q : reach) {
    bool fresh = true;
    for (Point rep : representatives)
      if (!distinguishable_pair_bfs(d, rep, q)) {
        fresh = false;
        break;
      }
    if (fresh) representatives.push_back(q);
  }
  return representatives.size();
}

}  // namespace groupmin::test_oracles

#endif
