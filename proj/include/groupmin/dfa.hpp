#ifndef GROUPMIN_DFA_HPP
#define GROUPMIN_DFA_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "groupmin/perm.hpp"
#include "groupmin/perm_group.hpp"

namespace groupmin {

// Hard limit for the uniform-minimality subset sweep (2^n cognates).
inline constexpr std::size_t kSubsetSweepLimit = 20;

// A complete DFA. States are 0-based; letter order is declaration order.
// Values are immutable after construction and safe to share.
struct Dfa {
  std::size_t state_count = 0;
  std::vector<std::string> alphabet;
  std::vector<Transformation> delta;  // one per letter, aligned with alphabet
  Point initial = 0;
  std::vector<Point> finals;  // sorted, unique

  Dfa(std::size_t states, std::vector<std::string> letters,
      std::vector<Transformation> transitions, Point initial_state,
      std::vector<Point> final_states);

  const Transformation& action(std::size_t letter) const {
    return delta[letter];
  }
  bool is_final(Point q) const;
  std::vector<bool> final_mask() const;

  // Same structure with the final state set replaced by s.
  Dfa cognate(std::vector<Point> s) const;
};

// A partition of the state set; class ids are contiguous from 0 in
// order of first occurrence.
struct StatePartition {
  std::vector<std::uint32_t> class_of;
  std::uint32_t num_classes = 0;

  bool is_discrete() const { return num_classes == class_of.size(); }
  bool same_class(Point p, Point q) const { return class_of[p] == class_of[q]; }
  std::vector<std::vector<Point>> classes() const;
};

std::vector<Point> reachable_states(const Dfa& d);
bool is_accessible(const Dfa& d);
bool is_strongly_connected(const Dfa& d);

bool is_permutation_dfa(const Dfa& d);

// The transition group of a permutation DFA (letters generate it).
PermGroup transition_group(const Dfa& d,
                           std::size_t cap = kDefaultElementCap);

// Coarsest partition refining {X, complement of X} that is stable under
// every letter; two states share a class iff no word separates them
// relative to X.
StatePartition indistinguishability_partition(const Dfa& d,
                                              const std::vector<Point>& x);

bool is_minimal(const Dfa& d);

// Number of indistinguishability classes among reachable states.
std::size_t state_complexity(const Dfa& d);

// Every non-trivial cognate is minimal; checked by sweeping all
// 2^n - 2 subsets in Gray-code order. Requires 2 <= n <= the sweep limit.
bool is_uniformly_minimal_bruteforce(const Dfa& d);

// Uniform minimality via primitivity of the transition group.
bool is_uniformly_minimal_via_primitivity(const Dfa& d,
                                          std::size_t cap = kDefaultElementCap);

// Minimality decided through the transition group: false iff some
// non-trivial block system of the group saturates the final state set.
// Requires an accessible permutation DFA with a non-trivial final set.
bool minimality_via_saturation(const Dfa& d);

// Reusable partition-refinement scratch space for tight sweep loops.
class Refiner {
 public:
  explicit Refiner(const Dfa& d);

  // Refines {X, ~X} to stability; returns the number of classes.
  // Stops early (returning state_count) once the partition is discrete.
  std::size_t refine_count(const std::vector<bool>& in_x);

  // As above but exposes the full partition.
  StatePartition refine(const std::vector<bool>& in_x);

 private:
  std::size_t run(const std::vector<bool>& in_x);

  const Dfa* dfa_;
  std::vector<std::uint32_t> cls_, next_cls_;
  std::vector<std::uint64_t> keys_;
  std::vector<std::uint32_t> order_;
};

}  // namespace groupmin

#endif
