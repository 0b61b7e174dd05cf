#ifndef GROUPMIN_PERM_GROUP_HPP
#define GROUPMIN_PERM_GROUP_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "groupmin/perm.hpp"

namespace groupmin {

inline constexpr std::size_t kDefaultElementCap = 5'000'000;

// A finite permutation group given by generators, with the element set
// enumerated on demand (breadth-first closure under right multiplication
// by the generators). Exceeding the element cap is an explicit error,
// never silent truncation.
//
// Enumeration mutates internal state once; after it completes the value
// is immutable and safe to share. Callers enumerate before sharing
// across threads.
class PermGroup {
 public:
  static PermGroup from_generators(std::vector<Permutation> generators,
                                   std::size_t cap = kDefaultElementCap);

  // Wraps an explicit element set (assumed closed; validated cheaply).
  // A small generating subset is extracted greedily so orbit-style
  // computations stay fast.
  static PermGroup from_elements(std::vector<Permutation> elements,
                                 std::size_t cap = kDefaultElementCap);

  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const { return degree_; }
  std::size_t element_cap() const { return cap_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  bool enumerated() const { return enumerated_; }
  // Triggers enumeration on first use; throws CapExceededError.
  const std::vector<Permutation>& elements() const;
  std::size_t order() const { return elements().size(); }
  bool contains(const Permutation& p) const;

  // Generator list in cycle notation, e.g. "<(2,3,4), (1,2)(3,4)>".
  std::string to_string() const;

 private:
  PermGroup() = default;

  std::size_t degree_ = 0;
  std::size_t cap_ = kDefaultElementCap;
  std::vector<Permutation> generators_;
  mutable std::vector<Permutation> elements_;
  mutable bool enumerated_ = false;
};

bool same_element_set(const PermGroup& a, const PermGroup& b);

// A partition of {0..degree-1} into the classes of a G-congruence.
// Classes are sorted internally and ordered by least element.
struct BlockSystem {
  std::size_t degree = 0;
  std::vector<std::vector<Point>> classes;

  std::size_t num_classes() const { return classes.size(); }
  bool is_trivial() const {
    return classes.size() == 1 || classes.size() == degree;
  }
};

// Orbit partition of the natural action; classes ordered by least point.
BlockSystem orbits(const PermGroup& g);

std::vector<Point> orbit_of(const PermGroup& g, Point x);

bool is_transitive(const PermGroup& g);

// True iff the orbit of one fixed distinct k-tuple has size
// degree * (degree-1) * ... * (degree-k+1).
bool is_k_transitive(const PermGroup& g, std::size_t k);

// The finest G-congruence merging x and y (Atkinson-style union-find
// refinement). Requires a transitive group and distinct seed points.
BlockSystem minimal_congruence(const PermGroup& g, Point x, Point y);

// The smallest block containing both seed points: the class of the
// minimal congruence that contains them.
std::vector<Point> minimal_block_containing(const PermGroup& g, Point x,
                                            Point y);

// Transitive with only trivial blocks. Intransitive groups are reported
// imprimitive rather than rejected.
bool is_primitive(const PermGroup& g);

// Every non-trivial block, found by sweeping all 2^degree point subsets
// and closing each under generator images. Degrees above the limit are
// refused (LimitExceededError). Result ordered by (size, contents).
std::vector<std::vector<Point>> all_nontrivial_blocks(
    const PermGroup& g, std::size_t degree_limit = 12);

// Subgroup { g : Sg = S }, with its own element set.
PermGroup setwise_stabilizer(const PermGroup& g, const std::vector<Point>& s);

// Smallest normal subgroup containing p: the closure of the conjugates
// of p under the group operation. Requires p in G.
PermGroup normal_closure(const PermGroup& g, const Permutation& p);

bool is_simple(const PermGroup& g);

// Inclusion-minimal members of { normal_closure(g) : g != e },
// deduplicated by element-set equality. Every minimal normal subgroup is
// the normal closure of each of its non-identity elements, so this
// sweep finds exactly the minimal normal subgroups.
std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& g);

// Subgroup generated by all minimal normal subgroups.
PermGroup socle(const PermGroup& g);

bool is_abelian(const PermGroup& g);

enum class SymOrAlt { Symmetric, Alternating, Neither };

SymOrAlt classify_sym_or_alt(const PermGroup& g);

std::string to_string(SymOrAlt c);

}  // namespace groupmin

#endif
