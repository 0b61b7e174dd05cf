#ifndef GROUPMIN_PRODUCT_HPP
#define GROUPMIN_PRODUCT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "groupmin/dfa.hpp"
#include "groupmin/perm.hpp"
#include "groupmin/perm_group.hpp"

namespace groupmin {

// Direct product of two DFAs over the same alphabet. State (q,q') is
// packed as q * right.state_count + q'. The packed view starts with an
// empty final set; boolean operations assign one.
struct ProductDfa {
  Dfa left;
  Dfa right;
  Dfa packed;

  Point pack(Point q, Point qp) const {
    return static_cast<Point>(q * right.state_count + qp);
  }
  Point row_of(Point packed_state) const {
    return static_cast<Point>(packed_state / right.state_count);
  }
  Point col_of(Point packed_state) const {
    return static_cast<Point>(packed_state % right.state_count);
  }
};

ProductDfa direct_product(const Dfa& a, const Dfa& ap);

struct PermPair {
  Permutation left;
  Permutation right;

  friend bool operator==(const PermPair& a, const PermPair& b) {
    return a.left == b.left && a.right == b.right;
  }
};

// The transition group of a direct product of permutation DFAs, stored
// as pairs (w, w') rather than packed degree-mn permutations so that
// stabilizer filters can read coordinates directly.
class ProductGroup {
 public:
  static ProductGroup from_letter_pairs(std::vector<PermPair> generators,
                                        std::size_t cap = kDefaultElementCap);

  std::size_t degree_left() const { return degree_left_; }
  std::size_t degree_right() const { return degree_right_; }
  const std::vector<PermPair>& generators() const { return generators_; }

  bool enumerated() const { return enumerated_; }
  const std::vector<PermPair>& elements() const;
  std::size_t order() const { return elements().size(); }

 private:
  ProductGroup() = default;

  std::size_t degree_left_ = 0, degree_right_ = 0;
  std::size_t cap_ = kDefaultElementCap;
  std::vector<PermPair> generators_;
  mutable std::vector<PermPair> elements_;
  mutable bool enumerated_ = false;
};

ProductGroup product_group(const Dfa& a, const Dfa& ap,
                           std::size_t cap = kDefaultElementCap);

PermGroup proj_left(const ProductGroup& gx);
PermGroup proj_right(const ProductGroup& gx);

// R pi' : the right coordinates of elements whose left coordinate is the
// identity (the pi'-image of ker pi), a normal subgroup of G'.
PermGroup full_row_stabilizer(const ProductGroup& gx);
// C pi : symmetric on the other side.
PermGroup full_column_stabilizer(const ProductGroup& gx);

// pi'-image of the setwise stabilizer of the given rows of the state
// grid (at most two; one gives the single stabilizers R_q pi').
PermGroup row_stabilizer(const ProductGroup& gx, std::vector<Point> rows);
PermGroup column_stabilizer(const ProductGroup& gx, std::vector<Point> cols);

enum class Similarity { Similar, Dissimilar, StronglyDissimilar };

std::string to_string(Similarity s);

// similar: both projections injective; strongly dissimilar: neither.
Similarity similarity_class(const Dfa& a, const Dfa& ap,
                            std::size_t cap = kDefaultElementCap);

// The four equivalent accessibility conditions, evaluated independently:
// (1) product accessible by BFS, (2) G, G' transitive and every single
// stabilizer projection transitive, (3) the one-row/one-column
// disjunction, (4) the paired action on Q x Q' has a single orbit.
// Disagreement raises ConsistencyError.
struct AccessibilityReport {
  bool bfs_accessible = false;
  bool all_stabilizers_transitive = false;
  bool some_row_or_column = false;
  bool pair_orbit_transitive = false;
  bool verdict = false;
};

AccessibilityReport accessibility_report(const Dfa& a, const Dfa& ap,
                                         std::size_t cap = kDefaultElementCap);

// Graph-theoretic accessibility condition: some full row or full column
// of the product is reachable from the initial state (with the matching
// factor accessible).
bool check_prop_graph(const Dfa& a, const Dfa& ap);

enum class DissimilarVerdict {
  UbmGuaranteed,
  AccessibleGuaranteed,
  NoGuarantee
};

std::string to_string(DissimilarVerdict v);

struct DissimilarResult {
  DissimilarVerdict verdict = DissimilarVerdict::NoGuarantee;
  std::string reason;
};

// Certificate test for dissimilar pairs: guarantees accessibility when
// all minimal normal subgroups of the factor behind the non-injective
// projection are transitive, and uniform boolean minimality in the
// primitive variant (transitivity and primitivity ascend to supergroups,
// so checking minimal normal subgroups suffices). Errors on similar
// pairs.
DissimilarResult theorem_dissimilar_verdict(const Dfa& a, const Dfa& ap,
                                            std::size_t cap = kDefaultElementCap);

enum class GroupClassLabel {
  TransitiveSimple,
  Primitive,
  PrimitiveSimple,
  SymOrAltNot4,
  TwoTransitiveNonAffine
};

std::string to_string(GroupClassLabel label);

// Labels every certificate class the group satisfies: (a) transitive
// simple, (b) primitive, (c) primitive simple, (d) symmetric or
// alternating of degree != 4, (e) 2-transitive with non-abelian socle.
std::vector<GroupClassLabel> corollary_dissimilar_case(const PermGroup& g);

}  // namespace groupmin

#endif
