#ifndef GROUPMIN_BOOLEAN_OPS_HPP
#define GROUPMIN_BOOLEAN_OPS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "groupmin/dfa.hpp"
#include "groupmin/product.hpp"

namespace groupmin {

// Hard limit for the uniform-boolean-minimality sweep (per factor).
inline constexpr std::size_t kUbmFactorLimit = 10;

// A binary boolean function as a 4-bit truth table; the bit for (u,v)
// sits at position 2u + v.
class BooleanFn {
 public:
  explicit BooleanFn(std::uint8_t table) : table_(table & 0xf) {}

  bool eval(bool u, bool v) const {
    return (table_ >> ((u ? 2 : 0) + (v ? 1 : 0))) & 1;
  }
  std::uint8_t table() const { return table_; }

  // Output depends on both arguments.
  bool is_proper() const;

  BooleanFn complement() const { return BooleanFn(~table_ & 0xf); }

  std::string name() const;

  static BooleanFn intersection() { return BooleanFn(0b1000); }
  static BooleanFn difference() { return BooleanFn(0b0100); }          // L \ L'
  static BooleanFn reverse_difference() { return BooleanFn(0b0010); }  // L' \ L
  static BooleanFn complement_union() { return BooleanFn(0b0001); }
  static BooleanFn symmetric_difference() { return BooleanFn(0b0110); }
  static BooleanFn union_op() { return BooleanFn(0b1110); }

  friend bool operator==(BooleanFn a, BooleanFn b) {
    return a.table_ == b.table_;
  }

 private:
  std::uint8_t table_;
};

// All 16 tables in ascending table order.
std::vector<BooleanFn> all_boolean_functions();

// Exactly the 10 proper tables, ascending.
std::vector<BooleanFn> all_proper_boolean_functions();

enum class CompatibleTag { FxF, FxNotF, NotFxF, NotFxNotF, SymDiff };

struct CompatibleForm {
  CompatibleTag tag;
  bool complemented = false;

  friend bool operator==(const CompatibleForm& a, const CompatibleForm& b) {
    return a.tag == b.tag && a.complemented == b.complemented;
  }
};

std::string to_string(const CompatibleForm& form);

// { (q,q') : chi_F(q) o chi_F'(q') = 1 } as sorted packed product states
// (q * qp_count + q'). Requires a proper op and non-trivial F, F'.
std::vector<Point> compatible_set(BooleanFn op, const std::vector<Point>& f,
                                  const std::vector<Point>& fp,
                                  std::size_t q_count, std::size_t qp_count);

// Matches a compatible set against the six forms of its classification.
CompatibleForm classify_compatible(const std::vector<Point>& set,
                                   const std::vector<Point>& f,
                                   const std::vector<Point>& fp,
                                   std::size_t q_count, std::size_t qp_count);

// The packed set for a canonical (non-complement) form directly.
std::vector<Point> form_set(CompatibleTag tag, const std::vector<Point>& f,
                            const std::vector<Point>& fp, std::size_t q_count,
                            std::size_t qp_count);

// Direct product recognizing L o L'.
Dfa apply_boolean_op(const Dfa& a, const Dfa& ap, BooleanFn op);

// sc(L o L') = sc(L) sc(L') for all 10 proper operations. Requires
// minimal inputs.
bool has_maximal_boolean_complexity(const Dfa& a, const Dfa& ap);

// Every cognate pair has maximal boolean complexity: for all non-trivial
// (S, S') and every compatible set the product cognate is minimal. Only
// the five non-complement canonical forms are checked per pair; a DFA is
// minimal for a final set iff it is minimal for the complement.
bool is_uniformly_boolean_minimal(const Dfa& a, const Dfa& ap);

struct Theorem1fstateReport {
  bool accessible = false;
  bool maximal = false;
  bool consistent = false;
};

// One-final-state equivalence: product accessibility and maximal boolean
// complexity evaluated independently; they must agree (ConsistencyError
// otherwise). Also accepts the one-non-final-state variants, handled by
// complementing the relevant final set before analysis.
Theorem1fstateReport theorem_1fstate_check(const Dfa& a, const Dfa& ap);

struct BoolprimConditions {
  bool rowwise = false;
  bool colwise = false;

  bool neither() const { return !rowwise && !colwise; }
};

// Sufficient conditions for uniform boolean minimality: the factor group
// primitive, at least three states on that side, and every single and
// double stabilizer projection to the other side primitive.
BoolprimConditions lemma_boolprim_conditions(const Dfa& a, const Dfa& ap,
                                             std::size_t cap = kDefaultElementCap);

struct PropNsReport {
  bool condition_prim = false;
  bool condition_min = false;
  bool consistent = false;
};

// Rectangle-minimality equivalence: all single stabilizer projections
// primitive iff every (A x A')(S x S') is minimal. The two sides are
// evaluated independently and must agree.
PropNsReport prop_ns_check(const Dfa& a, const Dfa& ap,
                           std::size_t cap = kDefaultElementCap);

}  // namespace groupmin

#endif
