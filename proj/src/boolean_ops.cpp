#include "groupmin/boolean_ops.hpp"

#include <algorithm>
#include <stdexcept>

#include "groupmin/errors.hpp"

namespace groupmin {

bool BooleanFn::is_proper() const {
  bool depends_first = eval(false, false) != eval(true, false) ||
                       eval(false, true) != eval(true, true);
  bool depends_second = eval(false, false) != eval(false, true) ||
                        eval(true, false) != eval(true, true);
  return depends_first && depends_second;
}

std::string BooleanFn::name() const {
  switch (table_) {
    case 0b0001: return "complement-union";
    case 0b0010: return "reverse-difference";
    case 0b0100: return "difference";
    case 0b0110: return "symmetric-difference";
    case 0b0111: return "complement-intersection";
    case 0b1000: return "intersection";
    case 0b1001: return "complement-symmetric-difference";
    case 0b1011: return "complement-difference";
    case 0b1101: return "complement-reverse-difference";
    case 0b1110: return "union";
    default: return "table-" + std::to_string(table_);
  }
}

std::vector<BooleanFn> all_boolean_functions() {
  std::vector<BooleanFn> out;
  for (std::uint8_t t = 0; t < 16; ++t) out.emplace_back(t);
  return out;
}

std::vector<BooleanFn> all_proper_boolean_functions() {
  std::vector<BooleanFn> out;
  for (BooleanFn fn : all_boolean_functions())
    if (fn.is_proper()) out.push_back(fn);
  return out;
}

std::string to_string(const CompatibleForm& form) {
  std::string base;
  switch (form.tag) {
    case CompatibleTag::FxF: base = "F x F'"; break;
    case CompatibleTag::FxNotF: base = "F x ~F'"; break;
    case CompatibleTag::NotFxF: base = "~F x F'"; break;
    case CompatibleTag::NotFxNotF: base = "~F x ~F'"; break;
    case CompatibleTag::SymDiff: base = "(F x ~F') u (~F x F')"; break;
  }
  return form.complemented ? "complement of " + base : base;
}

namespace {

std::vector<bool> mask_of(const std::vector<Point>& set, std::size_t n,
                          const char* what) {
  std::vector<bool> mask(n, false);
  for (Point q : set) {
    if (q >= n) throw std::invalid_argument(std::string(what) + " out of range");
    mask[q] = true;
  }
  return mask;
}

void require_nontrivial(const std::vector<bool>& mask, const char* what) {
  std::size_t count = 0;
  for (bool b : mask) count += b ? 1 : 0;
  if (count == 0 || count == mask.size())
    throw std::invalid_argument(std::string(what) +
                                " must be a non-empty proper subset");
}

}  // namespace

std::vector<Point> compatible_set(BooleanFn op, const std::vector<Point>& f,
                                  const std::vector<Point>& fp,
                                  std::size_t q_count, std::size_t qp_count) {
  if (!op.is_proper())
    throw std::invalid_argument("compatible sets are defined for proper ops");
  std::vector<bool> fm = mask_of(f, q_count, "final state");
  std::vector<bool> fpm = mask_of(fp, qp_count, "final state");
  require_nontrivial(fm, "F");
  require_nontrivial(fpm, "F'");
  std::vector<Point> out;
  for (Point q = 0; q < q_count; ++q)
    for (Point qp = 0; qp < qp_count; ++qp)
      if (op.eval(fm[q], fpm[qp]))
        out.push_back(static_cast<Point>(q * qp_count + qp));
  return out;
}

std::vector<Point> form_set(CompatibleTag tag, const std::vector<Point>& f,
                            const std::vector<Point>& fp, std::size_t q_count,
                            std::size_t qp_count) {
  BooleanFn op = BooleanFn::intersection();
  switch (tag) {
    case CompatibleTag::FxF: op = BooleanFn::intersection(); break;
    case CompatibleTag::FxNotF: op = BooleanFn::difference(); break;
    case CompatibleTag::NotFxF: op = BooleanFn::reverse_difference(); break;
    case CompatibleTag::NotFxNotF: op = BooleanFn::complement_union(); break;
    case CompatibleTag::SymDiff: op = BooleanFn::symmetric_difference(); break;
  }
  return compatible_set(op, f, fp, q_count, qp_count);
}

CompatibleForm classify_compatible(const std::vector<Point>& set,
                                   const std::vector<Point>& f,
                                   const std::vector<Point>& fp,
                                   std::size_t q_count, std::size_t qp_count) {
  std::vector<Point> sorted = set;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Point> complement;
  for (Point s = 0; s < q_count * qp_count; ++s)
    if (!std::binary_search(sorted.begin(), sorted.end(), s))
      complement.push_back(s);

  constexpr CompatibleTag tags[] = {
      CompatibleTag::FxF, CompatibleTag::FxNotF, CompatibleTag::NotFxF,
      CompatibleTag::NotFxNotF, CompatibleTag::SymDiff};
  for (CompatibleTag tag : tags) {
    std::vector<Point> candidate = form_set(tag, f, fp, q_count, qp_count);
    if (candidate == sorted) return CompatibleForm{tag, false};
    if (candidate == complement) return CompatibleForm{tag, true};
  }
  throw ConsistencyError("set does not match any compatible form");
}

Dfa apply_boolean_op(const Dfa& a, const Dfa& ap, BooleanFn op) {
  ProductDfa prod = direct_product(a, ap);
  std::vector<bool> fm = a.final_mask();
  std::vector<bool> fpm = ap.final_mask();
  std::vector<Point> finals;
  for (Point q = 0; q < a.state_count; ++q)
    for (Point qp = 0; qp < ap.state_count; ++qp)
      if (op.eval(fm[q], fpm[qp])) finals.push_back(prod.pack(q, qp));
  return prod.packed.cognate(std::move(finals));
}

namespace {

// sc(L o L') == |Q| * |Q'| for all 10 proper operations, phrased so it
// also applies to non-minimal inputs (where it is simply false).
bool product_maximal_for_all_proper_ops(const Dfa& a, const Dfa& ap) {
  ProductDfa prod = direct_product(a, ap);
  if (!is_accessible(prod.packed)) return false;
  std::vector<bool> fm = a.final_mask();
  std::vector<bool> fpm = ap.final_mask();
  Refiner refiner(prod.packed);
  std::vector<bool> mask(prod.packed.state_count);
  for (BooleanFn op : all_proper_boolean_functions()) {
    for (Point q = 0; q < a.state_count; ++q)
      for (Point qp = 0; qp < ap.state_count; ++qp)
        mask[prod.pack(q, qp)] = op.eval(fm[q], fpm[qp]);
    if (refiner.refine_count(mask) != prod.packed.state_count) return false;
  }
  return true;
}

}  // namespace

bool has_maximal_boolean_complexity(const Dfa& a, const Dfa& ap) {
  if (a.alphabet != ap.alphabet)
    throw std::invalid_argument("boolean complexity needs identical alphabets");
  if (!is_minimal(a) || !is_minimal(ap))
    throw std::invalid_argument("boolean complexity needs minimal inputs");
  return product_maximal_for_all_proper_ops(a, ap);
}

bool is_uniformly_boolean_minimal(const Dfa& a, const Dfa& ap) {
  std::size_t n = a.state_count, np = ap.state_count;
  if (n > kUbmFactorLimit || np > kUbmFactorLimit)
    throw LimitExceededError("uniform boolean minimality sweep limited to " +
                             std::to_string(kUbmFactorLimit) +
                             " states per factor");
  // A one-state factor admits no non-trivial final sets at all, so the
  // sweep is empty and the condition holds vacuously.
  if (n < 2 || np < 2) return true;

  ProductDfa prod = direct_product(a, ap);
  if (!is_accessible(prod.packed)) return false;

  Refiner refiner(prod.packed);
  std::size_t total = prod.packed.state_count;
  std::vector<bool> mask(total);
  std::uint32_t full_l = (1u << n) - 1;
  std::uint32_t full_r = (1u << np) - 1;
  constexpr CompatibleTag tags[] = {
      CompatibleTag::FxF, CompatibleTag::FxNotF, CompatibleTag::NotFxF,
      CompatibleTag::NotFxNotF, CompatibleTag::SymDiff};

  for (std::uint32_t s = 1; s < full_l; ++s) {
    for (std::uint32_t sp = 1; sp < full_r; ++sp) {
      for (CompatibleTag tag : tags) {
        for (Point q = 0; q < n; ++q) {
          bool in_s = (s >> q) & 1u;
          for (Point qp = 0; qp < np; ++qp) {
            bool in_sp = (sp >> qp) & 1u;
            bool in_x = false;
            switch (tag) {
              case CompatibleTag::FxF: in_x = in_s && in_sp; break;
              case CompatibleTag::FxNotF: in_x = in_s && !in_sp; break;
              case CompatibleTag::NotFxF: in_x = !in_s && in_sp; break;
              case CompatibleTag::NotFxNotF: in_x = !in_s && !in_sp; break;
              case CompatibleTag::SymDiff: in_x = in_s != in_sp; break;
            }
            mask[q * np + qp] = in_x;
          }
        }
        if (refiner.refine_count(mask) != total) return false;
      }
    }
  }
  return true;
}

namespace {

// Normalizes a one-final or one-non-final permutation DFA to the
// one-final form by complementing when needed.
Dfa normalize_one_final(const Dfa& d, const char* side) {
  if (d.finals.size() == 1) return d;
  if (d.finals.size() + 1 == d.state_count) {
    std::vector<Point> complement;
    for (Point q = 0; q < d.state_count; ++q)
      if (!d.is_final(q)) complement.push_back(q);
    return d.cognate(std::move(complement));
  }
  throw std::invalid_argument(std::string(side) +
                              " DFA needs exactly one final or exactly one "
                              "non-final state");
}

}  // namespace

Theorem1fstateReport theorem_1fstate_check(const Dfa& a, const Dfa& ap) {
  if (!is_permutation_dfa(a) || !is_permutation_dfa(ap))
    throw std::invalid_argument("one-final-state check needs permutation DFAs");
  if (a.state_count < 3 && ap.state_count < 3)
    throw std::invalid_argument(
        "one-final-state check needs a factor with >= 3 states");
  Dfa na = normalize_one_final(a, "left");
  Dfa nap = normalize_one_final(ap, "right");

  Theorem1fstateReport rep;
  rep.accessible = is_accessible(direct_product(na, nap).packed);
  rep.maximal = product_maximal_for_all_proper_ops(na, nap);
  rep.consistent = rep.accessible == rep.maximal;
  if (!rep.consistent)
    throw ConsistencyError(
        "one-final-state equivalence violated: accessible=" +
        std::to_string(rep.accessible) +
        " maximal=" + std::to_string(rep.maximal));
  return rep;
}

namespace {

bool all_pairs_stabilizers_primitive(const ProductGroup& gx, std::size_t count,
                                     bool row_side) {
  for (Point p = 0; p < count; ++p) {
    for (Point q = p; q < count; ++q) {
      std::vector<Point> idx = (p == q) ? std::vector<Point>{p}
                                        : std::vector<Point>{p, q};
      PermGroup image = row_side ? row_stabilizer(gx, idx)
                                 : column_stabilizer(gx, idx);
      if (!is_primitive(image)) return false;
    }
  }
  return true;
}

}  // namespace

BoolprimConditions lemma_boolprim_conditions(const Dfa& a, const Dfa& ap,
                                             std::size_t cap) {
  ProductGroup gx = product_group(a, ap, cap);
  BoolprimConditions cond;
  cond.rowwise = a.state_count >= 3 && is_primitive(proj_left(gx)) &&
                 all_pairs_stabilizers_primitive(gx, a.state_count, true);
  cond.colwise = ap.state_count >= 3 && is_primitive(proj_right(gx)) &&
                 all_pairs_stabilizers_primitive(gx, ap.state_count, false);
  return cond;
}

PropNsReport prop_ns_check(const Dfa& a, const Dfa& ap, std::size_t cap) {
  std::size_t n = a.state_count, np = ap.state_count;
  if (n < 2 || np < 2)
    throw std::invalid_argument(
        "rectangle-minimality equivalence needs >= 2 states per factor");
  if (n > kUbmFactorLimit || np > kUbmFactorLimit)
    throw LimitExceededError("rectangle sweep limited to " +
                             std::to_string(kUbmFactorLimit) +
                             " states per factor");
  ProductGroup gx = product_group(a, ap, cap);

  PropNsReport rep;
  rep.condition_prim = true;
  for (Point q = 0; q < n && rep.condition_prim; ++q)
    rep.condition_prim = is_primitive(row_stabilizer(gx, {q}));
  for (Point qp = 0; qp < np && rep.condition_prim; ++qp)
    rep.condition_prim = is_primitive(column_stabilizer(gx, {qp}));

  ProductDfa prod = direct_product(a, ap);
  if (!is_accessible(prod.packed)) {
    rep.condition_min = false;
  } else {
    rep.condition_min = true;
    Refiner refiner(prod.packed);
    std::vector<bool> mask(prod.packed.state_count);
    std::uint32_t full_l = (1u << n) - 1, full_r = (1u << np) - 1;
    for (std::uint32_t s = 1; s < full_l && rep.condition_min; ++s)
      for (std::uint32_t sp = 1; sp < full_r && rep.condition_min; ++sp) {
        for (Point q = 0; q < n; ++q)
          for (Point qp = 0; qp < np; ++qp)
            mask[q * np + qp] = ((s >> q) & 1u) && ((sp >> qp) & 1u);
        rep.condition_min =
            refiner.refine_count(mask) == prod.packed.state_count;
      }
  }

  rep.consistent = rep.condition_prim == rep.condition_min;
  if (!rep.consistent)
    throw ConsistencyError(
        "rectangle-minimality equivalence violated: prim=" +
        std::to_string(rep.condition_prim) +
        " min=" + std::to_string(rep.condition_min));
  return rep;
}

}  // namespace groupmin
