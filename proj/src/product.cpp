#include "groupmin/product.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "groupmin/errors.hpp"

namespace groupmin {

namespace {

constexpr std::size_t kPackedStateLimit = 1u << 16;

struct PairHash {
  std::size_t operator()(const PermPair& p) const {
    std::size_t h = hash_value(p.left);
    h ^= hash_value(p.right) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace

ProductDfa direct_product(const Dfa& a, const Dfa& ap) {
  if (a.alphabet != ap.alphabet)
    throw std::invalid_argument("direct product needs identical alphabets");
  std::size_t n = a.state_count, np = ap.state_count;
  if (n * np > kPackedStateLimit)
    throw LimitExceededError("packed product exceeds state limit");
  std::vector<Transformation> delta;
  delta.reserve(a.alphabet.size());
  for (std::size_t l = 0; l < a.alphabet.size(); ++l) {
    std::vector<Point> im(n * np);
    for (Point q = 0; q < n; ++q)
      for (Point qp = 0; qp < np; ++qp)
        im[q * np + qp] = static_cast<Point>(a.delta[l].apply(q) * np +
                                             ap.delta[l].apply(qp));
    delta.emplace_back(std::move(im));
  }
  Dfa packed(n * np, a.alphabet, std::move(delta),
             static_cast<Point>(a.initial * np + ap.initial), {});
  return ProductDfa{a, ap, std::move(packed)};
}

ProductGroup ProductGroup::from_letter_pairs(std::vector<PermPair> generators,
                                             std::size_t cap) {
  if (generators.empty())
    throw std::invalid_argument("product group needs at least one letter pair");
  ProductGroup g;
  g.degree_left_ = generators.front().left.degree();
  g.degree_right_ = generators.front().right.degree();
  for (const auto& p : generators)
    if (p.left.degree() != g.degree_left_ ||
        p.right.degree() != g.degree_right_)
      throw std::invalid_argument("degree mismatch among letter pairs");
  g.cap_ = cap;
  g.generators_ = std::move(generators);
  return g;
}

const std::vector<PermPair>& ProductGroup::elements() const {
  if (enumerated_) return elements_;
  PermPair id{Permutation::identity(degree_left_),
              Permutation::identity(degree_right_)};
  std::unordered_set<PermPair, PairHash> seen{id};
  std::vector<PermPair> out{id};
  for (std::size_t head = 0; head < out.size(); ++head) {
    PermPair cur = out[head];
    for (const auto& g : generators_) {
      PermPair next{compose(cur.left, g.left), compose(cur.right, g.right)};
      if (seen.insert(next).second) {
        if (out.size() + 1 > cap_)
          throw CapExceededError("product group enumeration exceeded cap of " +
                                 std::to_string(cap_));
        out.push_back(std::move(next));
      }
    }
  }
  elements_ = std::move(out);
  enumerated_ = true;
  return elements_;
}

ProductGroup product_group(const Dfa& a, const Dfa& ap, std::size_t cap) {
  if (a.alphabet != ap.alphabet)
    throw std::invalid_argument("product group needs identical alphabets");
  if (!is_permutation_dfa(a) || !is_permutation_dfa(ap))
    throw std::invalid_argument("product group needs permutation DFAs");
  std::vector<PermPair> gens;
  if (a.alphabet.empty()) {
    gens.push_back(PermPair{Permutation::identity(a.state_count),
                            Permutation::identity(ap.state_count)});
  } else {
    for (std::size_t l = 0; l < a.alphabet.size(); ++l)
      gens.push_back(
          PermPair{Permutation(a.delta[l]), Permutation(ap.delta[l])});
  }
  return ProductGroup::from_letter_pairs(std::move(gens), cap);
}

namespace {

PermGroup group_from_perm_set(std::vector<Permutation> elems, std::size_t degree,
                              std::size_t cap) {
  if (elems.empty()) return PermGroup::trivial(degree);
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return PermGroup::from_elements(std::move(elems), cap);
}

}  // namespace

PermGroup proj_left(const ProductGroup& gx) {
  std::vector<Permutation> elems;
  elems.reserve(gx.order());
  for (const auto& e : gx.elements()) elems.push_back(e.left);
  return group_from_perm_set(std::move(elems), gx.degree_left(), gx.order());
}

PermGroup proj_right(const ProductGroup& gx) {
  std::vector<Permutation> elems;
  elems.reserve(gx.order());
  for (const auto& e : gx.elements()) elems.push_back(e.right);
  return group_from_perm_set(std::move(elems), gx.degree_right(), gx.order());
}

PermGroup full_row_stabilizer(const ProductGroup& gx) {
  std::vector<Permutation> elems;
  for (const auto& e : gx.elements())
    if (e.left.is_identity()) elems.push_back(e.right);
  return group_from_perm_set(std::move(elems), gx.degree_right(), gx.order());
}

PermGroup full_column_stabilizer(const ProductGroup& gx) {
  std::vector<Permutation> elems;
  for (const auto& e : gx.elements())
    if (e.right.is_identity()) elems.push_back(e.left);
  return group_from_perm_set(std::move(elems), gx.degree_left(), gx.order());
}

namespace {

bool stabilizes_setwise(const Permutation& p, const std::vector<Point>& s) {
  for (Point x : s) {
    Point y = p.apply(x);
    if (std::find(s.begin(), s.end(), y) == s.end()) return false;
  }
  return true;
}

std::vector<Point> checked_index_set(std::vector<Point> v, std::size_t degree,
                                     const char* what) {
  if (v.empty() || v.size() > 2)
    throw std::invalid_argument(std::string(what) +
                                " stabilizer takes one or two indices");
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  for (Point x : v)
    if (x >= degree)
      throw std::invalid_argument(std::string(what) + " index out of range");
  return v;
}

}  // namespace

PermGroup row_stabilizer(const ProductGroup& gx, std::vector<Point> rows) {
  rows = checked_index_set(std::move(rows), gx.degree_left(), "row");
  std::vector<Permutation> elems;
  for (const auto& e : gx.elements())
    if (stabilizes_setwise(e.left, rows)) elems.push_back(e.right);
  return group_from_perm_set(std::move(elems), gx.degree_right(), gx.order());
}

PermGroup column_stabilizer(const ProductGroup& gx, std::vector<Point> cols) {
  cols = checked_index_set(std::move(cols), gx.degree_right(), "column");
  std::vector<Permutation> elems;
  for (const auto& e : gx.elements())
    if (stabilizes_setwise(e.right, cols)) elems.push_back(e.left);
  return group_from_perm_set(std::move(elems), gx.degree_left(), gx.order());
}

std::string to_string(Similarity s) {
  switch (s) {
    case Similarity::Similar:
      return "similar";
    case Similarity::Dissimilar:
      return "dissimilar";
    default:
      return "strongly-dissimilar";
  }
}

Similarity similarity_class(const Dfa& a, const Dfa& ap, std::size_t cap) {
  ProductGroup gx = product_group(a, ap, cap);
  bool pi_injective = full_row_stabilizer(gx).order() == 1;
  bool pip_injective = full_column_stabilizer(gx).order() == 1;
  if (pi_injective && pip_injective) return Similarity::Similar;
  if (!pi_injective && !pip_injective) return Similarity::StronglyDissimilar;
  return Similarity::Dissimilar;
}

namespace {

// Orbit of the paired action on Q x Q' generated by the letter pairs.
bool pair_action_transitive(const ProductGroup& gx) {
  std::size_t n = gx.degree_left(), np = gx.degree_right();
  std::vector<bool> seen(n * np, false);
  std::vector<Point> queue{0};
  seen[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Point q = queue[head] / static_cast<Point>(np);
    Point qp = queue[head] % static_cast<Point>(np);
    for (const auto& g : gx.generators()) {
      Point next = static_cast<Point>(g.left.apply(q) * np + g.right.apply(qp));
      if (!seen[next]) {
        seen[next] = true;
        queue.push_back(next);
      }
    }
  }
  return queue.size() == n * np;
}

}  // namespace

AccessibilityReport accessibility_report(const Dfa& a, const Dfa& ap,
                                         std::size_t cap) {
  if (!is_permutation_dfa(a) || !is_permutation_dfa(ap))
    throw std::invalid_argument("accessibility report needs permutation DFAs");

  AccessibilityReport rep;
  rep.bfs_accessible = is_accessible(direct_product(a, ap).packed);

  ProductGroup gx = product_group(a, ap, cap);
  PermGroup g = proj_left(gx);
  PermGroup gp = proj_right(gx);
  bool g_trans = is_transitive(g);
  bool gp_trans = is_transitive(gp);

  bool all_rows = true, some_row = false;
  for (Point q = 0; q < a.state_count; ++q) {
    bool t = is_transitive(row_stabilizer(gx, {q}));
    all_rows = all_rows && t;
    some_row = some_row || t;
  }
  bool all_cols = true, some_col = false;
  for (Point qp = 0; qp < ap.state_count; ++qp) {
    bool t = is_transitive(column_stabilizer(gx, {qp}));
    all_cols = all_cols && t;
    some_col = some_col || t;
  }

  rep.all_stabilizers_transitive = g_trans && gp_trans && all_rows && all_cols;
  rep.some_row_or_column =
      (g_trans && some_row) || (gp_trans && some_col);
  rep.pair_orbit_transitive = pair_action_transitive(gx);

  if (rep.bfs_accessible != rep.all_stabilizers_transitive ||
      rep.bfs_accessible != rep.some_row_or_column ||
      rep.bfs_accessible != rep.pair_orbit_transitive)
    throw ConsistencyError(
        "accessibility conditions disagree: bfs=" +
        std::to_string(rep.bfs_accessible) +
        " stabilizers=" + std::to_string(rep.all_stabilizers_transitive) +
        " rowcol=" + std::to_string(rep.some_row_or_column) +
        " orbit=" + std::to_string(rep.pair_orbit_transitive));
  rep.verdict = rep.bfs_accessible;
  return rep;
}

bool check_prop_graph(const Dfa& a, const Dfa& ap) {
  ProductDfa prod = direct_product(a, ap);
  std::vector<Point> reach = reachable_states(prod.packed);
  std::vector<bool> reach_mask(prod.packed.state_count, false);
  for (Point s : reach) reach_mask[s] = true;

  auto full_row_reachable = [&]() {
    for (Point q = 0; q < a.state_count; ++q) {
      bool all = true;
      for (Point qp = 0; qp < ap.state_count && all; ++qp)
        all = reach_mask[prod.pack(q, qp)];
      if (all) return true;
    }
    return false;
  };
  auto full_col_reachable = [&]() {
    for (Point qp = 0; qp < ap.state_count; ++qp) {
      bool all = true;
      for (Point q = 0; q < a.state_count && all; ++q)
        all = reach_mask[prod.pack(q, qp)];
      if (all) return true;
    }
    return false;
  };

  return (is_accessible(a) && full_row_reachable()) ||
         (is_accessible(ap) && full_col_reachable());
}

std::string to_string(DissimilarVerdict v) {
  switch (v) {
    case DissimilarVerdict::UbmGuaranteed:
      return "ubm-guaranteed";
    case DissimilarVerdict::AccessibleGuaranteed:
      return "accessible-guaranteed";
    default:
      return "no-guarantee";
  }
}

namespace {

bool all_minimal_normals(const PermGroup& g, bool (*pred)(const PermGroup&)) {
  for (const auto& n : minimal_normal_subgroups(g))
    if (!pred(n)) return false;
  return true;
}

}  // namespace

DissimilarResult theorem_dissimilar_verdict(const Dfa& a, const Dfa& ap,
                                            std::size_t cap) {
  std::size_t n = a.state_count, np = ap.state_count;
  if (n < 2 || np < 2 || (n < 3 && np < 3))
    throw std::invalid_argument(
        "dissimilarity certificate needs at least one factor with >= 3 states");

  ProductGroup gx = product_group(a, ap, cap);
  PermGroup r_proj = full_row_stabilizer(gx);    // R pi' <= G'
  PermGroup c_proj = full_column_stabilizer(gx); // C pi  <= G
  bool r_nontrivial = r_proj.order() > 1;
  bool c_nontrivial = c_proj.order() > 1;
  if (!r_nontrivial && !c_nontrivial)
    throw std::invalid_argument(
        "dissimilarity certificate does not apply to similar DFAs");

  PermGroup g = proj_left(gx);
  PermGroup gp = proj_right(gx);
  bool g_prim = is_primitive(g), gp_prim = is_primitive(gp);
  bool g_trans = g_prim || is_transitive(g);
  bool gp_trans = gp_prim || is_transitive(gp);

  if (g_prim && gp_prim) {
    if (c_nontrivial && np >= 3 &&
        all_minimal_normals(g, is_primitive))
      return {DissimilarVerdict::UbmGuaranteed,
              "C pi non-trivial and all non-trivial normal subgroups of the "
              "left group are primitive"};
    if (r_nontrivial && n >= 3 &&
        all_minimal_normals(gp, is_primitive))
      return {DissimilarVerdict::UbmGuaranteed,
              "R pi' non-trivial and all non-trivial normal subgroups of the "
              "right group are primitive"};
    // A degree-2 factor forces its group to be S_2; a dissimilar pair
    // with both groups primitive is then uniformly boolean minimal
    // whichever kernel is non-trivial.
    if ((n == 2 && np >= 3) || (np == 2 && n >= 3))
      return {DissimilarVerdict::UbmGuaranteed,
              "one factor has two states and both groups are primitive"};
  }

  if (g_trans && gp_trans) {
    if (c_nontrivial && all_minimal_normals(g, is_transitive))
      return {DissimilarVerdict::AccessibleGuaranteed,
              "C pi non-trivial and all non-trivial normal subgroups of the "
              "left group are transitive"};
    if (r_nontrivial && all_minimal_normals(gp, is_transitive))
      return {DissimilarVerdict::AccessibleGuaranteed,
              "R pi' non-trivial and all non-trivial normal subgroups of the "
              "right group are transitive"};
  }

  return {DissimilarVerdict::NoGuarantee,
          "no clause of the dissimilarity certificate applies"};
}

std::string to_string(GroupClassLabel label) {
  switch (label) {
    case GroupClassLabel::TransitiveSimple:
      return "transitive-simple";
    case GroupClassLabel::Primitive:
      return "primitive";
    case GroupClassLabel::PrimitiveSimple:
      return "primitive-simple";
    case GroupClassLabel::SymOrAltNot4:
      return "sym-or-alt-not4";
    default:
      return "two-transitive-nonaffine";
  }
}

std::vector<GroupClassLabel> corollary_dissimilar_case(const PermGroup& g) {
  std::vector<GroupClassLabel> labels;
  bool transitive = is_transitive(g);
  bool primitive = transitive && is_primitive(g);
  bool simple = g.order() >= 2 && is_simple(g);
  if (transitive && simple) labels.push_back(GroupClassLabel::TransitiveSimple);
  if (primitive) labels.push_back(GroupClassLabel::Primitive);
  if (primitive && simple) labels.push_back(GroupClassLabel::PrimitiveSimple);
  if (g.degree() != 4 && classify_sym_or_alt(g) != SymOrAlt::Neither)
    labels.push_back(GroupClassLabel::SymOrAltNot4);
  if (g.degree() >= 2 && is_k_transitive(g, 2) && !is_abelian(socle(g)))
    labels.push_back(GroupClassLabel::TwoTransitiveNonAffine);
  return labels;
}

}  // namespace groupmin
