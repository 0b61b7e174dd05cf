#include "groupmin/perm_group.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "groupmin/errors.hpp"

namespace groupmin {

namespace {

void check_degrees(const std::vector<Permutation>& perms) {
  if (perms.empty())
    throw std::invalid_argument("generator list must be nonempty");
  for (const auto& p : perms)
    if (p.degree() != perms.front().degree())
      throw std::invalid_argument("degree mismatch among generators");
}

std::vector<Permutation> closure(const std::vector<Permutation>& seed,
                                 const std::vector<Permutation>& gens,
                                 std::size_t cap) {
  std::unordered_set<Permutation, PermutationHash> seen(seed.begin(),
                                                        seed.end());
  std::vector<Permutation> out(seed.begin(), seed.end());
  for (std::size_t head = 0; head < out.size(); ++head) {
    Permutation cur = out[head];  // copy: out may reallocate
    for (const auto& g : gens) {
      Permutation next = compose(cur, g);
      if (seen.insert(next).second) {
        if (out.size() + 1 > cap)
          throw CapExceededError("element enumeration exceeded cap of " +
                                 std::to_string(cap));
        out.push_back(std::move(next));
      }
    }
  }
  return out;
}

// Greedily extracts a small generating subset of a closed element set.
std::vector<Permutation> extract_generators(
    const std::vector<Permutation>& elements) {
  std::size_t degree = elements.front().degree();
  std::vector<Permutation> gens;
  std::unordered_set<Permutation, PermutationHash> known;
  known.insert(Permutation::identity(degree));
  for (const auto& e : elements) {
    if (known.count(e)) continue;
    gens.push_back(e);
    std::vector<Permutation> cl =
        closure({Permutation::identity(degree)}, gens, elements.size() + 1);
    known.clear();
    known.insert(cl.begin(), cl.end());
    if (known.size() == elements.size()) break;
  }
  if (gens.empty()) gens.push_back(Permutation::identity(degree));
  return gens;
}

}  // namespace

PermGroup PermGroup::from_generators(std::vector<Permutation> generators,
                                     std::size_t cap) {
  check_degrees(generators);
  PermGroup g;
  g.degree_ = generators.front().degree();
  g.cap_ = cap;
  g.generators_ = std::move(generators);
  return g;
}

PermGroup PermGroup::from_elements(std::vector<Permutation> elements,
                                   std::size_t cap) {
  check_degrees(elements);
  PermGroup g;
  g.degree_ = elements.front().degree();
  g.cap_ = cap;
  g.generators_ = extract_generators(elements);
  g.elements_ = std::move(elements);
  g.enumerated_ = true;
  return g;
}

PermGroup PermGroup::trivial(std::size_t degree) {
  return from_generators({Permutation::identity(degree)});
}

const std::vector<Permutation>& PermGroup::elements() const {
  if (!enumerated_) {
    elements_ = closure({Permutation::identity(degree_)}, generators_, cap_);
    enumerated_ = true;
  }
  return elements_;
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  const auto& elems = elements();
  return std::find(elems.begin(), elems.end(), p) != elems.end();
}

std::string PermGroup::to_string() const {
  std::ostringstream out;
  out << '<';
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out << ", ";
    out << format_cycles(generators_[i]);
  }
  out << '>';
  return out.str();
}

bool same_element_set(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree()) return false;
  if (a.order() != b.order()) return false;
  std::unordered_set<Permutation, PermutationHash> set_a(a.elements().begin(),
                                                         a.elements().end());
  for (const auto& e : b.elements())
    if (!set_a.count(e)) return false;
  return true;
}

namespace {

struct Dsu {
  std::vector<Point> parent;

  explicit Dsu(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  Point find(Point x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // Returns the representative that lost, or the winner if already equal.
  bool unite(Point a, Point b, Point* loser) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    *loser = b;
    return true;
  }
};

BlockSystem partition_from_dsu(Dsu& dsu, std::size_t degree) {
  std::vector<std::vector<Point>> classes;
  std::vector<std::int64_t> index(degree, -1);
  for (Point x = 0; x < degree; ++x) {
    Point r = dsu.find(x);
    if (index[r] < 0) {
      index[r] = static_cast<std::int64_t>(classes.size());
      classes.emplace_back();
    }
    classes[static_cast<std::size_t>(index[r])].push_back(x);
  }
  return BlockSystem{degree, std::move(classes)};
}

}  // namespace

BlockSystem orbits(const PermGroup& g) {
  Dsu dsu(g.degree());
  Point loser;
  for (const auto& gen : g.generators())
    for (Point x = 0; x < g.degree(); ++x)
      dsu.unite(x, gen.apply(x), &loser);
  return partition_from_dsu(dsu, g.degree());
}

std::vector<Point> orbit_of(const PermGroup& g, Point x) {
  std::vector<bool> seen(g.degree(), false);
  std::vector<Point> orbit{x};
  seen[x] = true;
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (const auto& gen : g.generators()) {
      Point y = gen.apply(orbit[head]);
      if (!seen[y]) {
        seen[y] = true;
        orbit.push_back(y);
      }
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

bool is_transitive(const PermGroup& g) {
  return orbit_of(g, 0).size() == g.degree();
}

bool is_k_transitive(const PermGroup& g, std::size_t k) {
  if (k == 0 || k > g.degree())
    throw std::invalid_argument("is_k_transitive: need 1 <= k <= degree");
  std::uint64_t target = 1;
  for (std::size_t i = 0; i < k; ++i) target *= g.degree() - i;

  std::vector<Point> start(k);
  std::iota(start.begin(), start.end(), 0);

  struct VecHash {
    std::size_t operator()(const std::vector<Point>& v) const {
      std::size_t h = 14695981039346656037ull;
      for (Point x : v) h = (h ^ x) * 1099511628211ull;
      return h;
    }
  };
  std::unordered_set<std::vector<Point>, VecHash> seen{start};
  std::deque<std::vector<Point>> queue{start};
  while (!queue.empty()) {
    std::vector<Point> cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& gen : g.generators()) {
      std::vector<Point> next(k);
      for (std::size_t i = 0; i < k; ++i) next[i] = gen.apply(cur[i]);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return seen.size() == target;
}

BlockSystem minimal_congruence(const PermGroup& g, Point x, Point y) {
  if (x == y) throw std::invalid_argument("seed points must be distinct");
  if (x >= g.degree() || y >= g.degree())
    throw std::invalid_argument("seed point out of range");
  if (!is_transitive(g))
    throw std::invalid_argument("minimal block search needs a transitive group");

  Dsu dsu(g.degree());
  std::deque<std::pair<Point, Point>> pending;
  Point loser;
  if (dsu.unite(x, y, &loser)) pending.emplace_back(x, y);
  while (!pending.empty()) {
    auto [a, b] = pending.front();
    pending.pop_front();
    for (const auto& gen : g.generators()) {
      Point ga = gen.apply(a), gb = gen.apply(b);
      if (dsu.unite(ga, gb, &loser)) pending.emplace_back(ga, gb);
    }
  }
  return partition_from_dsu(dsu, g.degree());
}

std::vector<Point> minimal_block_containing(const PermGroup& g, Point x,
                                            Point y) {
  BlockSystem sys = minimal_congruence(g, x, y);
  for (const auto& cls : sys.classes)
    if (std::find(cls.begin(), cls.end(), x) != cls.end()) return cls;
  throw ConsistencyError("minimal congruence lost its seed point");
}

bool is_primitive(const PermGroup& g) {
  if (!is_transitive(g)) return false;
  for (Point x = 1; x < g.degree(); ++x)
    if (minimal_block_containing(g, 0, x).size() != g.degree()) return false;
  return true;
}

std::vector<std::vector<Point>> all_nontrivial_blocks(const PermGroup& g,
                                                      std::size_t degree_limit) {
  std::size_t n = g.degree();
  if (n > degree_limit)
    throw LimitExceededError("block sweep limited to degree " +
                             std::to_string(degree_limit));
  std::vector<std::vector<Point>> blocks;
  std::uint32_t full = (n >= 32) ? 0xffffffffu : ((1u << n) - 1);
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    if ((mask & (mask - 1)) == 0) continue;  // singletons are trivial
    // B is a block iff every image of B in its orbit closure under the
    // generators is equal to or disjoint from B.
    std::unordered_set<std::uint32_t> seen{mask};
    std::vector<std::uint32_t> queue{mask};
    bool block = true;
    for (std::size_t head = 0; head < queue.size() && block; ++head) {
      std::uint32_t cur = queue[head];
      for (const auto& gen : g.generators()) {
        std::uint32_t img = 0;
        for (Point p = 0; p < n; ++p)
          if (cur & (1u << p)) img |= 1u << gen.apply(p);
        if ((img & mask) != 0 && img != mask) {
          block = false;
          break;
        }
        if (seen.insert(img).second) queue.push_back(img);
      }
    }
    if (block) {
      std::vector<Point> b;
      for (Point p = 0; p < n; ++p)
        if (mask & (1u << p)) b.push_back(p);
      blocks.push_back(std::move(b));
    }
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const std::vector<Point>& a, const std::vector<Point>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return blocks;
}

PermGroup setwise_stabilizer(const PermGroup& g, const std::vector<Point>& s) {
  std::vector<Point> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Permutation> kept;
  for (const auto& e : g.elements())
    if (apply_to_set(e, sorted) == sorted) kept.push_back(e);
  return PermGroup::from_elements(std::move(kept), g.element_cap());
}

PermGroup normal_closure(const PermGroup& g, const Permutation& p) {
  if (!g.contains(p))
    throw std::invalid_argument("normal_closure: element not in group");
  std::unordered_set<Permutation, PermutationHash> conj_set;
  for (const auto& h : g.elements())
    conj_set.insert(compose(compose(h, p), inverse(h)));
  std::vector<Permutation> conjugates(conj_set.begin(), conj_set.end());
  std::sort(conjugates.begin(), conjugates.end());
  PermGroup n = PermGroup::from_generators(conjugates, g.element_cap());
  n.elements();
  return n;
}

namespace {

// One representative per conjugacy class, excluding the identity.
std::vector<Permutation> class_representatives(const PermGroup& g) {
  std::unordered_set<Permutation, PermutationHash> assigned;
  std::vector<Permutation> reps;
  for (const auto& e : g.elements()) {
    if (e.is_identity() || assigned.count(e)) continue;
    reps.push_back(e);
    for (const auto& h : g.elements())
      assigned.insert(compose(compose(h, e), inverse(h)));
  }
  return reps;
}

}  // namespace

bool is_simple(const PermGroup& g) {
  if (g.order() < 2)
    throw std::invalid_argument("is_simple: group must have order >= 2");
  for (const auto& rep : class_representatives(g))
    if (normal_closure(g, rep).order() != g.order()) return false;
  return true;
}

std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& g) {
  std::vector<PermGroup> closures;
  for (const auto& rep : class_representatives(g)) {
    PermGroup n = normal_closure(g, rep);
    bool dup = false;
    for (const auto& other : closures)
      if (same_element_set(other, n)) {
        dup = true;
        break;
      }
    if (!dup) closures.push_back(std::move(n));
  }
  std::vector<PermGroup> minimal;
  for (std::size_t i = 0; i < closures.size(); ++i) {
    bool has_smaller = false;
    for (std::size_t j = 0; j < closures.size(); ++j) {
      if (i == j || closures[j].order() >= closures[i].order()) continue;
      // closures[j] subset of closures[i]?
      std::unordered_set<Permutation, PermutationHash> big(
          closures[i].elements().begin(), closures[i].elements().end());
      bool subset = true;
      for (const auto& e : closures[j].elements())
        if (!big.count(e)) {
          subset = false;
          break;
        }
      if (subset) {
        has_smaller = true;
        break;
      }
    }
    if (!has_smaller) minimal.push_back(closures[i]);
  }
  return minimal;
}

PermGroup socle(const PermGroup& g) {
  std::vector<PermGroup> minimal = minimal_normal_subgroups(g);
  if (minimal.empty()) return PermGroup::trivial(g.degree());
  std::unordered_set<Permutation, PermutationHash> union_set;
  for (const auto& n : minimal)
    union_set.insert(n.elements().begin(), n.elements().end());
  std::vector<Permutation> gens(union_set.begin(), union_set.end());
  std::sort(gens.begin(), gens.end());
  PermGroup s = PermGroup::from_generators(std::move(gens), g.element_cap());
  s.elements();
  return s;
}

bool is_abelian(const PermGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (compose(gens[i], gens[j]) != compose(gens[j], gens[i])) return false;
  return true;
}

SymOrAlt classify_sym_or_alt(const PermGroup& g) {
  std::size_t n = g.degree();
  if (n > 20) throw LimitExceededError("classify_sym_or_alt limited to degree 20");
  if (!is_transitive(g)) return SymOrAlt::Neither;
  std::uint64_t fact = 1;
  for (std::size_t i = 2; i <= n; ++i) fact *= i;
  std::uint64_t order = g.order();
  if (order == fact) return SymOrAlt::Symmetric;
  if (n >= 2 && order == fact / 2) {
    for (const auto& gen : g.generators())
      if (!is_even(gen)) return SymOrAlt::Neither;
    return SymOrAlt::Alternating;
  }
  return SymOrAlt::Neither;
}

std::string to_string(SymOrAlt c) {
  switch (c) {
    case SymOrAlt::Symmetric:
      return "symmetric";
    case SymOrAlt::Alternating:
      return "alternating";
    default:
      return "neither";
  }
}

}  // namespace groupmin
