#include "groupmin/dfa.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "groupmin/errors.hpp"

namespace groupmin {

Dfa::Dfa(std::size_t states, std::vector<std::string> letters,
         std::vector<Transformation> transitions, Point initial_state,
         std::vector<Point> final_states)
    : state_count(states),
      alphabet(std::move(letters)),
      delta(std::move(transitions)),
      initial(initial_state),
      finals(std::move(final_states)) {
  if (state_count == 0) throw std::invalid_argument("dfa needs >= 1 state");
  if (alphabet.size() != delta.size())
    throw std::invalid_argument("alphabet and transition table size differ");
  std::unordered_set<std::string> names;
  for (const auto& a : alphabet) {
    if (a.empty()) throw std::invalid_argument("letter names must be nonempty");
    if (!names.insert(a).second)
      throw std::invalid_argument("duplicate letter name: " + a);
  }
  for (const auto& t : delta)
    if (t.degree() != state_count)
      throw std::invalid_argument("transition degree differs from state count");
  if (initial >= state_count)
    throw std::invalid_argument("initial state out of range");
  std::sort(finals.begin(), finals.end());
  finals.erase(std::unique(finals.begin(), finals.end()), finals.end());
  for (Point f : finals)
    if (f >= state_count)
      throw std::invalid_argument("final state out of range");
}

bool Dfa::is_final(Point q) const {
  return std::binary_search(finals.begin(), finals.end(), q);
}

std::vector<bool> Dfa::final_mask() const {
  std::vector<bool> mask(state_count, false);
  for (Point f : finals) mask[f] = true;
  return mask;
}

Dfa Dfa::cognate(std::vector<Point> s) const {
  return Dfa(state_count, alphabet, delta, initial, std::move(s));
}

std::vector<std::vector<Point>> StatePartition::classes() const {
  std::vector<std::vector<Point>> out(num_classes);
  for (Point q = 0; q < class_of.size(); ++q) out[class_of[q]].push_back(q);
  return out;
}

std::vector<Point> reachable_states(const Dfa& d) {
  std::vector<bool> seen(d.state_count, false);
  std::vector<Point> queue{d.initial};
  seen[d.initial] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& t : d.delta) {
      Point next = t.apply(queue[head]);
      if (!seen[next]) {
        seen[next] = true;
        queue.push_back(next);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

bool is_accessible(const Dfa& d) {
  return reachable_states(d).size() == d.state_count;
}

bool is_strongly_connected(const Dfa& d) {
  if (!is_accessible(d)) return false;
  // Reverse reachability from the initial state over the letter graph.
  std::vector<std::vector<Point>> rev(d.state_count);
  for (const auto& t : d.delta)
    for (Point q = 0; q < d.state_count; ++q) rev[t.apply(q)].push_back(q);
  std::vector<bool> seen(d.state_count, false);
  std::vector<Point> queue{d.initial};
  seen[d.initial] = true;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (Point p : rev[queue[head]])
      if (!seen[p]) {
        seen[p] = true;
        queue.push_back(p);
      }
  return queue.size() == d.state_count;
}

bool is_permutation_dfa(const Dfa& d) {
  for (const auto& t : d.delta)
    if (!t.is_permutation()) return false;
  return true;
}

PermGroup transition_group(const Dfa& d, std::size_t cap) {
  if (!is_permutation_dfa(d))
    throw std::invalid_argument("transition_group: not a permutation DFA");
  std::vector<Permutation> gens;
  for (const auto& t : d.delta) gens.emplace_back(t);
  if (gens.empty()) gens.push_back(Permutation::identity(d.state_count));
  return PermGroup::from_generators(std::move(gens), cap);
}

Refiner::Refiner(const Dfa& d)
    : dfa_(&d),
      cls_(d.state_count),
      next_cls_(d.state_count),
      keys_(d.state_count),
      order_(d.state_count) {}

std::size_t Refiner::run(const std::vector<bool>& in_x) {
  std::size_t n = dfa_->state_count;
  bool any_in = false, any_out = false;
  for (Point q = 0; q < n; ++q) {
    cls_[q] = in_x[q] ? 1 : 0;
    (in_x[q] ? any_in : any_out) = true;
  }
  std::size_t num = (any_in && any_out) ? 2 : 1;
  if (num == 1) {
    std::fill(cls_.begin(), cls_.end(), 0u);
    return 1;
  }

  // Iterate one-letter refinements to a simultaneous fixed point.
  bool changed = true;
  while (changed && num < n) {
    changed = false;
    for (const auto& t : dfa_->delta) {
      for (Point q = 0; q < n; ++q)
        keys_[q] = (static_cast<std::uint64_t>(cls_[q]) << 32) |
                   cls_[t.apply(q)];
      for (Point q = 0; q < n; ++q) order_[q] = q;
      std::sort(order_.begin(), order_.end(),
                [&](std::uint32_t a, std::uint32_t b) {
                  return keys_[a] < keys_[b];
                });
      std::size_t new_num = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 && keys_[order_[i]] != keys_[order_[i - 1]]) ++new_num;
        next_cls_[order_[i]] = static_cast<std::uint32_t>(new_num);
      }
      ++new_num;
      if (new_num != num) {
        num = new_num;
        changed = true;
      }
      std::swap(cls_, next_cls_);
      if (num == n) return n;
    }
  }
  return num;
}

std::size_t Refiner::refine_count(const std::vector<bool>& in_x) {
  return run(in_x);
}

StatePartition Refiner::refine(const std::vector<bool>& in_x) {
  std::size_t num = run(in_x);
  // Canonicalize class ids to first-occurrence order.
  StatePartition part;
  part.class_of.assign(cls_.begin(), cls_.end());
  std::vector<std::int64_t> remap(num, -1);
  std::uint32_t next = 0;
  for (Point q = 0; q < part.class_of.size(); ++q) {
    std::uint32_t c = part.class_of[q];
    if (remap[c] < 0) remap[c] = next++;
    part.class_of[q] = static_cast<std::uint32_t>(remap[c]);
  }
  part.num_classes = next;
  return part;
}

StatePartition indistinguishability_partition(const Dfa& d,
                                              const std::vector<Point>& x) {
  std::vector<bool> mask(d.state_count, false);
  for (Point q : x) {
    if (q >= d.state_count)
      throw std::invalid_argument("partition target state out of range");
    mask[q] = true;
  }
  Refiner r(d);
  return r.refine(mask);
}

bool is_minimal(const Dfa& d) {
  if (!is_accessible(d)) return false;
  Refiner r(d);
  return r.refine_count(d.final_mask()) == d.state_count;
}

namespace {

// DFA restricted to its reachable part, states renumbered.
Dfa reachable_restriction(const Dfa& d) {
  std::vector<Point> reach = reachable_states(d);
  if (reach.size() == d.state_count) return d;
  std::vector<Point> renumber(d.state_count, 0);
  for (std::size_t i = 0; i < reach.size(); ++i) renumber[reach[i]] = Point(i);
  std::vector<Transformation> delta;
  for (const auto& t : d.delta) {
    std::vector<Point> im(reach.size());
    for (std::size_t i = 0; i < reach.size(); ++i)
      im[i] = renumber[t.apply(reach[i])];
    delta.emplace_back(std::move(im));
  }
  std::vector<Point> finals;
  for (Point f : d.finals)
    if (std::binary_search(reach.begin(), reach.end(), f))
      finals.push_back(renumber[f]);
  return Dfa(reach.size(), d.alphabet, std::move(delta), renumber[d.initial],
             std::move(finals));
}

}  // namespace

std::size_t state_complexity(const Dfa& d) {
  Dfa r = reachable_restriction(d);
  Refiner refiner(r);
  return refiner.refine_count(r.final_mask());
}

bool is_uniformly_minimal_bruteforce(const Dfa& d) {
  std::size_t n = d.state_count;
  if (n < 2)
    throw std::invalid_argument("uniform minimality sweep needs >= 2 states");
  if (n > kSubsetSweepLimit)
    throw LimitExceededError("uniform minimality sweep limited to " +
                             std::to_string(kSubsetSweepLimit) + " states");
  if (!is_accessible(d)) return false;

  Refiner refiner(d);
  std::vector<bool> mask(n, false);
  std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t i = 1; i < full; ++i) {
    std::uint32_t subset = i ^ (i >> 1);  // Gray code
    if (subset == 0 || subset == full) continue;
    for (Point q = 0; q < n; ++q) mask[q] = (subset >> q) & 1u;
    if (refiner.refine_count(mask) != n) return false;
  }
  return true;
}

bool is_uniformly_minimal_via_primitivity(const Dfa& d, std::size_t cap) {
  return is_primitive(transition_group(d, cap));
}

bool minimality_via_saturation(const Dfa& d) {
  if (!is_permutation_dfa(d))
    throw std::invalid_argument("saturation check needs a permutation DFA");
  if (!is_accessible(d))
    throw std::invalid_argument("saturation check needs an accessible DFA");
  if (d.finals.empty() || d.finals.size() == d.state_count)
    throw std::invalid_argument("saturation check needs a non-trivial final set");

  PermGroup g = transition_group(d);
  std::vector<bool> final_mask = d.final_mask();
  for (Point x = 1; x < d.state_count; ++x) {
    BlockSystem sys = minimal_congruence(g, 0, x);
    if (sys.is_trivial()) continue;
    bool saturates = true;
    for (const auto& cls : sys.classes) {
      std::size_t inside = 0;
      for (Point q : cls) inside += final_mask[q] ? 1 : 0;
      if (inside != 0 && inside != cls.size()) {
        saturates = false;
        break;
      }
    }
    if (saturates) return false;
  }
  return true;
}

}  // namespace groupmin
