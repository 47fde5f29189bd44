#pragma once

// The four binary dependency predicates between two services. Each predicate
// is an existential scan: one witnessing pair of states, conditions, people,
// or parameters sets the bit. Bits are symmetric in the pair; the direction
// of environment chaining and I/O composability is kept alongside.

#include <string>
#include <utility>

#include "smine/config.hpp"
#include "smine/model.hpp"

namespace smine {

enum class Direction { none, forward, backward, both };

inline Direction make_direction(bool forward, bool backward) {
  if (forward && backward) return Direction::both;
  if (forward) return Direction::forward;
  if (backward) return Direction::backward;
  return Direction::none;
}

inline bool has_forward(Direction d) { return d == Direction::forward || d == Direction::both; }
inline bool has_backward(Direction d) { return d == Direction::backward || d == Direction::both; }

inline Direction flip(Direction d) {
  return make_direction(has_backward(d), has_forward(d));
}

/// The four recognition bits for a pair, plus the combined direction of the
/// two directional predicates (environment chaining, I/O composability).
/// direction == none exactly when env_dep == 0 and ope_comp == 0.
struct RecognitionVector {
  int state_dep = 0;
  int env_dep = 0;
  int people_dep = 0;
  int ope_comp = 0;
  Direction direction = Direction::none;

  bool operator==(const RecognitionVector&) const = default;
};

// ---------------------------------------------------------------------------
// Condition chaining

/// Does an effect constraint guarantee a required constraint? An eq effect
/// asserts a point value, checked directly against the requirement; an
/// inequality effect chains only into the same-comparator requirement, with
/// its bound standing in as the guaranteed value.
inline bool constraint_chains(const EnvConstraint& post, const EnvConstraint& pre) {
  if (post.name != pre.name) return false;
  if (post.comparator != Comparator::eq && post.comparator != pre.comparator) return false;
  return compare(pre.comparator, post.bound, pre.bound);
}

namespace detail {

template <typename T>
inline bool sets_intersect(const std::set<T>& a, const std::set<T>& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) ++ia;
    else if (*ib < *ia) ++ib;
    else return true;
  }
  return false;
}

/// One effect satisfying one requirement is enough to chain a postcondition
/// into a precondition. Token sets are preferred when both sides carry them.
inline bool condition_chains(const Condition& post, const Condition& pre) {
  if (!post.tokens.empty() && !pre.tokens.empty())
    return sets_intersect(post.tokens, pre.tokens);
  for (const auto& p : post.env_constraints)
    for (const auto& c : pre.env_constraints)
      if (constraint_chains(p, c)) return true;
  return false;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Predicates

/// 1 iff some active interval of si overlaps some active interval of sk and,
/// unless cfg.ignore_spatial, the two records are within radius of each other.
inline int state_dependency(const ServiceDescription& si, const ServiceDescription& sk,
                            const MiningConfig& cfg) {
  for (const auto& a : si.states) {
    if (a.kind != StateKind::active) continue;
    for (const auto& b : sk.states) {
      if (b.kind != StateKind::active) continue;
      if (!interval_overlap(a, b)) continue;
      if (cfg.ignore_spatial) return 1;
      if (a.location && b.location && within_radius(*a.location, *b.location)) return 1;
    }
  }
  return 0;
}

/// Forward: some postcondition of si chains into some precondition of sk.
/// Backward: the converse. Bit is the OR of the two directions.
inline std::pair<int, Direction> env_dependency(const ServiceDescription& si,
                                                const ServiceDescription& sk,
                                                [[maybe_unused]] const MiningConfig& cfg) {
  bool forward = false;
  bool backward = false;
  for (const auto& oa : si.operations)
    for (const auto& ob : sk.operations) {
      forward = forward || detail::condition_chains(oa.postcondition, ob.precondition);
      backward = backward || detail::condition_chains(ob.postcondition, oa.precondition);
      if (forward && backward) break;
    }
  return {(forward || backward) ? 1 : 0, make_direction(forward, backward)};
}

/// 1 iff the two services share a person id.
inline int people_dependency(const ServiceDescription& si, const ServiceDescription& sk) {
  return detail::sets_intersect(si.people, sk.people) ? 1 : 0;
}

/// Forward: some output parameter type of si exactly equals some input
/// parameter type of sk, across all operations. Backward: the converse.
inline std::pair<int, Direction> operation_composability(const ServiceDescription& si,
                                                         const ServiceDescription& sk) {
  auto matches = [](const ServiceDescription& from, const ServiceDescription& to) {
    for (const auto& oa : from.operations)
      for (const auto& out : oa.outputs)
        for (const auto& ob : to.operations)
          for (const auto& in : ob.inputs)
            if (out.data_type == in.data_type) return true;
    return false;
  };
  const bool forward = matches(si, sk);
  const bool backward = matches(sk, si);
  return {(forward || backward) ? 1 : 0, make_direction(forward, backward)};
}

/// All four predicates assembled. Deterministic; the bits are symmetric in
/// (si, sk) while the direction flips. Throws on a self-pair.
inline RecognitionVector recognize(const ServiceDescription& si, const ServiceDescription& sk,
                                   const MiningConfig& cfg) {
  if (si.name == sk.name)
    throw std::invalid_argument("recognize requires two distinct services, got '" + si.name + "' twice");
  RecognitionVector v;
  v.state_dep = state_dependency(si, sk, cfg);
  auto [env, env_dir] = env_dependency(si, sk, cfg);
  v.env_dep = env;
  v.people_dep = people_dependency(si, sk);
  auto [ope, ope_dir] = operation_composability(si, sk);
  v.ope_comp = ope;
  v.direction = make_direction(has_forward(env_dir) || has_forward(ope_dir),
                               has_backward(env_dir) || has_backward(ope_dir));
  return v;
}

}  // namespace smine
