#ifndef DYNACOUNT_TRANSITION_COMMON_HPP
#define DYNACOUNT_TRANSITION_COMMON_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "dynacount/algorithms.hpp"
#include "dynacount/bits.hpp"

namespace dynacount::detail {

// A rule restricted to a bag, as masks over the bag's atom positions.
struct RuleMasks {
  uint32_t head = 0;
  uint32_t pos = 0;
  uint32_t neg = 0;
};

inline unsigned position_of(const std::vector<uint32_t>& sorted, uint32_t x) {
  return static_cast<unsigned>(
      std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin());
}

inline uint32_t mask_of(const std::vector<AtomId>& ids,
                        const std::vector<AtomId>& bag_atoms) {
  uint32_t m = 0;
  size_t i = 0, j = 0;
  while (i < ids.size() && j < bag_atoms.size()) {
    if (ids[i] < bag_atoms[j]) {
      ++i;
    } else if (ids[i] > bag_atoms[j]) {
      ++j;
    } else {
      m |= 1u << j;
      ++i;
      ++j;
    }
  }
  return m;
}

inline RuleMasks restrict_rule(const Rule& r,
                               const std::vector<AtomId>& bag_atoms) {
  return {mask_of(r.head, bag_atoms), mask_of(r.pos_body, bag_atoms),
          mask_of(r.neg_body, bag_atoms)};
}

// m |= r under bag restriction: some literal of r is witnessed by m.
inline bool sat_classical(const RuleMasks& r, uint32_t m) {
  return (r.pos & ~m) != 0 || (r.neg & m) != 0 || (r.head & m) != 0;
}

// a |= r^m: the rule is deleted by the reduct w.r.t. m, or a witnesses
// the stripped rule.
inline bool sat_reduct(const RuleMasks& r, uint32_t a, uint32_t m) {
  return (r.neg & m) != 0 || (r.pos & ~a) != 0 || (r.head & a) != 0;
}

inline bool all_sat_classical(const std::vector<RuleMasks>& rs, uint32_t m) {
  for (const RuleMasks& r : rs)
    if (!sat_classical(r, m)) return false;
  return true;
}

inline bool all_sat_reduct(const std::vector<RuleMasks>& rs, uint32_t a,
                           uint32_t m) {
  for (const RuleMasks& r : rs)
    if (!sat_reduct(r, a, m)) return false;
  return true;
}

// The rules newly checkable at an AI(a) node of a primal decomposition:
// exactly those containing a whose atoms now all sit inside the bag.
struct CheckedRules {
  std::vector<RuleId> ids;
  std::vector<RuleMasks> masks;
};

inline CheckedRules newly_induced(const TraversalContext& ctx,
                                  const NiceNode& nd, AtomId a) {
  CheckedRules out;
  for (RuleId rid : ctx.atom_rules[a]) {
    const Rule& rule = ctx.p->rules[rid];
    bool inside = true;
    for (AtomId x : rule.atoms())
      if (!std::binary_search(nd.atoms.begin(), nd.atoms.end(), x)) {
        inside = false;
        break;
      }
    if (!inside) continue;
    out.ids.push_back(rid);
    out.masks.push_back(restrict_rule(rule, nd.atoms));
    if (!ctx.rule_covered.empty()) ctx.rule_covered[rid] = 1;
  }
  return out;
}

template <typename T>
inline void canonicalize(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

template <typename Table, typename Key>
inline void bump(Table& t, Key&& key, const Count& n) {
  auto [it, fresh] = t.try_emplace(std::forward<Key>(key), n);
  if (!fresh) it->second += n;
}

}  // namespace dynacount::detail

#endif
