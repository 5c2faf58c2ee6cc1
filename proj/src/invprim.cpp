#include "dynacount/algorithms.hpp"
#include "transition_common.hpp"

namespace dynacount {

using detail::all_sat_classical;
using detail::bump;
using detail::canonicalize;
using detail::newly_induced;
using detail::position_of;
using detail::RuleMasks;

namespace {

// Candidate classes A that violate one of the rules w.r.t. the reduct
// under assignment m. Violating sets form subcubes: pos(r) forced in,
// head(r) forced out, the rest of m free.
void append_failing(const std::vector<RuleMasks>& rules, uint32_t m,
                    std::vector<uint32_t>& out) {
  for (const RuleMasks& r : rules) {
    if (r.neg & m) continue;      // deleted by the reduct, nothing fails
    if (r.pos & ~m) continue;     // no candidate inside m covers the body
    if (r.pos & r.head) continue; // body forces a head atom in
    uint32_t free = m & ~r.pos & ~r.head;
    for_each_submask(free, [&](uint32_t x) { out.push_back(r.pos | x); });
  }
}

}  // namespace

PrimKey invprim_accepting_key() { return PrimKey{0, {0}}; }

// Inverse-certificate dual of the PRIM transition: a class A <= M sits in
// the stored set iff no live counter-model candidate restricts to it.
PrimTable invprim_transition(const TraversalContext& ctx, int node,
                             const PrimTable* c0, const PrimTable* c1) {
  const NiceNode& nd = ctx.td->nodes[node];
  PrimTable out;

  switch (nd.kind) {
    case NodeKind::leaf: {
      // Before anything is decided the single class over the empty bag
      // holds no candidate at all, which counts as dead.
      out.emplace(PrimKey{0, {0}}, 1);
      break;
    }

    case NodeKind::atom_intro: {
      AtomId a = static_cast<AtomId>(nd.delta);
      unsigned pa = position_of(nd.atoms, a);
      detail::CheckedRules checked = newly_induced(ctx, nd, a);
      for (const auto& [key, n] : *c0) {
        uint32_t m0 = insert_zero_bit(key.m, pa);

        if (all_sat_classical(checked.masks, m0)) {
          PrimKey k;
          k.m = m0;
          for (uint32_t c : key.certs)
            k.certs.push_back(insert_zero_bit(c, pa));
          append_failing(checked.masks, m0, k.certs);
          canonicalize(k.certs);
          bump(out, std::move(k), n);
        }

        uint32_t m1 = m0 | (1u << pa);
        if (all_sat_classical(checked.masks, m1)) {
          PrimKey k;
          k.m = m1;
          for (uint32_t c : key.certs) {
            uint32_t c0m = insert_zero_bit(c, pa);
            // Dead classes stay dead in both extensions, except that the
            // class M' is repopulated by the fresh candidate and only
            // stays dead if the current checks reject it.
            if (c0m != m0) k.certs.push_back(c0m);
            k.certs.push_back(c0m | (1u << pa));
          }
          append_failing(checked.masks, m1, k.certs);
          canonicalize(k.certs);
          bump(out, std::move(k), n);
        }
      }
      break;
    }

    case NodeKind::atom_remove: {
      AtomId a = static_cast<AtomId>(nd.delta);
      const NiceNode& child = ctx.td->nodes[nd.child0];
      unsigned pa = position_of(child.atoms, a);
      uint32_t abit = 1u << pa;
      for (const auto& [key, n] : *c0) {
        PrimKey k;
        k.m = remove_bit(key.m, pa);
        if (key.m & abit) {
          // The projection of a class is dead only if both preimages are.
          for (uint32_t c : key.certs) {
            if (c & abit) continue;
            if (std::binary_search(key.certs.begin(), key.certs.end(),
                                   c | abit))
              k.certs.push_back(remove_bit(c, pa));
          }
        } else {
          for (uint32_t c : key.certs) k.certs.push_back(remove_bit(c, pa));
        }
        canonicalize(k.certs);
        bump(out, std::move(k), n);
      }
      break;
    }

    case NodeKind::join: {
      std::unordered_map<uint32_t, std::vector<const PrimTable::value_type*>>
          right;
      for (const auto& kv : *c1) right[kv.first.m].push_back(&kv);
      for (const auto& [k0, n0] : *c0) {
        auto it = right.find(k0.m);
        if (it == right.end()) continue;
        for (const auto* rkv : it->second) {
          const PrimKey& k1 = rkv->first;
          PrimKey k;
          k.m = k0.m;
          // A proper class is dead if dead on either side; the class equal
          // to M is dead only if dead on both (De Morgan dual of PRIM).
          std::set_union(k0.certs.begin(), k0.certs.end(), k1.certs.begin(),
                         k1.certs.end(), std::back_inserter(k.certs));
          bool m_left =
              std::binary_search(k0.certs.begin(), k0.certs.end(), k0.m);
          bool m_right =
              std::binary_search(k1.certs.begin(), k1.certs.end(), k0.m);
          if (!(m_left && m_right))
            std::erase(k.certs, k0.m);
          bump(out, std::move(k), n0 * rkv->second);
        }
      }
      break;
    }

    case NodeKind::rule_intro:
    case NodeKind::rule_remove:
      throw GraphKindMismatch(
          "rule node encountered in a primal-graph traversal");
  }
  return out;
}

}  // namespace dynacount
