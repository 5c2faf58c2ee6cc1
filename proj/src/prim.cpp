#include "dynacount/algorithms.hpp"
#include "transition_common.hpp"

namespace dynacount {

using detail::all_sat_classical;
using detail::all_sat_reduct;
using detail::bump;
using detail::canonicalize;
using detail::newly_induced;
using detail::position_of;

PrimKey prim_accepting_key() { return PrimKey{}; }

PrimTable prim_transition(const TraversalContext& ctx, int node,
                          const PrimTable* c0, const PrimTable* c1,
                          bool with_certs) {
  const NiceNode& nd = ctx.td->nodes[node];
  PrimTable out;

  switch (nd.kind) {
    case NodeKind::leaf: {
      out.emplace(PrimKey{}, 1);
      break;
    }

    case NodeKind::atom_intro: {
      AtomId a = static_cast<AtomId>(nd.delta);
      unsigned pa = position_of(nd.atoms, a);
      detail::CheckedRules checked = newly_induced(ctx, nd, a);
      std::vector<uint32_t> base;
      for (const auto& [key, n] : *c0) {
        uint32_t m0 = insert_zero_bit(key.m, pa);
        base.clear();
        if (with_certs)
          for (uint32_t c : key.certs) base.push_back(insert_zero_bit(c, pa));

        // Both branches require the assignment itself to satisfy every
        // rule that is now fully inside the bag; a violated induced rule
        // can never recover since its atoms are all decided.
        if (all_sat_classical(checked.masks, m0)) {
          PrimKey k;
          k.m = m0;
          if (with_certs) {
            for (uint32_t c : base)
              if (all_sat_reduct(checked.masks, c, m0)) k.certs.push_back(c);
            canonicalize(k.certs);
          }
          bump(out, std::move(k), n);
        }

        uint32_t m1 = m0 | (1u << pa);
        if (all_sat_classical(checked.masks, m1)) {
          PrimKey k;
          k.m = m1;
          if (with_certs) {
            k.certs.reserve(2 * base.size() + 1);
            for (uint32_t c : base) {
              if (all_sat_reduct(checked.masks, c, m1)) k.certs.push_back(c);
              uint32_t c1m = c | (1u << pa);
              if (all_sat_reduct(checked.masks, c1m, m1))
                k.certs.push_back(c1m);
            }
            if (all_sat_reduct(checked.masks, m0, m1)) k.certs.push_back(m0);
            canonicalize(k.certs);
          }
          bump(out, std::move(k), n);
        }
      }
      break;
    }

    case NodeKind::atom_remove: {
      AtomId a = static_cast<AtomId>(nd.delta);
      const NiceNode& child = ctx.td->nodes[nd.child0];
      unsigned pa = position_of(child.atoms, a);
      for (const auto& [key, n] : *c0) {
        PrimKey k;
        k.m = remove_bit(key.m, pa);
        k.certs.reserve(key.certs.size());
        for (uint32_t c : key.certs) k.certs.push_back(remove_bit(c, pa));
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
          if (with_certs) {
            std::set_intersection(k0.certs.begin(), k0.certs.end(),
                                  k1.certs.begin(), k1.certs.end(),
                                  std::back_inserter(k.certs));
            bool m_left = std::binary_search(k0.certs.begin(), k0.certs.end(),
                                             k0.m);
            bool m_right = std::binary_search(k1.certs.begin(), k1.certs.end(),
                                              k0.m);
            if (m_left || m_right) k.certs.push_back(k0.m);
            canonicalize(k.certs);
          }
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
