#include "dynacount/algorithms.hpp"
#include "transition_common.hpp"

namespace dynacount {

using detail::bump;
using detail::canonicalize;
using detail::position_of;
using detail::restrict_rule;
using detail::RuleMasks;
using detail::sat_classical;
using detail::sat_reduct;

namespace {

std::vector<RuleMasks> bag_rule_masks(const NiceNode& nd,
                                      const GroundProgram& p) {
  std::vector<RuleMasks> out;
  out.reserve(nd.rules.size());
  for (RuleId r : nd.rules) out.push_back(restrict_rule(p.rules[r], nd.atoms));
  return out;
}

uint32_t sat_mask(const std::vector<RuleMasks>& rules, uint32_t m) {
  uint32_t out = 0;
  for (size_t j = 0; j < rules.size(); ++j)
    if (sat_classical(rules[j], m)) out |= 1u << j;
  return out;
}

uint32_t reduct_sat_mask(const std::vector<RuleMasks>& rules, uint32_t a,
                         uint32_t m) {
  uint32_t out = 0;
  for (size_t j = 0; j < rules.size(); ++j)
    if (sat_reduct(rules[j], a, m)) out |= 1u << j;
  return out;
}

uint64_t pack(uint32_t a, uint32_t r) { return (uint64_t{a} << 32) | r; }
uint32_t cert_a(uint64_t c) { return static_cast<uint32_t>(c >> 32); }
uint32_t cert_r(uint64_t c) { return static_cast<uint32_t>(c); }

}  // namespace

IncKey inc_accepting_key() { return IncKey{}; }

IncTable inc_transition(const TraversalContext& ctx, int node,
                        const IncTable* c0, const IncTable* c1,
                        bool with_certs) {
  const GroundProgram& p = *ctx.p;
  const NiceNode& nd = ctx.td->nodes[node];
  IncTable out;

  switch (nd.kind) {
    case NodeKind::leaf: {
      out.emplace(IncKey{}, 1);
      break;
    }

    case NodeKind::atom_intro: {
      AtomId a = static_cast<AtomId>(nd.delta);
      unsigned pa = position_of(nd.atoms, a);
      std::vector<RuleMasks> rules = bag_rule_masks(nd, p);
      std::vector<uint64_t> base;
      for (const auto& [key, n] : *c0) {
        uint32_t m0 = insert_zero_bit(key.m, pa);
        base.clear();
        if (with_certs)
          for (uint64_t c : key.certs)
            base.push_back(pack(insert_zero_bit(cert_a(c), pa), cert_r(c)));

        IncKey falsek;
        falsek.m = m0;
        falsek.s = key.s | sat_mask(rules, m0);
        if (with_certs) {
          falsek.certs.reserve(base.size());
          for (uint64_t c : base)
            falsek.certs.push_back(pack(
                cert_a(c), cert_r(c) | reduct_sat_mask(rules, cert_a(c), m0)));
          canonicalize(falsek.certs);
        }
        bump(out, std::move(falsek), n);

        uint32_t m1 = m0 | (1u << pa);
        IncKey truek;
        truek.m = m1;
        truek.s = key.s | sat_mask(rules, m1);
        if (with_certs) {
          truek.certs.reserve(2 * base.size() + 1);
          for (uint64_t c : base) {
            uint32_t a0 = cert_a(c);
            truek.certs.push_back(
                pack(a0, cert_r(c) | reduct_sat_mask(rules, a0, m1)));
            uint32_t a1 = a0 | (1u << pa);
            truek.certs.push_back(
                pack(a1, cert_r(c) | reduct_sat_mask(rules, a1, m1)));
          }
          // The fresh certificate M' starts from the rules the parent
          // assignment has already witnessed: M' agrees with it on every
          // decided atom except a, so those witnesses carry over.
          truek.certs.push_back(
              pack(m0, key.s | reduct_sat_mask(rules, m0, m1)));
          canonicalize(truek.certs);
        }
        bump(out, std::move(truek), n);
      }
      break;
    }

    case NodeKind::atom_remove: {
      AtomId a = static_cast<AtomId>(nd.delta);
      const NiceNode& child = ctx.td->nodes[nd.child0];
      unsigned pa = position_of(child.atoms, a);
      for (const auto& [key, n] : *c0) {
        IncKey k;
        k.m = remove_bit(key.m, pa);
        k.s = key.s;
        k.certs.reserve(key.certs.size());
        for (uint64_t c : key.certs)
          k.certs.push_back(pack(remove_bit(cert_a(c), pa), cert_r(c)));
        canonicalize(k.certs);
        bump(out, std::move(k), n);
      }
      break;
    }

    case NodeKind::rule_intro: {
      RuleId r = static_cast<RuleId>(nd.delta - static_cast<int>(p.atom_count()));
      unsigned pr = position_of(nd.rules, r);
      RuleMasks rm = restrict_rule(p.rules[r], nd.atoms);
      for (const auto& [key, n] : *c0) {
        IncKey k;
        k.m = key.m;
        k.s = insert_zero_bit(key.s, pr);
        if (sat_classical(rm, key.m)) k.s |= 1u << pr;
        if (with_certs) {
          k.certs.reserve(key.certs.size());
          for (uint64_t c : key.certs) {
            uint32_t rr = insert_zero_bit(cert_r(c), pr);
            if (sat_reduct(rm, cert_a(c), key.m)) rr |= 1u << pr;
            k.certs.push_back(pack(cert_a(c), rr));
          }
          canonicalize(k.certs);
        }
        bump(out, std::move(k), n);
      }
      break;
    }

    case NodeKind::rule_remove: {
      RuleId r = static_cast<RuleId>(nd.delta - static_cast<int>(p.atom_count()));
      const NiceNode& child = ctx.td->nodes[nd.child0];
      unsigned pr = position_of(child.rules, r);
      uint32_t rbit = 1u << pr;
      for (const auto& [key, n] : *c0) {
        if (!(key.s & rbit)) continue;  // the rule can never be satisfied later
        IncKey k;
        k.m = key.m;
        k.s = remove_bit(key.s, pr);
        for (uint64_t c : key.certs) {
          if (!(cert_r(c) & rbit)) continue;  // dead counter-model candidate
          k.certs.push_back(pack(cert_a(c), remove_bit(cert_r(c), pr)));
        }
        canonicalize(k.certs);
        bump(out, std::move(k), n);
      }
      break;
    }

    case NodeKind::join: {
      std::unordered_map<uint32_t, std::vector<const IncTable::value_type*>>
          right;
      for (const auto& kv : *c1) right[kv.first.m].push_back(&kv);
      for (const auto& [k0, n0] : *c0) {
        auto it = right.find(k0.m);
        if (it == right.end()) continue;
        for (const auto* rkv : it->second) {
          const IncKey& k1 = rkv->first;
          IncKey k;
          k.m = k0.m;
          k.s = k0.s | k1.s;
          if (with_certs) {
            // Certificates sorted by packed value group by A; merge the
            // runs of both sides.
            size_t i = 0, j = 0;
            while (i < k0.certs.size() && j < k1.certs.size()) {
              uint32_t a0 = cert_a(k0.certs[i]);
              uint32_t a1 = cert_a(k1.certs[j]);
              if (a0 < a1) {
                ++i;
              } else if (a0 > a1) {
                ++j;
              } else {
                size_t ie = i, je = j;
                while (ie < k0.certs.size() && cert_a(k0.certs[ie]) == a0) ++ie;
                while (je < k1.certs.size() && cert_a(k1.certs[je]) == a0) ++je;
                for (size_t x = i; x < ie; ++x)
                  for (size_t y = j; y < je; ++y)
                    k.certs.push_back(
                        pack(a0, cert_r(k0.certs[x]) | cert_r(k1.certs[y])));
                i = ie;
                j = je;
              }
            }
            // A certificate equal to M on this side pairs with the other
            // side's own assignment, inheriting its satisfied rules.
            for (uint64_t c : k0.certs)
              if (cert_a(c) == k0.m)
                k.certs.push_back(pack(k0.m, cert_r(c) | k1.s));
            for (uint64_t c : k1.certs)
              if (cert_a(c) == k0.m)
                k.certs.push_back(pack(k0.m, cert_r(c) | k0.s));
            canonicalize(k.certs);
          }
          bump(out, std::move(k), n0 * rkv->second);
        }
      }
      break;
    }
  }
  return out;
}

}  // namespace dynacount
