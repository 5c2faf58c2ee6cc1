#ifndef DYNACOUNT_ALGORITHMS_HPP
#define DYNACOUNT_ALGORITHMS_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "dynacount/decomposition.hpp"
#include "dynacount/program.hpp"

namespace dynacount {

enum class Algorithm { inc, prim, invprim, satmode };

const char* algorithm_name(Algorithm a);

class GraphKindMismatch : public std::logic_error {
 public:
  explicit GraphKindMismatch(const std::string& msg)
      : std::logic_error(msg) {}
};

inline size_t hash_mix(size_t h, uint64_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}

// Tuple of the incidence-graph algorithm: assignment mask over the bag's
// atom positions, satisfied-rule mask over its rule positions, and the
// certificates as packed (A << 32 | R) words, sorted and unique. The
// certificate-free SAT mode uses the same key with empty certs.
struct IncKey {
  uint32_t m = 0;
  uint32_t s = 0;
  std::vector<uint64_t> certs;
  bool operator==(const IncKey&) const = default;
};

struct IncKeyHash {
  size_t operator()(const IncKey& k) const {
    size_t h = hash_mix(0, (uint64_t{k.m} << 32) | k.s);
    for (uint64_t c : k.certs) h = hash_mix(h, c);
    return h;
  }
};

using IncTable = std::unordered_map<IncKey, Count, IncKeyHash>;

// Tuple of the primal-graph algorithms: assignment mask plus certificate
// masks (PRIM) or inverse-certificate masks (INVPRIM), sorted and unique.
struct PrimKey {
  uint32_t m = 0;
  std::vector<uint32_t> certs;
  bool operator==(const PrimKey&) const = default;
};

struct PrimKeyHash {
  size_t operator()(const PrimKey& k) const {
    size_t h = hash_mix(0, k.m);
    for (uint32_t c : k.certs) h = hash_mix(h, c);
    return h;
  }
};

using PrimTable = std::unordered_map<PrimKey, Count, PrimKeyHash>;

// Rules whose atoms all lie inside the given (sorted) atom bag.
std::vector<RuleId> induced_rules(const std::vector<AtomId>& bag_atoms,
                                  const GroundProgram& p);

// Shared traversal state: the decomposition, the program, and an index
// from atoms to the rules mentioning them.
struct TraversalContext {
  const NiceTreeDecomposition* td = nullptr;
  const GroundProgram* p = nullptr;
  std::vector<std::vector<RuleId>> atom_rules;
  mutable std::vector<char> rule_covered;  // prim-family instrumentation

  TraversalContext(const NiceTreeDecomposition& t, const GroundProgram& prog);
};

// Per-node transition functions. Child tables follow child0/child1 of the
// node; unused children are null. with_certs=false drops all certificate
// logic and turns the transition into its pure satisfiability variant.
IncTable inc_transition(const TraversalContext& ctx, int node,
                        const IncTable* c0, const IncTable* c1,
                        bool with_certs = true);

PrimTable prim_transition(const TraversalContext& ctx, int node,
                          const PrimTable* c0, const PrimTable* c1,
                          bool with_certs = true);

PrimTable invprim_transition(const TraversalContext& ctx, int node,
                             const PrimTable* c0, const PrimTable* c1);

// Pure satisfiability checking: the same transitions with every piece of
// certificate logic dropped, counting classical models.
inline IncTable sat_inc_transition(const TraversalContext& ctx, int node,
                                   const IncTable* c0, const IncTable* c1) {
  return inc_transition(ctx, node, c0, c1, false);
}
inline PrimTable sat_prim_transition(const TraversalContext& ctx, int node,
                                     const PrimTable* c0,
                                     const PrimTable* c1) {
  return prim_transition(ctx, node, c0, c1, false);
}

// Root-table keys that witness acceptance.
IncKey inc_accepting_key();
PrimKey prim_accepting_key();
PrimKey invprim_accepting_key();

}  // namespace dynacount

#endif
