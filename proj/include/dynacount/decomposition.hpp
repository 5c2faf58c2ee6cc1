#ifndef DYNACOUNT_DECOMPOSITION_HPP
#define DYNACOUNT_DECOMPOSITION_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "dynacount/graph.hpp"

namespace dynacount {

struct TreeDecomposition {
  std::vector<std::vector<int>> bags;  // graph vertex ids, sorted
  std::vector<int> parent;             // -1 at the root
  std::vector<std::vector<int>> children;
  int root = -1;

  int node_count() const { return static_cast<int>(bags.size()); }
  int width() const;
};

enum class Heuristic { min_fill, min_degree };

// Elimination-ordering decomposition; ties in the heuristic score are
// broken uniformly with a seeded PRNG, so results are deterministic per
// (graph, heuristic, seed).
TreeDecomposition decompose(const ProblemGraph& g, Heuristic h, uint64_t seed);

enum class NodeKind {
  leaf,
  join,
  atom_intro,
  atom_remove,
  rule_intro,
  rule_remove
};

const char* node_kind_name(NodeKind k);

class MalformedNiceTD : public std::logic_error {
 public:
  explicit MalformedNiceTD(const std::string& msg) : std::logic_error(msg) {}
};

struct NiceNode {
  NodeKind kind = NodeKind::leaf;
  int delta = -1;  // graph vertex added/removed vs. the child bag
  int child0 = -1;
  int child1 = -1;
  std::vector<AtomId> atoms;  // sorted bag atoms
  std::vector<RuleId> rules;  // sorted bag rules (empty on primal bags)

  size_t bag_size() const { return atoms.size() + rules.size(); }
};

struct NiceTreeDecomposition {
  GraphForm form = GraphForm::primal;
  std::vector<NiceNode> nodes;
  int root = -1;
  int width = -1;
  std::vector<int> post_order;  // children precede parents

  int node_count() const { return static_cast<int>(nodes.size()); }
};

// Normalized form with empty root and leaf bags; never increases width.
NiceTreeDecomposition normalize(const TreeDecomposition& td,
                                const ProblemGraph& g);

// Recomputes the kind of a node from its structure alone.
NodeKind classify_node(const NiceTreeDecomposition& ntd, int node);

// Empty result iff td satisfies the three decomposition conditions for g.
std::vector<std::string> validate(const TreeDecomposition& td,
                                  const ProblemGraph& g);

// Decomposition conditions plus the normalization conditions.
std::vector<std::string> validate_nice(const NiceTreeDecomposition& ntd,
                                       const ProblemGraph& g);

// PACE-style .td text for external inspection.
std::string to_td_format(const TreeDecomposition& td, const ProblemGraph& g);

}  // namespace dynacount

#endif
