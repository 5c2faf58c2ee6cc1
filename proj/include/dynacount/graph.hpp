#ifndef DYNACOUNT_GRAPH_HPP
#define DYNACOUNT_GRAPH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dynacount/program.hpp"

namespace dynacount {

enum class GraphForm { incidence, primal };
enum class VertexKind { atom, rule };

// Undirected simple graph over typed vertices. For the incidence form,
// vertices 0..|A|-1 are atoms and |A|..|A|+|R|-1 are rules; the primal
// form only has atom vertices.
struct ProblemGraph {
  GraphForm form = GraphForm::primal;
  size_t num_atoms = 0;
  size_t num_rules = 0;  // zero for the primal form
  std::vector<std::vector<int>> adj;  // sorted neighbor lists

  int vertex_count() const { return static_cast<int>(adj.size()); }
  size_t edge_count() const;
  bool has_edge(int u, int v) const;

  VertexKind kind(int v) const {
    return static_cast<size_t>(v) < num_atoms ? VertexKind::atom
                                              : VertexKind::rule;
  }
  AtomId atom_of(int v) const { return static_cast<AtomId>(v); }
  RuleId rule_of(int v) const {
    return static_cast<RuleId>(v - static_cast<int>(num_atoms));
  }
  int vertex_of_atom(AtomId a) const { return static_cast<int>(a); }
  int vertex_of_rule(RuleId r) const {
    return static_cast<int>(num_atoms + r);
  }
};

// Bipartite atom-rule graph: an edge iff the atom occurs in the rule.
ProblemGraph incidence_graph(const GroundProgram& p);

// Atoms of each rule form a clique; isolated atoms stay as vertices.
ProblemGraph primal_graph(const GroundProgram& p);

// Debug output, non-normative.
std::string to_dot(const ProblemGraph& g, const GroundProgram& p);

}  // namespace dynacount

#endif
