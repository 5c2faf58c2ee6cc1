#include "dynacount/graph.hpp"

#include <algorithm>

namespace dynacount {

size_t ProblemGraph::edge_count() const {
  size_t deg = 0;
  for (const auto& n : adj) deg += n.size();
  return deg / 2;
}

bool ProblemGraph::has_edge(int u, int v) const {
  const auto& n = adj[u];
  return std::binary_search(n.begin(), n.end(), v);
}

namespace {

void finalize_adj(ProblemGraph& g) {
  for (auto& n : g.adj) {
    std::sort(n.begin(), n.end());
    n.erase(std::unique(n.begin(), n.end()), n.end());
  }
}

}  // namespace

ProblemGraph incidence_graph(const GroundProgram& p) {
  ProblemGraph g;
  g.form = GraphForm::incidence;
  g.num_atoms = p.atom_count();
  g.num_rules = p.rule_count();
  g.adj.resize(g.num_atoms + g.num_rules);
  for (const Rule& r : p.rules) {
    int rv = g.vertex_of_rule(r.id);
    for (AtomId a : r.atoms()) {
      g.adj[a].push_back(rv);
      g.adj[rv].push_back(static_cast<int>(a));
    }
  }
  finalize_adj(g);
  return g;
}

ProblemGraph primal_graph(const GroundProgram& p) {
  ProblemGraph g;
  g.form = GraphForm::primal;
  g.num_atoms = p.atom_count();
  g.adj.resize(g.num_atoms);
  for (const Rule& r : p.rules) {
    std::vector<AtomId> as = r.atoms();
    for (size_t i = 0; i < as.size(); ++i)
      for (size_t j = i + 1; j < as.size(); ++j) {
        g.adj[as[i]].push_back(static_cast<int>(as[j]));
        g.adj[as[j]].push_back(static_cast<int>(as[i]));
      }
  }
  finalize_adj(g);
  return g;
}

std::string to_dot(const ProblemGraph& g, const GroundProgram& p) {
  std::string out = "graph program {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out += "  v" + std::to_string(v) + " [label=\"";
    if (g.kind(v) == VertexKind::atom)
      out += p.atoms[g.atom_of(v)].name;
    else
      out += "r" + std::to_string(g.rule_of(v) + 1) + "\" shape=box";
    if (g.kind(v) == VertexKind::atom) out += "\"";
    out += "];\n";
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int w : g.adj[v])
      if (v < w)
        out += "  v" + std::to_string(v) + " -- v" + std::to_string(w) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace dynacount
