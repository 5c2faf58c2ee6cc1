#ifndef DYNACOUNT_TEST_SUPPORT_HPP
#define DYNACOUNT_TEST_SUPPORT_HPP

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "dynacount/decomposition.hpp"
#include "dynacount/engine.hpp"
#include "dynacount/graph.hpp"
#include "dynacount/program.hpp"

namespace dynacount::test {

// Seeded random ground programs for the oracle-equivalence suites.
// Disjunctive heads, negation, occasional head/body overlaps, and atoms
// that occur in no rule are all exercised.
inline GroundProgram random_program(uint64_t seed, int max_atoms = 8,
                                    int max_rules = 10) {
  std::mt19937_64 rng(seed);
  int n_atoms = 1 + static_cast<int>(rng() % max_atoms);
  int n_rules = static_cast<int>(rng() % (max_rules + 1));
  ProgramBuilder b;
  std::vector<AtomId> ids;
  for (int a = 0; a < n_atoms; ++a) ids.push_back(b.atom("a" + std::to_string(a)));
  for (int r = 0; r < n_rules; ++r) {
    std::vector<AtomId> head, pos, neg;
    for (AtomId a : ids) {
      switch (rng() % 8) {
        case 0: head.push_back(a); break;
        case 1: pos.push_back(a); break;
        case 2: neg.push_back(a); break;
        default: break;
      }
    }
    if (rng() % 10 == 0 && !head.empty()) pos.push_back(head[0]);
    if (rng() % 10 == 0 && !pos.empty()) neg.push_back(pos[0]);
    if (head.empty() && pos.empty() && neg.empty()) continue;
    b.rule(std::move(head), std::move(pos), std::move(neg));
  }
  return b.finish();
}

// Seeded G(n, m)-style random graph as a primal-form ProblemGraph.
inline ProblemGraph random_graph(uint64_t seed, int max_n = 200) {
  std::mt19937_64 rng(seed);
  int n = 1 + static_cast<int>(rng() % max_n);
  int m = static_cast<int>(rng() % (3 * n + 1));
  ProblemGraph g;
  g.form = GraphForm::primal;
  g.num_atoms = n;
  g.adj.resize(n);
  for (int e = 0; e < m; ++e) {
    int u = static_cast<int>(rng() % n);
    int v = static_cast<int>(rng() % n);
    if (u == v) continue;
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& a : g.adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return g;
}

// Exact treewidth by Held-Karp style elimination DP; exponential, for
// cross-checking heuristics on tiny graphs only (n <= ~14).
inline int exact_treewidth(const ProblemGraph& g) {
  int n = g.vertex_count();
  if (n == 0) return -1;
  std::vector<uint32_t> nb(n, 0);
  for (int v = 0; v < n; ++v)
    for (int w : g.adj[v]) nb[v] |= 1u << w;
  // f[S] = min over orders eliminating S first of the max degree seen,
  // where eliminating v from the graph with S gone has degree
  // |reachable-through-S neighbors of v outside S|.
  std::vector<int> f(size_t{1} << n, n);
  f[0] = -1;
  std::vector<int> q;
  for (uint32_t s = 1; s < (uint32_t{1} << n); ++s) {
    int best = n;
    for (int v = 0; v < n; ++v) {
      if (!((s >> v) & 1)) continue;
      uint32_t rest = s & ~(1u << v);
      // neighbors of v in the graph where rest is eliminated: BFS through
      // rest, collecting neighbors outside s.
      uint32_t seen = 1u << v;
      uint32_t frontier = nb[v];
      uint32_t outside = 0;
      while (frontier & ~seen) {
        uint32_t fresh = frontier & ~seen;
        seen |= fresh;
        frontier = 0;
        outside |= fresh & ~rest;
        uint32_t through = fresh & rest;
        while (through) {
          int u = std::countr_zero(through);
          through &= through - 1;
          frontier |= nb[u];
        }
      }
      outside &= ~(1u << v);
      int deg = std::popcount(outside);
      best = std::min(best, std::max(f[rest], deg));
    }
    f[s] = best;
  }
  return f[(uint32_t{1} << n) - 1];
}

// All subset-minimal classical models, as masks; independent of the
// answer-set machinery.
inline std::vector<uint32_t> minimal_models(const GroundProgram& p) {
  size_t n = p.atom_count();
  std::vector<uint32_t> models;
  for (uint32_t m = 0; m < (uint32_t{1} << n); ++m) {
    Interpretation i(n);
    for (size_t a = 0; a < n; ++a)
      if ((m >> a) & 1) i.set(a);
    if (is_model(i, p)) models.push_back(m);
  }
  std::vector<uint32_t> out;
  for (uint32_t m : models) {
    bool minimal = true;
    for (uint32_t o : models)
      if (o != m && (o & ~m) == 0) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(m);
  }
  return out;
}

// Rule multiset over atom names, order-insensitive; two programs with the
// same signature are isomorphic in the sense of the round-trip contract.
inline std::string canonical_signature(const GroundProgram& p) {
  std::vector<std::string> rules;
  auto names = [&](const std::vector<AtomId>& ids) {
    std::vector<std::string> ns;
    for (AtomId a : ids) ns.push_back(p.atoms[a].name);
    std::sort(ns.begin(), ns.end());
    std::string out;
    for (const auto& s : ns) out += s + ",";
    return out;
  };
  for (const Rule& r : p.rules)
    rules.push_back(names(r.head) + "|" + names(r.pos_body) + "|" +
                    names(r.neg_body));
  std::sort(rules.begin(), rules.end());
  std::string out;
  for (const auto& s : rules) out += s + "\n";
  return out;
}

// Decompose-normalize-traverse with fixed defaults for tests.
inline Count dp_count(const GroundProgram& p, Algorithm alg,
                      Heuristic h = Heuristic::min_fill, uint64_t seed = 1) {
  ProblemGraph g = alg == Algorithm::inc ? incidence_graph(p) : primal_graph(p);
  NiceTreeDecomposition ntd = normalize(decompose(g, h, seed), g);
  return traverse(ntd, p, alg).first;
}

}  // namespace dynacount::test

#endif
