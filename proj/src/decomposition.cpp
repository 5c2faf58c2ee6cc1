#include "dynacount/decomposition.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace dynacount {

int TreeDecomposition::width() const {
  size_t largest = 0;
  for (const auto& b : bags) largest = std::max(largest, b.size());
  return static_cast<int>(largest) - 1;
}

const char* node_kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::leaf: return "LEAF";
    case NodeKind::join: return "JOIN";
    case NodeKind::atom_intro: return "AI";
    case NodeKind::atom_remove: return "AR";
    case NodeKind::rule_intro: return "RI";
    case NodeKind::rule_remove: return "RR";
  }
  return "?";
}

namespace {

class EliminationState {
 public:
  explicit EliminationState(const ProblemGraph& g)
      : n_(g.vertex_count()), adj_(g.adj), alive_(n_, true) {}

  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  // Number of non-adjacent pairs within N(v).
  long long fill(int v) const {
    const auto& nb = adj_[v];
    long long pairs = static_cast<long long>(nb.size()) *
                      static_cast<long long>(nb.size() - 1) / 2;
    long long adjacent = 0;
    for (int x : nb) {
      // count neighbors of x that are also in nb and larger than x
      const auto& nx = adj_[x];
      size_t i = 0, j = 0;
      while (i < nx.size() && j < nb.size()) {
        if (nx[i] < nb[j]) {
          ++i;
        } else if (nx[i] > nb[j]) {
          ++j;
        } else {
          if (nx[i] > x) ++adjacent;
          ++i;
          ++j;
        }
      }
    }
    return pairs - adjacent;
  }

  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool alive(int v) const { return alive_[v]; }
  int vertex_count() const { return n_; }

  // Removes v, turning N(v) into a clique. Returns the set of vertices
  // whose heuristic score may have changed.
  std::vector<int> eliminate(int v) {
    std::vector<int> nb = adj_[v];
    for (int x : nb) erase_sorted(adj_[x], v);
    adj_[v].clear();
    alive_[v] = false;
    std::set<int> affected(nb.begin(), nb.end());
    for (size_t i = 0; i < nb.size(); ++i)
      for (size_t j = i + 1; j < nb.size(); ++j)
        if (insert_sorted(adj_[nb[i]], nb[j])) {
          insert_sorted(adj_[nb[j]], nb[i]);
          // a new edge changes the fill count of common neighbors
          for (int z : adj_[nb[i]])
            if (alive_[z]) affected.insert(z);
          for (int z : adj_[nb[j]])
            if (alive_[z]) affected.insert(z);
        }
    return {affected.begin(), affected.end()};
  }

 private:
  static void erase_sorted(std::vector<int>& v, int x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it != v.end() && *it == x) v.erase(it);
  }

  static bool insert_sorted(std::vector<int>& v, int x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it != v.end() && *it == x) return false;
    v.insert(it, x);
    return true;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<bool> alive_;
};

}  // namespace

TreeDecomposition decompose(const ProblemGraph& g, Heuristic h,
                            uint64_t seed) {
  int n = g.vertex_count();
  TreeDecomposition td;
  if (n == 0) {
    td.bags.push_back({});
    td.parent.push_back(-1);
    td.children.resize(1);
    td.root = 0;
    return td;
  }

  EliminationState state(g);
  std::mt19937_64 rng(seed);
  std::vector<long long> score(n);
  for (int v = 0; v < n; ++v)
    score[v] = h == Heuristic::min_fill ? state.fill(v) : state.degree(v);

  std::vector<int> order;
  std::vector<int> elim_pos(n, -1);
  std::vector<std::vector<int>> elim_bag(n);
  order.reserve(n);

  std::vector<int> ties;
  for (int step = 0; step < n; ++step) {
    long long best = -1;
    ties.clear();
    for (int v = 0; v < n; ++v) {
      if (!state.alive(v)) continue;
      if (best < 0 || score[v] < best) {
        best = score[v];
        ties.clear();
        ties.push_back(v);
      } else if (score[v] == best) {
        ties.push_back(v);
      }
    }
    int v = ties[rng() % ties.size()];
    elim_pos[v] = step;
    order.push_back(v);
    elim_bag[v] = state.neighbors(v);
    elim_bag[v].push_back(v);
    std::sort(elim_bag[v].begin(), elim_bag[v].end());
    for (int x : state.eliminate(v))
      score[x] = h == Heuristic::min_fill ? state.fill(x) : state.degree(x);
  }

  // One bag per vertex; the parent is the bag of the earliest-eliminated
  // remaining neighbor, which yields a valid decomposition. Components
  // without such a neighbor become roots and are chained under the bag of
  // the last-eliminated vertex.
  td.bags.resize(n);
  td.parent.assign(n, -1);
  td.children.resize(n);
  for (int v = 0; v < n; ++v) td.bags[v] = elim_bag[v];
  std::vector<int> roots;
  for (int v = 0; v < n; ++v) {
    int parent = -1, best_pos = n;
    for (int x : elim_bag[v]) {
      if (x == v) continue;
      if (elim_pos[x] > elim_pos[v] && elim_pos[x] < best_pos) {
        best_pos = elim_pos[x];
        parent = x;
      }
    }
    if (parent < 0)
      roots.push_back(v);
    else
      td.parent[v] = parent;
  }
  td.root = order.back();
  for (int r : roots)
    if (r != td.root) td.parent[r] = td.root;
  for (int v = 0; v < n; ++v)
    if (td.parent[v] >= 0) td.children[td.parent[v]].push_back(v);
  return td;
}

namespace {

// Contracts tree edges whose bags are in a subset relation. Keeps the
// decomposition valid and tends to shrink the nice form considerably.
TreeDecomposition compress(const TreeDecomposition& in) {
  int n = in.node_count();
  std::vector<std::vector<int>> bags = in.bags;
  std::vector<int> parent = in.parent;
  std::vector<bool> gone(n, false);

  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (gone[v] || parent[v] < 0) continue;
      int p = parent[v];
      while (gone[p]) p = parent[p];
      parent[v] = p;
      const auto& a = bags[v];
      const auto& b = bags[p];
      bool v_sub = std::includes(b.begin(), b.end(), a.begin(), a.end());
      bool p_sub = std::includes(a.begin(), a.end(), b.begin(), b.end());
      if (!v_sub && !p_sub) continue;
      if (p_sub) bags[p] = bags[v];
      gone[v] = true;
      for (int w = 0; w < n; ++w)
        if (!gone[w] && parent[w] == v) parent[w] = p;
      changed = true;
    }
  }

  TreeDecomposition out;
  std::vector<int> remap(n, -1);
  for (int v = 0; v < n; ++v) {
    if (gone[v]) continue;
    remap[v] = out.node_count();
    out.bags.push_back(bags[v]);
    out.parent.push_back(-1);
  }
  out.children.resize(out.node_count());
  out.root = -1;
  for (int v = 0; v < n; ++v) {
    if (gone[v]) continue;
    int p = parent[v];
    while (p >= 0 && gone[p]) p = parent[p];
    if (p < 0) {
      out.root = remap[v];
    } else {
      out.parent[remap[v]] = remap[p];
      out.children[remap[p]].push_back(remap[v]);
    }
  }
  return out;
}

class NiceBuilder {
 public:
  NiceBuilder(const ProblemGraph& g) : g_(g) {}

  std::vector<NiceNode> take_nodes() { return std::move(nodes_); }

  int make_leaf() {
    NiceNode node;
    node.kind = NodeKind::leaf;
    return push(std::move(node));
  }

  // Chain of one-element changes taking the bag at `below` to `target`.
  // Removals run first (rules, then atoms), then introductions (atoms,
  // then rules), so rule vertices spend as little time in bags as needed.
  int adapt(int below, const std::vector<int>& target) {
    std::vector<int> have = bag_vertices(below);
    std::vector<int> to_remove, to_add;
    std::set_difference(have.begin(), have.end(), target.begin(), target.end(),
                        std::back_inserter(to_remove));
    std::set_difference(target.begin(), target.end(), have.begin(), have.end(),
                        std::back_inserter(to_add));
    std::stable_partition(to_remove.begin(), to_remove.end(),
                          [&](int v) { return g_.kind(v) == VertexKind::rule; });
    std::stable_partition(to_add.begin(), to_add.end(),
                          [&](int v) { return g_.kind(v) == VertexKind::atom; });
    int cur = below;
    for (int v : to_remove) cur = change(cur, v, /*add=*/false);
    for (int v : to_add) cur = change(cur, v, /*add=*/true);
    return cur;
  }

  int join(int left, int right) {
    NiceNode node;
    node.kind = NodeKind::join;
    node.child0 = left;
    node.child1 = right;
    node.atoms = nodes_[left].atoms;
    node.rules = nodes_[left].rules;
    return push(std::move(node));
  }

 private:
  int change(int below, int vertex, bool add) {
    NiceNode node;
    node.child0 = below;
    node.delta = vertex;
    node.atoms = nodes_[below].atoms;
    node.rules = nodes_[below].rules;
    bool is_atom = g_.kind(vertex) == VertexKind::atom;
    auto& list = is_atom ? node.atoms : node.rules;
    uint32_t element =
        is_atom ? g_.atom_of(vertex) : g_.rule_of(vertex);
    auto it = std::lower_bound(list.begin(), list.end(), element);
    if (add) {
      list.insert(it, element);
      node.kind = is_atom ? NodeKind::atom_intro : NodeKind::rule_intro;
    } else {
      list.erase(it);
      node.kind = is_atom ? NodeKind::atom_remove : NodeKind::rule_remove;
    }
    return push(std::move(node));
  }

  std::vector<int> bag_vertices(int node) const {
    std::vector<int> out;
    for (AtomId a : nodes_[node].atoms) out.push_back(g_.vertex_of_atom(a));
    for (RuleId r : nodes_[node].rules) out.push_back(g_.vertex_of_rule(r));
    std::sort(out.begin(), out.end());
    return out;
  }

  int push(NiceNode node) {
    nodes_.push_back(std::move(node));
    return static_cast<int>(nodes_.size()) - 1;
  }

  const ProblemGraph& g_;
  std::vector<NiceNode> nodes_;
};

}  // namespace

NiceTreeDecomposition normalize(const TreeDecomposition& raw,
                                const ProblemGraph& g) {
  TreeDecomposition td = compress(raw);
  NiceBuilder builder(g);

  // Post-order over the raw tree, iterative to cope with deep chains.
  std::vector<int> raw_post;
  {
    std::vector<std::pair<int, size_t>> stack{{td.root, 0}};
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < td.children[v].size()) {
        int c = td.children[v][next++];
        stack.emplace_back(c, 0);
      } else {
        raw_post.push_back(v);
        stack.pop_back();
      }
    }
  }

  std::vector<int> built(td.node_count(), -1);
  for (int v : raw_post) {
    const auto& bag = td.bags[v];
    int acc = -1;
    for (int c : td.children[v]) {
      int branch = builder.adapt(built[c], bag);
      acc = acc < 0 ? branch : builder.join(acc, branch);
    }
    if (acc < 0) acc = builder.adapt(builder.make_leaf(), bag);
    built[v] = acc;
  }
  int top = builder.adapt(built[td.root], {});

  NiceTreeDecomposition ntd;
  ntd.form = g.form;
  ntd.nodes = builder.take_nodes();
  ntd.root = top;

  size_t largest = 0;
  for (const NiceNode& n : ntd.nodes)
    largest = std::max(largest, n.bag_size());
  ntd.width = static_cast<int>(largest) - 1;

  ntd.post_order.reserve(ntd.nodes.size());
  {
    std::vector<std::pair<int, int>> stack{{ntd.root, 0}};
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      const NiceNode& node = ntd.nodes[v];
      int child = next == 0 ? node.child0 : (next == 1 ? node.child1 : -1);
      if (child >= 0) {
        ++next;
        stack.emplace_back(child, 0);
      } else if (next == 0 && node.child1 >= 0) {
        ++next;  // child0 absent but child1 set; does not occur by build
      } else {
        ntd.post_order.push_back(v);
        stack.pop_back();
      }
    }
  }
  return ntd;
}

NodeKind classify_node(const NiceTreeDecomposition& ntd, int node) {
  const NiceNode& n = ntd.nodes[node];
  if (n.child0 < 0 && n.child1 < 0) {
    if (!n.atoms.empty() || !n.rules.empty())
      throw MalformedNiceTD("childless node with non-empty bag");
    return NodeKind::leaf;
  }
  if (n.child0 >= 0 && n.child1 >= 0) {
    const NiceNode& a = ntd.nodes[n.child0];
    const NiceNode& b = ntd.nodes[n.child1];
    if (a.atoms != n.atoms || a.rules != n.rules || b.atoms != n.atoms ||
        b.rules != n.rules)
      throw MalformedNiceTD("join node with differing bags");
    return NodeKind::join;
  }
  const NiceNode& c = ntd.nodes[n.child0];
  auto delta = [](const auto& child, const auto& parent) {
    std::vector<uint32_t> d;
    std::set_symmetric_difference(child.begin(), child.end(), parent.begin(),
                                  parent.end(), std::back_inserter(d));
    return d;
  };
  std::vector<uint32_t> da = delta(c.atoms, n.atoms);
  std::vector<uint32_t> dr = delta(c.rules, n.rules);
  if (da.size() + dr.size() != 1)
    throw MalformedNiceTD("one-child node not differing in exactly one element");
  if (da.size() == 1)
    return n.atoms.size() > c.atoms.size() ? NodeKind::atom_intro
                                           : NodeKind::atom_remove;
  return n.rules.size() > c.rules.size() ? NodeKind::rule_intro
                                         : NodeKind::rule_remove;
}

namespace {

void check_core_conditions(const std::vector<std::vector<int>>& bags,
                           const std::vector<std::vector<int>>& children,
                           int root, const ProblemGraph& g,
                           std::vector<std::string>& out) {
  int n = g.vertex_count();
  int m = static_cast<int>(bags.size());

  std::vector<std::vector<int>> occurs(n);
  for (int t = 0; t < m; ++t)
    for (int v : bags[t]) {
      if (v < 0 || v >= n) {
        out.push_back("bag " + std::to_string(t) + " holds unknown vertex " +
                      std::to_string(v));
        continue;
      }
      occurs[v].push_back(t);
    }

  for (int v = 0; v < n; ++v)
    if (occurs[v].empty())
      out.push_back("condition (i): vertex " + std::to_string(v) +
                    " is in no bag");

  for (int u = 0; u < n; ++u)
    for (int v : g.adj[u]) {
      if (v < u) continue;
      bool covered = false;
      for (int t : occurs[u]) {
        if (std::binary_search(bags[t].begin(), bags[t].end(), v)) {
          covered = true;
          break;
        }
      }
      if (!covered)
        out.push_back("condition (ii): edge {" + std::to_string(u) + "," +
                      std::to_string(v) + "} is in no bag");
    }

  // Connectedness: flood from one occurrence, staying inside the set.
  std::vector<int> parent_of(m, -1);
  {
    std::vector<std::pair<int, size_t>> stack{{root, 0}};
    while (!stack.empty()) {
      auto& [t, next] = stack.back();
      if (next < children[t].size()) {
        int c = children[t][next++];
        parent_of[c] = t;
        stack.emplace_back(c, 0);
      } else {
        stack.pop_back();
      }
    }
  }
  std::vector<char> in_set(m, 0), seen(m, 0);
  for (int v = 0; v < n; ++v) {
    if (occurs[v].size() <= 1) continue;
    for (int t : occurs[v]) in_set[t] = 1;
    std::vector<int> stack{occurs[v][0]};
    seen[occurs[v][0]] = 1;
    size_t reached = 0;
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      ++reached;
      auto visit = [&](int u) {
        if (u >= 0 && in_set[u] && !seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      };
      visit(parent_of[t]);
      for (int c : children[t]) visit(c);
    }
    if (reached != occurs[v].size())
      out.push_back("condition (iii): occurrences of vertex " +
                    std::to_string(v) + " are disconnected");
    for (int t : occurs[v]) in_set[t] = 0, seen[t] = 0;
  }
}

}  // namespace

std::vector<std::string> validate(const TreeDecomposition& td,
                                  const ProblemGraph& g) {
  std::vector<std::string> out;
  check_core_conditions(td.bags, td.children, td.root, g, out);
  return out;
}

std::vector<std::string> validate_nice(const NiceTreeDecomposition& ntd,
                                       const ProblemGraph& g) {
  std::vector<std::string> out;
  std::vector<std::vector<int>> bags(ntd.node_count());
  std::vector<std::vector<int>> children(ntd.node_count());
  for (int i = 0; i < ntd.node_count(); ++i) {
    const NiceNode& n = ntd.nodes[i];
    for (AtomId a : n.atoms) bags[i].push_back(g.vertex_of_atom(a));
    for (RuleId r : n.rules) bags[i].push_back(g.vertex_of_rule(r));
    std::sort(bags[i].begin(), bags[i].end());
    if (n.child0 >= 0) children[i].push_back(n.child0);
    if (n.child1 >= 0) children[i].push_back(n.child1);
  }
  check_core_conditions(bags, children, ntd.root, g, out);

  if (!ntd.nodes[ntd.root].atoms.empty() || !ntd.nodes[ntd.root].rules.empty())
    out.push_back("root bag is not empty");
  for (int i = 0; i < ntd.node_count(); ++i) {
    try {
      NodeKind k = classify_node(ntd, i);
      if (k != ntd.nodes[i].kind)
        out.push_back("node " + std::to_string(i) + " labeled " +
                      node_kind_name(ntd.nodes[i].kind) + " but classifies as " +
                      node_kind_name(k));
      if (ntd.form == GraphForm::primal &&
          (k == NodeKind::rule_intro || k == NodeKind::rule_remove))
        out.push_back("rule node in a primal-graph decomposition");
    } catch (const MalformedNiceTD& e) {
      out.push_back("node " + std::to_string(i) + ": " + e.what());
    }
  }
  return out;
}

std::string to_td_format(const TreeDecomposition& td, const ProblemGraph& g) {
  size_t largest = 0;
  for (const auto& b : td.bags) largest = std::max(largest, b.size());
  std::string out = "s td " + std::to_string(td.node_count()) + " " +
                    std::to_string(largest) + " " +
                    std::to_string(g.vertex_count()) + "\n";
  for (int t = 0; t < td.node_count(); ++t) {
    out += "b " + std::to_string(t + 1);
    for (int v : td.bags[t]) out += " " + std::to_string(v + 1);
    out += "\n";
  }
  for (int t = 0; t < td.node_count(); ++t)
    if (td.parent[t] >= 0)
      out += std::to_string(td.parent[t] + 1) + " " + std::to_string(t + 1) +
             "\n";
  return out;
}

}  // namespace dynacount
