#include "dynacount/engine.hpp"

#include <algorithm>
#include <chrono>
#include <memory>

namespace dynacount {

const char* algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::inc: return "inc";
    case Algorithm::prim: return "prim";
    case Algorithm::invprim: return "invprim";
    case Algorithm::satmode: return "satmode";
  }
  return "?";
}

TraversalContext::TraversalContext(const NiceTreeDecomposition& t,
                                   const GroundProgram& prog)
    : td(&t), p(&prog), atom_rules(prog.atom_count()) {
  for (const Rule& r : prog.rules)
    for (AtomId a : r.atoms()) atom_rules[a].push_back(r.id);
}

std::vector<RuleId> induced_rules(const std::vector<AtomId>& bag_atoms,
                                  const GroundProgram& p) {
  std::vector<RuleId> out;
  for (const Rule& r : p.rules) {
    bool inside = true;
    for (AtomId a : r.atoms())
      if (!std::binary_search(bag_atoms.begin(), bag_atoms.end(), a)) {
        inside = false;
        break;
      }
    if (inside) out.push_back(r.id);
  }
  return out;
}

namespace {

template <typename Table, typename Transition, typename Key>
Count run_tables(const NiceTreeDecomposition& td, const TraversalContext& ctx,
                 Transition&& step, const Key& accept, RunStats& st) {
  std::vector<std::unique_ptr<Table>> tables(td.node_count());
  for (int v : td.post_order) {
    const NiceNode& nd = td.nodes[v];
    const Table* c0 = nd.child0 >= 0 ? tables[nd.child0].get() : nullptr;
    const Table* c1 = nd.child1 >= 0 ? tables[nd.child1].get() : nullptr;
    tables[v] = std::make_unique<Table>(step(ctx, v, c0, c1));
    st.max_table = std::max(st.max_table, tables[v]->size());
    st.tuples_total += tables[v]->size();
    if (nd.child0 >= 0) tables[nd.child0].reset();
    if (nd.child1 >= 0) tables[nd.child1].reset();
  }
  const Table& root = *tables[td.root];
  auto it = root.find(accept);
  return it == root.end() ? Count(0) : it->second;
}

}  // namespace

std::pair<Count, RunStats> traverse(const NiceTreeDecomposition& td,
                                    const GroundProgram& p, Algorithm alg) {
  if (alg == Algorithm::inc && td.form != GraphForm::incidence)
    throw GraphKindMismatch("INC requires an incidence-graph decomposition");
  if ((alg == Algorithm::prim || alg == Algorithm::invprim) &&
      td.form != GraphForm::primal)
    throw GraphKindMismatch(
        std::string(algorithm_name(alg)) +
        " requires a primal-graph decomposition");
  for (const NiceNode& nd : td.nodes)
    if (nd.atoms.size() > 32 || nd.rules.size() > 32)
      throw std::runtime_error("bag exceeds the 32-element engine limit");

  TraversalContext ctx(td, p);
  bool primal_family = td.form == GraphForm::primal;
  if (primal_family) ctx.rule_covered.assign(p.rule_count(), 0);

  RunStats st;
  st.width = td.width;
  st.nodes = td.node_count();

  auto start = std::chrono::steady_clock::now();
  Count result;
  if (!primal_family) {
    bool certs = alg != Algorithm::satmode;
    result = run_tables<IncTable>(
        td, ctx,
        [certs](const TraversalContext& c, int v, const IncTable* a,
                const IncTable* b) { return inc_transition(c, v, a, b, certs); },
        inc_accepting_key(), st);
  } else if (alg == Algorithm::invprim) {
    result = run_tables<PrimTable>(
        td, ctx,
        [](const TraversalContext& c, int v, const PrimTable* a,
           const PrimTable* b) { return invprim_transition(c, v, a, b); },
        invprim_accepting_key(), st);
  } else {
    bool certs = alg != Algorithm::satmode;
    result = run_tables<PrimTable>(
        td, ctx,
        [certs](const TraversalContext& c, int v, const PrimTable* a,
                const PrimTable* b) {
          return prim_transition(c, v, a, b, certs);
        },
        prim_accepting_key(), st);
  }
  st.traverse_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();

  if (primal_family) {
    size_t covered = 0;
    for (char c : ctx.rule_covered) covered += c;
    st.rules_covered = covered;
    if (covered != p.rule_count())
      throw std::logic_error(
          "decomposition failed to induce every rule in some bag");
  }
  return {std::move(result), st};
}

}  // namespace dynacount
