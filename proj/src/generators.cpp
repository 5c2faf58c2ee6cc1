#include "dynacount/generators.hpp"

#include <cctype>
#include <random>

namespace dynacount {

namespace {

double uniform_coin(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int signed_lit(std::mt19937_64& rng, int var) {
  return (rng() & 1) ? var : -var;
}

Cnf sat_tgrid_stream(const TGridParams& p, std::mt19937_64& rng) {
  Cnf cnf;
  cnf.num_vars = p.rows * p.cols;
  for (int i = 2; i <= p.rows; ++i) {
    for (int j = 2; j <= p.cols; ++j) {
      if (uniform_coin(rng) >= p.clause_prob) continue;
      int v = tgrid_var(p, i, j);
      int up = tgrid_var(p, i - 1, j);
      int left = tgrid_var(p, i, j - 1);
      int diag = tgrid_var(p, i - 1, j - 1);
      Clause3 c1{{signed_lit(rng, v), signed_lit(rng, up), signed_lit(rng, left)}};
      Clause3 c2{{signed_lit(rng, v), signed_lit(rng, up), signed_lit(rng, diag)}};
      Clause3 c3{{signed_lit(rng, v), signed_lit(rng, diag), signed_lit(rng, left)}};
      cnf.clauses.push_back(c1);
      cnf.clauses.push_back(c2);
      cnf.clauses.push_back(c3);
    }
  }
  return cnf;
}

}  // namespace

Cnf gen_sat_tgrid(const TGridParams& p) {
  std::mt19937_64 rng(p.seed);
  return sat_tgrid_stream(p, rng);
}

namespace {

std::vector<std::string> default_var_names(const Cnf& cnf,
                                           const std::vector<std::string>& given) {
  if (!given.empty()) return given;
  std::vector<std::string> names;
  names.reserve(cnf.num_vars);
  for (int v = 1; v <= cnf.num_vars; ++v)
    names.push_back("x(" + std::to_string(v) + ")");
  return names;
}

std::vector<std::string> tgrid_var_names(const TGridParams& p) {
  std::vector<std::string> names;
  names.reserve(p.rows * p.cols);
  for (int i = 1; i <= p.rows; ++i)
    for (int j = 1; j <= p.cols; ++j)
      names.push_back("x(" + std::to_string(i) + "," + std::to_string(j) + ")");
  return names;
}

}  // namespace

GroundProgram asp_from_cnf(const Cnf& cnf,
                           const std::vector<std::string>& var_names) {
  std::vector<std::string> names = default_var_names(cnf, var_names);
  ProgramBuilder b;
  std::vector<AtomId> pos_atom(cnf.num_vars), neg_atom(cnf.num_vars);
  for (int v = 0; v < cnf.num_vars; ++v) {
    pos_atom[v] = b.atom(names[v]);
    neg_atom[v] = b.atom("n" + names[v]);
    b.rule({pos_atom[v], neg_atom[v]}, {}, {});
    b.rule({}, {pos_atom[v], neg_atom[v]}, {});
  }
  for (const Clause3& c : cnf.clauses) {
    std::vector<AtomId> body;
    for (int lit : c.lits)
      body.push_back(lit > 0 ? neg_atom[lit - 1] : pos_atom[-lit - 1]);
    b.rule({}, std::move(body), {});
  }
  return b.finish();
}

GroundProgram gen_asp_tgrid(const TGridParams& p) {
  return asp_from_cnf(gen_sat_tgrid(p), tgrid_var_names(p));
}

QbfInstance gen_2qbf_tgrid(const TGridParams& p) {
  QbfInstance q;
  std::mt19937_64 rng(p.seed);
  q.cnf = sat_tgrid_stream(p, rng);
  // Block coins follow the clause stream, one per variable in row-major
  // order.
  q.in_exists.resize(q.cnf.num_vars);
  for (int v = 0; v < q.cnf.num_vars; ++v)
    q.in_exists[v] = uniform_coin(rng) < p.exists_prob ? 1 : 0;
  return q;
}

GroundProgram encode_exists_forall(const QbfInstance& qbf,
                                   const std::vector<std::string>& var_names) {
  std::vector<std::string> names = default_var_names(qbf.cnf, var_names);
  ProgramBuilder b;
  int nv = qbf.cnf.num_vars;
  std::vector<AtomId> pos_atom(nv), neg_atom(nv);
  for (int v = 0; v < nv; ++v) {
    pos_atom[v] = b.atom(names[v]);
    neg_atom[v] = b.atom("n" + names[v]);
  }
  size_t m = qbf.cnf.clauses.size();
  std::vector<AtomId> sat_atom(m);
  for (size_t c = 0; c < m; ++c)
    sat_atom[c] = b.atom("sat(" + std::to_string(c + 1) + ")");
  AtomId w = b.atom("w");

  for (int v = 0; v < nv; ++v) {
    b.rule({pos_atom[v], neg_atom[v]}, {}, {});
    if (qbf.in_exists[v]) b.rule({}, {pos_atom[v], neg_atom[v]}, {});
  }
  for (size_t c = 0; c < m; ++c)
    for (int lit : qbf.cnf.clauses[c].lits)
      b.rule({sat_atom[c]},
             {lit > 0 ? pos_atom[lit - 1] : neg_atom[-lit - 1]}, {});
  b.rule({w}, std::vector<AtomId>(sat_atom.begin(), sat_atom.end()), {});
  for (int v = 0; v < nv; ++v) {
    if (qbf.in_exists[v]) continue;
    b.rule({pos_atom[v]}, {w}, {});
    b.rule({neg_atom[v]}, {w}, {});
  }
  for (size_t c = 0; c < m; ++c) b.rule({sat_atom[c]}, {w}, {});
  b.rule({}, {}, {w});  // :- not w.
  return b.finish();
}

GroundProgram gen_2asp_tgrid(const TGridParams& p) {
  return encode_exists_forall(gen_2qbf_tgrid(p), tgrid_var_names(p));
}

namespace {

bool valid_const(const std::string& s) {
  if (s.empty()) return false;
  if (std::islower(static_cast<unsigned char>(s[0]))) {
    for (char c : s)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        return false;
    return true;
  }
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::vector<std::string> vertex_consts(const EdgeListGraph& g) {
  bool all_valid = true;
  for (const std::string& n : g.names)
    if (!valid_const(n)) {
      all_valid = false;
      break;
    }
  std::vector<std::string> out;
  out.reserve(g.names.size());
  for (size_t i = 0; i < g.names.size(); ++i)
    out.push_back(all_valid ? g.names[i] : "v" + std::to_string(i + 1));
  return out;
}

GroundProgram encode_coloring(const EdgeListGraph& g, int colors) {
  std::vector<std::string> names = vertex_consts(g);
  ProgramBuilder b;
  std::vector<std::vector<AtomId>> col(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int c = 1; c <= colors; ++c)
      col[v].push_back(b.atom("c(" + names[v] + "," + std::to_string(c) + ")"));
    b.rule(col[v], {}, {});
  }
  for (auto [u, v] : g.edges)
    for (int c = 0; c < colors; ++c) b.rule({}, {col[u][c], col[v][c]}, {});
  return b.finish();
}

}  // namespace

GroundProgram encode_graph_problem(GraphProblem problem,
                                   const EdgeListGraph& g) {
  switch (problem) {
    case GraphProblem::two_col:
      return encode_coloring(g, 2);
    case GraphProblem::three_col:
      return encode_coloring(g, 3);
    case GraphProblem::vertex_cover: {
      std::vector<std::string> names = vertex_consts(g);
      ProgramBuilder b;
      for (auto [u, v] : g.edges)
        b.rule({b.atom("in(" + names[u] + ")"), b.atom("in(" + names[v] + ")")},
               {}, {});
      return b.finish();
    }
    case GraphProblem::dominating_set: {
      std::vector<std::string> names = vertex_consts(g);
      ProgramBuilder b;
      std::vector<std::vector<int>> closed(g.vertex_count());
      for (int v = 0; v < g.vertex_count(); ++v) closed[v].push_back(v);
      for (auto [u, v] : g.edges) {
        closed[u].push_back(v);
        closed[v].push_back(u);
      }
      for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<AtomId> head;
        for (int u : closed[v]) head.push_back(b.atom("d(" + names[u] + ")"));
        b.rule(std::move(head), {}, {});
      }
      return b.finish();
    }
  }
  throw std::logic_error("unknown graph problem");
}

std::string to_dimacs(const Cnf& cnf) {
  std::string out = "p cnf " + std::to_string(cnf.num_vars) + " " +
                    std::to_string(cnf.clauses.size()) + "\n";
  for (const Clause3& c : cnf.clauses) {
    for (int lit : c.lits) out += std::to_string(lit) + " ";
    out += "0\n";
  }
  return out;
}

namespace {

bool clause_true(const Clause3& c, uint64_t assignment) {
  for (int lit : c.lits) {
    bool val = (assignment >> (std::abs(lit) - 1)) & 1;
    if (lit > 0 ? val : !val) return true;
  }
  return false;
}

bool cnf_true(const Cnf& cnf, uint64_t assignment) {
  for (const Clause3& c : cnf.clauses)
    if (!clause_true(c, assignment)) return false;
  return true;
}

}  // namespace

Count cnf_model_count(const Cnf& cnf, size_t cap) {
  if (static_cast<size_t>(cnf.num_vars) > cap)
    throw AtomCapExceeded(cnf.num_vars, cap);
  Count total = 0;
  for (uint64_t a = 0; a < (uint64_t{1} << cnf.num_vars); ++a)
    if (cnf_true(cnf, a)) total += 1;
  return total;
}

Count qbf_exists_forall_count(const QbfInstance& qbf, size_t cap) {
  if (static_cast<size_t>(qbf.cnf.num_vars) > cap)
    throw AtomCapExceeded(qbf.cnf.num_vars, cap);
  std::vector<int> exist_vars, forall_vars;
  for (int v = 0; v < qbf.cnf.num_vars; ++v)
    (qbf.in_exists[v] ? exist_vars : forall_vars).push_back(v);
  Count total = 0;
  for (uint64_t e = 0; e < (uint64_t{1} << exist_vars.size()); ++e) {
    uint64_t base = 0;
    for (size_t i = 0; i < exist_vars.size(); ++i)
      if ((e >> i) & 1) base |= uint64_t{1} << exist_vars[i];
    bool holds = true;
    for (uint64_t f = 0; f < (uint64_t{1} << forall_vars.size()); ++f) {
      uint64_t assignment = base;
      for (size_t i = 0; i < forall_vars.size(); ++i)
        if ((f >> i) & 1) assignment |= uint64_t{1} << forall_vars[i];
      if (!cnf_true(qbf.cnf, assignment)) {
        holds = false;
        break;
      }
    }
    if (holds) total += 1;
  }
  return total;
}

}  // namespace dynacount
