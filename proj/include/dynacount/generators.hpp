#ifndef DYNACOUNT_GENERATORS_HPP
#define DYNACOUNT_GENERATORS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dynacount/parser.hpp"
#include "dynacount/program.hpp"

namespace dynacount {

// Parameters of the TGrid families over a rows x cols grid of variables.
// Draw protocol, fixed for reproducibility across implementations: a
// std::mt19937_64 seeded with `seed`; cells (i,j) with i>1, j>1 are
// visited in row-major order; each draws one clause coin
// u = (rng() >> 11) * 2^-53, and if u < clause_prob the cell emits its
// three clauses, drawing the nine sign coins (rng() & 1, set bit means
// positive) in the order s1..s9. The 2ASP variant afterwards draws one
// coin u < exists_prob per variable in row-major order for membership in
// the existential block.
struct TGridParams {
  int rows = 1;            // k
  int cols = 1;            // l
  double clause_prob = 1;  // p, in (0,1]
  double exists_prob = 1;  // q, in (0,1], 2ASP only
  uint64_t seed = 0;
};

// 3-literal clause, DIMACS conventions: 1-based variables, sign = polarity.
struct Clause3 {
  std::array<int, 3> lits;
};

struct Cnf {
  int num_vars = 0;
  std::vector<Clause3> clauses;
};

// Variable of grid cell (i,j), 1-based.
inline int tgrid_var(const TGridParams& p, int i, int j) {
  return (i - 1) * p.cols + j;
}

Cnf gen_sat_tgrid(const TGridParams& params);

// Count-preserving ASP form of a CNF: per variable a disjunctive guess
// over x(v) / nx(v) with an exclusion constraint, and per clause one
// constraint forbidding its falsifying assignment.
GroundProgram asp_from_cnf(const Cnf& cnf,
                           const std::vector<std::string>& var_names = {});

GroundProgram gen_asp_tgrid(const TGridParams& params);

// An exists-forall QBF with the same clause matrix.
struct QbfInstance {
  Cnf cnf;
  std::vector<char> in_exists;  // per variable, 1 iff existential
};

QbfInstance gen_2qbf_tgrid(const TGridParams& params);

// Saturation encoding whose answer sets are in bijection with the
// existential assignments making the matrix true under every universal
// assignment. Clause satisfaction is witnessed by per-clause atoms
// feeding the saturation atom w.
GroundProgram encode_exists_forall(const QbfInstance& qbf,
                                   const std::vector<std::string>& var_names = {});

GroundProgram gen_2asp_tgrid(const TGridParams& params);

enum class GraphProblem { two_col, three_col, dominating_set, vertex_cover };

// Positive programs whose answer sets are the proper 2-/3-colorings,
// the minimal dominating sets, or the subset-minimal vertex covers.
GroundProgram encode_graph_problem(GraphProblem problem,
                                   const EdgeListGraph& g);

std::string to_dimacs(const Cnf& cnf);

// Enumeration ground truths for the generator families.
Count cnf_model_count(const Cnf& cnf, size_t cap = 24);
Count qbf_exists_forall_count(const QbfInstance& qbf, size_t cap = 24);

}  // namespace dynacount

#endif
