#ifndef DYNACOUNT_ENGINE_HPP
#define DYNACOUNT_ENGINE_HPP

#include <cstdint>
#include <utility>

#include "dynacount/algorithms.hpp"

namespace dynacount {

struct RunStats {
  int width = 0;
  int nodes = 0;
  size_t max_table = 0;
  size_t tuples_total = 0;
  size_t rules_covered = 0;
  double traverse_ms = 0.0;
};

// Bottom-up evaluation of the decomposition. Child tables are released as
// soon as the parent table exists; the returned count is the one attached
// to the accepting root tuple (zero if absent).
std::pair<Count, RunStats> traverse(const NiceTreeDecomposition& td,
                                    const GroundProgram& p, Algorithm alg);

}  // namespace dynacount

#endif
