#ifndef DYNACOUNT_PROGRAM_HPP
#define DYNACOUNT_PROGRAM_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <gmpxx.h>

#include "dynacount/bits.hpp"

namespace dynacount {

using AtomId = uint32_t;
using RuleId = uint32_t;
using Count = mpz_class;

struct Atom {
  AtomId id;
  std::string name;
};

// A ground disjunctive rule: head <- pos_body, not neg_body.
// All three id lists are sorted and duplicate-free; they may overlap
// (e.g. "a :- a." is legal and keeps its literal semantics).
struct Rule {
  RuleId id;
  std::vector<AtomId> head;
  std::vector<AtomId> pos_body;
  std::vector<AtomId> neg_body;

  // Atoms occurring anywhere in the rule, sorted, unique.
  std::vector<AtomId> atoms() const;
};

struct GroundProgram {
  std::vector<Atom> atoms;
  std::vector<Rule> rules;

  size_t atom_count() const { return atoms.size(); }
  size_t rule_count() const { return rules.size(); }

  // Atoms that occur in no rule. They can never be true in an answer set.
  std::vector<AtomId> isolated_atoms() const;
};

// Interns atom names and collapses exact duplicate rules.
class ProgramBuilder {
 public:
  AtomId atom(const std::string& name);
  void rule(std::vector<AtomId> head, std::vector<AtomId> pos,
            std::vector<AtomId> neg);
  GroundProgram finish();

 private:
  std::vector<Atom> atoms_;
  std::vector<Rule> rules_;
  std::unordered_map<std::string, AtomId> atom_index_;
  std::unordered_set<std::string> seen_rules_;  // canonical keys
};

using Interpretation = AtomSet;

class AtomCapExceeded : public std::runtime_error {
 public:
  explicit AtomCapExceeded(size_t atoms, size_t cap)
      : std::runtime_error("program has " + std::to_string(atoms) +
                           " atoms, brute-force cap is " +
                           std::to_string(cap)) {}
};

// Gelfond-Lifschitz reduct of p with respect to i.
GroundProgram reduct(const GroundProgram& p, const Interpretation& i);

bool is_model(const Interpretation& i, const GroundProgram& p);

// Model of p whose reduct admits no proper submodel.
bool is_answer_set(const Interpretation& i, const GroundProgram& p);

// Exhaustive ground truth; throws AtomCapExceeded above the cap.
Count count_answer_sets_bruteforce(const GroundProgram& p, size_t cap = 24);

// Classical model count by enumeration (no minimality check).
Count count_models_bruteforce(const GroundProgram& p, size_t cap = 24);

// Bag-restricted entailment: m is a model of r restricted to bag_atoms.
// With reduct_wrt, the rule is first reduced: if its negative body meets
// reduct_wrt the rule is gone and anything entails it; otherwise the
// negative body is stripped before restriction. A restriction that loses
// every literal is a contradiction and entails nothing.
bool entails_at_node(const AtomSet& m, const Rule& r, const AtomSet& bag_atoms,
                     const AtomSet* reduct_wrt = nullptr);

}  // namespace dynacount

#endif
