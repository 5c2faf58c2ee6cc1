#include "dynacount/program.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace dynacount {

std::vector<AtomId> Rule::atoms() const {
  std::vector<AtomId> all;
  all.reserve(head.size() + pos_body.size() + neg_body.size());
  all.insert(all.end(), head.begin(), head.end());
  all.insert(all.end(), pos_body.begin(), pos_body.end());
  all.insert(all.end(), neg_body.begin(), neg_body.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

std::vector<AtomId> GroundProgram::isolated_atoms() const {
  std::vector<char> used(atoms.size(), 0);
  for (const Rule& r : rules)
    for (AtomId a : r.atoms()) used[a] = 1;
  std::vector<AtomId> out;
  for (AtomId a = 0; a < atoms.size(); ++a)
    if (!used[a]) out.push_back(a);
  return out;
}

AtomId ProgramBuilder::atom(const std::string& name) {
  auto it = atom_index_.find(name);
  if (it != atom_index_.end()) return it->second;
  AtomId id = static_cast<AtomId>(atoms_.size());
  atoms_.push_back({id, name});
  atom_index_.emplace(name, id);
  return id;
}

namespace {

std::vector<AtomId> sorted_unique(std::vector<AtomId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::string rule_key(const Rule& r) {
  std::string key;
  for (AtomId a : r.head) key += std::to_string(a) + ",";
  key += "|";
  for (AtomId a : r.pos_body) key += std::to_string(a) + ",";
  key += "|";
  for (AtomId a : r.neg_body) key += std::to_string(a) + ",";
  return key;
}

}  // namespace

void ProgramBuilder::rule(std::vector<AtomId> head, std::vector<AtomId> pos,
                          std::vector<AtomId> neg) {
  Rule r;
  r.id = static_cast<RuleId>(rules_.size());
  r.head = sorted_unique(std::move(head));
  r.pos_body = sorted_unique(std::move(pos));
  r.neg_body = sorted_unique(std::move(neg));
  std::string key = rule_key(r);
  if (!seen_rules_.insert(std::move(key)).second) return;  // duplicate rule
  rules_.push_back(std::move(r));
}

GroundProgram ProgramBuilder::finish() {
  GroundProgram p;
  p.atoms = std::move(atoms_);
  p.rules = std::move(rules_);
  atoms_.clear();
  rules_.clear();
  atom_index_.clear();
  seen_rules_.clear();
  return p;
}

GroundProgram reduct(const GroundProgram& p, const Interpretation& i) {
  GroundProgram out;
  out.atoms = p.atoms;
  for (const Rule& r : p.rules) {
    bool dropped = false;
    for (AtomId a : r.neg_body)
      if (i.test(a)) {
        dropped = true;
        break;
      }
    if (dropped) continue;
    Rule nr;
    nr.id = static_cast<RuleId>(out.rules.size());
    nr.head = r.head;
    nr.pos_body = r.pos_body;
    out.rules.push_back(std::move(nr));
  }
  return out;
}

namespace {

bool rule_satisfied(const Interpretation& i, const Rule& r) {
  for (AtomId a : r.pos_body)
    if (!i.test(a)) return true;
  for (AtomId a : r.neg_body)
    if (i.test(a)) return true;
  for (AtomId a : r.head)
    if (i.test(a)) return true;
  return false;
}

// Mask forms for the enumeration loops; only valid for <= 32 atoms.
struct MaskRule {
  uint32_t head, pos, neg;
};

std::vector<MaskRule> mask_rules(const GroundProgram& p) {
  std::vector<MaskRule> out;
  out.reserve(p.rules.size());
  for (const Rule& r : p.rules) {
    MaskRule m{0, 0, 0};
    for (AtomId a : r.head) m.head |= 1u << a;
    for (AtomId a : r.pos_body) m.pos |= 1u << a;
    for (AtomId a : r.neg_body) m.neg |= 1u << a;
    out.push_back(m);
  }
  return out;
}

bool mask_is_model(uint32_t i, const std::vector<MaskRule>& rules) {
  for (const MaskRule& r : rules) {
    bool body = (r.pos & ~i) == 0 && (r.neg & i) == 0;
    if (body && (r.head & i) == 0) return false;
  }
  return true;
}

// Model of the reduct w.r.t. m, evaluated on a submask candidate.
bool mask_is_reduct_model(uint32_t sub, uint32_t m,
                          const std::vector<MaskRule>& rules) {
  for (const MaskRule& r : rules) {
    if (r.neg & m) continue;  // rule deleted by the reduct
    if ((r.pos & ~sub) == 0 && (r.head & sub) == 0) return false;
  }
  return true;
}

}  // namespace

bool is_model(const Interpretation& i, const GroundProgram& p) {
  for (const Rule& r : p.rules)
    if (!rule_satisfied(i, r)) return false;
  return true;
}

bool is_answer_set(const Interpretation& i, const GroundProgram& p) {
  if (!is_model(i, p)) return false;
  GroundProgram red = reduct(p, i);
  // Walk all proper subsets of i.
  std::vector<AtomId> members;
  for (AtomId a = 0; a < p.atom_count(); ++a)
    if (i.test(a)) members.push_back(a);
  size_t k = members.size();
  if (k > 30) throw AtomCapExceeded(k, 30);
  for (uint32_t sub = 0; sub + 1 < (uint32_t{1} << k); ++sub) {
    Interpretation n(p.atom_count());
    for (size_t j = 0; j < k; ++j)
      if ((sub >> j) & 1) n.set(members[j]);
    if (is_model(n, red)) return false;
  }
  return true;
}

Count count_answer_sets_bruteforce(const GroundProgram& p, size_t cap) {
  size_t n = p.atom_count();
  if (n > cap) throw AtomCapExceeded(n, cap);
  std::vector<MaskRule> rules = mask_rules(p);
  Count total = 0;
  for (uint64_t i = 0; i < (uint64_t{1} << n); ++i) {
    uint32_t m = static_cast<uint32_t>(i);
    if (!mask_is_model(m, rules)) continue;
    bool minimal = true;
    if (m != 0) {
      uint32_t sub = (m - 1) & m;  // proper submasks, skipping m itself
      while (true) {
        if (mask_is_reduct_model(sub, m, rules)) {
          minimal = false;
          break;
        }
        if (sub == 0) break;
        sub = (sub - 1) & m;
      }
    }
    if (minimal) total += 1;
  }
  return total;
}

Count count_models_bruteforce(const GroundProgram& p, size_t cap) {
  size_t n = p.atom_count();
  if (n > cap) throw AtomCapExceeded(n, cap);
  std::vector<MaskRule> rules = mask_rules(p);
  Count total = 0;
  for (uint64_t i = 0; i < (uint64_t{1} << n); ++i)
    if (mask_is_model(static_cast<uint32_t>(i), rules)) total += 1;
  return total;
}

bool entails_at_node(const AtomSet& m, const Rule& r, const AtomSet& bag_atoms,
                     const AtomSet* reduct_wrt) {
  if (reduct_wrt) {
    for (AtomId a : r.neg_body)
      if (reduct_wrt->test(a)) return true;  // rule deleted by the reduct
  } else {
    for (AtomId a : r.neg_body)
      if (bag_atoms.test(a) && m.test(a)) return true;
  }
  for (AtomId a : r.pos_body)
    if (bag_atoms.test(a) && !m.test(a)) return true;
  for (AtomId a : r.head)
    if (bag_atoms.test(a) && m.test(a)) return true;
  return false;
}

}  // namespace dynacount
