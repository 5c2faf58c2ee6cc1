#include <doctest.h>

#include "dynacount/parser.hpp"
#include "dynacount/program.hpp"
#include "test_support.hpp"

using namespace dynacount;

namespace {

Interpretation interp(const GroundProgram& p,
                      std::initializer_list<const char*> names) {
  Interpretation i(p.atom_count());
  for (const char* n : names)
    for (const Atom& a : p.atoms)
      if (a.name == n) i.set(a.id);
  return i;
}

std::string render_rules(const GroundProgram& p) { return render_program(p); }

}  // namespace

TEST_SUITE_BEGIN("program");

TEST_CASE("reduct drops rules blocked by the interpretation") {
  GroundProgram p = parse_program("a :- not b. b :- not a.");
  GroundProgram r = reduct(p, interp(p, {"a"}));
  CHECK(r.rule_count() == 1);
  CHECK(r.rules[0].head == std::vector<AtomId>{0});
  CHECK(r.rules[0].neg_body.empty());
  CHECK(render_rules(r) == "a.\n");
}

TEST_CASE("negation-free program is its own reduct") {
  GroundProgram p = parse_program("a | b.");
  GroundProgram r = reduct(p, interp(p, {"b"}));
  REQUIRE(r.rule_count() == 1);
  CHECK(r.rules[0].head == p.rules[0].head);
}

TEST_CASE("reduct can empty the rule set") {
  GroundProgram p = parse_program("a :- not a.");
  GroundProgram r = reduct(p, interp(p, {"a"}));
  CHECK(r.rule_count() == 0);
}

TEST_CASE("reduct is idempotent") {
  for (uint64_t seed = 0; seed < 200; ++seed) {
    GroundProgram p = test::random_program(seed, 10, 8);
    std::mt19937_64 rng(seed ^ 0xabcd);
    Interpretation i(p.atom_count());
    for (size_t a = 0; a < p.atom_count(); ++a)
      if (rng() & 1) i.set(a);
    GroundProgram once = reduct(p, i);
    GroundProgram twice = reduct(once, i);
    CHECK(test::canonical_signature(once) == test::canonical_signature(twice));
  }
}

TEST_CASE("is_model on the spec examples") {
  GroundProgram p1 = parse_program("a :- not b.");
  CHECK(is_model(interp(p1, {"a"}), p1));
  GroundProgram p2 = parse_program("a | b.");
  CHECK_FALSE(is_model(interp(p2, {}), p2));
  GroundProgram p3 = parse_program(":- a, b.");
  CHECK_FALSE(is_model(interp(p3, {"a", "b"}), p3));
}

TEST_CASE("is_answer_set on the spec examples") {
  GroundProgram p1 = parse_program("a | b.");
  CHECK(is_answer_set(interp(p1, {"a"}), p1));
  CHECK_FALSE(is_answer_set(interp(p1, {"a", "b"}), p1));
  GroundProgram p2 = parse_program("a | b. a :- b. b :- a.");
  CHECK(is_answer_set(interp(p2, {"a", "b"}), p2));
}

TEST_CASE("every answer set is a model") {
  for (uint64_t seed = 0; seed < 100; ++seed) {
    GroundProgram p = test::random_program(seed);
    size_t n = p.atom_count();
    for (uint32_t m = 0; m < (uint32_t{1} << n); ++m) {
      Interpretation i(n);
      for (size_t a = 0; a < n; ++a)
        if ((m >> a) & 1) i.set(a);
      if (is_answer_set(i, p)) CHECK(is_model(i, p));
    }
  }
}

TEST_CASE("brute force counts the classic two-rule program") {
  CHECK(count_answer_sets_bruteforce(parse_program("a :- not b. b :- not a.")) ==
        2);
  CHECK(count_answer_sets_bruteforce(parse_program("a :- not a.")) == 0);
  CHECK(count_answer_sets_bruteforce(parse_program("")) == 1);
}

TEST_CASE("brute force refuses programs over the cap") {
  ProgramBuilder b;
  for (int i = 0; i < 25; ++i) b.atom("a" + std::to_string(i));
  GroundProgram p = b.finish();
  CHECK_THROWS_AS(count_answer_sets_bruteforce(p), AtomCapExceeded);
  CHECK_NOTHROW(count_answer_sets_bruteforce(p, 25));
}

TEST_CASE("atoms outside every rule stay false") {
  // Minimality forbids unsupported truth, so only the empty set survives
  // a program with atoms but no rules.
  ProgramBuilder b;
  b.atom("a");
  b.atom("b");
  GroundProgram p = b.finish();
  CHECK(p.isolated_atoms().size() == 2);
  CHECK(count_answer_sets_bruteforce(p) == 1);
}

TEST_CASE("negation-free answer sets are the minimal models") {
  for (uint64_t seed = 0; seed < 150; ++seed) {
    GroundProgram raw = test::random_program(seed, 9, 7);
    ProgramBuilder b;
    for (const Atom& a : raw.atoms) b.atom(a.name);
    for (const Rule& r : raw.rules) b.rule(r.head, r.pos_body, {});
    GroundProgram p = b.finish();
    std::vector<uint32_t> minimal = test::minimal_models(p);
    Count expected = static_cast<unsigned long>(minimal.size());
    CHECK(count_answer_sets_bruteforce(p) == expected);
    for (uint32_t m : minimal) {
      Interpretation i(p.atom_count());
      for (size_t a = 0; a < p.atom_count(); ++a)
        if ((m >> a) & 1) i.set(a);
      CHECK(is_answer_set(i, p));
    }
  }
}

TEST_CASE("entails_at_node restricts literals to the bag") {
  GroundProgram p = parse_program("a | b :- c, not d.");
  const Rule& r = p.rules[0];
  AtomSet bag(p.atom_count());
  bag.set(0);  // a
  bag.set(2);  // c
  AtomSet m(p.atom_count());
  m.set(2);
  CHECK_FALSE(entails_at_node(m, r, bag));
  m.set(0);
  CHECK(entails_at_node(m, r, bag));
}

TEST_CASE("fully restricted rule becomes a contradiction") {
  GroundProgram p = parse_program("a :- b.");
  AtomSet bag(p.atom_count());
  AtomSet m(p.atom_count());
  CHECK_FALSE(entails_at_node(m, p.rules[0], bag));
}

TEST_CASE("entails_at_node applies the reduct before restriction") {
  GroundProgram p = parse_program("a :- c, not d.");
  const Rule& r = p.rules[0];
  AtomSet bag(p.atom_count());
  bag.set(0);
  bag.set(1);  // c in the bag, d outside
  AtomSet m(p.atom_count());
  m.set(1);
  AtomSet wrt(p.atom_count());
  wrt.set(2);  // d true in the reduct context: rule deleted
  CHECK(entails_at_node(m, r, bag, &wrt));
  AtomSet wrt2(p.atom_count());
  CHECK_FALSE(entails_at_node(m, r, bag, &wrt2));
}

TEST_CASE("full-bag entailment equals classical satisfaction") {
  for (uint64_t seed = 0; seed < 80; ++seed) {
    GroundProgram p = test::random_program(seed, 7, 6);
    AtomSet bag(p.atom_count());
    for (size_t a = 0; a < p.atom_count(); ++a) bag.set(a);
    std::mt19937_64 rng(seed * 31 + 7);
    Interpretation i(p.atom_count());
    for (size_t a = 0; a < p.atom_count(); ++a)
      if (rng() & 1) i.set(a);
    for (const Rule& r : p.rules) {
      ProgramBuilder b;
      for (const Atom& a : p.atoms) b.atom(a.name);
      b.rule(r.head, r.pos_body, r.neg_body);
      CHECK(entails_at_node(i, r, bag) == is_model(i, b.finish()));
    }
  }
}

TEST_CASE("duplicate rules collapse at construction") {
  GroundProgram p = parse_program("a :- b. a :- b. b.");
  CHECK(p.rule_count() == 2);
}

TEST_SUITE_END();
