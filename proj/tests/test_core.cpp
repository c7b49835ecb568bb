#include <doctest.h>

#include <random>

#include "fclp/rule.hpp"
#include "fclp/term.hpp"

using namespace fclp;

namespace {

Term f(std::vector<Term> args) { return Term::fun("f", std::move(args)); }

// Random ground terms over a tiny signature, depth-bounded.
Term random_ground(std::mt19937_64& rng, int depth = 2) {
  switch (rng() % (depth > 0 ? 4 : 3)) {
    case 0: return Term::fun("a");
    case 1: return Term::fun("b");
    case 2: return Term::integer(static_cast<long long>(rng() % 5));
    default:
      return Term::fun("g", {random_ground(rng, depth - 1), random_ground(rng, depth - 1)});
  }
}

// Replace random subterms of a ground term with variables.
Term abstract_vars(std::mt19937_64& rng, const Term& t, int& counter) {
  if (rng() % 4 == 0) return Term::var("V" + std::to_string(counter++));
  if (t.args().empty()) return t;
  std::vector<Term> args;
  for (const auto& a : t.args()) args.push_back(abstract_vars(rng, a, counter));
  return Term::fun(t.name, std::move(args));
}

}  // namespace

TEST_CASE("term construction and equality") {
  CHECK(Term::fun("a") == Term::fun("a"));
  CHECK(Term::fun("a") != Term::fun("b"));
  CHECK(Term::integer(3) == Term::integer(3));
  CHECK(Term::integer(3) != Term::fun("3"));
  CHECK(Term::var("X") != Term::fun("X"));
  CHECK(f({Term::fun("a")}) != f({Term::fun("b")}));
  CHECK(Term::fun("a").ground());
  CHECK_FALSE(Term::var("X").ground());
  CHECK_FALSE(f({Term::var("X")}).ground());
  CHECK(to_string(f({Term::fun("a"), f({Term::fun("b")})})) == "f a (f b)");
}

TEST_CASE("apply_subst instantiates terms") {
  Substitution sigma{{"X", Term::fun("a")}};
  CHECK(apply_subst(sigma, f({Term::var("X"), Term::fun("b")})) ==
        f({Term::fun("a"), Term::fun("b")}));
  CHECK(apply_subst({}, Term::fun("c")) == Term::fun("c"));
  CHECK_THROWS_AS(apply_subst(sigma, Term::fun("g", {Term::var("Y")})),
                  UnboundVariable);
}

TEST_CASE("match finds the minimal extension") {
  auto got = match(f({Term::var("X"), Term::var("Y")}),
                   f({Term::fun("a"), Term::fun("b")}), {});
  REQUIRE(got);
  CHECK(*got == Substitution{{"X", Term::fun("a")}, {"Y", Term::fun("b")}});

  CHECK_FALSE(match(f({Term::var("X"), Term::var("X")}),
                    f({Term::fun("a"), Term::fun("b")}), {}));
  CHECK_FALSE(match(Term::fun("g", {Term::var("X")}),
                    Term::fun("g", {Term::fun("a")}),
                    {{"X", Term::fun("b")}}));
}

TEST_CASE("ground_head instantiates and deduplicates") {
  RuleHead terrain;
  terrain.pred = "terrain";
  terrain.args = {Term::var("R")};
  terrain.values = {Term::fun("mountain"), Term::fun("forest"), Term::fun("ocean")};
  GroundHead gh = ground_head({{"R", Term::fun("home")}}, terrain);
  CHECK(gh.attr == Attribute{"terrain", {Term::fun("home")}});
  CHECK_FALSE(gh.open);
  CHECK(gh.values == std::vector<Term>{Term::fun("mountain"), Term::fun("forest"),
                                       Term::fun("ocean")});

  RuleHead root;
  root.pred = "root";
  root.open = true;
  root.values = {Term::var("X")};
  GroundHead gr = ground_head({{"X", Term::fun("a")}}, root);
  CHECK(gr.attr == Attribute{"root", {}});
  CHECK(gr.open);
  CHECK(gr.values == std::vector<Term>{Term::fun("a")});

  RuleHead dup;
  dup.pred = "p";
  dup.values = {Term::fun("tt"), Term::fun("tt")};
  CHECK(ground_head({}, dup).values == std::vector<Term>{Term::fun("tt")});

  RuleHead unbound;
  unbound.pred = "p";
  unbound.values = {Term::var("Z")};
  CHECK_THROWS_AS(ground_head({}, unbound), UnboundVariable);
}

TEST_CASE("match soundness and minimality on random terms") {
  std::mt19937_64 rng(20240811);
  for (int i = 0; i < 2000; ++i) {
    Term ground = random_ground(rng);
    int counter = 0;
    Term pattern = abstract_vars(rng, ground, counter);
    // Every variable is fresh, so matching back always succeeds.
    auto got = match(pattern, ground, {});
    REQUIRE(got);
    CHECK(apply_subst(*got, pattern) == ground);
    // Minimality: only the introduced variables are bound.
    CHECK(got->size() == static_cast<size_t>(counter));
    // Idempotence: the output is ground.
    CHECK(apply_subst(*got, pattern).ground());
  }
}
