#include <doctest.h>

#include "fclp/builtins.hpp"

using namespace fclp;

namespace {

Term i(long long v) { return Term::integer(v); }

Premise arith(BuiltinId id, Term a, Term b, Term v) {
  return Premise::function(id, {std::move(a), std::move(b)}, std::move(v));
}

}  // namespace

TEST_CASE("arithmetic builtins solve for any missing part") {
  // minus(3,1) is M
  auto got = solve_builtin(arith(BuiltinId::IntMinus, i(3), i(1), Term::var("M")), {});
  REQUIRE(got.size() == 1);
  CHECK(got[0].at("M") == i(2));

  // plus(X,1) is 5
  got = solve_builtin(arith(BuiltinId::IntPlus, Term::var("X"), i(1), i(5)), {});
  REQUIRE(got.size() == 1);
  CHECK(got[0].at("X") == i(4));

  // plus(2,Y) is 5
  got = solve_builtin(arith(BuiltinId::IntPlus, i(2), Term::var("Y"), i(5)), {});
  REQUIRE(got.size() == 1);
  CHECK(got[0].at("Y") == i(3));

  // minus(10,X) is 4
  got = solve_builtin(arith(BuiltinId::IntMinus, i(10), Term::var("X"), i(4)), {});
  REQUIRE(got.size() == 1);
  CHECK(got[0].at("X") == i(6));

  // All three ground: acts as a check.
  CHECK(solve_builtin(arith(BuiltinId::IntPlus, i(2), i(2), i(4)), {}).size() == 1);
  CHECK(solve_builtin(arith(BuiltinId::IntPlus, i(2), i(2), i(5)), {}).empty());

  // Fewer than two ground parts is inadmissible.
  CHECK_THROWS_AS(
      solve_builtin(arith(BuiltinId::IntPlus, Term::var("X"), Term::var("Y"), i(5)), {}),
      InadmissibleMode);
  CHECK_THROWS_AS(solve_builtin(arith(BuiltinId::IntPlus, Term::fun("a"), i(1), i(5)), {}),
                  NonIntegerArgument);
}

TEST_CASE("comparisons") {
  CHECK(solve_builtin(Premise::comparison(BuiltinId::Neq, Term::fun("a"), Term::fun("a")), {})
            .empty());
  CHECK(solve_builtin(Premise::comparison(BuiltinId::Neq, Term::fun("a"), Term::fun("b")), {})
            .size() == 1);
  CHECK(solve_builtin(Premise::comparison(BuiltinId::Lt, i(1), i(2)), {}).size() == 1);
  CHECK(solve_builtin(Premise::comparison(BuiltinId::Lt, i(2), i(2)), {}).empty());
  CHECK(solve_builtin(Premise::comparison(BuiltinId::Gt, i(3), i(2)), {}).size() == 1);
  CHECK_THROWS_AS(
      solve_builtin(Premise::comparison(BuiltinId::Lt, Term::var("X"), i(2)), {}),
      InadmissibleMode);
}

TEST_CASE("equality binds a free side") {
  auto got = solve_builtin(
      Premise::comparison(BuiltinId::Eq, Term::var("X"), Term::fun("a")), {});
  REQUIRE(got.size() == 1);
  CHECK(got[0].at("X") == Term::fun("a"));

  got = solve_builtin(Premise::comparison(BuiltinId::Eq, Term::fun("a"), Term::var("Y")), {});
  REQUIRE(got.size() == 1);
  CHECK(got[0].at("Y") == Term::fun("a"));

  CHECK(solve_builtin(Premise::comparison(BuiltinId::Eq, Term::fun("a"), Term::fun("b")), {})
            .empty());
  CHECK_THROWS_AS(
      solve_builtin(Premise::comparison(BuiltinId::Eq, Term::var("X"), Term::var("Y")), {}),
      InadmissibleMode);
}

TEST_CASE("arithmetic agrees with brute force over a small universe") {
  // For each mode, the returned substitution set must equal the set of
  // assignments satisfying the relation.
  for (long long a = -3; a <= 3; ++a) {
    for (long long b = -3; b <= 3; ++b) {
      for (BuiltinId id : {BuiltinId::IntPlus, BuiltinId::IntMinus}) {
        long long expect = id == BuiltinId::IntPlus ? a + b : a - b;

        auto fwd = solve_builtin(arith(id, i(a), i(b), Term::var("V")), {});
        REQUIRE(fwd.size() == 1);
        CHECK(fwd[0].at("V") == i(expect));

        for (long long v = -6; v <= 6; ++v) {
          auto back_a = solve_builtin(arith(id, Term::var("A"), i(b), i(v)), {});
          bool holds_for_some_a = false;
          for (long long cand = -20; cand <= 20; ++cand)
            if ((id == BuiltinId::IntPlus ? cand + b : cand - b) == v) {
              holds_for_some_a = true;
              REQUIRE(back_a.size() == 1);
              CHECK(back_a[0].at("A") == i(cand));
            }
          if (!holds_for_some_a) CHECK(back_a.empty());
        }
      }
    }
  }
}

TEST_CASE("builtin_mode_ok mirrors the dynamic modes") {
  std::set<std::string> bound;
  // plus(X,1) is V with X bound: ok, binds V.
  bound = {"X"};
  CHECK(builtin_mode_ok(arith(BuiltinId::IntPlus, Term::var("X"), i(1), Term::var("V")), bound));
  CHECK(bound.count("V"));

  // plus(X,Y) is 5 with nothing bound: rejected.
  bound.clear();
  CHECK_FALSE(builtin_mode_ok(
      arith(BuiltinId::IntPlus, Term::var("X"), Term::var("Y"), i(5)), bound));

  // The unknown part must be a bare variable.
  bound = {"X"};
  CHECK_FALSE(builtin_mode_ok(
      arith(BuiltinId::IntPlus, i(1), i(2), Term::fun("g", {Term::var("Z")})), bound));

  // X == a binds X.
  bound.clear();
  CHECK(builtin_mode_ok(Premise::comparison(BuiltinId::Eq, Term::var("X"), Term::fun("a")),
                        bound));
  CHECK(bound.count("X"));

  // X != Y with neither bound: rejected.
  bound.clear();
  CHECK_FALSE(builtin_mode_ok(
      Premise::comparison(BuiltinId::Neq, Term::var("X"), Term::var("Y")), bound));
}
