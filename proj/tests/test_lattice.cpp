#include <doctest.h>

#include "fclp/lattice.hpp"
#include "testutil.hpp"

using namespace fclp;

namespace {

Term t(const char* n) { return Term::fun(n); }
Attribute at(const char* n) { return Attribute{n, {}}; }

ConstraintDatabase db1(const char* a, Constraint c) {
  return ConstraintDatabase{}.with(at(a), std::move(c));
}

}  // namespace

TEST_CASE("constraint_leq implements the four-case order") {
  CHECK(constraint_leq(Constraint::none_of({}), Constraint::just(t("tt"))));
  CHECK_FALSE(constraint_leq(Constraint::just(t("tt")), Constraint::none_of({t("ff")})));
  CHECK(constraint_leq(Constraint::none_of({t("a")}), Constraint::none_of({t("a"), t("b")})));
  CHECK_FALSE(constraint_leq(Constraint::none_of({t("a")}), Constraint::just(t("a"))));
  CHECK(constraint_leq(Constraint::just(t("a")), Constraint::just(t("a"))));
  CHECK_FALSE(constraint_leq(Constraint::just(t("a")), Constraint::just(t("b"))));
}

TEST_CASE("constraint_lub by cases") {
  CHECK(constraint_lub({Constraint::none_of({t("a")}), Constraint::just(t("b"))}) ==
        Constraint::just(t("b")));
  CHECK(constraint_lub({Constraint::none_of({t("a")}), Constraint::none_of({t("b")})}) ==
        Constraint::none_of({t("a"), t("b")}));
  CHECK_FALSE(constraint_lub({Constraint::just(t("a")), Constraint::just(t("b"))}));
  CHECK_FALSE(constraint_lub({Constraint::none_of({t("a")}), Constraint::just(t("a"))}));
  CHECK(constraint_lub(std::vector<Constraint>{}) == Constraint::bottom());
}

TEST_CASE("db_leq is pointwise") {
  CHECK(db_leq(ConstraintDatabase{}, db1("p", Constraint::just(t("tt")))));
  CHECK(db_leq(db1("p", Constraint::just(t("tt"))),
               db1("p", Constraint::just(t("tt"))).with(at("q"), Constraint::none_of({t("ff")}))));
  CHECK_FALSE(db_leq(db1("p", Constraint::just(t("tt"))), db1("p", Constraint::just(t("ff")))));
}

TEST_CASE("db_lub is pointwise with clashes undefined") {
  auto got = db_lub(db1("p", Constraint::just(t("b"))), db1("q", Constraint::just(t("c"))));
  REQUIRE(got);
  CHECK(*got == db1("p", Constraint::just(t("b"))).with(at("q"), Constraint::just(t("c"))));

  auto same_key = db_lub(db1("p", Constraint::just(t("b"))), db1("p", Constraint::none_of({t("c")})));
  REQUIRE(same_key);
  CHECK(*same_key == db1("p", Constraint::just(t("b"))));

  CHECK_FALSE(db_lub(db1("p", Constraint::just(t("b"))), db1("p", Constraint::just(t("c")))));
}

TEST_CASE("compatibility") {
  CHECK(compatible(db1("p", Constraint::just(t("tt"))), db1("q", Constraint::just(t("tt")))));
  CHECK_FALSE(compatible(db1("p", Constraint::just(t("tt"))), db1("p", Constraint::none_of({t("tt")}))));
  auto d = db1("p", Constraint::just(t("tt")));
  CHECK(compatible(d, d));
}

TEST_CASE("choice_leq with bottom and top") {
  ChoiceSet some{db1("p", Constraint::just(t("tt")))};
  CHECK(choice_leq(choice_bottom(), some));
  CHECK(choice_leq(some, ChoiceSet{}));
  CHECK_FALSE(choice_leq(ChoiceSet{db1("p", Constraint::just(t("tt")))},
                         ChoiceSet{db1("p", Constraint::just(t("ff")))}));
}

TEST_CASE("choice_lub cross product") {
  // Three singular inputs and their four-element lub.
  ChoiceSet c1{db1("p1", Constraint::just(t("b")))};
  ChoiceSet c2{db1("p2", Constraint::just(t("b"))), db1("p2", Constraint::just(t("c")))};
  ChoiceSet c3{db1("p3", Constraint::just(t("b"))), db1("p3", Constraint::none_of({t("b")}))};
  ChoiceSet got = choice_lub({c1, c2, c3});

  auto mk = [&](Constraint c2v, Constraint c3v) {
    return db1("p1", Constraint::just(t("b")))
        .with(at("p2"), std::move(c2v))
        .with(at("p3"), std::move(c3v));
  };
  ChoiceSet expect{
      mk(Constraint::just(t("b")), Constraint::just(t("b"))),
      mk(Constraint::just(t("b")), Constraint::none_of({t("b")})),
      mk(Constraint::just(t("c")), Constraint::just(t("b"))),
      mk(Constraint::just(t("c")), Constraint::none_of({t("b")})),
  };
  CHECK(got == expect);

  CHECK(choice_lub(c1, choice_bottom()) == c1);
  CHECK(choice_lub(ChoiceSet{db1("p", Constraint::just(t("a")))},
                   ChoiceSet{db1("p", Constraint::just(t("b")))}) == ChoiceSet{});
}

TEST_CASE("erase keeps definite assignments") {
  auto d = db1("p", Constraint::just(t("tt"))).with(at("q"), Constraint::none_of({t("a"), t("b")}));
  CHECK(erase(d) == FactSet{{at("p"), t("tt")}});
  CHECK(erase(ConstraintDatabase{}) == FactSet{});
  CHECK(erase(db1("p", Constraint::just(t("tt")))) == FactSet{{at("p"), t("tt")}});
}

TEST_CASE("promote lifts consistent fact sets") {
  CHECK(promote({{at("p"), t("tt")}}) == db1("p", Constraint::just(t("tt"))));
  CHECK(promote({}) == ConstraintDatabase{});
  CHECK_THROWS_AS(promote({{at("p"), t("tt")}, {at("p"), t("ff")}}), InconsistentFactSet);
}

TEST_CASE("is_positive") {
  CHECK(is_positive(db1("p", Constraint::just(t("tt")))));
  CHECK_FALSE(is_positive(db1("p", Constraint::none_of({t("ff")}))));
  CHECK(is_positive(ConstraintDatabase{}));
}

TEST_CASE("consistent fact sets") {
  CHECK(consistent({{at("p"), t("a")}, {at("q"), t("a")}}));
  CHECK_FALSE(consistent({{at("p"), t("a")}, {at("p"), t("b")}}));
  CHECK(consistent({}));
}

TEST_CASE("randomized lattice laws") {
  testutil::LatticeGen gen(42);
  const int kCases = 1000;

  for (int i = 0; i < kCases; ++i) {
    Constraint a = gen.constraint(), b = gen.constraint(), c = gen.constraint();
    CHECK(constraint_leq(a, a));
    if (constraint_leq(a, b) && constraint_leq(b, c)) CHECK(constraint_leq(a, c));
    if (constraint_leq(a, b) && constraint_leq(b, a)) CHECK(a == b);
    if (auto l = constraint_lub(a, b)) {
      CHECK(constraint_leq(a, *l));
      CHECK(constraint_leq(b, *l));
      // Least among all upper bounds in the finite universe.
      for (const auto& u : gen.all_constraints())
        if (constraint_leq(a, u) && constraint_leq(b, u)) CHECK(constraint_leq(*l, u));
    }
  }

  for (int i = 0; i < kCases; ++i) {
    ConstraintDatabase d = gen.database(), e = gen.database(), f = gen.database();
    CHECK(db_leq(d, d));
    if (db_leq(d, e) && db_leq(e, f)) CHECK(db_leq(d, f));
    if (db_leq(d, e) && db_leq(e, d)) CHECK(d == e);
    if (auto l = db_lub(d, e)) {
      CHECK(db_leq(d, *l));
      CHECK(db_leq(e, *l));
    }
    // Monotone incompatibility: raising both sides preserves conflict.
    if (!compatible(d, e)) {
      ConstraintDatabase d2 = gen.raise(d), e2 = gen.raise(e);
      CHECK(db_leq(d, d2));
      CHECK(db_leq(e, e2));
      CHECK_FALSE(compatible(d2, e2));
    }
  }

  for (int i = 0; i < kCases; ++i) {
    ChoiceSet c1 = gen.choice_set(), c2 = gen.choice_set(), c3 = gen.choice_set();
    ChoiceSet l = choice_lub(c1, c2);
    CHECK(pairwise_incompatible(l));
    CHECK(choice_leq(c1, l));
    CHECK(choice_leq(c2, l));
    CHECK(choice_lub(c1, c2) == choice_lub(c2, c1));
    CHECK(choice_lub(choice_lub(c1, c2), c3) == choice_lub(c1, choice_lub(c2, c3)));
  }

  // Erasure/promotion adjunction.
  for (int i = 0; i < kCases; ++i) {
    ConstraintDatabase d = gen.database();
    FactSet facts = erase(d);
    CHECK(erase(promote(facts)) == facts);
    CHECK(db_leq(promote(erase(d)), d));
    CHECK((promote(erase(d)) == d) == is_positive(d));
  }
}
