#include <doctest.h>

#include "fclp/graphgen.hpp"
#include "fclp/jsonio.hpp"
#include "testutil.hpp"

using namespace fclp;
using nlohmann::json;

TEST_CASE("term JSON round-trips") {
  std::vector<Term> cases = {
      Term::fun("a"),
      Term::integer(-7),
      Term::fun("f", {Term::fun("a"), Term::integer(3)}),
      Term::fun("s", {Term::fun("s", {Term::fun("z")})}),
  };
  for (const auto& t : cases) {
    CAPTURE(to_string(t));
    CHECK(term_from_json(term_to_json(t)) == t);
  }

  CHECK(term_to_json(Term::fun("a")) == json("a"));
  CHECK(term_to_json(Term::integer(5)) == json(5));
  CHECK_THROWS_AS(term_to_json(Term::var("X")), Error);
  CHECK_THROWS_AS(term_from_json(json{{"bogus", 1}}), Error);
}

TEST_CASE("solution JSON round-trips") {
  FactSet facts{
      {Attribute{"edge", {Term::integer(1), Term::integer(2)}}, unit_term()},
      {Attribute{"color", {Term::fun("home")}}, Term::fun("blue")},
  };
  CHECK(solution_from_json(solution_to_json(facts)) == facts);
  CHECK(solution_from_json(solution_to_json({})) == FactSet{});
  CHECK_THROWS_AS(solution_from_json(json{{"name", "p"}}), Error);
}

TEST_CASE("fact arrays parse from text") {
  FactSet got = facts_from_json_text(
      R"([{"name":"edge","args":[1,2]},{"name":"p","value":"tt"}])");
  FactSet expect{
      {Attribute{"edge", {Term::integer(1), Term::integer(2)}}, unit_term()},
      {Attribute{"p", {}}, Term::fun("tt")},
  };
  CHECK(got == expect);
  CHECK_THROWS_AS(facts_from_json_text("not json"), Error);
  CHECK_THROWS_AS(facts_from_json_text("{}"), Error);
}

TEST_CASE("deterministic benchmark graphs") {
  SUBCASE("a path") {
    GraphInstance g = gen_graph("sparse-linear", 4, 0);
    CHECK(g.edges == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}});
    CHECK(g.nodes == 4);
  }

  SUBCASE("disjoint triangles with the remainder folded in") {
    GraphInstance g = gen_graph("sparse-cycles", 6, 0);
    CHECK(g.edges == std::vector<std::pair<int, int>>{
                         {1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6}, {6, 4}});
    // 7 nodes: the last cycle grows to length 4.
    GraphInstance g7 = gen_graph("sparse-cycles", 7, 0);
    CHECK(g7.edges == std::vector<std::pair<int, int>>{
                          {1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6}, {6, 7}, {7, 4}});
  }

  SUBCASE("random families hit their densities") {
    for (auto [family, want] :
         std::vector<std::pair<std::string, size_t>>{{"verysparse-random", 20},
                                                     {"sparse-random", 40},
                                                     {"mid-random", 80},
                                                     {"dense-random", 200}}) {
      GraphInstance g = gen_graph(family, 40, 7);
      CAPTURE(family);
      CHECK(g.edges.size() == want);
      std::set<std::pair<int, int>> distinct(g.edges.begin(), g.edges.end());
      CHECK(distinct.size() == g.edges.size());
      for (auto [a, b] : g.edges) {
        CHECK(a < b);
        CHECK(1 <= a);
        CHECK(b <= 40);
      }
    }
  }

  SUBCASE("same seed, same graph; different seed, different graph") {
    auto a = gen_graph("mid-random", 30, 11);
    auto b = gen_graph("mid-random", 30, 11);
    auto c = gen_graph("mid-random", 30, 12);
    CHECK(a.edges == b.edges);
    CHECK(a.edges != c.edges);
  }

  SUBCASE("unknown family is an error") {
    CHECK_THROWS_AS(gen_graph("no-such-family", 4, 0), Error);
    CHECK_THROWS_AS(gen_graph("sparse-linear", 0, 0), Error);
  }
}

TEST_CASE("graph fact rendering") {
  GraphInstance g = gen_graph("sparse-linear", 3, 0);
  CHECK(graph_facts(g, false) == "edge 1 2.\nedge 2 3.\n");
  CHECK(graph_facts(g, true) ==
        "node 1.\nnode 2.\nnode 3.\nedge 1 2.\nedge 2 3.\n");
  // The rendered facts load as a program.
  CHECK(load_program(graph_facts(g, true)).program);
}
