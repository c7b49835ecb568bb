#ifndef FCLP_TESTS_TESTUTIL_HPP
#define FCLP_TESTS_TESTUTIL_HPP

#include <random>
#include <set>
#include <string>
#include <vector>

#include "fclp/asp.hpp"
#include "fclp/lattice.hpp"
#include "fclp/oracle.hpp"
#include "fclp/solver.hpp"
#include "fclp/syntax.hpp"

namespace testutil {

inline fclp::Program load_or_throw(const std::string& text) {
  auto res = fclp::load_program(text);
  if (!res.program) {
    std::string msg = "program failed to load";
    for (const auto& d : res.diagnostics) msg += "\n  " + fclp::to_string(d);
    throw fclp::Error(msg);
  }
  return *res.program;
}

inline fclp::Fact fact(const std::string& pred, const std::string& value) {
  return {fclp::Attribute{pred, {}}, fclp::Term::fun(value)};
}

inline std::string render(const fclp::FactSet& facts) {
  std::string out;
  for (const auto& f : facts) {
    if (!out.empty()) out += ", ";
    out += fclp::to_string(f);
  }
  return out;
}

inline std::set<fclp::FactSet> solution_set(const fclp::Program& p,
                                            unsigned long long seed,
                                            size_t cap = 4096) {
  fclp::SolveOptions opts;
  opts.seed = seed;
  fclp::Solver solver(p, opts);
  auto res = solver.enumerate(cap);
  if (!res.exhausted) throw fclp::Error("enumeration did not exhaust the tree");
  return {res.solutions.begin(), res.solutions.end()};
}

// Random propositional-style programs over three nullary predicates and
// three constants; some rules copy a premise value through a variable so
// matching and propagation are exercised too. Always range-restricted.
inline fclp::Program random_program(std::mt19937_64& rng) {
  const std::vector<std::string> preds = {"p", "q", "r"};
  const std::vector<std::string> consts = {"a", "b", "c"};
  auto pick = [&](const std::vector<std::string>& v) {
    return v[rng() % v.size()];
  };

  fclp::Program prog;
  size_t nrules = 1 + rng() % 5;
  for (size_t i = 0; i < nrules; ++i) {
    fclp::Rule rule;
    rule.head.pred = pick(preds);
    size_t npremises = rng() % 3;
    bool var_head = npremises > 0 && rng() % 4 == 0;
    for (size_t j = 0; j < npremises; ++j) {
      bool var_premise = var_head && j == 0;
      rule.premises.push_back(fclp::Premise::relation(
          pick(preds), {},
          var_premise ? fclp::Term::var("X") : fclp::Term::fun(pick(consts))));
    }
    rule.head.open = rng() % 2 == 0;
    if (var_head) {
      rule.head.values = {fclp::Term::var("X")};
    } else if (rule.head.open) {
      rule.head.values = {fclp::Term::fun(pick(consts))};
    } else {
      rule.head.values = {fclp::Term::fun(pick(consts))};
      if (rng() % 2 == 0) {
        fclp::Term extra = fclp::Term::fun(pick(consts));
        if (extra != rule.head.values[0]) rule.head.values.push_back(extra);
      }
    }
    prog.rules.push_back(std::move(rule));
  }
  return prog;
}

// Random ground normal ASP programs over nullary propositions.
inline fclp::GroundAspProgram random_asp(std::mt19937_64& rng, size_t nprops = 6,
                                         size_t max_rules = 8) {
  std::vector<fclp::Attribute> props;
  for (size_t i = 0; i < nprops; ++i)
    props.push_back(fclp::Attribute{"p" + std::to_string(i), {}});

  fclp::GroundAspProgram prog;
  size_t nrules = 1 + rng() % max_rules;
  for (size_t i = 0; i < nrules; ++i) {
    fclp::AspRule rule;
    rule.head = props[rng() % props.size()];
    size_t npos = rng() % 3;
    size_t nneg = rng() % 3;
    for (size_t j = 0; j < npos; ++j) rule.pos.push_back(props[rng() % props.size()]);
    for (size_t j = 0; j < nneg; ++j) rule.neg.push_back(props[rng() % props.size()]);
    prog.rules.push_back(std::move(rule));
  }
  return prog;
}

// The atoms a translated ASP solution asserts as true.
inline std::set<fclp::Attribute> tt_projection(const fclp::FactSet& facts) {
  std::set<fclp::Attribute> out;
  const fclp::Term tt = fclp::Term::fun("tt");
  for (const auto& f : facts)
    if (f.value == tt) out.insert(f.attr);
  return out;
}

// Random lattice values over a small constant universe.
struct LatticeGen {
  std::mt19937_64 rng;
  std::vector<fclp::Term> universe;

  explicit LatticeGen(unsigned long long seed) : rng(seed) {
    for (const char* n : {"a", "b", "c", "d"}) universe.push_back(fclp::Term::fun(n));
  }

  fclp::Term term() { return universe[rng() % universe.size()]; }

  fclp::Constraint constraint() {
    if (rng() % 2 == 0) return fclp::Constraint::just(term());
    std::set<fclp::Term> x;
    size_t n = rng() % 3;
    for (size_t i = 0; i < n; ++i) x.insert(term());
    return fclp::Constraint::none_of(std::move(x));
  }

  fclp::Attribute attribute() {
    static const std::vector<std::string> preds = {"p", "q", "r"};
    return fclp::Attribute{preds[rng() % preds.size()], {}};
  }

  fclp::ConstraintDatabase database() {
    fclp::ConstraintDatabase db;
    size_t n = rng() % 3;
    for (size_t i = 0; i < n; ++i) db.assign(attribute(), constraint());
    return db;
  }

  // Built as a lub of singular choice sets so the pairwise-incompatible
  // invariant holds by construction.
  fclp::ChoiceSet choice_set() {
    std::vector<fclp::ChoiceSet> parts;
    size_t n = 1 + rng() % 2;
    for (size_t i = 0; i < n; ++i) {
      fclp::Attribute a = attribute();
      fclp::ChoiceSet part;
      size_t m = 1 + rng() % 2;
      for (size_t j = 0; j < m; ++j)
        part.insert(fclp::ConstraintDatabase{}.with(a, constraint()));
      if (!fclp::pairwise_incompatible(part)) continue;
      parts.push_back(std::move(part));
    }
    return fclp::choice_lub(parts);
  }

  // Every constraint over the universe (for least-upper-bound checks).
  std::vector<fclp::Constraint> all_constraints() {
    std::vector<fclp::Constraint> out;
    for (const auto& t : universe) out.push_back(fclp::Constraint::just(t));
    size_t n = universe.size();
    for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
      std::set<fclp::Term> x;
      for (size_t i = 0; i < n; ++i)
        if (mask & (size_t{1} << i)) x.insert(universe[i]);
      out.push_back(fclp::Constraint::none_of(std::move(x)));
    }
    return out;
  }

  // A database pointwise >= db, raising some entries.
  fclp::ConstraintDatabase raise(const fclp::ConstraintDatabase& db) {
    fclp::ConstraintDatabase out = db;
    for (int i = 0; i < 2; ++i) {
      fclp::Attribute a = attribute();
      const fclp::Constraint& cur = out.get(a);
      if (cur.is_just) continue;
      if (rng() % 2 == 0) {
        fclp::Term t = term();
        if (!cur.excluded.count(t)) out.assign(a, fclp::Constraint::just(t));
      } else {
        std::set<fclp::Term> x = cur.excluded;
        x.insert(term());
        out.assign(a, fclp::Constraint::none_of(std::move(x)));
      }
    }
    return out;
  }
};

}  // namespace testutil

#endif
