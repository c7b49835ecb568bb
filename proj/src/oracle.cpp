#include "fclp/oracle.hpp"

#include <deque>
#include <random>

#include "fclp/builtins.hpp"

namespace fclp {

namespace {

bool match_app(const std::vector<Term>& patterns, const std::vector<Term>& ground,
               Substitution& sigma) {
  if (patterns.size() != ground.size()) return false;
  for (size_t i = 0; i < patterns.size(); ++i) {
    auto next = match(patterns[i], ground[i], sigma);
    if (!next) return false;
    sigma = std::move(*next);
  }
  return true;
}

void search(const std::vector<Premise>& premises, size_t i, const FactSet& db,
            const Substitution& sigma,
            const std::function<void(const Substitution&)>& yield) {
  if (i == premises.size()) {
    yield(sigma);
    return;
  }
  const Premise& p = premises[i];
  if (p.kind == Premise::Kind::Builtin) {
    for (const auto& next : solve_builtin(p, sigma))
      search(premises, i + 1, db, next, yield);
    return;
  }
  for (const auto& f : db) {
    if (f.attr.pred != p.pred) continue;
    Substitution next = sigma;
    if (!match_app(p.args, f.attr.args, next)) continue;
    auto with_value = match(p.value, f.value, next);
    if (!with_value) continue;
    search(premises, i + 1, db, *with_value, yield);
  }
}

// D extended by one fact, or nullopt when the attribute already has a
// different value.
std::optional<FactSet> extend(const FactSet& db, const Attribute& a, const Term& v) {
  for (const auto& f : db)
    if (f.attr == a) return f.value == v ? std::optional<FactSet>(db) : std::nullopt;
  FactSet out = db;
  out.insert(Fact{a, v});
  return out;
}

}  // namespace

void satisfying_substitutions(const std::vector<Premise>& premises, const FactSet& db,
                              const std::function<void(const Substitution&)>& yield) {
  search(premises, 0, db, {}, yield);
}

std::set<std::set<FactSet>> evolutions(const FactSet& db, const Program& p) {
  std::set<std::set<FactSet>> out;
  for (const auto& rule : p.rules) {
    satisfying_substitutions(rule.premises, db, [&](const Substitution& sigma) {
      GroundHead gh = ground_head(sigma, rule.head);
      std::set<FactSet> s;
      if (gh.open) s.insert(db);
      for (const auto& v : gh.values)
        if (auto e = extend(db, gh.attr, v)) s.insert(std::move(*e));
      out.insert(std::move(s));
    });
  }
  out.insert({db});
  return out;
}

bool is_saturated(const FactSet& db, const Program& p) {
  std::set<FactSet> trivial{db};
  for (const auto& s : evolutions(db, p))
    if (s != trivial) return false;
  return true;
}

ExhaustiveResult enumerate_solutions_exhaustive(const Program& p, long long fuel,
                                                unsigned long long shuffle_seed) {
  ExhaustiveResult res;
  std::mt19937_64 rng(shuffle_seed);
  std::deque<FactSet> frontier{FactSet{}};
  std::set<FactSet> visited{FactSet{}};
  while (!frontier.empty()) {
    if (fuel-- <= 0) {
      res.fuel_exhausted = true;
      return res;
    }
    size_t pick = 0;
    if (shuffle_seed)
      pick = std::uniform_int_distribution<size_t>(0, frontier.size() - 1)(rng);
    FactSet db = std::move(frontier[pick]);
    frontier.erase(frontier.begin() + static_cast<long>(pick));

    bool saturated = true;
    std::set<FactSet> trivial{db};
    for (const auto& s : evolutions(db, p)) {
      if (s != trivial) saturated = false;
      for (const auto& next : s)
        if (next != db && visited.insert(next).second) frontier.push_back(next);
    }
    if (saturated) res.solutions.insert(std::move(db));
  }
  return res;
}

FixpointResult datalog_fixpoint(const Program& p, long long fuel) {
  FixpointResult res;
  FactSet db;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& rule : p.rules) {
      std::vector<Fact> found;
      satisfying_substitutions(rule.premises, db, [&](const Substitution& sigma) {
        GroundHead gh = ground_head(sigma, rule.head);
        for (const auto& v : gh.values) found.push_back(Fact{gh.attr, v});
      });
      for (auto& f : found) {
        if (db.insert(std::move(f)).second) {
          changed = true;
          if (fuel-- <= 0) {
            res.fuel_exhausted = true;
            for (const auto& g : db) res.model.insert(g.attr);
            return res;
          }
        }
      }
    }
  }
  for (const auto& f : db) res.model.insert(f.attr);
  return res;
}

}  // namespace fclp
