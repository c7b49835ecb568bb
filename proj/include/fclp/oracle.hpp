#ifndef FCLP_ORACLE_HPP
#define FCLP_ORACLE_HPP

#include <functional>
#include <set>

#include "fclp/lattice.hpp"
#include "fclp/rule.hpp"

namespace fclp {

// Enumerates every substitution satisfying the premise list in D,
// invoking yield for each. Exhaustive and exponential; reference use
// only.
void satisfying_substitutions(const std::vector<Premise>& premises, const FactSet& db,
                              const std::function<void(const Substitution&)>& yield);

// The successor-sets of D under P: one set S per applicable (rule,
// substitution) pair plus the trivial {D}. A closed rule's S holds every
// consistent extension by one listed value (possibly none); an open
// rule's S holds D itself plus the consistent extension.
std::set<std::set<FactSet>> evolutions(const FactSet& db, const Program& p);

// True when every successor-set of D is {D}.
bool is_saturated(const FactSet& db, const Program& p);

struct ExhaustiveResult {
  std::set<FactSet> solutions;
  bool fuel_exhausted = false;
};

// Breadth-first closure of the step relation from the empty database,
// collecting saturated databases. Fuel counts expanded nodes.
// shuffle_seed != 0 randomizes expansion order (the result must not
// depend on it).
ExhaustiveResult enumerate_solutions_exhaustive(const Program& p, long long fuel,
                                                unsigned long long shuffle_seed = 0);

struct FixpointResult {
  std::set<Attribute> model;
  bool fuel_exhausted = false;
};

// Least model of a value-free program by naive iteration. Fuel counts
// derived facts.
FixpointResult datalog_fixpoint(const Program& p, long long fuel);

}  // namespace fclp

#endif
