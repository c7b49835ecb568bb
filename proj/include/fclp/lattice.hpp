#ifndef FCLP_LATTICE_HPP
#define FCLP_LATTICE_HPP

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "fclp/term.hpp"

namespace fclp {

struct InconsistentFactSet : Error {
  InconsistentFactSet() : Error("fact set assigns two values to one attribute") {}
};

// Partial knowledge about one attribute: either a definite value
// ("just t") or a finite set of excluded values ("noneOf X").
struct Constraint {
  bool is_just = false;
  Term value;               // when is_just
  std::set<Term> excluded;  // when !is_just

  static Constraint just(Term t) {
    Constraint c;
    c.is_just = true;
    c.value = std::move(t);
    return c;
  }
  static Constraint none_of(std::set<Term> x) {
    Constraint c;
    c.excluded = std::move(x);
    return c;
  }
  static Constraint bottom() { return Constraint{}; }
  bool is_bottom() const { return !is_just && excluded.empty(); }
};

int compare(const Constraint& a, const Constraint& b);
inline bool operator==(const Constraint& a, const Constraint& b) { return compare(a, b) == 0; }
inline bool operator!=(const Constraint& a, const Constraint& b) { return compare(a, b) != 0; }
inline bool operator<(const Constraint& a, const Constraint& b) { return compare(a, b) < 0; }

std::string to_string(const Constraint& c);

bool constraint_leq(const Constraint& c1, const Constraint& c2);
// Least upper bound of two constraints, or nullopt when they are
// incompatible. Incompatibility is ordinary control flow here, not an
// error.
std::optional<Constraint> constraint_lub(const Constraint& c1, const Constraint& c2);
std::optional<Constraint> constraint_lub(const std::vector<Constraint>& cs);

// Finitely-supported map from attributes to constraints. Bottom entries
// (noneOf of nothing) are never stored, so structural equality coincides
// with semantic equality.
class ConstraintDatabase {
 public:
  ConstraintDatabase() = default;

  const Constraint& get(const Attribute& a) const;
  // Functional update; storing bottom removes the entry.
  ConstraintDatabase with(const Attribute& a, Constraint c) const;
  void assign(const Attribute& a, Constraint c);

  const std::map<Attribute, Constraint>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

 private:
  std::map<Attribute, Constraint> entries_;
};

int compare(const ConstraintDatabase& a, const ConstraintDatabase& b);
inline bool operator==(const ConstraintDatabase& a, const ConstraintDatabase& b) { return compare(a, b) == 0; }
inline bool operator!=(const ConstraintDatabase& a, const ConstraintDatabase& b) { return compare(a, b) != 0; }
inline bool operator<(const ConstraintDatabase& a, const ConstraintDatabase& b) { return compare(a, b) < 0; }

std::string to_string(const ConstraintDatabase& db);

bool db_leq(const ConstraintDatabase& d, const ConstraintDatabase& e);
std::optional<ConstraintDatabase> db_lub(const ConstraintDatabase& d,
                                         const ConstraintDatabase& e);
std::optional<ConstraintDatabase> db_lub(const std::vector<ConstraintDatabase>& ds);
bool compatible(const ConstraintDatabase& d, const ConstraintDatabase& e);
bool is_positive(const ConstraintDatabase& db);

// A consistent set of facts: at most one value per attribute.
using FactSet = std::set<Fact>;

bool consistent(const FactSet& facts);

// Drops noneOf entries, keeping the definite assignments.
FactSet erase(const ConstraintDatabase& db);
// Lifts a consistent fact set to a (positive) constraint database.
// Throws InconsistentFactSet.
ConstraintDatabase promote(const FactSet& facts);

// A pairwise-incompatible set of constraint databases, kept in canonical
// order for reproducible enumeration.
using ChoiceSet = std::set<ConstraintDatabase>;

bool pairwise_incompatible(const ChoiceSet& c);
bool choice_leq(const ChoiceSet& c1, const ChoiceSet& c2);
// All defined lubs of one-member-per-input selections; incompatible
// selections are dropped (possibly yielding the empty set, the top).
ChoiceSet choice_lub(const ChoiceSet& c1, const ChoiceSet& c2);
ChoiceSet choice_lub(const std::vector<ChoiceSet>& cs);

inline ChoiceSet choice_bottom() { return {ConstraintDatabase{}}; }

}  // namespace fclp

#endif
