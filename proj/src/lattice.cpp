#include "fclp/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace fclp {

int compare(const Constraint& a, const Constraint& b) {
  if (a.is_just != b.is_just) return a.is_just ? 1 : -1;
  if (a.is_just) return compare(a.value, b.value);
  if (a.excluded.size() != b.excluded.size())
    return a.excluded.size() < b.excluded.size() ? -1 : 1;
  auto ia = a.excluded.begin();
  auto ib = b.excluded.begin();
  for (; ia != a.excluded.end(); ++ia, ++ib)
    if (int c = compare(*ia, *ib)) return c;
  return 0;
}

std::string to_string(const Constraint& c) {
  if (c.is_just) return "just " + to_string(c.value);
  std::ostringstream out;
  out << "noneOf {";
  bool first = true;
  for (const auto& t : c.excluded) {
    if (!first) out << ", ";
    first = false;
    out << to_string(t);
  }
  out << '}';
  return out.str();
}

bool constraint_leq(const Constraint& c1, const Constraint& c2) {
  if (c1.is_just) return c2.is_just && c1.value == c2.value;
  if (c2.is_just) return !c1.excluded.count(c2.value);
  return std::includes(c2.excluded.begin(), c2.excluded.end(),
                       c1.excluded.begin(), c1.excluded.end(),
                       [](const Term& a, const Term& b) { return a < b; });
}

std::optional<Constraint> constraint_lub(const Constraint& c1, const Constraint& c2) {
  if (c1.is_just && c2.is_just) {
    if (c1.value == c2.value) return c1;
    return std::nullopt;
  }
  if (c1.is_just) {
    if (c2.excluded.count(c1.value)) return std::nullopt;
    return c1;
  }
  if (c2.is_just) {
    if (c1.excluded.count(c2.value)) return std::nullopt;
    return c2;
  }
  Constraint out = c1;
  out.excluded.insert(c2.excluded.begin(), c2.excluded.end());
  return out;
}

std::optional<Constraint> constraint_lub(const std::vector<Constraint>& cs) {
  Constraint acc = Constraint::bottom();
  for (const auto& c : cs) {
    auto next = constraint_lub(acc, c);
    if (!next) return std::nullopt;
    acc = std::move(*next);
  }
  return acc;
}

const Constraint& ConstraintDatabase::get(const Attribute& a) const {
  static const Constraint bot = Constraint::bottom();
  auto it = entries_.find(a);
  return it == entries_.end() ? bot : it->second;
}

ConstraintDatabase ConstraintDatabase::with(const Attribute& a, Constraint c) const {
  ConstraintDatabase out = *this;
  out.assign(a, std::move(c));
  return out;
}

void ConstraintDatabase::assign(const Attribute& a, Constraint c) {
  if (c.is_bottom())
    entries_.erase(a);
  else
    entries_.insert_or_assign(a, std::move(c));
}

int compare(const ConstraintDatabase& a, const ConstraintDatabase& b) {
  auto ia = a.entries().begin();
  auto ib = b.entries().begin();
  for (; ia != a.entries().end() && ib != b.entries().end(); ++ia, ++ib) {
    if (int c = compare(ia->first, ib->first)) return c;
    if (int c = compare(ia->second, ib->second)) return c;
  }
  if (ia != a.entries().end()) return 1;
  if (ib != b.entries().end()) return -1;
  return 0;
}

std::string to_string(const ConstraintDatabase& db) {
  std::ostringstream out;
  out << '(';
  bool first = true;
  for (const auto& [a, c] : db.entries()) {
    if (!first) out << ", ";
    first = false;
    out << to_string(a) << " -> " << to_string(c);
  }
  out << ')';
  return out.str();
}

bool db_leq(const ConstraintDatabase& d, const ConstraintDatabase& e) {
  // Entries absent from e denote bottom, so d's extra keys must be bottom
  // too; checking d's stored keys against e suffices for the rest.
  for (const auto& [a, c] : d.entries())
    if (!constraint_leq(c, e.get(a))) return false;
  return true;
}

std::optional<ConstraintDatabase> db_lub(const ConstraintDatabase& d,
                                         const ConstraintDatabase& e) {
  ConstraintDatabase out = d;
  for (const auto& [a, c] : e.entries()) {
    auto merged = constraint_lub(out.get(a), c);
    if (!merged) return std::nullopt;
    out.assign(a, std::move(*merged));
  }
  return out;
}

std::optional<ConstraintDatabase> db_lub(const std::vector<ConstraintDatabase>& ds) {
  ConstraintDatabase acc;
  for (const auto& d : ds) {
    auto next = db_lub(acc, d);
    if (!next) return std::nullopt;
    acc = std::move(*next);
  }
  return acc;
}

bool compatible(const ConstraintDatabase& d, const ConstraintDatabase& e) {
  return db_lub(d, e).has_value();
}

bool is_positive(const ConstraintDatabase& db) {
  for (const auto& [a, c] : db.entries())
    if (!c.is_just) return false;
  return true;
}

bool consistent(const FactSet& facts) {
  const Attribute* prev = nullptr;
  for (const auto& f : facts) {
    if (prev && *prev == f.attr) return false;
    prev = &f.attr;
  }
  return true;
}

FactSet erase(const ConstraintDatabase& db) {
  FactSet out;
  for (const auto& [a, c] : db.entries())
    if (c.is_just) out.insert(Fact{a, c.value});
  return out;
}

ConstraintDatabase promote(const FactSet& facts) {
  if (!consistent(facts)) throw InconsistentFactSet();
  ConstraintDatabase out;
  for (const auto& f : facts) out.assign(f.attr, Constraint::just(f.value));
  return out;
}

bool pairwise_incompatible(const ChoiceSet& c) {
  for (auto i = c.begin(); i != c.end(); ++i)
    for (auto j = std::next(i); j != c.end(); ++j)
      if (compatible(*i, *j)) return false;
  return true;
}

bool choice_leq(const ChoiceSet& c1, const ChoiceSet& c2) {
  for (const auto& d2 : c2) {
    bool found = false;
    for (const auto& d1 : c1)
      if (db_leq(d1, d2)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

ChoiceSet choice_lub(const ChoiceSet& c1, const ChoiceSet& c2) {
  ChoiceSet out;
  for (const auto& d1 : c1)
    for (const auto& d2 : c2)
      if (auto merged = db_lub(d1, d2)) out.insert(std::move(*merged));
  return out;
}

ChoiceSet choice_lub(const std::vector<ChoiceSet>& cs) {
  ChoiceSet acc = choice_bottom();
  for (const auto& c : cs) acc = choice_lub(acc, c);
  return acc;
}

}  // namespace fclp
