#ifndef FCLP_SOLVER_HPP
#define FCLP_SOLVER_HPP

#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "fclp/lattice.hpp"
#include "fclp/rule.hpp"

namespace fclp {

// Pending alternatives for one attribute: a pairwise-incompatible set of
// constraints, specialized so joining another rule head is cheap. At
// most one noneOf member can appear (any two noneOf constraints are
// compatible).
struct AttributeChoices {
  std::set<Term> justs;
  std::optional<std::set<Term>> none;

  size_t size() const { return justs.size() + (none ? 1 : 0); }
  std::vector<Constraint> candidates() const;
  bool operator==(const AttributeChoices& o) const {
    return justs == o.justs && none == o.none;
  }
};

// Static per-program matching metadata shared by all solve states: for
// each relation premise, which variables the preceding premises bind
// (the join key), and a predicate-to-premise index.
struct ProgramIndex {
  explicit ProgramIndex(Program p);

  Program program;
  struct PremiseMeta {
    std::vector<std::string> shared_vars;
  };
  std::vector<std::vector<PremiseMeta>> premise_meta;  // [rule][premise]
  std::map<std::string, std::vector<std::pair<int, int>>> by_pred;
};

// Forward-chaining state: the database, the pending-choices agenda, and
// the satisfied-prefix index that makes propagation incremental. The
// constructor fires premise-free prefixes; call deduce afterwards.
class SolveState {
 public:
  explicit SolveState(std::shared_ptr<const ProgramIndex> index);

  // Sets db[a] := c (c must be an upper bound of db[a]) and propagates
  // newly satisfied rules into the agenda. Check conflicted() after.
  void insert(const Attribute& a, const Constraint& c);

  enum class DeduceResult { Ok, Conflict, FuelExhausted };
  // Repeatedly inserts single-candidate agenda entries; decrements fuel
  // per insertion.
  DeduceResult deduce(long long& fuel);

  bool conflicted() const { return conflict_; }
  bool saturated() const { return !conflict_ && agenda_.empty(); }
  bool positive() const;
  bool demands_satisfied() const;

  // Ordered copies, for tests and the validate cross-check; the solver's
  // own lookups go through db_at / agenda_at.
  std::map<Attribute, Constraint> db() const { return {db_.begin(), db_.end()}; }
  Constraint db_at(const Attribute& a) const;
  std::map<Attribute, AttributeChoices> agenda() const {
    return {agenda_.begin(), agenda_.end()};
  }
  const AttributeChoices& agenda_at(const Attribute& a) const {
    return agenda_.at(a);
  }
  const std::vector<Attribute>& agenda_keys() const { return agenda_keys_; }

  // The definite assignments, reserved ($-prefixed) predicates removed.
  FactSet solution() const;

 private:
  struct TermVecHash {
    size_t operator()(const std::vector<Term>& v) const {
      size_t h = 0x9e3779b97f4a7c15ULL;
      for (const auto& t : v) h = h * 31 + hash_value(t);
      return h;
    }
  };
  struct SubstHash {
    size_t operator()(const Substitution& s) const {
      size_t h = 0x9e3779b97f4a7c15ULL;
      for (const auto& [name, t] : s)
        h = h * 31 + std::hash<std::string>{}(name) * 7 + hash_value(t);
      return h;
    }
  };
  struct PremiseState {
    std::unordered_set<Substitution, SubstHash> prefixes;
    std::unordered_map<std::vector<Term>, std::vector<Substitution>, TermVecHash>
        prefix_by_key;
    std::unordered_map<std::vector<Term>, std::vector<std::pair<Attribute, Term>>,
                       TermVecHash>
        facts_by_key;
  };

  void advance(int rule, size_t pos, const Substitution& sigma);
  void fire_head(int rule, const Substitution& sigma);
  void join_head(const GroundHead& head);
  void set_entry(const Attribute& a, AttributeChoices entry);
  void drop_entry(const Attribute& a);
  void propagate(const Attribute& a, const Term& value);

  std::shared_ptr<const ProgramIndex> index_;
  std::unordered_map<Attribute, Constraint, AttributeHash> db_;
  std::unordered_map<Attribute, AttributeChoices, AttributeHash> agenda_;
  std::set<Attribute> forced_;  // agenda keys with exactly one candidate
  std::vector<Attribute> agenda_keys_;
  std::unordered_map<Attribute, size_t, AttributeHash> agenda_pos_;
  std::vector<std::vector<PremiseState>> matching_;  // [rule][premise]
  bool conflict_ = false;
};

// From-scratch recomputation of the pending agenda for a database; the
// incremental SolveState must agree with this (used as a debug
// cross-check and in tests).
std::map<Attribute, AttributeChoices> recompute_agenda(
    const Program& p, const std::map<Attribute, Constraint>& db);

// The alternatives a database admits at one attribute, as a choice set
// over single-attribute databases (the entry {db[a]} itself when no rule
// head touches a, the empty set on conflict).
ChoiceSet immediate_consequence_at(const Program& p, const ConstraintDatabase& db,
                                   const Attribute& a);
// The lub of immediate_consequence_at over every relevant attribute,
// joined with {db}.
ChoiceSet immediate_consequence(const Program& p, const ConstraintDatabase& db);

struct SolveStats {
  long long inserts = 0;
  long long backtracks = 0;  // conflict-abandoned decision-tree children
  long long models = 0;      // saturated leaves reached
  long long rejected = 0;    // saturated leaves that were not solutions
};

enum class SolveStatus { Solution, NoSolution, FuelExhausted };

struct SolveResult {
  SolveStatus status = SolveStatus::NoSolution;
  FactSet solution;
  SolveStats stats;
};

struct EnumerateResult {
  std::vector<FactSet> solutions;
  bool exhausted = false;
  bool fuel_exhausted = false;
  SolveStats stats;
};

struct SolveOptions {
  unsigned long long seed = 0;
  long long fuel = 10'000'000;
  // Cross-check the incremental agenda against recompute_agenda at every
  // choice point (slow; tests only).
  bool validate = false;
};

// A solve session owns the persistent decision tree. Solutions are found
// by random descents from the root; exhausted subtrees are pruned and
// revisited descents replay recorded choices deterministically.
class Solver {
 public:
  Solver(const Program& p, SolveOptions options = {});

  SolveResult solve_one();
  EnumerateResult enumerate(size_t max_solutions);

  const SolveStats& stats() const { return stats_; }

 private:
  struct Node {
    bool initialized = false;
    bool dead = false;
    Attribute attr;
    std::vector<Constraint> cands;
    std::vector<std::unique_ptr<Node>> kids;
    std::vector<char> exhausted;
  };
  enum class Descent { Solution, Restart, Exhausted, FuelExhausted };

  Descent descend(FactSet& out);
  void init_node(Node& node, const SolveState& st);
  int pick_child(const Node& node);
  bool child_viable(const Node& node, size_t i) const;

  std::shared_ptr<const ProgramIndex> index_;
  SolveOptions options_;
  std::mt19937_64 rng_;
  long long fuel_;
  Node root_;
  bool root_settled_ = false;  // the no-choice (deterministic) case ran
  SolveStats stats_;
  std::set<FactSet> seen_;
};

}  // namespace fclp

#endif
