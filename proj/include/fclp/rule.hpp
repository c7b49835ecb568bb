#ifndef FCLP_RULE_HPP
#define FCLP_RULE_HPP

#include <string>
#include <vector>

#include "fclp/term.hpp"

namespace fclp {

enum class BuiltinId { Eq, Neq, Lt, Gt, IntPlus, IntMinus };

std::string builtin_name(BuiltinId id);

// A rule premise. Relation premises match against stored facts; builtin
// premises are solved arithmetically. Comparison builtins (==, !=, <, >)
// carry their two operands in `args` and have no value slot.
struct Premise {
  enum class Kind { Relation, Builtin };

  Kind kind = Kind::Relation;
  std::string pred;                 // Relation only
  BuiltinId builtin = BuiltinId::Eq;  // Builtin only
  std::vector<Term> args;
  bool has_value = true;
  Term value = unit_term();  // pattern; meaningful when has_value

  static Premise relation(std::string pred, std::vector<Term> args, Term value);
  static Premise comparison(BuiltinId id, Term lhs, Term rhs);
  static Premise function(BuiltinId id, std::vector<Term> args, Term value);
};

struct RuleHead {
  std::string pred;
  std::vector<Term> args;
  bool open = false;
  std::vector<Term> values;  // open: exactly one; closed: nonempty
};

struct Rule {
  RuleHead head;
  std::vector<Premise> premises;
};

struct Program {
  std::vector<Rule> rules;
  // Attributes that must be assigned `yes` for a model to count as a
  // solution (produced by desugaring demand directives).
  std::vector<Attribute> demands;
};

// A head instantiated by a substitution.
struct GroundHead {
  Attribute attr;
  bool open = false;
  std::vector<Term> values;  // deduplicated, source order preserved
};

// Instantiates h under sigma; closed value lists are deduplicated
// preserving first occurrence. Throws UnboundVariable.
GroundHead ground_head(const Substitution& sigma, const RuleHead& h);

std::string to_string(const Premise& p);
std::string to_string(const Rule& r);
std::string to_string(const Program& p);

}  // namespace fclp

#endif
