#ifndef FCLP_ASP_HPP
#define FCLP_ASP_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fclp/syntax.hpp"
#include "fclp/term.hpp"

namespace fclp {

// One answer-set-programming rule: `head :- pos, not neg.`; a headless
// constraint `:- body.`; or a choice rule `{head} :- body.`.
struct AspRule {
  enum class Kind { Normal, Constraint, Choice };
  Kind kind = Kind::Normal;
  Attribute head;  // unused for Constraint
  std::vector<Attribute> pos;
  std::vector<Attribute> neg;
};

struct GroundAspProgram {
  std::vector<AspRule> rules;
};

struct AspParseResult {
  std::optional<GroundAspProgram> program;
  std::vector<Diagnostic> diagnostics;
};

// Text format: one rule per line, `h :- p1, ..., not q1, ... .`.
// Atoms are `p` or `p(t1,...,tn)`. Unless allow_nonground is set, a
// variable (capitalized) argument is an error.
AspParseResult parse_asp(const std::string& text, bool allow_nonground = false);

// Negation elimination: drop rules with a negated premise in x, strip
// the remaining negations. Normal rules only.
GroundAspProgram reduct(const GroundAspProgram& p, const std::set<Attribute>& x);

// Least model of a negation-free program.
std::set<Attribute> asp_least_model(const GroundAspProgram& p);

// True iff the least model of the reduct of p by x is exactly x.
bool is_stable_model(const GroundAspProgram& p, const std::set<Attribute>& x);

// All stable models, by testing every subset of the mentioned atoms.
// Exponential; oracle use only. Normal rules only.
std::set<std::set<Attribute>> brute_force_stable_models(const GroundAspProgram& p);

// Rule-language source text for the program. Each rule with m negated
// premises becomes m guarded open rules permitting `ff` plus one closed
// rule forcing `tt`; permissive instead emits unconditional open rules.
// Constraints become ok-rules; choice rules become `is { tt, ff }`.
std::string asp_to_fclp(const GroundAspProgram& p, bool permissive = false);

// Value-free rules annotated with the unit value, as source text.
// Input uses the same parenthesized atom syntax, without negation.
struct DatalogResult {
  std::optional<std::string> text;
  std::vector<Diagnostic> diagnostics;
};
DatalogResult datalog_to_fclp(const std::string& text);

}  // namespace fclp

#endif
