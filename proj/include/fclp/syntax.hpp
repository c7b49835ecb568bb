#ifndef FCLP_SYNTAX_HPP
#define FCLP_SYNTAX_HPP

#include <optional>
#include <string>
#include <vector>

#include "fclp/rule.hpp"
#include "fclp/term.hpp"

namespace fclp {

struct Location {
  int line = 0;
  int col = 0;
};

struct Diagnostic {
  enum class Severity { Error, Warning };
  Severity severity = Severity::Error;
  std::string message;
  Location loc;
};

std::string to_string(const Diagnostic& d);

// Pre-desugaring program forms. Wildcards are variables named "_";
// value-free heads and premises keep their written shape so printing
// reproduces the source.
struct SrcHead {
  enum class Kind { ValueFree, Is, IsQuestion, Braces };
  std::string pred;
  std::vector<Term> args;
  Kind kind = Kind::ValueFree;
  std::vector<Term> values;
  Location loc;
};

struct SrcPremise {
  bool infix = false;
  // application form: pred args [is value]
  std::string pred;
  std::vector<Term> args;
  bool has_value = false;
  Term value = unit_term();
  // infix form: lhs op rhs
  std::string op;
  Term lhs, rhs;
  Location loc;
};

struct SrcDecl {
  enum class Kind { Rule, Builtin, Forbid, Demand };
  Kind kind = Kind::Rule;
  SrcHead head;                   // Rule
  std::vector<SrcPremise> premises;  // Rule / Forbid / Demand
  std::string builtin_id;         // Builtin: INT_PLUS / INT_MINUS
  std::string builtin_ident;      // Builtin: bound identifier
  Location loc;
};

struct SourceProgram {
  std::vector<SrcDecl> decls;
};

bool operator==(const SrcHead& a, const SrcHead& b);
bool operator==(const SrcPremise& a, const SrcPremise& b);
bool operator==(const SrcDecl& a, const SrcDecl& b);
bool operator==(const SourceProgram& a, const SourceProgram& b);

struct ParseResult {
  std::optional<SourceProgram> program;  // set iff no error diagnostics
  std::vector<Diagnostic> diagnostics;
};

ParseResult parse(const std::string& text);
std::string print(const SourceProgram& src);

struct DesugarResult {
  std::optional<Program> program;
  std::vector<Diagnostic> diagnostics;
};

DesugarResult desugar(const SourceProgram& src);

// Static checks on the desugared form: range restriction of head
// variables, left-to-right groundability of builtin premises. Empty
// result means the program is accepted.
std::vector<Diagnostic> check_program(const Program& p);

// parse + desugar + check in one step.
struct LoadResult {
  std::optional<Program> program;
  std::vector<Diagnostic> diagnostics;
};

LoadResult load_program(const std::string& text);

}  // namespace fclp

#endif
