#ifndef FCLP_BUILTINS_HPP
#define FCLP_BUILTINS_HPP

#include <vector>

#include "fclp/rule.hpp"
#include "fclp/term.hpp"

namespace fclp {

struct InadmissibleMode : Error {
  explicit InadmissibleMode(const std::string& what) : Error(what) {}
};

struct NonIntegerArgument : Error {
  explicit NonIntegerArgument(const std::string& what) : Error(what) {}
};

// Solves a builtin premise under sigma, returning every minimal
// extension satisfying the relation (at most one for these builtins).
//
// Modes: == needs one ground side and binds the other by matching;
// !=, <, > need both sides ground; the arithmetic builtins need any two
// of (a, b, value) ground and solve for the third. An instantiation
// outside these modes throws InadmissibleMode; check_program rules such
// premises out statically.
std::vector<Substitution> solve_builtin(const Premise& premise,
                                        const Substitution& sigma);

// True when the builtin premise is solvable given that the variables in
// `bound` are known; on success adds the variables it binds.
bool builtin_mode_ok(const Premise& premise, std::set<std::string>& bound);

}  // namespace fclp

#endif
