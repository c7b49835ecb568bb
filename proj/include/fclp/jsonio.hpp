#ifndef FCLP_JSONIO_HPP
#define FCLP_JSONIO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "fclp/lattice.hpp"
#include "fclp/term.hpp"

namespace fclp {

// Term encoding: integer | string (constant) | {"name": ..., "args": [...]}.
nlohmann::json term_to_json(const Term& t);
Term term_from_json(const nlohmann::json& j);

// A solution document: facts as {"name", "args", "value"}, sorted
// canonically.
nlohmann::json solution_to_json(const FactSet& facts);
FactSet solution_from_json(const nlohmann::json& j);

// Parses a JSON fact array, e.g. the --facts input. Throws Error on
// malformed input.
FactSet facts_from_json_text(const std::string& text);

}  // namespace fclp

#endif
