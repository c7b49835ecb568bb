#include "fclp/jsonio.hpp"

namespace fclp {

using nlohmann::json;

json term_to_json(const Term& t) {
  if (t.is_var()) throw Error("cannot serialize non-ground term");
  if (t.is_int()) return t.num;
  if (t.args().empty()) return t.name;
  json args = json::array();
  for (const auto& a : t.args()) args.push_back(term_to_json(a));
  return json{{"name", t.name}, {"args", std::move(args)}};
}

Term term_from_json(const json& j) {
  if (j.is_number_integer()) return Term::integer(j.get<long long>());
  if (j.is_string()) return Term::fun(j.get<std::string>());
  if (j.is_object() && j.contains("name")) {
    std::vector<Term> args;
    if (j.contains("args"))
      for (const auto& a : j["args"]) args.push_back(term_from_json(a));
    return Term::fun(j["name"].get<std::string>(), std::move(args));
  }
  throw Error("malformed term JSON: " + j.dump());
}

json solution_to_json(const FactSet& facts) {
  json out = json::array();
  for (const auto& f : facts) {
    json args = json::array();
    for (const auto& a : f.attr.args) args.push_back(term_to_json(a));
    out.push_back(json{{"name", f.attr.pred},
                       {"args", std::move(args)},
                       {"value", term_to_json(f.value)}});
  }
  return out;
}

FactSet solution_from_json(const json& j) {
  if (!j.is_array()) throw Error("expected a JSON array of facts");
  FactSet out;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("name"))
      throw Error("malformed fact JSON: " + item.dump());
    Fact f;
    f.attr.pred = item["name"].get<std::string>();
    if (item.contains("args"))
      for (const auto& a : item["args"]) f.attr.args.push_back(term_from_json(a));
    f.value = item.contains("value") ? term_from_json(item["value"]) : unit_term();
    out.insert(std::move(f));
  }
  return out;
}

FactSet facts_from_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error("invalid JSON");
  return solution_from_json(j);
}

}  // namespace fclp
