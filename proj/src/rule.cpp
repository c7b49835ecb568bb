#include "fclp/rule.hpp"

#include <algorithm>
#include <sstream>

namespace fclp {

std::string builtin_name(BuiltinId id) {
  switch (id) {
    case BuiltinId::Eq: return "==";
    case BuiltinId::Neq: return "!=";
    case BuiltinId::Lt: return "<";
    case BuiltinId::Gt: return ">";
    case BuiltinId::IntPlus: return "INT_PLUS";
    case BuiltinId::IntMinus: return "INT_MINUS";
  }
  return "?";
}

Premise Premise::relation(std::string pred, std::vector<Term> args, Term value) {
  Premise p;
  p.kind = Kind::Relation;
  p.pred = std::move(pred);
  p.args = std::move(args);
  p.value = std::move(value);
  return p;
}

Premise Premise::comparison(BuiltinId id, Term lhs, Term rhs) {
  Premise p;
  p.kind = Kind::Builtin;
  p.builtin = id;
  p.args = {std::move(lhs), std::move(rhs)};
  p.has_value = false;
  return p;
}

Premise Premise::function(BuiltinId id, std::vector<Term> args, Term value) {
  Premise p;
  p.kind = Kind::Builtin;
  p.builtin = id;
  p.args = std::move(args);
  p.value = std::move(value);
  return p;
}

GroundHead ground_head(const Substitution& sigma, const RuleHead& h) {
  GroundHead out;
  out.attr.pred = h.pred;
  out.attr.args.reserve(h.args.size());
  for (const auto& a : h.args) out.attr.args.push_back(apply_subst(sigma, a));
  out.open = h.open;
  for (const auto& v : h.values) {
    Term g = apply_subst(sigma, v);
    if (std::find(out.values.begin(), out.values.end(), g) == out.values.end())
      out.values.push_back(std::move(g));
  }
  return out;
}

static void print_app(std::ostream& out, const std::string& name,
                      const std::vector<Term>& args) {
  out << name;
  for (const auto& a : args) {
    out << ' ';
    std::string s = to_string(a);
    bool needs_parens = !a.is_var() && !a.is_int() && !a.args().empty();
    if (needs_parens)
      out << '(' << s << ')';
    else
      out << s;
  }
}

std::string to_string(const Premise& p) {
  std::ostringstream out;
  if (p.kind == Premise::Kind::Relation) {
    print_app(out, p.pred, p.args);
    if (p.value != unit_term()) out << " is " << to_string(p.value);
  } else if (!p.has_value) {
    out << to_string(p.args[0]) << ' ' << builtin_name(p.builtin) << ' '
        << to_string(p.args[1]);
  } else {
    print_app(out, builtin_name(p.builtin), p.args);
    out << " is " << to_string(p.value);
  }
  return out.str();
}

std::string to_string(const Rule& r) {
  std::ostringstream out;
  print_app(out, r.head.pred, r.head.args);
  if (r.head.open) {
    out << " is? " << to_string(r.head.values.at(0));
  } else if (!(r.head.values.size() == 1 && r.head.values[0] == unit_term())) {
    out << " is { ";
    for (size_t i = 0; i < r.head.values.size(); ++i) {
      if (i) out << ", ";
      out << to_string(r.head.values[i]);
    }
    out << " }";
  }
  if (!r.premises.empty()) {
    out << " :- ";
    for (size_t i = 0; i < r.premises.size(); ++i) {
      if (i) out << ", ";
      out << to_string(r.premises[i]);
    }
  }
  out << '.';
  return out.str();
}

std::string to_string(const Program& p) {
  std::ostringstream out;
  for (const auto& r : p.rules) out << to_string(r) << '\n';
  return out.str();
}

}  // namespace fclp
