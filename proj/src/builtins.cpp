#include "fclp/builtins.hpp"

#include <optional>

namespace fclp {

namespace {

bool bound_under(const Term& t, const Substitution& sigma) {
  if (t.is_var()) return sigma.count(t.name) != 0;
  for (const auto& a : t.args())
    if (!bound_under(a, sigma)) return false;
  return true;
}

long long as_int(const Term& t) {
  if (!t.is_int()) throw NonIntegerArgument("expected integer, got " + to_string(t));
  return t.num;
}

std::optional<long long> add_checked(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) return std::nullopt;
  return r;
}

std::optional<long long> sub_checked(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) return std::nullopt;
  return r;
}

// Extends sigma so that pattern denotes exactly `value`, if possible.
void emit_match(const Term& pattern, const Term& value, const Substitution& sigma,
                std::vector<Substitution>& out) {
  if (auto extended = match(pattern, value, sigma)) out.push_back(std::move(*extended));
}

std::vector<Substitution> solve_arith(const Premise& p, const Substitution& sigma) {
  if (p.args.size() != 2 || !p.has_value)
    throw InadmissibleMode("arithmetic builtin needs two arguments and a value");
  const Term& ta = p.args[0];
  const Term& tb = p.args[1];
  const Term& tv = p.value;
  bool ba = bound_under(ta, sigma);
  bool bb = bound_under(tb, sigma);
  bool bv = bound_under(tv, sigma);
  if (ba + bb + bv < 2)
    throw InadmissibleMode("arithmetic builtin needs two of three parts ground");

  bool plus = p.builtin == BuiltinId::IntPlus;
  std::vector<Substitution> out;
  if (ba && bb) {
    long long a = as_int(apply_subst(sigma, ta));
    long long b = as_int(apply_subst(sigma, tb));
    auto r = plus ? add_checked(a, b) : sub_checked(a, b);
    if (!r) throw NonIntegerArgument("integer overflow");
    emit_match(tv, Term::integer(*r), sigma, out);
  } else if (ba && bv) {
    long long a = as_int(apply_subst(sigma, ta));
    long long v = as_int(apply_subst(sigma, tv));
    // plus: a + b = v; minus: a - b = v
    auto r = plus ? sub_checked(v, a) : sub_checked(a, v);
    if (!r) throw NonIntegerArgument("integer overflow");
    emit_match(tb, Term::integer(*r), sigma, out);
  } else {
    long long b = as_int(apply_subst(sigma, tb));
    long long v = as_int(apply_subst(sigma, tv));
    // plus: a = v - b; minus: a = v + b
    auto r = plus ? sub_checked(v, b) : add_checked(v, b);
    if (!r) throw NonIntegerArgument("integer overflow");
    emit_match(ta, Term::integer(*r), sigma, out);
  }
  return out;
}

std::vector<Substitution> solve_compare(const Premise& p, const Substitution& sigma) {
  const Term& lhs = p.args.at(0);
  const Term& rhs = p.args.at(1);
  bool bl = bound_under(lhs, sigma);
  bool br = bound_under(rhs, sigma);
  std::vector<Substitution> out;

  if (p.builtin == BuiltinId::Eq) {
    if (bl && br) {
      if (apply_subst(sigma, lhs) == apply_subst(sigma, rhs)) out.push_back(sigma);
      return out;
    }
    if (bl) {
      emit_match(rhs, apply_subst(sigma, lhs), sigma, out);
      return out;
    }
    if (br) {
      emit_match(lhs, apply_subst(sigma, rhs), sigma, out);
      return out;
    }
    throw InadmissibleMode("== needs one ground side");
  }

  if (!bl || !br) throw InadmissibleMode("comparison needs both sides ground");
  Term l = apply_subst(sigma, lhs);
  Term r = apply_subst(sigma, rhs);
  bool holds = false;
  switch (p.builtin) {
    case BuiltinId::Neq:
      holds = l != r;
      break;
    case BuiltinId::Lt:
      holds = as_int(l) < as_int(r);
      break;
    case BuiltinId::Gt:
      holds = as_int(l) > as_int(r);
      break;
    default:
      break;
  }
  if (holds) out.push_back(sigma);
  return out;
}

void collect_vars(const Term& t, std::set<std::string>& vars) {
  if (t.is_var()) {
    vars.insert(t.name);
    return;
  }
  for (const auto& a : t.args()) collect_vars(a, vars);
}

bool all_bound(const Term& t, const std::set<std::string>& bound) {
  if (t.is_var()) return bound.count(t.name) != 0;
  for (const auto& a : t.args())
    if (!all_bound(a, bound)) return false;
  return true;
}

}  // namespace

std::vector<Substitution> solve_builtin(const Premise& premise, const Substitution& sigma) {
  switch (premise.builtin) {
    case BuiltinId::IntPlus:
    case BuiltinId::IntMinus:
      return solve_arith(premise, sigma);
    default:
      return solve_compare(premise, sigma);
  }
}

bool builtin_mode_ok(const Premise& p, std::set<std::string>& bound) {
  switch (p.builtin) {
    case BuiltinId::IntPlus:
    case BuiltinId::IntMinus: {
      if (p.args.size() != 2 || !p.has_value) return false;
      bool ba = all_bound(p.args[0], bound);
      bool bb = all_bound(p.args[1], bound);
      bool bv = all_bound(p.value, bound);
      // The unknown part must be solvable outright, so it has to be a
      // bare variable (or already ground).
      auto solvable = [&](const Term& t, bool b) { return b || t.is_var(); };
      if (ba + bb + bv < 2) return false;
      if (!solvable(p.args[0], ba) || !solvable(p.args[1], bb) || !solvable(p.value, bv))
        return false;
      collect_vars(p.args[0], bound);
      collect_vars(p.args[1], bound);
      collect_vars(p.value, bound);
      return true;
    }
    case BuiltinId::Eq: {
      bool bl = all_bound(p.args[0], bound);
      bool br = all_bound(p.args[1], bound);
      if (!bl && !br) return false;
      collect_vars(p.args[0], bound);
      collect_vars(p.args[1], bound);
      return true;
    }
    default:
      return all_bound(p.args[0], bound) && all_bound(p.args[1], bound);
  }
}

}  // namespace fclp
