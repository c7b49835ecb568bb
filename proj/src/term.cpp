#include "fclp/term.hpp"

#include <functional>
#include <sstream>

namespace fclp {

int compare(const Term& a, const Term& b) {
  if (a.kind != b.kind) return a.kind == Term::Kind::Var ? -1 : 1;
  if (a.numeric != b.numeric) return a.numeric ? -1 : 1;
  if (a.numeric) {
    if (a.num != b.num) return a.num < b.num ? -1 : 1;
  } else if (int c = a.name.compare(b.name)) {
    return c < 0 ? -1 : 1;
  }
  if (a.args_ == b.args_) return 0;
  const auto& aa = a.args();
  const auto& ba = b.args();
  if (aa.size() != ba.size()) return aa.size() < ba.size() ? -1 : 1;
  for (size_t i = 0; i < aa.size(); ++i)
    if (int c = compare(aa[i], ba[i])) return c;
  return 0;
}

int compare(const Attribute& a, const Attribute& b) {
  if (int c = a.pred.compare(b.pred)) return c < 0 ? -1 : 1;
  if (a.args.size() != b.args.size())
    return a.args.size() < b.args.size() ? -1 : 1;
  for (size_t i = 0; i < a.args.size(); ++i)
    if (int c = compare(a.args[i], b.args[i])) return c;
  return 0;
}

int compare(const Fact& a, const Fact& b) {
  if (int c = compare(a.attr, b.attr)) return c;
  return compare(a.value, b.value);
}

static void print_term(std::ostream& out, const Term& t, bool parens) {
  if (t.is_var()) {
    out << t.name;
    return;
  }
  if (t.numeric) {
    out << t.num;
    return;
  }
  if (t.args().empty()) {
    out << t.name;
    return;
  }
  if (parens) out << '(';
  out << t.name;
  for (const auto& a : t.args()) {
    out << ' ';
    print_term(out, a, true);
  }
  if (parens) out << ')';
}

std::string to_string(const Term& t) {
  std::ostringstream out;
  print_term(out, t, false);
  return out.str();
}

std::string to_string(const Attribute& a) {
  std::ostringstream out;
  out << a.pred;
  for (const auto& t : a.args) {
    out << ' ';
    print_term(out, t, true);
  }
  return out.str();
}

std::string to_string(const Fact& f) {
  std::string s = to_string(f.attr);
  if (f.value == unit_term()) return s;
  return s + " is " + to_string(f.value);
}

const Term& unit_term() {
  static const Term u = Term::fun("unit");
  return u;
}

static size_t hash_mix(size_t h, size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

size_t hash_value(const Term& t) {
  size_t h = t.is_var() ? 0x517cc1b7 : 0x27220a95;
  if (t.numeric)
    h = hash_mix(h, std::hash<long long>{}(t.num));
  else
    h = hash_mix(h, std::hash<std::string>{}(t.name));
  for (const auto& a : t.args()) h = hash_mix(h, hash_value(a));
  return h;
}

size_t hash_value(const Attribute& a) {
  size_t h = std::hash<std::string>{}(a.pred);
  for (const auto& t : a.args) h = hash_mix(h, hash_value(t));
  return h;
}

Term apply_subst(const Substitution& sigma, const Term& t) {
  if (t.is_var()) {
    auto it = sigma.find(t.name);
    if (it == sigma.end()) throw UnboundVariable(t.name);
    return it->second;
  }
  if (t.ground()) return t;
  std::vector<Term> as;
  as.reserve(t.args().size());
  for (const auto& a : t.args()) as.push_back(apply_subst(sigma, a));
  return Term::fun(t.name, std::move(as));
}

static bool match_into(const Term& pattern, const Term& ground, Substitution& sigma) {
  if (pattern.is_var()) {
    auto [it, inserted] = sigma.try_emplace(pattern.name, ground);
    return inserted || it->second == ground;
  }
  if (pattern.numeric != ground.numeric) return false;
  if (pattern.numeric) {
    if (pattern.num != ground.num) return false;
  } else if (pattern.name != ground.name) {
    return false;
  }
  if (same_args(pattern, ground)) return true;
  const auto& pa = pattern.args();
  const auto& ga = ground.args();
  if (pa.size() != ga.size()) return false;
  for (size_t i = 0; i < pa.size(); ++i)
    if (!match_into(pa[i], ga[i], sigma)) return false;
  return true;
}

std::optional<Substitution> match(const Term& pattern, const Term& ground,
                                  const Substitution& sigma) {
  Substitution out = sigma;
  if (!match_into(pattern, ground, out)) return std::nullopt;
  return out;
}

}  // namespace fclp
