#include "fclp/asp.hpp"

#include <cctype>
#include <cstring>
#include <sstream>

namespace fclp {

namespace {

struct AspParser {
  const std::string& text;
  size_t pos = 0;
  int line = 1, col = 1;
  std::vector<Diagnostic>& diags;
  bool allow_nonground;
  bool saw_var = false;

  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }
  void skip_space() {
    while (pos < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[pos]))) {
        advance();
      } else if (text[pos] == '%' || text[pos] == '#') {
        while (pos < text.size() && text[pos] != '\n') advance();
      } else {
        break;
      }
    }
  }
  bool done() {
    skip_space();
    return pos >= text.size();
  }
  Location here() { return {line, col}; }
  void error(const std::string& msg) {
    diags.push_back({Diagnostic::Severity::Error, msg, here()});
  }
  bool literal(const char* s) {
    skip_space();
    size_t n = strlen(s);
    if (text.compare(pos, n, s) != 0) return false;
    for (size_t i = 0; i < n; ++i) advance();
    return true;
  }
  std::string word() {
    skip_space();
    std::string out;
    while (pos < text.size()) {
      char c = text[pos];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        out += c;
        advance();
      } else {
        break;
      }
    }
    return out;
  }

  std::optional<Term> parse_term() {
    skip_space();
    if (pos < text.size() &&
        (std::isdigit(static_cast<unsigned char>(text[pos])) ||
         (text[pos] == '-' && pos + 1 < text.size() &&
          std::isdigit(static_cast<unsigned char>(text[pos + 1]))))) {
      bool neg = text[pos] == '-';
      if (neg) advance();
      long long v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        advance();
      }
      return Term::integer(neg ? -v : v);
    }
    std::string name = word();
    if (name.empty()) {
      error("expected term");
      return std::nullopt;
    }
    if (std::isupper(static_cast<unsigned char>(name[0]))) {
      saw_var = true;
      return Term::var(name);
    }
    std::vector<Term> args;
    if (literal("(")) {
      do {
        auto t = parse_term();
        if (!t) return std::nullopt;
        args.push_back(std::move(*t));
      } while (literal(","));
      if (!literal(")")) {
        error("expected ')'");
        return std::nullopt;
      }
    }
    return Term::fun(std::move(name), std::move(args));
  }

  std::optional<Attribute> parse_atom() {
    auto t = parse_term();
    if (!t) return std::nullopt;
    if (t->is_var() || t->is_int()) {
      error("expected an atom");
      return std::nullopt;
    }
    return Attribute{t->name, t->args()};
  }

  std::optional<AspRule> parse_rule() {
    AspRule r;
    skip_space();
    if (literal(":-")) {
      r.kind = AspRule::Kind::Constraint;
    } else {
      if (literal("{")) {
        r.kind = AspRule::Kind::Choice;
        auto h = parse_atom();
        if (!h) return std::nullopt;
        r.head = std::move(*h);
        if (!literal("}")) {
          error("expected '}'");
          return std::nullopt;
        }
      } else {
        auto h = parse_atom();
        if (!h) return std::nullopt;
        r.head = std::move(*h);
      }
      skip_space();
      if (literal(".")) return r;
      if (!literal(":-")) {
        error("expected ':-' or '.'");
        return std::nullopt;
      }
    }
    skip_space();
    if (literal(".")) return r;
    do {
      skip_space();
      bool negated = false;
      size_t save_pos = pos;
      int save_line = line, save_col = col;
      if (word() == "not") {
        negated = true;
      } else {
        pos = save_pos;
        line = save_line;
        col = save_col;
      }
      auto a = parse_atom();
      if (!a) return std::nullopt;
      (negated ? r.neg : r.pos).push_back(std::move(*a));
    } while (literal(","));
    if (!literal(".")) {
      error("expected '.'");
      return std::nullopt;
    }
    return r;
  }
};

std::string atom_tt(const Attribute& a) { return to_string(a) + " is tt"; }
std::string atom_ff(const Attribute& a) { return to_string(a) + " is ff"; }

void require_normal(const GroundAspProgram& p) {
  for (const auto& r : p.rules)
    if (r.kind != AspRule::Kind::Normal)
      throw Error("operation defined for normal rules only");
}

}  // namespace

AspParseResult parse_asp(const std::string& text, bool allow_nonground) {
  AspParseResult res;
  AspParser parser{text, 0, 1, 1, res.diagnostics, allow_nonground};
  GroundAspProgram prog;
  while (!parser.done()) {
    auto r = parser.parse_rule();
    if (!r) break;
    prog.rules.push_back(std::move(*r));
  }
  if (parser.saw_var && !allow_nonground)
    res.diagnostics.push_back(
        {Diagnostic::Severity::Error, "program is not ground", {}});
  if (res.diagnostics.empty()) res.program = std::move(prog);
  return res;
}

GroundAspProgram reduct(const GroundAspProgram& p, const std::set<Attribute>& x) {
  require_normal(p);
  GroundAspProgram out;
  for (const auto& r : p.rules) {
    bool blocked = false;
    for (const auto& q : r.neg)
      if (x.count(q)) {
        blocked = true;
        break;
      }
    if (blocked) continue;
    AspRule kept = r;
    kept.neg.clear();
    out.rules.push_back(std::move(kept));
  }
  return out;
}

std::set<Attribute> asp_least_model(const GroundAspProgram& p) {
  std::set<Attribute> model;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : p.rules) {
      if (!r.neg.empty()) throw Error("least model needs a negation-free program");
      bool fires = true;
      for (const auto& a : r.pos)
        if (!model.count(a)) {
          fires = false;
          break;
        }
      if (fires && model.insert(r.head).second) changed = true;
    }
  }
  return model;
}

bool is_stable_model(const GroundAspProgram& p, const std::set<Attribute>& x) {
  return asp_least_model(reduct(p, x)) == x;
}

std::set<std::set<Attribute>> brute_force_stable_models(const GroundAspProgram& p) {
  require_normal(p);
  std::set<Attribute> atom_set;
  for (const auto& r : p.rules) {
    atom_set.insert(r.head);
    atom_set.insert(r.pos.begin(), r.pos.end());
    atom_set.insert(r.neg.begin(), r.neg.end());
  }
  std::vector<Attribute> atoms(atom_set.begin(), atom_set.end());
  if (atoms.size() > 24) throw Error("too many atoms for brute force");
  std::set<std::set<Attribute>> out;
  for (size_t bits = 0; bits < (size_t{1} << atoms.size()); ++bits) {
    std::set<Attribute> x;
    for (size_t i = 0; i < atoms.size(); ++i)
      if (bits & (size_t{1} << i)) x.insert(atoms[i]);
    if (is_stable_model(p, x)) out.insert(std::move(x));
  }
  return out;
}

std::string asp_to_fclp(const GroundAspProgram& p, bool permissive) {
  std::ostringstream out;
  bool has_constraint = false;
  for (const auto& r : p.rules)
    if (r.kind == AspRule::Kind::Constraint) has_constraint = true;
  if (has_constraint) out << "ok is { yes }.\n";

  auto body = [&](const AspRule& r) {
    std::string s;
    for (const auto& a : r.pos) s += (s.empty() ? "" : ", ") + atom_tt(a);
    for (const auto& a : r.neg) s += (s.empty() ? "" : ", ") + atom_ff(a);
    return s;
  };

  for (const auto& r : p.rules) {
    switch (r.kind) {
      case AspRule::Kind::Constraint: {
        std::string b = body(r);
        out << "ok is { no }" << (b.empty() ? "" : " :- " + b) << ".\n";
        break;
      }
      case AspRule::Kind::Choice: {
        std::string b = body(r);
        out << to_string(r.head) << " is { tt, ff }"
            << (b.empty() ? "" : " :- " + b) << ".\n";
        break;
      }
      case AspRule::Kind::Normal: {
        for (size_t i = 0; i < r.neg.size(); ++i) {
          out << to_string(r.neg[i]) << " is? ff";
          if (!permissive) {
            std::string guard;
            for (const auto& a : r.pos)
              guard += (guard.empty() ? "" : ", ") + atom_tt(a);
            for (size_t j = 0; j < i; ++j)
              guard += (guard.empty() ? "" : ", ") + atom_ff(r.neg[j]);
            if (!guard.empty()) out << " :- " << guard;
          }
          out << ".\n";
        }
        std::string b = body(r);
        out << to_string(r.head) << " is { tt }" << (b.empty() ? "" : " :- " + b)
            << ".\n";
        break;
      }
    }
  }
  return out.str();
}

DatalogResult datalog_to_fclp(const std::string& text) {
  DatalogResult res;
  AspParseResult parsed = parse_asp(text, /*allow_nonground=*/true);
  res.diagnostics = parsed.diagnostics;
  if (!parsed.program) return res;
  std::ostringstream out;
  for (const auto& r : parsed.program->rules) {
    if (r.kind != AspRule::Kind::Normal || !r.neg.empty()) {
      res.diagnostics.push_back({Diagnostic::Severity::Error,
                                 "datalog input must use plain rules without "
                                 "negation, constraints, or choice",
                                 {}});
      return res;
    }
    out << to_string(r.head);
    if (!r.pos.empty()) {
      out << " :- ";
      for (size_t i = 0; i < r.pos.size(); ++i) {
        if (i) out << ", ";
        out << to_string(r.pos[i]);
      }
    }
    out << ".\n";
  }
  res.text = out.str();
  return res;
}

}  // namespace fclp
