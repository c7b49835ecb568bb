#include "fclp/syntax.hpp"

#include <cctype>

#include "fclp/builtins.hpp"
#include <map>
#include <sstream>

namespace fclp {

std::string to_string(const Diagnostic& d) {
  std::ostringstream out;
  out << (d.severity == Diagnostic::Severity::Error ? "error" : "warning");
  if (d.loc.line) out << " at " << d.loc.line << ':' << d.loc.col;
  out << ": " << d.message;
  return out.str();
}

bool operator==(const SrcHead& a, const SrcHead& b) {
  return a.pred == b.pred && a.args == b.args && a.kind == b.kind &&
         a.values == b.values;
}

bool operator==(const SrcPremise& a, const SrcPremise& b) {
  if (a.infix != b.infix) return false;
  if (a.infix) return a.op == b.op && a.lhs == b.lhs && a.rhs == b.rhs;
  return a.pred == b.pred && a.args == b.args && a.has_value == b.has_value &&
         (!a.has_value || a.value == b.value);
}

bool operator==(const SrcDecl& a, const SrcDecl& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case SrcDecl::Kind::Builtin:
      return a.builtin_id == b.builtin_id && a.builtin_ident == b.builtin_ident;
    case SrcDecl::Kind::Rule:
      if (!(a.head == b.head)) return false;
      [[fallthrough]];
    default:
      return a.premises == b.premises;
  }
}

bool operator==(const SourceProgram& a, const SourceProgram& b) {
  return a.decls == b.decls;
}

namespace {

enum class Tok {
  Ident,
  Variable,
  Wildcard,
  Int,
  Dot,
  Comma,
  Turnstile,
  Is,
  IsQuestion,
  LBrace,
  RBrace,
  LParen,
  RParen,
  EqEq,
  Neq,
  Lt,
  Gt,
  DirBuiltin,
  DirForbid,
  DirDemand,
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  long long num = 0;
  Location loc;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  std::vector<Token> run(std::vector<Diagnostic>& diags) {
    std::vector<Token> out;
    while (true) {
      skip_space();
      Location loc{line_, col_};
      if (pos_ >= text_.size()) {
        out.push_back({Tok::End, "", 0, loc});
        return out;
      }
      char c = text_[pos_];
      if (c == '#') {
        advance();
        std::string word = take_word();
        if (word == "builtin")
          out.push_back({Tok::DirBuiltin, word, 0, loc});
        else if (word == "forbid")
          out.push_back({Tok::DirForbid, word, 0, loc});
        else if (word == "demand")
          out.push_back({Tok::DirDemand, word, 0, loc});
        else
          skip_line();
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c)) ||
          (c == '-' && pos_ + 1 < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
        out.push_back(lex_int(loc));
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string word = take_word();
        if (word == "_") {
          out.push_back({Tok::Wildcard, word, 0, loc});
        } else if (word == "is") {
          if (pos_ < text_.size() && text_[pos_] == '?') {
            advance();
            out.push_back({Tok::IsQuestion, "is?", 0, loc});
          } else {
            out.push_back({Tok::Is, word, 0, loc});
          }
        } else if (std::isupper(static_cast<unsigned char>(word[0]))) {
          out.push_back({Tok::Variable, word, 0, loc});
        } else {
          out.push_back({Tok::Ident, word, 0, loc});
        }
        continue;
      }
      switch (c) {
        case '.': advance(); out.push_back({Tok::Dot, ".", 0, loc}); continue;
        case ',': advance(); out.push_back({Tok::Comma, ",", 0, loc}); continue;
        case '{': advance(); out.push_back({Tok::LBrace, "{", 0, loc}); continue;
        case '}': advance(); out.push_back({Tok::RBrace, "}", 0, loc}); continue;
        case '(': advance(); out.push_back({Tok::LParen, "(", 0, loc}); continue;
        case ')': advance(); out.push_back({Tok::RParen, ")", 0, loc}); continue;
        case '<': advance(); out.push_back({Tok::Lt, "<", 0, loc}); continue;
        case '>': advance(); out.push_back({Tok::Gt, ">", 0, loc}); continue;
        case ':':
          advance();
          if (pos_ < text_.size() && text_[pos_] == '-') {
            advance();
            out.push_back({Tok::Turnstile, ":-", 0, loc});
            continue;
          }
          diags.push_back({Diagnostic::Severity::Error, "expected ':-'", loc});
          continue;
        case '=':
          advance();
          if (pos_ < text_.size() && text_[pos_] == '=') {
            advance();
            out.push_back({Tok::EqEq, "==", 0, loc});
            continue;
          }
          diags.push_back({Diagnostic::Severity::Error, "expected '=='", loc});
          continue;
        case '!':
          advance();
          if (pos_ < text_.size() && text_[pos_] == '=') {
            advance();
            out.push_back({Tok::Neq, "!=", 0, loc});
            continue;
          }
          diags.push_back({Diagnostic::Severity::Error, "expected '!='", loc});
          continue;
        default:
          diags.push_back({Diagnostic::Severity::Error,
                           std::string("unexpected character '") + c + "'", loc});
          advance();
          continue;
      }
    }
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      advance();
  }
  void skip_line() {
    while (pos_ < text_.size() && text_[pos_] != '\n') advance();
  }
  std::string take_word() {
    std::string out;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'') {
        out += c;
        advance();
      } else {
        break;
      }
    }
    return out;
  }
  Token lex_int(Location loc) {
    bool neg = text_[pos_] == '-';
    if (neg) advance();
    long long v = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      advance();
    }
    return {Tok::Int, "", neg ? -v : v, loc};
  }

  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  Parser(std::vector<Token> toks, std::vector<Diagnostic>& diags)
      : toks_(std::move(toks)), diags_(diags) {}

  SourceProgram run() {
    SourceProgram out;
    while (peek().kind != Tok::End) {
      size_t before = pos_;
      if (auto d = parse_decl()) out.decls.push_back(std::move(*d));
      if (pos_ == before) sync();
    }
    return out;
  }

 private:
  const Token& peek(size_t k = 0) const {
    size_t i = pos_ + k;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  Token take() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  bool at(Tok k) const { return peek().kind == k; }
  bool eat(Tok k) {
    if (!at(k)) return false;
    ++pos_;
    return true;
  }
  void error(const std::string& msg) {
    diags_.push_back({Diagnostic::Severity::Error, msg, peek().loc});
  }
  void sync() {
    while (!at(Tok::End) && !eat(Tok::Dot)) ++pos_;
  }
  bool expect(Tok k, const std::string& what) {
    if (eat(k)) return true;
    error("expected " + what);
    return false;
  }

  std::optional<SrcDecl> parse_decl() {
    SrcDecl d;
    d.loc = peek().loc;
    if (eat(Tok::DirBuiltin)) {
      d.kind = SrcDecl::Kind::Builtin;
      // builtin ids like INT_PLUS lex as variables (capitalized)
      if (!at(Tok::Variable) && !at(Tok::Ident)) {
        error("expected builtin id after #builtin");
        return std::nullopt;
      }
      d.builtin_id = take().text;
      if (!at(Tok::Ident)) {
        error("expected identifier after builtin id");
        return std::nullopt;
      }
      d.builtin_ident = take().text;
      if (!expect(Tok::Dot, "'.'")) return std::nullopt;
      return d;
    }
    if (at(Tok::DirForbid) || at(Tok::DirDemand)) {
      d.kind = at(Tok::DirForbid) ? SrcDecl::Kind::Forbid : SrcDecl::Kind::Demand;
      ++pos_;
      if (!parse_premises(d.premises)) return std::nullopt;
      if (!expect(Tok::Dot, "'.'")) return std::nullopt;
      return d;
    }
    d.kind = SrcDecl::Kind::Rule;
    if (!parse_head(d.head)) return std::nullopt;
    if (eat(Tok::Turnstile)) {
      if (!parse_premises(d.premises)) return std::nullopt;
    }
    if (!expect(Tok::Dot, "'.'")) return std::nullopt;
    return d;
  }

  bool parse_head(SrcHead& h) {
    h.loc = peek().loc;
    if (!at(Tok::Ident)) {
      error("expected predicate name");
      return false;
    }
    h.pred = take().text;
    while (starts_termarg()) {
      auto t = parse_termarg();
      if (!t) return false;
      h.args.push_back(std::move(*t));
    }
    if (eat(Tok::IsQuestion)) {
      h.kind = SrcHead::Kind::IsQuestion;
      auto t = parse_term();
      if (!t) return false;
      h.values.push_back(std::move(*t));
      return true;
    }
    if (eat(Tok::Is)) {
      if (eat(Tok::LBrace)) {
        h.kind = SrcHead::Kind::Braces;
        do {
          auto t = parse_term();
          if (!t) return false;
          h.values.push_back(std::move(*t));
        } while (eat(Tok::Comma));
        return expect(Tok::RBrace, "'}'");
      }
      h.kind = SrcHead::Kind::Is;
      auto t = parse_term();
      if (!t) return false;
      h.values.push_back(std::move(*t));
      return true;
    }
    h.kind = SrcHead::Kind::ValueFree;
    return true;
  }

  bool parse_premises(std::vector<SrcPremise>& out) {
    do {
      auto p = parse_premise();
      if (!p) return false;
      out.push_back(std::move(*p));
    } while (eat(Tok::Comma));
    return true;
  }

  std::optional<std::string> infix_op() {
    switch (peek().kind) {
      case Tok::EqEq: ++pos_; return "==";
      case Tok::Neq: ++pos_; return "!=";
      case Tok::Lt: ++pos_; return "<";
      case Tok::Gt: ++pos_; return ">";
      default: return std::nullopt;
    }
  }

  std::optional<SrcPremise> parse_premise() {
    SrcPremise p;
    p.loc = peek().loc;
    if (at(Tok::Ident)) {
      p.pred = take().text;
      while (starts_termarg()) {
        auto t = parse_termarg();
        if (!t) return std::nullopt;
        p.args.push_back(std::move(*t));
      }
      if (eat(Tok::Is)) {
        p.has_value = true;
        auto t = parse_term();
        if (!t) return std::nullopt;
        p.value = std::move(*t);
        return p;
      }
      if (auto op = infix_op()) {
        // the application parsed so far is the left operand
        Term lhs = Term::fun(p.pred, std::move(p.args));
        p = SrcPremise{};
        p.infix = true;
        p.op = *op;
        p.lhs = std::move(lhs);
        auto rhs = parse_term();
        if (!rhs) return std::nullopt;
        p.rhs = std::move(*rhs);
        return p;
      }
      return p;
    }
    auto lhs = parse_term();
    if (!lhs) return std::nullopt;
    auto op = infix_op();
    if (!op) {
      error("expected comparison operator");
      return std::nullopt;
    }
    p.infix = true;
    p.op = *op;
    p.lhs = std::move(*lhs);
    auto rhs = parse_term();
    if (!rhs) return std::nullopt;
    p.rhs = std::move(*rhs);
    return p;
  }

  bool starts_termarg() const {
    switch (peek().kind) {
      case Tok::Ident:
      case Tok::Variable:
      case Tok::Wildcard:
      case Tok::Int:
      case Tok::LParen:
        return true;
      default:
        return false;
    }
  }

  std::optional<Term> parse_termarg() {
    switch (peek().kind) {
      case Tok::Variable: return Term::var(take().text);
      case Tok::Wildcard: take(); return Term::var("_");
      case Tok::Int: return Term::integer(take().num);
      case Tok::Ident: return Term::fun(take().text);
      case Tok::LParen: {
        take();
        auto t = parse_term();
        if (!t) return std::nullopt;
        if (!expect(Tok::RParen, "')'")) return std::nullopt;
        return t;
      }
      default:
        error("expected term");
        return std::nullopt;
    }
  }

  std::optional<Term> parse_term() {
    if (at(Tok::Ident)) {
      std::string name = take().text;
      std::vector<Term> args;
      while (starts_termarg()) {
        auto t = parse_termarg();
        if (!t) return std::nullopt;
        args.push_back(std::move(*t));
      }
      return Term::fun(std::move(name), std::move(args));
    }
    return parse_termarg();
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
  std::vector<Diagnostic>& diags_;
};

bool has_error(const std::vector<Diagnostic>& diags) {
  for (const auto& d : diags)
    if (d.severity == Diagnostic::Severity::Error) return true;
  return false;
}

std::string term_src(const Term& t, bool arg_position) {
  if (t.is_var()) return t.name;
  if (t.numeric) return std::to_string(t.num);
  if (t.args().empty()) return t.name;
  std::string out = t.name;
  for (const auto& a : t.args()) out += " " + term_src(a, true);
  if (arg_position) return "(" + out + ")";
  return out;
}

std::string premise_src(const SrcPremise& p) {
  if (p.infix)
    return term_src(p.lhs, false) + " " + p.op + " " + term_src(p.rhs, false);
  std::string out = p.pred;
  for (const auto& a : p.args) out += " " + term_src(a, true);
  if (p.has_value) out += " is " + term_src(p.value, false);
  return out;
}

}  // namespace

ParseResult parse(const std::string& text) {
  ParseResult res;
  Lexer lex(text);
  auto toks = lex.run(res.diagnostics);
  Parser parser(std::move(toks), res.diagnostics);
  SourceProgram prog = parser.run();
  if (!has_error(res.diagnostics)) res.program = std::move(prog);
  return res;
}

std::string print(const SourceProgram& src) {
  std::ostringstream out;
  for (const auto& d : src.decls) {
    switch (d.kind) {
      case SrcDecl::Kind::Builtin:
        out << "#builtin " << d.builtin_id << ' ' << d.builtin_ident;
        break;
      case SrcDecl::Kind::Forbid:
      case SrcDecl::Kind::Demand:
        out << (d.kind == SrcDecl::Kind::Forbid ? "#forbid " : "#demand ");
        for (size_t i = 0; i < d.premises.size(); ++i) {
          if (i) out << ", ";
          out << premise_src(d.premises[i]);
        }
        break;
      case SrcDecl::Kind::Rule: {
        out << d.head.pred;
        for (const auto& a : d.head.args) out << ' ' << term_src(a, true);
        switch (d.head.kind) {
          case SrcHead::Kind::ValueFree:
            break;
          case SrcHead::Kind::Is:
            out << " is " << term_src(d.head.values[0], false);
            break;
          case SrcHead::Kind::IsQuestion:
            out << " is? " << term_src(d.head.values[0], false);
            break;
          case SrcHead::Kind::Braces: {
            out << " is { ";
            for (size_t i = 0; i < d.head.values.size(); ++i) {
              if (i) out << ", ";
              out << term_src(d.head.values[i], false);
            }
            out << " }";
            break;
          }
        }
        if (!d.premises.empty()) {
          out << " :- ";
          for (size_t i = 0; i < d.premises.size(); ++i) {
            if (i) out << ", ";
            out << premise_src(d.premises[i]);
          }
        }
        break;
      }
    }
    out << ".\n";
  }
  return out.str();
}

namespace {

class Desugarer {
 public:
  explicit Desugarer(const SourceProgram& src) : src_(src) {}

  DesugarResult run() {
    for (const auto& d : src_.decls)
      if (d.kind == SrcDecl::Kind::Builtin) register_builtin(d);
    bool saw_forbid = false;
    for (const auto& d : src_.decls) {
      switch (d.kind) {
        case SrcDecl::Kind::Builtin:
          break;
        case SrcDecl::Kind::Rule:
          desugar_rule(d);
          break;
        case SrcDecl::Kind::Forbid: {
          if (!saw_forbid) {
            saw_forbid = true;
            Rule ok;
            ok.head.pred = "$ok";
            ok.head.values = {Term::fun("yes")};
            prog_.rules.push_back(std::move(ok));
          }
          Rule r;
          r.head.pred = "$ok";
          r.head.values = {Term::fun("no")};
          if (auto ps = desugar_premises(d.premises)) {
            r.premises = std::move(*ps);
            prog_.rules.push_back(std::move(r));
          }
          break;
        }
        case SrcDecl::Kind::Demand: {
          Rule r;
          r.head.pred = "$demand_" + std::to_string(demand_count_++);
          r.head.values = {Term::fun("yes")};
          prog_.demands.push_back(Attribute{r.head.pred, {}});
          if (auto ps = desugar_premises(d.premises)) {
            r.premises = std::move(*ps);
            prog_.rules.push_back(std::move(r));
          }
          break;
        }
      }
    }
    DesugarResult res;
    res.diagnostics = std::move(diags_);
    if (!has_error(res.diagnostics)) res.program = std::move(prog_);
    return res;
  }

 private:
  void error(const std::string& msg, Location loc) {
    diags_.push_back({Diagnostic::Severity::Error, msg, loc});
  }

  void register_builtin(const SrcDecl& d) {
    if (d.builtin_id == "INT_PLUS")
      registry_[d.builtin_ident] = BuiltinId::IntPlus;
    else if (d.builtin_id == "INT_MINUS")
      registry_[d.builtin_ident] = BuiltinId::IntMinus;
    else
      error("unknown builtin id '" + d.builtin_id + "'", d.loc);
  }

  Term fresh_var(const char* stem) {
    return Term::var(std::string("$") + stem + std::to_string(fresh_count_++));
  }

  // Replaces applications of registered builtin functors inside t with a
  // fresh variable, accumulating the defining builtin premises.
  Term flatten(const Term& t, std::vector<Premise>& defs, Location loc) {
    if (t.is_var() || t.args().empty()) return t;
    std::vector<Term> as;
    as.reserve(t.args().size());
    for (const auto& a : t.args()) as.push_back(flatten(a, defs, loc));
    auto it = registry_.find(t.name);
    if (it == registry_.end()) return Term::fun(t.name, std::move(as));
    if (as.size() != 2) {
      error("builtin '" + t.name + "' takes two arguments", loc);
      return Term::fun(t.name, std::move(as));
    }
    Term v = fresh_var("v");
    defs.push_back(Premise::function(it->second, std::move(as), v));
    return v;
  }

  Term freshen_wildcards(const Term& t) {
    if (t.is_var()) return t.name == "_" ? fresh_var("w") : t;
    if (t.args().empty()) return t;
    std::vector<Term> as;
    as.reserve(t.args().size());
    for (const auto& a : t.args()) as.push_back(freshen_wildcards(a));
    return Term::fun(t.name, std::move(as));
  }

  std::optional<std::vector<Premise>> desugar_premises(
      const std::vector<SrcPremise>& premises) {
    std::vector<Premise> out;
    for (const auto& sp : premises) {
      std::vector<Premise> defs;
      if (sp.infix) {
        Term lhs = freshen_wildcards(flatten(sp.lhs, defs, sp.loc));
        Term rhs = freshen_wildcards(flatten(sp.rhs, defs, sp.loc));
        for (auto& d : defs) out.push_back(std::move(d));
        BuiltinId id = sp.op == "==" ? BuiltinId::Eq
                       : sp.op == "!=" ? BuiltinId::Neq
                       : sp.op == "<" ? BuiltinId::Lt
                                      : BuiltinId::Gt;
        out.push_back(Premise::comparison(id, std::move(lhs), std::move(rhs)));
        continue;
      }
      auto reg = registry_.find(sp.pred);
      if (reg != registry_.end()) {
        if (!sp.has_value) {
          error("builtin '" + sp.pred + "' premise needs an 'is' value", sp.loc);
          return std::nullopt;
        }
        std::vector<Term> args;
        for (const auto& a : sp.args)
          args.push_back(freshen_wildcards(flatten(a, defs, sp.loc)));
        Term value = freshen_wildcards(flatten(sp.value, defs, sp.loc));
        if (args.size() != 2) {
          error("builtin '" + sp.pred + "' takes two arguments", sp.loc);
          return std::nullopt;
        }
        for (auto& d : defs) out.push_back(std::move(d));
        out.push_back(Premise::function(reg->second, std::move(args), std::move(value)));
        continue;
      }
      std::vector<Term> args;
      for (const auto& a : sp.args)
        args.push_back(freshen_wildcards(flatten(a, defs, sp.loc)));
      Term value = sp.has_value
                       ? freshen_wildcards(flatten(sp.value, defs, sp.loc))
                       : unit_term();
      for (auto& d : defs) out.push_back(std::move(d));
      out.push_back(Premise::relation(sp.pred, std::move(args), std::move(value)));
    }
    return out;
  }

  bool contains_wildcard(const Term& t) {
    if (t.is_var()) return t.name == "_";
    for (const auto& a : t.args())
      if (contains_wildcard(a)) return true;
    return false;
  }

  void desugar_rule(const SrcDecl& d) {
    if (registry_.count(d.head.pred)) {
      error("builtin '" + d.head.pred + "' cannot be a rule head", d.head.loc);
      return;
    }
    Rule r;
    auto ps = desugar_premises(d.premises);
    if (!ps) return;
    r.premises = std::move(*ps);

    std::vector<Premise> head_defs;
    r.head.pred = d.head.pred;
    for (const auto& a : d.head.args) {
      if (contains_wildcard(a)) {
        error("wildcard not allowed in rule head", d.head.loc);
        return;
      }
      r.head.args.push_back(flatten(a, head_defs, d.head.loc));
    }
    r.head.open = d.head.kind == SrcHead::Kind::IsQuestion;
    if (d.head.kind == SrcHead::Kind::ValueFree) {
      r.head.values = {unit_term()};
    } else {
      for (const auto& v : d.head.values) {
        if (contains_wildcard(v)) {
          error("wildcard not allowed in rule head", d.head.loc);
          return;
        }
        r.head.values.push_back(flatten(v, head_defs, d.head.loc));
      }
    }
    // premises defining head-side builtin applications run last, when
    // their inputs are bound
    for (auto& p : head_defs) r.premises.push_back(std::move(p));
    prog_.rules.push_back(std::move(r));
  }

  const SourceProgram& src_;
  Program prog_;
  std::vector<Diagnostic> diags_;
  std::map<std::string, BuiltinId> registry_;
  int fresh_count_ = 0;
  int demand_count_ = 0;
};

void collect_term_vars(const Term& t, std::set<std::string>& vars) {
  if (t.is_var()) {
    vars.insert(t.name);
    return;
  }
  for (const auto& a : t.args()) collect_term_vars(a, vars);
}

}  // namespace

DesugarResult desugar(const SourceProgram& src) { return Desugarer(src).run(); }

std::vector<Diagnostic> check_program(const Program& p) {
  std::vector<Diagnostic> diags;
  for (const auto& r : p.rules) {
    std::set<std::string> bound;
    for (const auto& prem : r.premises) {
      if (prem.kind == Premise::Kind::Relation) {
        for (const auto& a : prem.args) collect_term_vars(a, bound);
        collect_term_vars(prem.value, bound);
      } else if (!builtin_mode_ok(prem, bound)) {
        diags.push_back({Diagnostic::Severity::Error,
                         "builtin premise '" + to_string(prem) +
                             "' cannot be grounded left-to-right",
                         {}});
      }
    }
    std::set<std::string> head_vars;
    for (const auto& a : r.head.args) collect_term_vars(a, head_vars);
    for (const auto& v : r.head.values) collect_term_vars(v, head_vars);
    for (const auto& v : head_vars) {
      if (!bound.count(v)) {
        diags.push_back({Diagnostic::Severity::Error,
                         "head variable '" + v + "' in rule '" + to_string(r) +
                             "' is not bound by any premise",
                         {}});
      }
    }
  }
  return diags;
}

LoadResult load_program(const std::string& text) {
  LoadResult res;
  ParseResult parsed = parse(text);
  res.diagnostics = parsed.diagnostics;
  if (!parsed.program) return res;
  DesugarResult sugar = desugar(*parsed.program);
  res.diagnostics.insert(res.diagnostics.end(), sugar.diagnostics.begin(),
                         sugar.diagnostics.end());
  if (!sugar.program) return res;
  auto checks = check_program(*sugar.program);
  res.diagnostics.insert(res.diagnostics.end(), checks.begin(), checks.end());
  for (const auto& d : checks)
    if (d.severity == Diagnostic::Severity::Error) return res;
  res.program = std::move(sugar.program);
  return res;
}

}  // namespace fclp
