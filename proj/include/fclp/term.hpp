#ifndef FCLP_TERM_HPP
#define FCLP_TERM_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace fclp {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnboundVariable : Error {
  explicit UnboundVariable(const std::string& v)
      : Error("unbound variable: " + v) {}
};

// Ground and non-ground first-order terms. Variables carry a name;
// everything else is a functor applied to arguments. Integers are
// zero-arity functors tagged with a numeric payload so matching stays
// purely structural. Argument vectors are immutable and shared, so
// copying a term is cheap no matter how deep it is and substitution
// reuses every ground subterm.
struct Term {
  enum class Kind { Var, Fun };

  Kind kind = Kind::Fun;
  std::string name;  // variable name or functor name (empty for ints)
  long long num = 0;
  bool numeric = false;

  static Term var(std::string n) {
    Term t;
    t.kind = Kind::Var;
    t.name = std::move(n);
    t.ground_ = false;
    return t;
  }
  static Term fun(std::string n, std::vector<Term> as = {}) {
    Term t;
    t.name = std::move(n);
    if (!as.empty()) {
      for (const auto& a : as)
        if (!a.ground()) t.ground_ = false;
      t.args_ = std::make_shared<const std::vector<Term>>(std::move(as));
    }
    return t;
  }
  static Term integer(long long v) {
    Term t;
    t.numeric = true;
    t.num = v;
    return t;
  }

  bool is_var() const { return kind == Kind::Var; }
  bool is_int() const { return kind == Kind::Fun && numeric; }
  bool ground() const { return ground_; }
  const std::vector<Term>& args() const {
    static const std::vector<Term> empty;
    return args_ ? *args_ : empty;
  }

 private:
  std::shared_ptr<const std::vector<Term>> args_;  // null when no arguments
  bool ground_ = true;
  friend int compare(const Term& a, const Term& b);
  friend bool same_args(const Term& a, const Term& b);
};

// True when a and b share the identical argument vector (used to cut
// recursion short on shared structure).
inline bool same_args(const Term& a, const Term& b) { return a.args_ == b.args_; }

int compare(const Term& a, const Term& b);
inline bool operator==(const Term& a, const Term& b) { return compare(a, b) == 0; }
inline bool operator!=(const Term& a, const Term& b) { return compare(a, b) != 0; }
inline bool operator<(const Term& a, const Term& b) { return compare(a, b) < 0; }

std::string to_string(const Term& t);

// A predicate applied to ground arguments: the key a fact assigns a value to.
struct Attribute {
  std::string pred;
  std::vector<Term> args;
};

int compare(const Attribute& a, const Attribute& b);
inline bool operator==(const Attribute& a, const Attribute& b) { return compare(a, b) == 0; }
inline bool operator!=(const Attribute& a, const Attribute& b) { return compare(a, b) != 0; }
inline bool operator<(const Attribute& a, const Attribute& b) { return compare(a, b) < 0; }

std::string to_string(const Attribute& a);

struct Fact {
  Attribute attr;
  Term value;
};

int compare(const Fact& a, const Fact& b);
inline bool operator==(const Fact& a, const Fact& b) { return compare(a, b) == 0; }
inline bool operator!=(const Fact& a, const Fact& b) { return compare(a, b) != 0; }
inline bool operator<(const Fact& a, const Fact& b) { return compare(a, b) < 0; }

std::string to_string(const Fact& f);

const Term& unit_term();

// Structural hashes matching the compare-based equalities above, for
// hashed containers on the solver's hot paths.
size_t hash_value(const Term& t);
size_t hash_value(const Attribute& a);

struct TermHash {
  size_t operator()(const Term& t) const { return hash_value(t); }
};
struct AttributeHash {
  size_t operator()(const Attribute& a) const { return hash_value(a); }
};

// Finite partial map from variable names to ground terms.
using Substitution = std::map<std::string, Term>;

// Instantiates t under sigma; throws UnboundVariable if t mentions a
// variable sigma does not bind.
Term apply_subst(const Substitution& sigma, const Term& t);

// One-way matching: the minimal extension of sigma sending pattern to
// ground, or nullopt when none exists. `ground` must be ground.
std::optional<Substitution> match(const Term& pattern, const Term& ground,
                                  const Substitution& sigma);

}  // namespace fclp

#endif
