#include "fclp/solver.hpp"

#include <algorithm>
#include <cassert>

#include "fclp/builtins.hpp"
#include "fclp/oracle.hpp"

namespace fclp {

namespace {

void collect_term_vars(const Term& t, std::set<std::string>& vars) {
  if (t.is_var()) {
    vars.insert(t.name);
    return;
  }
  for (const auto& a : t.args()) collect_term_vars(a, vars);
}

AttributeChoices entry_from(const Constraint& c) {
  AttributeChoices e;
  if (c.is_just)
    e.justs.insert(c.value);
  else
    e.none = c.excluded;
  return e;
}

// Joins an open head permitting v into the entry. Existing just members
// always survive (via the head's noneOf{v} or just v arm); v itself is
// admitted only through the entry's noneOf member.
void join_open(AttributeChoices& e, const Term& v) {
  if (e.none) {
    if (!e.none->count(v)) e.justs.insert(v);
    e.none->insert(v);
  }
}

void join_closed(AttributeChoices& e, const std::vector<Term>& vs) {
  std::set<Term> keep;
  for (const auto& v : vs)
    if (e.justs.count(v) || (e.none && !e.none->count(v))) keep.insert(v);
  e.justs = std::move(keep);
  e.none.reset();
}

void join_ground_head(AttributeChoices& e, const GroundHead& gh) {
  if (gh.open)
    join_open(e, gh.values[0]);
  else
    join_closed(e, gh.values);
}

bool entry_agrees(const AttributeChoices& e, const Constraint& c) {
  if (c.is_just)
    return !e.none && e.justs.size() == 1 && *e.justs.begin() == c.value;
  return e.justs.empty() && e.none && *e.none == c.excluded;
}

bool match_app(const std::vector<Term>& patterns, const std::vector<Term>& ground,
               Substitution& sigma) {
  if (patterns.size() != ground.size()) return false;
  for (size_t i = 0; i < patterns.size(); ++i) {
    auto next = match(patterns[i], ground[i], sigma);
    if (!next) return false;
    sigma = std::move(*next);
  }
  return true;
}

const Term& yes_term() {
  static const Term t = Term::fun("yes");
  return t;
}

}  // namespace

std::vector<Constraint> AttributeChoices::candidates() const {
  std::vector<Constraint> out;
  out.reserve(size());
  for (const auto& t : justs) out.push_back(Constraint::just(t));
  if (none) out.push_back(Constraint::none_of(*none));
  return out;
}

ProgramIndex::ProgramIndex(Program p) : program(std::move(p)) {
  premise_meta.resize(program.rules.size());
  for (size_t r = 0; r < program.rules.size(); ++r) {
    const Rule& rule = program.rules[r];
    premise_meta[r].resize(rule.premises.size());
    std::set<std::string> bound;
    for (size_t i = 0; i < rule.premises.size(); ++i) {
      const Premise& prem = rule.premises[i];
      std::set<std::string> here;
      for (const auto& a : prem.args) collect_term_vars(a, here);
      if (prem.has_value) collect_term_vars(prem.value, here);
      if (prem.kind == Premise::Kind::Relation) {
        by_pred[prem.pred].push_back({static_cast<int>(r), static_cast<int>(i)});
        for (const auto& v : here)
          if (bound.count(v)) premise_meta[r][i].shared_vars.push_back(v);
      }
      bound.insert(here.begin(), here.end());
    }
  }
}

SolveState::SolveState(std::shared_ptr<const ProgramIndex> index)
    : index_(std::move(index)) {
  matching_.resize(index_->program.rules.size());
  for (size_t r = 0; r < matching_.size(); ++r)
    matching_[r].resize(index_->program.rules[r].premises.size());
  for (size_t r = 0; r < matching_.size(); ++r)
    advance(static_cast<int>(r), 0, Substitution{});
}

Constraint SolveState::db_at(const Attribute& a) const {
  auto it = db_.find(a);
  return it == db_.end() ? Constraint::bottom() : it->second;
}

void SolveState::set_entry(const Attribute& a, AttributeChoices entry) {
  bool single = entry.size() == 1;
  auto [it, inserted] = agenda_.insert_or_assign(a, std::move(entry));
  if (inserted) {
    agenda_pos_[a] = agenda_keys_.size();
    agenda_keys_.push_back(a);
  }
  if (single)
    forced_.insert(a);
  else
    forced_.erase(a);
}

void SolveState::drop_entry(const Attribute& a) {
  auto it = agenda_.find(a);
  if (it == agenda_.end()) return;
  agenda_.erase(it);
  forced_.erase(a);
  size_t pos = agenda_pos_[a];
  Attribute last = agenda_keys_.back();
  agenda_keys_[pos] = last;
  agenda_pos_[last] = pos;
  agenda_keys_.pop_back();
  agenda_pos_.erase(a);
}

void SolveState::join_head(const GroundHead& gh) {
  Constraint at = db_at(gh.attr);
  AttributeChoices e;
  auto it = agenda_.find(gh.attr);
  if (it != agenda_.end())
    e = it->second;
  else
    e = entry_from(at);
  join_ground_head(e, gh);
  if (e.size() == 0) {
    conflict_ = true;
    return;
  }
  if (entry_agrees(e, at))
    drop_entry(gh.attr);
  else
    set_entry(gh.attr, std::move(e));
}

void SolveState::fire_head(int rule, const Substitution& sigma) {
  join_head(ground_head(sigma, index_->program.rules[rule].head));
}

void SolveState::advance(int rule, size_t pos, const Substitution& sigma) {
  if (conflict_) return;
  const Rule& r = index_->program.rules[rule];
  if (pos == r.premises.size()) {
    fire_head(rule, sigma);
    return;
  }
  const Premise& prem = r.premises[pos];
  if (prem.kind == Premise::Kind::Builtin) {
    for (const auto& next : solve_builtin(prem, sigma)) advance(rule, pos + 1, next);
    return;
  }
  PremiseState& ps = matching_[rule][pos];
  if (!ps.prefixes.insert(sigma).second) return;
  const auto& shared = index_->premise_meta[rule][pos].shared_vars;
  std::vector<Term> key;
  key.reserve(shared.size());
  for (const auto& v : shared) key.push_back(sigma.at(v));
  auto& bucket = ps.prefix_by_key[key];
  bucket.push_back(sigma);
  auto facts_it = ps.facts_by_key.find(key);
  if (facts_it == ps.facts_by_key.end()) return;
  // the fact list can grow while we recurse; copying each entry keeps
  // iteration safe
  for (size_t k = 0; k < facts_it->second.size(); ++k) {
    auto fact = facts_it->second[k];
    Substitution next = sigma;
    if (!match_app(prem.args, fact.first.args, next)) continue;
    auto with_value = match(prem.value, fact.second, next);
    if (!with_value) continue;
    advance(rule, pos + 1, *with_value);
    if (conflict_) return;
  }
}

void SolveState::propagate(const Attribute& a, const Term& value) {
  auto uses = index_->by_pred.find(a.pred);
  if (uses == index_->by_pred.end()) return;

  // First file the fact under every premise it can satisfy, so prefix
  // extensions created below already see it; then extend the stored
  // prefixes through it.
  struct Use {
    int r, i;
    std::vector<Term> key;
  };
  std::vector<Use> relevant;
  for (auto [r, i] : uses->second) {
    const Premise& prem = index_->program.rules[r].premises[i];
    Substitution sigma;
    if (!match_app(prem.args, a.args, sigma)) continue;
    auto with_value = match(prem.value, value, sigma);
    if (!with_value) continue;
    const auto& shared = index_->premise_meta[r][i].shared_vars;
    std::vector<Term> key;
    key.reserve(shared.size());
    for (const auto& v : shared) key.push_back(with_value->at(v));
    matching_[r][i].facts_by_key[key].push_back({a, value});
    relevant.push_back({r, i, std::move(key)});
  }
  for (auto& [r, i, key] : relevant) {
    const Premise& prem = index_->program.rules[r].premises[i];
    auto bucket = matching_[r][i].prefix_by_key.find(key);
    if (bucket == matching_[r][i].prefix_by_key.end()) continue;
    // prefixes added during recursion join against all stored facts
    // themselves, so only the preexisting ones need the new fact; the
    // bucket reference stays valid across rehashes, but the vector may
    // reallocate while we recurse, so copy entries by index
    auto& prefixes = bucket->second;
    size_t n0 = prefixes.size();
    for (size_t k = 0; k < n0; ++k) {
      Substitution next = prefixes[k];
      if (!match_app(prem.args, a.args, next)) continue;
      auto full = match(prem.value, value, next);
      if (!full) continue;
      advance(r, i + 1, *full);
      if (conflict_) return;
    }
  }
}

void SolveState::insert(const Attribute& a, const Constraint& c) {
  db_[a] = c;
  drop_entry(a);
  if (c.is_just) propagate(a, c.value);
}

SolveState::DeduceResult SolveState::deduce(long long& fuel) {
  if (conflict_) return DeduceResult::Conflict;
  while (!forced_.empty()) {
    Attribute a = *forced_.begin();
    const AttributeChoices& e = agenda_.at(a);
    Constraint c = e.justs.empty() ? Constraint::none_of(*e.none)
                                   : Constraint::just(*e.justs.begin());
    if (fuel-- <= 0) return DeduceResult::FuelExhausted;
    insert(a, c);
    if (conflict_) return DeduceResult::Conflict;
  }
  return DeduceResult::Ok;
}

bool SolveState::positive() const {
  for (const auto& [a, c] : db_)
    if (!c.is_just) return false;
  return true;
}

bool SolveState::demands_satisfied() const {
  for (const auto& d : index_->program.demands) {
    auto it = db_.find(d);
    if (it == db_.end() || !it->second.is_just || it->second.value != yes_term())
      return false;
  }
  return true;
}

FactSet SolveState::solution() const {
  FactSet out;
  for (const auto& [a, c] : db_)
    if (c.is_just && !(a.pred.size() && a.pred[0] == '$'))
      out.insert(Fact{a, c.value});
  return out;
}

std::map<Attribute, AttributeChoices> recompute_agenda(
    const Program& p, const std::map<Attribute, Constraint>& db) {
  FactSet facts;
  for (const auto& [a, c] : db)
    if (c.is_just) facts.insert(Fact{a, c.value});

  auto db_at = [&](const Attribute& a) {
    auto it = db.find(a);
    return it == db.end() ? Constraint::bottom() : it->second;
  };

  std::map<Attribute, AttributeChoices> agenda;
  for (const auto& rule : p.rules) {
    satisfying_substitutions(rule.premises, facts, [&](const Substitution& sigma) {
      GroundHead gh = ground_head(sigma, rule.head);
      auto it = agenda.find(gh.attr);
      if (it == agenda.end())
        it = agenda.emplace(gh.attr, entry_from(db_at(gh.attr))).first;
      join_ground_head(it->second, gh);
    });
  }
  for (auto it = agenda.begin(); it != agenda.end();) {
    if (it->second.size() != 0 && entry_agrees(it->second, db_at(it->first)))
      it = agenda.erase(it);
    else
      ++it;
  }
  return agenda;
}

ChoiceSet immediate_consequence_at(const Program& p, const ConstraintDatabase& db,
                                   const Attribute& a) {
  FactSet facts = erase(db);
  AttributeChoices e = entry_from(db.get(a));
  for (const auto& rule : p.rules) {
    if (rule.head.pred != a.pred) continue;
    satisfying_substitutions(rule.premises, facts, [&](const Substitution& sigma) {
      GroundHead gh = ground_head(sigma, rule.head);
      if (gh.attr == a) join_ground_head(e, gh);
    });
  }
  ChoiceSet out;
  for (const auto& c : e.candidates())
    out.insert(ConstraintDatabase{}.with(a, c));
  return out;
}

ChoiceSet immediate_consequence(const Program& p, const ConstraintDatabase& db) {
  FactSet facts = erase(db);
  std::vector<ChoiceSet> parts;
  parts.push_back(ChoiceSet{db});
  for (const auto& rule : p.rules) {
    satisfying_substitutions(rule.premises, facts, [&](const Substitution& sigma) {
      GroundHead gh = ground_head(sigma, rule.head);
      ChoiceSet head;
      if (gh.open) {
        head.insert(ConstraintDatabase{}.with(gh.attr, Constraint::just(gh.values[0])));
        head.insert(
            ConstraintDatabase{}.with(gh.attr, Constraint::none_of({gh.values[0]})));
      } else {
        for (const auto& v : gh.values)
          head.insert(ConstraintDatabase{}.with(gh.attr, Constraint::just(v)));
      }
      parts.push_back(std::move(head));
    });
  }
  return choice_lub(parts);
}

Solver::Solver(const Program& p, SolveOptions options)
    : index_(std::make_shared<ProgramIndex>(p)),
      options_(options),
      rng_(options.seed),
      fuel_(options.fuel) {}

void Solver::init_node(Node& node, const SolveState& st) {
  const auto& keys = st.agenda_keys();
  size_t pick = std::uniform_int_distribution<size_t>(0, keys.size() - 1)(rng_);
  node.attr = keys[pick];
  const AttributeChoices& e = st.agenda_at(node.attr);
  std::vector<Constraint> justs;
  for (const auto& t : e.justs) justs.push_back(Constraint::just(t));
  for (size_t i = justs.size(); i > 1; --i) {
    size_t j = std::uniform_int_distribution<size_t>(0, i - 1)(rng_);
    std::swap(justs[i - 1], justs[j]);
  }
  node.cands = std::move(justs);
  if (e.none) node.cands.push_back(Constraint::none_of(*e.none));
  node.kids.resize(node.cands.size());
  node.exhausted.assign(node.cands.size(), 0);
  node.initialized = true;
}

bool Solver::child_viable(const Node& node, size_t i) const {
  return !node.exhausted[i] && !(node.kids[i] && node.kids[i]->dead);
}

int Solver::pick_child(const Node& node) {
  std::vector<size_t> viable_justs;
  int none_idx = -1;
  for (size_t i = 0; i < node.cands.size(); ++i) {
    if (!child_viable(node, i)) continue;
    if (node.cands[i].is_just)
      viable_justs.push_back(i);
    else
      none_idx = static_cast<int>(i);
  }
  if (!viable_justs.empty()) {
    size_t k =
        std::uniform_int_distribution<size_t>(0, viable_justs.size() - 1)(rng_);
    return static_cast<int>(viable_justs[k]);
  }
  return none_idx;
}

Solver::Descent Solver::descend(FactSet& out) {
  SolveState st(index_);
  if (st.conflicted()) {
    root_.dead = true;
    return Descent::Exhausted;
  }
  auto dr = st.deduce(fuel_);
  if (dr == SolveState::DeduceResult::FuelExhausted) return Descent::FuelExhausted;
  if (dr == SolveState::DeduceResult::Conflict) {
    root_.dead = true;
    return Descent::Exhausted;
  }
  if (options_.validate) {
    if (st.agenda() != recompute_agenda(index_->program, st.db()))
      throw Error("incremental agenda disagrees with full recomputation");
  }
  if (st.saturated()) {
    // deterministic program: the whole tree is this single leaf
    if (root_settled_) {
      root_.dead = true;
      return Descent::Exhausted;
    }
    root_settled_ = true;
    ++stats_.models;
    if (st.positive() && st.demands_satisfied()) {
      out = st.solution();
      seen_.insert(out);
      return Descent::Solution;
    }
    ++stats_.rejected;
    root_.dead = true;
    return Descent::Exhausted;
  }

  Node* node = &root_;
  while (true) {
    if (!node->initialized) init_node(*node, st);
    int idx = pick_child(*node);
    if (idx < 0) {
      node->dead = true;
      if (node == &root_) return Descent::Exhausted;
      return Descent::Restart;
    }
    if (fuel_-- <= 0) return Descent::FuelExhausted;
    st.insert(node->attr, node->cands[idx]);
    auto step = st.conflicted() ? SolveState::DeduceResult::Conflict
                                : st.deduce(fuel_);
    if (step == SolveState::DeduceResult::FuelExhausted)
      return Descent::FuelExhausted;
    if (step == SolveState::DeduceResult::Conflict) {
      node->exhausted[idx] = 1;
      ++stats_.backtracks;
      return Descent::Restart;
    }
    if (options_.validate) {
      if (st.agenda() != recompute_agenda(index_->program, st.db()))
        throw Error("incremental agenda disagrees with full recomputation");
    }
    if (st.saturated()) {
      node->exhausted[idx] = 1;
      ++stats_.models;
      if (st.positive() && st.demands_satisfied()) {
        FactSet sol = st.solution();
        if (seen_.insert(sol).second) {
          out = std::move(sol);
          return Descent::Solution;
        }
      }
      ++stats_.rejected;
      return Descent::Restart;
    }
    if (!node->kids[idx]) node->kids[idx] = std::make_unique<Node>();
    node = node->kids[idx].get();
  }
}

EnumerateResult Solver::enumerate(size_t max_solutions) {
  EnumerateResult res;
  while (res.solutions.size() < max_solutions) {
    if (root_.dead) {
      res.exhausted = true;
      break;
    }
    FactSet sol;
    switch (descend(sol)) {
      case Descent::Solution:
        res.solutions.push_back(std::move(sol));
        break;
      case Descent::Restart:
        break;
      case Descent::Exhausted:
        res.exhausted = true;
        break;
      case Descent::FuelExhausted:
        res.fuel_exhausted = true;
        break;
    }
    if (res.exhausted || res.fuel_exhausted) break;
  }
  if (!res.exhausted && root_.dead) res.exhausted = true;
  stats_.inserts = options_.fuel - fuel_;
  res.stats = stats_;
  return res;
}

SolveResult Solver::solve_one() {
  EnumerateResult e = enumerate(1);
  SolveResult r;
  r.stats = e.stats;
  if (!e.solutions.empty()) {
    r.status = SolveStatus::Solution;
    r.solution = std::move(e.solutions.front());
  } else {
    r.status = e.fuel_exhausted ? SolveStatus::FuelExhausted : SolveStatus::NoSolution;
  }
  return r;
}

}  // namespace fclp
