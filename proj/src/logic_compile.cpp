#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>

#include "autofrob/arith.hpp"
#include "autofrob/error.hpp"
#include "autofrob/logic.hpp"
#include "autofrob/sequences.hpp"

namespace autofrob {

PredicateEnv PredicateEnv::define(const std::string& name, Predicate p) const {
  if (predicates_->contains(name)) throw Error("predicate '" + name + "' is already defined");
  auto next = std::make_shared<PredicateMap>(*predicates_);
  next->emplace(name, std::make_shared<const Predicate>(std::move(p)));
  PredicateEnv out = *this;
  out.predicates_ = std::move(next);
  return out;
}

PredicateEnv PredicateEnv::with_sequence(const std::string& name, Dfao d) const {
  auto next = std::make_shared<SequenceMap>(*sequences_);
  (*next)[name] = std::make_shared<const Dfao>(std::move(d));
  PredicateEnv out = *this;
  out.sequences_ = std::move(next);
  return out;
}

const Predicate* PredicateEnv::find_predicate(std::string_view name) const {
  auto it = predicates_->find(name);
  return it == predicates_->end() ? nullptr : it->second.get();
}

const Dfao* PredicateEnv::find_sequence(std::string_view name) const {
  auto it = sequences_->find(name);
  return it == sequences_->end() ? nullptr : it->second.get();
}

std::vector<std::string> PredicateEnv::predicate_names() const {
  std::vector<std::string> out;
  for (const auto& [name, p] : *predicates_) out.push_back(name);
  return out;
}

namespace {

// A relation over named tracks; `vars` is sorted and names track j of `a`.
struct Rel {
  std::vector<std::string> vars;
  Dfa a;
};

class Compiler {
 public:
  Compiler(System system, const PredicateEnv& env, const CompileOptions& options)
      : system_(system), env_(env), budget_(options.budget) {}

  Rel run(const Formula& f) {
    std::set<std::string> bound;
    return compile(f, bound);
  }

  Dfa widen(const Rel& r, const std::vector<std::string>& vars) const {
    std::vector<unsigned> map;
    for (const auto& v : r.vars) {
      auto it = std::lower_bound(vars.begin(), vars.end(), v);
      map.push_back(static_cast<unsigned>(it - vars.begin()));
    }
    return cylindrify(r.a, static_cast<unsigned>(vars.size()), map);
  }

 private:
  [[noreturn]] void fail(const Formula& f, const std::string& msg) const {
    throw Error("at offset " + std::to_string(f.offset) + ": " + msg);
  }

  Rel constant(bool value) const {
    return {{}, value ? universal_dfa(system_, 0) : empty_dfa(system_, 0)};
  }

  Rel combine(const Rel& x, const Rel& y, BoolOp op) const {
    std::vector<std::string> vars;
    std::set_union(x.vars.begin(), x.vars.end(), y.vars.begin(), y.vars.end(), std::back_inserter(vars));
    if (vars.size() > kMaxArity) throw ResourceError("formula needs more than 16 simultaneous variables");
    Dfa out = product(widen(x, vars), widen(y, vars), op, budget_);
    // An And of two relations that each constrain their own tracks stays valid.
    if (op != BoolOp::And) out = restrict_to_valid(out, budget_);
    return {std::move(vars), std::move(out)};
  }

  Rel negation(const Rel& x) const { return {x.vars, restrict_to_valid(complement(x.a), budget_)}; }

  Rel project(Rel r, const std::string& var) const {
    auto it = std::find(r.vars.begin(), r.vars.end(), var);
    if (it == r.vars.end()) return r;
    const auto track = static_cast<unsigned>(it - r.vars.begin());
    r.a = project_existential(r.a, track, budget_);
    r.vars.erase(it);
    return r;
  }

  std::string fresh() { return "#" + std::to_string(counter_++); }

  // sum coeffs*vars REL constant, over the term's variables.
  Rel linear_atom(const LinearTerm& t, Relation rel, std::int64_t rhs) {
    if (t.is_constant()) return constant(holds(t.constant, rel, rhs));
    const std::int64_t c = rhs - t.constant;
    Rel r;
    std::vector<std::int64_t> coeffs;
    for (const auto& [v, k] : t.coeffs) {
      r.vars.push_back(v);
      coeffs.push_back(k);
    }
    if (r.vars.size() > kMaxArity) throw ResourceError("comparison mentions more than 16 variables");
    auto key = std::make_tuple(coeffs, rel, c);
    if (auto it = linear_cache_.find(key); it != linear_cache_.end()) {
      r.a = it->second;
      return r;
    }
    if (c == 0 && coeffs.size() == 2 && coeffs[0] * coeffs[1] == -1) {
      // x - y REL 0 by the first differing digit.
      r.a = build_comparison(system_, coeffs[0] == 1 ? rel : flip(rel));
    } else {
      r.a = build_linear(system_, coeffs, rel, c, budget_);
    }
    linear_cache_.emplace(key, r.a);
    return r;
  }

  Rel compare(const LinearTerm& lhs, Relation rel, const LinearTerm& rhs) {
    LinearTerm d = lhs;
    d -= rhs;
    return linear_atom(d, rel, 0);
  }

  // Names a term: either the variable itself or a fresh variable u with u = term.
  std::string name_term(const LinearTerm& t, std::vector<std::pair<std::string, LinearTerm>>& defs) {
    if (auto v = t.as_variable()) return *v;
    const std::string u = fresh();
    defs.emplace_back(u, t);
    return u;
  }

  Rel with_definitions(Rel body, const std::vector<std::pair<std::string, LinearTerm>>& defs) {
    for (const auto& [u, t] : defs) body = combine(body, compare(LinearTerm::variable(u), Relation::Eq, t), BoolOp::And);
    for (const auto& d : defs) body = project(std::move(body), d.first);
    return body;
  }

  Rel sequence_atom(const Formula& f) {
    const Dfao* d = env_.find_sequence(f.name);
    if (!d) fail(f, "unknown sequence '" + f.name + "'");
    if (d->system() != system_)
      fail(f, "sequence '" + f.name + "' is over " + std::string(system_name(d->system())) +
                  ", the formula is over " + std::string(system_name(system_)));
    std::vector<std::pair<std::string, LinearTerm>> defs;
    const std::string var = name_term(f.args.at(0), defs);
    Rel atom{{var}, restrict_to_valid(dfao_to_dfa(*d, f.output, f.rel == Relation::Ne), budget_)};
    return with_definitions(std::move(atom), defs);
  }

  Rel call(const Formula& f) {
    const Predicate* p = env_.find_predicate(f.name);
    if (!p) fail(f, "unknown predicate '" + f.name + "'");
    if (p->params.size() != f.args.size())
      fail(f, "predicate '" + f.name + "' takes " + std::to_string(p->params.size()) + " arguments, got " +
                  std::to_string(f.args.size()));
    if (p->automaton.system() != system_)
      fail(f, "predicate '" + f.name + "' is over " + std::string(system_name(p->automaton.system())) +
                  ", the formula is over " + std::string(system_name(system_)));
    std::vector<std::pair<std::string, LinearTerm>> defs;
    std::vector<std::string> names;
    for (const auto& arg : f.args) {
      std::string n = name_term(arg, defs);
      if (std::find(names.begin(), names.end(), n) != names.end()) {
        // A repeated variable gets its own track tied by equality.
        const std::string u = fresh();
        defs.emplace_back(u, LinearTerm::variable(n));
        n = u;
      }
      names.push_back(n);
    }
    Rel atom;
    atom.vars = names;
    std::sort(atom.vars.begin(), atom.vars.end());
    std::vector<unsigned> map;
    for (const auto& n : names)
      map.push_back(static_cast<unsigned>(std::lower_bound(atom.vars.begin(), atom.vars.end(), n) - atom.vars.begin()));
    atom.a = cylindrify(p->automaton, static_cast<unsigned>(names.size()), map);
    return with_definitions(std::move(atom), defs);
  }

  Rel compile(const Formula& f, std::set<std::string>& bound) {
    using K = Formula::Kind;
    switch (f.kind) {
      case K::True: return constant(true);
      case K::False: return constant(false);
      case K::Not: return negation(compile(f.children[0], bound));
      case K::And: return combine(compile(f.children[0], bound), compile(f.children[1], bound), BoolOp::And);
      case K::Or: return combine(compile(f.children[0], bound), compile(f.children[1], bound), BoolOp::Or);
      case K::Implies:
        return combine(compile(f.children[0], bound), compile(f.children[1], bound), BoolOp::Implies);
      case K::Iff: return combine(compile(f.children[0], bound), compile(f.children[1], bound), BoolOp::Iff);
      case K::Compare: return compare(f.lhs, f.rel, f.rhs);
      case K::SequenceAtom: return sequence_atom(f);
      case K::Call: return call(f);
      case K::Exists:
      case K::ForAll: {
        for (const auto& v : f.vars)
          if (bound.contains(v)) fail(f, "variable '" + v + "' is already bound");
        std::set<std::string> seen;
        for (const auto& v : f.vars)
          if (!seen.insert(v).second) fail(f, "variable '" + v + "' is quantified twice");
        for (const auto& v : f.vars) bound.insert(v);
        Rel body = compile(f.children[0], bound);
        for (const auto& v : f.vars) bound.erase(v);
        const bool universal = f.kind == K::ForAll;
        if (universal) body = negation(body);
        for (auto it = f.vars.rbegin(); it != f.vars.rend(); ++it) body = project(std::move(body), *it);
        if (universal) body = negation(body);
        return body;
      }
    }
    fail(f, "unsupported formula node");
  }

  System system_;
  const PredicateEnv& env_;
  Budget budget_;
  std::size_t counter_ = 0;
  std::map<std::tuple<std::vector<std::int64_t>, Relation, std::int64_t>, Dfa> linear_cache_;
};

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : ", ") + s;
  return out;
}

}  // namespace

CompiledRelation compile(const ParsedFormula& f, const PredicateEnv& env, const CompileOptions& options) {
  Compiler c(f.system, env, options);
  Rel r = c.run(f.root);
  return {std::move(r.vars), minimize(r.a)};
}

CompiledRelation compile(std::string_view text, const PredicateEnv& env, const CompileOptions& options) {
  return compile(parse_formula(text, options.default_system), env, options);
}

bool decide(const ParsedFormula& f, const PredicateEnv& env, const CompileOptions& options) {
  CompiledRelation r = compile(f, env, options);
  if (!r.vars.empty()) throw Error("unbound variable(s) in sentence: " + join(r.vars));
  return r.automaton.accepting(r.automaton.initial());
}

bool decide(std::string_view text, const PredicateEnv& env, const CompileOptions& options) {
  return decide(parse_formula(text, options.default_system), env, options);
}

PredicateEnv define(const PredicateEnv& env, const std::string& name, std::vector<std::string> params,
                    const ParsedFormula& f, const CompileOptions& options) {
  if (env.find_predicate(name)) throw Error("predicate '" + name + "' is already defined");
  CompiledRelation r = compile(f, env, options);
  if (params.empty()) params = r.vars;
  std::set<std::string> distinct(params.begin(), params.end());
  if (distinct.size() != params.size()) throw Error("predicate '" + name + "' repeats a parameter");
  if (params.size() > kMaxArity) throw ResourceError("predicate '" + name + "' has more than 16 parameters");
  std::vector<unsigned> map;
  for (const auto& v : r.vars) {
    auto it = std::find(params.begin(), params.end(), v);
    if (it == params.end()) throw Error("free variable '" + v + "' of '" + name + "' is not a parameter");
    map.push_back(static_cast<unsigned>(it - params.begin()));
  }
  Dfa a = cylindrify(r.automaton, static_cast<unsigned>(params.size()), map);
  a = minimize(restrict_to_valid(a, options.budget));
  return env.define(name, Predicate{std::move(params), std::move(a)});
}

PredicateEnv define(const PredicateEnv& env, const std::string& name, std::string_view text,
                    const CompileOptions& options) {
  return define(env, name, {}, parse_formula(text, options.default_system), options);
}

PredicateEnv builtin_env() {
  PredicateEnv env;
  env = env.with_sequence("T", thue_morse_dfao());
  env = env.with_sequence("F", fibonacci_word_dfao());
  env = env.define("fibinc", Predicate{{"x", "y"}, build_fib_incrementer()});
  env = env.define("shift", Predicate{{"x", "y"}, build_fib_shifter()});
  return env;
}

}  // namespace autofrob
