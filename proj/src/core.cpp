#include "obs/core.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace obs {

std::string path_to_string(const ProofPath& path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(path[i]);
  }
  return out;
}

const char* to_string(WfErrorKind kind) {
  switch (kind) {
    case WfErrorKind::UnknownVariable: return "UnknownVariable";
    case WfErrorKind::UnknownSymbol: return "UnknownSymbol";
    case WfErrorKind::ArityMismatch: return "ArityMismatch";
    case WfErrorKind::SortMismatch: return "SortMismatch";
    case WfErrorKind::DuplicateBinder: return "DuplicateBinder";
    case WfErrorKind::DuplicateContextVariable: return "DuplicateContextVariable";
    case WfErrorKind::NameCollision: return "NameCollision";
  }
  return "WfError";
}

const char* to_string(ProofErrorKind kind) {
  switch (kind) {
    case ProofErrorKind::RuleMismatch: return "RuleMismatch";
    case ProofErrorKind::UnknownAxiom: return "UnknownAxiom";
    case ProofErrorKind::IllFormedSequent: return "IllFormedSequent";
    case ProofErrorKind::PayloadError: return "PayloadError";
    case ProofErrorKind::PreconditionViolated: return "PreconditionViolated";
  }
  return "ProofError";
}

const char* to_string(SieveErrorKind kind) {
  switch (kind) {
    case SieveErrorKind::RuleMismatch: return "RuleMismatch";
    case SieveErrorKind::UnknownAxiom: return "UnknownAxiom";
    case SieveErrorKind::PullbackError: return "PullbackError";
    case SieveErrorKind::IllFormedSequent: return "IllFormedSequent";
    case SieveErrorKind::NotADualStatement: return "NotADualStatement";
    case SieveErrorKind::CompileFailed: return "CompileFailed";
    case SieveErrorKind::UnsupportedRule: return "UnsupportedRule";
  }
  return "SieveError";
}

// ---------------------------------------------------------------------------
// Signature

void Signature::add_sort(Sort s) {
  if (s.name.empty()) throw WfError(WfErrorKind::NameCollision, s.name, "empty sort name");
  if (find_sort(s.name))
    throw WfError(WfErrorKind::NameCollision, s.name, "duplicate sort '" + s.name + "'");
  sorts_.push_back(std::move(s));
}

void Signature::add_function(FunctionSymbol f) {
  if (find_function(f.name))
    throw WfError(WfErrorKind::NameCollision, f.name, "duplicate function '" + f.name + "'");
  for (const auto& s : f.arg_sorts)
    if (!find_sort(s))
      throw WfError(WfErrorKind::UnknownSymbol, s,
                    "function '" + f.name + "' references unknown sort '" + s + "'");
  if (!find_sort(f.result_sort))
    throw WfError(WfErrorKind::UnknownSymbol, f.result_sort,
                  "function '" + f.name + "' references unknown sort '" + f.result_sort + "'");
  functions_.push_back(std::move(f));
}

void Signature::add_relation(RelationSymbol r) {
  if (find_relation(r.name))
    throw WfError(WfErrorKind::NameCollision, r.name, "duplicate relation '" + r.name + "'");
  if (r.arg_sorts.empty())
    throw WfError(WfErrorKind::ArityMismatch, r.name,
                  "relation '" + r.name + "' must have arity >= 1");
  for (const auto& s : r.arg_sorts)
    if (!find_sort(s))
      throw WfError(WfErrorKind::UnknownSymbol, s,
                    "relation '" + r.name + "' references unknown sort '" + s + "'");
  relations_.push_back(std::move(r));
}

const Sort* Signature::find_sort(const std::string& name) const {
  for (const auto& s : sorts_)
    if (s.name == name) return &s;
  return nullptr;
}

const FunctionSymbol* Signature::find_function(const std::string& name) const {
  for (const auto& f : functions_)
    if (f.name == name) return &f;
  return nullptr;
}

const RelationSymbol* Signature::find_relation(const std::string& name) const {
  for (const auto& r : relations_)
    if (r.name == name) return &r;
  return nullptr;
}

Signature extend_signature(const Signature& sig, const Signature& delta) {
  Signature out = sig;
  for (const auto& s : delta.sorts()) out.add_sort(s);
  for (const auto& f : delta.functions()) out.add_function(f);
  for (const auto& r : delta.relations()) out.add_relation(r);
  return out;
}

// ---------------------------------------------------------------------------
// Terms and formulas

Term Term::var(Variable v) {
  auto node = std::make_shared<Node>();
  node->is_var = true;
  node->var = std::move(v);
  return Term(std::move(node));
}

Term Term::app(std::string fn, std::vector<Term> args) {
  auto node = std::make_shared<Node>();
  node->is_var = false;
  node->fn = std::move(fn);
  node->args = std::move(args);
  return Term(std::move(node));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_var() != b.is_var()) return false;
  if (a.is_var()) return a.as_var() == b.as_var();
  if (a.fn() != b.fn() || a.args().size() != b.args().size()) return false;
  for (std::size_t i = 0; i < a.args().size(); ++i)
    if (!(a.args()[i] == b.args()[i])) return false;
  return true;
}

Formula Formula::rel(std::string r, std::vector<Term> args) {
  auto node = std::make_shared<Node>();
  node->kind = FormulaKind::Rel;
  node->name = std::move(r);
  node->terms = std::move(args);
  return Formula(std::move(node));
}

Formula Formula::eq(Term lhs, Term rhs) {
  auto node = std::make_shared<Node>();
  node->kind = FormulaKind::Eq;
  node->terms = {std::move(lhs), std::move(rhs)};
  return Formula(std::move(node));
}

Formula Formula::top() {
  auto node = std::make_shared<Node>();
  node->kind = FormulaKind::Top;
  return Formula(std::move(node));
}

Formula Formula::bottom() {
  auto node = std::make_shared<Node>();
  node->kind = FormulaKind::Bottom;
  return Formula(std::move(node));
}

Formula Formula::conj(Formula lhs, Formula rhs) {
  auto node = std::make_shared<Node>();
  node->kind = FormulaKind::And;
  node->children = {std::move(lhs), std::move(rhs)};
  return Formula(std::move(node));
}

Formula Formula::disj(std::vector<Formula> disjuncts) {
  auto node = std::make_shared<Node>();
  node->kind = FormulaKind::Or;
  node->children = std::move(disjuncts);
  return Formula(std::move(node));
}

Formula Formula::exists(Variable binder, Formula body) {
  auto node = std::make_shared<Node>();
  node->kind = FormulaKind::Exists;
  node->binder = std::move(binder);
  node->children = {std::move(body)};
  return Formula(std::move(node));
}

bool operator==(const Formula& a, const Formula& b) { return alpha_equal(a, b); }

// ---------------------------------------------------------------------------
// Context

Context::Context(std::vector<Variable> vars) : vars_(std::move(vars)) {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (std::size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i].name == vars_[j].name)
        throw WfError(WfErrorKind::DuplicateContextVariable, vars_[i].name,
                      "context repeats variable '" + vars_[i].name + "'");
}

bool Context::contains(const std::string& name) const { return find(name) != nullptr; }

const Variable* Context::find(const std::string& name) const {
  for (const auto& v : vars_)
    if (v.name == name) return &v;
  return nullptr;
}

Context Context::with(Variable v) const {
  std::vector<Variable> out = vars_;
  out.push_back(std::move(v));
  return Context(std::move(out));
}

Context Context::without(const std::string& name) const {
  std::vector<Variable> out;
  for (const auto& v : vars_)
    if (v.name != name) out.push_back(v);
  return Context(std::move(out));
}

const NamedSequent* Theory::find_axiom(const std::string& name) const {
  for (const auto& ax : axioms)
    if (ax.name == name) return &ax;
  return nullptr;
}

// ---------------------------------------------------------------------------
// Well-formedness

namespace {

std::string term_to_display(const Term& t) {
  if (t.is_var()) return t.as_var().name;
  std::string out = t.fn();
  if (!t.args().empty()) {
    out += '(';
    for (std::size_t i = 0; i < t.args().size(); ++i) {
      if (i) out += ',';
      out += term_to_display(t.args()[i]);
    }
    out += ')';
  }
  return out;
}

}  // namespace

std::string wf_term(const Signature& sig, const Context& ctx, const Term& t) {
  if (t.is_var()) {
    const Variable& v = t.as_var();
    const Variable* in_ctx = ctx.find(v.name);
    if (!in_ctx)
      throw WfError(WfErrorKind::UnknownVariable, v.name,
                    "variable '" + v.name + "' not in context");
    if (in_ctx->sort != v.sort)
      throw WfError(WfErrorKind::SortMismatch, v.name,
                    "variable '" + v.name + "' has sort " + v.sort + " but context declares " +
                        in_ctx->sort);
    if (!sig.find_sort(v.sort))
      throw WfError(WfErrorKind::UnknownSymbol, v.sort, "unknown sort '" + v.sort + "'");
    return v.sort;
  }
  const FunctionSymbol* fn = sig.find_function(t.fn());
  if (!fn)
    throw WfError(WfErrorKind::UnknownSymbol, t.fn(), "unknown function '" + t.fn() + "'");
  if (fn->arity() != t.args().size())
    throw WfError(WfErrorKind::ArityMismatch, term_to_display(t),
                  "'" + t.fn() + "' expects " + std::to_string(fn->arity()) + " arguments, got " +
                      std::to_string(t.args().size()));
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    std::string got = wf_term(sig, ctx, t.args()[i]);
    if (got != fn->arg_sorts[i])
      throw WfError(WfErrorKind::SortMismatch, term_to_display(t.args()[i]),
                    "argument " + std::to_string(i + 1) + " of '" + t.fn() + "' has sort " + got +
                        ", expected " + fn->arg_sorts[i]);
  }
  return fn->result_sort;
}

void wf_formula(const Signature& sig, const Context& ctx, const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Top:
    case FormulaKind::Bottom:
      return;
    case FormulaKind::Rel: {
      const RelationSymbol* rel = sig.find_relation(f.rel_name());
      if (!rel)
        throw WfError(WfErrorKind::UnknownSymbol, f.rel_name(),
                      "unknown relation '" + f.rel_name() + "'");
      if (rel->arity() != f.terms().size())
        throw WfError(WfErrorKind::ArityMismatch, f.rel_name(),
                      "'" + f.rel_name() + "' expects " + std::to_string(rel->arity()) +
                          " arguments, got " + std::to_string(f.terms().size()));
      for (std::size_t i = 0; i < f.terms().size(); ++i) {
        std::string got = wf_term(sig, ctx, f.terms()[i]);
        if (got != rel->arg_sorts[i])
          throw WfError(WfErrorKind::SortMismatch, term_to_display(f.terms()[i]),
                        "argument " + std::to_string(i + 1) + " of '" + f.rel_name() +
                            "' has sort " + got + ", expected " + rel->arg_sorts[i]);
      }
      return;
    }
    case FormulaKind::Eq: {
      std::string ls = wf_term(sig, ctx, f.eq_lhs());
      std::string rs = wf_term(sig, ctx, f.eq_rhs());
      if (ls != rs)
        throw WfError(WfErrorKind::SortMismatch, term_to_display(f.eq_rhs()),
                      "equality operands have sorts " + ls + " and " + rs);
      return;
    }
    case FormulaKind::And:
      wf_formula(sig, ctx, f.lhs());
      wf_formula(sig, ctx, f.rhs());
      return;
    case FormulaKind::Or:
      for (const auto& d : f.disjuncts()) wf_formula(sig, ctx, d);
      return;
    case FormulaKind::Exists: {
      if (ctx.contains(f.binder().name))
        throw WfError(WfErrorKind::DuplicateBinder, f.binder().name,
                      "binder '" + f.binder().name + "' shadows a context variable");
      if (!sig.find_sort(f.binder().sort))
        throw WfError(WfErrorKind::UnknownSymbol, f.binder().sort,
                      "unknown sort '" + f.binder().sort + "'");
      wf_formula(sig, ctx.with(f.binder()), f.body());
      return;
    }
  }
}

void wf_sequent(const Signature& sig, const Sequent& s) {
  wf_formula(sig, s.ctx, s.premise);
  wf_formula(sig, s.ctx, s.conclusion);
  // free_vars ⊆ ctx is implied: wf_formula rejects out-of-context variables.
}

void wf_theory(const Theory& t) {
  std::set<std::string> names;
  for (const auto& ax : t.axioms) {
    if (!names.insert(ax.name).second)
      throw WfError(WfErrorKind::NameCollision, ax.name, "duplicate axiom '" + ax.name + "'");
    wf_sequent(t.signature, ax.seq);
  }
}

// ---------------------------------------------------------------------------
// Free variables

namespace {

void term_vars_into(const Term& t, std::vector<Variable>& out) {
  if (t.is_var()) {
    for (const auto& v : out)
      if (v == t.as_var()) return;
    out.push_back(t.as_var());
    return;
  }
  for (const auto& a : t.args()) term_vars_into(a, out);
}

void free_vars_into(const Formula& f, std::vector<std::string>& bound,
                    std::vector<Variable>& out) {
  auto add = [&](const Variable& v) {
    for (const auto& b : bound)
      if (b == v.name) return;
    for (const auto& o : out)
      if (o == v) return;
    out.push_back(v);
  };
  switch (f.kind()) {
    case FormulaKind::Top:
    case FormulaKind::Bottom:
      return;
    case FormulaKind::Rel:
    case FormulaKind::Eq: {
      std::vector<Variable> tv;
      for (const auto& t : f.terms()) term_vars_into(t, tv);
      for (const auto& v : tv) add(v);
      return;
    }
    case FormulaKind::And:
      free_vars_into(f.lhs(), bound, out);
      free_vars_into(f.rhs(), bound, out);
      return;
    case FormulaKind::Or:
      for (const auto& d : f.disjuncts()) free_vars_into(d, bound, out);
      return;
    case FormulaKind::Exists:
      bound.push_back(f.binder().name);
      free_vars_into(f.body(), bound, out);
      bound.pop_back();
      return;
  }
}

}  // namespace

std::vector<Variable> term_vars(const Term& t) {
  std::vector<Variable> out;
  term_vars_into(t, out);
  return out;
}

std::vector<Variable> free_vars(const Formula& f) {
  std::vector<Variable> out;
  std::vector<std::string> bound;
  free_vars_into(f, bound, out);
  return out;
}

bool is_free_in(const Variable& v, const Formula& f) {
  for (const auto& fv : free_vars(f))
    if (fv == v) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Substitution

namespace {

bool mapping_mentions(const SubstMapping& subst, const std::string& name) {
  for (const auto& [v, t] : subst) {
    (void)v;
    for (const auto& tv : term_vars(t))
      if (tv.name == name) return true;
  }
  return false;
}

// Minimal number of appended primes making the binder fresh for the body's
// free variables and for every term that will be substituted into the body.
Variable fresh_binder(const Variable& binder, const Formula& body, const SubstMapping& live) {
  std::vector<std::string> taken;
  for (const auto& v : free_vars(body))
    if (v.name != binder.name) taken.push_back(v.name);
  for (const auto& [v, t] : live) {
    taken.push_back(v.name);
    for (const auto& tv : term_vars(t)) taken.push_back(tv.name);
  }
  std::string candidate = binder.name;
  for (;;) {
    candidate += '\'';
    if (std::find(taken.begin(), taken.end(), candidate) == taken.end())
      return Variable{candidate, binder.sort};
  }
}

}  // namespace

Term substitute(const Term& t, const SubstMapping& subst) {
  if (t.is_var()) {
    for (const auto& [v, repl] : subst)
      if (v == t.as_var()) return repl;
    return t;
  }
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const auto& a : t.args()) args.push_back(substitute(a, subst));
  return Term::app(t.fn(), std::move(args));
}

Formula substitute(const Formula& f, const SubstMapping& subst) {
  switch (f.kind()) {
    case FormulaKind::Top:
    case FormulaKind::Bottom:
      return f;
    case FormulaKind::Rel: {
      std::vector<Term> args;
      args.reserve(f.terms().size());
      for (const auto& t : f.terms()) args.push_back(substitute(t, subst));
      return Formula::rel(f.rel_name(), std::move(args));
    }
    case FormulaKind::Eq:
      return Formula::eq(substitute(f.eq_lhs(), subst), substitute(f.eq_rhs(), subst));
    case FormulaKind::And:
      return Formula::conj(substitute(f.lhs(), subst), substitute(f.rhs(), subst));
    case FormulaKind::Or: {
      std::vector<Formula> ds;
      ds.reserve(f.disjuncts().size());
      for (const auto& d : f.disjuncts()) ds.push_back(substitute(d, subst));
      return Formula::disj(std::move(ds));
    }
    case FormulaKind::Exists: {
      // Drop mappings shadowed by the binder, keep only those hitting a
      // free variable of the body.
      SubstMapping live;
      for (const auto& entry : subst) {
        if (entry.first.name == f.binder().name) continue;
        if (is_free_in(entry.first, f.body())) live.push_back(entry);
      }
      if (live.empty()) return f;
      Variable binder = f.binder();
      Formula body = f.body();
      if (mapping_mentions(live, binder.name)) {
        Variable fresh = fresh_binder(binder, body, live);
        body = substitute(body, {{binder, Term::var(fresh)}});
        binder = fresh;
      }
      return Formula::exists(binder, substitute(body, live));
    }
  }
  return f;  // unreachable
}

std::optional<Term> Substitution::lookup(const Variable& v) const {
  for (const auto& [from, to] : mapping)
    if (from == v) return to;
  return std::nullopt;
}

Sequent Substitution::apply_to_formulas(const Sequent& s) const {
  return Sequent{target, apply(s.premise), apply(s.conclusion)};
}

// ---------------------------------------------------------------------------
// Alpha equality and canonical keys

namespace {

// Bound variables are looked up in the enclosing binder stack and rendered
// as their depth index; free variables keep their names.
struct BinderStack {
  std::vector<std::string> names;

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = names.size(); i-- > 0;)
      if (names[i] == name) return i;
    return std::nullopt;
  }
};

bool alpha_eq_term(const Term& a, const Term& b, const BinderStack& sa, const BinderStack& sb) {
  if (a.is_var() != b.is_var()) return false;
  if (a.is_var()) {
    auto ia = sa.index_of(a.as_var().name);
    auto ib = sb.index_of(b.as_var().name);
    if (ia.has_value() != ib.has_value()) return false;
    if (ia) return *ia == *ib && a.as_var().sort == b.as_var().sort;
    return a.as_var() == b.as_var();
  }
  if (a.fn() != b.fn() || a.args().size() != b.args().size()) return false;
  for (std::size_t i = 0; i < a.args().size(); ++i)
    if (!alpha_eq_term(a.args()[i], b.args()[i], sa, sb)) return false;
  return true;
}

bool alpha_eq(const Formula& a, const Formula& b, BinderStack& sa, BinderStack& sb) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case FormulaKind::Top:
    case FormulaKind::Bottom:
      return true;
    case FormulaKind::Rel:
      if (a.rel_name() != b.rel_name() || a.terms().size() != b.terms().size()) return false;
      for (std::size_t i = 0; i < a.terms().size(); ++i)
        if (!alpha_eq_term(a.terms()[i], b.terms()[i], sa, sb)) return false;
      return true;
    case FormulaKind::Eq:
      return alpha_eq_term(a.eq_lhs(), b.eq_lhs(), sa, sb) &&
             alpha_eq_term(a.eq_rhs(), b.eq_rhs(), sa, sb);
    case FormulaKind::And:
      return alpha_eq(a.lhs(), b.lhs(), sa, sb) && alpha_eq(a.rhs(), b.rhs(), sa, sb);
    case FormulaKind::Or: {
      if (a.disjuncts().size() != b.disjuncts().size()) return false;
      for (std::size_t i = 0; i < a.disjuncts().size(); ++i)
        if (!alpha_eq(a.disjuncts()[i], b.disjuncts()[i], sa, sb)) return false;
      return true;
    }
    case FormulaKind::Exists: {
      if (a.binder().sort != b.binder().sort) return false;
      sa.names.push_back(a.binder().name);
      sb.names.push_back(b.binder().name);
      bool ok = alpha_eq(a.body(), b.body(), sa, sb);
      sa.names.pop_back();
      sb.names.pop_back();
      return ok;
    }
  }
  return false;
}

void key_term(const Term& t, const BinderStack& stack, std::string& out) {
  if (t.is_var()) {
    if (auto idx = stack.index_of(t.as_var().name)) {
      out += "%";
      out += std::to_string(*idx);
    } else {
      out += t.as_var().name;
      out += ':';
      out += t.as_var().sort;
    }
    return;
  }
  out += '(';
  out += t.fn();
  for (const auto& a : t.args()) {
    out += ' ';
    key_term(a, stack, out);
  }
  out += ')';
}

void key_formula(const Formula& f, BinderStack& stack, std::string& out) {
  switch (f.kind()) {
    case FormulaKind::Top:
      out += "T";
      return;
    case FormulaKind::Bottom:
      out += "F";
      return;
    case FormulaKind::Rel:
      out += '(';
      out += f.rel_name();
      for (const auto& t : f.terms()) {
        out += ' ';
        key_term(t, stack, out);
      }
      out += ')';
      return;
    case FormulaKind::Eq:
      out += "(= ";
      key_term(f.eq_lhs(), stack, out);
      out += ' ';
      key_term(f.eq_rhs(), stack, out);
      out += ')';
      return;
    case FormulaKind::And:
      out += "(& ";
      key_formula(f.lhs(), stack, out);
      out += ' ';
      key_formula(f.rhs(), stack, out);
      out += ')';
      return;
    case FormulaKind::Or:
      out += "(|";
      for (const auto& d : f.disjuncts()) {
        out += ' ';
        key_formula(d, stack, out);
      }
      out += ')';
      return;
    case FormulaKind::Exists:
      out += "(E ";
      out += f.binder().sort;
      out += ' ';
      stack.names.push_back(f.binder().name);
      key_formula(f.body(), stack, out);
      stack.names.pop_back();
      out += ')';
      return;
  }
}

}  // namespace

bool alpha_equal(const Formula& a, const Formula& b) {
  BinderStack sa, sb;
  return alpha_eq(a, b, sa, sb);
}

bool alpha_equal(const Sequent& a, const Sequent& b) {
  return a.ctx == b.ctx && alpha_equal(a.premise, b.premise) &&
         alpha_equal(a.conclusion, b.conclusion);
}

std::string canonical_key(const Term& t) {
  std::string out;
  key_term(t, BinderStack{}, out);
  return out;
}

std::string canonical_key(const Formula& f) {
  std::string out;
  BinderStack stack;
  key_formula(f, stack, out);
  return out;
}

std::string canonical_key(const Sequent& s) {
  std::string out = "[";
  for (const auto& v : s.ctx.vars()) {
    out += v.name;
    out += ':';
    out += v.sort;
    out += ' ';
  }
  out += "] ";
  out += canonical_key(s.premise);
  out += " |- ";
  out += canonical_key(s.conclusion);
  return out;
}

// ---------------------------------------------------------------------------
// Conjunct normal form

namespace {

void flatten_conj(const Formula& f, std::vector<Formula>& out) {
  if (f.kind() == FormulaKind::And) {
    flatten_conj(f.lhs(), out);
    flatten_conj(f.rhs(), out);
    return;
  }
  if (f.kind() == FormulaKind::Top) return;
  out.push_back(f);
}

}  // namespace

std::vector<Formula> conj_components(const Formula& f) {
  std::vector<Formula> flat;
  flatten_conj(f, flat);
  std::vector<std::pair<std::string, Formula>> keyed;
  keyed.reserve(flat.size());
  for (const auto& g : flat) keyed.emplace_back(canonical_key(g), g);
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Formula> out;
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i > 0 && keyed[i].first == keyed[i - 1].first) continue;
    out.push_back(keyed[i].second);
  }
  return out;
}

bool conj_subset(const std::vector<Formula>& sub, const std::vector<Formula>& sup) {
  for (const auto& a : sub) {
    bool found = false;
    for (const auto& b : sup)
      if (alpha_equal(a, b)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

bool conj_equal(const Formula& a, const Formula& b) {
  auto ca = conj_components(a);
  auto cb = conj_components(b);
  if (ca.size() != cb.size()) return false;
  for (std::size_t i = 0; i < ca.size(); ++i)
    if (!alpha_equal(ca[i], cb[i])) return false;
  return true;
}

Formula conj_of(const std::vector<Formula>& parts) {
  if (parts.empty()) return Formula::top();
  Formula out = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;) out = Formula::conj(parts[i], out);
  return out;
}

}  // namespace obs
