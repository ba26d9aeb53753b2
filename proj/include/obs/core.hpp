#ifndef OBS_CORE_HPP
#define OBS_CORE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "obs/errors.hpp"

// Core vocabulary of observable logic: many-sorted signatures, terms,
// formulas built from relations, equality, truth, falsum, finite binary
// conjunction, finite disjunction lists and existential quantification,
// plus sequents-in-context and theories. All values are immutable after
// construction and safe to share across threads.

namespace obs {

struct Sort {
  std::string name;
};

struct FunctionSymbol {
  std::string name;
  std::vector<std::string> arg_sorts;
  std::string result_sort;

  std::size_t arity() const { return arg_sorts.size(); }
};

struct RelationSymbol {
  std::string name;
  std::vector<std::string> arg_sorts;

  std::size_t arity() const { return arg_sorts.size(); }
};

// Sorts, functions and relations each form their own namespace; names are
// unique within a namespace and every referenced sort must resolve.
class Signature {
 public:
  Signature() = default;

  void add_sort(Sort s);
  void add_function(FunctionSymbol f);
  void add_relation(RelationSymbol r);

  const Sort* find_sort(const std::string& name) const;
  const FunctionSymbol* find_function(const std::string& name) const;
  const RelationSymbol* find_relation(const std::string& name) const;

  const std::vector<Sort>& sorts() const { return sorts_; }
  const std::vector<FunctionSymbol>& functions() const { return functions_; }
  const std::vector<RelationSymbol>& relations() const { return relations_; }

 private:
  std::vector<Sort> sorts_;
  std::vector<FunctionSymbol> functions_;
  std::vector<RelationSymbol> relations_;
};

// Union signature; throws NameCollision on any clash within a namespace.
// Formulas well-formed over `sig` stay well-formed over the result.
Signature extend_signature(const Signature& sig, const Signature& delta);

struct Variable {
  std::string name;
  std::string sort;

  friend bool operator==(const Variable& a, const Variable& b) {
    return a.name == b.name && a.sort == b.sort;
  }
  friend bool operator!=(const Variable& a, const Variable& b) { return !(a == b); }
  friend bool operator<(const Variable& a, const Variable& b) {
    return a.name != b.name ? a.name < b.name : a.sort < b.sort;
  }
};

class Term {
 public:
  static Term var(Variable v);
  static Term app(std::string fn, std::vector<Term> args = {});

  bool is_var() const { return node_->is_var; }
  bool is_app() const { return !node_->is_var; }
  const Variable& as_var() const { return node_->var; }
  const std::string& fn() const { return node_->fn; }
  const std::vector<Term>& args() const { return node_->args; }

  // Structural equality; terms contain no binders.
  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  struct Node {
    bool is_var = false;
    Variable var;
    std::string fn;
    std::vector<Term> args;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

enum class FormulaKind { Rel, Eq, Top, Bottom, And, Or, Exists };

class Formula {
 public:
  static Formula rel(std::string r, std::vector<Term> args);
  static Formula eq(Term lhs, Term rhs);
  static Formula top();
  static Formula bottom();
  static Formula conj(Formula lhs, Formula rhs);
  static Formula disj(std::vector<Formula> disjuncts);
  static Formula exists(Variable binder, Formula body);

  FormulaKind kind() const { return node_->kind; }
  const std::string& rel_name() const { return node_->name; }
  const std::vector<Term>& terms() const { return node_->terms; }
  const Term& eq_lhs() const { return node_->terms[0]; }
  const Term& eq_rhs() const { return node_->terms[1]; }
  const Formula& lhs() const { return node_->children[0]; }
  const Formula& rhs() const { return node_->children[1]; }
  const std::vector<Formula>& disjuncts() const { return node_->children; }
  const Variable& binder() const { return node_->binder; }
  const Formula& body() const { return node_->children[0]; }

  // Alpha-equality: bound variables compare positionally, free ones by
  // name and sort.
  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  struct Node {
    FormulaKind kind;
    std::string name;            // Rel
    std::vector<Term> terms;     // Rel args, Eq operands
    std::vector<Formula> children;  // And (2), Or (n), Exists body (1)
    Variable binder;             // Exists
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Ordered, duplicate-free (by name) list of typed variables.
class Context {
 public:
  Context() = default;
  explicit Context(std::vector<Variable> vars);

  const std::vector<Variable>& vars() const { return vars_; }
  bool contains(const std::string& name) const;
  const Variable* find(const std::string& name) const;
  std::size_t size() const { return vars_.size(); }
  bool empty() const { return vars_.empty(); }

  Context with(Variable v) const;      // append; throws on duplicate name
  Context without(const std::string& name) const;

  friend bool operator==(const Context& a, const Context& b) { return a.vars_ == b.vars_; }
  friend bool operator!=(const Context& a, const Context& b) { return !(a == b); }

 private:
  std::vector<Variable> vars_;
};

struct Sequent {
  Context ctx;
  Formula premise = Formula::top();
  Formula conclusion = Formula::top();

  friend bool operator==(const Sequent& a, const Sequent& b) {
    return a.ctx == b.ctx && a.premise == b.premise && a.conclusion == b.conclusion;
  }
  friend bool operator!=(const Sequent& a, const Sequent& b) { return !(a == b); }
};

struct NamedSequent {
  std::string name;
  Sequent seq;
};

struct Theory {
  std::string id;
  Signature signature;
  std::vector<NamedSequent> axioms;

  const NamedSequent* find_axiom(const std::string& name) const;
};

// ---------------------------------------------------------------------------
// Well-formedness

// Returns the sort of `t`; variables must be in `ctx`, applications must
// be arity- and sort-correct. Throws WfError naming the offending subterm.
std::string wf_term(const Signature& sig, const Context& ctx, const Term& t);

// Accepts exactly the formulas of the inductive grammar; Exists extends the
// context for its body and may not shadow a context variable.
void wf_formula(const Signature& sig, const Context& ctx, const Formula& f);

// Context covers all free variables and both formulas are well-formed.
void wf_sequent(const Signature& sig, const Sequent& s);

void wf_theory(const Theory& t);

// ---------------------------------------------------------------------------
// Variables and substitution

// Free variables in first-occurrence order; Exists binds its variable.
std::vector<Variable> free_vars(const Formula& f);
std::vector<Variable> term_vars(const Term& t);
bool is_free_in(const Variable& v, const Formula& f);

using SubstMapping = std::vector<std::pair<Variable, Term>>;

// Capture-avoiding simultaneous substitution. Bound variables are renamed
// with the minimal number of appended primes that avoids capture.
Term substitute(const Term& t, const SubstMapping& subst);
Formula substitute(const Formula& f, const SubstMapping& subst);

// A context morphism: maps every variable of some source context to a term
// over `target`. Used by the kernel substitution rule and the sieve
// calculus pullbacks.
struct Substitution {
  Context target;
  SubstMapping mapping;

  std::optional<Term> lookup(const Variable& v) const;
  Term apply(const Term& t) const { return substitute(t, mapping); }
  Formula apply(const Formula& f) const { return substitute(f, mapping); }
  Sequent apply_to_formulas(const Sequent& s) const;  // replaces ctx by target
};

// ---------------------------------------------------------------------------
// Canonical forms

bool alpha_equal(const Formula& a, const Formula& b);
bool alpha_equal(const Sequent& a, const Sequent& b);

// Canonical string key: bound variables are numbered by binder depth, so
// alpha-equal formulas produce identical keys. Stable across runs.
std::string canonical_key(const Term& t);
std::string canonical_key(const Formula& f);
std::string canonical_key(const Sequent& s);

// Flattened conjunct list: nested Ands are unfolded, Top is dropped,
// alpha-duplicates removed, result sorted by canonical key. The empty list
// is the normal form of Top.
std::vector<Formula> conj_components(const Formula& f);
// Every component of `sub` occurs (alpha-equal) among components of `sup`.
bool conj_subset(const std::vector<Formula>& sub, const std::vector<Formula>& sup);
bool conj_equal(const Formula& a, const Formula& b);

// Right-nested conjunction of `parts`; Top for the empty list.
Formula conj_of(const std::vector<Formula>& parts);

}  // namespace obs

#endif
