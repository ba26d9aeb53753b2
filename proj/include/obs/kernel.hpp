#ifndef OBS_KERNEL_HPP
#define OBS_KERNEL_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "obs/core.hpp"

// Proof trees over the sixteen-rule sequent calculus of observable logic,
// plus theory-axiom leaves. Constructors compute each node's conclusion and
// enforce side conditions; check_proof re-derives every conclusion from
// scratch, so a tree assembled by any route is trusted only after checking.

namespace obs {

enum class Rule {
  Axiom,      // leaf: named theory axiom, instantiated by context renaming
  Identity,   // φ ⊢ φ
  Cut,        // φ ⊢ ψ and ψ ⊢ χ give φ ⊢ χ
  Subst,      // φ ⊢_x⃗ ψ gives φ[s] ⊢_y⃗ ψ[s] along a context morphism s
  Truth,      // φ ⊢ ⊤
  Falsum,     // ⊥ ⊢ φ
  AndElimL,   // φ∧ψ ⊢ φ
  AndElimR,   // φ∧ψ ⊢ ψ
  AndIntro,   // φ ⊢ ψ and φ ⊢ χ give φ ⊢ ψ∧χ
  OrIntro,    // φ_i ⊢ ⋁φ⃗
  OrElim,     // φ_i ⊢ ψ for all i gives ⋁φ⃗ ⊢ ψ
  ExistsFwd,  // φ ⊢_{x⃗,y} ψ gives (∃y)φ ⊢_x⃗ ψ   (y not free in ψ)
  ExistsBwd,  // (∃y)φ ⊢_x⃗ ψ gives φ ⊢_{x⃗,y} ψ   (converse adjunct)
  EqRefl,     // ⊤ ⊢ x=x
  EqSubst,    // (x=y)∧φ ⊢ φ[y/x]
  Frobenius,  // φ∧(∃y)ψ ⊢ (∃y)(φ∧ψ)
  Distrib,    // φ∧⋁ψ⃗ ⊢ ⋁(φ∧ψ_i)
};

const char* to_string(Rule rule);

// Sort-preserving injective renaming of an axiom's context variables.
using Renaming = std::vector<std::pair<Variable, Variable>>;

struct AxiomPayload { std::string name; Renaming renaming; };
struct IdentityPayload { Context ctx; Formula f; };
struct CutPayload {};
struct SubstPayload { Substitution s; };
struct TruthPayload { Context ctx; Formula f; };
struct FalsumPayload { Context ctx; Formula f; };
struct AndElimPayload { Context ctx; Formula left; Formula right; };
struct AndIntroPayload {};
struct OrIntroPayload { Context ctx; std::vector<Formula> disjuncts; std::size_t index; };
struct OrElimPayload { Context ctx; std::vector<Formula> disjuncts; Formula target; };
struct ExistsPayload { Variable v; };
struct EqReflPayload { Context ctx; Variable v; };
struct EqSubstPayload { Context ctx; Variable x; Variable y; Formula f; };
struct FrobeniusPayload { Context ctx; Formula f; Variable v; Formula g; };
struct DistribPayload { Context ctx; Formula f; std::vector<Formula> disjuncts; };

using RulePayload =
    std::variant<AxiomPayload, IdentityPayload, CutPayload, SubstPayload, TruthPayload,
                 FalsumPayload, AndElimPayload, AndIntroPayload, OrIntroPayload, OrElimPayload,
                 ExistsPayload, EqReflPayload, EqSubstPayload, FrobeniusPayload, DistribPayload>;

class Proof {
 public:
  Rule rule() const { return node_->rule; }
  const std::vector<Proof>& premises() const { return node_->children; }
  const Sequent& conclusion() const { return node_->conclusion; }
  const RulePayload& payload() const { return node_->payload; }

  // Bypasses all validation; exists for deserialization-style construction
  // and for checker tests that need deliberately broken trees.
  static Proof raw(Rule rule, RulePayload payload, std::vector<Proof> children,
                   Sequent conclusion);

 private:
  struct Node {
    Rule rule;
    RulePayload payload;
    std::vector<Proof> children;
    Sequent conclusion;
  };
  explicit Proof(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Rule constructors. Each throws ProofError{PreconditionViolated} when a
// side condition fails; otherwise the returned node carries the computed
// conclusion.
Proof axiom(const Theory& t, const std::string& name, const Renaming& renaming = {});
Proof identity(Context ctx, Formula f);
Proof cut(Proof left, Proof right);
Proof subst(Proof p, Substitution s);
Proof truth(Context ctx, Formula f);
Proof falsum(Context ctx, Formula f);
Proof and_elim_l(Context ctx, Formula left, Formula right);
Proof and_elim_r(Context ctx, Formula left, Formula right);
Proof and_intro(Proof left, Proof right);
Proof or_intro(Context ctx, std::vector<Formula> disjuncts, std::size_t index);
Proof or_elim(Context ctx, std::vector<Formula> disjuncts, Formula target,
              std::vector<Proof> cases);
Proof exists_adj_fwd(Proof p, Variable v);
Proof exists_adj_bwd(Proof p, Variable v);
Proof eq_refl(Context ctx, Variable v);
Proof eq_subst(Context ctx, Variable x, Variable y, Formula f);
Proof frobenius(Context ctx, Formula f, Variable v, Formula g);
Proof distributivity(Context ctx, Formula f, std::vector<Formula> disjuncts);

// Checks every node against its rule and the theory; returns the root
// conclusion. Throws ProofError with the path of the first failing node.
Sequent check_proof(const Theory& t, const Proof& p);

std::size_t proof_size(const Proof& p);   // node count
std::size_t proof_depth(const Proof& p);  // height; single node = 1

}  // namespace obs

#endif
