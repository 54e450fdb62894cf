#pragma once

#include <optional>

#include "hopfkit/hopf_truss.hpp"

namespace hopfkit {

/// A coalgebra morphism T: H → B into a non-unital bialgebra B, an action
/// φ: B⊗H → H and a cocycle Ψ on H.
struct WTRBData {
  HopfAlgebraData H;
  NonUnitalBialgebraData B;
  LinMap phi;
  LinMap T;
  LinMap Psi;
};

/// A pair (f: H → H′, g: B → B′).
struct RBMorphism {
  LinMap f;
  LinMap g;
};

/// 𝔪 = φ∘(T⊗id).
LinMap frak_m(const WTRBData& w);

/// Module algebra-coalgebra laws for φ, T and Ψ coalgebra morphisms, axioms
/// (i)–(ii), and the derived identities for 𝔪.
CheckReport check_wtrb(const WTRBData& w);

/// Ψ∘η = η, T∘η = η_B and 𝔪∘(η⊗id) = id. Error(precondition_not_met) when B has no unit.
CheckReport check_trb(const WTRBData& w);

/// μ̃ = μ∘(Ψ⊗𝔪)∘(δ⊗id).
LinMap tilde_mu(const WTRBData& w);
/// Associativity, coalgebra-morphism property (under the class condition) and
/// the unit equations μ̃∘(id⊗η) = Ψ, μ̃∘(η⊗id) = id.
CheckReport tilde_mu_check(const WTRBData& w);

/// Class condition for 𝔪.
bool check_rb_star(const WTRBData& w);

/// (H, μ̃, Ψ); Error(class_condition_failed) unless 𝔪 satisfies the class condition.
HopfTrussData functor_Omega(const WTRBData& w);
/// (T = id, B = H₂, φ = Γ, Ψ = σ); B gets η as unit when η is a two-sided unit for μ².
/// Error(class_condition_failed) unless Γ satisfies the class condition.
WTRBData functor_Lambda(const HopfTrussData& t);

/// f a Hopf morphism, g a non-unital bialgebra morphism, T′∘f = g∘T,
/// f∘Ψ = Ψ′∘f, f∘φ = φ′∘(g⊗f), and the consequence f∘𝔪 = 𝔪′∘(f⊗f).
CheckReport check_rb_morphism(const RBMorphism& m, const WTRBData& src, const WTRBData& dst);

/// Σ(f) = (f, T∘f).
RBMorphism adjunction_sigma(const LinMap& f, const WTRBData& w);
/// Θ((x, y)) = x.
LinMap adjunction_theta(const RBMorphism& m);

/// For a truss morphism f: t → Ω(w): Σ(f) is an RB morphism Λ(t) → w and
/// Θ(Σ(f)) = f. For a supplied RB morphism (x, y): Λ(t) → w: Θ gives a truss
/// morphism and Σ(Θ(x, y)) = (x, y).
/// Errors: not_a_truss_morphism, not_an_rb_morphism.
CheckReport adjunction_check(const HopfTrussData& t, const WTRBData& w, const LinMap& f,
                             const std::optional<RBMorphism>& xy = std::nullopt);

/// Ω(Λ(t)) = t field by field.
CheckReport equivalence_check(const HopfTrussData& t);
/// Λ(Ω(w)) ≅ w through (id, T). Error(t_not_invertible).
CheckReport equivalence_check(const WTRBData& w);

CheckReport compare_wtrb(const WTRBData& a, const WTRBData& b);

/// D_q = (D, μ∘(q⊗id), q). Error(condition_b_failed) unless q is a coalgebra
/// morphism with μ∘(q⊗q) = q∘μ∘(q⊗id).
HopfTrussData truss_from_idempotent(const HopfAlgebraData& d, const LinMap& q);

/// Υ and φ coalgebra morphisms, φ a Hopf endomorphism, and
/// μ∘(Υ⊗Υ) = Υ∘μ∘((μ∘(Υ⊗id))⊗(λ∘φ∘Υ))∘(id⊗c)∘(δ⊗id).
bool check_phi_twisted(const HopfAlgebraData& d, const LinMap& phi_endo, const LinMap& upsilon);

/// D_Υ = (D, μ_Υ, Υ ∗ (λ∘φ∘Υ)) with μ_Υ = μ∘((μ∘(Υ⊗id))⊗(λ∘φ∘Υ))∘(id⊗c)∘(δ⊗id).
/// Errors: not_cocommutative, not_phi_twisted.
HopfTrussData truss_from_twisted_operator(const HopfAlgebraData& d, const LinMap& phi_endo,
                                          const LinMap& upsilon);

}  // namespace hopfkit
