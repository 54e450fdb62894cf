#pragma once

#include <optional>

#include "hopfkit/hopf_truss.hpp"

namespace hopfkit {

/// A Hopf algebra H with an action-like product m: H⊗H → H and a cocycle Φ.
struct WTPHData {
  HopfAlgebraData H;
  LinMap m;
  LinMap Phi;
};

/// Φ = i∘p with p∘i = id on the image object of rank r.
struct IdempotentSplitting {
  LinMap p;
  LinMap i;
  std::size_t r;
};

/// (H, ε⊗id, id).
WTPHData trivial_wtph(const HopfAlgebraData& h);

/// Axioms (i)–(v) and the derived identity m∘(id⊗η) = ε⊗η.
CheckReport check_wtph(const WTPHData& w);

/// α = (id⊗m)∘(c⊗id)∘(id⊗a): H → H*⊗H. Needs the flip braiding.
LinMap alpha_map(const WTPHData& w);

/// Convolution inverse of α in Hom(H, H*⊗H), if it exists.
std::optional<LinMap> beta_map(const WTPHData& w);

/// Axioms (vi)–(vii) plus m = (b⊗id)∘(id⊗α)∘c and m∘(η⊗id) = id.
/// Throws Error(non_symmetric_braiding) for non-flip braids.
CheckReport check_twisted(const WTPHData& w);

/// μ̄ = μ∘(Φ⊗m)∘(δ⊗id).
LinMap bar_mu(const WTPHData& w);

/// (H, μ̄, Φ); Error(class_condition_failed) unless m satisfies the class condition.
HopfTrussData functor_F(const WTPHData& w);
/// (H₁, Γ, σ); Error(class_condition_failed) unless Γ satisfies the class condition.
WTPHData functor_G(const HopfTrussData& t);

CheckReport compare_wtph(const WTPHData& a, const WTPHData& b);
/// G(F(w)) = w field by field.
CheckReport roundtrip_check(const WTPHData& w);
/// F(G(t)) = t field by field.
CheckReport roundtrip_check(const HopfTrussData& t);

/// Φ∘Φ = Φ and m = m∘(Φ⊗id). Error(precondition_not_met) when Φ∘η ≠ η.
CheckReport lemma_suite(const WTPHData& w);

/// S = (b⊗id)∘((λ∘Φ)⊗β)∘c∘δ. Error(beta_unavailable) when α is not invertible.
LinMap s_map(const WTPHData& w);

/// λ∘Φ = m∘(id⊗S)∘δ, id ∗̄ S = ε⊗η, α̃ a coalgebra morphism, and — when β̃ is
/// a coalgebra morphism — S a coalgebra morphism, S∘S = Φ and Φ∘S∘S∘Φ = Φ.
/// Error(precondition_not_met) for non-cocommutative H.
CheckReport s_property_suite(const WTPHData& w);

/// Whether β̃ = (b⊗id)∘(id⊗β) is a coalgebra morphism H⊗H → H.
bool beta_tilde_is_coalgebra_morphism(const WTPHData& w);

struct PhiIdEquivalence {
  bool phi_is_id;
  bool s_bar_id_is_unit;  // S ∗̄ id = ε⊗η
  CheckReport report;
};

/// Evaluates Φ = id and S ∗̄ id = ε⊗η and checks that they agree.
/// Error(precondition_not_met) unless H is cocommutative and β̃ is a coalgebra morphism.
PhiIdEquivalence phi_id_equivalence(const WTPHData& w);
CheckReport phi_id_equivalence_check(const WTPHData& w);

/// Rank factorisation through the reduced row echelon form. Error(not_idempotent).
IdempotentSplitting split_idempotent(const LinMap& Phi);

/// μ_I = p∘μ̄∘(i⊗i), η_I = p∘η, δ_I = (p⊗p)∘δ∘i, ε_I = ε∘i.
BialgebraData induced_bialgebra(const WTPHData& w, const IdempotentSplitting& s);
/// induced_bialgebra with antipode p∘S∘i.
HopfAlgebraData induced_hopf(const WTPHData& w, const IdempotentSplitting& s);

/// H⊗H with δ = (id⊗c⊗id)∘(δ⊗δ) and ε⊗ε.
CoalgebraData tensor_coalgebra(const HopfAlgebraData& h);

}  // namespace hopfkit
