#pragma once

#include "hopfkit/structures.hpp"

namespace hopfkit {

/// A Hopf algebra H₁ = (η, μ¹, ε, δ, λ), a second product μ² with the same
/// coalgebra, and a cocycle σ. Constructing one never validates it.
struct HopfTrussData {
  BraidedObject obj;
  LinMap eta;
  LinMap mu1;
  LinMap mu2;
  LinMap eps;
  LinMap delta;
  LinMap lambda;
  LinMap sigma;

  HopfAlgebraData h1() const { return {obj, eta, mu1, eps, delta, lambda}; }
  NonUnitalBialgebraData h2() const { return {obj, mu2, eps, delta, std::nullopt}; }
};

/// (H, μ² = ε⊗id, σ = η∘ε).
HopfTrussData trivial_truss(const HopfAlgebraData& h);
/// (H, μ² = μ, σ = id).
HopfTrussData identity_truss(const HopfAlgebraData& h);

/// Γ = μ¹∘((λ∘σ)⊗μ²)∘(δ⊗id).
LinMap gamma(const HopfTrussData& t);

/// Hopf laws of H₁, non-unital bialgebra laws of H₂, σ a coalgebra morphism,
/// and μ²∘(id⊗μ¹) = μ¹∘(μ²⊗Γ)∘(id⊗c⊗id)∘(δ⊗id⊗id).
CheckReport check_truss(const HopfTrussData& t);

/// μ² = μ¹∘(σ⊗Γ)∘(δ⊗id), σ = μ²∘(id⊗η), σ∘μ² = μ²∘(id⊗σ), and (H₁, Γ) a
/// non-unital H₂-module algebra.
CheckReport check_truss_derived(const HopfTrussData& t);

/// Hopf morphism H₁ → B₁, non-unital bialgebra morphism H₂ → B₂, and σ_B∘f = f∘σ_H.
CheckReport check_truss_morphism(const LinMap& f, const HopfTrussData& src, const HopfTrussData& dst);

/// Class condition for Γ; membership in the ★ subcategory.
bool check_truss_star(const HopfTrussData& t);

/// Field-by-field equality.
CheckReport compare_trusses(const HopfTrussData& a, const HopfTrussData& b);

}  // namespace hopfkit
