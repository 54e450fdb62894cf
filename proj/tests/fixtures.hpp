#pragma once

#include "hopfkit/examples.hpp"
#include "hopfkit/twisted_post_hopf.hpp"
#include "hopfkit/twisted_rota_baxter.hpp"

namespace fixtures {

using namespace hopfkit;

inline const FieldSpec Q = FieldSpec::rationals();

inline HopfAlgebraData s3(FieldSpec f = Q) { return group_algebra(symmetric_group3(), f); }
inline HopfAlgebraData c2(FieldSpec f = Q) { return group_algebra(cyclic_group(2), f); }
inline HopfAlgebraData h4(FieldSpec f = Q) { return sweedler_h4(f); }

/// Sign-retraction of S3 onto the transposition with index 1: even ↦ e, odd ↦ (1 2).
inline LinMap sign_retraction(FieldSpec f = Q) {
  auto g = symmetric_group3();
  return linearize(g, named_endo(g, "sign-retraction"), f);
}

/// The retraction onto a different transposition, for a second D_q.
inline LinMap other_retraction(FieldSpec f = Q) {
  auto g = symmetric_group3();
  return linearize(g, GroupEndo{{0, 5, 5, 0, 0, 5}}, f);
}

inline HopfTrussData d_q(FieldSpec f = Q) { return truss_from_idempotent(s3(f), sign_retraction(f)); }

/// (H, φ^ad∘(λ⊗id), id): on group elements m(x⊗y) = x⁻¹yx.
inline WTPHData conjugation_wtph(const HopfAlgebraData& h) {
  return {h, compose(adjoint_action(h).phi, tensor(h.lambda, h.obj.id())), h.obj.id()};
}

/// (H, ε⊗id, η∘ε).
inline WTPHData collapsed_wtph(const HopfAlgebraData& h) {
  return {h, tensor(h.eps, h.obj.id()), compose(h.eta, h.eps)};
}

/// The counit as a map into the unit object on one factor, as a row vector.
inline LinMap eta_eps(const HopfAlgebraData& h) { return compose(h.eta, h.eps); }

/// Conjugation by the transposition with index 1, a Hopf automorphism of ℚ[S3].
inline LinMap s3_conjugation(FieldSpec f = Q) {
  auto g = symmetric_group3();
  GroupEndo conj;
  for (std::size_t x = 0; x < 6; ++x) conj.images.push_back(g.mul(g.mul(1, x), 1));
  return linearize(g, conj, f);
}

/// Moves B along an invertible bialgebra map a: B → B′, so T′ = a∘T and φ′ = φ∘(a⁻¹⊗id).
inline WTRBData transport(const WTRBData& w, const LinMap& a, const LinMap& a_inv) {
  auto b = w.B;
  b.mu = compose(a, w.B.mu, tensor(a_inv, a_inv));
  b.eps = compose(w.B.eps, a_inv);
  b.delta = compose(tensor(a, a), w.B.delta, a_inv);
  if (b.eta) b.eta = compose(a, *w.B.eta);
  return {w.H, b, compose(w.phi, tensor(a_inv, w.H.obj.id())), compose(a, w.T), w.Psi};
}

}  // namespace fixtures
