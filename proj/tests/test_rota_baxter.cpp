#include "doctest.h"
#include "fixtures.hpp"
#include "hopfkit/error.hpp"

using namespace hopfkit;
using namespace fixtures;

namespace {

/// H = ℚ[S3], B = ℚ[C2], T = sign, φ = ε_B⊗id, Ψ given.
WTRBData sign_operator(const LinMap& psi) {
  auto h = s3();
  auto b = c2();
  std::vector<std::vector<std::int64_t>> rows(2, std::vector<std::int64_t>(6, 0));
  for (std::size_t x : {0u, 3u, 4u}) rows[0][x] = 1;
  for (std::size_t x : {1u, 2u, 5u}) rows[1][x] = 1;
  auto t = LinMap::from_ints(Q, {6}, {2}, rows);
  return {h, b.nonunital(), tensor(b.eps, h.obj.id()), t, psi};
}

}  // namespace

TEST_CASE("frak m on the basic operators") {
  auto h = s3();
  auto eps_id = tensor(h.eps, h.obj.id());
  CHECK(equal(frak_m(sign_operator(h.obj.id())), eps_id).equal);
  CHECK(equal(frak_m(functor_Lambda(d_q())), eps_id).equal);
  CHECK(equal(frak_m(functor_Lambda(identity_truss(h))), eps_id).equal);
}

TEST_CASE("check_wtrb") {
  CHECK(check_wtrb(functor_Lambda(trivial_truss(s3()))).passed());
  CHECK(check_wtrb(functor_Lambda(d_q())).passed());
  auto broken = functor_Lambda(d_q());
  broken.Psi = broken.H.obj.id();
  auto r = check_wtrb(broken);
  CHECK_FALSE(r.passed());
  CHECK((!r.holds("wtrb:(i)") || !r.holds("wtrb:(ii)")));
  CHECK(check_wtrb(sign_operator(s3().obj.id())).passed());
  CHECK(check_wtrb(sign_operator(sign_retraction())).passed());
}

TEST_CASE("check_trb") {
  auto w = functor_Lambda(identity_truss(s3()));
  REQUIRE(w.B.eta.has_value());
  CHECK(check_trb(w).passed());
  try {
    check_trb(functor_Lambda(d_q()));
    FAIL("expected PreconditionNotMet");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::precondition_not_met);
  }
  auto perturbed = w;
  perturbed.Psi = eta_eps(w.H);
  CHECK(check_trb(perturbed).holds("trb:(iii)"));
  // The twisted product collapses to ε⊗id, so T = id can no longer be multiplicative.
  CHECK_FALSE(check_wtrb(perturbed).holds("wtrb:(i)"));
  CHECK(check_wtrb(perturbed).holds("wtrb:(ii)"));

  auto sign = sign_operator(s3().obj.id());
  sign.B.eta = c2().eta;
  CHECK(check_trb(sign).passed());
}

TEST_CASE("tilde mu") {
  auto h = s3();
  auto triv = functor_Lambda(trivial_truss(h));
  CHECK(equal(tilde_mu(triv), tensor(h.eps, h.obj.id())).equal);
  auto dq = functor_Lambda(d_q());
  CHECK(equal(tilde_mu(dq), d_q().mu2).equal);
  CHECK(equal(tilde_mu(functor_Lambda(identity_truss(h))), h.mu).equal);
  CHECK(tilde_mu_check(dq).passed());
  CHECK(tilde_mu_check(triv).passed());
}

TEST_CASE("rb star condition") {
  CHECK(check_rb_star(functor_Lambda(d_q())));
  auto hh = h4();
  WTRBData trivial{hh, hh.nonunital(), tensor(hh.eps, hh.obj.id()), hh.obj.id(), hh.obj.id()};
  CHECK(check_rb_star(trivial));
  WTRBData product{hh, hh.nonunital(), hh.mu, hh.obj.id(), hh.obj.id()};
  CHECK_FALSE(check_rb_star(product));
  CHECK_THROWS_AS(functor_Omega(product), Error);
}

TEST_CASE("functors Omega and Lambda") {
  auto d = d_q();
  CHECK(compare_trusses(functor_Omega(functor_Lambda(d)), d).passed());
  auto triv = trivial_truss(s3());
  CHECK(compare_trusses(functor_Omega(functor_Lambda(triv)), triv).passed());

  auto lam = functor_Lambda(d);
  CHECK(equal(lam.T, d.obj.id()).equal);
  CHECK(equal(lam.phi, tensor(d.eps, d.obj.id())).equal);
  CHECK(equal(lam.Psi, d.sigma).equal);

  for (const auto& psi : {s3().obj.id(), sign_retraction()}) {
    auto w = sign_operator(psi);
    auto omega = functor_Omega(w);
    CHECK(check_truss(omega).passed());
    CHECK(equal(gamma(omega), frak_m(w)).equal);
  }
  CHECK(compare_trusses(functor_Omega(sign_operator(sign_retraction())), d).passed());
}

TEST_CASE("equivalence") {
  CHECK(equivalence_check(d_q()).passed());
  CHECK(equivalence_check(functor_Lambda(d_q())).passed());
  try {
    equivalence_check(sign_operator(s3().obj.id()));
    FAIL("expected TNotInvertible");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::t_not_invertible);
  }
}

TEST_CASE("equivalence with a non-identity invertible T") {
  auto a = s3_conjugation();
  auto w = transport(functor_Lambda(d_q()), a, a);
  CHECK(check_wtrb(w).passed());
  CHECK_FALSE(equal(w.T, w.H.obj.id()).equal);
  CHECK(equivalence_check(w).passed());
  CHECK(compare_trusses(functor_Omega(w), d_q()).passed());
  CHECK_FALSE(compare_wtrb(w, functor_Lambda(d_q())).passed());
}

TEST_CASE("adjunction") {
  auto w = functor_Lambda(d_q());
  auto t = functor_Omega(w);
  auto r = adjunction_check(t, w, t.obj.id(), RBMorphism{t.obj.id(), t.obj.id()});
  CHECK(r.passed());

  // Trivial truss on C2 into D_q through the unit.
  auto c = trivial_truss(c2());
  auto f = compose(s3().eta, c2().eps);
  CHECK(adjunction_check(c, w, f).passed());

  // q is an endomorphism of D_q.
  auto q = sign_retraction();
  CHECK(adjunction_check(d_q(), w, q, RBMorphism{q, q}).passed());

  auto lambda = s3().lambda;
  try {
    adjunction_check(d_q(), w, lambda);
    FAIL("expected NotATrussMorphism");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_a_truss_morphism);
  }
  try {
    adjunction_check(d_q(), w, q, RBMorphism{q, s3().obj.id()});
    FAIL("expected NotAnRBMorphism");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_an_rb_morphism);
  }
}

TEST_CASE("truss from idempotent") {
  auto h = s3();
  CHECK(compare_trusses(truss_from_idempotent(h, h.obj.id()), identity_truss(h)).passed());
  CHECK(compare_trusses(truss_from_idempotent(h, eta_eps(h)), trivial_truss(h)).passed());
  auto d = d_q();
  CHECK(check_truss(d).passed());
  CHECK(equal(gamma(d), tensor(h.eps, h.obj.id())).equal);
  // A non-idempotent automorphism (conjugation by a transposition) breaks the condition.
  auto g = symmetric_group3();
  GroupEndo conj;
  for (std::size_t x = 0; x < 6; ++x) conj.images.push_back(g.mul(g.mul(1, x), 1));
  REQUIRE(is_homomorphism(g, conj));
  try {
    truss_from_idempotent(h, linearize(g, conj, Q));
    FAIL("expected ConditionBFailed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::condition_b_failed);
  }
}

TEST_CASE("phi-twisted operators") {
  auto h = s3();
  auto q = sign_retraction();
  auto ee = eta_eps(h);
  CHECK(check_phi_twisted(h, ee, q));
  CHECK(check_phi_twisted(h, h.obj.id(), ee));
  CHECK(check_phi_twisted(h, q, ee));
  CHECK_FALSE(check_phi_twisted(c2(), c2().obj.id(), c2().obj.id()));
  CHECK(check_phi_twisted(h, ee, h.obj.id()));

  CHECK(compare_trusses(truss_from_twisted_operator(h, ee, q), d_q()).passed());
  CHECK(compare_trusses(truss_from_twisted_operator(h, ee, h.obj.id()), identity_truss(h)).passed());
  CHECK(compare_trusses(truss_from_twisted_operator(h, h.obj.id(), ee), trivial_truss(h)).passed());

  try {
    truss_from_twisted_operator(h4(), h4().obj.id(), h4().obj.id());
    FAIL("expected NotCocommutative");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_cocommutative);
  }
  try {
    truss_from_twisted_operator(h, h.obj.id(), h.obj.id());
    FAIL("expected NotPhiTwisted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_phi_twisted);
  }
}

TEST_CASE("every set-level φ-twisted operator on S3 yields a checked truss") {
  // Oracle: Υ(x)Υ(y) = Υ(Υ(x)·y·φ(Υ(x))⁻¹) over all maps S3 → S3.
  auto g = symmetric_group3();
  auto h = s3();
  std::size_t found = 0;
  for (const auto& phi : idempotent_endos(g)) {
    std::vector<std::size_t> u(6, 0);
    while (true) {
      bool ok = true;
      for (std::size_t x = 0; x < 6 && ok; ++x)
        for (std::size_t y = 0; y < 6 && ok; ++y)
          ok = g.mul(u[x], u[y]) == u[g.mul(g.mul(u[x], y), g.inverse(phi.images[u[x]]))];
      if (ok) {
        ++found;
        auto upsilon = linearize(g, GroupEndo{u}, Q);
        auto phi_lin = linearize(g, phi, Q);
        CHECK(check_phi_twisted(h, phi_lin, upsilon));
        auto t = truss_from_twisted_operator(h, phi_lin, upsilon);
        CHECK(check_truss(t).passed());
        CHECK(check_truss_derived(t).passed());
        auto expected = compose(adjoint_action(h).phi, tensor(compose(phi_lin, upsilon), h.obj.id()));
        CHECK(equal(gamma(t), expected).equal);
        CHECK(equal(functor_Lambda(t).phi, expected).equal);
      }
      std::size_t k = 0;
      while (k < 6 && ++u[k] == 6) u[k++] = 0;
      if (k == 6) break;
    }
  }
  CHECK(found > 5);
}
