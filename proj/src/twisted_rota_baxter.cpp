#include "hopfkit/twisted_rota_baxter.hpp"

#include "hopfkit/error.hpp"
#include "hopfkit/linalg.hpp"

namespace hopfkit {

LinMap frak_m(const WTRBData& w) { return compose(w.phi, tensor(w.T, w.H.obj.id())); }

LinMap tilde_mu(const WTRBData& w) {
  return compose(w.H.mu, tensor(w.Psi, frak_m(w)), tensor(w.H.delta, w.H.obj.id()));
}

CheckReport check_wtrb(const WTRBData& w) {
  const auto& h = w.H;
  auto id = h.obj.id();
  auto m = frak_m(w);
  CheckReport r;
  ModuleActionData action{w.B, h.obj, w.phi};
  r.merge(check_module_algebra(action, h.algebra()), "phi");
  r.merge(check_module_coalgebra(action, h.coalgebra()), "phi");
  r.merge(check_coalgebra_morphism(w.T, h.coalgebra(), w.B.coalgebra(), "T"));
  r.merge(check_coalgebra_morphism(w.Psi, h.coalgebra(), h.coalgebra(), "Psi"));
  auto twisted = compose(h.mu, tensor(w.Psi, m), tensor(h.delta, id));
  r.add("wtrb:(i)", "wtrb:(i)", equal(compose(w.B.mu, tensor(w.T, w.T)), compose(w.T, twisted)));
  r.add("wtrb:(ii)", "wtrb:(ii)",
        equal(compose(w.Psi, twisted), compose(h.mu, tensor(w.Psi, m), tensor(h.delta, w.Psi))));
  r.add("wtrb:m-right-unit", "wtrb:m-unit", equal(compose(m, tensor(id, h.eta)), tensor(h.eps, h.eta)));
  r.add("wtrb:m-multiplicative", "wtrb:m-multiplicative",
        equal(compose(m, tensor(id, h.mu)),
              compose(h.mu, tensor(m, m), tensor(id, h.obj.c(), id), tensor(h.delta, id, id))));
  r.add("wtrb:m-counit", "wtrb:m-coalgebra", equal(compose(h.eps, m), tensor(h.eps, h.eps)));
  r.add("wtrb:m-coproduct", "wtrb:m-coalgebra",
        equal(compose(h.delta, m),
              compose(tensor(m, m), tensor(id, h.obj.c(), id), tensor(h.delta, h.delta))));
  r.add("wtrb:m-tilde-mu", "wtrb:m-tilde-mu",
        equal(compose(m, tensor(twisted, id)), compose(m, tensor(id, m))));
  return r;
}

CheckReport check_trb(const WTRBData& w) {
  if (!w.B.eta) throw Error(ErrorKind::precondition_not_met, "B carries no unit");
  const auto& h = w.H;
  auto id = h.obj.id();
  CheckReport r;
  r.merge(check_bialgebra({w.B.obj, *w.B.eta, w.B.mu, w.B.eps, w.B.delta}), "B");
  r.add("trb:unital-module", "module", equal(compose(w.phi, tensor(*w.B.eta, id)), id));
  r.add("trb:(iii)", "wtrb:(iii)", equal(compose(w.Psi, h.eta), h.eta));
  r.add("trb:T-unit", "wtrb:T-unit", equal(compose(w.T, h.eta), *w.B.eta));
  r.add("trb:m-left-unit", "wtrb:m-left-unit", equal(compose(frak_m(w), tensor(h.eta, id)), id));
  return r;
}

CheckReport tilde_mu_check(const WTRBData& w) {
  const auto& h = w.H;
  auto id = h.obj.id();
  auto mt = tilde_mu(w);
  CheckReport r;
  r.add("tilde:associativity", "tilde-mu", equal(compose(mt, tensor(mt, id)), compose(mt, tensor(id, mt))));
  if (check_rb_star(w)) {
    r.add("tilde:counit", "tilde-mu", equal(compose(h.eps, mt), tensor(h.eps, h.eps)));
    r.add("tilde:coproduct", "tilde-mu",
          equal(compose(h.delta, mt),
                compose(tensor(mt, mt), tensor(id, h.obj.c(), id), tensor(h.delta, h.delta))));
  } else {
    r.skip("tilde:counit", "tilde-mu", "class condition fails for 𝔪");
    r.skip("tilde:coproduct", "tilde-mu", "class condition fails for 𝔪");
  }
  r.add("tilde:right-unit", "tilde-mu:unit", equal(compose(mt, tensor(id, h.eta)), w.Psi));
  if (equal(compose(w.Psi, h.eta), h.eta).equal) {
    r.add("tilde:left-unit", "tilde-mu:unit", equal(compose(mt, tensor(h.eta, id)), id));
  } else {
    r.skip("tilde:left-unit", "tilde-mu:unit", "Ψ∘η ≠ η");
  }
  return r;
}

bool check_rb_star(const WTRBData& w) { return cocommutativity_class_check(frak_m(w), w.H.coalgebra()); }

HopfTrussData functor_Omega(const WTRBData& w) {
  auto cond = class_condition(frak_m(w), w.H.coalgebra());
  if (!cond.equal) {
    throw Error(ErrorKind::class_condition_failed,
                "𝔪 does not satisfy the class condition: " + cond.witness->to_string());
  }
  const auto& h = w.H;
  return {h.obj, h.eta, h.mu, tilde_mu(w), h.eps, h.delta, h.lambda, w.Psi};
}

WTRBData functor_Lambda(const HopfTrussData& t) {
  auto g = gamma(t);
  auto cond = class_condition(g, t.h1().coalgebra());
  if (!cond.equal) {
    throw Error(ErrorKind::class_condition_failed,
                "Γ does not satisfy the class condition: " + cond.witness->to_string());
  }
  auto b = t.h2();
  auto id = t.obj.id();
  if (equal(compose(t.mu2, tensor(t.eta, id)), id).equal && equal(compose(t.mu2, tensor(id, t.eta)), id).equal) {
    b.eta = t.eta;
  }
  return {t.h1(), b, g, id, t.sigma};
}

CheckReport check_rb_morphism(const RBMorphism& mor, const WTRBData& src, const WTRBData& dst) {
  const auto& [f, g] = mor;
  CheckReport r;
  r.merge(check_multiplicative(f, src.H.mu, dst.H.mu, "f"));
  r.merge(check_unit_preserving(f, src.H.eta, dst.H.eta, "f"));
  r.merge(check_coalgebra_morphism(f, src.H.coalgebra(), dst.H.coalgebra(), "f"));
  r.merge(check_multiplicative(g, src.B.mu, dst.B.mu, "g"));
  r.merge(check_coalgebra_morphism(g, src.B.coalgebra(), dst.B.coalgebra(), "g"));
  r.add("rb-morphism:T", "rb-morphism:T", equal(compose(dst.T, f), compose(g, src.T)));
  r.add("rb-morphism:Psi", "rb-morphism:Psi", equal(compose(f, src.Psi), compose(dst.Psi, f)));
  r.add("rb-morphism:phi", "rb-morphism:phi", equal(compose(f, src.phi), compose(dst.phi, tensor(g, f))));
  r.add("rb-morphism:frak-m", "rb-morphism:frak-m",
        equal(compose(f, frak_m(src)), compose(frak_m(dst), tensor(f, f))));
  return r;
}

RBMorphism adjunction_sigma(const LinMap& f, const WTRBData& w) { return {f, compose(w.T, f)}; }

LinMap adjunction_theta(const RBMorphism& m) { return m.f; }

CheckReport adjunction_check(const HopfTrussData& t, const WTRBData& w, const LinMap& f,
                             const std::optional<RBMorphism>& xy) {
  auto omega = functor_Omega(w);
  auto lambda = functor_Lambda(t);
  auto truss_mor = check_truss_morphism(f, t, omega);
  if (!truss_mor.passed()) {
    throw Error(ErrorKind::not_a_truss_morphism, "f is not a truss morphism t → Ω(w)");
  }
  CheckReport r;
  auto sigma = adjunction_sigma(f, w);
  r.merge(check_rb_morphism(sigma, lambda, w), "sigma(f)");
  r.add("theta-sigma", "adjunction:theta-sigma", equal(adjunction_theta(sigma), f));
  if (xy) {
    if (!check_rb_morphism(*xy, lambda, w).passed()) {
      throw Error(ErrorKind::not_an_rb_morphism, "(x, y) is not an RB morphism Λ(t) → w");
    }
    auto x = adjunction_theta(*xy);
    r.merge(check_truss_morphism(x, t, omega), "theta(x,y)");
    auto back = adjunction_sigma(x, w);
    r.add("sigma-theta:f", "adjunction:sigma-theta", equal(back.f, xy->f));
    r.add("sigma-theta:g", "adjunction:sigma-theta", equal(back.g, xy->g));
  }
  return r;
}

CheckReport equivalence_check(const HopfTrussData& t) {
  CheckReport r;
  r.merge(compare_trusses(functor_Omega(functor_Lambda(t)), t), "Omega(Lambda(t))");
  return r;
}

CheckReport equivalence_check(const WTRBData& w) {
  auto t_inv = linalg::inverse(w.T);
  if (!t_inv) throw Error(ErrorKind::t_not_invertible, "T is not invertible");
  auto image = functor_Lambda(functor_Omega(w));
  CheckReport r;
  r.merge(check_rb_morphism({w.H.obj.id(), w.T}, image, w), "(id,T)");
  r.merge(check_rb_morphism({w.H.obj.id(), *t_inv}, w, image), "(id,T^-1)");
  r.add("mu-B-transport", "equivalence:mu-B",
        equal(w.B.mu, compose(w.T, tilde_mu(w), tensor(*t_inv, *t_inv))));
  return r;
}

CheckReport compare_wtrb(const WTRBData& a, const WTRBData& b) {
  CheckReport r;
  r.add("H.eta", "field-equality", equal(a.H.eta, b.H.eta));
  r.add("H.mu", "field-equality", equal(a.H.mu, b.H.mu));
  r.add("H.eps", "field-equality", equal(a.H.eps, b.H.eps));
  r.add("H.delta", "field-equality", equal(a.H.delta, b.H.delta));
  r.add("H.lambda", "field-equality", equal(a.H.lambda, b.H.lambda));
  r.add("B.mu", "field-equality", equal(a.B.mu, b.B.mu));
  r.add("B.eps", "field-equality", equal(a.B.eps, b.B.eps));
  r.add("B.delta", "field-equality", equal(a.B.delta, b.B.delta));
  r.add("B.eta", "field-equality",
        a.B.eta.has_value() == b.B.eta.has_value() && (!a.B.eta || equal(*a.B.eta, *b.B.eta).equal));
  r.add("phi", "field-equality", equal(a.phi, b.phi));
  r.add("T", "field-equality", equal(a.T, b.T));
  r.add("Psi", "field-equality", equal(a.Psi, b.Psi));
  return r;
}

HopfTrussData truss_from_idempotent(const HopfAlgebraData& d, const LinMap& q) {
  auto id = d.obj.id();
  if (!check_coalgebra_morphism(q, d.coalgebra(), d.coalgebra(), "q").passed()) {
    throw Error(ErrorKind::condition_b_failed, "q is not a coalgebra morphism");
  }
  auto cond = equal(compose(d.mu, tensor(q, q)), compose(q, d.mu, tensor(q, id)));
  if (!cond.equal) {
    throw Error(ErrorKind::condition_b_failed, "μ∘(q⊗q) ≠ q∘μ∘(q⊗id): " + cond.witness->to_string());
  }
  return {d.obj, d.eta, d.mu, compose(d.mu, tensor(q, id)), d.eps, d.delta, d.lambda, q};
}

namespace {

LinMap upsilon_product(const HopfAlgebraData& d, const LinMap& phi_endo, const LinMap& upsilon) {
  auto id = d.obj.id();
  return compose(d.mu, tensor(compose(d.mu, tensor(upsilon, id)), compose(d.lambda, phi_endo, upsilon)),
                 tensor(id, d.obj.c()), tensor(d.delta, id));
}

}  // namespace

bool check_phi_twisted(const HopfAlgebraData& d, const LinMap& phi_endo, const LinMap& upsilon) {
  auto co = d.coalgebra();
  if (!check_coalgebra_morphism(upsilon, co, co, "upsilon").passed()) return false;
  CheckReport endo = check_coalgebra_morphism(phi_endo, co, co, "phi");
  endo.merge(check_multiplicative(phi_endo, d.mu, d.mu, "phi"));
  endo.merge(check_unit_preserving(phi_endo, d.eta, d.eta, "phi"));
  if (!endo.passed()) return false;
  return equal(compose(d.mu, tensor(upsilon, upsilon)), compose(upsilon, upsilon_product(d, phi_endo, upsilon)))
      .equal;
}

HopfTrussData truss_from_twisted_operator(const HopfAlgebraData& d, const LinMap& phi_endo,
                                          const LinMap& upsilon) {
  if (!check_cocommutative(d.coalgebra())) {
    throw Error(ErrorKind::not_cocommutative, "D must be cocommutative");
  }
  if (!check_phi_twisted(d, phi_endo, upsilon)) {
    throw Error(ErrorKind::not_phi_twisted, "Υ is not a φ-twisted operator");
  }
  auto sigma = convolution(upsilon, compose(d.lambda, phi_endo, upsilon), d.coalgebra(), d.algebra());
  return {d.obj, d.eta, d.mu, upsilon_product(d, phi_endo, upsilon), d.eps, d.delta, d.lambda, sigma};
}

}  // namespace hopfkit
