#include "hopfkit/hopf_truss.hpp"

namespace hopfkit {

HopfTrussData trivial_truss(const HopfAlgebraData& h) {
  return {h.obj,    h.eta,   h.mu, tensor(h.eps, h.obj.id()), h.eps, h.delta,
          h.lambda, compose(h.eta, h.eps)};
}

HopfTrussData identity_truss(const HopfAlgebraData& h) {
  return {h.obj, h.eta, h.mu, h.mu, h.eps, h.delta, h.lambda, h.obj.id()};
}

LinMap gamma(const HopfTrussData& t) {
  return compose(t.mu1, tensor(compose(t.lambda, t.sigma), t.mu2), tensor(t.delta, t.obj.id()));
}

CheckReport check_truss(const HopfTrussData& t) {
  CheckReport r;
  r.merge(check_hopf(t.h1()), "H1");
  r.merge(check_nonunital_bialgebra(t.h2()), "H2");
  r.merge(check_coalgebra_morphism(t.sigma, t.h1().coalgebra(), t.h1().coalgebra(), "sigma"));
  auto id = t.obj.id();
  r.add("truss:compatibility", "hopf-truss:(iii)",
        equal(compose(t.mu2, tensor(id, t.mu1)),
              compose(t.mu1, tensor(t.mu2, gamma(t)), tensor(id, t.obj.c(), id), tensor(t.delta, id, id))));
  return r;
}

CheckReport check_truss_derived(const HopfTrussData& t) {
  CheckReport r;
  auto id = t.obj.id();
  auto g = gamma(t);
  r.add("truss:mu2-expression", "hopf-truss:mu2-expression",
        equal(t.mu2, compose(t.mu1, tensor(t.sigma, g), tensor(t.delta, id))));
  r.add("truss:sigma-from-mu2", "hopf-truss:sigma", equal(t.sigma, compose(t.mu2, tensor(id, t.eta))));
  r.add("truss:sigma-cocycle", "hopf-truss:sigma-cocycle",
        equal(compose(t.sigma, t.mu2), compose(t.mu2, tensor(id, t.sigma))));
  ModuleActionData action{t.h2(), t.obj, g};
  r.merge(check_module_algebra(action, t.h1().algebra()), "gamma");
  return r;
}

CheckReport check_truss_morphism(const LinMap& f, const HopfTrussData& src, const HopfTrussData& dst) {
  CheckReport r;
  r.merge(check_multiplicative(f, src.mu1, dst.mu1, "f:mu1"));
  r.merge(check_unit_preserving(f, src.eta, dst.eta, "f"));
  r.merge(check_coalgebra_morphism(f, src.h1().coalgebra(), dst.h1().coalgebra(), "f"));
  r.add("f:antipode", "hopf-morphism", equal(compose(f, src.lambda), compose(dst.lambda, f)));
  r.merge(check_multiplicative(f, src.mu2, dst.mu2, "f:mu2"));
  r.add("f:sigma", "truss-morphism:sigma", equal(compose(dst.sigma, f), compose(f, src.sigma)));
  return r;
}

bool check_truss_star(const HopfTrussData& t) {
  return cocommutativity_class_check(gamma(t), t.h1().coalgebra());
}

CheckReport compare_trusses(const HopfTrussData& a, const HopfTrussData& b) {
  CheckReport r;
  r.add("eta", "field-equality", equal(a.eta, b.eta));
  r.add("mu1", "field-equality", equal(a.mu1, b.mu1));
  r.add("mu2", "field-equality", equal(a.mu2, b.mu2));
  r.add("eps", "field-equality", equal(a.eps, b.eps));
  r.add("delta", "field-equality", equal(a.delta, b.delta));
  r.add("lambda", "field-equality", equal(a.lambda, b.lambda));
  r.add("sigma", "field-equality", equal(a.sigma, b.sigma));
  r.add("braid", "field-equality", equal(a.obj.braid(), b.obj.braid()));
  return r;
}

}  // namespace hopfkit
