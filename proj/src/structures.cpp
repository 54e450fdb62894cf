#include "hopfkit/structures.hpp"

#include <sstream>

#include "hopfkit/error.hpp"
#include "hopfkit/linalg.hpp"

namespace hopfkit {

namespace {

// Factor permutation exchanging a block of j copies of `unit` with a block of k copies.
LinMap block_swap(FieldSpec field, const TensorShape& left, const TensorShape& right) {
  std::vector<std::size_t> perm;
  for (std::size_t i = 0; i < right.rank(); ++i) perm.push_back(left.rank() + i);
  for (std::size_t i = 0; i < left.rank(); ++i) perm.push_back(i);
  return permute_factors(field, left + right, perm);
}

std::string shape_pair(const LinMap& f) { return f.dom().to_string() + "->" + f.cod().to_string(); }

}  // namespace

DualityData dual_pair(FieldSpec field, std::size_t dim) {
  std::vector<std::vector<LinMap::Entry>> a_cols(1);
  std::vector<std::vector<LinMap::Entry>> b_cols(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    auto idx = static_cast<std::uint32_t>(i * dim + i);
    a_cols[0].push_back({idx, Scalar(field, 1)});
    b_cols[idx].push_back({0, Scalar(field, 1)});
  }
  return {LinMap::from_columns(field, {}, {dim, dim}, std::move(a_cols)),
          LinMap::from_columns(field, {dim, dim}, {}, std::move(b_cols))};
}

BraidedObject::BraidedObject(FieldSpec field, TensorShape shape, LinMap braid,
                             std::optional<DualityData> dual)
    : field_(field), shape_(std::move(shape)), braid_(std::move(braid)), dual_(std::move(dual)) {
  if (braid_.dom() != shape_ + shape_ || braid_.cod() != shape_ + shape_) {
    throw Error(ErrorKind::shape_mismatch, "braid must be an endomorphism of " +
                                               (shape_ + shape_).to_string() + ", got " +
                                               shape_pair(braid_));
  }
  flip_ = equal(braid_, block_swap(field_, shape_, shape_)).equal;
}

BraidedObject::BraidedObject(FieldSpec field, std::size_t dim, LinMap braid,
                             std::optional<DualityData> dual)
    : BraidedObject(field, TensorShape{dim}, std::move(braid), std::move(dual)) {}

BraidedObject BraidedObject::symmetric(FieldSpec field, std::size_t dim) {
  return BraidedObject(field, TensorShape{dim}, flip(field, dim, dim), dual_pair(field, dim));
}

BraidedObject BraidedObject::symmetric(FieldSpec field, TensorShape shape) {
  auto braid = block_swap(field, shape, shape);
  std::optional<DualityData> dual;
  if (shape.rank() == 1) dual = dual_pair(field, shape.total());
  return BraidedObject(field, std::move(shape), std::move(braid), std::move(dual));
}

TensorShape BraidedObject::power(std::size_t k) const {
  TensorShape out;
  for (std::size_t i = 0; i < k; ++i) out = out + shape_;
  return out;
}

LinMap BraidedObject::c(std::size_t j, std::size_t k) const {
  if (j == 0 || k == 0) return id(j + k);
  if (flip_) return block_swap(field_, power(j), power(k));
  if (j == 1 && k == 1) return braid_;
  if (j == 1) return compose(tensor(id(1), c(1, k - 1)), tensor(braid_, id(k - 1)));
  return compose(tensor(c(1, k), id(j - 1)), tensor(id(1), c(j - 1, k)));
}

LinMap cross_braid(const BraidedObject& x, const BraidedObject& y) {
  if (x.is_flip() && y.is_flip()) return block_swap(x.field(), x.shape(), y.shape());
  if (x.shape() == y.shape() && equal(x.braid(), y.braid()).equal) return x.braid();
  throw Error(ErrorKind::non_symmetric_braiding,
              "no braiding between objects " + x.shape().to_string() + " and " +
                  y.shape().to_string() + " with distinct non-symmetric braids");
}

// ---------------------------------------------------------------------------
// CheckReport

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::passed: return "PASS";
    case Outcome::failed: return "FAIL";
    case Outcome::skipped: return "SKIP";
  }
  return "?";
}

CheckReport& CheckReport::add(std::string law, std::string anchor, const Equality& result) {
  laws_.push_back({std::move(law), std::move(anchor),
                   result.equal ? Outcome::passed : Outcome::failed, result.witness, {}});
  return *this;
}

CheckReport& CheckReport::add(std::string law, std::string anchor, bool passed, std::string note) {
  laws_.push_back({std::move(law), std::move(anchor), passed ? Outcome::passed : Outcome::failed,
                   std::nullopt, std::move(note)});
  return *this;
}

CheckReport& CheckReport::skip(std::string law, std::string anchor, std::string note) {
  laws_.push_back({std::move(law), std::move(anchor), Outcome::skipped, std::nullopt, std::move(note)});
  return *this;
}

CheckReport& CheckReport::merge(const CheckReport& other, std::string_view prefix) {
  for (auto law : other.laws_) {
    if (!prefix.empty()) law.law = std::string(prefix) + "/" + law.law;
    laws_.push_back(std::move(law));
  }
  return *this;
}

bool CheckReport::passed() const noexcept { return failures() == 0; }

std::size_t CheckReport::failures() const noexcept {
  std::size_t n = 0;
  for (const auto& l : laws_) n += l.outcome == Outcome::failed;
  return n;
}

const LawResult* CheckReport::find(std::string_view law) const noexcept {
  for (const auto& l : laws_) {
    if (l.law == law) return &l;
  }
  return nullptr;
}

bool CheckReport::holds(std::string_view law) const noexcept {
  const auto* l = find(law);
  return l != nullptr && l->outcome == Outcome::passed;
}

std::string CheckReport::to_text() const {
  std::ostringstream os;
  for (const auto& l : laws_) {
    os << to_string(l.outcome) << "  " << l.law << "  [" << l.anchor << "]";
    if (l.witness) os << "  " << l.witness->to_string();
    if (!l.note.empty()) os << "  (" << l.note << ")";
    os << "\n";
  }
  os << (passed() ? "all laws hold" : std::to_string(failures()) + " law(s) failed") << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Structure checks

CheckReport check_braided_object(const BraidedObject& obj,
                                 const std::vector<std::pair<std::string, LinMap>>& generators) {
  CheckReport r;
  const auto& c = obj.braid();
  r.add("braid:invertible", "braiding", linalg::inverse(c).has_value());
  auto id = obj.id();
  r.add("braid:yang-baxter", "braiding:yang-baxter",
        equal(compose(tensor(c, id), tensor(id, c), tensor(c, id)),
              compose(tensor(id, c), tensor(c, id), tensor(id, c))));

  auto powers_of = [&](const TensorShape& s) -> std::size_t {
    const auto& unit = obj.shape().factors();
    const auto& f = s.factors();
    if (unit.empty() || f.size() % unit.size() != 0) {
      throw Error(ErrorKind::shape_mismatch, "shape " + s.to_string() + " is not a power of " +
                                                 obj.shape().to_string());
    }
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] != unit[i % unit.size()]) {
        throw Error(ErrorKind::shape_mismatch, "shape " + s.to_string() + " is not a power of " +
                                                   obj.shape().to_string());
      }
    }
    return f.size() / unit.size();
  };
  for (const auto& [name, f] : generators) {
    auto j = powers_of(f.dom());
    auto k = powers_of(f.cod());
    r.add("braid:naturality:" + name + ":left", "braiding:naturality",
          equal(compose(obj.c(k, 1), tensor(f, id)), compose(tensor(id, f), obj.c(j, 1))));
    r.add("braid:naturality:" + name + ":right", "braiding:naturality",
          equal(compose(obj.c(1, k), tensor(id, f)), compose(tensor(f, id), obj.c(1, j))));
  }
  if (obj.dual()) {
    const auto& [a, b] = *obj.dual();
    r.add("duality:snake-left", "finite-object:snake", equal(compose(tensor(b, id), tensor(id, a)), id));
    r.add("duality:snake-right", "finite-object:snake", equal(compose(tensor(id, b), tensor(a, id)), id));
  }
  return r;
}

namespace {

void add_associativity(CheckReport& r, const LinMap& mu) {
  auto id = identity(mu.field(), mu.cod());
  r.add("algebra:associativity", "algebra", equal(compose(mu, tensor(mu, id)), compose(mu, tensor(id, mu))));
}

void add_coalgebra_laws(CheckReport& r, const CoalgebraData& d) {
  auto id = identity(d.delta.field(), d.eps.dom());
  r.add("coalgebra:coassociativity", "coalgebra",
        equal(compose(tensor(d.delta, id), d.delta), compose(tensor(id, d.delta), d.delta)));
  r.add("coalgebra:left-counit", "coalgebra", equal(compose(tensor(d.eps, id), d.delta), id));
  r.add("coalgebra:right-counit", "coalgebra", equal(compose(tensor(id, d.eps), d.delta), id));
}

void add_product_compatibility(CheckReport& r, const BraidedObject& obj, const LinMap& mu,
                               const LinMap& eps, const LinMap& delta) {
  auto id = obj.id();
  r.add("bialgebra:coproduct-multiplicative", "bialgebra",
        equal(compose(delta, mu),
              compose(tensor(mu, mu), tensor(id, obj.c(), id), tensor(delta, delta))));
  r.add("bialgebra:counit-multiplicative", "bialgebra", equal(compose(eps, mu), tensor(eps, eps)));
}

}  // namespace

CheckReport check_algebra(const AlgebraData& a) {
  CheckReport r;
  add_associativity(r, a.mu);
  auto id = identity(a.mu.field(), a.mu.cod());
  r.add("algebra:left-unit", "algebra", equal(compose(a.mu, tensor(a.eta, id)), id));
  r.add("algebra:right-unit", "algebra", equal(compose(a.mu, tensor(id, a.eta)), id));
  return r;
}

CheckReport check_coalgebra(const CoalgebraData& d) {
  CheckReport r;
  add_coalgebra_laws(r, d);
  return r;
}

CheckReport check_nonunital_bialgebra(const NonUnitalBialgebraData& b) {
  CheckReport r;
  add_coalgebra_laws(r, b.coalgebra());
  add_associativity(r, b.mu);
  add_product_compatibility(r, b.obj, b.mu, b.eps, b.delta);
  return r;
}

CheckReport check_bialgebra(const BialgebraData& b) {
  CheckReport r = check_algebra(b.algebra());
  add_coalgebra_laws(r, b.coalgebra());
  add_product_compatibility(r, b.obj, b.mu, b.eps, b.delta);
  r.add("bialgebra:coproduct-unit", "bialgebra", equal(compose(b.delta, b.eta), tensor(b.eta, b.eta)));
  r.add("bialgebra:counit-unit", "bialgebra",
        equal(compose(b.eps, b.eta), identity(b.obj.field(), TensorShape{})));
  return r;
}

CheckReport check_hopf(const HopfAlgebraData& h) {
  CheckReport r = check_bialgebra(h.bialgebra());
  auto unit = convolution_unit(h.coalgebra(), h.algebra());
  auto id = h.obj.id();
  r.add("hopf:antipode-left", "hopf:antipode",
        equal(convolution(h.lambda, id, h.coalgebra(), h.algebra()), unit));
  r.add("hopf:antipode-right", "hopf:antipode",
        equal(convolution(id, h.lambda, h.coalgebra(), h.algebra()), unit));
  return r;
}

CheckReport full_hopf_suite(const HopfAlgebraData& h) {
  CheckReport r = check_braided_object(
      h.obj, {{"eta", h.eta}, {"mu", h.mu}, {"eps", h.eps}, {"delta", h.delta}, {"lambda", h.lambda}});
  r.merge(check_hopf(h));
  r.merge(antipode_property_check(h));
  return r;
}

// ---------------------------------------------------------------------------
// Convolution

LinMap convolution(const LinMap& f, const LinMap& g, const CoalgebraData& d, const AlgebraData& a) {
  return compose(a.mu, tensor(f, g), d.delta);
}

LinMap convolution_unit(const CoalgebraData& d, const AlgebraData& a) { return compose(a.eta, d.eps); }

LinMap convolution_inverse(const LinMap& f, const CoalgebraData& d, const AlgebraData& a) {
  const auto field = f.field();
  const TensorShape dshape = d.eps.dom();
  const TensorShape ashape = a.eta.cod();
  if (f.dom() != dshape || f.cod() != ashape) {
    throw Error(ErrorKind::shape_mismatch, "convolution_inverse: expected " + dshape.to_string() +
                                               "->" + ashape.to_string() + ", got " + shape_pair(f));
  }
  const std::size_t nd = dshape.total(), na = ashape.total(), n = na * nd;

  // L[(a,d),(a2,d2)] = Σ μ[a,(a1,a2)] f[a1,d1] δ[(d1,d2),d], so that (f∗x) = L·vec(x).
  linalg::Matrix system(n, std::vector<Scalar>(n, Scalar(field, 0)));
  for (std::size_t dcol = 0; dcol < nd; ++dcol) {
    for (const auto& de : d.delta.column(dcol)) {
      const std::size_t d1 = de.row / nd, d2 = de.row % nd;
      for (const auto& fe : f.column(d1)) {
        const Scalar fd = fe.value * de.value;
        for (std::size_t a2 = 0; a2 < na; ++a2) {
          for (const auto& me : a.mu.column(fe.row * na + a2)) {
            system[me.row * nd + dcol][a2 * nd + d2] += me.value * fd;
          }
        }
      }
    }
  }
  const auto unit = convolution_unit(d, a);
  std::vector<Scalar> rhs(n, Scalar(field, 0));
  for (std::size_t col = 0; col < nd; ++col) {
    for (const auto& e : unit.column(col)) rhs[e.row * nd + col] = e.value;
  }
  auto solution = linalg::solve(std::move(system), rhs, field);
  if (!solution) {
    throw Error(ErrorKind::not_invertible, "the equation f∗x = η∘ε has no solution");
  }
  std::vector<std::vector<LinMap::Entry>> cols(nd);
  for (std::size_t ai = 0; ai < na; ++ai) {
    for (std::size_t di = 0; di < nd; ++di) {
      const auto& v = (*solution)[ai * nd + di];
      if (!v.is_zero()) cols[di].push_back({static_cast<std::uint32_t>(ai), v});
    }
  }
  auto x = LinMap::from_columns(field, dshape, ashape, std::move(cols));
  if (!equal(convolution(f, x, d, a), unit).equal) {
    throw Error(ErrorKind::not_invertible, "solution of f∗x = η∘ε does not verify");
  }
  if (!equal(convolution(x, f, d, a), unit).equal) {
    throw Error(ErrorKind::not_invertible, "left solution x of f∗x = η∘ε is not a right inverse");
  }
  return x;
}

LinMap solve_antipode(const BialgebraData& b) {
  try {
    return convolution_inverse(b.obj.id(), b.coalgebra(), b.algebra());
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::not_invertible) throw;
    throw Error(ErrorKind::no_antipode, std::string("identity is not convolution invertible: ") + e.what());
  }
}

CheckReport antipode_property_check(const HopfAlgebraData& h) {
  CheckReport r;
  const auto& l = h.lambda;
  r.add("antipode:anti-multiplicative", "hopf:antipode-properties",
        equal(compose(l, h.mu), compose(h.mu, tensor(l, l), h.obj.c())));
  r.add("antipode:anti-comultiplicative", "hopf:antipode-properties",
        equal(compose(h.delta, l), compose(h.obj.c(), tensor(l, l), h.delta)));
  r.add("antipode:unit", "hopf:antipode-properties", equal(compose(l, h.eta), h.eta));
  r.add("antipode:counit", "hopf:antipode-properties", equal(compose(h.eps, l), h.eps));
  if (check_commutative(h.algebra()) || check_cocommutative(h.coalgebra())) {
    r.add("antipode:involutive", "hopf:antipode-properties", equal(compose(l, l), h.obj.id()));
  } else {
    r.skip("antipode:involutive", "hopf:antipode-properties", "neither commutative nor cocommutative");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Modules

CheckReport check_module_algebra(const ModuleActionData& action, const AlgebraData& carrier) {
  CheckReport r;
  const auto& x = action.acting;
  const auto& phi = action.phi;
  auto idx = x.obj.id();
  auto idc = action.carrier.id();
  r.add("module:associativity", "module",
        equal(compose(phi, tensor(idx, phi)), compose(phi, tensor(x.mu, idc))));
  r.add("module-algebra:unit", "module-algebra",
        equal(compose(phi, tensor(idx, carrier.eta)), tensor(x.eps, carrier.eta)));
  auto cxc = cross_braid(x.obj, action.carrier);
  r.add("module-algebra:product", "module-algebra",
        equal(compose(phi, tensor(idx, carrier.mu)),
              compose(carrier.mu, tensor(phi, phi), tensor(idx, cxc, idc), tensor(x.delta, idc, idc))));
  return r;
}

CheckReport check_module_coalgebra(const ModuleActionData& action, const CoalgebraData& carrier) {
  CheckReport r;
  const auto& x = action.acting;
  const auto& phi = action.phi;
  auto idx = x.obj.id();
  auto idc = action.carrier.id();
  r.add("module-coalgebra:counit", "module-coalgebra",
        equal(compose(carrier.eps, phi), tensor(x.eps, carrier.eps)));
  auto cxc = cross_braid(x.obj, action.carrier);
  r.add("module-coalgebra:coproduct", "module-coalgebra",
        equal(compose(carrier.delta, phi),
              compose(tensor(phi, phi), tensor(idx, cxc, idc), tensor(x.delta, carrier.delta))));
  return r;
}

ModuleActionData adjoint_action(const HopfAlgebraData& h) {
  auto id = h.obj.id();
  auto phi = compose(h.mu, tensor(h.mu, h.lambda), tensor(id, h.obj.c()), tensor(h.delta, id));
  return {h.nonunital(), h.obj, std::move(phi)};
}

Equality class_condition(const LinMap& f, const CoalgebraData& d) {
  const auto& obj = d.obj;
  auto id = obj.id();
  if (f.dom() != obj.power(2) || f.cod() != obj.power(1)) {
    throw Error(ErrorKind::shape_mismatch, "class condition needs H⊗H→H, got " + shape_pair(f));
  }
  auto tail = tensor(id, obj.c());
  auto lhs = compose(tensor(f, id), tail, tensor(compose(obj.c(), d.delta), id));
  auto rhs = compose(tensor(f, id), tail, tensor(d.delta, id));
  return equal(lhs, rhs);
}

bool cocommutativity_class_check(const LinMap& f, const CoalgebraData& d) {
  return class_condition(f, d).equal;
}

bool check_cocommutative(const CoalgebraData& d) {
  return equal(compose(d.obj.c(), d.delta), d.delta).equal;
}

bool check_commutative(const AlgebraData& a) { return equal(compose(a.mu, a.obj.c()), a.mu).equal; }

AlgebraData dual_algebra(FieldSpec field, std::size_t dim) {
  auto [a, b] = dual_pair(field, dim);
  auto id = identity(field, {dim});
  auto mu = tensor(id, b, id);
  return {BraidedObject::symmetric(field, TensorShape{dim, dim}), std::move(a), std::move(mu)};
}

// ---------------------------------------------------------------------------
// Morphisms

CheckReport check_coalgebra_morphism(const LinMap& f, const CoalgebraData& src,
                                     const CoalgebraData& dst, std::string_view name) {
  CheckReport r;
  std::string n(name);
  r.add(n + ":counit", "coalgebra-morphism", equal(compose(dst.eps, f), src.eps));
  r.add(n + ":coproduct", "coalgebra-morphism",
        equal(compose(dst.delta, f), compose(tensor(f, f), src.delta)));
  return r;
}

CheckReport check_multiplicative(const LinMap& f, const LinMap& mu_src, const LinMap& mu_dst,
                                 std::string_view name) {
  CheckReport r;
  r.add(std::string(name) + ":multiplicative", "algebra-morphism",
        equal(compose(f, mu_src), compose(mu_dst, tensor(f, f))));
  return r;
}

CheckReport check_unit_preserving(const LinMap& f, const LinMap& eta_src, const LinMap& eta_dst,
                                  std::string_view name) {
  CheckReport r;
  r.add(std::string(name) + ":unit", "algebra-morphism", equal(compose(f, eta_src), eta_dst));
  return r;
}

}  // namespace hopfkit
