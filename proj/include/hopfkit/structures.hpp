#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hopfkit/linmap.hpp"

namespace hopfkit {

/// Unit a: K → P*⊗P and evaluation b: P⊗P* → K, with P* identified with P by the basis.
struct DualityData {
  LinMap a;
  LinMap b;
};

DualityData dual_pair(FieldSpec field, std::size_t dim);

/// A based vector space with a braiding on H⊗H. Braidings between higher
/// tensor powers are derived by the hexagon rules. The object itself may be a
/// tensor product (its `shape` has several factors), as for P*⊗P.
class BraidedObject {
 public:
  BraidedObject(FieldSpec field, TensorShape shape, LinMap braid,
                std::optional<DualityData> dual = std::nullopt);
  BraidedObject(FieldSpec field, std::size_t dim, LinMap braid,
                std::optional<DualityData> dual = std::nullopt);

  /// Symmetric (flip) braiding; one-factor objects also get the canonical duality data.
  static BraidedObject symmetric(FieldSpec field, std::size_t dim);
  static BraidedObject symmetric(FieldSpec field, TensorShape shape);

  FieldSpec field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return shape_.total(); }
  const TensorShape& shape() const noexcept { return shape_; }
  const LinMap& braid() const noexcept { return braid_; }
  bool is_flip() const noexcept { return flip_; }
  const std::optional<DualityData>& dual() const noexcept { return dual_; }

  /// H^{⊗k}.
  TensorShape power(std::size_t k) const;
  LinMap id(std::size_t k = 1) const { return identity(field_, power(k)); }

  /// c_{H^{⊗j}, H^{⊗k}}.
  LinMap c(std::size_t j = 1, std::size_t k = 1) const;

 private:
  FieldSpec field_;
  TensorShape shape_;
  LinMap braid_;
  bool flip_;
  std::optional<DualityData> dual_;
};

/// c_{X,Y} between two objects: the flip when both are symmetric, the braid of
/// X when X and Y carry the same braid; otherwise NonSymmetricBraiding.
LinMap cross_braid(const BraidedObject& x, const BraidedObject& y);

struct AlgebraData {
  BraidedObject obj;
  LinMap eta;
  LinMap mu;
};

struct CoalgebraData {
  BraidedObject obj;
  LinMap eps;
  LinMap delta;
};

struct NonUnitalBialgebraData {
  BraidedObject obj;
  LinMap mu;
  LinMap eps;
  LinMap delta;
  std::optional<LinMap> eta;

  CoalgebraData coalgebra() const { return {obj, eps, delta}; }
};

struct BialgebraData {
  BraidedObject obj;
  LinMap eta;
  LinMap mu;
  LinMap eps;
  LinMap delta;

  AlgebraData algebra() const { return {obj, eta, mu}; }
  CoalgebraData coalgebra() const { return {obj, eps, delta}; }
  NonUnitalBialgebraData nonunital() const { return {obj, mu, eps, delta, eta}; }
};

struct HopfAlgebraData {
  BraidedObject obj;
  LinMap eta;
  LinMap mu;
  LinMap eps;
  LinMap delta;
  LinMap lambda;

  std::size_t dim() const noexcept { return obj.dim(); }
  FieldSpec field() const noexcept { return obj.field(); }
  AlgebraData algebra() const { return {obj, eta, mu}; }
  CoalgebraData coalgebra() const { return {obj, eps, delta}; }
  BialgebraData bialgebra() const { return {obj, eta, mu, eps, delta}; }
  NonUnitalBialgebraData nonunital() const { return {obj, mu, eps, delta, eta}; }
};

/// Left action φ: X⊗C → C of a (possibly non-unital) bialgebra X on a carrier C.
struct ModuleActionData {
  NonUnitalBialgebraData acting;
  BraidedObject carrier;
  LinMap phi;
};

enum class Outcome { passed, failed, skipped };

struct LawResult {
  std::string law;
  std::string anchor;
  Outcome outcome = Outcome::passed;
  std::optional<Witness> witness;
  std::string note;
};

/// Ordered list of evaluated laws. Every law is evaluated; nothing short-circuits.
class CheckReport {
 public:
  CheckReport& add(std::string law, std::string anchor, const Equality& result);
  CheckReport& add(std::string law, std::string anchor, bool passed, std::string note = {});
  CheckReport& skip(std::string law, std::string anchor, std::string note);
  CheckReport& merge(const CheckReport& other, std::string_view prefix = {});

  bool passed() const noexcept;
  std::size_t failures() const noexcept;
  const std::vector<LawResult>& laws() const noexcept { return laws_; }
  const LawResult* find(std::string_view law) const noexcept;
  /// True iff the law is present and passed.
  bool holds(std::string_view law) const noexcept;

  std::string to_text() const;

 private:
  std::vector<LawResult> laws_;
};

std::string_view to_string(Outcome o);

CheckReport check_braided_object(const BraidedObject& obj,
                                 const std::vector<std::pair<std::string, LinMap>>& generators);

CheckReport check_algebra(const AlgebraData& a);
CheckReport check_coalgebra(const CoalgebraData& d);
CheckReport check_nonunital_bialgebra(const NonUnitalBialgebraData& b);
CheckReport check_bialgebra(const BialgebraData& b);
/// Bialgebra laws plus both antipode equalities.
CheckReport check_hopf(const HopfAlgebraData& h);
/// Braided-object, Hopf and antipode-property checks together.
CheckReport full_hopf_suite(const HopfAlgebraData& h);

/// μ_A∘(f⊗g)∘δ_D.
LinMap convolution(const LinMap& f, const LinMap& g, const CoalgebraData& d, const AlgebraData& a);
/// η_A∘ε_D.
LinMap convolution_unit(const CoalgebraData& d, const AlgebraData& a);
/// Two-sided convolution inverse; Error(not_invertible) otherwise.
LinMap convolution_inverse(const LinMap& f, const CoalgebraData& d, const AlgebraData& a);
/// Convolution inverse of the identity; Error(no_antipode) otherwise.
LinMap solve_antipode(const BialgebraData& b);

CheckReport antipode_property_check(const HopfAlgebraData& h);

/// Action law, unit condition, and multiplicativity over the carrier algebra.
CheckReport check_module_algebra(const ModuleActionData& action, const AlgebraData& carrier);
/// Action law plus ε_C∘φ = ε_X⊗ε_C and δ_C∘φ = (φ⊗φ)∘(X⊗c⊗C)∘(δ_X⊗δ_C).
CheckReport check_module_coalgebra(const ModuleActionData& action, const CoalgebraData& carrier);

/// μ∘(μ⊗λ)∘(id⊗c)∘(δ⊗id).
ModuleActionData adjoint_action(const HopfAlgebraData& h);

/// Compares (f⊗H)∘(H⊗c)∘((c∘δ)⊗H) with (f⊗H)∘(H⊗c)∘(δ⊗H).
Equality class_condition(const LinMap& f, const CoalgebraData& d);
bool cocommutativity_class_check(const LinMap& f, const CoalgebraData& d);

bool check_cocommutative(const CoalgebraData& d);
bool check_commutative(const AlgebraData& a);

/// The algebra P*⊗P with product id⊗b⊗id and unit a (symmetric braiding on dim²).
AlgebraData dual_algebra(FieldSpec field, std::size_t dim);

// Morphism law helpers; law names are prefixed with `name`.
CheckReport check_coalgebra_morphism(const LinMap& f, const CoalgebraData& src,
                                     const CoalgebraData& dst, std::string_view name);
CheckReport check_multiplicative(const LinMap& f, const LinMap& mu_src, const LinMap& mu_dst,
                                 std::string_view name);
CheckReport check_unit_preserving(const LinMap& f, const LinMap& eta_src, const LinMap& eta_dst,
                                  std::string_view name);

}  // namespace hopfkit
