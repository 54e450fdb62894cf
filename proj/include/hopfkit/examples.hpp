#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hopfkit/structures.hpp"

namespace hopfkit {

/// Finite group given by its Cayley table; validated at construction.
class GroupTable {
 public:
  GroupTable(std::string name, std::vector<std::vector<std::size_t>> table);

  const std::string& name() const noexcept { return name_; }
  std::size_t order() const noexcept { return table_.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t identity() const noexcept { return identity_; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  const std::vector<std::vector<std::size_t>>& table() const noexcept { return table_; }
  bool is_abelian() const noexcept;

 private:
  std::string name_;
  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
};

GroupTable cyclic_group(std::size_t n);
/// Permutations of {0,1,2} in lexicographic order; (στ)(i) = σ(τ(i)).
GroupTable symmetric_group3();
GroupTable dihedral_group4();
GroupTable quaternion_group();
GroupTable direct_product(const GroupTable& a, const GroupTable& b);

/// C1..C8, S3, D4, Q8, V4, C2xC4, C2xC2xC2. Throws Error(unknown_group).
GroupTable catalog_group(std::string_view name);
std::vector<std::string> catalog_names();

/// A map G → G given by the images of the elements.
struct GroupEndo {
  std::vector<std::size_t> images;

  friend auto operator<=>(const GroupEndo&, const GroupEndo&) = default;
};

bool is_homomorphism(const GroupTable& g, const GroupEndo& f);
bool is_idempotent(const GroupEndo& f);

/// All idempotent endomorphisms, sorted lexicographically by images.
/// Throws Error(bound_exceeded) when the order exceeds `bound`.
std::vector<GroupEndo> idempotent_endos(const GroupTable& g, std::size_t bound = 24);

/// Endomorphism names understood by the CLI: "identity", "trivial",
/// "sign-retraction" (S3, onto the transposition with the smallest index),
/// or "index:k" into idempotent_endos.
GroupEndo named_endo(const GroupTable& g, std::string_view name);

LinMap linearize(const GroupTable& g, const GroupEndo& f, FieldSpec field);

/// Grouplike Hopf algebra 𝔽[G] on the flip braiding.
HopfAlgebraData group_algebra(const GroupTable& g, FieldSpec field);
/// Dual Hopf algebra 𝔽^G of functions on G, in the basis of indicator functions.
HopfAlgebraData function_algebra(const GroupTable& g, FieldSpec field);
/// Sweedler's four-dimensional Hopf algebra in the basis (1, g, x, gx).
HopfAlgebraData sweedler_h4(FieldSpec field);
/// 𝔽[{1, z}] with z² = z and grouplike coproduct: a bialgebra without antipode.
BialgebraData two_element_monoid_bialgebra(FieldSpec field);

/// A ⋊ H with (a,h)(b,l) = (a·action[h](b), hl); element (a,h) has index a·|H| + h.
/// action[h] must be an automorphism of A and h ↦ action[h] a homomorphism.
GroupTable semidirect_group(const GroupTable& a, const GroupTable& h,
                            const std::vector<GroupEndo>& action);

/// True iff the tables agree after some relabelling of elements.
bool isomorphic(const GroupTable& a, const GroupTable& b);

}  // namespace hopfkit
