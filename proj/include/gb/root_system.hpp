#ifndef GB_ROOT_SYSTEM_HPP
#define GB_ROOT_SYSTEM_HPP

#include <string>
#include <vector>

#include "gb/rational.hpp"

namespace gb {

enum class Family { A, B, C, D, E, F, G };

Family family_from_char(char c);
char family_to_char(Family f);

/// Root in the simple-root basis (integer coefficients).
using RootVec = std::vector<int>;

int height(const RootVec& r);

/// Finite root system of a simple type with the invariant form normalized so
/// long roots have squared length 2.
class RootSystem {
 public:
  RootSystem(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }

  /// cartan()[i][j] = <alpha_j, alpha_i^vee>
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<Rational>& symmetrizer() const { return sym_; }

  /// Positive roots sorted by height, then lexicographically.
  const std::vector<RootVec>& positive_roots() const { return positive_; }
  const RootVec& highest_root() const { return highest_; }

  bool is_root(const RootVec& r) const;
  bool is_positive_root(const RootVec& r) const;
  /// Index into positive_roots(); -1 when absent.
  int positive_index(const RootVec& r) const;

  /// Invariant symmetric form on rational vectors in simple-root coordinates.
  Rational inner_product(const RatVec& u, const RatVec& v) const;
  Rational inner_product(const RootVec& u, const RootVec& v) const;

  /// (alpha, alpha)/2 for a root alpha.
  Rational half_length_sq(const RootVec& r) const;

  /// <alpha, alpha_i^vee> = 2 (alpha, alpha_i) / (alpha_i, alpha_i)
  int pairing(const RootVec& alpha, int i) const;

  /// Coordinates of the coroot alpha^vee in the simple coroot basis.
  std::vector<int> coroot_coords(const RootVec& alpha) const;

  std::string type_name() const;

 private:
  Family family_;
  int rank_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Rational> sym_;
  std::vector<RootVec> positive_;
  RootVec highest_;

  void generate_positive_roots();
};

/// Affine Dynkin diagram X_N^(r) with marks and its automorphism group.
/// Untwisted diagrams are derived from the finite root system; the twisted
/// tables cover A_N^(2) and E_6^(2).
class AffineDiagram {
 public:
  AffineDiagram(Family family, int rank, int twist);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  int twist() const { return twist_; }
  size_t nodes() const { return marks_.size(); }

  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<int>& marks() const { return marks_; }

  /// Edge multiplicity between nodes i and j: cartan[i][j] * cartan[j][i].
  int edge_multiplicity(size_t i, size_t j) const { return cartan_[i][j] * cartan_[j][i]; }

  /// All node permutations preserving the generalized Cartan matrix.
  const std::vector<std::vector<int>>& automorphisms() const { return autos_; }

  /// For twisted diagrams: the finite-diagram node orbit realized by each
  /// affine node >= 1 (simple-root indices, 0-based). Empty for r = 1.
  const std::vector<std::vector<int>>& node_orbits() const { return node_orbits_; }

 private:
  Family family_;
  int rank_;
  int twist_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> marks_;
  std::vector<std::vector<int>> autos_;
  std::vector<std::vector<int>> node_orbits_;

  void build_untwisted();
  void build_twisted_a();
  void build_twisted_e6();
  void find_automorphisms();
};

}  // namespace gb

#endif
