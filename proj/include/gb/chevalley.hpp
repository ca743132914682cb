#ifndef GB_CHEVALLEY_HPP
#define GB_CHEVALLEY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gb/exact_matrix.hpp"
#include "gb/root_system.hpp"

namespace gb {

class ChevalleyAlgebra;

/// Sparse element in the fixed Chevalley basis; zero coefficients are never
/// stored.
struct AlgebraElement {
  const ChevalleyAlgebra* algebra = nullptr;
  std::map<int, Cyclotomic> coeff;

  bool is_zero() const { return coeff.empty(); }
  void set(int idx, const Cyclotomic& c);
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-() const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement scaled(const Cyclotomic& c) const;
  bool operator==(const AlgebraElement& o) const;

  CycVec to_coords() const;  // dense coordinates of length dim
  std::string to_string() const;
};

/// Simple Lie algebra in a Chevalley basis {x_alpha, h_i} with exact integer
/// structure constants. Signs follow the extraspecial-pair convention
/// (N > 0 on extraspecial pairs, everything else propagated), and the build
/// certifies itself with a full Jacobi sweep.
class ChevalleyAlgebra {
 public:
  explicit ChevalleyAlgebra(const RootSystem& rs);

  const RootSystem& roots() const { return rs_; }
  size_t dim() const { return dim_; }
  size_t num_positive() const { return npos_; }
  int rank() const { return rs_.rank(); }

  // Basis layout: positive root vectors by (height, lex), then h_1..h_N,
  // then negative root vectors in the mirrored order.
  int index_of_root(const RootVec& r) const;
  int index_of_cartan(int i) const { return static_cast<int>(npos_) + i; }
  bool is_root_index(int idx) const;
  bool is_cartan_index(int idx) const;
  RootVec root_of_index(int idx) const;
  std::string basis_name(int idx) const;

  /// Bracket of two basis elements as (basis index, integer coefficient).
  const std::vector<std::pair<int, long>>& bracket_basis(int i, int j) const {
    return table_[i * dim_ + j];
  }

  /// Structure constant N_{alpha,beta}; 0 when alpha+beta is not a root.
  long structure_constant(const RootVec& alpha, const RootVec& beta) const;

  AlgebraElement zero() const;
  AlgebraElement basis_element(int idx) const;
  AlgebraElement element_from_coords(const CycVec& v) const;

  AlgebraElement bracket(const AlgebraElement& a, const AlgebraElement& b) const;

  ExactMatrix adjoint_matrix(const AlgebraElement& a) const;

  Cyclotomic killing_form(const AlgebraElement& a, const AlgebraElement& b) const;
  /// kappa on basis pairs, computed by the trace of ad compositions.
  const std::vector<std::vector<long long>>& killing_matrix() const { return killing_; }

  /// Full sweep of the Jacobi identity over unordered basis triples; throws
  /// on any violation. Runs once at construction.
  void verify_jacobi() const;

 private:
  RootSystem rs_;
  size_t npos_;
  size_t dim_;
  std::vector<std::vector<std::pair<int, long>>> table_;
  std::vector<std::vector<long long>> killing_;

  void build_structure_constants();
  void build_killing();
};

}  // namespace gb

#endif
