#ifndef GB_GRADING_HPP
#define GB_GRADING_HPP

#include <optional>
#include <vector>

#include "gb/chevalley.hpp"
#include "gb/root_system.hpp"

namespace gb {

/// Kac coordinates (s_0,...,s_l; r) with the derived order n = r * sum a_i s_i.
struct KacLabel {
  Family family;
  int rank;
  int twist;
  std::vector<int> s;
  unsigned n;
};

/// Validates length, nonnegativity, gcd = 1 and computes the order.
KacLabel make_kac_label(Family family, int rank, int twist, std::vector<int> s);

/// Lexicographically least member of the diagram-automorphism orbit.
std::vector<int> canonical_label(const AffineDiagram& diagram, const std::vector<int>& s);

/// All labels of derived order exactly n, reduced modulo the diagram
/// automorphism group; canonical representatives, sorted.
std::vector<KacLabel> enumerate_kac_labels(Family family, int rank, unsigned n, int twist);

/// Order-n automorphism in the Chevalley basis, entries in Q(zeta_n).
struct Automorphism {
  const ChevalleyAlgebra* algebra = nullptr;
  ExactMatrix matrix;
  unsigned order = 1;

  AlgebraElement apply(const AlgebraElement& v) const;
};

/// Bracket-preservation sweep plus exact order check (sigma^n = id,
/// sigma^(n/p) != id for every prime p | n). Throws on failure.
void verify_automorphism(const Automorphism& sigma);

/// Realizes a Kac label. Inner labels scale root vectors by zeta^(deg alpha);
/// outer labels compose the diagram involution with the torus scaling solved
/// from the twisted generators. Unsupported for A_{2l}^(2).
Automorphism automorphism_from_label(const ChevalleyAlgebra& alg, const KacLabel& label);

/// One h_0-weight space inside a graded component.
struct WeightSpace {
  RatVec weight;                        // values on the h0 basis
  std::vector<AlgebraElement> vectors;  // echelon-normalized
};

/// Simple factor of [g_0, g_0] described by its simple roots and highest root.
struct G0Factor {
  std::vector<size_t> delta_indices;
  RatVec highest_root;
};

/// Z_n-grading of the algebra: per-grade bases, h_0, weight spaces, and after
/// analysis the Borel data (Delta_0, b_0, factors, highest weights).
/// Immutable once built; safe to share across threads.
class GradedDecomposition {
 public:
  const ChevalleyAlgebra& algebra() const { return *alg_; }
  unsigned modulus() const { return n_; }

  const std::vector<AlgebraElement>& component(unsigned j) const;
  size_t component_dim(unsigned j) const { return component(j).size(); }
  bool component_contains(unsigned j, const AlgebraElement& v) const;

  const std::vector<WeightSpace>& weights(unsigned j) const;
  const std::vector<AlgebraElement>& h0() const { return h0_; }

  /// Graded pieces v_0,...,v_{n-1} of an arbitrary element.
  std::vector<AlgebraElement> graded_projections(const AlgebraElement& v) const;

  bool analyzed() const { return analyzed_; }
  const std::vector<RatVec>& delta0() const;
  const std::vector<RatVec>& positive_g0_roots() const;
  const std::vector<AlgebraElement>& borel() const;
  /// Root vectors for the simple roots Delta_0 (the raising generators).
  const std::vector<AlgebraElement>& raising() const;
  const std::vector<G0Factor>& factors() const;
  const std::vector<RatVec>& highest_weights(unsigned j) const;  // j != 0

 private:
  friend GradedDecomposition automorphism_to_grading(const ChevalleyAlgebra&,
                                                     const Automorphism&);
  friend Automorphism grading_to_automorphism(const ChevalleyAlgebra&,
                                              const GradedDecomposition&);
  friend GradedDecomposition analyze_g0(GradedDecomposition,
                                        const std::optional<std::vector<RatVec>>&);

  GradedDecomposition() = default;
  void finalize();  // invariant checks + projection solver + weight tables

  const ChevalleyAlgebra* alg_ = nullptr;
  unsigned n_ = 1;
  std::vector<std::vector<AlgebraElement>> comps_;
  std::vector<std::vector<WeightSpace>> weight_tables_;
  std::vector<AlgebraElement> h0_;

  ExactMatrix coords_;                  // inverse of the stacked basis matrix
  std::vector<size_t> block_offset_;    // start of each grade block in coords

  bool analyzed_ = false;
  std::vector<RatVec> delta0_;
  std::vector<RatVec> positive_roots_;
  std::vector<AlgebraElement> borel_;
  std::vector<AlgebraElement> raising_;
  std::vector<G0Factor> factors_;
  std::vector<std::vector<RatVec>> highest_weights_;
};

/// g_j = kernel of (sigma - zeta^j id); checks every grading invariant.
GradedDecomposition automorphism_to_grading(const ChevalleyAlgebra& alg,
                                            const Automorphism& sigma);

/// sigma acting as zeta^j on g_j; validates that the input is a grading.
Automorphism grading_to_automorphism(const ChevalleyAlgebra& alg,
                                     const GradedDecomposition& decomp);

/// Chooses Delta_0 (default lexicographic rule or explicit override), fixes
/// the Borel, splits off simple factors with their highest roots, and
/// computes the highest weights of every nonzero grade.
GradedDecomposition analyze_g0(
    GradedDecomposition decomp,
    const std::optional<std::vector<RatVec>>& delta0_override = std::nullopt);

/// Basis of {h in g_j : weight 0 and [g_0, h] = 0}; verified against the
/// central-element properties (commutes with every g_{mj}; empty when
/// gcd(j, n) = 1).
std::vector<AlgebraElement> central_elements(const GradedDecomposition& decomp, unsigned j);

}  // namespace gb

#endif
