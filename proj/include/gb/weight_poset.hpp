#ifndef GB_WEIGHT_POSET_HPP
#define GB_WEIGHT_POSET_HPP

#include <functional>
#include <vector>

#include "gb/grading.hpp"
#include "gb/parallel.hpp"

namespace gb {

/// A nonzero h_0-weight together with the grade of the component carrying it.
struct GradedWeight {
  RatVec weight;
  unsigned grade;

  bool operator==(const GradedWeight& o) const {
    return grade == o.grade && weight == o.weight;
  }
  bool operator<(const GradedWeight& o) const {
    if (grade != o.grade) return grade < o.grade;
    return lex_compare(weight, o.weight) < 0;
  }
};

/// The poset of graded weights of the positive part: elements (mu, j) with
/// mu != 0, j != 0, ordered by (mu1, j) <= (mu2, j) iff mu2 - mu1 is a
/// nonnegative integer combination of Delta_0. Built from an analyzed
/// decomposition; immutable afterwards.
class WeightPoset {
 public:
  explicit WeightPoset(const GradedDecomposition& decomp);

  const GradedDecomposition& decomposition() const { return *decomp_; }
  unsigned modulus() const { return decomp_->modulus(); }
  size_t size() const { return elements_.size(); }
  const std::vector<GradedWeight>& elements() const { return elements_; }
  const GradedWeight& element(size_t i) const { return elements_[i]; }
  int index_of(const GradedWeight& w) const;

  /// Order relation between members, by index.
  bool leq_members(size_t a, size_t b) const { return leq_[a * elements_.size() + b]; }
  /// Order relation for arbitrary graded weights (sums leave the poset).
  bool leq(const GradedWeight& a, const GradedWeight& b) const;

  /// Highest weights of g_j for j != 0, paired with the grade.
  const std::vector<RatVec>& highest_weights(unsigned j) const {
    return decomp_->highest_weights(j);
  }
  /// Highest roots of the simple factors of g_0.
  std::vector<RatVec> g0_highest_roots() const;

  /// Whether mu is an h_0-weight of g_j (zero weights included).
  bool is_component_weight(const RatVec& mu, unsigned j) const;

 private:
  const GradedDecomposition* decomp_;
  std::vector<GradedWeight> elements_;
  std::vector<bool> leq_;
};

/// Antichain as a strictly increasing list of poset indices.
using Antichain = std::vector<size_t>;

/// Visits every nonempty antichain exactly once, in deterministic order.
void for_each_antichain(const WeightPoset& poset,
                        const std::function<void(const Antichain&)>& fn);
std::vector<Antichain> all_antichains(const WeightPoset& poset);

/// Classification conditions for a candidate antichain. Condition (i) ranges over
/// multisets of size k+1 with nonzero grade sum; grade-zero sums are routed
/// through condition (ii), which checks multiset sizes 2..k+1 by default
/// (zero_sum_bound raises the size bound for auditing).
bool check_condition_i(const WeightPoset& poset, const Antichain& a, unsigned k);
bool check_condition_ii(const WeightPoset& poset, const Antichain& a, unsigned k,
                        unsigned zero_sum_bound = 0);
bool check_condition_iii(const WeightPoset& poset, const Antichain& a);

/// All nonempty antichains generating a k-nilpotent positively-graded
/// b_0-module subalgebra, canonically sorted.
std::vector<Antichain> classify_antichains(const WeightPoset& poset, unsigned k,
                                           Execution exec = Execution::parallel,
                                           unsigned zero_sum_bound = 0);

/// The k = 1 classification through the abelian pairwise criterion: a single
/// check against highest weights (g_0 highest roots for grade-zero
/// sums). Kept as a second route; must agree with classify_antichains(.., 1).
std::vector<Antichain> classify_abelian_c2(const WeightPoset& poset,
                                           Execution exec = Execution::parallel);

std::vector<size_t> upward_closure(const WeightPoset& poset, const Antichain& a);
Antichain minimal_elements(const WeightPoset& poset, const std::vector<size_t>& subset);

/// Weight vectors spanning the subalgebra generated by the antichain: one
/// line per element of the upward closure.
std::vector<AlgebraElement> subalgebra_basis_from_antichain(const WeightPoset& poset,
                                                            const Antichain& a);

/// Constructive witness: given betas with sum(betas) <= (lambda, t), raises
/// them inside their components until the sum is itself a weight of g_t
/// below lambda. Breadth-first; throws if no witness exists.
std::vector<GradedWeight> p2_witness(const WeightPoset& poset,
                                     const std::vector<GradedWeight>& betas,
                                     const GradedWeight& lambda);

}  // namespace gb

#endif
