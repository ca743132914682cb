#ifndef GB_ORACLE_HPP
#define GB_ORACLE_HPP

#include <string>
#include <vector>

#include "gb/parallel.hpp"
#include "gb/weight_poset.hpp"

namespace gb {

/// Candidate subspace of the positive part: a selection of weight lines from
/// the poset, optionally extended by zero-weight vectors.
struct CandidateSubspace {
  const WeightPoset* poset = nullptr;
  std::vector<size_t> selected;          // sorted poset indices
  std::vector<AlgebraElement> extra;     // e.g. central zero-weight vectors

  std::vector<AlgebraElement> spanning_vectors() const;
};

/// Definition-level predicates, evaluated on structure constants alone.
bool is_b0_module(const CandidateSubspace& c);
bool is_subalgebra(const CandidateSubspace& c);
bool is_k_nilpotent(const CandidateSubspace& c, unsigned k);
bool is_positively_graded(const CandidateSubspace& c);

/// Exhaustive classification: sweep every subset of the poset, keep the
/// selections whose span is a k-nilpotent positively-graded b_0-module
/// subalgebra, and return their antichains of minimal elements. This route
/// never consults the order relation for its predicates, so agreement with
/// the antichain classifier is a genuine two-sided check.
std::vector<Antichain> brute_force_classify(const WeightPoset& poset, unsigned k,
                                            Execution exec = Execution::parallel);

/// Certificate data for the non-graded example: a sum of equal-weight vectors
/// from two different grades generates a Borel module that is abelian but not
/// positively graded.
struct E2Report {
  RatVec weight;
  unsigned grade_lo = 0, grade_hi = 0;
  size_t module_dim = 0;
  bool summands_same_weight = false;
  bool b0_stable = false;
  bool abelian = false;
  bool positively_graded = true;
};

/// Searches the grading for such a module and certifies its properties.
E2Report remark_e2_demo(const WeightPoset& poset);

}  // namespace gb

#endif
