#ifndef GB_PRESETS_HPP
#define GB_PRESETS_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gb/grading.hpp"
#include "gb/weight_poset.hpp"

namespace gb {

/// Named configuration pinning a type, label, and Borel choice so published
/// classifications reproduce byte for byte.
struct Preset {
  std::string name;
  Family family;
  int rank;
  int twist;
  std::vector<int> label;
  // Delta_0 functionals as value-lists on the echelon h0 basis; empty means
  // the default lexicographic rule.
  std::optional<std::vector<RatVec>> delta0;
};

const std::vector<Preset>& presets();
const Preset* find_preset(const std::string& name);

/// A fully built grading: algebra, automorphism, analyzed decomposition and
/// weight poset, with stable ownership.
struct GradingBundle {
  std::unique_ptr<ChevalleyAlgebra> algebra;
  KacLabel label;
  std::unique_ptr<Automorphism> sigma;
  std::unique_ptr<GradedDecomposition> decomp;
  std::unique_ptr<WeightPoset> poset;
};

GradingBundle build_grading(Family family, int rank, int twist, const std::vector<int>& s,
                            const std::optional<std::vector<RatVec>>& delta0_override);
GradingBundle build_preset(const std::string& name);

}  // namespace gb

#endif
