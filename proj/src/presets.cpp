#include "gb/presets.hpp"

#include <stdexcept>

namespace gb {

namespace {

RatVec rv(std::initializer_list<long> values) {
  RatVec v;
  for (long x : values) v.push_back(rat(x));
  return v;
}

}  // namespace

const std::vector<Preset>& presets() {
  // Delta_0 value-lists are on the echelon h0 basis: h1,h2,h3 for the inner
  // A3 gradings, (h1+h3, h2) for the outer one.
  static const std::vector<Preset> table = {
      {"a3-case1", Family::A, 3, 1, {1, 1, 1, 0},
       std::vector<RatVec>{rv({0, 1, -2})}},                       // {-a3}
      {"a3-case2", Family::A, 3, 1, {2, 0, 1, 0},
       std::vector<RatVec>{rv({2, -1, 0}), rv({0, -1, 2})}},       // {a1, a3}
      {"a3-case3", Family::A, 3, 1, {0, 0, 1, 2},
       std::vector<RatVec>{rv({-1, 0, -1}), rv({2, -1, 0})}},      // {-a1-a2-a3, a1}
      {"a3-outer", Family::A, 3, 2, {1, 1, 0},
       std::vector<RatVec>{rv({2, -1})}},                          // {gamma1}
      {"e6-outer", Family::E, 6, 2, {0, 1, 0, 0, 0}, std::nullopt},
  };
  return table;
}

const Preset* find_preset(const std::string& name) {
  for (const Preset& p : presets())
    if (p.name == name) return &p;
  return nullptr;
}

GradingBundle build_grading(Family family, int rank, int twist, const std::vector<int>& s,
                            const std::optional<std::vector<RatVec>>& delta0_override) {
  GradingBundle b;
  RootSystem rs(family, rank);
  b.algebra = std::make_unique<ChevalleyAlgebra>(rs);
  b.label = make_kac_label(family, rank, twist, s);
  b.sigma = std::make_unique<Automorphism>(automorphism_from_label(*b.algebra, b.label));
  GradedDecomposition d = automorphism_to_grading(*b.algebra, *b.sigma);
  b.decomp = std::make_unique<GradedDecomposition>(analyze_g0(std::move(d), delta0_override));
  b.poset = std::make_unique<WeightPoset>(*b.decomp);
  return b;
}

GradingBundle build_preset(const std::string& name) {
  const Preset* p = find_preset(name);
  if (!p) throw std::invalid_argument("unknown preset: " + name);
  return build_grading(p->family, p->rank, p->twist, p->label, p->delta0);
}

}  // namespace gb
