#include "gb/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gb {

namespace {

const AlgebraElement& weight_line(const WeightPoset& poset, size_t idx) {
  const GradedWeight& gw = poset.element(idx);
  for (const WeightSpace& ws : poset.decomposition().weights(gw.grade))
    if (ws.weight == gw.weight) return ws.vectors.at(0);
  throw std::logic_error("weight_line: poset element without a weight space");
}

RowSpan span_of(const std::vector<AlgebraElement>& vectors, size_t dim) {
  RowSpan span(dim);
  for (const AlgebraElement& v : vectors) span.insert(v.to_coords());
  return span;
}

}  // namespace

std::vector<AlgebraElement> CandidateSubspace::spanning_vectors() const {
  std::vector<AlgebraElement> out;
  for (size_t idx : selected) out.push_back(weight_line(*poset, idx));
  for (const AlgebraElement& v : extra) out.push_back(v);
  return out;
}

bool is_b0_module(const CandidateSubspace& c) {
  const GradedDecomposition& decomp = c.poset->decomposition();
  const ChevalleyAlgebra& alg = decomp.algebra();
  std::vector<AlgebraElement> vecs = c.spanning_vectors();
  RowSpan span = span_of(vecs, alg.dim());
  for (const AlgebraElement& b : decomp.borel())
    for (const AlgebraElement& v : vecs)
      if (!span.contains(alg.bracket(b, v).to_coords())) return false;
  return true;
}

bool is_subalgebra(const CandidateSubspace& c) {
  const ChevalleyAlgebra& alg = c.poset->decomposition().algebra();
  std::vector<AlgebraElement> vecs = c.spanning_vectors();
  RowSpan span = span_of(vecs, alg.dim());
  for (size_t i = 0; i < vecs.size(); ++i)
    for (size_t j = i + 1; j < vecs.size(); ++j)
      if (!span.contains(alg.bracket(vecs[i], vecs[j]).to_coords())) return false;
  return true;
}

bool is_k_nilpotent(const CandidateSubspace& c, unsigned k) {
  const ChevalleyAlgebra& alg = c.poset->decomposition().algebra();
  std::vector<AlgebraElement> vecs = c.spanning_vectors();
  // Left-nested brackets of k+1 spanning vectors, with pruning on zero
  // intermediates.
  auto rec = [&](auto&& self, const AlgebraElement& current, unsigned remaining) -> bool {
    if (current.is_zero()) return true;
    if (remaining == 0) return false;
    for (const AlgebraElement& u : vecs)
      if (!self(self, alg.bracket(u, current), remaining - 1)) return false;
    return true;
  };
  for (const AlgebraElement& w : vecs)
    if (!rec(rec, w, k)) return false;
  return true;
}

bool is_positively_graded(const CandidateSubspace& c) {
  const GradedDecomposition& decomp = c.poset->decomposition();
  std::vector<AlgebraElement> vecs = c.spanning_vectors();
  RowSpan span = span_of(vecs, decomp.algebra().dim());
  for (const AlgebraElement& v : vecs)
    for (const AlgebraElement& part : decomp.graded_projections(v))
      if (!part.is_zero() && !span.contains(part.to_coords())) return false;
  return true;
}

std::vector<Antichain> brute_force_classify(const WeightPoset& poset, unsigned k,
                                            Execution exec) {
  const size_t m = poset.size();
  if (m > 20)
    throw std::invalid_argument("brute_force_classify: poset too large for subset sweep");
  const size_t total = size_t{1} << m;

  std::vector<char> kept(total, 0);
  auto evaluate = [&](size_t mask) {
    CandidateSubspace c;
    c.poset = &poset;
    for (size_t b = 0; b < m; ++b)
      if (mask & (size_t{1} << b)) c.selected.push_back(b);
    kept[mask] = (is_b0_module(c) && is_subalgebra(c) && is_k_nilpotent(c, k) &&
                  is_positively_graded(c))
                     ? 1
                     : 0;
  };
  if (exec == Execution::parallel) {
#ifdef GB_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (long mask = 1; mask < static_cast<long>(total); ++mask) evaluate(mask);
  } else {
    for (size_t mask = 1; mask < total; ++mask) evaluate(mask);
  }

  std::vector<Antichain> result;
  std::map<Antichain, size_t> seen;
  for (size_t mask = 1; mask < total; ++mask) {
    if (!kept[mask]) continue;
    std::vector<size_t> subset;
    for (size_t b = 0; b < m; ++b)
      if (mask & (size_t{1} << b)) subset.push_back(b);
    // Kept subsets must be upward closed in the order.
    for (size_t e : subset)
      for (size_t f = 0; f < m; ++f)
        if (poset.leq_members(e, f) &&
            !std::binary_search(subset.begin(), subset.end(), f))
          throw std::logic_error("brute_force_classify: kept subset not upward closed");
    Antichain a = minimal_elements(poset, subset);
    auto [it, inserted] = seen.emplace(a, mask);
    if (!inserted)
      throw std::logic_error("brute_force_classify: antichain map is not injective");
    result.push_back(std::move(a));
  }
  std::sort(result.begin(), result.end(), [](const Antichain& a, const Antichain& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return result;
}

E2Report remark_e2_demo(const WeightPoset& poset) {
  const GradedDecomposition& decomp = poset.decomposition();
  const ChevalleyAlgebra& alg = decomp.algebra();

  for (size_t i = 0; i < poset.size(); ++i)
    for (size_t j = i + 1; j < poset.size(); ++j) {
      const GradedWeight& a = poset.element(i);
      const GradedWeight& b = poset.element(j);
      if (a.grade == b.grade || !(a.weight == b.weight)) continue;

      AlgebraElement v = weight_line(poset, i) + weight_line(poset, j);
      // Close under the Borel action.
      std::vector<AlgebraElement> module{v};
      RowSpan span(alg.dim());
      span.insert(v.to_coords());
      for (size_t next = 0; next < module.size(); ++next)
        for (const AlgebraElement& bb : decomp.borel()) {
          AlgebraElement w = alg.bracket(bb, module[next]);
          if (!w.is_zero() && span.insert(w.to_coords())) module.push_back(w);
        }

      CandidateSubspace c;
      c.poset = &poset;
      c.extra = module;

      E2Report report;
      report.weight = a.weight;
      report.grade_lo = std::min(a.grade, b.grade);
      report.grade_hi = std::max(a.grade, b.grade);
      report.module_dim = span.rank();
      report.summands_same_weight = true;
      report.b0_stable = is_b0_module(c);
      report.abelian = is_k_nilpotent(c, 1);
      report.positively_graded = is_positively_graded(c);
      if (report.b0_stable && report.abelian && !report.positively_graded) return report;
    }
  throw std::logic_error("remark_e2_demo: no non-graded abelian Borel module found");
}

}  // namespace gb
