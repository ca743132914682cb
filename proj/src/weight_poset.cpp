#include "gb/weight_poset.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace gb {

WeightPoset::WeightPoset(const GradedDecomposition& decomp) : decomp_(&decomp) {
  if (!decomp.analyzed())
    throw std::invalid_argument("WeightPoset: decomposition must be analyzed first");
  for (unsigned j = 1; j < decomp.modulus(); ++j)
    for (const WeightSpace& ws : decomp.weights(j)) {
      if (is_zero_vec(ws.weight)) continue;
      elements_.push_back(GradedWeight{ws.weight, j});
    }
  std::sort(elements_.begin(), elements_.end());
  const size_t m = elements_.size();
  leq_.assign(m * m, false);
  for (size_t a = 0; a < m; ++a)
    for (size_t b = 0; b < m; ++b) leq_[a * m + b] = leq(elements_[a], elements_[b]);
  // Partial-order sanity: antisymmetry and transitivity.
  for (size_t a = 0; a < m; ++a) {
    if (!leq_[a * m + a]) throw std::logic_error("WeightPoset: order not reflexive");
    for (size_t b = 0; b < m; ++b) {
      if (a != b && leq_[a * m + b] && leq_[b * m + a])
        throw std::logic_error("WeightPoset: order not antisymmetric");
      if (!leq_[a * m + b]) continue;
      for (size_t c = 0; c < m; ++c)
        if (leq_[b * m + c] && !leq_[a * m + c])
          throw std::logic_error("WeightPoset: order not transitive");
    }
  }
}

int WeightPoset::index_of(const GradedWeight& w) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), w);
  if (it == elements_.end() || !(*it == w)) return -1;
  return static_cast<int>(it - elements_.begin());
}

bool WeightPoset::leq(const GradedWeight& a, const GradedWeight& b) const {
  if (a.grade % modulus() != b.grade % modulus()) return false;
  return solve_nonneg_integer(decomp_->delta0(), sub(b.weight, a.weight)).has_value();
}

std::vector<RatVec> WeightPoset::g0_highest_roots() const {
  std::vector<RatVec> out;
  for (const G0Factor& f : decomp_->factors()) out.push_back(f.highest_root);
  return out;
}

bool WeightPoset::is_component_weight(const RatVec& mu, unsigned j) const {
  for (const WeightSpace& ws : decomp_->weights(j))
    if (ws.weight == mu) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Antichain enumeration
// ---------------------------------------------------------------------------

void for_each_antichain(const WeightPoset& poset,
                        const std::function<void(const Antichain&)>& fn) {
  const size_t m = poset.size();
  Antichain current;
  auto comparable = [&](size_t a, size_t b) {
    return poset.leq_members(a, b) || poset.leq_members(b, a);
  };
  auto rec = [&](auto&& self, size_t next) -> void {
    if (!current.empty()) fn(current);
    for (size_t e = next; e < m; ++e) {
      bool ok = true;
      for (size_t chosen : current)
        if (comparable(chosen, e)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      current.push_back(e);
      self(self, e + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
}

std::vector<Antichain> all_antichains(const WeightPoset& poset) {
  std::vector<Antichain> out;
  for_each_antichain(poset, [&](const Antichain& a) { out.push_back(a); });
  return out;
}

// ---------------------------------------------------------------------------
// Classification conditions
// ---------------------------------------------------------------------------

namespace {

// Visits multisets of the given size from the antichain (indices may repeat).
void for_each_multiset(const Antichain& a, unsigned size,
                       const std::function<void(const std::vector<size_t>&)>& fn) {
  std::vector<size_t> pick;
  auto rec = [&](auto&& self, size_t from) -> void {
    if (pick.size() == size) {
      fn(pick);
      return;
    }
    for (size_t i = from; i < a.size(); ++i) {
      pick.push_back(a[i]);
      self(self, i);
      pick.pop_back();
    }
  };
  rec(rec, 0);
}

GradedWeight multiset_sum(const WeightPoset& poset, const std::vector<size_t>& pick) {
  GradedWeight sum{RatVec(poset.decomposition().h0().size(), Rational(0)), 0};
  for (size_t idx : pick) {
    sum.weight = add(sum.weight, poset.element(idx).weight);
    sum.grade = (sum.grade + poset.element(idx).grade) % poset.modulus();
  }
  return sum;
}

}  // namespace

bool check_condition_i(const WeightPoset& poset, const Antichain& a, unsigned k) {
  bool ok = true;
  for_each_multiset(a, k + 1, [&](const std::vector<size_t>& pick) {
    if (!ok) return;
    GradedWeight sum = multiset_sum(poset, pick);
    if (sum.grade == 0) return;  // delegated to condition (ii)
    for (const RatVec& lambda : poset.highest_weights(sum.grade))
      if (poset.leq(sum, GradedWeight{lambda, sum.grade})) {
        ok = false;
        return;
      }
  });
  return ok;
}

bool check_condition_ii(const WeightPoset& poset, const Antichain& a, unsigned k,
                        unsigned zero_sum_bound) {
  const unsigned bound = zero_sum_bound == 0 ? k + 1 : zero_sum_bound;
  std::vector<RatVec> thetas = poset.g0_highest_roots();
  bool ok = true;
  for (unsigned m = 2; m <= bound && ok; ++m) {
    for_each_multiset(a, m, [&](const std::vector<size_t>& pick) {
      if (!ok) return;
      GradedWeight sum = multiset_sum(poset, pick);
      if (sum.grade != 0) return;
      for (const RatVec& theta : thetas)
        if (poset.leq(sum, GradedWeight{theta, 0})) {
          ok = false;
          return;
        }
    });
  }
  return ok;
}

bool check_condition_iii(const WeightPoset& poset, const Antichain& a) {
  for (size_t x = 0; x < a.size(); ++x)
    for (size_t y = x; y < a.size(); ++y) {
      GradedWeight sum = multiset_sum(poset, {a[x], a[y]});
      for (size_t v = 0; v < poset.size(); ++v) {
        if (poset.element(v).grade != sum.grade) continue;
        if (!poset.leq(sum, poset.element(v))) continue;
        bool witnessed = false;
        for (size_t c : a)
          if (poset.leq_members(c, v)) {
            witnessed = true;
            break;
          }
        if (!witnessed) return false;
      }
    }
  return true;
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

namespace {

std::vector<Antichain> filter_antichains(const WeightPoset& poset, Execution exec,
                                         const std::function<bool(const Antichain&)>& keep) {
  std::vector<Antichain> candidates = all_antichains(poset);
  std::vector<char> kept(candidates.size(), 0);
  if (exec == Execution::parallel) {
#ifdef GB_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long i = 0; i < static_cast<long>(candidates.size()); ++i)
      kept[i] = keep(candidates[i]) ? 1 : 0;
  } else {
    for (size_t i = 0; i < candidates.size(); ++i) kept[i] = keep(candidates[i]) ? 1 : 0;
  }
  std::vector<Antichain> out;
  for (size_t i = 0; i < candidates.size(); ++i)
    if (kept[i]) out.push_back(std::move(candidates[i]));
  std::sort(out.begin(), out.end(), [](const Antichain& a, const Antichain& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace

std::vector<Antichain> classify_antichains(const WeightPoset& poset, unsigned k,
                                           Execution exec, unsigned zero_sum_bound) {
  if (k < 1) throw std::invalid_argument("classify_antichains: k must be >= 1");
  return filter_antichains(poset, exec, [&](const Antichain& a) {
    return check_condition_i(poset, a, k) && check_condition_ii(poset, a, k, zero_sum_bound) &&
           check_condition_iii(poset, a);
  });
}

std::vector<Antichain> classify_abelian_c2(const WeightPoset& poset, Execution exec) {
  std::vector<RatVec> thetas = poset.g0_highest_roots();
  return filter_antichains(poset, exec, [&](const Antichain& a) {
    for (size_t x = 0; x < a.size(); ++x)
      for (size_t y = x; y < a.size(); ++y) {
        GradedWeight sum = multiset_sum(poset, {a[x], a[y]});
        if (sum.grade == 0) {
          for (const RatVec& theta : thetas)
            if (poset.leq(sum, GradedWeight{theta, 0})) return false;
        } else {
          for (const RatVec& lambda : poset.highest_weights(sum.grade))
            if (poset.leq(sum, GradedWeight{lambda, sum.grade})) return false;
        }
      }
    return true;
  });
}

// ---------------------------------------------------------------------------
// Closures and subalgebra bases
// ---------------------------------------------------------------------------

std::vector<size_t> upward_closure(const WeightPoset& poset, const Antichain& a) {
  std::vector<size_t> out;
  for (size_t e = 0; e < poset.size(); ++e)
    for (size_t gen : a)
      if (poset.leq_members(gen, e)) {
        out.push_back(e);
        break;
      }
  return out;
}

Antichain minimal_elements(const WeightPoset& poset, const std::vector<size_t>& subset) {
  Antichain out;
  for (size_t e : subset) {
    bool minimal = true;
    for (size_t f : subset)
      if (f != e && poset.leq_members(f, e)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AlgebraElement> subalgebra_basis_from_antichain(const WeightPoset& poset,
                                                            const Antichain& a) {
  const GradedDecomposition& decomp = poset.decomposition();
  std::vector<AlgebraElement> basis;
  for (size_t e : upward_closure(poset, a)) {
    const GradedWeight& gw = poset.element(e);
    for (const WeightSpace& ws : decomp.weights(gw.grade))
      if (ws.weight == gw.weight)
        for (const AlgebraElement& v : ws.vectors) basis.push_back(v);
  }
  return basis;
}

// ---------------------------------------------------------------------------
// Witness search
// ---------------------------------------------------------------------------

std::vector<GradedWeight> p2_witness(const WeightPoset& poset,
                                     const std::vector<GradedWeight>& betas,
                                     const GradedWeight& lambda) {
  const GradedDecomposition& decomp = poset.decomposition();
  if (betas.empty()) throw std::invalid_argument("p2_witness: empty input");
  // Membership in R_j: all weights of g_j for j != 0, nonzero weights of g_0.
  auto in_r = [&](const RatVec& mu, unsigned j) {
    if (j % poset.modulus() == 0 && is_zero_vec(mu)) return false;
    return poset.is_component_weight(mu, j);
  };
  unsigned t = 0;
  for (const GradedWeight& b : betas) {
    t = (t + b.grade) % poset.modulus();
    if (!in_r(b.weight, b.grade))
      throw std::invalid_argument("p2_witness: beta is not a weight of its component");
  }
  if (t != lambda.grade % poset.modulus() || !in_r(lambda.weight, lambda.grade))
    throw std::invalid_argument("p2_witness: lambda is not a weight of the summed grade");

  auto sum_of = [&](const std::vector<GradedWeight>& ws) {
    RatVec s(decomp.h0().size(), Rational(0));
    for (const GradedWeight& w : ws) s = add(s, w.weight);
    return s;
  };
  if (!poset.leq(GradedWeight{sum_of(betas), t}, lambda))
    throw std::invalid_argument("p2_witness: precondition sum(betas) <= lambda fails");

  std::deque<std::vector<GradedWeight>> queue{betas};
  std::set<std::vector<std::pair<std::string, unsigned>>> seen;
  auto key_of = [](const std::vector<GradedWeight>& ws) {
    std::vector<std::pair<std::string, unsigned>> key;
    for (const GradedWeight& w : ws) key.emplace_back(to_string(w.weight), w.grade);
    return key;
  };
  seen.insert(key_of(betas));

  while (!queue.empty()) {
    std::vector<GradedWeight> state = queue.front();
    queue.pop_front();
    RatVec s = sum_of(state);
    if (in_r(s, t)) return state;  // sum <= lambda holds by the push invariant
    for (size_t pos = 0; pos < state.size(); ++pos)
      for (const RatVec& delta : decomp.delta0()) {
        RatVec raised = add(state[pos].weight, delta);
        if (!in_r(raised, state[pos].grade)) continue;
        // The gap to lambda must stay in the positive cone.
        if (!poset.leq(GradedWeight{add(s, delta), t}, lambda)) continue;
        std::vector<GradedWeight> next = state;
        next[pos].weight = raised;
        auto key = key_of(next);
        if (seen.insert(key).second) queue.push_back(std::move(next));
      }
  }
  throw std::logic_error("p2_witness: no witness found");
}

}  // namespace gb
