#include "gb/grading.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gb {

namespace {

int gcd_all(const std::vector<int>& v) {
  int g = 0;
  for (int x : v) g = std::gcd(g, x);
  return g;
}

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> ps;
  for (unsigned p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace

KacLabel make_kac_label(Family family, int rank, int twist, std::vector<int> s) {
  AffineDiagram diagram(family, rank, twist);
  if (s.size() != diagram.nodes())
    throw std::invalid_argument("KacLabel: expected " + std::to_string(diagram.nodes()) +
                                " components, got " + std::to_string(s.size()));
  for (int x : s)
    if (x < 0) throw std::invalid_argument("KacLabel: negative component");
  if (gcd_all(s) != 1) throw std::invalid_argument("KacLabel: components must be coprime");
  long n = 0;
  for (size_t i = 0; i < s.size(); ++i) n += static_cast<long>(diagram.marks()[i]) * s[i];
  n *= twist;
  if (n < 1) throw std::invalid_argument("KacLabel: derived order must be positive");
  return KacLabel{family, rank, twist, std::move(s), static_cast<unsigned>(n)};
}

std::vector<int> canonical_label(const AffineDiagram& diagram, const std::vector<int>& s) {
  std::vector<int> best = s;
  for (const auto& pi : diagram.automorphisms()) {
    std::vector<int> image(s.size());
    for (size_t i = 0; i < s.size(); ++i) image[i] = s[pi[i]];
    if (image < best) best = image;
  }
  return best;
}

std::vector<KacLabel> enumerate_kac_labels(Family family, int rank, unsigned n, int twist) {
  AffineDiagram diagram(family, rank, twist);
  if (n == 0 || n % twist != 0) return {};
  const long target = n / twist;
  const size_t k = diagram.nodes();
  std::set<std::vector<int>> canonical;
  std::vector<int> s(k, 0);
  // Enumerate sum a_i s_i = target directly; marks bound every component.
  auto rec = [&](auto&& self, size_t i, long remaining) -> void {
    if (i + 1 == k) {
      if (remaining % diagram.marks()[i] != 0) return;
      s[i] = static_cast<int>(remaining / diagram.marks()[i]);
      if (gcd_all(s) == 1) canonical.insert(canonical_label(diagram, s));
      s[i] = 0;
      return;
    }
    for (long v = 0; v * diagram.marks()[i] <= remaining; ++v) {
      s[i] = static_cast<int>(v);
      self(self, i + 1, remaining - v * diagram.marks()[i]);
    }
    s[i] = 0;
  };
  rec(rec, 0, target);
  std::vector<KacLabel> out;
  for (const auto& rep : canonical) out.push_back(make_kac_label(family, rank, twist, rep));
  return out;
}

// ---------------------------------------------------------------------------
// Automorphisms
// ---------------------------------------------------------------------------

AlgebraElement Automorphism::apply(const AlgebraElement& v) const {
  AlgebraElement out = algebra->zero();
  for (const auto& [j, c] : v.coeff)
    for (size_t i = 0; i < algebra->dim(); ++i) {
      const Cyclotomic& m = matrix.at(i, j);
      if (m.is_zero()) continue;
      auto it = out.coeff.find(static_cast<int>(i));
      Cyclotomic add = m * c;
      if (it == out.coeff.end()) {
        if (!add.is_zero()) out.coeff.emplace(static_cast<int>(i), add);
      } else {
        it->second += add;
        if (it->second.is_zero()) out.coeff.erase(it);
      }
    }
  return out;
}

void verify_automorphism(const Automorphism& sigma) {
  const ChevalleyAlgebra& alg = *sigma.algebra;
  const size_t d = alg.dim();

  // Bracket preservation on all basis pairs.
  std::vector<AlgebraElement> images;
  images.reserve(d);
  for (size_t i = 0; i < d; ++i) images.push_back(sigma.apply(alg.basis_element(i)));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = i + 1; j < d; ++j) {
      AlgebraElement lhs = alg.zero();
      for (const auto& [t, c] : alg.bracket_basis(i, j)) lhs += images[t].scaled(Cyclotomic(c));
      AlgebraElement rhs = alg.bracket(images[i], images[j]);
      if (!(lhs == rhs))
        throw std::logic_error("automorphism verification: bracket not preserved on (" +
                               alg.basis_name(i) + ", " + alg.basis_name(j) + ")");
    }
  // Exact order: sigma^n = id and sigma^(n/p) != id for primes p | n.
  const unsigned n = sigma.order;
  std::vector<ExactMatrix> powers;  // powers[k] = sigma^(k+1)
  powers.push_back(sigma.matrix);
  for (unsigned k = 2; k <= n; ++k) powers.push_back(powers.back() * sigma.matrix);
  const ExactMatrix id = ExactMatrix::identity(d);
  if (!(powers[n - 1] == id))
    throw std::logic_error("automorphism verification: sigma^n is not the identity");
  for (unsigned p : prime_divisors(n))
    if (powers[n / p - 1] == id)
      throw std::logic_error("automorphism verification: order strictly divides n");
}

namespace {

// Degree of a root under an inner label: sum k_i s_i mod n.
unsigned inner_degree(const KacLabel& label, const RootVec& r) {
  long deg = 0;
  for (size_t i = 0; i < r.size(); ++i) deg += static_cast<long>(r[i]) * label.s[i + 1];
  deg %= static_cast<long>(label.n);
  if (deg < 0) deg += label.n;
  return static_cast<unsigned>(deg);
}

Automorphism inner_automorphism(const ChevalleyAlgebra& alg, const KacLabel& label) {
  const size_t d = alg.dim();
  ExactMatrix m(d, d);
  for (size_t i = 0; i < d; ++i) {
    if (alg.is_cartan_index(static_cast<int>(i)))
      m.at(i, i) = Cyclotomic(1);
    else
      m.at(i, i) = Cyclotomic::zeta(label.n, inner_degree(label, alg.root_of_index(i)));
  }
  return Automorphism{&alg, std::move(m), label.n};
}

// The involution of the finite diagram induced by tau on simple roots,
// extended through structure constants: the image of x_gamma for
// gamma = eps + eta is [image(eps), image(eta)] / N_{eps,eta}.
std::vector<AlgebraElement> diagram_involution_images(const ChevalleyAlgebra& alg,
                                                      const std::vector<int>& tau) {
  const RootSystem& rs = alg.roots();
  const int rank = rs.rank();
  std::vector<AlgebraElement> img(alg.dim());
  for (int i = 0; i < rank; ++i) {
    AlgebraElement h = alg.zero();
    h.coeff[alg.index_of_cartan(tau[i])] = Cyclotomic(1);
    img[alg.index_of_cartan(i)] = h;
  }
  for (int sign : {1, -1}) {
    for (const RootVec& gamma : rs.positive_roots()) {
      RootVec g = gamma;
      for (int& k : g) k *= sign;
      const int idx = alg.index_of_root(g);
      if (height(gamma) == 1) {
        int node = 0;
        while (gamma[node] == 0) ++node;
        RootVec image_root(rank, 0);
        image_root[tau[node]] = sign;
        img[idx] = alg.basis_element(alg.index_of_root(image_root));
        continue;
      }
      // Split off any root summand already processed (heights are increasing).
      bool done = false;
      for (const RootVec& alpha : rs.positive_roots()) {
        if (height(alpha) >= height(gamma)) break;
        RootVec a = alpha, b(rank);
        for (int& k : a) k *= sign;
        for (int t = 0; t < rank; ++t) b[t] = g[t] - a[t];
        if (!rs.is_root(b)) continue;
        const long n = alg.structure_constant(a, b);
        if (n == 0) continue;
        AlgebraElement br = alg.bracket(img[alg.index_of_root(a)], img[alg.index_of_root(b)]);
        img[idx] = br.scaled(Cyclotomic(rat(1, n)));
        done = true;
        break;
      }
      if (!done) throw std::logic_error("diagram involution: no decomposition found");
    }
  }
  return img;
}

Automorphism outer_automorphism(const ChevalleyAlgebra& alg, const KacLabel& label) {
  const RootSystem& rs = alg.roots();
  const int rank = rs.rank();
  if (label.family == Family::A && rank % 2 == 0)
    throw std::invalid_argument(
        "automorphism_from_label: outer labels of even-rank type A are not supported");
  AffineDiagram diagram(label.family, rank, 2);

  // tau from the node orbits of the twisted diagram.
  std::vector<int> tau(rank, -1);
  for (const auto& orbit : diagram.node_orbits()) {
    if (orbit.size() == 1) {
      tau[orbit[0]] = orbit[0];
    } else {
      tau[orbit[0]] = orbit[1];
      tau[orbit[1]] = orbit[0];
    }
  }

  std::vector<AlgebraElement> omega = diagram_involution_images(alg, tau);

  // Torus exponents per simple root: the orbit of twisted node j scales by
  // zeta^{s_j}, which forces m_i = s_j on every orbit member.
  const unsigned n = label.n;
  std::vector<long> m(rank, 0);
  for (size_t node = 1; node < diagram.nodes(); ++node)
    for (int i : diagram.node_orbits()[node - 1]) m[i] = label.s[node];

  auto phase = [&](const RootVec& r) {
    long e = 0;
    for (int i = 0; i < rank; ++i) e += m[i] * r[i];
    return Cyclotomic::zeta(n, e);
  };

  const size_t d = alg.dim();
  ExactMatrix mat(d, d);
  for (size_t col = 0; col < d; ++col) {
    for (const auto& [row, c] : omega[col].coeff) {
      Cyclotomic scale =
          alg.is_cartan_index(row) ? Cyclotomic(1) : phase(alg.root_of_index(row));
      mat.at(row, col) = scale * c;
    }
  }
  Automorphism sigma{&alg, std::move(mat), n};

  // The affine generator: lowest-weight vector of the (-1)-eigenspace of the
  // involution as a module over the fixed subalgebra.
  ExactMatrix w_plus_id(d, d);
  for (size_t col = 0; col < d; ++col)
    for (const auto& [row, c] : omega[col].coeff) w_plus_id.at(row, col) = c;
  for (size_t i = 0; i < d; ++i) w_plus_id.at(i, i) += Cyclotomic(1);
  std::vector<CycVec> anti = kernel_basis(w_plus_id);
  if (anti.empty()) throw std::logic_error("outer automorphism: empty odd part");

  std::vector<AlgebraElement> lowering;
  for (const auto& orbit : diagram.node_orbits()) {
    AlgebraElement f = alg.zero();
    for (int i : orbit) {
      RootVec neg(rank, 0);
      neg[i] = -1;
      f += alg.basis_element(alg.index_of_root(neg));
    }
    lowering.push_back(f);
  }
  ExactMatrix stacked(lowering.size() * d, anti.size());
  for (size_t k = 0; k < anti.size(); ++k) {
    AlgebraElement v = alg.element_from_coords(anti[k]);
    for (size_t f = 0; f < lowering.size(); ++f) {
      CycVec b = alg.bracket(lowering[f], v).to_coords();
      for (size_t i = 0; i < d; ++i) stacked.at(f * d + i, k) = b[i];
    }
  }
  std::vector<CycVec> lowest = kernel_basis(stacked);
  if (lowest.size() != 1)
    throw std::logic_error("outer automorphism: lowest-weight space is not a line");
  AlgebraElement e0 = alg.zero();
  for (size_t k = 0; k < anti.size(); ++k)
    if (!lowest[0][k].is_zero())
      e0 += alg.element_from_coords(anti[k]).scaled(lowest[0][k]);

  // sigma(E_0) = zeta^{s_0} E_0 must follow from the torus congruences.
  AlgebraElement expect = e0.scaled(Cyclotomic::zeta(n, label.s[0]));
  if (!(sigma.apply(e0) == expect))
    throw std::logic_error("outer automorphism: affine generator eigenvalue mismatch");
  // Finite twisted generators scale by zeta^{s_j} by construction; check anyway.
  for (size_t node = 1; node < diagram.nodes(); ++node) {
    AlgebraElement e = alg.zero();
    for (int i : diagram.node_orbits()[node - 1]) {
      RootVec simple(rank, 0);
      simple[i] = 1;
      e += alg.basis_element(alg.index_of_root(simple));
    }
    if (!(sigma.apply(e) == e.scaled(Cyclotomic::zeta(n, label.s[node]))))
      throw std::logic_error("outer automorphism: twisted generator eigenvalue mismatch");
  }
  return sigma;
}

}  // namespace

Automorphism automorphism_from_label(const ChevalleyAlgebra& alg, const KacLabel& label) {
  if (family_to_char(label.family) != family_to_char(alg.roots().family()) ||
      label.rank != alg.roots().rank())
    throw std::invalid_argument("automorphism_from_label: label type does not match algebra");
  Automorphism sigma =
      label.twist == 1 ? inner_automorphism(alg, label) : outer_automorphism(alg, label);
  verify_automorphism(sigma);
  return sigma;
}

// ---------------------------------------------------------------------------
// Graded decompositions
// ---------------------------------------------------------------------------

const std::vector<AlgebraElement>& GradedDecomposition::component(unsigned j) const {
  return comps_.at(j % n_);
}

const std::vector<WeightSpace>& GradedDecomposition::weights(unsigned j) const {
  return weight_tables_.at(j % n_);
}

bool GradedDecomposition::component_contains(unsigned j, const AlgebraElement& v) const {
  std::vector<AlgebraElement> proj = graded_projections(v);
  for (unsigned t = 0; t < n_; ++t)
    if (t != j % n_ && !proj[t].is_zero()) return false;
  return true;
}

std::vector<AlgebraElement> GradedDecomposition::graded_projections(
    const AlgebraElement& v) const {
  const size_t d = alg_->dim();
  // coords_ * v expresses v over the stacked graded basis.
  CycVec c(d, Cyclotomic(0));
  for (const auto& [j, val] : v.coeff)
    for (size_t i = 0; i < d; ++i) {
      const Cyclotomic& m = coords_.at(i, j);
      if (!m.is_zero()) c[i] += m * val;
    }
  std::vector<AlgebraElement> out;
  for (unsigned j = 0; j < n_; ++j) {
    AlgebraElement part = alg_->zero();
    for (size_t k = 0; k < comps_[j].size(); ++k) {
      const Cyclotomic& coeff = c[block_offset_[j] + k];
      if (!coeff.is_zero()) part += comps_[j][k].scaled(coeff);
    }
    out.push_back(std::move(part));
  }
  return out;
}

const std::vector<RatVec>& GradedDecomposition::delta0() const {
  if (!analyzed_) throw std::logic_error("GradedDecomposition: not analyzed");
  return delta0_;
}
const std::vector<RatVec>& GradedDecomposition::positive_g0_roots() const {
  if (!analyzed_) throw std::logic_error("GradedDecomposition: not analyzed");
  return positive_roots_;
}
const std::vector<AlgebraElement>& GradedDecomposition::borel() const {
  if (!analyzed_) throw std::logic_error("GradedDecomposition: not analyzed");
  return borel_;
}
const std::vector<AlgebraElement>& GradedDecomposition::raising() const {
  if (!analyzed_) throw std::logic_error("GradedDecomposition: not analyzed");
  return raising_;
}
const std::vector<G0Factor>& GradedDecomposition::factors() const {
  if (!analyzed_) throw std::logic_error("GradedDecomposition: not analyzed");
  return factors_;
}
const std::vector<RatVec>& GradedDecomposition::highest_weights(unsigned j) const {
  if (!analyzed_) throw std::logic_error("GradedDecomposition: not analyzed");
  if (j % n_ == 0) throw std::invalid_argument("highest_weights: grade must be nonzero");
  return highest_weights_.at(j % n_);
}

namespace {

// Rational eigenvalue candidates for ad(h) on the algebra: root values plus 0.
std::set<Rational> eigenvalue_candidates(const ChevalleyAlgebra& alg,
                                         const AlgebraElement& h) {
  std::set<Rational> cands;
  cands.insert(Rational(0));
  const RootSystem& rs = alg.roots();
  for (const RootVec& r : rs.positive_roots()) {
    Rational v(0);
    for (const auto& [idx, c] : h.coeff) {
      const int i = idx - static_cast<int>(alg.num_positive());
      if (!c.is_rational()) throw std::logic_error("weight computation: h0 not rational");
      v += c.rational_value() * rs.pairing(r, i);
    }
    cands.insert(v);
    cands.insert(-v);
  }
  return cands;
}

}  // namespace

void GradedDecomposition::finalize() {
  const ChevalleyAlgebra& alg = *alg_;
  const size_t d = alg.dim();

  size_t total = 0;
  block_offset_.assign(n_, 0);
  for (unsigned j = 0; j < n_; ++j) {
    block_offset_[j] = total;
    total += comps_[j].size();
  }
  if (total != d)
    throw std::logic_error("grading: component dimensions do not sum to dim g");

  // Invert the stacked basis matrix for exact graded projections.
  ExactMatrix aug(d, 2 * d);
  for (unsigned j = 0; j < n_; ++j)
    for (size_t k = 0; k < comps_[j].size(); ++k) {
      CycVec col = comps_[j][k].to_coords();
      for (size_t i = 0; i < d; ++i) aug.at(i, block_offset_[j] + k) = col[i];
    }
  for (size_t i = 0; i < d; ++i) aug.at(i, d + i) = Cyclotomic(1);
  if (aug.rref().size() != d)
    throw std::logic_error("grading: graded components are not independent");
  coords_ = ExactMatrix(d, d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) coords_.at(i, j) = aug.at(i, d + j);

  // Compatibility: [g_i, g_j] lands in g_{i+j}.
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned j = i; j < n_; ++j)
      for (const AlgebraElement& u : comps_[i])
        for (const AlgebraElement& v : comps_[j]) {
          AlgebraElement w = alg.bracket(u, v);
          if (w.is_zero()) continue;
          std::vector<AlgebraElement> proj = graded_projections(w);
          for (unsigned t = 0; t < n_; ++t)
            if (t != (i + j) % n_ && !proj[t].is_zero())
              throw std::logic_error("grading: bracket escapes its graded component");
        }

  // h0 = h cap g0: combinations of the g0 basis with no root-vector support.
  {
    std::vector<size_t> root_cols;
    for (size_t i = 0; i < d; ++i)
      if (alg.is_root_index(static_cast<int>(i))) root_cols.push_back(i);
    const size_t d0 = comps_[0].size();
    ExactMatrix restricted(root_cols.size(), d0);
    std::vector<CycVec> g0_rows;
    for (size_t k = 0; k < d0; ++k) {
      g0_rows.push_back(comps_[0][k].to_coords());
      for (size_t rc = 0; rc < root_cols.size(); ++rc)
        restricted.at(rc, k) = g0_rows[k][root_cols[rc]];
    }
    std::vector<CycVec> combos;
    for (const CycVec& kv : kernel_basis(restricted)) {
      CycVec vec(d, Cyclotomic(0));
      for (size_t k = 0; k < d0; ++k)
        if (!kv[k].is_zero())
          for (size_t t = 0; t < d; ++t) vec[t] += kv[k] * g0_rows[k][t];
      combos.push_back(std::move(vec));
    }
    h0_.clear();
    for (const auto& r : echelon_span(combos)) h0_.push_back(alg.element_from_coords(r));
  }

  // Weight tables: simultaneous ad(h0) eigenspaces per component.
  weight_tables_.assign(n_, {});
  for (unsigned j = 0; j < n_; ++j) {
    struct Block {
      std::vector<CycVec> rows;  // echelon basis in g coordinates
      RatVec weight_so_far;
    };
    std::vector<Block> blocks;
    {
      std::vector<CycVec> rows;
      for (const AlgebraElement& v : comps_[j]) rows.push_back(v.to_coords());
      if (rows.empty()) continue;
      blocks.push_back({rows, {}});
    }
    for (const AlgebraElement& h : h0_) {
      std::set<Rational> cands = eigenvalue_candidates(alg, h);
      std::vector<Block> refined;
      for (Block& blk : blocks) {
        RowSpan span(blk.rows);
        const size_t bd = blk.rows.size();
        // ad(h) in block coordinates.
        ExactMatrix action(bd, bd);
        for (size_t k = 0; k < bd; ++k) {
          AlgebraElement img = alg.bracket(h, alg.element_from_coords(blk.rows[k]));
          CycVec residue = img.to_coords();
          // Coordinates over the echelon rows: in RREF these are the pivot
          // entries of the residue as the rows are subtracted off.
          CycVec coords(bd, Cyclotomic(0));
          for (size_t rrow = 0; rrow < bd; ++rrow) {
            size_t piv = 0;
            while (piv < residue.size() && blk.rows[rrow][piv].is_zero()) ++piv;
            coords[rrow] = residue[piv];
            if (!coords[rrow].is_zero())
              for (size_t t = piv; t < residue.size(); ++t)
                residue[t] -= coords[rrow] * blk.rows[rrow][t];
          }
          for (const auto& x : residue)
            if (!x.is_zero())
              throw std::logic_error("weight computation: ad(h0) does not preserve block");
          for (size_t i = 0; i < bd; ++i) action.at(i, k) = coords[i];
        }
        size_t found = 0;
        for (const Rational& c : cands) {
          ExactMatrix shifted = action;
          for (size_t i = 0; i < bd; ++i) shifted.at(i, i) -= Cyclotomic(c);
          std::vector<CycVec> ker = kernel_basis(shifted);
          if (ker.empty()) continue;
          std::vector<CycVec> sub;
          for (const auto& kv : ker) {
            CycVec vec(alg.dim(), Cyclotomic(0));
            for (size_t k = 0; k < bd; ++k)
              if (!kv[k].is_zero())
                for (size_t t = 0; t < alg.dim(); ++t) vec[t] += kv[k] * blk.rows[k][t];
            sub.push_back(std::move(vec));
          }
          Block nb;
          nb.rows = echelon_span(sub);
          nb.weight_so_far = blk.weight_so_far;
          nb.weight_so_far.push_back(c);
          found += nb.rows.size();
          refined.push_back(std::move(nb));
        }
        if (found != bd)
          throw std::logic_error("weight computation: ad(h0) not diagonalizable on block");
      }
      blocks = std::move(refined);
    }
    std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
      return lex_compare(a.weight_so_far, b.weight_so_far) < 0;
    });
    for (const Block& blk : blocks) {
      WeightSpace ws;
      ws.weight = blk.weight_so_far;
      if (ws.weight.empty()) ws.weight.assign(h0_.size(), Rational(0));
      for (const auto& r : blk.rows) ws.vectors.push_back(alg.element_from_coords(r));
      // Nonzero weights in nonzero grades span a line.
      if (j != 0 && !is_zero_vec(ws.weight) && ws.vectors.size() != 1)
        throw std::logic_error("weight computation: nonzero weight space not 1-dimensional");
      weight_tables_[j].push_back(std::move(ws));
    }
  }
}

GradedDecomposition automorphism_to_grading(const ChevalleyAlgebra& alg,
                                            const Automorphism& sigma) {
  if (sigma.algebra != &alg)
    throw std::invalid_argument("automorphism_to_grading: algebra mismatch");
  GradedDecomposition decomp;
  decomp.alg_ = &alg;
  decomp.n_ = sigma.order;
  decomp.comps_.resize(sigma.order);
  for (unsigned j = 0; j < sigma.order; ++j) {
    ExactMatrix shifted = sigma.matrix;
    const Cyclotomic z = Cyclotomic::zeta(sigma.order, j);
    for (size_t i = 0; i < alg.dim(); ++i) shifted.at(i, i) -= z;
    for (const CycVec& v : kernel_basis(shifted))
      decomp.comps_[j].push_back(alg.element_from_coords(v));
  }
  decomp.finalize();
  return decomp;
}

Automorphism grading_to_automorphism(const ChevalleyAlgebra& alg,
                                     const GradedDecomposition& decomp) {
  if (&decomp.algebra() != &alg)
    throw std::invalid_argument("grading_to_automorphism: algebra mismatch");
  const size_t d = alg.dim();
  ExactMatrix m(d, d);
  for (size_t col = 0; col < d; ++col) {
    AlgebraElement v = alg.basis_element(static_cast<int>(col));
    std::vector<AlgebraElement> proj = decomp.graded_projections(v);
    AlgebraElement img = alg.zero();
    for (unsigned j = 0; j < decomp.modulus(); ++j)
      img += proj[j].scaled(Cyclotomic::zeta(decomp.modulus(), j));
    for (const auto& [row, c] : img.coeff) m.at(row, col) = c;
  }
  Automorphism sigma{&alg, std::move(m), decomp.modulus()};
  verify_automorphism(sigma);
  return sigma;
}

// ---------------------------------------------------------------------------
// Borel analysis
// ---------------------------------------------------------------------------

GradedDecomposition analyze_g0(GradedDecomposition decomp,
                               const std::optional<std::vector<RatVec>>& delta0_override) {
  const ChevalleyAlgebra& alg = decomp.algebra();

  // Self-centralizing check: the zero-weight space of g0 must be exactly h0.
  {
    size_t zero_dim = 0;
    for (const WeightSpace& ws : decomp.weights(0))
      if (is_zero_vec(ws.weight)) zero_dim += ws.vectors.size();
    if (zero_dim != decomp.h0().size())
      throw std::logic_error("analyze_g0: h0 is not self-centralizing in g0");
  }

  // Nonzero weights of g0 are its roots; each space must be a line.
  std::vector<RatVec> roots;
  std::map<RatVec, AlgebraElement> root_vector;
  for (const WeightSpace& ws : decomp.weights(0)) {
    if (is_zero_vec(ws.weight)) continue;
    if (ws.vectors.size() != 1)
      throw std::logic_error("analyze_g0: g0 root space not 1-dimensional");
    roots.push_back(ws.weight);
    root_vector.emplace(ws.weight, ws.vectors[0]);
  }

  std::vector<RatVec> delta0, positives;
  if (delta0_override.has_value()) {
    delta0 = *delta0_override;
    for (const RatVec& dlt : delta0)
      if (!root_vector.count(dlt))
        throw std::invalid_argument("analyze_g0: override functional is not a g0 root");
    for (const RatVec& r : roots) {
      const bool pos = solve_nonneg_integer(delta0, r).has_value();
      const bool neg = solve_nonneg_integer(delta0, negate(r)).has_value();
      if (pos == neg)
        throw std::invalid_argument("analyze_g0: override is not a simple system");
      if (pos) positives.push_back(r);
    }
  } else {
    // Default rule: positivity by lexicographic sign of the value-list.
    for (const RatVec& r : roots)
      if (lex_positive(r)) positives.push_back(r);
  }
  std::sort(positives.begin(), positives.end(),
            [](const RatVec& a, const RatVec& b) { return lex_compare(a, b) < 0; });
  if (2 * positives.size() != roots.size())
    throw std::logic_error("analyze_g0: positive system has the wrong size");

  if (!delta0_override.has_value()) {
    // Simple roots: indecomposable positives.
    std::set<RatVec> pos_set(positives.begin(), positives.end());
    for (const RatVec& p : positives) {
      bool decomposable = false;
      for (const RatVec& q : positives) {
        if (decomposable) break;
        RatVec rest = sub(p, q);
        if (!is_zero_vec(rest) && pos_set.count(rest)) decomposable = true;
      }
      if (!decomposable) delta0.push_back(p);
    }
    for (const RatVec& r : positives)
      if (!solve_nonneg_integer(delta0, r).has_value())
        throw std::logic_error("analyze_g0: default simple system does not span");
  } else {
    // The override must itself be indecomposable in its positive system.
    std::set<RatVec> pos_set(positives.begin(), positives.end());
    for (const RatVec& dlt : delta0)
      for (const RatVec& q : positives) {
        RatVec rest = sub(dlt, q);
        if (!is_zero_vec(rest) && pos_set.count(rest))
          throw std::invalid_argument("analyze_g0: override functional is decomposable");
      }
  }
  std::sort(delta0.begin(), delta0.end(),
            [](const RatVec& a, const RatVec& b) { return lex_compare(a, b) < 0; });

  // Borel: h0 plus the positive root vectors.
  std::vector<AlgebraElement> borel = decomp.h0();
  for (const RatVec& r : positives) borel.push_back(root_vector.at(r));
  std::vector<AlgebraElement> raising;
  for (const RatVec& dlt : delta0) raising.push_back(root_vector.at(dlt));

  // Simple factors: connected components of Delta_0, joined when the sum of
  // two simple roots is again a root.
  std::set<RatVec> root_set(roots.begin(), roots.end());
  const size_t nd = delta0.size();
  std::vector<size_t> comp_id(nd);
  for (size_t i = 0; i < nd; ++i) comp_id[i] = i;
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t i = 0; i < nd; ++i)
      for (size_t j = i + 1; j < nd; ++j)
        if (root_set.count(add(delta0[i], delta0[j])) && comp_id[i] != comp_id[j]) {
          size_t lo = std::min(comp_id[i], comp_id[j]);
          size_t hi = std::max(comp_id[i], comp_id[j]);
          for (size_t& c : comp_id)
            if (c == hi) c = lo;
          changed = true;
        }
  }
  std::vector<G0Factor> factors;
  std::map<size_t, size_t> factor_index;
  for (size_t i = 0; i < nd; ++i) {
    auto it = factor_index.find(comp_id[i]);
    if (it == factor_index.end()) {
      factor_index.emplace(comp_id[i], factors.size());
      factors.push_back(G0Factor{{i}, {}});
    } else {
      factors[it->second].delta_indices.push_back(i);
    }
  }
  // Highest root of each factor: its unique maximal positive root.
  auto leq = [&](const RatVec& a, const RatVec& b) {
    return solve_nonneg_integer(delta0, sub(b, a)).has_value();
  };
  for (G0Factor& f : factors) {
    std::vector<RatVec> members;
    for (const RatVec& p : positives) {
      auto coeffs = solve_nonneg_integer(delta0, p);
      if (!coeffs.has_value()) throw std::logic_error("analyze_g0: unreachable");
      bool in_factor = false;
      for (size_t i : f.delta_indices)
        if ((*coeffs)[i] > 0) in_factor = true;
      if (in_factor) members.push_back(p);
    }
    std::vector<RatVec> maxima;
    for (const RatVec& p : members) {
      bool is_max = true;
      for (const RatVec& q : members)
        if (q != p && leq(p, q)) is_max = false;
      if (is_max) maxima.push_back(p);
    }
    if (maxima.size() != 1)
      throw std::logic_error("analyze_g0: factor has no unique highest root");
    f.highest_root = maxima[0];
  }

  // Highest weights of each nonzero grade: weights whose space is killed by
  // every simple raising operator.
  std::vector<std::vector<RatVec>> hw(decomp.modulus());
  for (unsigned j = 1; j < decomp.modulus(); ++j) {
    for (const WeightSpace& ws : decomp.weights(j)) {
      if (ws.vectors.size() == 1) {
        bool killed = true;
        for (const AlgebraElement& e : raising)
          if (!alg.bracket(e, ws.vectors[0]).is_zero()) {
            killed = false;
            break;
          }
        if (killed) hw[j].push_back(ws.weight);
      } else {
        // Kernel of the stacked raising action inside the weight space.
        const size_t bd = ws.vectors.size();
        ExactMatrix stacked(raising.size() * alg.dim(), bd);
        for (size_t k = 0; k < bd; ++k)
          for (size_t e = 0; e < raising.size(); ++e) {
            CycVec b = alg.bracket(raising[e], ws.vectors[k]).to_coords();
            for (size_t i = 0; i < alg.dim(); ++i) stacked.at(e * alg.dim() + i, k) = b[i];
          }
        if (!kernel_basis(stacked).empty()) hw[j].push_back(ws.weight);
      }
    }
    std::sort(hw[j].begin(), hw[j].end(),
              [](const RatVec& a, const RatVec& b) { return lex_compare(a, b) < 0; });
  }

  decomp.analyzed_ = true;
  decomp.delta0_ = std::move(delta0);
  decomp.positive_roots_ = std::move(positives);
  decomp.borel_ = std::move(borel);
  decomp.raising_ = std::move(raising);
  decomp.factors_ = std::move(factors);
  decomp.highest_weights_ = std::move(hw);
  return decomp;
}

std::vector<AlgebraElement> central_elements(const GradedDecomposition& decomp, unsigned j) {
  const ChevalleyAlgebra& alg = decomp.algebra();
  const unsigned n = decomp.modulus();
  if (j % n == 0) throw std::invalid_argument("central_elements: grade must be nonzero");
  j %= n;

  std::vector<AlgebraElement> zero_weight;
  for (const WeightSpace& ws : decomp.weights(j))
    if (is_zero_vec(ws.weight))
      for (const AlgebraElement& v : ws.vectors) zero_weight.push_back(v);

  std::vector<AlgebraElement> result;
  if (!zero_weight.empty()) {
    const std::vector<AlgebraElement>& g0 = decomp.component(0);
    const size_t bd = zero_weight.size();
    ExactMatrix stacked(g0.size() * alg.dim(), bd);
    for (size_t k = 0; k < bd; ++k)
      for (size_t u = 0; u < g0.size(); ++u) {
        CycVec b = alg.bracket(g0[u], zero_weight[k]).to_coords();
        for (size_t i = 0; i < alg.dim(); ++i) stacked.at(u * alg.dim() + i, k) = b[i];
      }
    for (const CycVec& kv : kernel_basis(stacked)) {
      AlgebraElement h = alg.zero();
      for (size_t k = 0; k < bd; ++k)
        if (!kv[k].is_zero()) h += zero_weight[k].scaled(kv[k]);
      result.push_back(h);
    }
  }

  // Central elements commute with the whole subalgebra spanned by the g_{mj}.
  for (const AlgebraElement& h : result)
    for (unsigned m = 0; m < n; ++m)
      for (const AlgebraElement& u : decomp.component((m * j) % n))
        if (!alg.bracket(u, h).is_zero())
          throw std::logic_error("central_elements: element fails to centralize g^(j)");
  if (std::gcd(j, n) == 1 && !result.empty())
    throw std::logic_error("central_elements: nonzero result for a unit grade");
  return result;
}

}  // namespace gb
