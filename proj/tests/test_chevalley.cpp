#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "gb/chevalley.hpp"

using namespace gb;

namespace {

// Independent oracle: sl_{n+1} realized by matrix units. Root e_i - e_j maps
// to E_ij, h_i to E_ii - E_{i+1,i+1}; brackets are commutators.
struct SlModel {
  int n;  // rank
  using Mat = std::vector<std::vector<long>>;

  Mat unit(int i, int j) const {
    Mat m(n + 1, std::vector<long>(n + 1, 0));
    m[i][j] = 1;
    return m;
  }

  Mat from_root(const RootVec& r) const {
    // r = sum k_t alpha_t with alpha_t = e_t - e_{t+1}; recover (i, j) from
    // the telescoping partial sums.
    std::vector<long> eps(n + 1, 0);
    for (int t = 0; t < n; ++t) {
      eps[t] += r[t];
      eps[t + 1] -= r[t];
    }
    int i = -1, j = -1;
    for (int t = 0; t <= n; ++t) {
      if (eps[t] == 1) i = t;
      if (eps[t] == -1) j = t;
    }
    REQUIRE(i >= 0);
    REQUIRE(j >= 0);
    return unit(i, j);
  }

  Mat cartan(int i) const {
    Mat m(n + 1, std::vector<long>(n + 1, 0));
    m[i][i] = 1;
    m[i + 1][i + 1] = -1;
    return m;
  }

  Mat commutator(const Mat& a, const Mat& b) const {
    Mat r(n + 1, std::vector<long>(n + 1, 0));
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        long s = 0;
        for (int k = 0; k <= n; ++k) s += a[i][k] * b[k][j] - b[i][k] * a[k][j];
        r[i][j] = s;
      }
    return r;
  }
};

}  // namespace

TEST_CASE("defining relations in A3") {
  RootSystem rs(Family::A, 3);
  ChevalleyAlgebra alg(rs);
  CHECK(alg.dim() == 15);

  const RootVec a1{1, 0, 0}, a2{0, 1, 0}, a3{0, 0, 1};
  const RootVec na1{-1, 0, 0};

  SUBCASE("[x_a1, x_-a1] = h1") {
    AlgebraElement b = alg.bracket(alg.basis_element(alg.index_of_root(a1)),
                                   alg.basis_element(alg.index_of_root(na1)));
    AlgebraElement h1 = alg.basis_element(alg.index_of_cartan(0));
    CHECK(b == h1);
  }
  SUBCASE("[h1, x_a2] = -x_a2") {
    AlgebraElement b = alg.bracket(alg.basis_element(alg.index_of_cartan(0)),
                                   alg.basis_element(alg.index_of_root(a2)));
    AlgebraElement expect = alg.basis_element(alg.index_of_root(a2)).scaled(Cyclotomic(-1));
    CHECK(b == expect);
  }
  SUBCASE("[x_a1, x_a2] = +-x_{a1+a2} with coefficient 1") {
    long c = alg.structure_constant(a1, a2);
    CHECK((c == 1 || c == -1));
  }
  SUBCASE("bracket is antisymmetric and kills non-roots") {
    AlgebraElement x = alg.basis_element(alg.index_of_root(a1));
    CHECK(alg.bracket(x, x).is_zero());
    AlgebraElement y = alg.basis_element(alg.index_of_root(a3));
    CHECK(alg.bracket(x, y).is_zero());  // a1 + a3 is not a root
  }
  SUBCASE("linearity over Cartan brackets") {
    AlgebraElement h13 = alg.basis_element(alg.index_of_cartan(0)) +
                         alg.basis_element(alg.index_of_cartan(2));
    AlgebraElement xa2 = alg.basis_element(alg.index_of_root(a2));
    CHECK(alg.bracket(h13, xa2) == xa2.scaled(Cyclotomic(-2)));
  }
}

TEST_CASE("A3 structure constants agree with the sl4 matrix model") {
  RootSystem rs(Family::A, 3);
  ChevalleyAlgebra alg(rs);
  SlModel sl{3};

  // The generator-fixing homomorphism phi sends x_alpha to a signed matrix
  // unit; recover the signs from the extraspecial decompositions and then
  // confirm phi preserves every basis bracket.
  std::map<int, std::pair<SlModel::Mat, long>> image;  // idx -> (unit, sign)
  for (size_t i = 0; i < alg.dim(); ++i) {
    int idx = static_cast<int>(i);
    if (alg.is_cartan_index(idx)) continue;
    RootVec r = alg.root_of_index(idx);
    image[idx] = {sl.from_root(r), 0};
  }
  // Fix phi = identity on simple generators and Cartan; propagate to the
  // other root vectors through brackets of lower-height images.
  auto mat_scaled = [&](const SlModel::Mat& m, long s) {
    SlModel::Mat r = m;
    for (auto& row : r)
      for (auto& v : row) v *= s;
    return r;
  };
  std::map<int, SlModel::Mat> phi;
  for (int t = 0; t < 3; ++t) {
    RootVec simple(3, 0);
    simple[t] = 1;
    phi[alg.index_of_root(simple)] = sl.from_root(simple);
    RootVec nsimple = simple;
    nsimple[t] = -1;
    phi[alg.index_of_root(nsimple)] = sl.from_root(nsimple);
  }
  // Positive then negative composites in height order.
  for (int sign : {1, -1}) {
    for (const RootVec& gamma : rs.positive_roots()) {
      if (height(gamma) < 2) continue;
      RootVec g = gamma;
      for (int& k : g) k *= sign;
      // find a decomposition g = a + b with both known
      bool done = false;
      for (const RootVec& alpha : rs.positive_roots()) {
        if (done) break;
        RootVec a = alpha;
        for (int& k : a) k *= sign;
        RootVec b(3);
        for (int t = 0; t < 3; ++t) b[t] = g[t] - a[t];
        if (!rs.is_root(b)) continue;
        int ia = alg.index_of_root(a), ib = alg.index_of_root(b);
        if (!phi.count(ia) || !phi.count(ib)) continue;
        long n = alg.structure_constant(a, b);
        if (n == 0) continue;
        // phi(x_g) = [phi(x_a), phi(x_b)] / n
        SlModel::Mat br = sl.commutator(phi[ia], phi[ib]);
        for (auto& row : br)
          for (auto& v : row) {
            REQUIRE(v % n == 0);
            v /= n;
          }
        phi[alg.index_of_root(g)] = br;
        done = true;
      }
      REQUIRE(done);
    }
  }
  for (int t = 0; t < 3; ++t) phi[alg.index_of_cartan(t)] = sl.cartan(t);

  // phi must preserve all basis brackets.
  for (size_t i = 0; i < alg.dim(); ++i)
    for (size_t j = 0; j < alg.dim(); ++j) {
      SlModel::Mat lhs = sl.commutator(phi[static_cast<int>(i)], phi[static_cast<int>(j)]);
      SlModel::Mat rhs(4, std::vector<long>(4, 0));
      for (const auto& [t, c] : alg.bracket_basis(static_cast<int>(i), static_cast<int>(j)))
        rhs = [&] {
          SlModel::Mat acc = rhs;
          SlModel::Mat part = mat_scaled(phi[t], c);
          for (int r = 0; r < 4; ++r)
            for (int s = 0; s < 4; ++s) acc[r][s] += part[r][s];
          return acc;
        }();
      CAPTURE(i); CAPTURE(j);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("structure constants are small integers") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{
           {Family::A, 3}, {Family::B, 2}, {Family::G, 2}, {Family::C, 3}}) {
    RootSystem rs(f, n);
    ChevalleyAlgebra alg(rs);
    CAPTURE(rs.type_name());
    for (const RootVec& a : rs.positive_roots())
      for (const RootVec& b : rs.positive_roots()) {
        long c = alg.structure_constant(a, b);
        CHECK(std::abs(c) <= 4);
      }
  }
}

TEST_CASE("adjoint matrices") {
  RootSystem rs(Family::A, 3);
  ChevalleyAlgebra alg(rs);
  SUBCASE("ad(0) = 0") {
    CHECK(alg.adjoint_matrix(alg.zero()).is_zero());
  }
  SUBCASE("ad(h1) is diagonal with Cartan pairings") {
    ExactMatrix m = alg.adjoint_matrix(alg.basis_element(alg.index_of_cartan(0)));
    for (size_t i = 0; i < alg.dim(); ++i)
      for (size_t j = 0; j < alg.dim(); ++j) {
        if (i != j) {
          CHECK(m.at(i, j).is_zero());
        } else if (alg.is_cartan_index(static_cast<int>(i))) {
          CHECK(m.at(i, i).is_zero());
        } else {
          RootVec r = alg.root_of_index(static_cast<int>(i));
          CHECK(m.at(i, i) == Cyclotomic(rat(rs.pairing(r, 0))));
        }
      }
  }
  SUBCASE("killing positivity on opposite root pairs") {
    for (const RootVec& a : rs.positive_roots()) {
      RootVec na = a;
      for (int& k : na) k = -k;
      Cyclotomic k = alg.killing_form(alg.basis_element(alg.index_of_root(a)),
                                      alg.basis_element(alg.index_of_root(na)));
      REQUIRE(k.is_rational());
      CHECK(k.rational_value() > 0);
    }
  }
}

TEST_CASE("killing form values and properties in A3") {
  RootSystem rs(Family::A, 3);
  ChevalleyAlgebra alg(rs);
  AlgebraElement h1 = alg.basis_element(alg.index_of_cartan(0));
  AlgebraElement xa1 = alg.basis_element(alg.index_of_root({1, 0, 0}));
  AlgebraElement xna1 = alg.basis_element(alg.index_of_root({-1, 0, 0}));

  CHECK(alg.killing_form(h1, xa1).is_zero());
  CHECK(!alg.killing_form(xa1, xna1).is_zero());

  // Root-sum oracle for Cartan pairs: kappa(h,h') = sum_R alpha(h) alpha(h').
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      long long expect = 0;
      for (const RootVec& r : rs.positive_roots())
        expect += 2LL * rs.pairing(r, i) * rs.pairing(r, j);
      CHECK(alg.killing_matrix()[alg.index_of_cartan(i)][alg.index_of_cartan(j)] ==
            expect);
    }
  // Frozen value from the trace over the 15-dimensional adjoint.
  CHECK(alg.killing_matrix()[alg.index_of_cartan(0)][alg.index_of_cartan(0)] == 16);

  // Non-degeneracy: the Gram matrix over Q has full rank.
  ExactMatrix gram(alg.dim(), alg.dim());
  for (size_t i = 0; i < alg.dim(); ++i)
    for (size_t j = 0; j < alg.dim(); ++j)
      gram.at(i, j) = Cyclotomic(rat(alg.killing_matrix()[i][j]));
  CHECK(gram.rank() == alg.dim());

  // Invariance on random triples.
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(alg.dim()) - 1);
  std::uniform_int_distribution<long> sc(-2, 2);
  auto random_elem = [&] {
    AlgebraElement e = alg.zero();
    for (int t = 0; t < 3; ++t) e += alg.basis_element(pick(rng)).scaled(Cyclotomic(sc(rng)));
    return e;
  };
  for (int trial = 0; trial < 100; ++trial) {
    AlgebraElement a = random_elem(), b = random_elem(), c = random_elem();
    CHECK(alg.killing_form(alg.bracket(a, b), c) == alg.killing_form(a, alg.bracket(b, c)));
  }
}

TEST_CASE("jacobi holds under random re-verification") {
  RootSystem rs(Family::B, 2);
  ChevalleyAlgebra alg(rs);
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(alg.dim()) - 1);
  for (int trial = 0; trial < 200; ++trial) {
    AlgebraElement u = alg.basis_element(pick(rng));
    AlgebraElement v = alg.basis_element(pick(rng));
    AlgebraElement w = alg.basis_element(pick(rng));
    AlgebraElement j = alg.bracket(u, alg.bracket(v, w)) +
                       alg.bracket(v, alg.bracket(w, u)) +
                       alg.bracket(w, alg.bracket(u, v));
    CHECK(j.is_zero());
  }
}
