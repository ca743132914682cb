#include "gb/root_system.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace gb {

Family family_from_char(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    default: throw std::invalid_argument(std::string("unknown family: ") + c);
  }
}

char family_to_char(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    case Family::E: return 'E';
    case Family::F: return 'F';
    case Family::G: return 'G';
  }
  return '?';
}

int height(const RootVec& r) {
  int h = 0;
  for (int k : r) h += k;
  return h;
}

namespace {

bool valid_type(Family f, int n) {
  switch (f) {
    case Family::A: return n >= 1;
    case Family::B: return n >= 2;
    case Family::C: return n >= 2;
    case Family::D: return n >= 3;
    case Family::E: return n >= 6 && n <= 8;
    case Family::F: return n == 4;
    case Family::G: return n == 2;
  }
  return false;
}

}  // namespace

RootSystem::RootSystem(Family family, int rank) : family_(family), rank_(rank) {
  if (!valid_type(family, rank))
    throw std::invalid_argument("RootSystem: invalid type " + type_name());
  const int n = rank;
  cartan_.assign(n, std::vector<int>(n, 0));
  sym_.assign(n, Rational(1));
  for (int i = 0; i < n; ++i) cartan_[i][i] = 2;
  auto link = [&](int i, int j) { cartan_[i][j] = cartan_[j][i] = -1; };

  switch (family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      // alpha_n short
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      cartan_[n - 1][n - 2] = -2;
      sym_[n - 1] = rat(1, 2);
      break;
    case Family::C:
      // alpha_n long
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      cartan_[n - 2][n - 1] = -2;
      for (int i = 0; i + 1 < n; ++i) sym_[i] = rat(1, 2);
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Family::E:
      // Chain 1..(n-1) with the last node attached to node 3.
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(2, n - 1);
      break;
    case Family::F:
      // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      link(0, 1);
      link(2, 3);
      cartan_[1][2] = -1;
      cartan_[2][1] = -2;
      sym_[2] = sym_[3] = rat(1, 2);
      break;
    case Family::G:
      // alpha_1 short, alpha_2 long
      cartan_[0][1] = -3;
      cartan_[1][0] = -1;
      sym_[0] = rat(1, 3);
      break;
  }

  generate_positive_roots();
}

std::string RootSystem::type_name() const {
  return std::string(1, family_to_char(family_)) + std::to_string(rank_);
}

int RootSystem::pairing(const RootVec& alpha, int i) const {
  int p = 0;
  for (int j = 0; j < rank_; ++j) p += cartan_[i][j] * alpha[j];
  return p;
}

void RootSystem::generate_positive_roots() {
  std::set<RootVec> known;
  std::vector<RootVec> frontier;
  for (int i = 0; i < rank_; ++i) {
    RootVec a(rank_, 0);
    a[i] = 1;
    known.insert(a);
    frontier.push_back(a);
  }
  // Closure under adding one simple root, with the string bound
  // q = p - <alpha, alpha_i^vee>. Processing by height keeps the downward
  // part of every string already generated.
  while (!frontier.empty()) {
    std::vector<RootVec> next;
    for (const RootVec& alpha : frontier) {
      for (int i = 0; i < rank_; ++i) {
        int p = 0;
        RootVec down = alpha;
        while (true) {
          down[i] -= 1;
          bool neg = std::all_of(down.begin(), down.end(), [](int k) { return k <= 0; });
          bool is_simple_neg = neg && height(down) == -1;
          RootVec abs = down;
          for (int& k : abs) k = -k;
          if (known.count(down) || (neg && known.count(abs)) || is_simple_neg) {
            ++p;
          } else {
            break;
          }
        }
        const int q = p - pairing(alpha, i);
        if (q > 0) {
          RootVec up = alpha;
          up[i] += 1;
          if (!known.count(up)) {
            known.insert(up);
            next.push_back(up);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  positive_.assign(known.begin(), known.end());
  std::sort(positive_.begin(), positive_.end(), [](const RootVec& a, const RootVec& b) {
    int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  highest_ = positive_.back();
  for (const RootVec& r : positive_)
    for (int i = 0; i < rank_; ++i)
      if (r[i] > highest_[i])
        throw std::logic_error("RootSystem: highest root not componentwise maximal");
}

bool RootSystem::is_positive_root(const RootVec& r) const {
  return std::binary_search(
      positive_.begin(), positive_.end(), r, [](const RootVec& a, const RootVec& b) {
        int ha = height(a), hb = height(b);
        if (ha != hb) return ha < hb;
        return a < b;
      });
}

bool RootSystem::is_root(const RootVec& r) const {
  if (is_positive_root(r)) return true;
  RootVec neg = r;
  for (int& k : neg) k = -k;
  return is_positive_root(neg);
}

int RootSystem::positive_index(const RootVec& r) const {
  auto cmp = [](const RootVec& a, const RootVec& b) {
    int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  };
  auto it = std::lower_bound(positive_.begin(), positive_.end(), r, cmp);
  if (it == positive_.end() || *it != r) return -1;
  return static_cast<int>(it - positive_.begin());
}

Rational RootSystem::inner_product(const RatVec& u, const RatVec& v) const {
  Rational total(0);
  for (int i = 0; i < rank_; ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) {
      if (v[j] == 0) continue;
      total += u[i] * v[j] * sym_[i] * cartan_[i][j];
    }
  }
  return total;
}

Rational RootSystem::inner_product(const RootVec& u, const RootVec& v) const {
  RatVec a(u.begin(), u.end()), b(v.begin(), v.end());
  return inner_product(a, b);
}

Rational RootSystem::half_length_sq(const RootVec& r) const {
  return inner_product(r, r) / 2;
}

std::vector<int> RootSystem::coroot_coords(const RootVec& alpha) const {
  const Rational d = half_length_sq(alpha);
  std::vector<int> c(rank_);
  for (int i = 0; i < rank_; ++i) {
    Rational v = alpha[i] * sym_[i] / d;
    if (!is_integer(v))
      throw std::logic_error("coroot_coords: non-integer coroot coefficient");
    c[i] = static_cast<int>(v.get_num().get_si());
  }
  return c;
}

// ---------------------------------------------------------------------------
// Affine diagrams
// ---------------------------------------------------------------------------

AffineDiagram::AffineDiagram(Family family, int rank, int twist)
    : family_(family), rank_(rank), twist_(twist) {
  if (twist == 1) {
    build_untwisted();
  } else if (twist == 2 && family == Family::A && rank >= 2) {
    build_twisted_a();
  } else if (twist == 2 && family == Family::E && rank == 6) {
    build_twisted_e6();
  } else {
    throw std::invalid_argument("AffineDiagram: unsupported twisted type " +
                                std::string(1, family_to_char(family)) +
                                std::to_string(rank) + "^(" + std::to_string(twist) + ")");
  }
  // Marks span the null space of the generalized Cartan matrix.
  for (size_t i = 0; i < nodes(); ++i) {
    long s = 0;
    for (size_t j = 0; j < nodes(); ++j) s += static_cast<long>(cartan_[i][j]) * marks_[j];
    if (s != 0) throw std::logic_error("AffineDiagram: marks fail the null-vector identity");
  }
  find_automorphisms();
}

void AffineDiagram::build_untwisted() {
  RootSystem rs(family_, rank_);
  const int n = rank_;
  cartan_.assign(n + 1, std::vector<int>(n + 1, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cartan_[i + 1][j + 1] = rs.cartan()[i][j];
  cartan_[0][0] = 2;
  const RootVec& theta = rs.highest_root();
  for (int j = 0; j < n; ++j) {
    // alpha_0 = -theta; (theta,theta) = 2 makes 2(alpha_0,alpha_j)/(alpha_0,alpha_0)
    // equal to -(theta, alpha_j).
    RootVec ej(n, 0);
    ej[j] = 1;
    Rational v = -rs.inner_product(theta, ej);
    if (!is_integer(v)) throw std::logic_error("AffineDiagram: non-integer entry");
    cartan_[0][j + 1] = static_cast<int>(v.get_num().get_si());
    cartan_[j + 1][0] = -rs.pairing(theta, j);
  }
  marks_.assign(n + 1, 1);
  for (int i = 0; i < n; ++i) marks_[i + 1] = theta[i];
}

void AffineDiagram::build_twisted_a() {
  const int n = rank_;
  if (n == 3) {
    // A_3^(2) = D_3^(2): chain 0 -- 1 -- 2 with doubled edges, all marks 1.
    // Node 1 carries the fixed middle simple root, node 2 the outer orbit.
    cartan_ = {{2, -2, 0}, {-1, 2, -1}, {0, -2, 2}};
    marks_ = {1, 1, 1};
    node_orbits_ = {{1}, {0, 2}};
    return;
  }
  if (n % 2 == 1) {
    // A_{2l-1}^(2), l >= 3: nodes 0 and 1 both joined to node 2, then a chain
    // ending in a doubled edge at node l. Marks (1,1,2,...,2,1).
    const int l = (n + 1) / 2;
    cartan_.assign(l + 1, std::vector<int>(l + 1, 0));
    for (int i = 0; i <= l; ++i) cartan_[i][i] = 2;
    cartan_[0][2] = cartan_[2][0] = -1;
    cartan_[1][2] = cartan_[2][1] = -1;
    for (int i = 2; i + 1 < l; ++i) cartan_[i][i + 1] = cartan_[i + 1][i] = -1;
    cartan_[l - 1][l] = -2;
    cartan_[l][l - 1] = -1;
    marks_.assign(l + 1, 2);
    marks_[0] = marks_[1] = marks_[l] = 1;
    node_orbits_.clear();
    for (int j = 1; j < l; ++j) node_orbits_.push_back({j - 1, n - j});
    node_orbits_.push_back({l - 1});
    return;
  }
  // A_{2l}^(2), l >= 1: a chain with doubled edges at both ends,
  // marks (2,...,2,1).
  const int l = n / 2;
  cartan_.assign(l + 1, std::vector<int>(l + 1, 0));
  for (int i = 0; i <= l; ++i) cartan_[i][i] = 2;
  if (l == 1) {
    cartan_[0][1] = -4;
    cartan_[1][0] = -1;
  } else {
    cartan_[0][1] = -2;
    cartan_[1][0] = -1;
    for (int i = 1; i + 1 < l; ++i) cartan_[i][i + 1] = cartan_[i + 1][i] = -1;
    cartan_[l - 1][l] = -2;
    cartan_[l][l - 1] = -1;
  }
  marks_.assign(l + 1, 2);
  marks_[l] = 1;
  node_orbits_.clear();
  for (int j = 1; j <= l; ++j) node_orbits_.push_back({j - 1, n - j});
}

void AffineDiagram::build_twisted_e6() {
  // Chain 0 -- 1 -- 2 == 3 -- 4 with marks (1,2,3,2,1). Finite nodes carry
  // the involution orbits of the E6 diagram (chain 1..5, node 6 on node 3).
  cartan_ = {{2, -1, 0, 0, 0},
             {-1, 2, -1, 0, 0},
             {0, -1, 2, -2, 0},
             {0, 0, -1, 2, -1},
             {0, 0, 0, -1, 2}};
  marks_ = {1, 2, 3, 2, 1};
  node_orbits_ = {{0, 4}, {1, 3}, {2}, {5}};
}

void AffineDiagram::find_automorphisms() {
  const size_t n = nodes();
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  autos_.clear();
  // Backtracking search for permutations preserving the Cartan matrix
  // (and therefore the marks).
  auto extend = [&](auto&& self, size_t i) -> void {
    if (i == n) {
      autos_.push_back(perm);
      return;
    }
    for (size_t cand = 0; cand < n; ++cand) {
      if (used[cand] || marks_[cand] != marks_[i]) continue;
      bool ok = true;
      for (size_t j = 0; j < i && ok; ++j) {
        if (cartan_[perm[j]][cand] != cartan_[j][i]) ok = false;
        if (cartan_[cand][perm[j]] != cartan_[i][j]) ok = false;
      }
      if (!ok) continue;
      perm[i] = static_cast<int>(cand);
      used[cand] = true;
      self(self, i + 1);
      used[cand] = false;
      perm[i] = -1;
    }
  };
  extend(extend, 0);
}

}  // namespace gb
