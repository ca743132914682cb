#include "gb/chevalley.hpp"

#include <algorithm>
#include <stdexcept>

namespace gb {

void AlgebraElement::set(int idx, const Cyclotomic& c) {
  if (c.is_zero())
    coeff.erase(idx);
  else
    coeff[idx] = c;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [idx, c] : o.coeff) {
    auto it = coeff.find(idx);
    if (it == coeff.end()) {
      coeff.emplace(idx, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) coeff.erase(it);
    }
  }
  return *this;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  AlgebraElement r = *this;
  r += o;
  return r;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r = *this;
  for (auto& [idx, c] : r.coeff) c = -c;
  return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  return *this + (-o);
}

AlgebraElement AlgebraElement::scaled(const Cyclotomic& c) const {
  AlgebraElement r;
  r.algebra = algebra;
  if (c.is_zero()) return r;
  for (const auto& [idx, x] : coeff) r.coeff.emplace(idx, x * c);
  return r;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
  return (*this - o).is_zero();
}

CycVec AlgebraElement::to_coords() const {
  CycVec v(algebra->dim(), Cyclotomic(0));
  for (const auto& [idx, c] : coeff) v[idx] = c;
  return v;
}

std::string AlgebraElement::to_string() const {
  if (coeff.empty()) return "0";
  std::string s;
  for (const auto& [idx, c] : coeff) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*" + algebra->basis_name(idx);
  }
  return s;
}

// ---------------------------------------------------------------------------

ChevalleyAlgebra::ChevalleyAlgebra(const RootSystem& rs)
    : rs_(rs),
      npos_(rs.positive_roots().size()),
      dim_(2 * rs.positive_roots().size() + rs.rank()) {
  build_structure_constants();
  verify_jacobi();
  build_killing();
}

int ChevalleyAlgebra::index_of_root(const RootVec& r) const {
  int p = rs_.positive_index(r);
  if (p >= 0) return p;
  RootVec neg = r;
  for (int& k : neg) k = -k;
  p = rs_.positive_index(neg);
  if (p >= 0) return static_cast<int>(npos_) + rs_.rank() + p;
  throw std::invalid_argument("index_of_root: not a root");
}

bool ChevalleyAlgebra::is_root_index(int idx) const {
  return idx < static_cast<int>(npos_) ||
         idx >= static_cast<int>(npos_) + rs_.rank();
}

bool ChevalleyAlgebra::is_cartan_index(int idx) const { return !is_root_index(idx); }

RootVec ChevalleyAlgebra::root_of_index(int idx) const {
  if (idx < static_cast<int>(npos_)) return rs_.positive_roots()[idx];
  const int nneg = idx - static_cast<int>(npos_) - rs_.rank();
  if (nneg < 0) throw std::invalid_argument("root_of_index: Cartan index");
  RootVec r = rs_.positive_roots()[nneg];
  for (int& k : r) k = -k;
  return r;
}

std::string ChevalleyAlgebra::basis_name(int idx) const {
  if (is_cartan_index(idx))
    return "h" + std::to_string(idx - static_cast<int>(npos_) + 1);
  RootVec r = root_of_index(idx);
  std::string s = "x[";
  for (size_t i = 0; i < r.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(r[i]);
  }
  return s + "]";
}

namespace {

// Structure-constant engine: Carter's extraspecial-pair scheme. Signs are
// pinned by N > 0 on extraspecial pairs; every other pair follows from the
// three- and four-term relations among the N's.
class ConstantBuilder {
 public:
  explicit ConstantBuilder(const RootSystem& rs) : rs_(rs) {
    const auto& pos = rs.positive_roots();
    for (size_t i = 0; i < pos.size(); ++i) order_[pos[i]] = i;
  }

  // N_{x,y} for arbitrary roots with x + y a root.
  Rational n_any(const RootVec& x, const RootVec& y) {
    RootVec sum = add(x, y);
    if (!rs_.is_root(sum)) return Rational(0);
    const bool px = rs_.is_positive_root(x), py = rs_.is_positive_root(y);
    if (px && py) return n_pos(x, y);
    if (!px && !py) return -n_pos(neg(x), neg(y));
    RootVec z = neg(sum);
    // The three-term relation for x + y + z = 0:
    //   N(x,y)/(z,z) = N(y,z)/(x,x) = N(z,x)/(y,y)
    if (rs_.is_positive_root(z)) {
      if (px) return len2(z) / len2(y) * n_pos(z, x);
      return len2(z) / len2(x) * n_pos(y, z);
    }
    if (px) return -len2(z) / len2(x) * n_pos(neg(y), neg(z));
    return -len2(z) / len2(y) * n_pos(neg(z), neg(x));
  }

 private:
  static RootVec add(const RootVec& a, const RootVec& b) {
    RootVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
  }
  static RootVec sub(const RootVec& a, const RootVec& b) {
    RootVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
  }
  static RootVec neg(const RootVec& a) {
    RootVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
  }

  Rational len2(const RootVec& r) const { return rs_.inner_product(r, r); }

  size_t index(const RootVec& r) const { return order_.at(r); }

  // Extraspecial pair of a non-simple positive root: the special pair with
  // the smallest first component in the (height, lex) order. The first hit is
  // automatically no later than its partner.
  std::pair<RootVec, RootVec> extraspecial(const RootVec& gamma) const {
    for (const RootVec& alpha : rs_.positive_roots()) {
      if (height(alpha) >= height(gamma)) break;
      RootVec beta = sub(gamma, alpha);
      if (rs_.is_positive_root(beta)) return {alpha, beta};
    }
    throw std::logic_error("extraspecial: no decomposition found");
  }

  int down_string(const RootVec& alpha, const RootVec& beta) const {
    // max k with beta - k*alpha a root
    int p = 0;
    RootVec cur = beta;
    while (true) {
      cur = sub(cur, alpha);
      if (!rs_.is_root(cur)) break;
      ++p;
    }
    return p;
  }

  Rational n_pos(const RootVec& a, const RootVec& b) {
    if (index(a) > index(b)) return -n_pos(b, a);
    auto key = std::make_pair(index(a), index(b));
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    Rational result;
    auto [eps, eta] = extraspecial(add(a, b));
    if (eps == a && eta == b) {
      result = Rational(down_string(a, b) + 1);
    } else {
      // Four-term relation on (-eps, a, b, -eta), which sums to zero:
      // the N(a,b) term carries the known extraspecial constant.
      const RootVec gamma = add(a, b);
      Rational acc(0);
      RootVec a_eps = sub(a, eps);
      if (rs_.is_root(a_eps)) {
        Rational f1 = n_any(neg(eps), a);
        Rational f2 = n_any(b, neg(eta));
        if (f1 != 0 && f2 != 0) acc += f1 * f2 / len2(a_eps);
      }
      RootVec b_eps = sub(b, eps);
      if (rs_.is_root(b_eps)) {
        Rational f1 = n_any(b, neg(eps));
        Rational f2 = n_any(a, neg(eta));
        if (f1 != 0 && f2 != 0) acc += f1 * f2 / len2(b_eps);
      }
      result = len2(gamma) * acc / n_pos(eps, eta);
    }
    if (!is_integer(result))
      throw std::logic_error("structure constant not an integer");
    memo_[key] = result;
    return result;
  }

  const RootSystem& rs_;
  std::map<RootVec, size_t> order_;
  std::map<std::pair<size_t, size_t>, Rational> memo_;
};

}  // namespace

void ChevalleyAlgebra::build_structure_constants() {
  ConstantBuilder nb(rs_);
  const int n = rs_.rank();
  table_.assign(dim_ * dim_, {});
  auto entry = [&](int i, int j) -> std::vector<std::pair<int, long>>& {
    return table_[i * dim_ + j];
  };

  for (size_t i = 0; i < dim_; ++i) {
    for (size_t j = 0; j < dim_; ++j) {
      const bool ri = is_root_index(static_cast<int>(i));
      const bool rj = is_root_index(static_cast<int>(j));
      if (!ri && !rj) continue;  // Cartan is abelian
      if (!ri && rj) {
        const int a = static_cast<int>(i) - static_cast<int>(npos_);
        RootVec beta = root_of_index(static_cast<int>(j));
        const long c = rs_.pairing(beta, a);
        if (c != 0) entry(i, j).push_back({static_cast<int>(j), c});
        continue;
      }
      if (ri && !rj) {
        const int a = static_cast<int>(j) - static_cast<int>(npos_);
        RootVec alpha = root_of_index(static_cast<int>(i));
        const long c = -rs_.pairing(alpha, a);
        if (c != 0) entry(i, j).push_back({static_cast<int>(i), c});
        continue;
      }
      RootVec alpha = root_of_index(static_cast<int>(i));
      RootVec beta = root_of_index(static_cast<int>(j));
      RootVec sum(alpha.size());
      bool zero_sum = true;
      for (size_t t = 0; t < alpha.size(); ++t) {
        sum[t] = alpha[t] + beta[t];
        if (sum[t] != 0) zero_sum = false;
      }
      if (zero_sum) {
        // [x_alpha, x_{-alpha}] = h_alpha, the coroot in the h_i basis.
        std::vector<int> co = rs_.coroot_coords(alpha);
        for (int t = 0; t < n; ++t)
          if (co[t] != 0) entry(i, j).push_back({index_of_cartan(t), co[t]});
        continue;
      }
      if (!rs_.is_root(sum)) continue;
      Rational nc = nb.n_any(alpha, beta);
      const long c = static_cast<long>(nc.get_num().get_si());
      if (c != 0) entry(i, j).push_back({index_of_root(sum), c});
    }
  }
}

long ChevalleyAlgebra::structure_constant(const RootVec& alpha, const RootVec& beta) const {
  RootVec sum(alpha.size());
  for (size_t t = 0; t < alpha.size(); ++t) sum[t] = alpha[t] + beta[t];
  if (!rs_.is_root(sum)) return 0;
  const auto& e = bracket_basis(index_of_root(alpha), index_of_root(beta));
  return e.empty() ? 0 : e[0].second;
}

void ChevalleyAlgebra::verify_jacobi() const {
  const size_t d = dim_;
  std::vector<long long> acc(d, 0);
  std::vector<int> touched;
  touched.reserve(16);
  auto add_double = [&](int u, int v, int w, long long sign) {
    // sign * [u, [v, w]]
    for (const auto& [t, c] : bracket_basis(v, w))
      for (const auto& [s, c2] : bracket_basis(u, t)) {
        if (acc[s] == 0) touched.push_back(s);
        acc[s] += sign * c * c2;
      }
  };
  for (size_t u = 0; u < d; ++u)
    for (size_t v = u; v < d; ++v)
      for (size_t w = v; w < d; ++w) {
        touched.clear();
        add_double(u, v, w, 1);
        add_double(v, w, u, 1);
        add_double(w, u, v, 1);
        for (int s : touched)
          if (acc[s] != 0)
            throw std::logic_error("Jacobi identity violated on basis triple (" +
                                   basis_name(u) + ", " + basis_name(v) + ", " +
                                   basis_name(w) + ")");
        for (int s : touched) acc[s] = 0;
      }
}

void ChevalleyAlgebra::build_killing() {
  const size_t d = dim_;
  killing_.assign(d, std::vector<long long>(d, 0));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = i; j < d; ++j) {
      long long tr = 0;
      // trace of ad(e_i) ad(e_j): coefficient of w in [e_i, [e_j, w]]
      for (size_t w = 0; w < d; ++w)
        for (const auto& [t, c] : bracket_basis(j, w))
          for (const auto& [s, c2] : bracket_basis(i, t))
            if (s == static_cast<int>(w)) tr += static_cast<long long>(c) * c2;
      killing_[i][j] = killing_[j][i] = tr;
    }
}

AlgebraElement ChevalleyAlgebra::zero() const {
  AlgebraElement e;
  e.algebra = this;
  return e;
}

AlgebraElement ChevalleyAlgebra::basis_element(int idx) const {
  AlgebraElement e = zero();
  e.coeff[idx] = Cyclotomic(1);
  return e;
}

AlgebraElement ChevalleyAlgebra::element_from_coords(const CycVec& v) const {
  AlgebraElement e = zero();
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) e.coeff[static_cast<int>(i)] = v[i];
  return e;
}

AlgebraElement ChevalleyAlgebra::bracket(const AlgebraElement& a,
                                         const AlgebraElement& b) const {
  if (a.algebra != this || b.algebra != this)
    throw std::invalid_argument("bracket: elements from a different algebra");
  AlgebraElement r = zero();
  for (const auto& [i, ci] : a.coeff)
    for (const auto& [j, cj] : b.coeff) {
      const Cyclotomic prod = ci * cj;
      for (const auto& [t, c] : bracket_basis(i, j)) {
        auto it = r.coeff.find(t);
        Cyclotomic v = prod * Cyclotomic(c);
        if (it == r.coeff.end()) {
          if (!v.is_zero()) r.coeff.emplace(t, v);
        } else {
          it->second += v;
          if (it->second.is_zero()) r.coeff.erase(it);
        }
      }
    }
  return r;
}

ExactMatrix ChevalleyAlgebra::adjoint_matrix(const AlgebraElement& a) const {
  if (a.algebra != this)
    throw std::invalid_argument("adjoint_matrix: element from a different algebra");
  ExactMatrix m(dim_, dim_);
  for (const auto& [i, ci] : a.coeff)
    for (size_t w = 0; w < dim_; ++w)
      for (const auto& [t, c] : bracket_basis(i, static_cast<int>(w)))
        m.at(t, w) += ci * Cyclotomic(c);
  return m;
}

Cyclotomic ChevalleyAlgebra::killing_form(const AlgebraElement& a,
                                          const AlgebraElement& b) const {
  if (a.algebra != this || b.algebra != this)
    throw std::invalid_argument("killing_form: elements from a different algebra");
  Cyclotomic total(0L);
  for (const auto& [i, ci] : a.coeff)
    for (const auto& [j, cj] : b.coeff) {
      const long long k = killing_[i][j];
      if (k != 0) total += ci * cj * Cyclotomic(rat(k));
    }
  return total;
}

}  // namespace gb
