#include "gb/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace gb {

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

// Exact division of integer polynomials, constant term first. The divisor
// must be monic and the division must leave no remainder.
std::vector<long long> poly_div_exact(std::vector<long long> num,
                                      const std::vector<long long>& den) {
  const size_t dn = num.size() - 1, dd = den.size() - 1;
  std::vector<long long> quot(dn - dd + 1, 0);
  for (size_t i = dn + 1; i-- > dd;) {
    long long q = num[i];
    quot[i - dd] = q;
    if (q == 0) continue;
    for (size_t j = 0; j <= dd; ++j) num[i - dd + j] -= q * den[j];
  }
  for (long long c : num)
    if (c != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
  return quot;
}

}  // namespace

std::vector<long long> cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  // Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d
  std::vector<long long> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) poly = poly_div_exact(std::move(poly), cyclotomic_polynomial(d));
  return poly;
}

namespace {

// Immutable per-order reduction data, built once and shared across threads.
struct CycloContext {
  unsigned order;
  unsigned deg;                      // phi(order)
  std::vector<long long> phi;        // Phi_order
  std::vector<RatVec> high_powers;   // x^(deg+i) mod Phi for i = 0..deg-2
};

const CycloContext& context(unsigned n) {
  static std::mutex mtx;
  static std::map<unsigned, std::unique_ptr<CycloContext>> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;

  auto ctx = std::make_unique<CycloContext>();
  ctx->order = n;
  ctx->phi = cyclotomic_polynomial(n);
  ctx->deg = static_cast<unsigned>(ctx->phi.size() - 1);
  const unsigned d = ctx->deg;
  // x^d = -(phi_0 + phi_1 x + ... + phi_{d-1} x^{d-1}); higher powers follow
  // by multiplying through by x and reducing again.
  RatVec xd(d);
  for (unsigned i = 0; i < d; ++i) xd[i] = rat(-ctx->phi[i]);
  ctx->high_powers.push_back(xd);
  for (unsigned i = 1; i + 1 < d || d == 1; ++i) {
    if (d == 1) break;
    if (i + 1 >= d) break;
    const RatVec& prev = ctx->high_powers.back();
    RatVec next(d, Rational(0));
    for (unsigned j = 0; j + 1 < d; ++j) next[j + 1] = prev[j];
    const Rational top = prev[d - 1];
    if (top != 0)
      for (unsigned j = 0; j < d; ++j) next[j] += top * xd[j];
    ctx->high_powers.push_back(next);
  }
  const CycloContext& ref = *ctx;
  cache.emplace(n, std::move(ctx));
  return ref;
}

// Reduce a polynomial of degree < 2*deg-1 modulo Phi_n into the power basis.
RatVec reduce_mod_phi(const CycloContext& ctx, const RatVec& poly) {
  RatVec out(ctx.deg, Rational(0));
  for (size_t i = 0; i < poly.size(); ++i) {
    if (poly[i] == 0) continue;
    if (i < ctx.deg) {
      out[i] += poly[i];
    } else {
      const RatVec& row = ctx.high_powers.at(i - ctx.deg);
      for (unsigned j = 0; j < ctx.deg; ++j) out[j] += poly[i] * row[j];
    }
  }
  return out;
}

unsigned lcm_u(unsigned a, unsigned b) { return a / std::gcd(a, b) * b; }

// --- polynomial helpers over Q, constant term first, for inverses ---

void poly_trim(RatVec& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

RatVec poly_mul(const RatVec& a, const RatVec& b) {
  RatVec r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// Division with remainder over Q: returns (quotient, remainder).
std::pair<RatVec, RatVec> poly_divmod(RatVec num, const RatVec& den) {
  RatVec quot(std::max<size_t>(1, num.size() > den.size() ? num.size() - den.size() + 1 : 1),
              Rational(0));
  while (num.size() >= den.size() && !(num.size() == 1 && num[0] == 0)) {
    const size_t shift = num.size() - den.size();
    Rational q = num.back() / den.back();
    if (q == 0) {
      num.pop_back();
      continue;
    }
    quot[shift] = q;
    for (size_t j = 0; j < den.size(); ++j) num[shift + j] -= q * den[j];
    poly_trim(num);
    if (num.size() == 1 && num[0] == 0) break;
  }
  poly_trim(num);
  return {quot, num};
}

}  // namespace

Cyclotomic Cyclotomic::zeta(unsigned order, long power) {
  if (order == 0) throw std::invalid_argument("zeta: order must be positive");
  long p = power % static_cast<long>(order);
  if (p < 0) p += order;
  if (order == 1) return Cyclotomic(Rational(1));
  // Multiply 1 by x repeatedly, reducing as we go; p < order keeps this cheap.
  const CycloContext& ctx = context(order);
  RatVec cur(ctx.deg, Rational(0));
  cur[0] = 1;
  for (long step = 0; step < p; ++step) {
    RatVec shifted(ctx.deg + 1, Rational(0));
    for (unsigned j = 0; j < ctx.deg; ++j) shifted[j + 1] = cur[j];
    cur = reduce_mod_phi(ctx, shifted);
  }
  return Cyclotomic(order, std::move(cur));
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw std::logic_error("rational_value: element not rational");
  return c_[0];
}

Cyclotomic Cyclotomic::promoted(unsigned n) const {
  if (n == order_) return *this;
  if (n % order_ != 0) throw std::logic_error("promoted: current order must divide target");
  const CycloContext& ctx = context(n);
  const unsigned step = n / order_;  // zeta_m = zeta_n^step
  RatVec acc(ctx.deg, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Cyclotomic zp = zeta(n, static_cast<long>(i) * step);
    for (unsigned j = 0; j < ctx.deg; ++j) acc[j] += c_[i] * zp.c_[j];
  }
  return Cyclotomic(n, std::move(acc));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  const unsigned n = lcm_u(order_, o.order_);
  Cyclotomic a = promoted(n), b = o.promoted(n);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  const unsigned n = lcm_u(order_, o.order_);
  Cyclotomic a = promoted(n), b = o.promoted(n);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
  return a;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  const unsigned n = lcm_u(order_, o.order_);
  Cyclotomic a = promoted(n), b = o.promoted(n);
  if (n == 1) return Cyclotomic(a.c_[0] * b.c_[0]);
  if (a.is_zero() || b.is_zero()) return Cyclotomic(n, RatVec(a.c_.size(), Rational(0)));
  RatVec prod(2 * a.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
  }
  return Cyclotomic(n, reduce_mod_phi(context(n), prod));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("Cyclotomic::inverse of zero");
  if (order_ == 1) return Cyclotomic(Rational(1) / c_[0]);
  // Extended Euclid in Q[x] against Phi_n: u*c + v*Phi = gcd = const.
  const CycloContext& ctx = context(order_);
  RatVec r0(ctx.phi.size());
  for (size_t i = 0; i < ctx.phi.size(); ++i) r0[i] = rat(ctx.phi[i]);
  RatVec r1 = c_;
  poly_trim(r1);
  RatVec u0{Rational(0)}, u1{Rational(1)};  // coefficients of c_ in r0, r1
  while (!(r1.size() == 1 && r1[0] == 0)) {
    auto [q, rem] = poly_divmod(r0, r1);
    RatVec qu1 = poly_mul(q, u1);
    RatVec nu(std::max(u0.size(), qu1.size()), Rational(0));
    for (size_t i = 0; i < u0.size(); ++i) nu[i] += u0[i];
    for (size_t i = 0; i < qu1.size(); ++i) nu[i] -= qu1[i];
    poly_trim(nu);
    r0 = std::move(r1);
    r1 = std::move(rem);
    u0 = std::move(u1);
    u1 = std::move(nu);
  }
  if (r0.size() != 1)
    throw std::logic_error("Cyclotomic::inverse: gcd with Phi_n not constant");
  const Rational scale = Rational(1) / r0[0];
  RatVec inv(ctx.deg, Rational(0));
  for (size_t i = 0; i < u0.size() && i < inv.size(); ++i) inv[i] = u0[i] * scale;
  // u0 may have degree >= deg in edge cases; reduce to be safe.
  if (u0.size() > ctx.deg) {
    RatVec full(u0.size(), Rational(0));
    for (size_t i = 0; i < u0.size(); ++i) full[i] = u0[i] * scale;
    inv = reduce_mod_phi(ctx, full);
  }
  return Cyclotomic(order_, std::move(inv));
}

Cyclotomic Cyclotomic::operator/(const Cyclotomic& o) const { return *this * o.inverse(); }

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  const unsigned n = lcm_u(order_, o.order_);
  return promoted(n).c_ == o.promoted(n).c_;
}

std::string Cyclotomic::to_string() const {
  if (is_rational()) return gb::to_string(c_[0]);
  std::string s;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) s += " + ";
    first = false;
    s += c_[i].get_str();
    if (i >= 1) s += "*z" + std::to_string(order_) + (i > 1 ? "^" + std::to_string(i) : "");
  }
  return s.empty() ? "0" : s;
}

}  // namespace gb
