#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gf.hpp"

namespace deltacodes {

// Dense univariate polynomial, low-to-high, no trailing zeros.
struct Polynomial {
  FieldPtr F;
  std::vector<elem> c;

  Polynomial() = default;
  Polynomial(FieldPtr f, std::vector<elem> coeffs) : F(std::move(f)), c(std::move(coeffs)) { trim(); }

  static Polynomial monomial(FieldPtr f, std::size_t k, elem a = 1) {
    std::vector<elem> v(k + 1, 0);
    v[k] = a;
    return {std::move(f), std::move(v)};
  }
  static Polynomial x_n_minus_1(FieldPtr f, std::size_t n) {
    std::vector<elem> v(n + 1, 0);
    v[n] = 1;
    v[0] = f->neg(1);
    return {std::move(f), std::move(v)};
  }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  long degree() const { return static_cast<long>(c.size()) - 1; }
  elem lead() const { return c.empty() ? 0 : c.back(); }
  elem coeff(std::size_t k) const { return k < c.size() ? c[k] : 0; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.F->same(*b.F) && a.c == b.c; }
};

namespace detail {
inline void same_field(const Polynomial& f, const Polynomial& g) {
  if (!f.F->same(*g.F)) raise(errc::field_mismatch, "polynomials over different fields");
}
}  // namespace detail

inline Polynomial poly_add(const Polynomial& f, const Polynomial& g) {
  detail::same_field(f, g);
  std::vector<elem> r(std::max(f.c.size(), g.c.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.F->add(f.coeff(i), g.coeff(i));
  return {f.F, std::move(r)};
}

inline Polynomial poly_sub(const Polynomial& f, const Polynomial& g) {
  detail::same_field(f, g);
  std::vector<elem> r(std::max(f.c.size(), g.c.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.F->sub(f.coeff(i), g.coeff(i));
  return {f.F, std::move(r)};
}

inline Polynomial poly_scale(const Polynomial& f, elem a) {
  std::vector<elem> r(f.c.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.F->mul(a, f.c[i]);
  return {f.F, std::move(r)};
}

inline Polynomial poly_mul(const Polynomial& f, const Polynomial& g) {
  detail::same_field(f, g);
  if (f.is_zero() || g.is_zero()) return {f.F, {}};
  const Field& F = *f.F;
  std::vector<elem> r(f.c.size() + g.c.size() - 1, 0);
  for (std::size_t i = 0; i < f.c.size(); ++i) {
    if (!f.c[i]) continue;
    for (std::size_t j = 0; j < g.c.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(f.c[i], g.c[j]));
  }
  return {f.F, std::move(r)};
}

inline std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& f, const Polynomial& g) {
  detail::same_field(f, g);
  if (g.is_zero()) raise(errc::division_by_zero, "polynomial division by zero");
  const Field& F = *f.F;
  std::vector<elem> r = f.c, q;
  const std::size_t dg = g.c.size() - 1;
  const elem li = F.inv(g.lead());
  if (r.size() > dg) q.assign(r.size() - dg, 0);
  for (std::size_t k = r.size(); k-- > dg;) {
    elem a = F.mul(r[k], li);
    if (!a) continue;
    q[k - dg] = a;
    for (std::size_t i = 0; i <= dg; ++i) r[k - dg + i] = F.sub(r[k - dg + i], F.mul(a, g.c[i]));
  }
  return {Polynomial(f.F, std::move(q)), Polynomial(f.F, std::move(r))};
}

inline Polynomial poly_mod(const Polynomial& f, const Polynomial& g) { return poly_divmod(f, g).second; }

inline Polynomial poly_monic(const Polynomial& f) {
  if (f.is_zero()) return f;
  return poly_scale(f, f.F->inv(f.lead()));
}

inline Polynomial poly_gcd(Polynomial a, Polynomial b) {
  detail::same_field(a, b);
  while (!b.is_zero()) {
    Polynomial r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(a);
}

struct Xgcd {
  Polynomial g, u, v;  // u*a + v*b = g, g monic
};

inline Xgcd poly_xgcd(const Polynomial& a, const Polynomial& b) {
  detail::same_field(a, b);
  Polynomial r0 = a, r1 = b;
  Polynomial u0(a.F, {1}), u1(a.F, {}), v0(a.F, {}), v1(a.F, {1});
  while (!r1.is_zero()) {
    auto [qq, rr] = poly_divmod(r0, r1);
    Polynomial u2 = poly_sub(u0, poly_mul(qq, u1));
    Polynomial v2 = poly_sub(v0, poly_mul(qq, v1));
    r0 = std::move(r1), r1 = std::move(rr);
    u0 = std::move(u1), u1 = std::move(u2);
    v0 = std::move(v1), v1 = std::move(v2);
  }
  if (r0.is_zero()) return {r0, u0, v0};
  elem li = a.F->inv(r0.lead());
  return {poly_scale(r0, li), poly_scale(u0, li), poly_scale(v0, li)};
}

inline elem poly_eval(const Polynomial& f, elem x) {
  const Field& F = *f.F;
  elem v = 0;
  for (std::size_t i = f.c.size(); i-- > 0;) v = F.add(F.mul(v, x), f.c[i]);
  return v;
}

enum class PolyOp { add, mul, mod, gcd };

inline Polynomial poly_arith(const Polynomial& f, const Polynomial& g, PolyOp op) {
  switch (op) {
    case PolyOp::add: return poly_add(f, g);
    case PolyOp::mul: return poly_mul(f, g);
    case PolyOp::mod: return poly_mod(f, g);
    case PolyOp::gcd: return poly_gcd(f, g);
  }
  return f;
}

// Comma-separated low-to-high tokens; the zero polynomial prints as "0".
inline std::string to_text(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < f.c.size(); ++i) s += (i ? "," : "") + to_token(*f.F, f.c[i]);
  return s;
}

// Human-readable high-to-low rendering, e.g. "X^3 + w*X^2 + w^7*X + 2".
inline std::string to_pretty(const Polynomial& f, const std::string& var = "X") {
  if (f.is_zero()) return "0";
  std::string s;
  for (std::size_t k = f.c.size(); k-- > 0;) {
    if (!f.c[k]) continue;
    if (!s.empty()) s += " + ";
    std::string mon = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    std::string co = to_token(*f.F, f.c[k]);
    if (mon.empty()) s += co;
    else if (co == "1") s += mon;
    else s += co + "*" + mon;
  }
  return s;
}

inline Polynomial parse_poly(const FieldPtr& F, const std::string& text) {
  std::vector<elem> c;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) c.push_back(parse_token(*F, tok));
  return {F, std::move(c)};
}

// q-cyclotomic cosets modulo n, sorted by least element; each coset listed in increasing order.
inline std::vector<std::vector<long>> cyclotomic_cosets(long n, u64 base) {
  if (n < 1) raise(errc::invalid_params, "n must be positive");
  if (std::gcd(static_cast<u64>(n), base) != 1)
    raise(errc::not_coprime, "gcd(n,q)=1 required (n=" + std::to_string(n) + ", q=" + std::to_string(base) + ")");
  std::vector<char> seen(n, 0);
  std::vector<std::vector<long>> out;
  const long b = static_cast<long>(base % n);
  for (long l = 0; l < n; ++l) {
    if (seen[l]) continue;
    std::vector<long> cs;
    long x = l;
    while (!seen[x]) {
      seen[x] = 1;
      cs.push_back(x);
      x = (x * b) % n;
    }
    std::sort(cs.begin(), cs.end());
    out.push_back(std::move(cs));
  }
  return out;
}

// Orbit of l under multiplication by base, in generation order l, l*base, ...
inline std::vector<long> coset_orbit(long l, long n, u64 base) {
  std::vector<long> out{nt::mod(l, n)};
  const long b = static_cast<long>(base % n);
  for (long x = out[0] * b % n; x != out[0]; x = x * b % n) out.push_back(x);
  return out;
}

struct SplittingData {
  long n = 1;
  u64 q = 2;
  u64 ord = 1;
  FieldPtr field;
  elem eta_prime = 1;
};

// Splitting field of X^n - 1 over F_q with eta' = generator^((q^ord - 1)/n).
inline SplittingData splitting_data(long n, u64 q, FieldMode mode = FieldMode::standard) {
  auto pp = nt::prime_power(q);
  if (!pp) raise(errc::invalid_params, "q=" + std::to_string(q) + " is not a prime power");
  if (n < 1) raise(errc::invalid_params, "n must be positive");
  if (std::gcd(static_cast<u64>(n), q) != 1)
    raise(errc::not_coprime, "gcd(n,q)=1 required (n=" + std::to_string(n) + ", q=" + std::to_string(q) + ")");
  SplittingData sd;
  sd.n = n;
  sd.q = q;
  sd.ord = nt::mult_order(q % n, n);
  sd.field = field_for(pp->first, static_cast<unsigned>(pp->second * sd.ord), mode);
  sd.eta_prime = sd.field->exp(sd.field->order() / n);
  return sd;
}

// prod_{k in coset} (X - eta'^k), coerced into the subfield given by emb (target -> splitting field).
inline Polynomial minimal_poly(const std::vector<long>& coset, const Field& W, elem eta_prime, const Embedding& emb) {
  FieldPtr Wp = emb.dst();
  Polynomial acc(Wp, {1});
  for (long k : coset) acc = poly_mul(acc, Polynomial(Wp, {W.neg(W.pow(eta_prime, static_cast<u64>(k))), 1}));
  std::vector<elem> out;
  for (elem a : acc.c) out.push_back(emb.preimage(a));
  return {emb.src(), std::move(out)};
}

inline Polynomial minimal_poly(const std::vector<long>& coset, const SplittingData& sd, const FieldPtr& target) {
  return minimal_poly(coset, *sd.field, sd.eta_prime, Embedding::make(target, sd.field));
}

struct Factor {
  Polynomial poly;
  std::vector<long> coset;
};

// Factors of X^n - 1 over emb.src() from the cosets of |src| and eta' in emb.dst().
inline std::vector<Factor> factor_with(long n, const Embedding& emb, elem eta_prime) {
  const FieldPtr& F = emb.src();
  std::vector<Factor> out;
  Polynomial prod(F, {1});
  for (auto& cs : cyclotomic_cosets(n, F->size())) {
    Polynomial m = minimal_poly(cs, *emb.dst(), eta_prime, emb);
    prod = poly_mul(prod, m);
    out.push_back({std::move(m), cs});
  }
  if (!(prod == Polynomial::x_n_minus_1(F, n))) raise(errc::invalid_params, "factor product differs from X^n-1");
  return out;
}

inline std::vector<Factor> factor_xn_minus_1(long n, const FieldPtr& F, FieldMode mode = FieldMode::standard) {
  SplittingData sd = splitting_data(n, F->size(), mode);
  return factor_with(n, Embedding::make(F, sd.field), sd.eta_prime);
}

// The group algebra F[X]/<X^n - 1>; elements are coefficient vectors of length n.
class GroupAlgebra {
 public:
  using vec = std::vector<elem>;

  GroupAlgebra() = default;
  GroupAlgebra(long n, FieldPtr F) : n_(n), F_(std::move(F)) {}

  long n() const { return n_; }
  const FieldPtr& field() const { return F_; }

  vec zero() const { return vec(n_, 0); }
  vec one() const {
    vec v(n_, 0);
    v[0] = 1;
    return v;
  }
  vec monomial(long k, elem a = 1) const {
    vec v(n_, 0);
    v[nt::mod(k, n_)] = a;
    return v;
  }
  vec constant(elem a) const { return monomial(0, a); }

  void check(const vec& a) const {
    if (static_cast<long>(a.size()) != n_) raise(errc::length_mismatch, "group algebra element has wrong length");
  }

  vec add(const vec& a, const vec& b) const {
    check(a), check(b);
    vec r(n_);
    for (long i = 0; i < n_; ++i) r[i] = F_->add(a[i], b[i]);
    return r;
  }
  vec sub(const vec& a, const vec& b) const {
    check(a), check(b);
    vec r(n_);
    for (long i = 0; i < n_; ++i) r[i] = F_->sub(a[i], b[i]);
    return r;
  }
  vec neg(const vec& a) const {
    vec r(n_);
    for (long i = 0; i < n_; ++i) r[i] = F_->neg(a[i]);
    return r;
  }
  vec scale(elem s, const vec& a) const {
    vec r(n_);
    for (long i = 0; i < n_; ++i) r[i] = F_->mul(s, a[i]);
    return r;
  }
  vec mul(const vec& a, const vec& b) const {
    check(a), check(b);
    vec r(n_, 0);
    for (long i = 0; i < n_; ++i) {
      if (!a[i]) continue;
      for (long j = 0; j < n_; ++j) {
        if (!b[j]) continue;
        long k = i + j;
        if (k >= n_) k -= n_;
        r[k] = F_->add(r[k], F_->mul(a[i], b[j]));
      }
    }
    return r;
  }
  // X^k * a, i.e. the k-fold cyclic shift.
  vec shift(const vec& a, long k) const {
    check(a);
    vec r(n_);
    for (long i = 0; i < n_; ++i) r[nt::mod(i + k, n_)] = a[i];
    return r;
  }
  // a^e with a^0 := identity (the unit of the ideal a lives in).
  vec pow(vec a, u64 e, vec identity) const {
    vec r = std::move(identity);
    while (e) {
      if (e & 1) r = mul(r, a);
      e >>= 1;
      if (e) a = mul(a, a);
    }
    return r;
  }
  // tau_{Qw,u}: sum a_k X^k -> sum a_k^Qw X^(uk mod n).
  vec tau(const vec& a, u64 Qw, long u) const {
    check(a);
    if (std::gcd(nt::mod(u, n_), n_) != 1 && n_ > 1) raise(errc::u_not_coprime, "gcd(u,n)=1 required");
    vec r(n_, 0);
    for (long k = 0; k < n_; ++k) r[nt::mod(u * k, n_)] = F_->frob(a[k], Qw);
    return r;
  }
  bool is_zero(const vec& a) const {
    return std::all_of(a.begin(), a.end(), [](elem x) { return x == 0; });
  }

  vec from_poly(const Polynomial& f) const {
    vec r(n_, 0);
    for (std::size_t k = 0; k < f.c.size(); ++k) r[k % n_] = F_->add(r[k % n_], f.c[k]);
    return r;
  }
  Polynomial to_poly(const vec& a) const { return {F_, a}; }

 private:
  long n_ = 1;
  FieldPtr F_;
};

}  // namespace deltacodes
