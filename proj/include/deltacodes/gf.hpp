#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "ntheory.hpp"

namespace deltacodes {

using u64 = std::uint64_t;
using elem = std::uint32_t;  // packed element: sum of digit_i * p^i

enum class FieldMode { standard, paper };

namespace detail {

// Dense polynomials over F_p, low-to-high, no trailing zeros.
using fpoly = std::vector<u64>;

inline void trim(fpoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline fpoly fp_mod(fpoly a, const fpoly& f, u64 p) {
  trim(a);
  const std::size_t m = f.size() - 1;
  const u64 lead_inv = nt::powmod(f.back(), p - 2, p);
  while (a.size() > m) {
    u64 c = nt::mulmod(a.back(), lead_inv, p);
    std::size_t shift = a.size() - 1 - m;
    for (std::size_t i = 0; i <= m; ++i) a[shift + i] = (a[shift + i] + p - nt::mulmod(c, f[i], p)) % p;
    trim(a);
  }
  return a;
}

inline fpoly fp_mulmod(const fpoly& a, const fpoly& b, const fpoly& f, u64 p) {
  if (a.empty() || b.empty()) return {};
  fpoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + nt::mulmod(a[i], b[j], p)) % p;
  return fp_mod(std::move(r), f, p);
}

inline fpoly fp_powmod(fpoly b, u64 e, const fpoly& f, u64 p) {
  fpoly r{1};
  b = fp_mod(std::move(b), f, p);
  while (e) {
    if (e & 1) r = fp_mulmod(r, b, f, p);
    b = fp_mulmod(b, b, f, p);
    e >>= 1;
  }
  return r;
}

inline fpoly fp_gcd(fpoly a, fpoly b, u64 p) {
  trim(a), trim(b);
  while (!b.empty()) {
    a = fp_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

// X^(p^k) mod f by k successive p-th powers.
inline fpoly fp_frobenius_x(const fpoly& f, u64 p, unsigned k) {
  fpoly x = fp_mod(fpoly{0, 1}, f, p);
  for (unsigned i = 0; i < k; ++i) x = fp_powmod(x, p, f, p);
  return x;
}

inline bool fp_irreducible(const fpoly& f, u64 p) {
  const unsigned m = static_cast<unsigned>(f.size() - 1);
  if (m == 1) return true;
  fpoly x = fp_mod(fpoly{0, 1}, f, p);
  auto sub_x = [&](fpoly h) {
    if (h.size() < 2) h.resize(2, 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    return h;
  };
  if (sub_x(fp_frobenius_x(f, p, m)) != fpoly{}) return false;
  for (u64 r : nt::prime_divisors(m)) {
    fpoly g = fp_gcd(sub_x(fp_frobenius_x(f, p, static_cast<unsigned>(m / r))), f, p);
    if (g.size() != 1) return false;
  }
  return true;
}

inline bool fp_x_primitive(const fpoly& f, u64 p, u64 order) {
  if (f[0] == 0) return false;
  fpoly x{0, 1};
  if (fp_powmod(x, order, f, p) != fpoly{1}) return false;
  for (u64 r : nt::prime_divisors(order))
    if (fp_powmod(x, order / r, f, p) == fpoly{1}) return false;
  return true;
}

}  // namespace detail

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// GF(p^m) in the polynomial basis of a monic irreducible modulus.
class Field {
 public:
  static constexpr u64 max_size = u64{1} << 31;
  static constexpr u64 table_limit = u64{1} << 20;
  static constexpr u64 add_table_limit = 1024;

  // modulus: m+1 coefficients low-to-high, monic; empty selects the least primitive one.
  static FieldPtr create(u64 p, unsigned m, std::vector<elem> modulus = {}) {
    return FieldPtr(new Field(p, m, std::move(modulus)));
  }

  u64 p() const { return p_; }
  unsigned m() const { return m_; }
  u64 size() const { return size_; }
  u64 order() const { return size_ - 1; }
  const std::vector<elem>& modulus() const { return modulus_; }
  elem generator() const { return gen_; }
  bool has_tables() const { return size_ <= table_limit; }

  bool same(const Field& o) const { return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_; }

  elem digit(elem a, unsigned i) const { return static_cast<elem>((a / pw_[i]) % p_); }
  elem from_digits(const std::vector<u64>& d) const {
    u64 r = 0;
    for (unsigned i = 0; i < m_ && i < d.size(); ++i) r += (d[i] % p_) * pw_[i];
    return static_cast<elem>(r);
  }
  u64 digit_weight(unsigned i) const { return pw_[i]; }

  elem add(elem a, elem b) const {
    if (p_ == 2) return a ^ b;
    if (size_ <= add_table_limit) {
      ensure_add_table();
      return add_tab_[a * size_ + b];
    }
    return add_slow(a, b);
  }
  elem neg(elem a) const {
    if (p_ == 2 || a == 0) return a;
    elem r = 0;
    for (unsigned i = 0; i < m_; ++i) {
      elem d = digit(a, i);
      if (d) r += static_cast<elem>((p_ - d) * pw_[i]);
    }
    return r;
  }
  elem sub(elem a, elem b) const { return add(a, neg(b)); }

  elem mul(elem a, elem b) const {
    if (a == 0 || b == 0) return 0;
    if (has_tables()) {
      ensure_tables();
      return exp_[log_[a] + log_[b]];
    }
    return mul_slow(a, b);
  }
  elem inv(elem a) const {
    if (a == 0) raise(errc::division_by_zero, "inverse of zero");
    if (has_tables()) {
      ensure_tables();
      return exp_[(order() - log_[a]) % order()];
    }
    return pow(a, order() - 1);
  }
  elem div(elem a, elem b) const { return mul(a, inv(b)); }

  elem pow(elem a, u64 e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    e %= order();
    if (has_tables()) {
      ensure_tables();
      return exp_[nt::mulmod(log_[a], e, order())];
    }
    elem r = 1, b = a;
    while (e) {
      if (e & 1) r = mul_slow(r, b);
      b = mul_slow(b, b);
      e >>= 1;
    }
    return r;
  }

  // a^(Q) for a prime power Q of the characteristic; exponent reduced modulo the group order.
  elem frob(elem a, u64 Q) const { return pow(a, Q); }

  elem exp(u64 k) const {
    if (has_tables()) {
      ensure_tables();
      return exp_[k % order()];
    }
    return pow(gen_, k);
  }

  // Discrete log with respect to the generator.
  u64 log(elem a) const {
    if (a == 0) raise(errc::division_by_zero, "log of zero");
    if (has_tables()) {
      ensure_tables();
      return log_[a];
    }
    return bsgs(a);
  }

  // Multiplicative order of a nonzero element.
  u64 element_order(elem a) const {
    if (a == 0) raise(errc::division_by_zero, "order of zero");
    u64 o = order();
    for (auto [r, e] : nt::factor(order()))
      for (unsigned i = 0; i < e && pow(a, o / r) == 1; ++i) o /= r;
    return o;
  }

  bool in_prime_field(elem a) const { return a < p_; }

  std::string spec() const {
    std::ostringstream os;
    os << p_ << '^' << m_ << '/';
    for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
    return os.str();
  }

 private:
  Field(u64 p, unsigned m, std::vector<elem> modulus) : p_(p), m_(m) {
    if (!nt::is_prime(p) || p >= (u64{1} << 16)) raise(errc::invalid_params, "characteristic must be a prime below 2^16");
    if (m == 0) raise(errc::invalid_params, "extension degree must be at least 1");
    size_ = 1;
    for (unsigned i = 0; i < m; ++i) {
      pw_.push_back(size_);
      size_ *= p;
      if (size_ > max_size) raise(errc::too_large, "field larger than 2^31 elements");
    }
    if (modulus.empty()) {
      modulus_ = default_modulus();
    } else {
      if (modulus.size() != m + 1 || modulus.back() != 1)
        raise(errc::invalid_params, "modulus must be monic of degree m");
      for (elem c : modulus)
        if (c >= p) raise(errc::invalid_params, "modulus coefficient out of range");
      detail::fpoly f(modulus.begin(), modulus.end());
      if (!detail::fp_irreducible(f, p)) raise(errc::invalid_params, "modulus is not irreducible over F_p");
      modulus_ = std::move(modulus);
    }
    gen_ = find_generator();
  }

  std::vector<elem> default_modulus() const {
    if (m_ == 1) return {0, 1};
    for (u64 v = 1; v < size_; ++v) {
      detail::fpoly f(m_ + 1, 0);
      u64 x = v;
      for (unsigned i = 0; i < m_; ++i) f[i] = x % p_, x /= p_;
      f[m_] = 1;
      if (detail::fp_x_primitive(f, p_, order())) return std::vector<elem>(f.begin(), f.end());
    }
    raise(errc::invalid_params, "no primitive polynomial found");
  }

  bool primitive_slow(elem a) const {
    if (a == 0) return false;
    auto pw = [&](u64 e) {
      elem r = 1, b = a;
      while (e) {
        if (e & 1) r = mul_slow(r, b);
        b = mul_slow(b, b);
        e >>= 1;
      }
      return r;
    };
    if (order() == 1) return a == 1;
    for (u64 r : nt::prime_divisors(order()))
      if (pw(order() / r) == 1) return false;
    return true;
  }

  elem find_generator() const {
    if (m_ > 1 && primitive_slow(static_cast<elem>(p_))) return static_cast<elem>(p_);
    for (u64 a = 1; a < size_; ++a)
      if (primitive_slow(static_cast<elem>(a))) return static_cast<elem>(a);
    raise(errc::invalid_params, "no primitive element");
  }

  elem add_slow(elem a, elem b) const {
    elem r = 0;
    for (unsigned i = 0; i < m_; ++i) {
      u64 s = a % p_ + b % p_;
      a /= static_cast<elem>(p_), b /= static_cast<elem>(p_);
      if (s >= p_) s -= p_;
      r += static_cast<elem>(s * pw_[i]);
    }
    return r;
  }

  elem mul_slow(elem a, elem b) const {
    if (m_ == 1) return static_cast<elem>(static_cast<u64>(a) * b % p_);
    u64 da[32], db[32], prod[64] = {};
    for (unsigned i = 0; i < m_; ++i) da[i] = a % p_, a /= static_cast<elem>(p_);
    for (unsigned i = 0; i < m_; ++i) db[i] = b % p_, b /= static_cast<elem>(p_);
    for (unsigned i = 0; i < m_; ++i) {
      if (!da[i]) continue;
      for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    }
    for (unsigned k = 2 * m_ - 2; k >= m_; --k) {
      u64 c = prod[k];
      if (!c) continue;
      prod[k] = 0;
      for (unsigned i = 0; i < m_; ++i) prod[k - m_ + i] = (prod[k - m_ + i] + (p_ - c) * modulus_[i]) % p_;
    }
    u64 r = 0;
    for (unsigned i = 0; i < m_; ++i) r += prod[i] * pw_[i];
    return static_cast<elem>(r);
  }

  void ensure_tables() const {
    std::call_once(tables_once_, [this] {
      exp_.assign(2 * order() + 1, 0);
      log_.assign(size_, 0);
      elem x = 1;
      for (u64 k = 0; k < order(); ++k) {
        exp_[k] = x;
        log_[x] = static_cast<std::uint32_t>(k);
        x = mul_slow(x, gen_);
      }
      for (u64 k = order(); k < exp_.size(); ++k) exp_[k] = exp_[k - order()];
    });
  }

  void ensure_add_table() const {
    std::call_once(add_once_, [this] {
      add_tab_.resize(size_ * size_);
      for (u64 a = 0; a < size_; ++a)
        for (u64 b = 0; b < size_; ++b)
          add_tab_[a * size_ + b] = static_cast<std::uint16_t>(add_slow(static_cast<elem>(a), static_cast<elem>(b)));
    });
  }

  u64 bsgs(elem a) const {
    u64 s = 1;
    while (s * s < order()) ++s;
    std::unordered_map<elem, u64> baby;
    elem x = 1;
    for (u64 j = 0; j < s; ++j) {
      baby.emplace(x, j);
      x = mul_slow(x, gen_);
    }
    elem giant = pow(inv(pow(gen_, 1)), s);
    elem y = a;
    for (u64 i = 0; i <= s; ++i) {
      auto it = baby.find(y);
      if (it != baby.end()) return (i * s + it->second) % order();
      y = mul_slow(y, giant);
    }
    raise(errc::invalid_params, "discrete log failed");
  }

  u64 p_;
  unsigned m_;
  u64 size_ = 1;
  std::vector<u64> pw_;
  std::vector<elem> modulus_;
  elem gen_ = 1;

  mutable std::once_flag tables_once_;
  mutable std::vector<elem> exp_;
  mutable std::vector<std::uint32_t> log_;
  mutable std::once_flag add_once_;
  mutable std::vector<std::uint16_t> add_tab_;
};

// Moduli used by the worked example and the good-code tables.
inline std::optional<std::vector<elem>> paper_modulus(u64 p, unsigned m) {
  static const std::map<std::pair<u64, unsigned>, std::vector<elem>> table = {
      {{2, 2}, {1, 1, 1}},  {{3, 2}, {2, 2, 1}},   {{3, 6}, {2, 2, 1, 0, 2, 0, 1}},
      {{5, 2}, {2, 4, 1}},  {{7, 2}, {3, 6, 1}},   {{11, 2}, {2, 7, 1}},
      {{13, 2}, {2, 12, 1}}, {{17, 2}, {3, 16, 1}}, {{19, 2}, {2, 18, 1}},
  };
  auto it = table.find({p, m});
  if (it == table.end()) return std::nullopt;
  return it->second;
}

// Shared field instances; paper mode substitutes the tabulated moduli where present.
inline FieldPtr field_for(u64 p, unsigned m, FieldMode mode = FieldMode::standard) {
  static std::mutex mu;
  static std::map<std::tuple<u64, unsigned, int>, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(p, m, mode == FieldMode::paper ? 1 : 0);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<elem> mod;
  if (mode == FieldMode::paper)
    if (auto pm = paper_modulus(p, m)) mod = *pm;
  auto F = Field::create(p, m, mod);
  cache.emplace(key, F);
  return F;
}

// Field of cardinality q (a prime power).
inline FieldPtr field_of_size(u64 q, FieldMode mode = FieldMode::standard) {
  auto pp = nt::prime_power(q);
  if (!pp) raise(errc::invalid_params, "q=" + std::to_string(q) + " is not a prime power");
  return field_for(pp->first, pp->second, mode);
}

// Parses "p^m/c0,c1,...,cm" (low-to-high, monic).
inline FieldPtr parse_field_spec(const std::string& s) {
  auto caret = s.find('^');
  auto slash = s.find('/');
  if (caret == std::string::npos || slash == std::string::npos || slash < caret)
    raise(errc::parse_error, "field spec must look like p^m/c0,...,cm");
  try {
    u64 p = std::stoull(s.substr(0, caret));
    unsigned m = static_cast<unsigned>(std::stoul(s.substr(caret + 1, slash - caret - 1)));
    std::vector<elem> coeffs;
    std::stringstream ss(s.substr(slash + 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) coeffs.push_back(static_cast<elem>(std::stoul(tok)));
    return Field::create(p, m, coeffs);
  } catch (const std::invalid_argument&) {
    raise(errc::parse_error, "malformed field spec '" + s + "'");
  }
}

// Value type pairing an element with its field.
struct FieldElement {
  FieldPtr F;
  elem v = 0;

  FieldElement() = default;
  FieldElement(FieldPtr f, elem x) : F(std::move(f)), v(x) {}

  friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.F->same(*b.F) && a.v == b.v; }
};

enum class FieldOp { add, sub, mul, div, pow, inv };

inline FieldElement field_arith(const FieldElement& x, const FieldElement& y, FieldOp op, u64 e = 0) {
  if (op != FieldOp::pow && op != FieldOp::inv && !x.F->same(*y.F))
    raise(errc::field_mismatch, "operands live in different fields");
  const Field& F = *x.F;
  switch (op) {
    case FieldOp::add: return {x.F, F.add(x.v, y.v)};
    case FieldOp::sub: return {x.F, F.sub(x.v, y.v)};
    case FieldOp::mul: return {x.F, F.mul(x.v, y.v)};
    case FieldOp::div: return {x.F, F.div(x.v, y.v)};
    case FieldOp::pow: return {x.F, F.pow(x.v, e)};
    case FieldOp::inv: return {x.F, F.inv(x.v)};
  }
  return x;
}

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) { return field_arith(a, b, FieldOp::add); }
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) { return field_arith(a, b, FieldOp::sub); }
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) { return field_arith(a, b, FieldOp::mul); }
inline FieldElement operator/(const FieldElement& a, const FieldElement& b) { return field_arith(a, b, FieldOp::div); }

// Tr_{Q,r}(b) = sum_{w<r} b^(Q^w), for b in a field of cardinality Q^r.
struct TraceParams {
  u64 Q;
  unsigned r;
};

inline elem trace(const Field& F, elem b, TraceParams tp) {
  if (nt::ipow(tp.Q, tp.r) != F.size()) raise(errc::param_mismatch, "trace: field is not F_{Q^r}");
  elem s = 0, x = b;
  for (unsigned w = 0; w < tp.r; ++w) {
    s = F.add(s, x);
    x = F.frob(x, tp.Q);
  }
  return s;
}

// t = 2^a * odd, A = 2^(a-1), Q' = q^A.
struct TDecomp {
  unsigned a = 0, odd = 1, A = 0;
  u64 Qp = 1;

  static TDecomp of(u64 q, unsigned t) {
    TDecomp d;
    unsigned x = t;
    while (x % 2 == 0) x /= 2, ++d.a;
    d.odd = x;
    d.A = d.a ? (1u << (d.a - 1)) : 0;
    d.Qp = nt::ipow(q, d.A);
    return d;
  }
};

inline void check_delta_params(const Field& Fqt, u64 q, unsigned t) {
  if (t == 0 || t % 2) raise(errc::invalid_params, "t must be even");
  if (t % Fqt.p() == 1 % Fqt.p()) raise(errc::invalid_params, "t != 1 (mod p) required");
  if (nt::ipow(q, t) != Fqt.size()) raise(errc::param_mismatch, "field is not F_{q^t}");
}

// Nonzero gamma with gamma + gamma^(q^A) = 0 of least discrete log.
inline elem find_gamma(const Field& Fqt, u64 q, unsigned t) {
  check_delta_params(Fqt, q, t);
  TDecomp td = TDecomp::of(q, t);
  u64 sub = nt::ipow(q, 1u << td.a);
  u64 step = Fqt.order() / (sub - 1);
  for (u64 j = 0; j < sub - 1; ++j) {
    elem g = Fqt.exp(j * step);
    if (Fqt.add(g, Fqt.frob(g, td.Qp)) == 0) return g;
  }
  raise(errc::invalid_params, "no gamma exists");
}

// psi(a) = a^q + a^(q^2) + ... + a^(q^(t-1)).
inline elem psi(const Field& Fqt, elem a, u64 q, unsigned t) {
  check_delta_params(Fqt, q, t);
  elem s = 0, x = a;
  for (unsigned w = 1; w < t; ++w) {
    x = Fqt.frob(x, q);
    s = Fqt.add(s, x);
  }
  return s;
}

// From psi(a) = Tr(a) - a and Tr(psi(a)) = (t-1) Tr(a).
inline elem psi_inverse(const Field& Fqt, elem b, u64 q, unsigned t) {
  check_delta_params(Fqt, q, t);
  elem tr = trace(Fqt, b, {q, t});
  elem tm1 = static_cast<elem>((t - 1) % Fqt.p());
  return Fqt.sub(Fqt.mul(tr, Fqt.inv(tm1)), b);
}

// F_p-linear field homomorphism src -> dst sending X to the root of src's modulus of least log.
class Embedding {
 public:
  Embedding() = default;

  static Embedding make(FieldPtr src, FieldPtr dst) {
    if (src->p() != dst->p() || dst->m() % src->m() != 0)
      raise(errc::not_a_subfield, "GF(" + std::to_string(src->size()) + ") is not a subfield of GF(" +
                                      std::to_string(dst->size()) + ")");
    std::vector<elem> img{1};
    if (src->m() > 1) {
      const Field& D = *dst;
      u64 step = D.order() / src->order();
      std::optional<elem> root;
      for (u64 j = 1; j <= src->order() && !root; ++j) {
        elem r = D.exp(j * step);
        elem v = 0;
        for (std::size_t i = src->modulus().size(); i-- > 0;) v = D.add(D.mul(v, r), src->modulus()[i]);
        if (v == 0) root = r;
      }
      if (!root) raise(errc::not_a_subfield, "modulus has no root in target");
      for (unsigned i = 1; i < src->m(); ++i) img.push_back(D.mul(img.back(), *root));
    }
    return Embedding(std::move(src), std::move(dst), std::move(img));
  }

  // x -> outer(inner(x)).
  static Embedding compose(const Embedding& inner, const Embedding& outer) {
    if (!inner.dst_->same(*outer.src_)) raise(errc::field_mismatch, "embeddings do not chain");
    std::vector<elem> img;
    for (elem b : inner.img_) img.push_back(outer(b));
    return Embedding(inner.src_, outer.dst_, std::move(img));
  }

  const FieldPtr& src() const { return src_; }
  const FieldPtr& dst() const { return dst_; }

  elem operator()(elem x) const {
    if (!table_.empty()) return table_[x];
    return map_slow(x);
  }

  bool contains(elem y) const { return dst_->frob(y, src_->size()) == y; }

  std::optional<elem> try_preimage(elem y) const {
    const u64 p = src_->p();
    const unsigned m = src_->m();
    std::vector<u64> x(m, 0);
    for (unsigned i = 0; i < m; ++i) {
      u64 acc = 0;
      for (unsigned k = 0; k < m; ++k) acc = (acc + inv_[i * m + k] * dst_->digit(y, rows_[k])) % p;
      x[i] = acc;
    }
    elem cand = src_->from_digits(x);
    if ((*this)(cand) != y) return std::nullopt;
    return cand;
  }

  elem preimage(elem y) const {
    auto r = try_preimage(y);
    if (!r) raise(errc::coefficient_not_in_subfield, "element is not in the subfield GF(" + std::to_string(src_->size()) + ")");
    return *r;
  }

 private:
  Embedding(FieldPtr src, FieldPtr dst, std::vector<elem> img) : src_(std::move(src)), dst_(std::move(dst)), img_(std::move(img)) {
    if (src_->size() <= 4096) {
      table_.resize(src_->size());
      for (u64 x = 0; x < src_->size(); ++x) table_[x] = map_slow(static_cast<elem>(x));
    }
    build_inverse();
  }

  elem map_slow(elem x) const {
    elem r = 0;
    for (unsigned i = 0; i < src_->m(); ++i) {
      elem d = src_->digit(x, i);
      if (d) r = dst_->add(r, dst_->mul(d, img_[i]));
    }
    return r;
  }

  // Picks m independent target-digit rows of the basis image matrix and inverts them mod p.
  void build_inverse() {
    const u64 p = src_->p();
    const unsigned m = src_->m(), M = dst_->m();
    auto col = [&](unsigned row, unsigned i) -> u64 { return dst_->digit(img_[i], row); };
    std::vector<std::vector<u64>> ech;
    std::vector<unsigned> piv;
    for (unsigned row = 0; row < M && rows_.size() < m; ++row) {
      std::vector<u64> v(m);
      for (unsigned i = 0; i < m; ++i) v[i] = col(row, i);
      for (std::size_t k = 0; k < ech.size(); ++k) {
        u64 c = v[piv[k]];
        if (c)
          for (unsigned i = 0; i < m; ++i) v[i] = (v[i] + (p - c) * ech[k][i]) % p;
      }
      unsigned pc = 0;
      while (pc < m && v[pc] == 0) ++pc;
      if (pc == m) continue;
      u64 inv = nt::powmod(v[pc], p - 2, p);
      for (auto& x : v) x = x * inv % p;
      for (auto& e : ech) {
        u64 c = e[pc];
        if (c)
          for (unsigned i = 0; i < m; ++i) e[i] = (e[i] + (p - c) * v[i]) % p;
      }
      ech.push_back(v);
      piv.push_back(pc);
      rows_.push_back(row);
    }
    // Gauss-Jordan on [B_R | I].
    std::vector<std::vector<u64>> a(m, std::vector<u64>(2 * m, 0));
    for (unsigned k = 0; k < m; ++k) {
      for (unsigned i = 0; i < m; ++i) a[k][i] = col(rows_[k], i);
      a[k][m + k] = 1;
    }
    for (unsigned c = 0; c < m; ++c) {
      unsigned r = c;
      while (a[r][c] == 0) ++r;
      std::swap(a[r], a[c]);
      u64 inv = nt::powmod(a[c][c], p - 2, p);
      for (auto& x : a[c]) x = x * inv % p;
      for (unsigned k = 0; k < m; ++k) {
        if (k == c || a[k][c] == 0) continue;
        u64 f = a[k][c];
        for (unsigned j = 0; j < 2 * m; ++j) a[k][j] = (a[k][j] + (p - f) * a[c][j]) % p;
      }
    }
    inv_.assign(m * m, 0);
    for (unsigned i = 0; i < m; ++i)
      for (unsigned k = 0; k < m; ++k) inv_[i * m + k] = a[i][m + k];
  }

  FieldPtr src_, dst_;
  std::vector<elem> img_;
  std::vector<elem> table_;
  std::vector<unsigned> rows_;
  std::vector<u64> inv_;
};

inline FieldElement embed(const FieldElement& x, const FieldPtr& target) {
  return {target, Embedding::make(x.F, target)(x.v)};
}

// Tokens: prime-field elements as integers, others as "w^k" (k = discrete log).
inline std::string to_token(const Field& F, elem x) {
  if (F.in_prime_field(x)) return std::to_string(x);
  u64 k = F.log(x);
  return k == 1 ? std::string("w") : "w^" + std::to_string(k);
}

inline elem parse_token(const Field& F, std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) raise(errc::parse_error, "empty element token");
  try {
    if (s[0] == 'w') {
      if (s.size() == 1) return F.generator();
      if (s[1] != '^') raise(errc::parse_error, "bad element token '" + s + "'");
      return F.exp(std::stoull(s.substr(2)));
    }
    long long v = std::stoll(s);
    long long pm = static_cast<long long>(F.p());
    return static_cast<elem>(((v % pm) + pm) % pm);
  } catch (const std::logic_error&) {
    raise(errc::parse_error, "bad element token '" + s + "'");
  }
}

}  // namespace deltacodes
