#pragma once

#include <memory>
#include <vector>

#include "structure.hpp"

namespace deltacodes {

// Parameters of the ambient space F_{q^t}^n together with gamma and, when affordable, the ideal atlas.
struct DeltaContext {
  long n = 1;
  u64 q = 2;
  unsigned t = 2;
  FieldPtr Fq, Fqt;
  Embedding q_qt;
  elem gamma = 1;
  u64 half = 1;  // q^(t/2)
  GroupAlgebra R, Rq;
  AtlasPtr atlas;

  // Tr(gamma x psi(y^(q^(t/2)))), returned as an element of F_q.
  elem scalar(elem x, elem y) const {
    const Field& F = *Fqt;
    elem z;
    if (t == 2) {
      z = F.mul(gamma, F.mul(x, y));
    } else {
      z = F.mul(gamma, F.mul(x, psi(F, F.frob(y, half), q, t)));
    }
    return q_qt.preimage(trace(F, z, {q, t}));
  }

  void check_vec(const vec& a) const {
    if (static_cast<long>(a.size()) != n) raise(errc::length_mismatch, "vector length differs from n");
    for (elem x : a)
      if (x >= Fqt->size()) raise(errc::field_mismatch, "coefficient outside F_{q^t}");
  }
};

using ContextPtr = std::shared_ptr<const DeltaContext>;

inline ContextPtr make_context(long n, u64 q, unsigned t, FieldMode mode = FieldMode::standard, AtlasPtr atlas = nullptr) {
  auto pp = nt::prime_power(q);
  if (!pp) raise(errc::invalid_params, "q=" + std::to_string(q) + " is not a prime power");
  if (n < 1) raise(errc::invalid_params, "n must be positive");
  if (std::gcd<u64>(static_cast<u64>(n), q) != 1)
    raise(errc::not_coprime, "gcd(n,q)=1 required (n=" + std::to_string(n) + ", q=" + std::to_string(q) + ")");
  auto c = std::make_shared<DeltaContext>();
  c->n = n, c->q = q, c->t = t;
  c->Fq = field_for(pp->first, pp->second, mode);
  c->Fqt = field_for(pp->first, pp->second * t, mode);
  c->q_qt = Embedding::make(c->Fq, c->Fqt);
  c->gamma = find_gamma(*c->Fqt, q, t);
  c->half = nt::ipow(q, t / 2);
  c->R = GroupAlgebra(n, c->Fqt);
  c->Rq = GroupAlgebra(n, c->Fq);
  if (atlas) {
    if (atlas->n() != n || atlas->q() != q || atlas->t() != t) raise(errc::param_mismatch, "atlas parameters differ");
    if (!atlas->Fqt->same(*c->Fqt)) raise(errc::field_mismatch, "atlas uses another model of F_{q^t}");
  }
  c->atlas = std::move(atlas);
  return c;
}

inline ContextPtr make_context(const AtlasPtr& atlas, FieldMode mode = FieldMode::standard) {
  return make_context(atlas->n(), atlas->q(), atlas->t(), mode, atlas);
}

// Straight from the definition: sum_j Tr(gamma a_j psi(b_j^(q^(t/2)))).
inline elem delta_inner(const vec& a, const vec& b, const DeltaContext& ctx) {
  ctx.check_vec(a);
  ctx.check_vec(b);
  const Field& F = *ctx.Fqt;
  elem acc = 0;
  for (long j = 0; j < ctx.n; ++j) {
    elem z = F.mul(ctx.gamma, F.mul(a[j], psi(F, F.frob(b[j], ctx.half), ctx.q, ctx.t)));
    acc = F.add(acc, trace(F, z, {ctx.q, ctx.t}));
  }
  return ctx.q_qt.preimage(acc);
}

// t = 2 shortcut: sum_j Tr(gamma a_j b_j).
inline elem delta_inner_t2(const vec& a, const vec& b, const DeltaContext& ctx) {
  if (ctx.t != 2) raise(errc::unsupported_t, "shortcut only valid for t=2");
  ctx.check_vec(a);
  ctx.check_vec(b);
  const Field& F = *ctx.Fqt;
  elem acc = 0;
  for (long j = 0; j < ctx.n; ++j) acc = F.add(acc, F.mul(a[j], b[j]));
  return ctx.q_qt.preimage(trace(F, F.mul(ctx.gamma, acc), {ctx.q, 2}));
}

// The tau-expression sum_u tau_{q^u,1}(gamma a sum_{w=1}^{t-1} tau_{q^(t/2+w),-1}(b)), coefficients in F_q.
inline vec delta_form(const vec& a, const vec& b, const DeltaContext& ctx) {
  ctx.check_vec(a);
  ctx.check_vec(b);
  const GroupAlgebra& R = ctx.R;
  vec inner = R.zero();
  for (unsigned w = 1; w < ctx.t; ++w) inner = R.add(inner, R.tau(b, nt::ipow(ctx.q, ctx.t / 2 + w), -1));
  vec c = R.scale(ctx.gamma, R.mul(a, inner));
  vec sum = R.zero();
  for (unsigned u = 0; u < ctx.t; ++u) sum = R.add(sum, R.tau(c, nt::ipow(ctx.q, u), 1));
  vec out(ctx.n);
  for (long k = 0; k < ctx.n; ++k) {
    auto v = ctx.q_qt.try_preimage(sum[k]);
    if (!v) raise(errc::invalid_params, "form value left R_n^(q)");
    out[k] = *v;
  }
  return out;
}

inline vec embed_q(const vec& f, const DeltaContext& ctx) {
  vec out(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) out[k] = ctx.q_qt(f[k]);
  return out;
}

// [f a, b] = f [a, b] and [a, f b] = tau_{1,-1}(f) [a, b] for f in R_n^(q).
inline bool module_law_check(const vec& f, const vec& a, const vec& b, const DeltaContext& ctx) {
  const vec fq = embed_q(f, ctx);
  const vec ab = delta_form(a, b, ctx);
  bool left = delta_form(ctx.R.mul(fq, a), b, ctx) == ctx.Rq.mul(f, ab);
  bool right = delta_form(a, ctx.R.mul(fq, b), ctx) == ctx.Rq.mul(ctx.Rq.tau(f, 1, -1), ab);
  return left && right;
}

// [a, b] = sum_i [a_i, b_mu(i)] with every other cross term zero.
inline bool component_split_check(const vec& a, const vec& b, const DeltaContext& ctx) {
  if (!ctx.atlas) raise(errc::invalid_params, "component split needs the ideal atlas");
  const IdealAtlas& A = *ctx.atlas;
  const auto& R = ctx.R;
  std::vector<vec> ai, bi;
  for (unsigned i = 0; i < A.size(); ++i) {
    ai.push_back(R.mul(a, A.E(i)));
    bi.push_back(R.mul(b, A.E(i)));
  }
  vec total = ctx.Rq.zero();
  for (unsigned i = 0; i < A.size(); ++i)
    for (unsigned j = 0; j < A.size(); ++j) {
      vec v = delta_form(ai[i], bi[j], ctx);
      if (j == A.info(i).mu) {
        total = ctx.Rq.add(total, v);
      } else if (!ctx.Rq.is_zero(v)) {
        return false;
      }
    }
  return total == delta_form(a, b, ctx);
}

// theta of least log with Tr(gamma theta) != 0.
inline elem nonzero_trace_theta(const DeltaContext& ctx) {
  const Field& F = *ctx.Fqt;
  for (u64 k = 0; k < F.order(); ++k)
    if (trace(F, F.mul(ctx.gamma, F.exp(k)), {ctx.q, ctx.t}) != 0) return F.exp(k);
  raise(errc::invalid_params, "trace vanishes on gamma F_{q^t}");
}

// y with psi(y^(q^(t/2))) = theta / x, so that Tr(gamma x psi(y^(q^(t/2)))) = Tr(gamma theta).
inline elem witness_scalar(elem x, const DeltaContext& ctx) {
  const Field& F = *ctx.Fqt;
  if (x == 0) raise(errc::division_by_zero, "witness needs a nonzero coordinate");
  elem z = psi_inverse(F, F.div(nonzero_trace_theta(ctx), x), ctx.q, ctx.t);
  return F.frob(z, ctx.half);
}

// b supported at the first nonzero coordinate j of a, with (a, b) != 0.
inline vec inner_witness(const vec& a, const DeltaContext& ctx) {
  ctx.check_vec(a);
  for (long j = 0; j < ctx.n; ++j)
    if (a[j]) {
      vec b(ctx.n, 0);
      b[j] = witness_scalar(a[j], ctx);
      return b;
    }
  raise(errc::invalid_params, "zero vector has no witness");
}

// b(X) = y X^(n-j); the coefficient of X^(2j) in [a, b] is Tr(gamma theta) != 0.
inline vec form_witness(const vec& a, const DeltaContext& ctx) {
  ctx.check_vec(a);
  for (long j = 0; j < ctx.n; ++j)
    if (a[j]) return ctx.R.monomial(nt::mod(-j, ctx.n), witness_scalar(a[j], ctx));
  raise(errc::invalid_params, "zero vector has no witness");
}

}  // namespace deltacodes
