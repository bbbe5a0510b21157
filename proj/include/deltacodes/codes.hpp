#pragma once

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <random>
#include <thread>
#include <vector>

#include "bilinear.hpp"

namespace deltacodes {

// Row-reduced subspace of F_p^N, kept in reduced echelon form with increasing pivots.
class FpSpace {
 public:
  using row = std::vector<uint32_t>;

  FpSpace() = default;
  FpSpace(u64 p, std::size_t N) : p_(p), N_(N) {}

  u64 p() const { return p_; }
  std::size_t dim() const { return N_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<row>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return piv_; }

  void reduce(row& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      uint32_t c = v[piv_[r]];
      if (c) axpy(v, static_cast<uint32_t>(p_ - c), rows_[r]);
    }
  }

  bool contains(row v) const {
    reduce(v);
    return is_zero(v);
  }

  // Returns false if v was already in the span.
  bool insert(row v) {
    if (v.size() != N_) raise(errc::length_mismatch, "row length differs from the ambient dimension");
    reduce(v);
    std::size_t c = 0;
    while (c < N_ && !v[c]) ++c;
    if (c == N_) return false;
    scale(v, static_cast<uint32_t>(nt::inverse_mod(static_cast<long>(v[c]), static_cast<long>(p_))));
    for (auto& r : rows_)
      if (r[c]) axpy(r, static_cast<uint32_t>(p_ - r[c]), v);
    auto pos = std::lower_bound(piv_.begin(), piv_.end(), c) - piv_.begin();
    piv_.insert(piv_.begin() + pos, c);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
  }

  // Solutions x of <row_r, x> = 0 for all rows.
  std::vector<row> nullspace() const {
    std::vector<row> out;
    std::vector<bool> is_piv(N_, false);
    for (auto c : piv_) is_piv[c] = true;
    for (std::size_t f = 0; f < N_; ++f) {
      if (is_piv[f]) continue;
      row x(N_, 0);
      x[f] = 1;
      for (std::size_t r = 0; r < rows_.size(); ++r)
        if (rows_[r][f]) x[piv_[r]] = static_cast<uint32_t>(p_ - rows_[r][f]);
      out.push_back(std::move(x));
    }
    return out;
  }

  bool operator==(const FpSpace& o) const { return p_ == o.p_ && N_ == o.N_ && rows_ == o.rows_; }

  static bool is_zero(const row& v) {
    for (auto x : v)
      if (x) return false;
    return true;
  }

 private:
  u64 p_ = 2;
  std::size_t N_ = 0;
  std::vector<row> rows_;
  std::vector<std::size_t> piv_;

  void axpy(row& v, uint32_t c, const row& r) const {
    for (std::size_t k = 0; k < N_; ++k)
      if (r[k]) v[k] = static_cast<uint32_t>((v[k] + static_cast<u64>(c) * r[k]) % p_);
  }
  void scale(row& v, uint32_t c) const {
    for (auto& x : v) x = static_cast<uint32_t>(static_cast<u64>(x) * c % p_);
  }
};

// An F_q-linear subspace of F_{q^t}^n. The canonical form is the reduced echelon basis over F_p of the
// expansion into n*m digit coordinates (position-major, m = [F_{q^t}:F_p]); equal codes have equal forms.
class AdditiveCode {
 public:
  ContextPtr ctx;
  FpSpace space;
  std::vector<vec> fq_basis;  // greedy F_q-basis drawn from the canonical rows

  long n() const { return ctx->n; }
  unsigned e() const { return ctx->Fq->m(); }
  unsigned m() const { return ctx->Fqt->m(); }
  std::size_t k_fq() const { return space.rank() / e(); }
  bool is_zero() const { return space.rank() == 0; }

  FpSpace::row digits(const vec& v) const {
    ctx->check_vec(v);
    const Field& F = *ctx->Fqt;
    FpSpace::row out(static_cast<std::size_t>(n()) * m());
    for (long k = 0; k < n(); ++k)
      for (unsigned d = 0; d < m(); ++d) out[k * m() + d] = F.digit(v[k], d);
    return out;
  }
  vec packed(const FpSpace::row& r) const {
    const Field& F = *ctx->Fqt;
    vec out(n(), 0);
    for (long k = 0; k < n(); ++k) {
      u64 x = 0;
      for (unsigned d = 0; d < m(); ++d) x += r[k * m() + d] * F.digit_weight(d);
      out[k] = static_cast<elem>(x);
    }
    return out;
  }
  // F_p-basis rows in packed form.
  std::vector<vec> fp_rows() const {
    std::vector<vec> out;
    for (auto& r : space.rows()) out.push_back(packed(r));
    return out;
  }
  bool contains(const vec& v) const { return space.contains(digits(v)); }
  bool operator==(const AdditiveCode& o) const { return space == o.space; }
  bool subset_of(const AdditiveCode& o) const {
    for (auto& r : space.rows())
      if (!o.space.contains(r)) return false;
    return true;
  }
};

namespace detail {

// F_p-basis of F_q embedded in F_{q^t}.
inline std::vector<elem> fq_fp_basis(const DeltaContext& c) {
  std::vector<elem> out;
  for (unsigned k = 0; k < c.Fq->m(); ++k) out.push_back(c.q_qt(static_cast<elem>(c.Fq->digit_weight(k))));
  return out;
}

inline void add_fq_span(AdditiveCode& C, const vec& v, const std::vector<elem>& lam) {
  for (elem l : lam) C.space.insert(C.digits(C.ctx->R.scale(l, v)));
}

inline void rebuild_fq_basis(AdditiveCode& C) {
  auto lam = fq_fp_basis(*C.ctx);
  AdditiveCode tmp;
  tmp.ctx = C.ctx;
  tmp.space = FpSpace(C.ctx->Fq->p(), C.space.dim());
  C.fq_basis.clear();
  for (auto& r : C.space.rows()) {
    if (tmp.space.contains(r)) continue;
    vec v = C.packed(r);
    C.fq_basis.push_back(v);
    add_fq_span(tmp, v, lam);
  }
}

}  // namespace detail

// F_q-span of the given vectors in canonical form.
inline AdditiveCode code_from_vectors(const ContextPtr& ctx, const std::vector<vec>& vs) {
  AdditiveCode C;
  C.ctx = ctx;
  C.space = FpSpace(ctx->Fq->p(), static_cast<std::size_t>(ctx->n) * ctx->Fqt->m());
  auto lam = detail::fq_fp_basis(*ctx);
  for (auto& v : vs) detail::add_fq_span(C, v, lam);
  detail::rebuild_fq_basis(C);
  return C;
}

inline AdditiveCode zero_code(const ContextPtr& ctx) { return code_from_vectors(ctx, {}); }

inline AdditiveCode full_code(const ContextPtr& ctx) {
  std::vector<vec> vs;
  for (long k = 0; k < ctx->n; ++k)
    for (unsigned d = 0; d < ctx->Fqt->m(); ++d) vs.push_back(ctx->R.monomial(k, static_cast<elem>(ctx->Fqt->digit_weight(d))));
  return code_from_vectors(ctx, vs);
}

// The R_n^(q)-module generated by the given elements: F_q-span of all their cyclic shifts.
inline AdditiveCode cyclic_span(const ContextPtr& ctx, const std::vector<vec>& gens) {
  std::vector<vec> vs;
  for (auto& g : gens)
    for (long k = 0; k < ctx->n; ++k) vs.push_back(ctx->R.shift(g, k));
  return code_from_vectors(ctx, vs);
}

inline AdditiveCode cyclic_span(const ContextPtr& ctx, const vec& g) { return cyclic_span(ctx, std::vector<vec>{g}); }

inline bool is_cyclic(const AdditiveCode& C) {
  for (auto& v : C.fp_rows())
    if (!C.contains(C.ctx->R.shift(v, 1))) return false;
  return true;
}

// C^{perp Delta}: solve (r, v)_Delta = 0 over the digit expansion of v.
inline AdditiveCode dual_delta(const AdditiveCode& C) {
  const DeltaContext& c = *C.ctx;
  const Field& F = *c.Fqt;
  const std::size_t N = C.space.dim();
  const unsigned m = F.m(), e = c.Fq->m();
  FpSpace eqs(c.Fq->p(), N);
  for (auto& r : C.fp_rows()) {
    std::vector<FpSpace::row> rows(e, FpSpace::row(N, 0));
    for (long pos = 0; pos < c.n; ++pos)
      for (unsigned d = 0; d < m; ++d) {
        elem v = c.scalar(r[pos], static_cast<elem>(F.digit_weight(d)));
        for (unsigned h = 0; h < e; ++h) rows[h][pos * m + d] = c.Fq->digit(v, h);
      }
    for (auto& row : rows) eqs.insert(std::move(row));
  }
  AdditiveCode D;
  D.ctx = C.ctx;
  D.space = FpSpace(c.Fq->p(), N);
  for (auto& x : eqs.nullspace()) D.space.insert(std::move(x));
  detail::rebuild_fq_basis(D);
  if (D.space.rank() + C.space.rank() != N) raise(errc::invalid_params, "dim C + dim dual != tn");
  return D;
}

inline bool is_self_orthogonal(const AdditiveCode& C) {
  const auto& B = C.fq_basis;
  for (std::size_t i = 0; i < B.size(); ++i)
    for (std::size_t j = i; j < B.size(); ++j) {
      if (delta_inner(B[i], B[j], *C.ctx)) return false;
      if (j != i && delta_inner(B[j], B[i], *C.ctx)) return false;
    }
  return true;
}

inline bool is_self_dual(const AdditiveCode& C) {
  return 2 * C.k_fq() == static_cast<std::size_t>(C.ctx->t) * C.ctx->n && is_self_orthogonal(C);
}

struct CodeDecomposition {
  std::vector<AdditiveCode> comps;  // C_i = C cap J_i
  std::vector<unsigned> k_K;        // K_i-dimension of C_i
};

inline CodeDecomposition decompose(const AdditiveCode& C) {
  const DeltaContext& c = *C.ctx;
  if (!c.atlas) raise(errc::invalid_params, "decomposition needs the ideal atlas");
  if (!is_cyclic(C)) raise(errc::not_cyclic, "decomposition requires a cyclic code");
  const IdealAtlas& A = *c.atlas;
  CodeDecomposition out;
  auto rows = C.fp_rows();
  std::size_t total = 0;
  for (unsigned i = 0; i < A.size(); ++i) {
    std::vector<vec> proj;
    for (auto& r : rows) {
      proj.push_back(c.R.mul(r, A.E(i)));
      if (!C.contains(proj.back())) raise(errc::invalid_params, "projection left the code");
    }
    out.comps.push_back(code_from_vectors(C.ctx, proj));
    std::size_t k = out.comps.back().k_fq();
    if (k % A.info(i).d) raise(errc::invalid_params, "component is not a K_i-space");
    out.k_K.push_back(static_cast<unsigned>(k / A.info(i).d));
    total += k;
  }
  if (total != C.k_fq()) raise(errc::invalid_params, "components do not sum to the code");
  return out;
}

// Componentwise criterion: C_i inside C_i^(Delta) for every i.
inline bool componentwise_self_orthogonal(const AdditiveCode& C) {
  auto dc = decompose(C), dd = decompose(dual_delta(C));
  for (std::size_t i = 0; i < dc.comps.size(); ++i)
    if (!dc.comps[i].subset_of(dd.comps[i])) return false;
  return true;
}

// ---------------------------------------------------------------- minimum distance

struct DistanceResult {
  u64 d = 0;
  bool exact = false;
  u64 work = 0;  // codewords scanned or samples drawn
  bool stopped = false;  // a word lighter than stop_below was found; d is then only an upper bound
};

struct DistanceOptions {
  u64 budget = u64{1} << 28;  // exhaustive when q^k <= budget
  u64 samples = 10'000'000;
  u64 seed = 0x5eed;
  unsigned threads = 0;  // 0: DELTACODES_THREADS or hardware concurrency
  u64 stop_below = 0;    // give up as soon as a nonzero word of smaller weight shows up
};

namespace detail {

inline unsigned resolve_threads(unsigned requested) {
  if (requested) return requested;
  if (const char* env = std::getenv("DELTACODES_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

inline u64 splitmix(u64 x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Sparse row: (position, value) pairs.
struct SparseRow {
  std::vector<std::pair<uint32_t, elem>> nz;
};

class WordWalker {
 public:
  WordWalker(const Field& F, long n) : F_(F), cur_(n, 0) {}
  void add(const SparseRow& r) {
    for (auto [k, v] : r.nz) {
      elem old = cur_[k];
      elem nw = F_.add(old, v);
      cur_[k] = nw;
      w_ += (nw != 0) - (old != 0);
    }
  }
  long weight() const { return w_; }

 private:
  const Field& F_;
  vec cur_;
  long w_ = 0;
};

template <class Job>
void run_chunks(u64 chunks, unsigned threads, Job job) {
  threads = static_cast<unsigned>(std::min<u64>(threads, chunks));
  if (threads <= 1) {
    for (u64 c = 0; c < chunks; ++c) job(c);
    return;
  }
  std::atomic<u64> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&] {
      for (u64 c; (c = next.fetch_add(1)) < chunks;) job(c);
    });
  for (auto& th : pool) th.join();
}

}  // namespace detail

inline DistanceResult min_distance(const AdditiveCode& C, const DistanceOptions& opt = {}) {
  if (C.is_zero()) raise(errc::empty_code, "minimum distance of the zero code is undefined");
  const Field& F = *C.ctx->Fqt;
  const u64 p = F.p();
  const long n = C.n();
  const std::size_t r = C.space.rank();
  // all multiples c*row, c = 1..p-1, in sparse form
  std::vector<std::vector<detail::SparseRow>> mult(r, std::vector<detail::SparseRow>(p));
  auto rows = C.fp_rows();
  for (std::size_t j = 0; j < r; ++j)
    for (u64 c = 1; c < p; ++c)
      for (long k = 0; k < n; ++k) {
        elem v = F.mul(static_cast<elem>(c), rows[j][k]);
        if (v) mult[j][c].nz.emplace_back(static_cast<uint32_t>(k), v);
      }
  const unsigned threads = detail::resolve_threads(opt.threads);
  std::mutex mu;
  DistanceResult res;
  res.d = static_cast<u64>(n) + 1;

  long double words = std::pow(static_cast<long double>(p), static_cast<long double>(r));
  const long stop = static_cast<long>(opt.stop_below);
  if (words <= static_cast<long double>(opt.budget)) {
    // Modular p-ary Gray walk: step i adds row v_p(i), touching every combination exactly once.
    std::size_t hi = 0;
    u64 chunks = 1;
    while (hi < r && chunks < 4096 && r - hi > 6) ++hi, chunks *= p;
    const std::size_t lo = r - hi;
    const u64 inner = nt::ipow(p, static_cast<unsigned>(lo));
    std::atomic<long> best{n + 1};
    detail::run_chunks(chunks, threads, [&](u64 ch) {
      detail::WordWalker w(F, n);
      u64 x = ch;
      for (std::size_t j = lo; j < r; ++j, x /= p)
        if (x % p) w.add(mult[j][x % p]);
      long local = n + 1;
      if (ch) local = w.weight();
      for (u64 i = 1; i < inner && local >= stop; ++i) {
        u64 y = i;
        std::size_t j = 0;
        while (y % p == 0) y /= p, ++j;
        w.add(mult[j][1]);
        if (w.weight() < local) {
          local = w.weight();
          if (local <= 1 || local < stop) break;
        }
        if ((i & 0xffff) == 0 && best.load(std::memory_order_relaxed) < stop) break;
      }
      long b = best.load();
      while (local < b && !best.compare_exchange_weak(b, local)) {}
    });
    res.d = static_cast<u64>(best.load());
    res.stopped = best.load() < stop;
    res.exact = !res.stopped;
    res.work = static_cast<u64>(words) - 1;
    return res;
  }

  // Seeded random walk over combinations; every visited nonzero word bounds d from above.
  const u64 per = u64{1} << 20;
  const u64 chunks = std::max<u64>(1, (opt.samples + per - 1) / per);
  std::atomic<long> best{n + 1};
  detail::run_chunks(chunks, threads, [&](u64 ch) {
    std::mt19937_64 g(detail::splitmix(opt.seed ^ detail::splitmix(ch)));
    detail::WordWalker w(F, n);
    for (std::size_t j = 0; j < r; ++j) {
      u64 c = g() % p;
      if (c) w.add(mult[j][c]);
    }
    const u64 todo = std::min(per, opt.samples - ch * per);
    long local = w.weight() ? w.weight() : n + 1;
    for (u64 s = 0; s < todo; ++s) {
      w.add(mult[g() % r][1 + g() % (p - 1)]);
      long wt = w.weight();
      if (wt && wt < local) {
        local = wt;
        if (local < stop) break;
      }
      if ((s & 0xffff) == 0 && best.load(std::memory_order_relaxed) < stop) break;
    }
    long b = best.load();
    while (local < b && !best.compare_exchange_weak(b, local)) {}
  });
  res.d = static_cast<u64>(best.load());
  res.stopped = best.load() < stop;
  res.exact = false;
  res.work = opt.samples;
  return res;
}

// Rows rendered as [t0, t1, ...] with generator-power tokens.
inline std::string matrix_text(const AdditiveCode& C, const std::vector<vec>& rows) {
  std::string s;
  for (auto& r : rows) {
    s += "[";
    for (long k = 0; k < C.n(); ++k) s += (k ? ", " : "") + to_token(*C.ctx->Fqt, r[k]);
    s += "]\n";
  }
  return s;
}

inline std::string matrix_text(const AdditiveCode& C) { return matrix_text(C, C.fq_basis); }

}  // namespace deltacodes
