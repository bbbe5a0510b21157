#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "polyring.hpp"

namespace deltacodes {

using vec = GroupAlgebra::vec;

enum class Orientation { not_applicable, fixes, swaps };

inline const char* orientation_name(Orientation o) {
  switch (o) {
    case Orientation::fixes: return "fixes";
    case Orientation::swaps: return "swaps";
    default: return "not-applicable";
  }
}

struct CosetInfo {
  std::vector<long> coset;                  // C_{l_i}^{(q)}, increasing
  long rep = 0;                             // l_i; I_{i,j} corresponds to the q^t-coset of rep*q^j
  unsigned d = 1, s = 1, D = 1;
  std::vector<std::vector<long>> subcosets;  // j = 0..s-1
  unsigned mu = 0;
  Orientation orientation = Orientation::not_applicable;
};

struct CosetTable {
  long n = 1;
  u64 q = 2;
  unsigned t = 2;
  std::vector<CosetInfo> idx;
  std::optional<unsigned> i_sharp;
  std::vector<unsigned> J_set, M_set;

  std::size_t size() const { return idx.size(); }
  const CosetInfo& operator[](std::size_t i) const { return idx.at(i); }

  // Index i with l in C_{l_i}^{(q)}.
  unsigned index_of(long l) const {
    l = nt::mod(l, n);
    for (unsigned i = 0; i < idx.size(); ++i)
      if (std::binary_search(idx[i].coset.begin(), idx[i].coset.end(), l)) return i;
    raise(errc::invalid_params, "residue outside every coset");
  }
  std::pair<unsigned, unsigned> ideal_of(long l) const {
    unsigned i = index_of(l);
    l = nt::mod(l, n);
    for (unsigned j = 0; j < idx[i].subcosets.size(); ++j)
      if (std::binary_search(idx[i].subcosets[j].begin(), idx[i].subcosets[j].end(), l)) return {i, j};
    raise(errc::invalid_params, "residue outside every sub-coset");
  }
};

inline u64 ipow_mod(u64 b, u64 e, long n) { return nt::powmod(b, e, static_cast<u64>(n)); }

// Index of the ideal tau_{q^w,u}(I_{i,j}): the q^t-coset of l_i q^j u^{-1} q^w.
inline std::pair<unsigned, unsigned> tau_ideal_image(const CosetTable& T, u64 w, long u, std::pair<unsigned, unsigned> ij) {
  if (std::gcd(nt::mod(u, T.n), T.n) != 1 && T.n > 1) raise(errc::u_not_coprime, "gcd(u,n)=1 required");
  if (T.n == 1) return {0, 0};
  const auto& info = T[ij.first];
  long uinv = nt::inverse_mod(u, T.n);
  long l = static_cast<long>(nt::mulmod(static_cast<u64>(info.rep), ipow_mod(T.q, ij.second, T.n), T.n));
  l = nt::mod(l * uinv, T.n);
  l = static_cast<long>(nt::mulmod(static_cast<u64>(l), ipow_mod(T.q, w, T.n), T.n));
  return T.ideal_of(l);
}

inline std::vector<std::vector<long>> coset_split(const CosetTable& T, unsigned i) { return T[i].subcosets; }

struct MuData {
  std::vector<unsigned> mu;
  std::optional<unsigned> i_sharp;
  std::vector<unsigned> J_set, M_set;
};

inline MuData mu_permutation(const CosetTable& T) {
  MuData r;
  for (auto& c : T.idx) r.mu.push_back(c.mu);
  r.i_sharp = T.i_sharp;
  r.J_set = T.J_set;
  r.M_set = T.M_set;
  return r;
}

// Cosets of q and q^t, mu, i#, the index sets and tau_{1,-1} orientation.
inline CosetTable build_coset_table(long n, u64 q, unsigned t) {
  if (t < 1) raise(errc::invalid_params, "t must be positive");
  CosetTable T;
  T.n = n, T.q = q, T.t = t;
  auto cosets = cyclotomic_cosets(n, q);
  const u64 Q = nt::ipow(q, t);
  for (auto& cs : cosets) {
    CosetInfo c;
    c.coset = cs;
    c.rep = cs.front();
    c.d = static_cast<unsigned>(cs.size());
    c.s = std::gcd(t, c.d);
    c.D = c.d / c.s;
    T.idx.push_back(std::move(c));
  }
  const unsigned s = static_cast<unsigned>(T.idx.size());
  for (unsigned i = 0; i < s; ++i) T.idx[i].mu = T.index_of(-T.idx[i].rep);
  // A mu-partner is based at -l_i so that tau_{1,-1} carries I_{i,j} onto I_{mu(i),j}.
  for (unsigned i = 0; i < s; ++i) {
    unsigned m = T.idx[i].mu;
    if (m > i) T.idx[m].rep = nt::mod(-T.idx[i].rep, n);
  }
  for (auto& c : T.idx) {
    for (unsigned j = 0; j < c.s; ++j) {
      long base = static_cast<long>(nt::mulmod(static_cast<u64>(c.rep), ipow_mod(q, j, n), n));
      auto orb = coset_orbit(base, n, Q);
      std::sort(orb.begin(), orb.end());
      c.subcosets.push_back(std::move(orb));
    }
    std::size_t total = 0;
    for (auto& sc : c.subcosets) {
      if (sc.size() != c.D) raise(errc::invalid_params, "sub-coset size differs from d_i/gcd(t,d_i)");
      total += sc.size();
    }
    if (total != c.d) raise(errc::invalid_params, "sub-cosets do not cover the coset");
  }
  if (n % 2 == 0 && q % 2 == 1) T.i_sharp = T.index_of(n / 2);
  for (unsigned i = 1; i < s; ++i) {
    if (T.i_sharp && i == *T.i_sharp) continue;
    if (T.idx[i].mu == i) T.J_set.push_back(i);
    else if (T.idx[i].mu > i) T.M_set.push_back(i);
  }
  for (unsigned i = 0; i < s; ++i) {
    auto& c = T.idx[i];
    if (T.idx[c.mu].mu != i) raise(errc::invalid_params, "mu is not an involution");
    bool special = i == 0 || (T.i_sharp && i == *T.i_sharp);
    if (special) {
      if (c.d != 1 || c.mu != i) raise(errc::invalid_params, "special index must be a fixed singleton coset");
      continue;
    }
    if (c.mu == i && c.d % 2) raise(errc::invalid_params, "fixed point of mu with odd d_i");
    if (c.mu == i && c.s >= 2) {
      auto img = tau_ideal_image(T, 0, -1, {i, 0});
      if (img.first != i) raise(errc::invalid_params, "tau_{1,-1} leaves J_i");
      c.orientation = img.second == 0 ? Orientation::fixes : Orientation::swaps;
      if (c.orientation == Orientation::fixes) {
        u64 Qh = nt::ipow(q, t);
        if (c.D % 2 || nt::mod(-c.rep, n) != static_cast<long>(nt::mulmod(c.rep, ipow_mod(Qh, c.D / 2, n), n)))
          raise(errc::invalid_params, "fixed orientation without -l = l Q^(D/2)");
      }
    }
  }
  return T;
}

struct AtlasOptions {
  FieldMode mode = FieldMode::standard;
  // i -> discrete log (in the splitting field) of rho_{i,0} evaluated at eta'^{l_i}.
  std::map<unsigned, u64> rho_log;
};

struct IdealData {
  Polynomial m, mhat;                   // over F_q
  std::vector<Polynomial> M, Mhat;      // over F_{q^t}
  std::vector<vec> e, rho;              // in R_n^(q^t)
  vec E;                                // sum_j e_{i,j}, coefficients in F_q
  elem rho_value = 0;                   // rho_{i,0}(eta'^{l_i}) in W
};

class IdealAtlas {
 public:
  CosetTable table;
  FieldPtr Fq, Fqt, W;
  Embedding q_qt, qt_W, q_W;
  elem eta_prime = 1;  // in W
  GroupAlgebra R;      // R_n^(q^t)
  std::vector<IdealData> ideals;

  long n() const { return table.n; }
  u64 q() const { return table.q; }
  unsigned t() const { return table.t; }
  std::size_t size() const { return table.size(); }
  const CosetInfo& info(unsigned i) const { return table[i]; }
  u64 qpow(u64 w) const { return nt::ipow(table.q, static_cast<unsigned>(w)); }

  const vec& e(unsigned i, unsigned j) const { return ideals.at(i).e.at(j); }
  const vec& rho(unsigned i, unsigned j) const { return ideals.at(i).rho.at(j); }
  const vec& E(unsigned i) const { return ideals.at(i).E; }

  vec tau(const vec& a, u64 w, long u) const { return R.tau(a, qpow(w), u); }

  // rho_{i,j}^k with rho^0 = e_{i,j}.
  vec rho_pow(unsigned i, unsigned j, u64 k) const { return R.pow(rho(i, j), k, e(i, j)); }

  // K_i-basis {theta^r E_i : r < t} of J_i, theta the generator of F_{q^t}.
  std::vector<vec> j_basis(unsigned i) const {
    std::vector<vec> out;
    elem th = 1;
    for (unsigned r = 0; r < t(); ++r) {
      out.push_back(R.scale(th, E(i)));
      th = Fqt->mul(th, Fqt->generator());
    }
    return out;
  }

  bool in_J(unsigned i, const vec& c) const { return R.mul(c, E(i)) == c; }
};

using AtlasPtr = std::shared_ptr<const IdealAtlas>;

namespace detail {

inline vec idempotent_from(const Polynomial& M, const Polynomial& Mhat, const GroupAlgebra& R) {
  Xgcd g = poly_xgcd(Mhat, M);
  if (g.g.degree() != 0) raise(errc::invalid_params, "factor and cofactor are not coprime");
  return R.from_poly(poly_mul(g.u, Mhat));
}

// Inverse DFT of values supported on one q^t-coset: A(rep*Q^r) = beta^(Q^r).
inline vec element_from_value(const IdealAtlas& A, unsigned i, elem beta) {
  const Field& W = *A.W;
  const long n = A.n();
  const u64 Q = nt::ipow(A.q(), A.t());
  std::vector<elem> val(n, 0);
  long m = A.info(i).rep;
  elem b = beta;
  for (unsigned r = 0; r < A.info(i).D; ++r) {
    val[m] = b;
    m = static_cast<long>(nt::mulmod(static_cast<u64>(m), Q % n, n));
    b = W.frob(b, Q);
  }
  if (m != A.info(i).rep || b != beta) raise(errc::invalid_params, "value is not in F_{q^(t D_i)}");
  elem ninv = W.inv(static_cast<elem>(static_cast<u64>(n) % W.p()));
  vec out(n);
  for (long k = 0; k < n; ++k) {
    elem acc = 0;
    for (long mm = 0; mm < n; ++mm) {
      if (!val[mm]) continue;
      u64 ex = static_cast<u64>(nt::mod(-mm * k, n));
      acc = W.add(acc, W.mul(val[mm], W.pow(A.eta_prime, ex)));
    }
    out[k] = A.qt_W.preimage(W.mul(ninv, acc));
  }
  return out;
}

}  // namespace detail

// Decomposition of R_n^(q) and R_n^(q^t) into minimal ideals with idempotents and primitive elements.
inline AtlasPtr build_atlas(long n, u64 q, unsigned t, const AtlasOptions& opt = {}) {
  auto pp = nt::prime_power(q);
  if (!pp) raise(errc::invalid_params, "q=" + std::to_string(q) + " is not a prime power");
  auto A = std::make_shared<IdealAtlas>();
  A->table = build_coset_table(n, q, t);
  const u64 p = pp->first;
  const unsigned e = pp->second;
  const u64 ord = nt::mult_order(q % n, n);
  const unsigned L = static_cast<unsigned>(std::lcm<u64>(t, ord));
  A->Fq = field_for(p, e, opt.mode);
  A->Fqt = field_for(p, e * t, opt.mode);
  A->W = field_for(p, e * L, opt.mode);
  A->q_qt = Embedding::make(A->Fq, A->Fqt);
  A->qt_W = Embedding::make(A->Fqt, A->W);
  A->q_W = Embedding::compose(A->q_qt, A->qt_W);
  A->eta_prime = A->W->exp(A->W->order() / n);
  A->R = GroupAlgebra(n, A->Fqt);
  const GroupAlgebra& R = A->R;
  GroupAlgebra Rq(n, A->Fq);
  const Field& W = *A->W;
  const u64 Q = nt::ipow(q, t);

  const auto& T = A->table;
  A->ideals.resize(T.size());
  Polynomial xq = Polynomial::x_n_minus_1(A->Fq, n), xqt = Polynomial::x_n_minus_1(A->Fqt, n);
  for (unsigned i = 0; i < T.size(); ++i) {
    auto& I = A->ideals[i];
    const auto& c = T[i];
    I.m = minimal_poly(c.coset, W, A->eta_prime, A->q_W);
    I.mhat = poly_divmod(xq, I.m).first;
    vec Eq = detail::idempotent_from(I.m, I.mhat, Rq);
    I.E = R.zero();
    for (unsigned j = 0; j < c.s; ++j) {
      I.M.push_back(minimal_poly(c.subcosets[j], W, A->eta_prime, A->qt_W));
      I.Mhat.push_back(poly_divmod(xqt, I.M.back()).first);
      I.e.push_back(detail::idempotent_from(I.M.back(), I.Mhat.back(), R));
      I.E = R.add(I.E, I.e.back());
    }
    Polynomial prod(A->Fqt, {1});
    for (auto& M : I.M) prod = poly_mul(prod, M);
    std::vector<elem> membed;
    for (elem a : I.m.c) membed.push_back(A->q_qt(a));
    if (!(prod == Polynomial(A->Fqt, membed))) raise(errc::invalid_params, "m_i is not the product of its M_{i,j}");
    for (long k = 0; k < n; ++k)
      if (A->q_qt(Eq[k]) != I.E[k]) raise(errc::invalid_params, "idempotent of K_i differs from sum of e_{i,j}");
  }

  for (unsigned i = 0; i < T.size(); ++i) {
    auto& I = A->ideals[i];
    const auto& c = T[i];
    const u64 N = nt::ipow(Q, c.D) - 1;
    if (c.mu < i) {
      I.rho_value = A->ideals[c.mu].rho_value;
      I.rho.push_back(R.tau(A->ideals[c.mu].rho[0], 1, -1));
    } else {
      auto it = opt.rho_log.find(i);
      I.rho_value = it != opt.rho_log.end() ? W.exp(it->second) : W.exp(W.order() / N);
      if (W.element_order(I.rho_value) != N) raise(errc::invalid_params, "rho value is not primitive in F_{q^(t D_i)}");
      I.rho.push_back(detail::element_from_value(*A, i, I.rho_value));
    }
    for (unsigned j = 1; j < c.s; ++j) I.rho.push_back(R.tau(I.rho[0], A->qpow(j), 1));
  }
  return A;
}

// True iff c (an element of J_i) is fixed by tau_{q,1}, i.e. lies in K_i.
inline bool fixed_subfield_check(const IdealAtlas& A, unsigned i, const vec& c) {
  if (!A.in_J(i, c)) raise(errc::not_in_ideal, "element is not in J_i");
  return A.tau(c, 1, 1) == c;
}

}  // namespace deltacodes
