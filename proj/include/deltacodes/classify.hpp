#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "codes.hpp"

namespace deltacodes {

using bigint = boost::multiprecision::cpp_int;

enum class Mode { so, sd };
// stated: the option lists exactly as the classification theorems give them.
// complete: adds the isotropic lines those lists miss (F_q e_{i,0} at i in {0, i#} for odd q, and the
// idempotent lines e_{i,0}, e_{i,1} with their mates for mu-pairs of even degree).
enum class Variant { stated, complete };

inline const char* mode_name(Mode m) { return m == Mode::so ? "so" : "sd"; }
inline const char* variant_name(Variant v) { return v == Variant::stated ? "stated" : "complete"; }

struct SubcodeChoice {
  enum Kind { zero, full, line };
  unsigned i = 0;
  Kind kind = zero;
  std::string label;
  std::vector<vec> gens;  // R_n^(q)-module generators inside J_i
};

using ChoicePair = std::pair<SubcodeChoice, SubcodeChoice>;

inline void require_t2(unsigned t) {
  if (t != 2) raise(errc::unsupported_t, "classification is only available for t=2 (got t=" + std::to_string(t) + ")");
}

namespace detail {

inline std::string idx2(unsigned i, unsigned j) { return "{" + std::to_string(i) + "," + std::to_string(j) + "}"; }

inline SubcodeChoice zero_choice(unsigned i) { return {i, SubcodeChoice::zero, "0", {}}; }

inline SubcodeChoice full_choice(const IdealAtlas& A, unsigned i) {
  return {i, SubcodeChoice::full, "J_" + std::to_string(i), A.j_basis(i)};
}

inline SubcodeChoice rho_line(const IdealAtlas& A, unsigned i, u64 k) {
  return {i, SubcodeChoice::line, "rho_" + idx2(i, 0) + "^" + std::to_string(k), {A.rho_pow(i, 0, k)}};
}

inline SubcodeChoice e_line(const IdealAtlas& A, unsigned i, unsigned j) {
  return {i, SubcodeChoice::line, "e_" + idx2(i, j), {A.e(i, j)}};
}

inline SubcodeChoice e_rho_line(const IdealAtlas& A, unsigned i, u64 k) {
  return {i, SubcodeChoice::line, "e_" + idx2(i, 0) + "+rho_" + idx2(i, 1) + "^" + std::to_string(k),
          {A.R.add(A.e(i, 0), A.rho_pow(i, 1, k))}};
}

inline bool is_special(const CosetTable& T, unsigned i) { return i == 0 || (T.i_sharp && *T.i_sharp == i); }

// Every K_i-line of J_i: q^{d_i} + 1 of them.
inline std::vector<SubcodeChoice> all_lines(const IdealAtlas& A, unsigned i) {
  std::vector<SubcodeChoice> out;
  const u64 Qd = nt::ipow(A.q(), A.info(i).d);
  if (A.info(i).s == 1) {
    for (u64 k = 0; k <= Qd; ++k) out.push_back(rho_line(A, i, k));
  } else {
    out.push_back(e_line(A, i, 0));
    out.push_back(e_line(A, i, 1));
    for (u64 k = 0; k + 2 <= Qd; ++k) out.push_back(e_rho_line(A, i, k));
  }
  return out;
}

}  // namespace detail

// Options for an index fixed by mu (i = 0, i# or i in the fixed set).
inline std::vector<SubcodeChoice> subcode_options(const IdealAtlas& A, unsigned i, Mode mode, Variant var = Variant::stated) {
  require_t2(A.t());
  const auto& T = A.table;
  const auto& c = T[i];
  if (c.mu != i) raise(errc::invalid_params, "index " + std::to_string(i) + " is not fixed by mu; use pair_options");
  const u64 q = A.q();
  std::vector<SubcodeChoice> out;
  if (mode == Mode::so) out.push_back(detail::zero_choice(i));
  if (detail::is_special(T, i)) {
    if (q % 2 == 0) {
      out.push_back(detail::rho_line(A, i, 0));
    } else {
      if (var == Variant::complete) out.push_back(detail::rho_line(A, i, 0));
      out.push_back(detail::rho_line(A, i, (q + 1) / 2));
    }
    return out;
  }
  const u64 h = nt::ipow(q, c.d / 2);
  if (c.orientation == Orientation::fixes) {
    for (u64 m = 0; m <= h; ++m) out.push_back(detail::e_rho_line(A, i, (h - 1) * m));
  } else {
    out.push_back(detail::e_line(A, i, 0));
    out.push_back(detail::e_line(A, i, 1));
    for (u64 m = 0; m + 2 <= h; ++m) out.push_back(detail::e_rho_line(A, i, (h + 1) * m));
  }
  return out;
}

// Compatible (C_i, C_mu(i)) pairs for i in the transposition representatives.
inline std::vector<ChoicePair> pair_options(const IdealAtlas& A, unsigned i, Mode mode, Variant var = Variant::stated) {
  require_t2(A.t());
  const auto& c = A.info(i);
  const unsigned j = c.mu;
  if (j <= i) raise(errc::invalid_params, "pair options are indexed by the smaller member of a transposition");
  const u64 Qd = nt::ipow(A.q(), c.d);
  std::vector<ChoicePair> out;
  if (mode == Mode::so) {
    out.emplace_back(detail::zero_choice(i), detail::zero_choice(j));
    for (auto& l : detail::all_lines(A, j)) out.emplace_back(detail::zero_choice(i), l);
  }
  out.emplace_back(detail::zero_choice(i), detail::full_choice(A, j));
  out.emplace_back(detail::full_choice(A, i), detail::zero_choice(j));
  auto with_mate = [&](SubcodeChoice a, SubcodeChoice b) {
    if (mode == Mode::so) out.emplace_back(a, detail::zero_choice(j));
    out.emplace_back(std::move(a), std::move(b));
  };
  if (c.s == 1) {
    for (u64 k = 0; k <= Qd; ++k) with_mate(detail::rho_line(A, i, k), detail::rho_line(A, j, k ? Qd + 1 - k : 0));
  } else {
    if (var == Variant::complete) {
      with_mate(detail::e_line(A, i, 0), detail::e_line(A, j, 1));
      with_mate(detail::e_line(A, i, 1), detail::e_line(A, j, 0));
    }
    for (u64 k = 0; k + 2 <= Qd; ++k) with_mate(detail::e_rho_line(A, i, k), detail::e_rho_line(A, j, k ? Qd - 1 - k : 0));
  }
  return out;
}

// Closed-form counts from the coset data alone.
inline bigint count_codes(long n, u64 q, Mode mode, Variant var = Variant::stated, unsigned t = 2) {
  require_t2(t);
  auto T = build_coset_table(n, q, 2);
  bigint total = 1;
  const unsigned specials = T.i_sharp ? 2 : 1;
  for (unsigned s = 0; s < specials; ++s) {
    if (var == Variant::stated || q % 2 == 0) total *= mode == Mode::so ? 2 : 1;
    else total *= mode == Mode::so ? 3 : 2;
  }
  for (unsigned i : T.J_set) {
    bigint h = boost::multiprecision::pow(bigint(q), T[i].d / 2);
    total *= mode == Mode::so ? h + 2 : h + 1;
  }
  for (unsigned j : T.M_set) {
    bigint Qd = boost::multiprecision::pow(bigint(q), T[j].d);
    bool odd = T[j].d % 2;
    if (mode == Mode::so) total *= 3 * Qd + ((odd || var == Variant::complete) ? 6 : 2);
    else total *= Qd + ((odd || var == Variant::complete) ? 3 : 1);
  }
  return total;
}

struct EnumerateOptions {
  Variant variant = Variant::stated;
  u64 limit = 0;        // 0: no limit
  bool verify = true;   // direct Delta-orthogonality check on every emitted code
};

using CodeSink = std::function<bool(const AdditiveCode&, const std::vector<SubcodeChoice>&)>;

// Assembles every classified code once; the sink may return false to stop. Returns the number emitted.
inline u64 enumerate_codes(const ContextPtr& ctx, Mode mode, const CodeSink& sink, const EnumerateOptions& opt = {}) {
  require_t2(ctx->t);
  if (!ctx->atlas) raise(errc::invalid_params, "enumeration needs the ideal atlas");
  const IdealAtlas& A = *ctx->atlas;
  const auto& T = A.table;
  std::vector<std::vector<std::vector<SubcodeChoice>>> blocks;
  for (unsigned i = 0; i < T.size(); ++i) {
    std::vector<std::vector<SubcodeChoice>> b;
    if (T[i].mu == i) {
      for (auto& c : subcode_options(A, i, mode, opt.variant)) b.push_back({c});
    } else if (T[i].mu > i) {
      for (auto& [x, y] : pair_options(A, i, mode, opt.variant)) b.push_back({x, y});
    } else {
      continue;
    }
    blocks.push_back(std::move(b));
  }
  std::set<std::vector<FpSpace::row>> seen;
  std::vector<std::size_t> pos(blocks.size(), 0);
  u64 emitted = 0;
  while (true) {
    std::vector<SubcodeChoice> profile;
    std::vector<vec> gens;
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (auto& c : blocks[b][pos[b]]) {
        profile.push_back(c);
        gens.insert(gens.end(), c.gens.begin(), c.gens.end());
      }
    AdditiveCode C = cyclic_span(ctx, gens);
    if (!seen.insert(C.space.rows()).second) raise(errc::invalid_params, "classification produced a duplicate code");
    if (opt.verify) {
      bool ok = mode == Mode::so ? is_self_orthogonal(C) : is_self_dual(C);
      if (!ok) raise(errc::invalid_params, std::string("classified code fails the direct ") + mode_name(mode) + " check");
    }
    ++emitted;
    if (!sink(C, profile)) break;
    if (opt.limit && emitted >= opt.limit) break;
    std::size_t b = blocks.size();
    while (b > 0) {
      --b;
      if (++pos[b] < blocks[b].size()) break;
      pos[b] = 0;
      if (b == 0) return emitted;
    }
    if (blocks.empty()) break;
  }
  return emitted;
}

inline std::vector<AdditiveCode> enumerate_all(const ContextPtr& ctx, Mode mode, const EnumerateOptions& opt = {}) {
  std::vector<AdditiveCode> out;
  enumerate_codes(ctx, mode, [&](const AdditiveCode& C, const std::vector<SubcodeChoice>&) {
    out.push_back(C);
    return true;
  }, opt);
  return out;
}

// ---------------------------------------------------------------- brute-force oracle

struct OracleResult {
  u64 total_cyclic = 0;
  std::vector<AdditiveCode> so, sd;
};

// Every cyclic code is a direct sum of K_i-subspaces of the J_i. The oracle lists all of them (zero, J_i and
// the q^{d_i}+1 lines, deduplicated canonically), then tests every direct sum with the plain bilinear form.
inline OracleResult brute_force_oracle(const ContextPtr& ctx, u64 max_total = 1'000'000) {
  require_t2(ctx->t);
  if (!ctx->atlas) raise(errc::invalid_params, "oracle needs the ideal atlas");
  const IdealAtlas& A = *ctx->atlas;
  const unsigned s = static_cast<unsigned>(A.size());
  long double total = 1;
  for (unsigned i = 0; i < s; ++i) total *= static_cast<long double>(nt::ipow(A.q(), A.info(i).d)) + 3;
  if (total > static_cast<long double>(max_total))
    raise(errc::too_large, "oracle would visit " + std::to_string(static_cast<double>(total)) + " cyclic codes");

  // options[i]: canonical K_i-subspaces of J_i
  std::vector<std::vector<AdditiveCode>> options(s);
  for (unsigned i = 0; i < s; ++i) {
    std::set<std::vector<FpSpace::row>> seen;
    auto add = [&](const std::vector<vec>& gens) {
      AdditiveCode C = cyclic_span(ctx, gens);
      if (seen.insert(C.space.rows()).second) options[i].push_back(std::move(C));
    };
    add({});
    add(A.j_basis(i));
    for (auto& l : detail::all_lines(A, i)) add(l.gens);
    const std::size_t expect = nt::ipow(A.q(), A.info(i).d) + 3;
    if (options[i].size() != expect) raise(errc::invalid_params, "oracle found the wrong number of subspaces of J_i");
  }

  // Bilinear pieces on digit coordinates: (x, y) = sum_pos x_pos^T G_h y_pos, component h of F_q over F_p.
  const DeltaContext& c = *ctx;
  const Field& F = *c.Fqt;
  const unsigned m = F.m(), e = c.Fq->m();
  const u64 p = F.p();
  std::vector<std::vector<std::vector<uint32_t>>> G(e, std::vector<std::vector<uint32_t>>(m, std::vector<uint32_t>(m)));
  for (unsigned d1 = 0; d1 < m; ++d1)
    for (unsigned d2 = 0; d2 < m; ++d2) {
      elem v = c.scalar(static_cast<elem>(F.digit_weight(d1)), static_cast<elem>(F.digit_weight(d2)));
      for (unsigned h = 0; h < e; ++h) G[h][d1][d2] = c.Fq->digit(v, h);
    }
  auto transformed = [&](const AdditiveCode& C) {
    std::vector<std::vector<uint32_t>> out;
    for (auto& r : C.space.rows())
      for (unsigned h = 0; h < e; ++h) {
        std::vector<uint32_t> t(r.size(), 0);
        for (long pos = 0; pos < c.n; ++pos)
          for (unsigned d2 = 0; d2 < m; ++d2) {
            u64 acc = 0;
            for (unsigned d1 = 0; d1 < m; ++d1) acc += static_cast<u64>(r[pos * m + d1]) * G[h][d1][d2];
            t[pos * m + d2] = static_cast<uint32_t>(acc % p);
          }
        out.push_back(std::move(t));
      }
    return out;
  };
  auto orth = [&](const std::vector<std::vector<uint32_t>>& TA, const AdditiveCode& B) {
    for (auto& ta : TA)
      for (auto& rb : B.space.rows()) {
        u64 acc = 0;
        for (std::size_t k = 0; k < ta.size(); ++k) acc += static_cast<u64>(ta[k]) * rb[k];
        if (acc % p) return false;
      }
    return true;
  };
  std::vector<std::vector<std::vector<std::vector<uint32_t>>>> Tr(s);
  for (unsigned i = 0; i < s; ++i)
    for (auto& C : options[i]) Tr[i].push_back(transformed(C));
  // ok[i][j][a][b]: (C_i^a, C_j^b) vanishes in both orders
  std::vector<std::vector<std::vector<std::vector<char>>>> ok(s, std::vector<std::vector<std::vector<char>>>(s));
  for (unsigned i = 0; i < s; ++i)
    for (unsigned j = i; j < s; ++j) {
      ok[i][j].assign(options[i].size(), std::vector<char>(options[j].size(), 0));
      for (std::size_t a = 0; a < options[i].size(); ++a)
        for (std::size_t b = 0; b < options[j].size(); ++b) {
          if (i == j && a != b) continue;
          ok[i][j][a][b] = orth(Tr[i][a], options[j][b]) && orth(Tr[j][b], options[i][a]);
        }
    }

  OracleResult res;
  std::vector<std::size_t> pos(s, 0);
  while (true) {
    ++res.total_cyclic;
    bool so = true;
    for (unsigned i = 0; i < s && so; ++i)
      for (unsigned j = i; j < s && so; ++j) so = ok[i][j][pos[i]][pos[j]];
    if (so) {
      std::vector<vec> gens;
      std::size_t k = 0;
      for (unsigned i = 0; i < s; ++i) {
        const auto& C = options[i][pos[i]];
        gens.insert(gens.end(), C.fq_basis.begin(), C.fq_basis.end());
        k += C.k_fq();
      }
      AdditiveCode C = code_from_vectors(ctx, gens);
      if (k == static_cast<std::size_t>(c.n)) res.sd.push_back(C);
      res.so.push_back(std::move(C));
    }
    unsigned b = s;
    bool done = true;
    while (b > 0) {
      --b;
      if (++pos[b] < options[b].size()) {
        done = false;
        break;
      }
      pos[b] = 0;
    }
    if (done) break;
  }
  return res;
}

// ---------------------------------------------------------------- good codes

struct CodeRecord {
  AdditiveCode code;
  std::vector<SubcodeChoice> profile;
  DistanceResult dist;
  bool pruned = false;  // scan stopped early once the code could not beat the best of its dimension
};

struct GoodCodeOptions {
  Variant variant = Variant::stated;
  DistanceOptions dist;
  u64 limit = 0;
};

// Best minimum distance per F_q-dimension among the self-orthogonal codes.
inline std::vector<CodeRecord> good_code_report(const ContextPtr& ctx, const GoodCodeOptions& opt = {}) {
  std::map<std::size_t, CodeRecord> best;
  EnumerateOptions eo;
  eo.variant = opt.variant;
  eo.limit = opt.limit;
  enumerate_codes(ctx, Mode::so, [&](const AdditiveCode& C, const std::vector<SubcodeChoice>& prof) {
    if (C.is_zero()) return true;
    auto it = best.find(C.k_fq());
    DistanceOptions d = opt.dist;
    if (it != best.end()) d.stop_below = it->second.dist.d + 1;
    auto r = min_distance(C, d);
    if (r.stopped) return true;
    if (it == best.end() || r.d > it->second.dist.d) best[C.k_fq()] = CodeRecord{C, prof, r, false};
    return true;
  }, eo);
  std::vector<CodeRecord> out;
  for (auto& [k, rec] : best) out.push_back(rec);
  return out;
}

}  // namespace deltacodes
