#pragma once

#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "classify.hpp"
#include "reference.hpp"

// Reproduction harness for the n = 7, q = 3 example, the reference table and the property suites.
namespace deltacodes::verify {

enum class Status { pass, fail, skipped };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::skipped: return "SKIPPED";
  }
  return "?";
}

struct Item {
  int id = 0;
  std::string name;
  Status status = Status::pass;
  std::vector<std::string> notes;
  double seconds = 0;
  double limit = 0;  // seconds; 0 means unlimited
};

struct Options {
  bool small_budget = false;  // skip the sampled rows entirely
  bool extended = false;      // also run the 3^18-word exhaustive scan
  u64 budget = u64{1} << 28;
  u64 samples = 10'000'000;
  u64 seed = 0x5eed;
  unsigned threads = 0;
  std::vector<elem> f9_modulus;  // override for F_9 (negative testing), low-to-high
};

namespace detail {

class Recorder {
 public:
  Recorder(int id, std::string name, double limit) : start_(std::chrono::steady_clock::now()) {
    item_.id = id;
    item_.name = std::move(name);
    item_.limit = limit;
  }
  void check(bool ok, const std::string& what) {
    item_.notes.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    if (!ok) failed_ = true;
  }
  void note(const std::string& s) { item_.notes.push_back("     " + s); }
  void skip(const std::string& s) {
    item_.notes.push_back("skip " + s);
    skipped_ = true;
  }
  Item finish() {
    item_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (item_.limit > 0 && item_.seconds > item_.limit) {
      item_.notes.push_back("FAIL runtime " + std::to_string(item_.seconds) + " s exceeds " + std::to_string(item_.limit) + " s");
      failed_ = true;
    }
    item_.status = failed_ ? Status::fail : (skipped_ ? Status::skipped : Status::pass);
    return item_;
  }
  // Runs f, turning a library error into a failed check.
  void guarded(const std::string& what, const std::function<void()>& f) {
    try {
      f();
    } catch (const error& e) {
      check(false, what + " raised " + errc_name(e.code()) + ": " + e.what());
    }
  }

 private:
  Item item_;
  std::chrono::steady_clock::time_point start_;
  bool failed_ = false, skipped_ = false;
};

inline std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (auto& x : v) s += (s.empty() ? "" : " | ") + x;
  return s;
}

inline std::string poly_text(const AtlasPtr& A, const vec& v) { return to_text(A->R.to_poly(v)); }

inline std::set<std::vector<FpSpace::row>> canon(const std::vector<AdditiveCode>& cs) {
  std::set<std::vector<FpSpace::row>> out;
  for (auto& c : cs) out.insert(c.space.rows());
  return out;
}

inline DistanceOptions distance_options(const Options& o) {
  DistanceOptions d;
  d.budget = o.budget;
  d.samples = o.samples;
  d.seed = o.seed;
  d.threads = o.threads;
  return d;
}

inline std::string row_label(const reference::TableRow& r) {
  return "alpha_" + std::to_string(r.idx) + " (" + std::to_string(r.n) + ", (" + std::to_string(r.q) + "^2)^" +
         std::to_string(r.k) + ", " + std::to_string(r.d) + ")";
}

// cardinality, cyclicity and self-orthogonality of a reference row
inline bool row_structure(Recorder& rec, const reference::TableRow& r, AdditiveCode& C) {
  C = reference::row_code(r);
  bool ok = C.k_fq() == 2 * r.k && is_cyclic(C) && is_self_orthogonal(C);
  rec.check(ok, row_label(r) + ": F_q-dim " + std::to_string(C.k_fq()) + ", cyclic " + std::to_string(is_cyclic(C)) +
                    ", self-orthogonal " + std::to_string(is_self_orthogonal(C)));
  return ok;
}

}  // namespace detail

inline Item factorization(const Options& o) {
  detail::Recorder rec(1, "factorization of X^7 - 1 over F_3 and F_9", 1.0);
  rec.guarded("factorization", [&] {
    auto F3 = field_for(3, 1, FieldMode::paper);
    auto F9 = o.f9_modulus.empty() ? field_for(3, 2, FieldMode::paper) : Field::create(3, 2, o.f9_modulus);
    std::vector<std::string> got3, got9;
    for (auto& f : factor_xn_minus_1(7, F3, FieldMode::paper)) got3.push_back(to_pretty(f.poly));
    for (auto& f : factor_xn_minus_1(7, F9, FieldMode::paper)) got9.push_back(to_pretty(f.poly));
    rec.check(got3 == reference::seven_three::factors_f3, "over F_3: " + detail::join(got3));
    rec.check(got9 == reference::seven_three::factors_f9, "over F_9: " + detail::join(got9));
    auto sd = splitting_data(7, 3, FieldMode::paper);
    rec.check(sd.field->log(sd.eta_prime) == reference::seven_three::eta_prime_log,
              "eta' = eta^" + std::to_string(sd.field->log(sd.eta_prime)));
  });
  return rec.finish();
}

inline Item idempotents(const Options&) {
  detail::Recorder rec(2, "primitive idempotents e_{0,0}, e_{1,0}, e_{1,1}", 1.0);
  rec.guarded("idempotents", [&] {
    namespace st = reference::seven_three;
    auto A = st::atlas();
    const Field& F = *A->Fqt;
    auto cmp = [&](const vec& got, const char* want, const std::string& name) {
      rec.check(got == reference::parse_term_sum(F, 7, want), name + " = " + to_pretty(A->R.to_poly(got)));
    };
    cmp(A->e(0, 0), st::e00, "e_{0,0}");
    cmp(A->e(1, 0), st::e10, "e_{1,0}");
    cmp(A->e(1, 1), st::e11, "e_{1,1}");
    cmp(A->rho_pow(0, 0, 2), st::rho00_sq, "rho_{0,0}^2");
    rec.check(A->info(1).orientation == Orientation::swaps, "tau_{1,-1} swaps I_{1,0} and I_{1,1}");
  });
  return rec.finish();
}

inline Item counts(const Options&) {
  detail::Recorder rec(3, "self-orthogonal / self-dual counts for n=7, q=3", 60.0);
  rec.guarded("counts", [&] {
    auto ctx = make_context(reference::seven_three::atlas(), FieldMode::paper);
    bigint so = count_codes(7, 3, Mode::so), sd = count_codes(7, 3, Mode::sd);
    rec.check(so == 58 && sd == 28, "closed form: SO " + so.str() + ", SD " + sd.str() + " (expected 58, 28)");
    auto e_so = enumerate_all(ctx, Mode::so), e_sd = enumerate_all(ctx, Mode::sd);
    rec.check(e_so.size() == 58 && e_sd.size() == 28,
              "enumeration: " + std::to_string(e_so.size()) + " / " + std::to_string(e_sd.size()) +
                  " distinct canonical codes, each passing the direct check");
    auto orc = brute_force_oracle(ctx);
    rec.check(orc.total_cyclic == 4392, "oracle visited " + std::to_string(orc.total_cyclic) + " cyclic codes");
    rec.check(orc.so.size() == 58 && orc.sd.size() == 28,
              "oracle: SO " + std::to_string(orc.so.size()) + ", SD " + std::to_string(orc.sd.size()) + " (expected 58, 28)");
    EnumerateOptions full;
    full.variant = Variant::complete;
    bool same = detail::canon(enumerate_all(ctx, Mode::so, full)) == detail::canon(orc.so) &&
                detail::canon(enumerate_all(ctx, Mode::sd, full)) == detail::canon(orc.sd);
    rec.note("complete option lists give " + count_codes(7, 3, Mode::so, Variant::complete).str() + " / " +
             count_codes(7, 3, Mode::sd, Variant::complete).str() + " and reproduce the oracle set exactly: " +
             (same ? "yes" : "no"));
    rec.note("the missing codes contain the isotropic line F_3 e_{0,0}: (e_{0,0}, e_{0,0}) = 7 Tr(gamma) = 0");
  });
  return rec.finish();
}

inline Item good_code(const Options& o) {
  detail::Recorder rec(4, "the code <e_{1,0}> is (7, 9^3, 5)", 5.0);
  rec.guarded("good code", [&] {
    namespace st = reference::seven_three;
    auto A = st::atlas();
    auto ctx = make_context(A, FieldMode::paper);
    auto C = cyclic_span(ctx, A->e(1, 0));
    rec.check(C.n() == 7 && C.k_fq() == 6, "n = " + std::to_string(C.n()) + ", |C| = 3^" + std::to_string(C.k_fq()));
    auto d = min_distance(C, detail::distance_options(o));
    rec.check(d.exact && d.d == 5, "exact minimum distance " + std::to_string(d.d) + " over " + std::to_string(d.work) + " words");
    std::vector<vec> rows;
    for (auto& r : st::good_matrix) {
      vec v;
      for (auto& tok : r) v.push_back(parse_token(*ctx->Fqt, tok));
      rows.push_back(v);
    }
    rec.check(code_from_vectors(ctx, rows) == C, "F_3-row space equals that of the printed 6-row generator matrix");
  });
  return rec.finish();
}

inline Item small_rows(const Options& o) {
  detail::Recorder rec(5, "reference rows with exhaustive minimum distance", o.extended ? 720.0 : 120.0);
  std::vector<int> ids = {1, 2, 3, 5};
  if (o.extended) ids.push_back(4);
  for (int id : ids) {
    const auto& r = reference::row(id);
    rec.guarded(detail::row_label(r), [&] {
      AdditiveCode C = zero_code(reference::row_context(r));
      detail::row_structure(rec, r, C);
      auto dopt = detail::distance_options(o);
      if (id == 4) dopt.budget = std::max<u64>(dopt.budget, nt::ipow(3, 18));
      auto d = min_distance(C, dopt);
      rec.check(d.exact && d.d == r.d, detail::row_label(r) + ": exact d = " + std::to_string(d.d) + " over " +
                                           std::to_string(d.work) + " words");
    });
  }
  if (!o.extended) rec.note("alpha_4 (19, (3^2)^9, 10) needs the extended 3^18-word scan");
  return rec.finish();
}

inline Item large_rows(const Options& o) {
  detail::Recorder rec(6, "reference rows beyond desk scale, bounded", 0);
  for (int id = 6; id <= 15; ++id) {
    const auto& r = reference::row(id);
    rec.guarded(detail::row_label(r), [&] {
      AdditiveCode C = zero_code(reference::row_context(r));
      detail::row_structure(rec, r, C);
      long double words = std::pow(static_cast<long double>(r.q), 2.0L * r.k);
      bool within = words <= static_cast<long double>(o.budget);
      if (!within && o.small_budget) {
        rec.skip(detail::row_label(r) + ": SKIPPED(bound-only)");
        return;
      }
      auto d = min_distance(C, detail::distance_options(o));
      if (d.exact) {
        rec.check(d.d == r.d, detail::row_label(r) + ": exact d = " + std::to_string(d.d));
      } else {
        rec.check(d.d >= r.d, detail::row_label(r) + ": lightest of " + std::to_string(d.work) +
                                  " sampled words has weight " + std::to_string(d.d) + " (bound-only)");
      }
    });
  }
  return rec.finish();
}

inline Item properties(const Options& o) {
  detail::Recorder rec(7, "property suites", 0);
  const std::vector<std::pair<long, u64>> inst = {{3, 2}, {5, 2}, {7, 3}, {5, 3}, {7, 5}, {3, 5}};
  std::mt19937_64 g(o.seed);
  for (auto [n, q] : inst) {
    std::string tag = "(" + std::to_string(n) + "," + std::to_string(q) + ") ";
    rec.guarded(tag, [&] {
      auto A = build_atlas(n, q, 2);
      auto cp = make_context(A);
      const DeltaContext& c = *cp;
      const Field& F = *c.Fqt;
      const GroupAlgebra& R = c.R;
      auto rnd = [&] {
        vec v(n);
        for (auto& x : v) x = static_cast<elem>(g() % F.size());
        return v;
      };
      u64 bad = 0, runs = 0;
      auto expect = [&](bool ok) { ++runs, bad += !ok; };

      std::set<elem> img;
      for (elem a = 0; a < F.size(); ++a) {
        elem b = psi(F, a, q, 2);
        img.insert(b);
        expect(psi_inverse(F, b, q, 2) == a);
      }
      expect(img.size() == F.size());
      rec.check(bad == 0, tag + "psi bijective on F_{q^2} (" + std::to_string(F.size()) + " elements)");

      bad = runs = 0;
      for (int it = 0; it < 1000; ++it) {
        vec a = rnd(), b = rnd(), d = rnd();
        elem l = c.q_qt(static_cast<elem>(g() % q));
        elem ab = delta_inner(a, b, c);
        expect(ab < c.Fq->size());
        expect(delta_inner(a, R.add(b, d), c) == c.Fq->add(ab, delta_inner(a, d, c)));
        expect(delta_inner(R.add(a, d), b, c) == c.Fq->add(ab, delta_inner(d, b, c)));
        expect(delta_inner(R.scale(l, a), b, c) == c.Fq->mul(*c.q_qt.try_preimage(l), ab));
      }
      rec.check(bad == 0, tag + "bilinear and F_q-valued on 1000 random triples");

      bad = runs = 0;
      if (F.size() * static_cast<u64>(n) <= (u64{1} << 20))
        for (long j = 0; j < n; ++j)
          for (elem x = 1; x < F.size(); ++x) {
            vec a(n, 0);
            a[j] = x;
            expect(delta_inner(a, inner_witness(a, c), c) != 0);
            expect(!c.Rq.is_zero(delta_form(a, form_witness(a, c), c)));
          }
      for (int it = 0; it < 200; ++it) {
        vec a = rnd();
        if (R.is_zero(a)) continue;
        expect(delta_inner(a, inner_witness(a, c), c) != 0);
        expect(!c.Rq.is_zero(delta_form(a, form_witness(a, c), c)));
      }
      rec.check(bad == 0, tag + "non-degeneracy witnesses (" + std::to_string(runs) + " checks)");

      bad = runs = 0;
      for (int it = 0; it < 500; ++it) {
        vec a = rnd(), b = rnd();
        vec f = delta_form(a, b, c);
        vec sb = b;
        for (long k = 0; k < n; ++k) {
          expect(f[k] == delta_inner(a, sb, c));
          sb = R.mul(R.monomial(1), sb);
        }
      }
      rec.check(bad == 0, tag + "coefficient identity on 500 random pairs, all k");

      bad = runs = 0;
      for (int it = 0; it < 200; ++it) {
        vec f(n);
        for (auto& x : f) x = static_cast<elem>(g() % q);
        expect(module_law_check(f, rnd(), rnd(), c));
        expect(component_split_check(rnd(), rnd(), c));
      }
      rec.check(bad == 0, tag + "module laws and component splitting on 200 random inputs");

      bad = runs = 0;
      std::vector<std::pair<unsigned, unsigned>> ids;
      for (unsigned i = 0; i < A->size(); ++i)
        for (unsigned j = 0; j < A->info(i).s; ++j) ids.emplace_back(i, j);
      vec sum = R.zero();
      for (auto [i, j] : ids) {
        const vec& e = A->e(i, j);
        expect(R.mul(e, e) == e);
        sum = R.add(sum, e);
        for (auto [i2, j2] : ids)
          if (std::make_pair(i, j) != std::make_pair(i2, j2)) expect(R.is_zero(R.mul(e, A->e(i2, j2))));
      }
      expect(sum == R.one());
      for (int it = 0; it < 200; ++it) {
        vec a = rnd(), b = rnd();
        u64 w = g() % 2;
        long u;
        do u = static_cast<long>(g() % n) + 1;
        while (std::gcd<long>(u, n) != 1);
        expect(A->tau(R.mul(a, b), w, u) == R.mul(A->tau(a, w, u), A->tau(b, w, u)));
        expect(A->tau(R.add(a, b), w, u) == R.add(A->tau(a, w, u), A->tau(b, w, u)));
      }
      rec.check(bad == 0, tag + "idempotent laws and tau automorphism law");

      bad = runs = 0;
      EnumerateOptions full;
      full.variant = Variant::complete;
      enumerate_codes(cp, Mode::so, [&](const AdditiveCode& C, const std::vector<SubcodeChoice>&) {
        auto D = dual_delta(C);
        auto dc = decompose(C), dd = decompose(D);
        for (unsigned i = 0; i < A->size(); ++i) expect(dc.k_K[i] + dd.k_K[A->info(i).mu] == 2);
        return true;
      }, full);
      rec.check(bad == 0, tag + "k_i + k'_mu(i) = 2 on every enumerated code (" + std::to_string(runs) + " checks)");

      bad = runs = 0;
      for (int it = 0; it < 100; ++it) {
        std::vector<vec> vs(g() % (2 * n + 1));
        for (auto& v : vs) v = rnd();
        auto C = code_from_vectors(cp, vs);
        expect(C.k_fq() + dual_delta(C).k_fq() == static_cast<std::size_t>(2 * n));
      }
      rec.check(bad == 0, tag + "dim C + dim C^perp = 2n on 100 random codes");
    });
  }
  return rec.finish();
}

inline Item binary_counts(const Options&) {
  detail::Recorder rec(8, "n=3, q=2 counts against the oracle", 1.0);
  rec.guarded("binary counts", [&] {
    bigint so = count_codes(3, 2, Mode::so), sd = count_codes(3, 2, Mode::sd);
    auto orc = brute_force_oracle(make_context(build_atlas(3, 2, 2)));
    rec.check(so == 8 && sd == 3, "closed form: SO " + so.str() + ", SD " + sd.str());
    rec.check(orc.total_cyclic == 35 && orc.so.size() == 8 && orc.sd.size() == 3,
              "oracle over " + std::to_string(orc.total_cyclic) + " cyclic codes: SO " + std::to_string(orc.so.size()) +
                  ", SD " + std::to_string(orc.sd.size()));
  });
  return rec.finish();
}

using Check = Item (*)(const Options&);

inline const std::vector<Check>& all_checks() {
  static const std::vector<Check> v = {factorization, idempotents, counts, good_code,
                                       small_rows, large_rows, properties, binary_counts};
  return v;
}

inline std::string render(const Item& it, bool verbose = true) {
  std::ostringstream os;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f s", it.seconds);
  os << "criterion " << it.id << " " << status_name(it.status) << " " << it.name << " [" << buf;
  if (it.limit > 0) os << ", limit " << it.limit << " s";
  os << "]\n";
  if (verbose)
    for (auto& n : it.notes) os << "    " << n << "\n";
  return os.str();
}

// Runs every criterion, reporting each as it finishes. True iff nothing failed.
inline bool run_all(const Options& o, const std::function<void(const Item&)>& sink) {
  bool ok = true;
  for (auto f : all_checks()) {
    Item it = f(o);
    ok = ok && it.status != Status::fail;
    sink(it);
  }
  return ok;
}

}  // namespace deltacodes::verify
