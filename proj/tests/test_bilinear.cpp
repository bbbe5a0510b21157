#include <gtest/gtest.h>

#include <random>

#include "deltacodes/bilinear.hpp"

using namespace deltacodes;

namespace {

struct Inst {
  long n;
  u64 q;
};

const std::vector<Inst> kInstances = {{3, 2}, {5, 2}, {7, 3}, {5, 3}, {7, 5}, {3, 5}};

vec rnd(std::mt19937_64& g, const DeltaContext& c) {
  vec v(c.n);
  for (auto& x : v) x = static_cast<elem>(g() % c.Fqt->size());
  return v;
}

vec rnd_q(std::mt19937_64& g, const DeltaContext& c) {
  vec v(c.n);
  for (auto& x : v) x = static_cast<elem>(g() % c.q);
  // digits of F_q elements, so any value below q is valid
  return v;
}

// sigma^k(b)_i = b_{i-k}
vec sigma(const vec& b, long k) {
  long n = static_cast<long>(b.size());
  vec out(n);
  for (long i = 0; i < n; ++i) out[i] = b[nt::mod(i - k, n)];
  return out;
}

std::vector<ContextPtr> contexts() {
  std::vector<ContextPtr> out;
  for (auto [n, q] : kInstances) out.push_back(make_context(build_atlas(n, q, 2)));
  return out;
}

}  // namespace

TEST(Bilinear, ValuesInFqAndBilinear) {
  std::mt19937_64 g(1);
  for (auto& cp : contexts()) {
    const auto& c = *cp;
    const Field& F = *c.Fqt;
    for (int it = 0; it < 1000; ++it) {
      vec a = rnd(g, c), b = rnd(g, c), d = rnd(g, c);
      elem al = static_cast<elem>(g() % c.q);
      elem ab = delta_inner(a, b, c);
      ASSERT_LT(ab, c.Fq->size());
      ASSERT_EQ(delta_inner(a, c.R.add(b, d), c), c.Fq->add(ab, delta_inner(a, d, c)));
      ASSERT_EQ(delta_inner(c.R.add(a, b), d, c), c.Fq->add(delta_inner(a, d, c), delta_inner(b, d, c)));
      elem alq = c.q_qt(al);
      ASSERT_EQ(delta_inner(c.R.scale(alq, a), b, c), c.Fq->mul(al, ab));
      ASSERT_EQ(delta_inner(a, c.R.scale(alq, b), c), c.Fq->mul(al, ab));
      ASSERT_EQ(delta_inner_t2(a, b, c), ab);
      ASSERT_EQ(delta_inner(c.R.zero(), b, c), 0u);
      (void)F;
    }
  }
}

TEST(Bilinear, LargerEvenT) {
  std::mt19937_64 g(2);
  for (auto [n, q, t] : std::vector<std::tuple<long, u64, unsigned>>{{3, 2, 4}, {5, 2, 6}, {3, 5, 4}, {7, 4, 4}}) {
    auto cp = make_context(n, q, t);
    const auto& c = *cp;
    for (int it = 0; it < 300; ++it) {
      vec a = rnd(g, c), b = rnd(g, c), d = rnd(g, c);
      elem ab = delta_inner(a, b, c);
      ASSERT_LT(ab, c.Fq->size());
      ASSERT_EQ(delta_inner(a, c.R.add(b, d), c), c.Fq->add(ab, delta_inner(a, d, c)));
      vec form = delta_form(a, b, c);
      for (long k = 0; k < n; ++k) ASSERT_EQ(form[k], delta_inner(a, sigma(b, k), c));
    }
    EXPECT_THROW(delta_inner_t2(rnd(g, c), rnd(g, c), c), error);
  }
  EXPECT_THROW(make_context(5, 3, 4), error);  // t = 4 = 1 mod 3
  EXPECT_THROW(make_context(5, 3, 3), error);
}

TEST(Bilinear, CoefficientIdentity) {
  std::mt19937_64 g(3);
  for (auto& cp : contexts()) {
    const auto& c = *cp;
    for (int it = 0; it < 500; ++it) {
      vec a = rnd(g, c), b = rnd(g, c);
      vec form = delta_form(a, b, c);
      for (long k = 0; k < c.n; ++k) ASSERT_EQ(form[k], delta_inner(a, sigma(b, k), c));
      ASSERT_EQ(sigma(b, 1), c.R.mul(c.R.monomial(1), b));
    }
    EXPECT_TRUE(c.Rq.is_zero(delta_form(rnd(g, c), c.R.zero(), c)));
  }
}

TEST(Bilinear, ModuleLaws) {
  std::mt19937_64 g(4);
  for (auto& cp : contexts()) {
    const auto& c = *cp;
    EXPECT_TRUE(module_law_check(c.Rq.one(), rnd(g, c), rnd(g, c), c));
    EXPECT_TRUE(module_law_check(c.Rq.monomial(1), rnd(g, c), rnd(g, c), c));
    for (int it = 0; it < 200; ++it) ASSERT_TRUE(module_law_check(rnd_q(g, c), rnd(g, c), rnd(g, c), c));
  }
}

TEST(Bilinear, ModuleLawDetectsWrongSide) {
  // [a, f b] differs from f [a, b] in general: the tau_{1,-1} twist matters.
  auto cp = make_context(build_atlas(7, 3, 2));
  const auto& c = *cp;
  std::mt19937_64 g(5);
  bool differs = false;
  for (int it = 0; it < 20 && !differs; ++it) {
    vec a = rnd(g, c), b = rnd(g, c);
    vec f = c.Rq.monomial(1);
    differs = delta_form(a, c.R.mul(embed_q(f, c), b), c) != c.Rq.mul(f, delta_form(a, b, c));
  }
  EXPECT_TRUE(differs);
}

TEST(Bilinear, ComponentSplitting) {
  std::mt19937_64 g(6);
  for (auto& cp : contexts()) {
    const auto& c = *cp;
    EXPECT_TRUE(component_split_check(c.R.one(), c.R.one(), c));
    for (int it = 0; it < 200; ++it) ASSERT_TRUE(component_split_check(rnd(g, c), rnd(g, c), c));
  }
  auto cp = make_context(build_atlas(7, 3, 2));
  const auto& c = *cp;
  const auto& A = *c.atlas;
  for (int it = 0; it < 50; ++it) {
    vec a = c.R.mul(rnd(g, c), A.E(0)), b = c.R.mul(rnd(g, c), A.E(1));
    ASSERT_TRUE(c.Rq.is_zero(delta_form(a, b, c)));
  }
  EXPECT_THROW(component_split_check(c.R.one(), c.R.one(), *make_context(7, 3, 2)), error);
}

TEST(Bilinear, WorkedIdempotentIsotropic) {
  AtlasOptions o;
  o.mode = FieldMode::paper;
  auto A = build_atlas(7, 3, 2, o);
  ASSERT_EQ(A->info(1).orientation, Orientation::swaps);
  auto cp = make_context(A, FieldMode::paper);
  EXPECT_TRUE(cp->Rq.is_zero(delta_form(A->e(1, 0), A->e(1, 0), *cp)));
  EXPECT_TRUE(cp->Rq.is_zero(delta_form(A->e(1, 1), A->e(1, 1), *cp)));
  EXPECT_FALSE(cp->Rq.is_zero(delta_form(A->e(1, 0), A->e(1, 1), *cp)));
  EXPECT_EQ(cp->Fqt->log(cp->gamma), 2u);
}

TEST(Bilinear, NonDegeneracyWitnesses) {
  for (auto& cp : contexts()) {
    const auto& c = *cp;
    ASSERT_LE(c.Fqt->size() * c.n, u64{1} << 20);
    // The witness depends on one coordinate only, so (position, value) covers every nonzero a.
    for (long j = 0; j < c.n; ++j)
      for (elem x = 1; x < c.Fqt->size(); ++x) {
        vec a(c.n, 0);
        a[j] = x;
        vec b = inner_witness(a, c);
        ASSERT_NE(delta_inner(a, b, c), 0u);
        vec bf = form_witness(a, c);
        ASSERT_FALSE(c.Rq.is_zero(delta_form(a, bf, c)));
        ASSERT_NE(delta_form(a, bf, c)[nt::mod(2 * j, c.n)], 0u);
      }
  }
  std::mt19937_64 g(7);
  for (auto& cp : contexts()) {
    const auto& c = *cp;
    for (int it = 0; it < 300; ++it) {
      vec a = rnd(g, c);
      if (c.R.is_zero(a)) continue;
      ASSERT_NE(delta_inner(a, inner_witness(a, c), c), 0u);
      ASSERT_FALSE(c.Rq.is_zero(delta_form(a, form_witness(a, c), c)));
    }
  }
}

TEST(Bilinear, ExhaustiveNonDegeneracySmall) {
  // Every nonzero a in F_4^3 pairs nontrivially with some standard-basis multiple.
  auto cp = make_context(3, 2, 2);
  const auto& c = *cp;
  for (u64 code = 1; code < 64; ++code) {
    vec a{static_cast<elem>(code % 4), static_cast<elem>(code / 4 % 4), static_cast<elem>(code / 16)};
    bool found = false;
    for (long j = 0; j < 3 && !found; ++j)
      for (elem y = 1; y < 4 && !found; ++y) {
        vec b(3, 0);
        b[j] = y;
        found = delta_inner(a, b, c) != 0;
      }
    ASSERT_TRUE(found);
  }
}

TEST(Bilinear, GammaScaling) {
  std::mt19937_64 g(8);
  for (auto& cp : contexts()) {
    for (elem s = 2; s < cp->q; ++s) {
      DeltaContext scaled = *cp;
      scaled.gamma = cp->Fqt->mul(cp->gamma, cp->q_qt(s));
      for (int it = 0; it < 100; ++it) {
        vec a = rnd(g, *cp), b = rnd(g, *cp);
        elem v = delta_inner(a, b, *cp);
        ASSERT_EQ(delta_inner(a, b, scaled), cp->Fq->mul(s, v));
        ASSERT_EQ(delta_inner(a, b, scaled) == 0, v == 0);
      }
    }
  }
}

TEST(Bilinear, Errors) {
  auto cp = make_context(7, 3, 2);
  EXPECT_THROW(delta_inner(vec(7, 0), vec(6, 0), *cp), error);
  try {
    delta_inner(vec(7, 0), vec(7, 9), *cp);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::field_mismatch);
  }
  EXPECT_THROW(make_context(6, 3, 2), error);
}
