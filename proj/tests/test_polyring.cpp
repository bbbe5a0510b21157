#include <gtest/gtest.h>

#include <random>

#include "deltacodes/polyring.hpp"

using namespace deltacodes;

namespace {

FieldPtr F3() { return field_for(3, 1); }
FieldPtr F9p() { return field_for(3, 2, FieldMode::paper); }

std::vector<std::string> texts(const std::vector<Factor>& fs) {
  std::vector<std::string> out;
  for (auto& f : fs) out.push_back(to_text(f.poly));
  return out;
}

// X^(Q^j) mod f via repeated Q-th powering.
Polynomial x_pow_q(const Polynomial& f, u64 Q, unsigned j) {
  Polynomial x = poly_mod(Polynomial::monomial(f.F, 1), f);
  for (unsigned r = 0; r < j; ++r) {
    Polynomial acc(f.F, {1}), b = x;
    for (u64 e = Q; e; e >>= 1) {
      if (e & 1) acc = poly_mod(poly_mul(acc, b), f);
      b = poly_mod(poly_mul(b, b), f);
    }
    x = acc;
  }
  return x;
}

}  // namespace

TEST(Polyring, ProductOfStepOneFactors) {
  Polynomial a(F3(), {2, 1}), b(F3(), {1, 1, 1, 1, 1, 1, 1});
  Polynomial prod = poly_mul(a, b);
  EXPECT_EQ(to_text(prod), "2,0,0,0,0,0,0,1");
  EXPECT_EQ(prod, Polynomial::x_n_minus_1(F3(), 7));
}

TEST(Polyring, GcdAndEval) {
  auto F = F9p();
  Polynomial f(F, {F->exp(3), 2, F->exp(5)});
  EXPECT_EQ(poly_gcd(f, Polynomial(F, {})), poly_monic(f));
  EXPECT_EQ(poly_monic(f).lead(), 1u);
  Polynomial mod(F, {2, 2, 1});
  EXPECT_EQ(poly_eval(mod, F->generator()), 0u);
  Polynomial a(F, {1, 1}), b(F, {2, 1});
  Polynomial g = poly_gcd(poly_mul(a, b), poly_mul(a, Polynomial(F, {F->exp(1), 1})));
  EXPECT_EQ(g, a);
  auto x = poly_xgcd(poly_mul(a, b), Polynomial(F, {F->exp(1), 1}));
  EXPECT_EQ(x.g, Polynomial(F, {1}));
  EXPECT_EQ(poly_add(poly_mul(x.u, poly_mul(a, b)), poly_mul(x.v, Polynomial(F, {F->exp(1), 1}))), x.g);
  EXPECT_THROW(poly_mod(f, Polynomial(F, {})), error);
  EXPECT_THROW(poly_add(f, Polynomial(F3(), {1})), error);
}

TEST(Polyring, DivmodReconstructs) {
  auto F = field_for(5, 2);
  std::mt19937_64 g(7);
  for (int it = 0; it < 200; ++it) {
    std::vector<elem> a(1 + g() % 9), b(1 + g() % 5);
    for (auto& x : a) x = static_cast<elem>(g() % 25);
    for (auto& x : b) x = static_cast<elem>(g() % 25);
    b.back() = 1;
    Polynomial A(F, a), B(F, b);
    auto [qq, r] = poly_divmod(A, B);
    ASSERT_EQ(poly_add(poly_mul(qq, B), r), A);
    ASSERT_LT(r.degree(), B.degree());
  }
}

TEST(Polyring, TextRoundTrip) {
  auto F = F9p();
  Polynomial f = parse_poly(F, "2,w^7,w,1");
  EXPECT_EQ(to_text(f), "2,w^7,w,1");
  EXPECT_EQ(to_pretty(f), "X^3 + w*X^2 + w^7*X + 2");
  EXPECT_EQ(to_text(Polynomial(F, {})), "0");
}

TEST(Polyring, SplittingData) {
  auto sd = splitting_data(7, 3, FieldMode::paper);
  EXPECT_EQ(sd.ord, 6u);
  EXPECT_EQ(sd.field->size(), 729u);
  EXPECT_EQ(sd.field->log(sd.eta_prime), 104u);
  auto sd2 = splitting_data(3, 2);
  EXPECT_EQ(sd2.ord, 2u);
  EXPECT_EQ(sd2.field->size(), 4u);
  for (u64 q : {2, 3, 4, 5}) {
    auto sd1 = splitting_data(1, q);
    EXPECT_EQ(sd1.ord, 1u);
    EXPECT_EQ(sd1.eta_prime, 1u);
  }
  for (long n : {5, 7, 11, 13, 21}) {
    auto s = splitting_data(n, 2);
    const Field& W = *s.field;
    EXPECT_EQ(W.pow(s.eta_prime, n), 1u);
    for (long k = 1; k < n; ++k) EXPECT_NE(W.pow(s.eta_prime, k), 1u);
  }
  try {
    splitting_data(6, 3);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::not_coprime);
    EXPECT_NE(std::string(e.what()).find("gcd(n,q)=1"), std::string::npos);
  }
}

TEST(Polyring, StepOneFactorsOverF3) {
  auto fs = factor_xn_minus_1(7, F3(), FieldMode::paper);
  ASSERT_EQ(fs.size(), 2u);
  EXPECT_EQ(texts(fs), (std::vector<std::string>{"2,1", "1,1,1,1,1,1,1"}));
  EXPECT_EQ(fs[0].coset, std::vector<long>{0});
  EXPECT_EQ(fs[1].coset, (std::vector<long>{1, 2, 3, 4, 5, 6}));
}

TEST(Polyring, StepTwoFactorsOverF9) {
  auto fs = factor_xn_minus_1(7, F9p(), FieldMode::paper);
  ASSERT_EQ(fs.size(), 3u);
  EXPECT_EQ(texts(fs), (std::vector<std::string>{"2,1", "2,w^7,w,1", "2,w^5,w^3,1"}));
  EXPECT_EQ(fs[1].coset, (std::vector<long>{1, 2, 4}));
  EXPECT_EQ(fs[2].coset, (std::vector<long>{3, 5, 6}));
  auto sd = splitting_data(7, 3, FieldMode::paper);
  EXPECT_EQ(to_text(minimal_poly({1, 2, 4}, sd, F9p())), "2,w^7,w,1");
  EXPECT_EQ(to_text(minimal_poly({0}, sd, F3())), "2,1");
  EXPECT_THROW(minimal_poly({1, 2}, sd, F9p()), error);
}

TEST(Polyring, BinaryLengthThree) {
  auto fs = factor_xn_minus_1(3, field_for(2, 1));
  EXPECT_EQ(texts(fs), (std::vector<std::string>{"1,1", "1,1,1"}));
  EXPECT_EQ(fs[1].coset, (std::vector<long>{1, 2}));
}

TEST(Polyring, FactorsMultiplyBackAndAreIrreducible) {
  struct Case { long n; u64 q; };
  for (auto c : {Case{7, 2}, Case{7, 3}, Case{7, 4}, Case{9, 2}, Case{11, 3}, Case{13, 3}, Case{15, 2}, Case{8, 3},
                 Case{10, 3}, Case{21, 4}, Case{5, 9}, Case{23, 2}, Case{1, 7}}) {
    auto F = field_of_size(c.q);
    auto fs = factor_xn_minus_1(c.n, F);
    Polynomial prod(F, {1});
    for (auto& f : fs) {
      prod = poly_mul(prod, f.poly);
      ASSERT_EQ(f.poly.degree(), static_cast<long>(f.coset.size()));
      ASSERT_EQ(f.poly.lead(), 1u);
      if (f.poly.degree() <= 8) {
        for (unsigned j = 1; 2 * j <= f.poly.degree(); ++j) {
          Polynomial h = poly_sub(x_pow_q(f.poly, c.q, j), Polynomial::monomial(F, 1));
          ASSERT_EQ(poly_gcd(f.poly, h).degree(), 0) << "n=" << c.n << " q=" << c.q;
        }
      }
    }
    EXPECT_EQ(prod, Polynomial::x_n_minus_1(F, c.n));
    EXPECT_EQ(fs[0].coset, std::vector<long>{0});
    EXPECT_EQ(to_text(fs[0].poly), to_token(*F, F->neg(1)) + ",1");
  }
}

TEST(Polyring, CyclotomicCosets) {
  EXPECT_EQ(cyclotomic_cosets(7, 3), (std::vector<std::vector<long>>{{0}, {1, 2, 3, 4, 5, 6}}));
  EXPECT_EQ(cyclotomic_cosets(7, 9), (std::vector<std::vector<long>>{{0}, {1, 2, 4}, {3, 5, 6}}));
  EXPECT_EQ(cyclotomic_cosets(1, 5), (std::vector<std::vector<long>>{{0}}));
  EXPECT_THROW(cyclotomic_cosets(9, 3), error);
}

TEST(Polyring, GroupAlgebraBasics) {
  using vec = GroupAlgebra::vec;
  GroupAlgebra R(7, F9p());
  std::mt19937_64 g(9);
  auto rnd = [&] {
    vec v(7);
    for (auto& x : v) x = static_cast<elem>(g() % 9);
    return v;
  };
  for (int i = 0; i < 100; ++i) {
    vec a = rnd(), b = rnd(), c = rnd();
    ASSERT_EQ(R.mul(a, b), R.mul(b, a));
    ASSERT_EQ(R.mul(R.mul(a, b), c), R.mul(a, R.mul(b, c)));
    ASSERT_EQ(R.shift(a, 1), R.mul(R.monomial(1), a));
    ASSERT_EQ(R.mul(a, R.one()), a);
  }
  vec a = rnd();
  EXPECT_EQ(R.shift(a, 1)[0], a[6]);
  EXPECT_THROW(R.tau(a, 1, 7), error);
  EXPECT_THROW(R.mul(a, vec(6, 0)), error);
}
