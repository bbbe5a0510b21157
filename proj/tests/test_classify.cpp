#include <gtest/gtest.h>

#include <set>

#include "deltacodes/classify.hpp"

using namespace deltacodes;

namespace {

using Canon = std::vector<FpSpace::row>;

std::set<Canon> canon(const std::vector<AdditiveCode>& cs) {
  std::set<Canon> out;
  for (auto& c : cs) out.insert(c.space.rows());
  return out;
}

ContextPtr ctx_for(long n, u64 q) { return make_context(build_atlas(n, q, 2)); }

ContextPtr paper_ctx_73() {
  AtlasOptions o;
  o.mode = FieldMode::paper;
  o.rho_log = {{0, 91}, {1, 243}};
  return make_context(build_atlas(7, 3, 2, o), FieldMode::paper);
}

u64 to_u64(const bigint& b) { return static_cast<u64>(b); }

}  // namespace

TEST(Classify, StatedCountsSevenThree) {
  EXPECT_EQ(count_codes(7, 3, Mode::so), 58);
  EXPECT_EQ(count_codes(7, 3, Mode::sd), 28);
  EXPECT_EQ(count_codes(7, 3, Mode::so, Variant::complete), 87);
  EXPECT_EQ(count_codes(7, 3, Mode::sd, Variant::complete), 56);
}

TEST(Classify, CountsQEven) {
  // 3 | 2^2 - 1: cosets {0}, {1,2}; mu fixes {1,2}
  EXPECT_EQ(count_codes(3, 2, Mode::so), 8);
  EXPECT_EQ(count_codes(3, 2, Mode::sd), 3);
  EXPECT_EQ(count_codes(3, 2, Mode::so, Variant::complete), 8);
  EXPECT_EQ(count_codes(1, 2, Mode::so), 2);
  EXPECT_EQ(count_codes(1, 2, Mode::sd), 1);
  EXPECT_EQ(count_codes(1, 3, Mode::so), 2);
  EXPECT_EQ(count_codes(1, 3, Mode::so, Variant::complete), 3);
  EXPECT_EQ(count_codes(1, 3, Mode::sd, Variant::complete), 2);
}

TEST(Classify, EvenDegreePairCounts) {
  // n = 8, q = 3: cosets {0}, {4}, {1,3}, {2,6}, {5,7}; mu swaps {1,3} and {5,7} (d = 2), fixes {2,6}
  auto T = build_coset_table(8, 3, 2);
  ASSERT_EQ(T.M_set.size(), 1u);
  ASSERT_EQ(T[T.M_set[0]].d, 2u);
  EXPECT_EQ(count_codes(8, 3, Mode::so), bigint(4) * 5 * 29);
  EXPECT_EQ(count_codes(8, 3, Mode::so, Variant::complete), bigint(9) * 5 * 33);
  EXPECT_EQ(count_codes(8, 3, Mode::sd), bigint(1) * 4 * 10);
  EXPECT_EQ(count_codes(8, 3, Mode::sd, Variant::complete), bigint(4) * 4 * 12);
}

TEST(Classify, HugeCountsStayExact) {
  bigint c = count_codes(151, 2, Mode::so);
  EXPECT_GT(c, bigint(1) << 60);
  EXPECT_EQ(c % 2, 0);
}

TEST(Classify, RequiresTwo) {
  EXPECT_THROW(count_codes(7, 3, Mode::so, Variant::stated, 4), error);
  auto cp = make_context(5, 2, 4);
  try {
    enumerate_all(cp, Mode::so);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::unsupported_t);
  }
}

TEST(Classify, SubcodeOptionsSevenThree) {
  auto cp = paper_ctx_73();
  const auto& A = *cp->atlas;
  auto o0 = subcode_options(A, 0, Mode::so);
  ASSERT_EQ(o0.size(), 2u);
  EXPECT_EQ(o0[0].kind, SubcodeChoice::zero);
  EXPECT_EQ(o0[1].label, "rho_{0,0}^2");
  auto o1 = subcode_options(A, 1, Mode::so);
  ASSERT_EQ(o1.size(), 29u);
  EXPECT_EQ(o1[1].label, "e_{1,0}");
  EXPECT_EQ(o1[2].label, "e_{1,1}");
  for (u64 m = 0; m < 26; ++m) EXPECT_EQ(o1[3 + m].label, "e_{1,0}+rho_{1,1}^" + std::to_string(28 * m));
  EXPECT_EQ(subcode_options(A, 1, Mode::sd).size(), 28u);
  EXPECT_EQ(subcode_options(A, 0, Mode::sd, Variant::complete).size(), 2u);
}

TEST(Classify, EnumerationMatchesCountAndIsOrthogonal) {
  for (auto [n, q] : std::vector<std::pair<long, u64>>{{3, 2}, {7, 3}, {5, 2}, {7, 2}, {1, 3}, {1, 2}, {8, 3}, {5, 3}}) {
    auto cp = ctx_for(n, q);
    for (auto var : {Variant::stated, Variant::complete})
      for (auto mode : {Mode::so, Mode::sd}) {
        EnumerateOptions o;
        o.variant = var;
        auto codes = enumerate_all(cp, mode, o);
        EXPECT_EQ(codes.size(), to_u64(count_codes(n, q, mode, var))) << n << "," << q;
        for (auto& c : codes) {
          ASSERT_TRUE(is_cyclic(c));
          if (mode == Mode::sd) {
            ASSERT_EQ(c.k_fq(), static_cast<std::size_t>(n));
          }
        }
      }
  }
}

TEST(Classify, TabulatedFieldsEnumeration) {
  auto cp = paper_ctx_73();
  auto so = enumerate_all(cp, Mode::so);
  auto sd = enumerate_all(cp, Mode::sd);
  EXPECT_EQ(so.size(), 58u);
  EXPECT_EQ(sd.size(), 28u);
  auto s_so = canon(so);
  for (auto& c : sd) EXPECT_TRUE(s_so.count(c.space.rows()));
  for (auto& c : so) EXPECT_TRUE(c.subset_of(dual_delta(c)));
  for (auto& c : sd) EXPECT_TRUE(dual_delta(c) == c);
}

TEST(Classify, OracleSevenThree) {
  auto cp = ctx_for(7, 3);
  auto r = brute_force_oracle(cp);
  EXPECT_EQ(r.total_cyclic, 6u * 732u);
  EXPECT_EQ(r.so.size(), 87u);
  EXPECT_EQ(r.sd.size(), 56u);
  EnumerateOptions full;
  full.variant = Variant::complete;
  EXPECT_EQ(canon(enumerate_all(cp, Mode::so, full)), canon(r.so));
  EXPECT_EQ(canon(enumerate_all(cp, Mode::sd, full)), canon(r.sd));
  // the stated lists are a strict subset
  auto stated = canon(enumerate_all(cp, Mode::so));
  auto all = canon(r.so);
  for (auto& c : stated) EXPECT_TRUE(all.count(c));
  EXPECT_LT(stated.size(), all.size());
}

TEST(Classify, OracleAgreesWithCompleteCounts) {
  for (auto [n, q] : std::vector<std::pair<long, u64>>{{3, 2}, {5, 2}, {7, 2}, {1, 3}, {8, 3}, {5, 3}, {4, 3}, {9, 2}}) {
    auto cp = ctx_for(n, q);
    auto r = brute_force_oracle(cp);
    EXPECT_EQ(r.so.size(), to_u64(count_codes(n, q, Mode::so, Variant::complete))) << n << "," << q;
    EXPECT_EQ(r.sd.size(), to_u64(count_codes(n, q, Mode::sd, Variant::complete))) << n << "," << q;
    for (auto& c : r.so) ASSERT_TRUE(is_self_orthogonal(c));
    for (auto& c : r.sd) ASSERT_TRUE(is_self_dual(c));
  }
}

TEST(Classify, QEvenStatedIsComplete) {
  auto cp = ctx_for(3, 2);
  auto r = brute_force_oracle(cp);
  EXPECT_EQ(r.total_cyclic, 5u * 7u);
  EXPECT_EQ(canon(enumerate_all(cp, Mode::so)), canon(r.so));
  EXPECT_EQ(canon(enumerate_all(cp, Mode::sd)), canon(r.sd));
  EXPECT_EQ(r.so.size(), 8u);
  EXPECT_EQ(r.sd.size(), 3u);
}

TEST(Classify, PairMatesAreOrthogonal) {
  auto cp = ctx_for(8, 3);
  const auto& A = *cp->atlas;
  unsigned i = A.table.M_set[0];
  for (auto& [a, b] : pair_options(A, i, Mode::sd, Variant::complete)) {
    if (a.kind != SubcodeChoice::line) continue;
    for (auto& x : a.gens)
      for (auto& y : b.gens) {
        EXPECT_TRUE(cp->Rq.is_zero(delta_form(x, y, *cp))) << a.label << " / " << b.label;
        EXPECT_TRUE(cp->Rq.is_zero(delta_form(y, x, *cp)));
      }
  }
}

TEST(Classify, OracleTooLarge) {
  try {
    brute_force_oracle(ctx_for(7, 3), 1000);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::too_large);
  }
}

TEST(Classify, EnumerateLimitAndStop) {
  auto cp = ctx_for(7, 3);
  EnumerateOptions o;
  o.limit = 5;
  EXPECT_EQ(enumerate_all(cp, Mode::so, o).size(), 5u);
  int seen = 0;
  u64 k = enumerate_codes(cp, Mode::so, [&](const AdditiveCode&, const std::vector<SubcodeChoice>& prof) {
    EXPECT_EQ(prof.size(), 2u);
    return ++seen < 3;
  });
  EXPECT_EQ(k, 3u);
}

TEST(Classify, GoodCodeReportSevenThree) {
  auto cp = paper_ctx_73();
  auto rep = good_code_report(cp);
  ASSERT_FALSE(rep.empty());
  bool found = false;
  for (auto& r : rep) {
    EXPECT_TRUE(r.dist.exact);
    EXPECT_TRUE(is_self_orthogonal(r.code));
    if (r.code.k_fq() == 6) {
      EXPECT_EQ(r.dist.d, 5u);
      found = true;
    }
  }
  EXPECT_TRUE(found);
}
