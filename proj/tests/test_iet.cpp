#include <gtest/gtest.h>

#include "rauzy/iet.hpp"
#include "rauzy/induction.hpp"
#include "support.hpp"

namespace rauzy {
namespace {

using testing::q;

TEST(Iet, BuildTwoIntervals) {
  const Iet t = Iet::build(make_rvector({1, 2}), Perm::from_bottom_row({2, 1}));
  EXPECT_EQ(t.breakpoints(), (std::vector<Rational>{0, 1, 3}));
  EXPECT_EQ(t.offsets(), (std::vector<Rational>{2, -1}));
  EXPECT_EQ(t(0), 2);
  EXPECT_EQ(t(q(3, 2)), q(1, 2));
}

TEST(Iet, IdentityAndReversal) {
  const Iet id = Iet::build(make_rvector({q(1, 3), 1, q(5, 2)}), Perm::identity(3));
  for (const Rational& x : {q(0), q(1, 5), q(4, 3), q(3)}) EXPECT_EQ(id(x), x);
  const Iet rev = Iet::build(make_rvector({1, 1, 1}), Perm::from_bottom_row({3, 2, 1}));
  EXPECT_EQ(rev(q(1, 2)), q(5, 2));
  EXPECT_EQ(rev(q(3, 2)), q(3, 2));
  EXPECT_EQ(rev(q(5, 2)), q(1, 2));
}

TEST(Iet, LeftEndpointsGoToLeftEndpoints) {
  testing::Gen gen(21);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = static_cast<int>(gen.integer(2, 6));
    const Iet t = Iet::build(gen.positive(n), gen.irreducible(n));
    for (int i = 1; i <= n; ++i) {
      EXPECT_EQ(t(t.breakpoints()[static_cast<std::size_t>(i - 1)]),
                t.image_breakpoints()[static_cast<std::size_t>(t.permutation()(i) - 1)]);
    }
  }
}

TEST(Iet, MatchesDefinitionOracle) {
  testing::Gen gen(22);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(gen.integer(2, 7));
    const RVector l = gen.positive(n);
    const Perm p = gen.irreducible(n);
    const Iet t = Iet::build(l, p);
    for (int k = 0; k < 20; ++k) {
      const Rational x = gen.rational(0, t.total_length());
      EXPECT_EQ(t(x), testing::iet_oracle(l, p.map(), x));
    }
  }
}

TEST(Iet, IsABijectionOnTheGrid) {
  // translations of a partition: images of a fine grid are again that grid
  const RVector l = make_rvector({q(1, 4), q(1, 2), q(3, 4), q(1, 2)});
  const Iet t = Iet::build(l, Perm::from_bottom_row({4, 2, 1, 3}));
  std::set<Rational> images;
  for (int k = 0; k < 8; ++k) images.insert(t(q(k, 4)));
  EXPECT_EQ(images.size(), 8u);
  for (const auto& y : images) EXPECT_EQ(Rational(y * 4).get_den(), 1);
}

TEST(Iet, Errors) {
  EXPECT_THROW(Iet::build(make_rvector({1, 0}), Perm::from_bottom_row({2, 1})), DomainError);
  EXPECT_THROW(Iet::build(make_rvector({1, 2, 3}), Perm::from_bottom_row({2, 1})), DimensionError);
  const Iet t = Iet::build(make_rvector({1, 2}), Perm::from_bottom_row({2, 1}));
  EXPECT_THROW(t(3), DomainError);
  EXPECT_THROW(t(-1), DomainError);
}

TEST(FirstReturn, FullIntervalIsOneStep) {
  const Iet t = Iet::build(make_rvector({1, 2}), Perm::from_bottom_row({2, 1}));
  const auto r = first_return(t, t.total_length(), q(1, 2));
  EXPECT_EQ(r.image, t(q(1, 2)));
  EXPECT_EQ(r.return_time, 1u);
  const auto h = first_return(t, 2, 0);
  EXPECT_EQ(h.image, 1);
  EXPECT_EQ(h.return_time, 2u);
}

TEST(FirstReturn, TypeACutEqualsInducedExchange) {
  // lambda_n > lambda_{pi^-1(n)}: cut at alpha_{n-1}(lambda^pi) = |lambda| - lambda_{pi^-1 n}
  const RVector l = make_rvector({1, 2, 4});
  const Perm p = Perm::from_bottom_row({2, 3, 1});
  const Iet t = Iet::build(l, p);
  const Step st = step({l, p});
  ASSERT_EQ(st.move, Move::A);
  const Iet induced = Iet::build(st.state.lengths, st.state.perm);
  EXPECT_EQ(induced.total_length(), 6);
  testing::Gen gen(23);
  for (int k = 0; k < 200; ++k) {
    const Rational x = gen.rational(0, 6);
    EXPECT_EQ(first_return(t, 6, x).image, induced(x));
  }
}

TEST(FirstReturn, BreakpointAndCapErrors) {
  const Iet t = Iet::build(make_rvector({1, 2}), Perm::from_bottom_row({2, 1}));
  EXPECT_THROW(first_return(t, 2, 0, 1), IterationCapError);
  EXPECT_THROW(first_return(t, 4, 0), DomainError);
  // 0 -> 2 -> 1, and 1 is the interior breakpoint
  EXPECT_THROW(first_return(t, q(1, 2), 0), BreakpointError);
}

}  // namespace
}  // namespace rauzy
