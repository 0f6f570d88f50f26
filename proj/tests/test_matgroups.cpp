#include <gtest/gtest.h>

#include <random>

#include "glgu/group.hpp"
#include "glgu/kernels.hpp"

using namespace glgu;

namespace {

GroupSpec spec(GroupKind kind, unsigned p, unsigned ell, Family fam = Family::Mixed, unsigned f = 1) {
  return GroupSpec{kind, fam, p, f, ell};
}

// Brute-force order: scan every matrix over the coefficient ring.
std::uint64_t brute_order(GroupKind kind, const Ring& R) {
  std::uint64_t count = 0;
  const Code n = static_cast<Code>(R.size());
  for (Code a = 0; a < n; ++a)
    for (Code b = 0; b < n; ++b)
      for (Code c = 0; c < n; ++c)
        for (Code d = 0; d < n; ++d) count += is_member(kind, R, mat::make(a, b, c, d));
  return count;
}

}  // namespace

TEST(MatOps, StarExamples) {
  const Ring R = Ring::make(Family::Mixed, 3, 1, 2, true);
  const Mat2 I = mat::identity(R);
  const Mat2 W = mat::weyl(R);
  EXPECT_EQ(mat::star(R, I), I);
  EXPECT_EQ(mat::mul(R, mat::star(R, W), W), I);
  for (Code x : R.units()) {
    const Mat2 D = mat::make(x, 0, 0, R.conj(R.inv(x)));
    ASSERT_EQ(mat::mul(R, mat::star(R, D), D), I);
  }
  EXPECT_THROW(mat::star(Ring::make(Family::Mixed, 3, 1, 2, false), I), RingError);
}

TEST(MatOps, StarIsAntiAutomorphismAndInverseWorks) {
  const Ring R = Ring::make(Family::Mixed, 3, 1, 2, true);
  std::mt19937 rng(7);
  std::uniform_int_distribution<Code> pick(0, static_cast<Code>(R.size() - 1));
  for (int t = 0; t < 2000; ++t) {
    const Mat2 A = mat::make(pick(rng), pick(rng), pick(rng), pick(rng));
    const Mat2 B = mat::make(pick(rng), pick(rng), pick(rng), pick(rng));
    ASSERT_EQ(mat::star(R, mat::mul(R, A, B)), mat::mul(R, mat::star(R, B), mat::star(R, A)));
    ASSERT_EQ(mat::star(R, mat::star(R, A)), A);
    if (R.is_unit(mat::det(R, A))) {
      ASSERT_EQ(mat::mul(R, mat::inv(R, A), A), mat::identity(R));
    } else {
      ASSERT_THROW(mat::inv(R, A), RingError);
    }
  }
}

TEST(MatOps, KeysAreOrderPreservingAndInjective) {
  const Ring R = Ring::make(Family::Mixed, 3, 1, 1, true);
  const Mat2 A = mat::make(1, 2, 3, 4);
  EXPECT_EQ(mat::from_key(R, mat::key(R, A)), A);
  EXPECT_LT(mat::key(R, mat::make(0, 8, 8, 8)), mat::key(R, mat::make(1, 0, 0, 0)));
}

TEST(Groups, OrdersMatchClosedForm) {
  EXPECT_EQ(order_formula(GroupKind::GL2, 3, 1), 48U);
  EXPECT_EQ(order_formula(GroupKind::GU2, 3, 1), 96U);
  EXPECT_EQ(order_formula(GroupKind::GU2, 3, 2), 7776U);
  EXPECT_EQ(order_formula(GroupKind::GL2, 3, 2), 3888U);
  for (auto kind : {GroupKind::GL2, GroupKind::GU2}) {
    for (auto [p, ell] : {std::pair{3U, 1U}, {3U, 2U}, {5U, 1U}}) {
      const Group G = Group::enumerate(spec(kind, p, ell));
      EXPECT_EQ(G.order(), order_formula(kind, p, ell));
    }
  }
}

TEST(Groups, ColumnFirstScanMatchesFullScan) {
  for (auto kind : {GroupKind::GL2, GroupKind::GU2}) {
    for (unsigned p : {3U, 5U}) {
      const Ring R = group_ring(spec(kind, p, 1));
      EXPECT_EQ(brute_order(kind, R), order_formula(kind, p, 1));
    }
  }
  const Ring R = group_ring(spec(GroupKind::GL2, 3, 2));
  EXPECT_EQ(brute_order(GroupKind::GL2, R), 3888U);
}

TEST(Groups, EqualCharacteristicAndResidueDegreeTwo) {
  EXPECT_EQ(Group::enumerate(spec(GroupKind::GU2, 3, 2, Family::Equal)).order(), 7776U);
  EXPECT_EQ(Group::enumerate(spec(GroupKind::GL2, 3, 1, Family::Equal, 2)).order(),
            order_formula(GroupKind::GL2, 9, 1));
}

TEST(Groups, SerialAndParallelEnumerationAgree) {
  for (auto kind : {GroupKind::GL2, GroupKind::GU2}) {
    const Ring R = group_ring(spec(kind, 3, 2));
    EXPECT_EQ(kernels::enumerate_keys(kind, R, Exec::Serial), kernels::enumerate_keys(kind, R, Exec::Parallel));
  }
}

TEST(Groups, BudgetRefusalNamesRequirement) {
  try {
    Group::enumerate(spec(GroupKind::GU2, 3, 2), 1000);
    FAIL() << "expected refusal";
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.required(), 7776U);
    EXPECT_NE(std::string(e.what()).find("7776"), std::string::npos);
  }
}

TEST(Groups, MembershipExamples) {
  const Ring R = group_ring(spec(GroupKind::GU2, 3, 1));
  EXPECT_TRUE(is_member(GroupKind::GU2, R, mat::make(R.one(), 0, R.epsilon(), R.one())));
  EXPECT_TRUE(is_member(GroupKind::GU2, R, mat::weyl(R)));
  EXPECT_FALSE(is_member(GroupKind::GU2, R, mat::make(R.one(), R.one(), 0, R.one())));
}

TEST(Groups, ClosureIdentityAndGenerators) {
  const Group G = Group::enumerate(spec(GroupKind::GU2, 3, 2));
  const Ring& R = G.ring();
  EXPECT_EQ(G.element(G.identity()), mat::identity(R));
  std::mt19937 rng(11);
  std::uniform_int_distribution<Group::Index> pick(0, static_cast<Group::Index>(G.order() - 1));
  for (int t = 0; t < 10000; ++t) {
    const Group::Index x = pick(rng), y = pick(rng);
    ASSERT_TRUE(G.index_of(mat::mul(R, G.element(x), G.element(y))).has_value());
    ASSERT_EQ(G.mul(x, G.inverse(x)), G.identity());
  }
  // The generators really generate: closure by BFS reaches every element.
  std::vector<char> seen(G.order(), 0);
  std::vector<Group::Index> queue{G.identity()};
  seen[G.identity()] = 1;
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (auto g : G.generators()) {
      auto y = G.mul(queue[h], g);
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  EXPECT_EQ(queue.size(), G.order());
}

TEST(Groups, DeterminantLandsInNormOne) {
  for (unsigned ell : {1U, 2U}) {
    const Group G = Group::enumerate(spec(GroupKind::GU2, 3, ell));
    const Ring& R = G.ring();
    for (const Mat2& A : G.elements()) ASSERT_EQ(R.norm(mat::det(R, A)), R.base().one());
  }
}

TEST(Lie, SizesAndMembership) {
  const Ring F3 = Ring::make(Family::Mixed, 3, 1, 1, false);
  EXPECT_EQ(lie_algebra(GroupKind::GL2, F3).size(), 81U);
  const Ring O1 = Ring::make(Family::Mixed, 3, 1, 1, true);
  const auto gu = lie_algebra(GroupKind::GU2, O1);
  EXPECT_EQ(gu.size(), 81U);
  // Filtered count over all of M_2(O_1) agrees.
  std::uint64_t filtered = 0;
  const Code n = static_cast<Code>(O1.size());
  for (Code a = 0; a < n; ++a)
    for (Code b = 0; b < n; ++b)
      for (Code c = 0; c < n; ++c)
        for (Code d = 0; d < n; ++d) filtered += is_lie_member(GroupKind::GU2, O1, mat::make(a, b, c, d));
  EXPECT_EQ(filtered, 81U);
  for (Code s = 0; s < O1.base_size(); ++s) {
    const Mat2 A = mat::make(0, O1.mul(O1.epsilon(), O1.embed(s)), O1.epsilon(), 0);
    EXPECT_TRUE(is_lie_member(GroupKind::GU2, O1, A));
  }
}

TEST(Lie, CongruenceSubgroupsAreNormalAbelianOfAlgebraSize) {
  for (auto kind : {GroupKind::GL2, GroupKind::GU2}) {
    const Group G = Group::enumerate(spec(kind, 3, 2));
    const auto K = G.congruence_subgroup(1);
    EXPECT_EQ(K.size(), lie_algebra_size(kind, 3, 1));
    std::vector<char> in_k(G.order(), 0);
    for (auto k : K) in_k[k] = 1;
    for (auto g : G.generators())
      for (auto k : K) ASSERT_TRUE(in_k[G.conjugate(g, k)]);
    for (auto x : K)
      for (auto y : K) ASSERT_EQ(G.mul(x, y), G.mul(y, x));
  }
}
