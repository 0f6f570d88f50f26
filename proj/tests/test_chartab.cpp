#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "glgu/census.hpp"
#include "glgu/chartab.hpp"
#include "glgu/modular.hpp"

using namespace glgu;

namespace {

struct Tabled {
  Group G;
  ClassPartition P;
  ClassData D;
  CharTable T;

  Tabled(GroupKind kind, unsigned ell)
      : G(Group::enumerate(GroupSpec{kind, Family::Mixed, 3, 1, ell})),
        P(conjugacy_partition(G)),
        D(class_structure(G, P)),
        T(character_table(D)) {
    fs_indicators(T, D);
  }
};

std::uint64_t sum_sq(const CharTable& T) {
  std::uint64_t s = 0;
  for (auto d : T.degrees) s += d * d;
  return s;
}

// <f, chi> over F_m for a class function f given per class as an integer.
std::uint64_t inner(const CharTable& T, const ClassData& D, const std::vector<std::int64_t>& f, std::size_t chi) {
  const modular::Field F(T.modulus);
  std::uint64_t s = 0;
  for (std::size_t c = 0; c < D.count(); ++c)
    s = F.add(s, F.mul(F.mul(D.sizes[c] % T.modulus, F.reduce(f[c])), T.values[chi][D.inverse_class[c]]));
  return F.mul(s, F.inv(D.group_order % T.modulus));
}

}  // namespace

TEST(Modular, CharpolyMatchesDeterminantAtSamplePoints) {
  const modular::Field F(101);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + trial % 6;
    modular::Matrix M(n, modular::Vec(n));
    for (auto& row : M)
      for (auto& x : row) x = rng() % 101;
    const auto poly = F.charpoly(M);
    ASSERT_EQ(poly.size(), n + 1);
    EXPECT_EQ(poly.back(), 1U);
    for (std::uint64_t x : {0ULL, 1ULL, 5ULL, 77ULL}) {
      // Oracle: det(xI - M) by Gaussian elimination.
      modular::Matrix A = M;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) A[i][j] = F.sub(i == j ? x : 0, M[i][j]);
      std::uint64_t det = 1;
      for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && A[p][c] == 0) ++p;
        if (p == n) {
          det = 0;
          break;
        }
        if (p != c) {
          std::swap(A[p], A[c]);
          det = F.neg(det);
        }
        det = F.mul(det, A[c][c]);
        const auto s = F.inv(A[c][c]);
        for (std::size_t r = c + 1; r < n; ++r) {
          const auto f = F.mul(A[r][c], s);
          for (std::size_t j = c; j < n; ++j) A[r][j] = F.sub(A[r][j], F.mul(f, A[c][j]));
        }
      }
      EXPECT_EQ(F.eval(poly, x), det);
    }
  }
}

TEST(Modular, KernelAndPrimes) {
  const modular::Field F(13);
  const modular::Matrix M{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  const auto K = F.kernel(M);
  ASSERT_EQ(K.size(), 1U);
  for (const auto& row : M) {
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < 3; ++j) s = F.add(s, F.mul(row[j], K[0][j]));
    EXPECT_EQ(s, 0U);
  }
  EXPECT_EQ(modular::next_prime_congruent_one(24, 2 * modular::ceil_sqrt(48)), 73U);
  EXPECT_EQ(modular::next_prime_congruent_one(10, 10), 11U);
  EXPECT_EQ(F.primitive_root(), 2U);
}

TEST(ClassStructure, MapsAndCoefficientRecount) {
  const Group G = Group::enumerate(GroupSpec{GroupKind::GU2, Family::Mixed, 3, 1, 1});
  const auto P = conjugacy_partition(G);
  const auto D = class_structure(G, P);
  const auto W = G.index_of_checked(mat::weyl(G.ring()));
  EXPECT_EQ(D.inverse_class[D.identity_class], D.identity_class);
  EXPECT_EQ(D.square_class[P.class_of[W]], D.identity_class);
  for (std::size_t c = 0; c < D.count(); ++c) {
    EXPECT_EQ(D.inverse_class[D.inverse_class[c]], c);
    EXPECT_EQ(D.power_class[c][2 % D.rep_order[c]], D.square_class[c]);
    EXPECT_EQ(D.exponent % D.rep_order[c], 0U);
  }
  // Oracle: direct double loop over C_i x C_j.
  std::mt19937_64 rng(1);
  const std::size_t k = D.count();
  for (int t = 0; t < 50; ++t) {
    const std::size_t i = rng() % k, j = rng() % k, c = rng() % k;
    std::uint32_t count = 0;
    for (auto x : P.members[i])
      for (auto y : P.members[j]) count += G.mul(x, y) == P.reps[c];
    EXPECT_EQ(D.coefficient(i, j, c), count) << i << " " << j << " " << c;
  }
  const auto serial = class_structure(G, P, Exec::Serial);
  EXPECT_EQ(serial.coefficients, D.coefficients);
}

TEST(ClassStructure, BudgetRefusal) {
  const Group G = Group::enumerate(GroupSpec{GroupKind::GL2, Family::Mixed, 3, 1, 1});
  EXPECT_THROW(class_structure(G, conjugacy_partition(G), Exec::Serial, 100), BudgetExceeded);
}

TEST(CharacterTable, GL2F3) {
  const Tabled t(GroupKind::GL2, 1);
  EXPECT_EQ(t.T.count(), 8U);
  EXPECT_EQ(t.T.count(), t.P.count());
  EXPECT_EQ(sum_sq(t.T), 48U);
  std::vector<std::uint64_t> degs = t.T.degrees;
  EXPECT_EQ(degs, (std::vector<std::uint64_t>{1, 1, 2, 2, 2, 3, 3, 4}));
  EXPECT_TRUE(std::all_of(t.T.values[0].begin(), t.T.values[0].end(), [](auto v) { return v == 1; }));
  EXPECT_EQ(t.T.fs[0], 1);
  EXPECT_EQ(self_dual_census(t.T).fs_sum, 14);
  EXPECT_FALSE(orthogonality_failure(t.T, t.D).has_value());
  EXPECT_EQ(t.T.modulus % t.D.exponent, 1U);
  EXPECT_GT(t.T.modulus, 2 * modular::ceil_sqrt(48));
}

TEST(CharacterTable, PermutationCharacterOnProjectiveLine) {
  // Oracle: pi(g) = number of lines of F_3^2 fixed by g, and pi - 1 is irreducible.
  const Tabled t(GroupKind::GL2, 1);
  const Ring& R = t.G.ring();
  const std::vector<std::pair<Code, Code>> lines{{0, 1}, {1, 0}, {1, 1}, {1, 2}};
  std::vector<std::int64_t> pi(t.D.count());
  for (std::size_t c = 0; c < t.D.count(); ++c) {
    const Mat2& g = t.G.element(t.D.reps[c]);
    for (auto [x, y] : lines) {
      const Code gx = R.add(R.mul(g.e[0], x), R.mul(g.e[1], y));
      const Code gy = R.add(R.mul(g.e[2], x), R.mul(g.e[3], y));
      pi[c] += R.sub(R.mul(gx, y), R.mul(gy, x)) == 0;
    }
  }
  std::uint64_t one_count = 0, total_deg = 0;
  for (std::size_t x = 0; x < t.T.count(); ++x) {
    const auto m = inner(t.T, t.D, pi, x);
    ASSERT_LE(m, 1U);
    one_count += m;
    total_deg += m * t.T.degrees[x];
  }
  EXPECT_EQ(one_count, 2U);
  EXPECT_EQ(total_deg, 4U);
}

TEST(CharacterTable, SeedAndRerunIndependence) {
  const Group G = Group::enumerate(GroupSpec{GroupKind::GU2, Family::Mixed, 3, 1, 1});
  const auto D = class_structure(G, conjugacy_partition(G));
  const auto a = character_table(D);
  const auto b = character_table(D);
  const auto c = character_table(D, 12345);
  EXPECT_EQ(a.values, b.values);
  EXPECT_EQ(a.values, c.values);
  EXPECT_EQ(a.degrees, c.degrees);
}

TEST(CharacterTable, ComplexLifts) {
  const Tabled t(GroupKind::GU2, 1);
  for (std::size_t x = 0; x < t.T.count(); ++x)
    for (std::size_t c = 0; c < t.D.count(); ++c) {
      const auto mult = eigenvalue_multiplicities(t.T, t.D, x, c);
      std::uint64_t total = 0;
      for (auto m : mult) total += m;
      EXPECT_EQ(total, t.T.degrees[x]);
      const auto v = complex_value(t.T, t.D, x, c);
      const auto w = complex_value(t.T, t.D, x, t.D.inverse_class[c]);
      EXPECT_NEAR(v.real(), w.real(), 1e-9);
      EXPECT_NEAR(v.imag(), -w.imag(), 1e-9);
      if (t.T.real_valued[x]) EXPECT_NEAR(v.imag(), 0.0, 1e-9);
      if (c == t.D.identity_class) EXPECT_NEAR(v.real(), static_cast<double>(t.T.degrees[x]), 1e-9);
    }
}

TEST(CharacterTable, GU2LevelOne) {
  const Tabled t(GroupKind::GU2, 1);
  EXPECT_EQ(sum_sq(t.T), 96U);
  const auto s = self_dual_census(t.T);
  EXPECT_EQ(s.orthogonal_dim, 10U);
  EXPECT_EQ(s.symplectic_dim, 2U);
  EXPECT_EQ(s.fs_sum, 8);
  EXPECT_TRUE(std::any_of(t.T.fs.begin(), t.T.fs.end(), [](int v) { return v == -1; }));
}

TEST(CharacterTable, LevelTwoBothKinds) {
  for (auto kind : {GroupKind::GL2, GroupKind::GU2}) {
    Tabled t(kind, 2);
    const auto sweep = reality_sweep(t.G, t.P);
    EXPECT_EQ(t.T.count(), t.P.count());
    EXPECT_EQ(sum_sq(t.T), t.G.order());
    EXPECT_FALSE(orthogonality_failure(t.T, t.D).has_value());
    const auto s = self_dual_census(t.T);
    // Oracles: brute-force involution count and real class count.
    std::int64_t invols = 0;
    for (Group::Index x = 0; x < t.G.order(); ++x) invols += t.G.mul(x, x) == t.G.identity();
    EXPECT_EQ(s.fs_sum, invols);
    std::uint64_t real_classes = 0;
    for (auto r : t.P.reps) real_classes += sweep.real[r] != 0;
    EXPECT_EQ(s.real_characters, real_classes);
    EXPECT_EQ(s.real_characters, 18U);
    for (std::size_t x = 0; x < t.T.count(); ++x) EXPECT_EQ(t.T.real_valued[x] != 0, t.T.fs[x] != 0);

    restriction_typing(t.T, t.D, t.G);
    EXPECT_EQ(t.T.types[0], OrbitType::nreg);
    if (kind == GroupKind::GL2) {
      for (std::size_t x = 0; x < t.T.count(); ++x) EXPECT_EQ(t.T.real_valued[x] != 0, t.T.fs[x] == 1);
      EXPECT_EQ(s.symplectic_dim, 0U);
      for (std::uint64_t d : {12U, 8U, 6U})
        EXPECT_NE(std::find(t.T.degrees.begin(), t.T.degrees.end(), d), t.T.degrees.end());
    } else {
      EXPECT_EQ(s.orthogonal_dim, 82U);
      EXPECT_EQ(s.symplectic_dim, 26U);
      bool regular_symplectic = false;
      for (std::size_t x = 0; x < t.T.count(); ++x)
        regular_symplectic = regular_symplectic || (t.T.fs[x] == -1 && *t.T.types[x] != OrbitType::nreg);
      EXPECT_TRUE(regular_symplectic);
    }
  }
}

TEST(Restriction, CliffordCountsAndTypes) {
  for (auto kind : {GroupKind::GL2, GroupKind::GU2}) {
    Tabled t(kind, 2);
    const Group G1 = Group::enumerate(GroupSpec{kind, Family::Mixed, 3, 1, 1});
    const auto orbits = lie_orbits(G1);
    const auto res = restrict_to_congruence(t.T, t.D, t.G, orbits, 1);
    const std::uint64_t index = t.G.order() / orbits.elements.size();
    // sum_chi deg(chi) <chi|_K, psi_A> = [G : K] for every A.
    for (std::size_t a = 0; a < orbits.elements.size(); ++a) {
      std::uint64_t s = 0;
      for (std::size_t x = 0; x < t.T.count(); ++x) s += t.T.degrees[x] * res[x].multiplicity[a];
      EXPECT_EQ(s, index);
    }
    // Non-regular characters: one per (scalar A, character of G(F_q)).
    std::uint64_t scalars = 0;
    for (const auto& A : orbits.elements) scalars += mat::is_scalar(A);
    const auto P1 = conjugacy_partition(G1);
    std::uint64_t nreg = 0;
    for (const auto& r : res) nreg += r.type == OrbitType::nreg;
    EXPECT_EQ(nreg, scalars * P1.count());
    // Characters trivial on K^1 are nreg; ss orbits contain a diagonal matrix.
    const std::size_t zero = orbits.index_of(Mat2{});
    for (std::size_t x = 0; x < t.T.count(); ++x) {
      if (res[x].multiplicity[zero] == t.T.degrees[x]) EXPECT_EQ(res[x].type, OrbitType::nreg);
      if (res[x].type == OrbitType::ss) {
        bool diag = false;
        for (std::size_t a = 0; a < orbits.elements.size(); ++a)
          if (orbits.orbit_of[a] == res[x].orbit) diag = diag || (orbits.elements[a].e[1] == 0 && orbits.elements[a].e[2] == 0);
        EXPECT_TRUE(diag);
      }
    }
  }
}

TEST(Centralizer, ClosedParametrizationMatchesGroupScan) {
  for (auto kind : {GroupKind::GL2, GroupKind::GU2}) {
    const Group G = Group::enumerate(GroupSpec{kind, Family::Mixed, 3, 1, 2});
    const Ring& R = G.ring();
    const Group G1 = Group::enumerate(GroupSpec{kind, Family::Mixed, 3, 1, 1});
    std::map<OrbitType, std::uint64_t> za_index;
    std::set<OrbitType> seen;
    for (const auto& A : lie_algebra(kind, R)) {
      if (!mat::is_regular(R, A)) continue;
      const OrbitType type = lie_type(kind, R, A);
      if (!seen.insert(type).second) continue;
      const auto rep = centralizer_and_za(kind, R, A);
      // Oracle: count commuting group elements.
      std::uint64_t brute = 0;
      for (const auto& g : G.elements()) brute += mat::mul(R, g, A) == mat::mul(R, A, g);
      EXPECT_EQ(rep.centralizer_order, brute) << to_string(kind) << " " << to_string(type);
      // Oracle: determinants of the level-one centralizer by group scan.
      const Ring& R1 = G1.ring();
      const Mat2 A1 = mat::project(R, A, 1);
      std::set<Code> dets;
      for (const auto& g : G1.elements())
        if (mat::mul(R1, g, A1) == mat::mul(R1, A1, g)) dets.insert(mat::det(R1, g));
      std::uint64_t za = 0;
      const auto center = central_scalars(kind, R);
      for (Code z : center) {
        EXPECT_TRUE(G.index_of(mat::scalar(R, z)).has_value());
        za += dets.count(R.project(z, 1));
      }
      EXPECT_EQ(rep.za_order, za);
      EXPECT_EQ(rep.center_order, center.size());
      za_index[type] = rep.za_index;
    }
    EXPECT_EQ(seen.size(), 3U);
    EXPECT_EQ(za_index[OrbitType::ss], 1U);
    EXPECT_EQ(za_index[OrbitType::sns], 2U);
    EXPECT_EQ(za_index[OrbitType::cus], 1U);
  }
}

TEST(Centralizer, RejectsNonRegular) {
  const Ring R = group_ring(GroupSpec{GroupKind::GL2, Family::Mixed, 3, 1, 2});
  EXPECT_THROW(centralizer_and_za(GroupKind::GL2, R, mat::scalar(R, R.one())), std::invalid_argument);
}

TEST(Tangibility, LevelTwoBothKinds) {
  EXPECT_EQ(tangible_formula(3, 2), (std::array<std::uint64_t, 3>{2, 6, 4}));
  EXPECT_EQ(tangible_formula(5, 3), (std::array<std::uint64_t, 3>{40, 50, 60}));
  for (auto kind : {GroupKind::GL2, GroupKind::GU2}) {
    Tabled t(kind, 2);
    restriction_typing(t.T, t.D, t.G);
    const auto census = tangibility_census(t.T, t.D, t.G);
    EXPECT_EQ(census.tangible_by_type, tangible_formula(3, 2));
    EXPECT_EQ(census.nonregular_self_dual, 6U);
    EXPECT_EQ(census.nonregular_self_dual_pulled_back, 6U);
    EXPECT_TRUE(census.mismatches.empty());
    std::uint64_t regular = 0;
    for (const auto& ty : t.T.types) regular += *ty != OrbitType::nreg;
    EXPECT_EQ(census.records.size(), regular);

    // T1 and T2 do not depend on the chosen member of the orbit.
    const Group G1 = Group::enumerate(GroupSpec{kind, Family::Mixed, 3, 1, 1});
    const Ring& R1 = G1.ring();
    const auto orbits = lie_orbits(G1);
    for (const auto& rec : census.records) {
      const auto o = orbits.orbit_of[orbits.index_of(rec.orbit_datum)];
      for (std::size_t a = 0; a < orbits.elements.size(); ++a) {
        if (orbits.orbit_of[a] != o) continue;
        const Mat2& A = orbits.elements[a];
        bool t1 = false;
        for (Group::Index g = 0; g < G1.order(); ++g)
          t1 = t1 || mat::add(R1, A, mat::conjugate(R1, G1.element(g), A, G1.element(G1.inverse(g)))) == Mat2{};
        EXPECT_EQ(t1, rec.t1);
        EXPECT_EQ(za_scalars(kind, t.G.ring(), A).size(), za_scalars(kind, t.G.ring(), rec.orbit_datum).size());
      }
    }
  }
}

TEST(Tangibility, RejectsOtherLevels) {
  Tabled t(GroupKind::GL2, 1);
  EXPECT_THROW(tangibility_census(t.T, t.D, t.G), std::invalid_argument);
  EXPECT_THROW(restriction_typing(t.T, t.D, t.G), std::invalid_argument);
}
