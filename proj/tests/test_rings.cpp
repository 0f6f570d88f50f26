#include <gtest/gtest.h>

#include <map>
#include <set>

#include "glgu/rings.hpp"

using namespace glgu;

namespace {

Ring Z9() { return Ring::make(Family::Mixed, 3, 1, 2, false); }

// Independent model of F_p[x]/(m)[t]/(t^l) on coefficient arrays.
struct PolyModel {
  unsigned p, f, ell;
  std::vector<unsigned> m;  // monic modulus, low first

  std::vector<unsigned> fq_mul(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const {
    std::vector<unsigned> r(2 * f, 0);
    for (unsigned i = 0; i < f; ++i)
      for (unsigned j = 0; j < f; ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    for (unsigned k = 2 * f - 1; k >= f; --k) {
      const unsigned c = r[k];
      for (unsigned j = 0; j <= f; ++j) r[k - f + j] = (r[k - f + j] + p * p - c * m[j] % p) % p;
    }
    r.resize(f);
    return r;
  }
  std::vector<unsigned> fq_of(Code c) const {
    std::vector<unsigned> v(f);
    for (auto& x : v) {
      x = c % p;
      c /= p;
    }
    return v;
  }
  Code code_of(const std::vector<unsigned>& v) const {
    Code c = 0;
    for (unsigned i = f; i-- > 0;) c = c * p + v[i];
    return c;
  }
  Code mul(Code a, Code b) const {
    unsigned q = 1;
    for (unsigned i = 0; i < f; ++i) q *= p;
    std::vector<std::vector<unsigned>> r(ell, std::vector<unsigned>(f, 0));
    std::vector<Code> da(ell), db(ell);
    for (unsigned k = 0; k < ell; ++k) {
      da[k] = a % q;
      a /= q;
      db[k] = b % q;
      b /= q;
    }
    for (unsigned i = 0; i < ell; ++i)
      for (unsigned j = 0; i + j < ell; ++j) {
        auto prod = fq_mul(fq_of(da[i]), fq_of(db[j]));
        for (unsigned s = 0; s < f; ++s) r[i + j][s] = (r[i + j][s] + prod[s]) % p;
      }
    Code out = 0;
    for (unsigned k = ell; k-- > 0;) out = out * q + code_of(r[k]);
    return out;
  }
};

}  // namespace

TEST(Rings, ConstructionAndSizes) {
  EXPECT_EQ(Z9().size(), 9U);
  const Ring F3 = Ring::make(Family::Mixed, 3, 1, 1, false);
  EXPECT_EQ(F3.residue(F3.descriptor().epsilon_sq), 2U);
  EXPECT_EQ(Ring::make(Family::Mixed, 3, 1, 2, true).size(), 81U);
  EXPECT_EQ(Ring::make(Family::Equal, 3, 2, 2, false).size(), 81U);
}

TEST(Rings, RejectsBadParameters) {
  EXPECT_THROW(Ring::make(Family::Mixed, 2, 1, 1, false), RingError);
  EXPECT_THROW(Ring::make(Family::Mixed, 9, 1, 1, false), RingError);
  EXPECT_THROW(Ring::make(Family::Mixed, 3, 2, 1, false), RingError);
  EXPECT_THROW(Ring::make(Family::Mixed, 3, 1, 0, false), RingError);
}

TEST(Rings, Z9Examples) {
  const Ring R = Z9();
  EXPECT_EQ(R.inv(2), 5U);
  EXPECT_EQ(R.valuation(6), 1U);
  EXPECT_EQ(R.valuation(0), 2U);
  EXPECT_EQ(R.project(7, 1), 1U);
  EXPECT_THROW(R.inv(3), RingError);
  EXPECT_THROW(R.project(1, 3), RingError);
  EXPECT_TRUE(R.is_square(4));
  EXPECT_EQ(R.sqrt(4), 2U);
  EXPECT_FALSE(R.sqrt(2).has_value());
}

TEST(Rings, MixedArithmeticMatchesIntegers) {
  for (unsigned p : {3U, 5U, 7U}) {
    for (unsigned ell : {1U, 2U, 3U}) {
      const Ring R = Ring::make(Family::Mixed, p, 1, ell, false);
      const unsigned n = static_cast<unsigned>(R.size());
      for (Code a = 0; a < n; ++a)
        for (Code b = 0; b < n; ++b) {
          ASSERT_EQ(R.add(a, b), (a + b) % n);
          ASSERT_EQ(R.mul(a, b), (a * b) % n);
        }
    }
  }
}

TEST(Rings, EqualArithmeticMatchesPolynomialModel) {
  const Ring R = Ring::make(Family::Equal, 3, 2, 2, false);
  // Least monic irreducible quadratic over F_3 in coefficient order is x^2 + 1.
  PolyModel model{3, 2, 2, {1, 0, 1}};
  for (Code a = 0; a < R.size(); ++a)
    for (Code b = 0; b < R.size(); ++b) ASSERT_EQ(R.mul(a, b), model.mul(a, b)) << a << " " << b;
  const Ring S = Ring::make(Family::Equal, 5, 1, 2, false);
  PolyModel m5{5, 1, 2, {0, 1}};
  for (Code a = 0; a < S.size(); ++a)
    for (Code b = 0; b < S.size(); ++b) ASSERT_EQ(S.mul(a, b), m5.mul(a, b));
}

TEST(Rings, UnitsAndValuationLaws) {
  for (Family fam : {Family::Mixed, Family::Equal}) {
    for (bool ext : {false, true}) {
      const Ring R = Ring::make(fam, 3, 1, 2, ext);
      const unsigned ell = R.ell();
      for (Code a = 0; a < R.size(); ++a) {
        if (R.is_unit(a)) {
          ASSERT_EQ(R.mul(a, R.inv(a)), R.one());
        }
        for (Code b = 0; b < R.size(); b += 7) {
          ASSERT_EQ(R.valuation(R.mul(a, b)), std::min(R.valuation(a) + R.valuation(b), ell));
        }
      }
    }
  }
}

TEST(Rings, ConjugationIsInvolutiveAutomorphism) {
  const Ring R = Ring::make(Family::Mixed, 3, 1, 2, true);
  EXPECT_EQ(R.conj(R.epsilon()), R.neg(R.epsilon()));
  for (Code z = 0; z < R.size(); ++z) {
    ASSERT_EQ(R.conj(R.conj(z)), z);
    for (Code w = 0; w < R.size(); w += 5) {
      ASSERT_EQ(R.conj(R.mul(z, w)), R.mul(R.conj(z), R.conj(w)));
      ASSERT_EQ(R.conj(R.add(z, w)), R.add(R.conj(z), R.conj(w)));
    }
  }
  EXPECT_THROW(Z9().conj(1), RingError);
}

TEST(Rings, NormOneKernel) {
  for (Family fam : {Family::Mixed, Family::Equal}) {
    for (unsigned ell : {1U, 2U}) {
      const Ring R = Ring::make(fam, 3, 1, ell, true);
      const std::uint64_t expected = (ell == 1 ? 1 : 3) * 3 + (ell == 1 ? 1 : 3);  // q^l + q^{l-1}
      EXPECT_EQ(R.norm_one_kernel().size(), expected);
      // Every unit fiber has the same size.
      std::map<Code, int> fibers;
      for (Code z : R.units()) fibers[R.norm(z)]++;
      EXPECT_EQ(fibers.size(), R.base().units().size());
      for (auto& [n, count] : fibers) EXPECT_EQ(static_cast<std::uint64_t>(count), expected);
    }
  }
  const Ring R = Ring::make(Family::Mixed, 3, 1, 2, true);
  EXPECT_EQ(R.norm_one_kernel().size(), 12U);
}

TEST(Rings, IsSquareMatchesExhaustiveSquaring) {
  for (unsigned p : {3U, 5U}) {
    for (unsigned ell : {1U, 2U}) {
      for (bool ext : {false, true}) {
        const Ring R = Ring::make(Family::Mixed, p, 1, ell, ext);
        std::set<Code> squares;
        for (Code u : R.units()) squares.insert(R.mul(u, u));
        for (Code a = 0; a < R.size(); ++a) {
          ASSERT_EQ(R.is_square(a), squares.count(a) == 1) << a;
          if (auto s = R.sqrt(a)) ASSERT_EQ(R.mul(*s, *s), a);
        }
      }
    }
  }
}

TEST(Rings, EpsilonSquareIsLeastNonsquareUnit) {
  for (unsigned p : {3U, 5U, 7U}) {
    const Ring R = Ring::make(Family::Mixed, p, 1, 2, false);
    const Code e = R.descriptor().epsilon_sq;
    EXPECT_FALSE(R.is_square(e));
    for (Code c = 1; c < e; ++c) EXPECT_TRUE(!R.is_unit(c) || R.is_square(c));
  }
}

TEST(Rings, SerreLiftThenProjectIsIdentity) {
  const Ring R1 = Ring::make(Family::Mixed, 3, 1, 1, true);
  for (Code z = 0; z < R1.size(); ++z) {
    RElem e(R1, z);
    EXPECT_EQ(e.serre_lift(3).project(1), e);
  }
  RElem eps(R1, R1.epsilon());
  EXPECT_EQ(eps.serre_lift(2).code(), R1.at_level(2).epsilon());
  EXPECT_EQ(RElem(R1, 0).serre_lift(2).code(), 0U);
}

TEST(Rings, RElemRejectsMixedRings) {
  RElem a(Z9(), 2);
  RElem b(Ring::make(Family::Mixed, 3, 1, 1, false), 2);
  EXPECT_THROW(a + b, RingError);
  EXPECT_EQ((a * a).code(), 4U);
  EXPECT_EQ(a.inv().code(), 5U);
}

TEST(Rings, ResidueTraceOnF9) {
  const Ring R = Ring::make(Family::Equal, 3, 2, 1, false);
  // Tr(1) = 2 in characteristic 3 for a degree-2 extension.
  EXPECT_EQ(R.residue_trace(1), 2U);
  int zero_trace = 0;
  for (Code a = 0; a < 9; ++a) zero_trace += R.residue_trace(a) == 0;
  EXPECT_EQ(zero_trace, 3);
}
