#pragma once

// Arithmetic and dense linear algebra over a prime field F_m, m < 2^31.

#include <cstdint>
#include <optional>
#include <vector>

namespace glgu::modular {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;
using Matrix = std::vector<Vec>;  // row-major, rows of equal length

class Field {
 public:
  explicit Field(u64 m);

  u64 modulus() const { return m_; }
  u64 reduce(std::int64_t x) const;
  u64 add(u64 a, u64 b) const { return a + b >= m_ ? a + b - m_ : a + b; }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + m_ - b; }
  u64 neg(u64 a) const { return a == 0 ? 0 : m_ - a; }
  u64 mul(u64 a, u64 b) const { return a * b % m_; }
  u64 pow(u64 a, u64 e) const;
  u64 inv(u64 a) const;  // a != 0

  /// Least generator of F_m^x.
  u64 primitive_root() const;

  /// Reduced row echelon form in place; returns the pivot columns.
  std::vector<std::size_t> rref(Matrix& rows) const;
  /// Basis of the right kernel {x : M x = 0}, in RREF.
  Matrix kernel(const Matrix& M) const;
  /// Characteristic polynomial det(xI - M), coefficients from degree 0 upward.
  Vec charpoly(const Matrix& M) const;
  u64 eval(const Vec& poly, u64 x) const;
  /// All roots of a polynomial in F_m, ascending, by exhaustive evaluation.
  Vec roots(const Vec& poly) const;

 private:
  u64 m_;
};

/// Least prime m with m = 1 (mod n) and m > lower_bound.
u64 next_prime_congruent_one(u64 n, u64 lower_bound);

/// Least integer r >= 0 with r^2 >= n.
u64 ceil_sqrt(u64 n);

}  // namespace glgu::modular
