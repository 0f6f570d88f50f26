#pragma once

// 2x2 matrices over a truncated ring, stored as four ring codes in row-major
// order (a11, a12, a21, a22).

#include <array>
#include <cstdint>
#include <string>

#include "glgu/rings.hpp"

namespace glgu {

struct Mat2 {
  std::array<Code, 4> e{0, 0, 0, 0};

  Code a11() const { return e[0]; }
  Code a12() const { return e[1]; }
  Code a21() const { return e[2]; }
  Code a22() const { return e[3]; }

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

using MatKey = std::uint64_t;

namespace mat {

Mat2 identity(const Ring& R);
Mat2 scalar(const Ring& R, Code x);
Mat2 weyl(const Ring& R);  // W = [[0,1],[1,0]]
Mat2 make(Code a11, Code a12, Code a21, Code a22);

Mat2 add(const Ring& R, const Mat2& A, const Mat2& B);
Mat2 sub(const Ring& R, const Mat2& A, const Mat2& B);
Mat2 neg(const Ring& R, const Mat2& A);
Mat2 mul(const Ring& R, const Mat2& A, const Mat2& B);
Mat2 scale(const Ring& R, Code s, const Mat2& A);
Code det(const Ring& R, const Mat2& A);
Code tr(const Ring& R, const Mat2& A);
/// Adjugate inverse; throws RingError when det(A) is not a unit.
Mat2 inv(const Ring& R, const Mat2& A);
/// adj(A) = det(A) A^{-1}.
Mat2 adjugate(const Ring& R, const Mat2& A);
/// star([[a,b],[c,d]]) = [[d°,b°],[c°,a°]]; requires the extension ring.
Mat2 star(const Ring& R, const Mat2& A);
Mat2 conjugate(const Ring& R, const Mat2& g, const Mat2& A, const Mat2& g_inv);

/// Entrywise projection to at_level(level), and zero-extension lift back.
Mat2 project(const Ring& R, const Mat2& A, unsigned level);
Mat2 lift(const Ring& R, const Mat2& A, unsigned from_level);
Mat2 truncate(const Ring& R, const Mat2& A, unsigned digits);
Mat2 mul_pi_pow(const Ring& R, const Mat2& A, unsigned i);
Mat2 div_pi_pow(const Ring& R, const Mat2& A, unsigned i);

/// Least i with A in pi^i M_2(R) (l for the zero matrix).
unsigned valuation(const Ring& R, const Mat2& A);
bool is_scalar(const Mat2& A);
/// Non-scalar modulo pi.
bool is_regular(const Ring& R, const Mat2& A);

/// Injective key; the ordering of keys is lexicographic on (a11,a12,a21,a22).
MatKey key(const Ring& R, const Mat2& A);
Mat2 from_key(const Ring& R, MatKey k);

std::string to_string(const Ring& R, const Mat2& A);

}  // namespace mat
}  // namespace glgu
