#include "glgu/matrix.hpp"

#include <algorithm>

namespace glgu::mat {

Mat2 make(Code a11, Code a12, Code a21, Code a22) { return Mat2{{a11, a12, a21, a22}}; }

Mat2 identity(const Ring& R) { return scalar(R, R.one()); }

Mat2 scalar(const Ring&, Code x) { return make(x, 0, 0, x); }

Mat2 weyl(const Ring& R) { return make(0, R.one(), R.one(), 0); }

Mat2 add(const Ring& R, const Mat2& A, const Mat2& B) {
  Mat2 C;
  for (int k = 0; k < 4; ++k) C.e[k] = R.add(A.e[k], B.e[k]);
  return C;
}

Mat2 sub(const Ring& R, const Mat2& A, const Mat2& B) {
  Mat2 C;
  for (int k = 0; k < 4; ++k) C.e[k] = R.sub(A.e[k], B.e[k]);
  return C;
}

Mat2 neg(const Ring& R, const Mat2& A) {
  Mat2 C;
  for (int k = 0; k < 4; ++k) C.e[k] = R.neg(A.e[k]);
  return C;
}

Mat2 mul(const Ring& R, const Mat2& A, const Mat2& B) {
  return make(R.add(R.mul(A.e[0], B.e[0]), R.mul(A.e[1], B.e[2])),
              R.add(R.mul(A.e[0], B.e[1]), R.mul(A.e[1], B.e[3])),
              R.add(R.mul(A.e[2], B.e[0]), R.mul(A.e[3], B.e[2])),
              R.add(R.mul(A.e[2], B.e[1]), R.mul(A.e[3], B.e[3])));
}

Mat2 scale(const Ring& R, Code s, const Mat2& A) {
  Mat2 C;
  for (int k = 0; k < 4; ++k) C.e[k] = R.mul(s, A.e[k]);
  return C;
}

Code det(const Ring& R, const Mat2& A) {
  return R.sub(R.mul(A.e[0], A.e[3]), R.mul(A.e[1], A.e[2]));
}

Code tr(const Ring& R, const Mat2& A) { return R.add(A.e[0], A.e[3]); }

Mat2 adjugate(const Ring& R, const Mat2& A) {
  return make(A.e[3], R.neg(A.e[1]), R.neg(A.e[2]), A.e[0]);
}

Mat2 inv(const Ring& R, const Mat2& A) {
  const auto d = R.try_inv(det(R, A));
  if (!d) throw RingError("matrix with non-unit determinant is not invertible");
  return scale(R, *d, adjugate(R, A));
}

Mat2 star(const Ring& R, const Mat2& A) {
  return make(R.conj(A.e[3]), R.conj(A.e[1]), R.conj(A.e[2]), R.conj(A.e[0]));
}

Mat2 conjugate(const Ring& R, const Mat2& g, const Mat2& A, const Mat2& g_inv) {
  return mul(R, mul(R, g, A), g_inv);
}

Mat2 project(const Ring& R, const Mat2& A, unsigned level) {
  Mat2 C;
  for (int k = 0; k < 4; ++k) C.e[k] = R.project(A.e[k], level);
  return C;
}

Mat2 lift(const Ring& R, const Mat2& A, unsigned from_level) {
  Mat2 C;
  for (int k = 0; k < 4; ++k) C.e[k] = R.lift(A.e[k], from_level);
  return C;
}

Mat2 truncate(const Ring& R, const Mat2& A, unsigned digits) {
  Mat2 C;
  for (int k = 0; k < 4; ++k) C.e[k] = R.truncate(A.e[k], digits);
  return C;
}

Mat2 mul_pi_pow(const Ring& R, const Mat2& A, unsigned i) {
  Mat2 C;
  for (int k = 0; k < 4; ++k) C.e[k] = R.mul_pi_pow(A.e[k], i);
  return C;
}

Mat2 div_pi_pow(const Ring& R, const Mat2& A, unsigned i) {
  Mat2 C;
  for (int k = 0; k < 4; ++k) C.e[k] = R.div_pi_pow(A.e[k], i);
  return C;
}

unsigned valuation(const Ring& R, const Mat2& A) {
  unsigned v = R.ell();
  for (Code c : A.e) v = std::min(v, R.valuation(c));
  return v;
}

bool is_scalar(const Mat2& A) { return A.e[1] == 0 && A.e[2] == 0 && A.e[0] == A.e[3]; }

bool is_regular(const Ring& R, const Mat2& A) {
  return !is_scalar(project(R, A, 1));
}

MatKey key(const Ring& R, const Mat2& A) {
  const MatKey n = R.size();
  return ((MatKey{A.e[0]} * n + A.e[1]) * n + A.e[2]) * n + A.e[3];
}

Mat2 from_key(const Ring& R, MatKey k) {
  const MatKey n = R.size();
  Mat2 A;
  for (int i = 3; i >= 0; --i) {
    A.e[i] = static_cast<Code>(k % n);
    k /= n;
  }
  return A;
}

std::string to_string(const Ring& R, const Mat2& A) {
  return "[[" + R.to_string(A.e[0]) + "," + R.to_string(A.e[1]) + "],[" + R.to_string(A.e[2]) +
         "," + R.to_string(A.e[3]) + "]]";
}

}  // namespace glgu::mat
