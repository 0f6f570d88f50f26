#include "glgu/kernels.hpp"

#include <algorithm>

namespace glgu::kernels {

namespace {

// Keys of members whose first entry (GL2) or first column (GU2) is `slot`.
void gl2_slot(const Ring& R, Code a, std::vector<MatKey>& out) {
  const Code n = static_cast<Code>(R.size());
  for (Code b = 0; b < n; ++b)
    for (Code c = 0; c < n; ++c) {
      const Code bc = R.mul(b, c);
      for (Code d = 0; d < n; ++d) {
        const Mat2 A = mat::make(a, b, c, d);
        if (R.is_unit(R.sub(R.mul(a, d), bc))) out.push_back(mat::key(R, A));
      }
    }
}

// Column-first GU2 scan: (a, c) must satisfy c°a + a°c = 0 and be unimodular;
// the second column is then fixed by one free entry via c°b + a°d = 1.
void gu2_slot(const Ring& R, Code a, std::vector<MatKey>& out) {
  const Code n = static_cast<Code>(R.size());
  const Code one = R.one();
  const Code ac = R.conj(a);
  for (Code c = 0; c < n; ++c) {
    const Code cc = R.conj(c);
    if (R.add(R.mul(cc, a), R.mul(ac, c)) != 0) continue;
    if (R.is_unit(a)) {
      const Code ac_inv = R.inv(ac);
      for (Code b = 0; b < n; ++b) {
        const Code d = R.mul(ac_inv, R.sub(one, R.mul(cc, b)));
        const Mat2 A = mat::make(a, b, c, d);
        if (is_member(GroupKind::GU2, R, A)) out.push_back(mat::key(R, A));
      }
    } else if (R.is_unit(c)) {
      const Code cc_inv = R.inv(cc);
      for (Code d = 0; d < n; ++d) {
        const Code b = R.mul(cc_inv, R.sub(one, R.mul(ac, d)));
        const Mat2 A = mat::make(a, b, c, d);
        if (is_member(GroupKind::GU2, R, A)) out.push_back(mat::key(R, A));
      }
    }
  }
}

}  // namespace

std::vector<MatKey> enumerate_keys(GroupKind kind, const Ring& R, Exec exec) {
  const Code n = static_cast<Code>(R.size());
  auto slot = kind == GroupKind::GL2 ? gl2_slot : gu2_slot;
  std::vector<std::vector<MatKey>> parts(n);
  if (exec == Exec::Serial) {
    for (Code a = 0; a < n; ++a) slot(R, a, parts[a]);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (Code a = 0; a < n; ++a) slot(R, a, parts[a]);
  }
  // Slots are disjoint and increasing in the leading entry, so concatenation
  // in slot order is already canonical once each slot is sorted.
  std::vector<MatKey> keys;
  for (auto& part : parts) {
    std::sort(part.begin(), part.end());
    keys.insert(keys.end(), part.begin(), part.end());
  }
  return keys;
}

std::vector<Index> conjugation_permutation(const Group& G, Index g, Exec exec) {
  const auto n = static_cast<std::int64_t>(G.order());
  std::vector<Index> perm(G.order());
  const Ring& R = G.ring();
  const Mat2& gm = G.element(g);
  const Mat2& gi = G.element(G.inverse(g));
  if (exec == Exec::Serial) {
    for (std::int64_t x = 0; x < n; ++x)
      perm[x] = G.index_of_checked(mat::conjugate(R, gm, G.element(static_cast<Index>(x)), gi));
  } else {
#pragma omp parallel for schedule(static)
    for (std::int64_t x = 0; x < n; ++x)
      perm[x] = G.index_of_checked(mat::conjugate(R, gm, G.element(static_cast<Index>(x)), gi));
  }
  return perm;
}

std::vector<Index> involutions(const Group& G, Exec exec) {
  const auto n = static_cast<std::int64_t>(G.order());
  const Ring& R = G.ring();
  const Mat2 id = mat::identity(R);
  std::vector<char> flag(G.order(), 0);
  if (exec == Exec::Serial) {
    for (std::int64_t x = 0; x < n; ++x) {
      const Mat2& A = G.element(static_cast<Index>(x));
      flag[x] = mat::mul(R, A, A) == id;
    }
  } else {
#pragma omp parallel for schedule(static)
    for (std::int64_t x = 0; x < n; ++x) {
      const Mat2& A = G.element(static_cast<Index>(x));
      flag[x] = mat::mul(R, A, A) == id;
    }
  }
  std::vector<Index> out;
  for (Index x = 0; x < G.order(); ++x)
    if (flag[x]) out.push_back(x);
  return out;
}

namespace {
std::int64_t first_strong_witness(const Group& G, const std::vector<Index>& invols, Index x) {
  const Ring& R = G.ring();
  const Mat2& A = G.element(x);
  const Mat2& Ainv = G.element(G.inverse(x));
  for (Index t : invols) {
    const Mat2& T = G.element(t);
    if (mat::mul(R, T, A) == mat::mul(R, Ainv, T)) return t;
  }
  return -1;
}
}  // namespace

std::vector<std::int64_t> strong_reality_witnesses(const Group& G, const std::vector<Index>& invols,
                                                   Exec exec) {
  const auto n = static_cast<std::int64_t>(G.order());
  std::vector<std::int64_t> out(G.order(), -1);
  if (exec == Exec::Serial) {
    for (std::int64_t x = 0; x < n; ++x) out[x] = first_strong_witness(G, invols, static_cast<Index>(x));
  } else {
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t x = 0; x < n; ++x) out[x] = first_strong_witness(G, invols, static_cast<Index>(x));
  }
  return out;
}

std::vector<std::uint32_t> class_structure(const Group& G, const std::vector<std::uint32_t>& class_of,
                                           const std::vector<Index>& reps, Exec exec) {
  const std::size_t k = reps.size();
  const auto kk = static_cast<std::int64_t>(k);
  std::vector<std::uint32_t> a(k * k * k, 0);
  const Ring& R = G.ring();
  auto column = [&](std::int64_t c) {
    const Mat2& z = G.element(reps[c]);
    for (Index x = 0; x < G.order(); ++x) {
      // x in C_i and y = x^{-1} z in C_j with x y = z.
      const Index y = G.index_of_checked(mat::mul(R, G.element(G.inverse(x)), z));
      ++a[(class_of[x] * k + class_of[y]) * k + c];
    }
  };
  // Each c writes a disjoint stride of `a`, so the parallel loop is race free.
  if (exec == Exec::Serial) {
    for (std::int64_t c = 0; c < kk; ++c) column(c);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t c = 0; c < kk; ++c) column(c);
  }
  return a;
}

}  // namespace glgu::kernels
