#include "glgu/reality.hpp"

#include "glgu/kernels.hpp"

namespace glgu {

std::uint64_t involution_formula(GroupKind kind, std::uint64_t q, unsigned ell) {
  std::uint64_t r = kind == GroupKind::GL2 ? q + 1 : q - 1;
  for (unsigned i = 0; i + 1 < 2 * ell; ++i) r *= q;
  return r + 2;
}

bool criterion_real(const Ring& R, const Mat2& g) {
  const Code d = mat::det(R, g);
  if (d != R.one() && d != R.neg(R.one())) return false;
  return mat::tr(R, g) == mat::tr(R, mat::inv(R, g));
}

std::optional<Group::Index> real_witness(const Group& G, Group::Index g) {
  const Ring& R = G.ring();
  const Mat2& A = G.element(g);
  const Mat2& Ainv = G.element(G.inverse(g));
  for (Group::Index h = 0; h < G.order(); ++h) {
    const Mat2& H = G.element(h);
    if (mat::mul(R, H, A) == mat::mul(R, Ainv, H)) return h;
  }
  return std::nullopt;
}

RealitySweep reality_sweep(const Group& G, const ClassPartition& P, Exec exec) {
  RealitySweep s;
  s.involutions = kernels::involutions(G, exec);
  s.strong_witness = kernels::strong_reality_witnesses(G, s.involutions, exec);
  s.real.resize(G.order());
  for (Group::Index x = 0; x < G.order(); ++x) s.real[x] = P.class_of[x] == P.class_of[G.inverse(x)];
  return s;
}

RealityVerdict reality_verdict(const Group& G, const RealitySweep& sweep, Group::Index g,
                               const GU2Classifier* gu2) {
  RealityVerdict v;
  v.is_real = sweep.real[g];
  if (v.is_real) v.witness_conjugator = real_witness(G, g);
  if (sweep.strong_witness[g] >= 0) {
    v.is_strongly_real = true;
    v.witness_involution = static_cast<Group::Index>(sweep.strong_witness[g]);
  }
  v.criterion_real = criterion_real(G.ring(), G.element(g));
  if (G.kind() == GroupKind::GU2) {
    if (!gu2) throw std::invalid_argument("GU2 verdicts need the class labels");
    v.criterion_strongly_real = v.criterion_real && gu2->element_label(g).tag != 'D';
  }
  return v;
}

}  // namespace glgu
