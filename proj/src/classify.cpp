#include "glgu/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace glgu {

std::string_view to_string(OrbitType t) {
  switch (t) {
    case OrbitType::nreg: return "nreg";
    case OrbitType::sns: return "sns";
    case OrbitType::ss: return "ss";
    case OrbitType::cus: return "cus";
  }
  return "?";
}

// ---- GL2 normal form ----

namespace {

unsigned scalar_depth(const Ring& R, const Mat2& A) {
  return std::min({R.valuation(A.a12()), R.valuation(A.a21()), R.valuation(R.sub(A.a11(), A.a22()))});
}

}  // namespace

GL2CanonicalForm gl2_canonical_form(const Ring& R, const Mat2& A) {
  if (R.extended()) throw RingError("GL2 normal form needs the base ring");
  const unsigned ell = R.ell();
  const unsigned i = scalar_depth(R, A);
  if (i >= ell) return {ell, A.a11(), 0, 0};
  const Code d = R.truncate(A.a11(), i);
  const Mat2 B = mat::div_pi_pow(R, mat::sub(R, A, mat::scalar(R, d)), i);
  const Ring Rs = R.at_level(ell - i);
  return {i, d, Rs.neg(mat::det(Rs, B)), mat::tr(Rs, B)};
}

Mat2 gl2_form_matrix(const Ring& R, const GL2CanonicalForm& form) {
  const unsigned ell = R.ell();
  if (form.i >= ell) return mat::scalar(R, form.d);
  const Mat2 C = mat::make(0, R.lift(form.alpha, ell - form.i), R.one(), R.lift(form.beta, ell - form.i));
  return mat::add(R, mat::scalar(R, form.d), mat::mul_pi_pow(R, C, form.i));
}

Mat2 gl2_form_conjugator(const Ring& R, const Mat2& A) {
  const unsigned i = scalar_depth(R, A);
  if (i >= R.ell()) return mat::identity(R);
  const Code d = R.truncate(A.a11(), i);
  const Mat2 B = mat::div_pi_pow(R, mat::sub(R, A, mat::scalar(R, d)), i);
  const Code one = R.one();
  const std::array<std::array<Code, 2>, 3> candidates{{{one, 0}, {0, one}, {one, one}}};
  for (const auto& v : candidates) {
    const Code w1 = R.add(R.mul(B.a11(), v[0]), R.mul(B.a12(), v[1]));
    const Code w2 = R.add(R.mul(B.a21(), v[0]), R.mul(B.a22(), v[1]));
    const Mat2 P = mat::make(v[0], w1, v[1], w2);
    if (R.is_unit(mat::det(R, P))) return P;
  }
  throw std::logic_error("no cyclic vector for a matrix that is non-scalar mod pi");
}

std::string to_string(const Ring& R, const GL2CanonicalForm& form) {
  if (form.i >= R.ell()) return "M(" + R.to_string(form.d) + "," + std::to_string(form.i) + ",-,-)";
  const Ring Rs = R.at_level(R.ell() - form.i);
  return "M(" + R.to_string(form.d) + "," + std::to_string(form.i) + "," + Rs.to_string(form.alpha) + "," +
         Rs.to_string(form.beta) + ")";
}

std::vector<GL2CanonicalForm> gl2_forms_symbolic(const Ring& R) {
  const unsigned ell = R.ell();
  const std::uint64_t q = R.q();
  std::vector<GL2CanonicalForm> out;
  for (Code alpha = 0; alpha < R.size(); ++alpha) {
    if (!R.is_unit(alpha)) continue;
    for (Code beta = 0; beta < R.size(); ++beta) out.push_back({0, 0, alpha, beta});
  }
  std::uint64_t qi = q;
  std::uint64_t qrest = R.size() / q;
  for (unsigned i = 1; i < ell; ++i, qi *= q, qrest /= q) {
    for (Code d = 0; d < qi; ++d) {
      if (d % q == 0) continue;
      for (Code alpha = 0; alpha < qrest; ++alpha)
        for (Code beta = 0; beta < qrest; ++beta) out.push_back({i, d, alpha, beta});
    }
  }
  for (Code d = 0; d < R.size(); ++d)
    if (R.is_unit(d)) out.push_back({ell, d, 0, 0});
  return out;
}

// ---- GU2 families ----

std::string GU2ClassRep::to_string(const Ring& R) const {
  std::string s(1, tag);
  s += "(";
  if (tag == 'D') {
    s += "i=" + std::to_string(i) + ",beta=" + R.base().at_level(std::max(1U, R.ell() - i - 1)).to_string(beta) + ",";
  }
  s += "x=" + R.to_string(x);
  if (tag == 'C' || tag == 'D') s += ",y=" + R.to_string(y);
  return s + ")";
}

Mat2 gu2_family_matrix(const Ring& R, char tag, unsigned i, Code beta, Code x, Code y) {
  switch (tag) {
    case 'A': return mat::scalar(R, x);
    case 'B': return mat::make(x, 0, 0, R.conj(R.inv(x)));
    case 'C': return mat::make(x, y, y, x);
    case 'D': {
      const Code b = R.mul_pi_pow(R.mul(R.embed(beta), y), i + 1);
      return mat::make(x, b, R.mul_pi_pow(y, i), x);
    }
    default: throw std::invalid_argument("unknown GU2 tag");
  }
}

bool gu2_family_equations(const Ring& R, char tag, unsigned i, Code beta, Code x, Code y) {
  const Code one = R.one();
  auto nrm = [&](Code z) { return R.mul(z, R.conj(z)); };
  switch (tag) {
    case 'A': return nrm(x) == one;
    case 'B': return R.is_unit(x) && nrm(x) != one;
    case 'C':
      return y != 0 && R.add(nrm(x), nrm(y)) == one &&
             R.add(R.mul(x, R.conj(y)), R.mul(R.conj(x), y)) == 0;
    case 'D': {
      if (!R.is_unit(x) || !R.is_unit(y)) return false;
      const Code t = R.mul_pi_pow(R.mul(R.embed(beta), nrm(y)), 2 * i + 1);
      const Code cross = R.mul_pi_pow(R.add(R.mul(x, R.conj(y)), R.mul(R.conj(x), y)), i);
      return R.add(nrm(x), t) == one && cross == 0;
    }
    default: return false;
  }
}

GU2Classifier GU2Classifier::restore(const Group& G, const ClassPartition& P, std::vector<GU2ClassRep> labels,
                                     std::vector<std::string> hits, std::size_t tuples) {
  const Ring& R = G.ring();
  if (G.kind() != GroupKind::GU2 || labels.size() != P.count() || hits.size() != P.count())
    throw std::runtime_error("stored GU2 labels do not fit the class partition");
  for (std::uint32_t c = 0; c < labels.size(); ++c) {
    auto& l = labels[c];
    if (!gu2_family_equations(R, l.tag, l.i, l.beta, l.x, l.y))
      throw std::runtime_error("stored GU2 label violates its family equations");
    l.matrix = gu2_family_matrix(R, l.tag, l.i, l.beta, l.x, l.y);
    const auto idx = G.index_of(l.matrix);
    if (!idx || P.class_of[*idx] != c) throw std::runtime_error("stored GU2 label lies outside its class");
  }
  GU2Classifier out;
  out.class_of_ = P.class_of;
  out.labels_ = std::move(labels);
  out.hits_ = std::move(hits);
  out.tuples_ = tuples;
  return out;
}

GU2Classifier::GU2Classifier(const Group& G, const ClassPartition& P) : class_of_(P.class_of) {
  if (G.kind() != GroupKind::GU2) throw std::invalid_argument("GU2Classifier needs a GU2 group");
  const Ring& R = G.ring();
  const std::size_t k = P.count();
  std::vector<char> labelled(k, 0);
  labels_.resize(k);
  hits_.assign(k, "");
  auto offer = [&](char tag, unsigned i, Code beta, Code x, Code y) {
    ++tuples_;
    if (!gu2_family_equations(R, tag, i, beta, x, y)) return;
    const Mat2 M = gu2_family_matrix(R, tag, i, beta, x, y);
    if (!is_member(GroupKind::GU2, R, M)) return;
    const std::uint32_t c = P.class_of[G.index_of_checked(M)];
    if (hits_[c].find(tag) == std::string::npos) hits_[c] += tag;
    if (labelled[c]) return;
    labelled[c] = 1;
    labels_[c] = GU2ClassRep{tag, i, beta, x, y, M};
  };
  const Code n = static_cast<Code>(R.size());
  for (Code x = 0; x < n; ++x) offer('A', 0, 0, x, 0);
  for (Code x = 0; x < n; ++x)
    if (R.is_unit(x)) offer('B', 0, 0, x, 0);
  for (Code x = 0; x < n; ++x)
    for (Code y = 1; y < n; ++y) offer('C', 0, 0, x, y);
  std::vector<Code> units = R.units();
  const unsigned ell = R.ell();
  for (unsigned i = 0; i < ell; ++i) {
    std::uint64_t beta_count = 1;
    for (unsigned j = 0; j + i + 1 < ell; ++j) beta_count *= R.q();
    for (Code beta = 0; beta < beta_count; ++beta)
      for (Code x : units)
        for (Code y : units) offer('D', i, beta, x, y);
  }
  for (std::size_t c = 0; c < k; ++c) {
    if (!labelled[c]) {
      throw Falsification("GU2 class of " + mat::to_string(R, G.element(P.reps[c])) +
                          " matches none of the representative families A-D");
    }
  }
}

std::size_t GU2Classifier::multi_tag_classes() const {
  return static_cast<std::size_t>(
      std::count_if(hits_.begin(), hits_.end(), [](const std::string& s) { return s.size() > 1; }));
}

// ---- Lie algebra orbits ----

namespace {

Code discriminant(const Ring& R, const Mat2& X) {
  const Code t = mat::tr(R, X);
  return R.sub(R.mul(t, t), R.mul(R.from_int(4), mat::det(R, X)));
}

OrbitType type_from_residue_disc(const Ring& R1, Code disc) {
  if (disc == 0) return OrbitType::sns;
  const Ring B = R1.base();
  const Code d = R1.re(disc);
  return B.residue_is_square(d) ? OrbitType::ss : OrbitType::cus;
}

}  // namespace

OrbitType lie_type(GroupKind kind, const Ring& R, const Mat2& X) {
  const Ring R1 = R.at_level(1);
  const Mat2 X1 = mat::project(R, X, 1);
  if (mat::is_scalar(X1)) return OrbitType::nreg;
  const Code disc = discriminant(R1, X1);
  if (kind == GroupKind::GU2 && !R1.in_base(disc)) {
    throw std::logic_error("discriminant of an anti-hermitian matrix left the base ring");
  }
  return type_from_residue_disc(R1, disc);
}

Mat2 adjoint_representative(GroupKind kind, const Ring& R, const Mat2& X) {
  const OrbitType type = lie_type(kind, R, X);
  if (type == OrbitType::nreg) {
    if (R.ell() == 1) return X;
    const Code x0 = R.truncate(X.a11(), 1);
    const Ring Rs = R.at_level(R.ell() - 1);
    const Mat2 C = mat::project(R, mat::div_pi_pow(R, mat::sub(R, X, mat::scalar(R, x0)), 1), R.ell() - 1);
    const Mat2 Cr = adjoint_representative(kind, Rs, C);
    return mat::add(R, mat::scalar(R, x0), mat::mul_pi_pow(R, mat::lift(R, Cr, R.ell() - 1), 1));
  }
  const Code nu = kind == GroupKind::GL2 ? R.one() : R.epsilon();
  const Code nu2 = R.mul(nu, nu);
  const Code four = R.from_int(4);
  const Code x = R.mul(mat::tr(R, X), R.inv(R.from_int(2)));
  const Code disc = discriminant(R, X);
  switch (type) {
    case OrbitType::sns:
      return mat::make(x, R.mul(disc, R.inv(R.mul(four, nu))), nu, x);
    case OrbitType::ss: {
      const Code r2 = R.mul(disc, R.inv(R.mul(four, R.mul(nu2, nu2))));
      Code r = 0;
      if (kind == GroupKind::GL2) {
        r = *R.sqrt(r2);
      } else {
        r = R.embed(*R.base().sqrt(R.re(r2)));
      }
      const Code rn = R.mul(r, nu2);
      return mat::make(R.sub(x, rn), 0, 0, R.add(x, rn));
    }
    case OrbitType::cus: {
      const Code sigma = R.mul(disc, R.inv(R.mul(four, nu2)));
      return mat::make(x, R.mul(nu, sigma), nu, x);
    }
    default: break;
  }
  return X;
}

OrbitType element_type(GroupKind kind, const Ring& R, const Mat2& g) {
  const Ring R1 = R.at_level(1);
  const Mat2 g1 = mat::project(R, g, 1);
  if (mat::is_scalar(g1)) return OrbitType::nreg;
  const Code disc = discriminant(R1, g1);
  if (kind == GroupKind::GL2) return type_from_residue_disc(R1, disc);
  if (disc == 0) return OrbitType::sns;
  const auto s = R1.sqrt(disc);
  if (!s) throw std::logic_error("GU2 element with eigenvalues outside the quadratic residue field");
  const Code half = R1.inv(R1.from_int(2));
  const Code t = mat::tr(R1, g1);
  const Code lambda = R1.mul(R1.add(t, *s), half);
  const Code mu = R1.mul(R1.sub(t, *s), half);
  const Code one = R1.base().one();
  return R1.norm(lambda) == one && R1.norm(mu) == one ? OrbitType::cus : OrbitType::ss;
}

}  // namespace glgu
