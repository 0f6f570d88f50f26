#pragma once

// Conjugacy-class labels: the GL2 normal form M(d,i,alpha,beta), the GU2
// representative families A-D, and adjoint-orbit types on gl2 / gu2.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "glgu/group.hpp"
#include "glgu/partition.hpp"

namespace glgu {

enum class OrbitType { nreg, sns, ss, cus };

std::string_view to_string(OrbitType t);
inline constexpr std::array<OrbitType, 4> kOrbitTypes{OrbitType::nreg, OrbitType::sns, OrbitType::ss,
                                                     OrbitType::cus};

// ---- GL2 ----

/// M(d, i, alpha, beta) = d I + pi^i [[0, alpha], [1, beta]]. d is a code of o_l
/// with digits below i only (for i = l it is the full scalar); alpha and beta
/// are codes of o_{l-i} (zero when i = l).
struct GL2CanonicalForm {
  unsigned i = 0;
  Code d = 0;
  Code alpha = 0;
  Code beta = 0;

  friend auto operator<=>(const GL2CanonicalForm&, const GL2CanonicalForm&) = default;
};

GL2CanonicalForm gl2_canonical_form(const Ring& R, const Mat2& A);
Mat2 gl2_form_matrix(const Ring& R, const GL2CanonicalForm& form);
/// P with P^{-1} A P = gl2_form_matrix(form of A).
Mat2 gl2_form_conjugator(const Ring& R, const Mat2& A);
std::string to_string(const Ring& R, const GL2CanonicalForm& form);

/// All normal forms of invertible matrices, from the parameter conditions alone.
std::vector<GL2CanonicalForm> gl2_forms_symbolic(const Ring& R);

// ---- GU2 ----

struct GU2ClassRep {
  char tag = 'A';
  unsigned i = 0;  // tag D only
  Code beta = 0;   // tag D only; code of o_{l-i-1}
  Code x = 0;
  Code y = 0;
  Mat2 matrix;

  std::string to_string(const Ring& R) const;
};

Mat2 gu2_family_matrix(const Ring& R, char tag, unsigned i, Code beta, Code x, Code y);
/// The defining equations of the family (not group membership).
bool gu2_family_equations(const Ring& R, char tag, unsigned i, Code beta, Code x, Code y);

/// Labels every conjugacy class of GU2(o_l) by the first family tuple (tags in
/// order A, B, C, D; parameters in code order) that lands in it.
class GU2Classifier {
 public:
  GU2Classifier(const Group& G, const ClassPartition& P);
  /// Rebuilds from stored labels; throws std::runtime_error unless every
  /// label is a valid family matrix lying in its class.
  static GU2Classifier restore(const Group& G, const ClassPartition& P, std::vector<GU2ClassRep> labels,
                               std::vector<std::string> hits, std::size_t tuples);

  const GU2ClassRep& class_label(std::uint32_t c) const { return labels_[c]; }
  const GU2ClassRep& element_label(Group::Index g) const { return labels_[class_of_[g]]; }
  const std::vector<GU2ClassRep>& labels() const { return labels_; }
  /// Tags whose families meet class c.
  const std::string& tags_hitting(std::uint32_t c) const { return hits_[c]; }
  std::size_t multi_tag_classes() const;
  std::size_t tuples_tested() const { return tuples_; }

 private:
  GU2Classifier() = default;

  std::vector<std::uint32_t> class_of_;
  std::vector<GU2ClassRep> labels_;
  std::vector<std::string> hits_;
  std::size_t tuples_ = 0;
};

// ---- Lie algebra ----

/// Type of the adjoint orbit of X, read from X mod pi.
OrbitType lie_type(GroupKind kind, const Ring& R, const Mat2& X);
/// Orbit representative in the shapes (a) xI + pi C, (b) [[x, nu pi beta],[nu, x]],
/// (c) diag(x - r nu^2, x + r nu^2), (d) [[x, nu sigma],[nu, x]], where nu = 1 for
/// gl2 and nu = eps for gu2.
Mat2 adjoint_representative(GroupKind kind, const Ring& R, const Mat2& X);

/// Type of a group element: nreg when scalar mod pi; otherwise from the
/// eigenvalues of its reduction (GL2: split/repeated/irreducible; GU2: a
/// repeated eigenvalue gives sns, two of norm one give cus, else ss).
OrbitType element_type(GroupKind kind, const Ring& R, const Mat2& g);

}  // namespace glgu
