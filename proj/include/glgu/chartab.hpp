#pragma once

// Character tables by simultaneous diagonalization of the class-sum matrices
// over F_m, Frobenius-Schur indicators, restriction to congruence subgroups,
// centralizers, Z_A and tangibility.

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "glgu/classify.hpp"
#include "glgu/group.hpp"
#include "glgu/partition.hpp"

namespace glgu {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

struct ClassData {
  std::uint64_t group_order = 0;
  std::vector<std::uint32_t> class_of;  // element index -> class
  std::vector<Group::Index> reps;
  std::vector<std::uint64_t> sizes;
  std::uint32_t identity_class = 0;
  std::vector<std::uint32_t> inverse_class;
  std::vector<std::uint32_t> square_class;
  std::vector<std::uint32_t> rep_order;
  /// power_class[c][t] = class of rep^t for 0 <= t < rep_order[c].
  std::vector<std::vector<std::uint32_t>> power_class;
  std::uint64_t exponent = 1;
  /// a[(i*k + j)*k + c] = #{(x, y) in C_i x C_j : x y = rep_c}.
  std::vector<std::uint32_t> coefficients;

  std::size_t count() const { return reps.size(); }
  std::uint32_t coefficient(std::size_t i, std::size_t j, std::size_t c) const {
    return coefficients[(i * count() + j) * count() + c];
  }
};

/// Refuses with BudgetExceeded when k^3 exceeds the budget.
ClassData class_structure(const Group& G, const ClassPartition& P, Exec exec = Exec::Parallel,
                          std::uint64_t budget = kDefaultBudget);

struct CharTable {
  std::uint64_t modulus = 0;
  std::uint64_t zeta = 0;  // primitive exponent-th root of unity mod m
  std::uint64_t exponent = 0;
  unsigned primes_tried = 1;
  /// values[chi][c] = chi(C_c) mod m. Row 0 is the trivial character; rows are
  /// sorted by (degree, trivial first, residues).
  std::vector<std::vector<std::uint64_t>> values;
  std::vector<std::uint64_t> degrees;
  std::vector<char> real_valued;
  std::vector<int> fs;                           // filled by fs_indicators
  std::vector<std::optional<OrbitType>> types;   // filled by restriction_typing
  std::vector<std::optional<bool>> tangible;     // filled by tangibility_census

  std::size_t count() const { return values.size(); }
};

/// Dixon's method. The modulus is the least prime m = 1 (mod exponent) with
/// m > 2 ceil(sqrt|G|); a failed split moves on to the next such prime.
/// Throws std::runtime_error when an orthogonality relation fails.
CharTable character_table(const ClassData& data, std::uint64_t seed = kDefaultSeed);

/// Both orthogonality relations mod m; returns a description of the first failure.
std::optional<std::string> orthogonality_failure(const CharTable& table, const ClassData& data);

/// nu(chi) = |G|^{-1} sum_c |C_c| chi(C_c^2), read off as -1, 0 or +1.
void fs_indicators(CharTable& table, const ClassData& data);

struct SelfDualCensus {
  std::uint64_t real_characters = 0;
  std::uint64_t orthogonal_dim = 0;  // sum of degrees with nu = +1
  std::uint64_t symplectic_dim = 0;  // sum of degrees with nu = -1
  std::int64_t fs_sum = 0;           // sum nu(chi) deg(chi)
};

SelfDualCensus self_dual_census(const CharTable& table);

/// Multiset of eigenvalue exponents of chi(rep_c): mult[j] for exp(2 pi i j/o),
/// o = rep_order[c]. Exact because the multiplicities lie in [0, deg].
std::vector<std::uint64_t> eigenvalue_multiplicities(const CharTable& table, const ClassData& data,
                                                     std::size_t chi, std::size_t c);
std::complex<double> complex_value(const CharTable& table, const ClassData& data, std::size_t chi,
                                   std::size_t c);

// ---- Congruence subgroups and the adjoint action ----

/// Ad-orbits of g(o_m) under G(o_m).
struct LieOrbits {
  Ring ring;                          // level-m ring of the Lie algebra
  std::vector<Mat2> elements;         // sorted by key
  std::vector<MatKey> keys;
  std::vector<std::uint32_t> orbit_of;
  std::vector<std::uint32_t> orbit_rep;  // least element of each orbit
  std::vector<OrbitType> orbit_type;

  std::size_t index_of(const Mat2& X) const;
};

LieOrbits lie_orbits(const Group& G_m);

/// <chi|_{K^i}, psi_A> for every A in g(o_{l-i}), with
/// psi_A(I + pi^i B~) = psi(pi^i tr(A~ B~)). Requires 2i >= l.
struct Restriction {
  unsigned level = 0;                       // i
  std::vector<std::uint64_t> multiplicity;  // per LieOrbits element
  std::uint32_t orbit = 0;                  // the unique occurring orbit
  OrbitType type = OrbitType::nreg;
};

std::vector<Restriction> restrict_to_congruence(const CharTable& table, const ClassData& data, const Group& G,
                                                const LieOrbits& orbits, unsigned i);

/// Type labels from the restriction to K^{l-1}. Requires l >= 2.
void restriction_typing(CharTable& table, const ClassData& data, const Group& G);

// ---- Centralizers and Z_A ----

/// #{(x, y) in R_l^2 : xI + yA in G(o_l)}, for A regular over the group ring.
std::uint64_t centralizer_order(GroupKind kind, const Ring& R, const Mat2& A);

/// z_A = {x in S_l : rho_{l,l1}(x) in det C_{G(o_l1)}(A)}, sorted. A is over
/// the level-l1 ring, R is the level-l group ring.
std::vector<Code> za_scalars(GroupKind kind, const Ring& R, const Mat2& A_l1);

/// S_l: o_l^x for GL2, the norm-one units of O_l for GU2.
std::vector<Code> central_scalars(GroupKind kind, const Ring& R);

struct CentralizerReport {
  OrbitType type = OrbitType::nreg;
  std::uint64_t centralizer_order = 0;
  std::uint64_t center_order = 0;  // |Z_l| = |S_l|
  std::uint64_t za_order = 0;
  std::uint64_t za_index = 0;
};

/// A regular in g(o_l) over the level-l group ring; throws std::invalid_argument otherwise.
CentralizerReport centralizer_and_za(GroupKind kind, const Ring& R, const Mat2& A);

// ---- Tangibility ----

struct TangibleRecord {
  std::uint32_t character = 0;
  Mat2 orbit_datum;  // least A in the occurring Ad-orbit, over o_{l1}
  OrbitType type = OrbitType::nreg;
  bool t1 = false;
  bool t2 = false;
  bool self_dual = false;
  bool tangible() const { return t1 && t2; }
};

struct TangibilityCensus {
  unsigned ell = 0;
  std::vector<TangibleRecord> records;  // regular characters only
  std::array<std::uint64_t, 3> tangible_by_type{};  // ss, sns, cus
  std::uint64_t nonregular_self_dual = 0;
  std::uint64_t nonregular_self_dual_pulled_back = 0;  // trivial on K^{l-1}
  std::vector<std::uint32_t> mismatches;  // regular characters with tangible != self-dual
};

/// Index into TangibilityCensus::tangible_by_type.
std::size_t type_slot(OrbitType t);

/// m_ss = q^{l-2}(q-1)^2/2, m_sns = 2 q^{l-1}, m_cus = q^{l-2}(q^2-1)/2.
std::array<std::uint64_t, 3> tangible_formula(std::uint64_t q, unsigned ell);

/// Requires l = 2 unless allow_odd (l = 3) is set; needs fs_indicators and
/// restriction_typing first. Fills table.tangible.
TangibilityCensus tangibility_census(CharTable& table, const ClassData& data, const Group& G,
                                     bool allow_odd = false);

}  // namespace glgu
