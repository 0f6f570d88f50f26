#pragma once

// Exhaustively enumerated realizations of GL2(o_l) and GU2(o_l), plus the Lie
// algebras gl2 and gu2 and the congruence subgroups K^i.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "glgu/matrix.hpp"
#include "glgu/rings.hpp"

namespace glgu {

enum class GroupKind { GL2, GU2 };

std::string_view to_string(GroupKind kind);
GroupKind parse_kind(std::string_view text);

/// Execution policy for the exhaustive kernels. Serial is the reference.
enum class Exec { Serial, Parallel };

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what_for, std::uint64_t required, std::uint64_t budget);
  std::uint64_t required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

/// A computed value contradicts a statement the toolkit is checking.
class Falsification : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GroupSpec {
  GroupKind kind = GroupKind::GL2;
  Family family = Family::Mixed;
  unsigned p = 3;
  unsigned f = 1;
  unsigned ell = 1;

  std::uint64_t q() const;
  GroupSpec at_level(unsigned level) const;
  std::string describe() const;
  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// |GL2(o_l)| = q^{4l-3}(q-1)(q^2-1), |GU2(o_l)| = q^{4l-3}(q-1)(q+1)^2.
std::uint64_t order_formula(GroupKind kind, std::uint64_t q, unsigned ell);

/// The coefficient ring: o_l for GL2, O_l for GU2.
Ring group_ring(const GroupSpec& spec);

bool is_member(GroupKind kind, const Ring& R, const Mat2& A);

/// gl2: every matrix over o_m; gu2: A + A* = 0 over O_m.
bool is_lie_member(GroupKind kind, const Ring& R, const Mat2& A);
std::uint64_t lie_algebra_size(GroupKind kind, std::uint64_t q, unsigned m);
std::vector<Mat2> lie_algebra(GroupKind kind, const Ring& R, std::uint64_t budget = kDefaultBudget);

class Group {
 public:
  using Index = std::uint32_t;

  /// Throws BudgetExceeded when the closed-form order is above `budget`.
  static Group enumerate(const GroupSpec& spec, std::uint64_t budget = kDefaultBudget,
                         Exec exec = Exec::Parallel);
  /// Rebuilds a group from a sorted key list (used by the cache); validates
  /// order, sortedness and membership.
  static Group from_keys(const GroupSpec& spec, std::vector<MatKey> keys);

  const GroupSpec& spec() const { return spec_; }
  GroupKind kind() const { return spec_.kind; }
  const Ring& ring() const { return ring_; }
  std::size_t order() const { return elements_.size(); }

  const Mat2& element(Index i) const { return elements_[i]; }
  const std::vector<Mat2>& elements() const { return elements_; }
  const std::vector<MatKey>& keys() const { return keys_; }

  std::optional<Index> index_of(const Mat2& A) const;
  /// Throws std::logic_error when A is not in the group.
  Index index_of_checked(const Mat2& A) const;

  Index identity() const { return identity_; }
  Index inverse(Index i) const { return inverse_[i]; }
  Index mul(Index i, Index j) const;
  Index conjugate(Index g, Index x) const;  // g x g^{-1}
  Index power(Index x, std::uint64_t e) const;

  /// Greedy generating set in canonical order.
  const std::vector<Index>& generators() const { return generators_; }

  /// K^i = ker(G(o_l) -> G(o_i)); K^0 is the whole group.
  std::vector<Index> congruence_subgroup(unsigned i) const;

 private:
  Group(GroupSpec spec, Ring ring, std::vector<MatKey> keys);
  void build_generators();

  GroupSpec spec_;
  Ring ring_;
  std::vector<MatKey> keys_;
  std::vector<Mat2> elements_;
  std::vector<Index> inverse_;
  std::vector<Index> generators_;
  Index identity_ = 0;
};

}  // namespace glgu
