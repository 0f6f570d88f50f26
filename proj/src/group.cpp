#include "glgu/group.hpp"

#include <algorithm>
#include <sstream>

#include "glgu/kernels.hpp"

namespace glgu {

std::string_view to_string(GroupKind kind) { return kind == GroupKind::GL2 ? "gl2" : "gu2"; }

GroupKind parse_kind(std::string_view text) {
  if (text == "gl2" || text == "GL2") return GroupKind::GL2;
  if (text == "gu2" || text == "GU2") return GroupKind::GU2;
  throw std::invalid_argument("unknown group kind '" + std::string(text) + "' (expected gl2|gu2)");
}

BudgetExceeded::BudgetExceeded(const std::string& what_for, std::uint64_t required,
                               std::uint64_t budget)
    : std::runtime_error(what_for + " needs budget " + std::to_string(required) +
                         " but the configured budget is " + std::to_string(budget)),
      required_(required),
      budget_(budget) {}

std::uint64_t GroupSpec::q() const {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < f; ++i) r *= p;
  return r;
}

GroupSpec GroupSpec::at_level(unsigned level) const {
  GroupSpec s = *this;
  s.ell = level;
  return s;
}

std::string GroupSpec::describe() const {
  std::ostringstream os;
  os << to_string(kind) << " " << glgu::to_string(family) << " p=" << p << " f=" << f
     << " ell=" << ell;
  return os.str();
}

std::uint64_t order_formula(GroupKind kind, std::uint64_t q, unsigned ell) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < 4 * ell - 3; ++i) r *= q;
  r *= (q - 1);
  return kind == GroupKind::GL2 ? r * (q * q - 1) : r * (q + 1) * (q + 1);
}

Ring group_ring(const GroupSpec& spec) {
  return Ring::make(spec.family, spec.p, spec.f, spec.ell, spec.kind == GroupKind::GU2);
}

bool is_member(GroupKind kind, const Ring& R, const Mat2& A) {
  if (!R.is_unit(mat::det(R, A))) return false;
  if (kind == GroupKind::GL2) return true;
  return mat::mul(R, mat::star(R, A), A) == mat::identity(R);
}

bool is_lie_member(GroupKind kind, const Ring& R, const Mat2& A) {
  if (kind == GroupKind::GL2) return true;
  return mat::add(R, A, mat::star(R, A)) == Mat2{};
}

std::uint64_t lie_algebra_size(GroupKind, std::uint64_t q, unsigned m) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < 4 * m; ++i) r *= q;
  return r;
}

std::vector<Mat2> lie_algebra(GroupKind kind, const Ring& R, std::uint64_t budget) {
  const std::uint64_t size = lie_algebra_size(kind, R.q(), R.ell());
  if (size > budget) throw BudgetExceeded("Lie algebra enumeration", size, budget);
  std::vector<Mat2> out;
  out.reserve(size);
  if (kind == GroupKind::GL2) {
    const Code n = static_cast<Code>(R.size());
    for (Code a = 0; a < n; ++a)
      for (Code b = 0; b < n; ++b)
        for (Code c = 0; c < n; ++c)
          for (Code d = 0; d < n; ++d) out.push_back(mat::make(a, b, c, d));
    return out;
  }
  // gu2: d = -a°, and b, c are purely imaginary (b° = -b, c° = -c).
  const Code n = static_cast<Code>(R.size());
  const Code nb = static_cast<Code>(R.base_size());
  for (Code a = 0; a < n; ++a)
    for (Code b = 0; b < nb; ++b)
      for (Code c = 0; c < nb; ++c) out.push_back(mat::make(a, R.make(0, b), R.make(0, c), R.neg(R.conj(a))));
  std::sort(out.begin(), out.end(), [&](const Mat2& x, const Mat2& y) {
    return mat::key(R, x) < mat::key(R, y);
  });
  return out;
}

Group::Group(GroupSpec spec, Ring ring, std::vector<MatKey> keys)
    : spec_(spec), ring_(std::move(ring)), keys_(std::move(keys)) {
  elements_.reserve(keys_.size());
  for (MatKey k : keys_) elements_.push_back(mat::from_key(ring_, k));
  identity_ = index_of_checked(mat::identity(ring_));
  inverse_.resize(elements_.size());
  for (Index i = 0; i < elements_.size(); ++i) {
    inverse_[i] = index_of_checked(mat::inv(ring_, elements_[i]));
  }
  build_generators();
}

Group Group::enumerate(const GroupSpec& spec, std::uint64_t budget, Exec exec) {
  const std::uint64_t order = order_formula(spec.kind, spec.q(), spec.ell);
  if (order > budget) throw BudgetExceeded("enumeration of " + spec.describe(), order, budget);
  Ring R = group_ring(spec);
  if (R.size() > 65535) throw BudgetExceeded("matrix keys for " + spec.describe(), R.size(), 65535);
  auto keys = kernels::enumerate_keys(spec.kind, R, exec);
  if (keys.size() != order) {
    throw std::logic_error("enumerated " + std::to_string(keys.size()) + " elements of " +
                           spec.describe() + ", closed form gives " + std::to_string(order));
  }
  return Group(spec, std::move(R), std::move(keys));
}

Group Group::from_keys(const GroupSpec& spec, std::vector<MatKey> keys) {
  Ring R = group_ring(spec);
  if (keys.size() != order_formula(spec.kind, spec.q(), spec.ell))
    throw std::runtime_error("cached group has the wrong order");
  if (!std::is_sorted(keys.begin(), keys.end()) ||
      std::adjacent_find(keys.begin(), keys.end()) != keys.end())
    throw std::runtime_error("cached group keys are not strictly increasing");
  for (MatKey k : keys) {
    if (!is_member(spec.kind, R, mat::from_key(R, k)))
      throw std::runtime_error("cached group contains a non-member");
  }
  return Group(spec, std::move(R), std::move(keys));
}

std::optional<Group::Index> Group::index_of(const Mat2& A) const {
  const MatKey k = mat::key(ring_, A);
  auto it = std::lower_bound(keys_.begin(), keys_.end(), k);
  if (it == keys_.end() || *it != k) return std::nullopt;
  return static_cast<Index>(it - keys_.begin());
}

Group::Index Group::index_of_checked(const Mat2& A) const {
  auto i = index_of(A);
  if (!i) throw std::logic_error("matrix " + mat::to_string(ring_, A) + " is not in " + spec_.describe());
  return *i;
}

Group::Index Group::mul(Index i, Index j) const {
  return index_of_checked(mat::mul(ring_, elements_[i], elements_[j]));
}

Group::Index Group::conjugate(Index g, Index x) const {
  return index_of_checked(
      mat::conjugate(ring_, elements_[g], elements_[x], elements_[inverse_[g]]));
}

Group::Index Group::power(Index x, std::uint64_t e) const {
  Mat2 result = mat::identity(ring_);
  Mat2 base = elements_[x];
  while (e > 0) {
    if (e & 1U) result = mat::mul(ring_, result, base);
    base = mat::mul(ring_, base, base);
    e >>= 1U;
  }
  return index_of_checked(result);
}

void Group::build_generators() {
  const std::size_t n = elements_.size();
  std::vector<char> in_closure(n, 0);
  in_closure[identity_] = 1;
  std::size_t closure_size = 1;
  for (Index x = 0; x < n && closure_size < n; ++x) {
    if (in_closure[x]) continue;
    generators_.push_back(x);
    std::fill(in_closure.begin(), in_closure.end(), 0);
    std::vector<Index> queue{identity_};
    in_closure[identity_] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Index g : generators_) {
        const Index y = mul(queue[head], g);
        if (!in_closure[y]) {
          in_closure[y] = 1;
          queue.push_back(y);
        }
      }
    }
    closure_size = queue.size();
  }
}

std::vector<Group::Index> Group::congruence_subgroup(unsigned i) const {
  std::vector<Index> out;
  if (i == 0) {
    for (Index x = 0; x < order(); ++x) out.push_back(x);
    return out;
  }
  if (i >= spec_.ell) return {identity_};
  const Mat2 id = mat::identity(ring_.at_level(i));
  for (Index x = 0; x < order(); ++x) {
    if (mat::project(ring_, elements_[x], i) == id) out.push_back(x);
  }
  return out;
}

}  // namespace glgu
