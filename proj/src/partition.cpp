#include "glgu/partition.hpp"

#include <algorithm>
#include <limits>

#include "glgu/kernels.hpp"

namespace glgu {

ClassPartition conjugacy_partition(const Group& G, Exec exec) {
  std::vector<std::vector<Group::Index>> perms;
  for (Group::Index g : G.generators()) perms.push_back(kernels::conjugation_permutation(G, g, exec));

  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  ClassPartition P;
  P.class_of.assign(G.order(), kUnset);
  for (Group::Index seed = 0; seed < G.order(); ++seed) {
    if (P.class_of[seed] != kUnset) continue;
    const auto c = static_cast<std::uint32_t>(P.reps.size());
    std::vector<Group::Index> orbit{seed};
    P.class_of[seed] = c;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const auto& perm : perms) {
        const Group::Index y = perm[orbit[head]];
        if (P.class_of[y] == kUnset) {
          P.class_of[y] = c;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    P.reps.push_back(seed);
    P.sizes.push_back(orbit.size());
    P.members.push_back(std::move(orbit));
  }
  return P;
}

bool same_adjoint_orbit(const Group& G, const Mat2& X, const Mat2& Y) {
  const Ring& R = G.ring();
  for (Group::Index g = 0; g < G.order(); ++g) {
    if (mat::conjugate(R, G.element(g), X, G.element(G.inverse(g))) == Y) return true;
  }
  return false;
}

}  // namespace glgu
