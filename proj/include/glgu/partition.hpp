#pragma once

#include <cstdint>
#include <vector>

#include "glgu/group.hpp"

namespace glgu {

/// Conjugacy classes, numbered in the canonical order of their least members.
struct ClassPartition {
  std::vector<std::uint32_t> class_of;          // element index -> class
  std::vector<Group::Index> reps;               // least member of each class
  std::vector<std::uint64_t> sizes;
  std::vector<std::vector<Group::Index>> members;  // sorted

  std::size_t count() const { return reps.size(); }
};

/// BFS over conjugation by the generators, seeded in canonical order.
ClassPartition conjugacy_partition(const Group& G, Exec exec = Exec::Parallel);

/// Ad-orbit test: is there g in G with g X g^{-1} = Y? X, Y are over G.ring().
bool same_adjoint_orbit(const Group& G, const Mat2& X, const Mat2& Y);

}  // namespace glgu
