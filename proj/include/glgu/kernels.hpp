#pragma once

// The exhaustive inner loops. Every kernel has a serial reference path and an
// OpenMP path selected by Exec; both produce identical results.

#include <cstdint>
#include <vector>

#include "glgu/group.hpp"

namespace glgu::kernels {

using Index = Group::Index;

/// Sorted keys of all group members (GL2 by determinant scan, GU2 column-first).
std::vector<MatKey> enumerate_keys(GroupKind kind, const Ring& R, Exec exec);

/// perm[x] = index of g x g^{-1}.
std::vector<Index> conjugation_permutation(const Group& G, Index g, Exec exec);

/// Indices of all x with x^2 = 1, identity included, in canonical order.
std::vector<Index> involutions(const Group& G, Exec exec);

/// For each element, the first involution t (canonical order) with t x t = x^{-1},
/// or -1 when there is none.
std::vector<std::int64_t> strong_reality_witnesses(const Group& G, const std::vector<Index>& invols,
                                                   Exec exec);

/// Class multiplication coefficients a[(i*k + j)*k + c] = #{x in C_i : x^{-1} z_c in C_j}
/// where z_c is the representative of class c.
std::vector<std::uint32_t> class_structure(const Group& G, const std::vector<std::uint32_t>& class_of,
                                           const std::vector<Index>& reps, Exec exec);

}  // namespace glgu::kernels
