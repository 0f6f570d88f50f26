#pragma once

// Reality and strong reality: exhaustive oracles and closed-form criteria.

#include <cstdint>
#include <optional>
#include <vector>

#include "glgu/classify.hpp"
#include "glgu/group.hpp"
#include "glgu/partition.hpp"

namespace glgu {

struct RealityVerdict {
  bool is_real = false;
  bool is_strongly_real = false;
  std::optional<Group::Index> witness_conjugator;
  std::optional<Group::Index> witness_involution;
  bool criterion_real = false;
  std::optional<bool> criterion_strongly_real;  // GU2 only
};

/// (q - d) q^{2l-1} + 2 with d = -1 for GL2 and +1 for GU2.
std::uint64_t involution_formula(GroupKind kind, std::uint64_t q, unsigned ell);

/// det in {1, -1} and tr(g) = tr(g^{-1}).
bool criterion_real(const Ring& R, const Mat2& g);

/// First h in canonical order with h g h^{-1} = g^{-1}.
std::optional<Group::Index> real_witness(const Group& G, Group::Index g);

/// Whole-group sweep shared by the census and the verdicts.
struct RealitySweep {
  std::vector<Group::Index> involutions;  // x^2 = 1, identity included
  std::vector<std::int64_t> strong_witness;  // per element, -1 when not strongly real
  std::vector<char> real;                    // per element, from the class partition
};

RealitySweep reality_sweep(const Group& G, const ClassPartition& P, Exec exec = Exec::Parallel);

/// `gu2` must be supplied for GU2 groups (it provides the tag-D test).
RealityVerdict reality_verdict(const Group& G, const RealitySweep& sweep, Group::Index g,
                               const GU2Classifier* gu2 = nullptr);

}  // namespace glgu
