#pragma once

// Class-level census of real, strongly real and regular classes, the GU2
// table rows, and the same quantities from the closed-form counts.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "glgu/classify.hpp"
#include "glgu/reality.hpp"

namespace glgu {

struct ConjClass {
  Group::Index rep = 0;
  std::uint64_t size = 0;
  std::string label;
  bool real = false;
  bool strongly_real = false;
  bool regular = false;
  OrbitType type = OrbitType::nreg;
  int table_row = 0;  // 1..5 for real GU2 classes, 0 otherwise
};

struct TableRow {
  std::uint64_t regular = 0;
  std::uint64_t nonregular = 0;
  std::uint64_t strongly_real = 0;
  friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct ClassCensus {
  std::string source;  // "bruteforce" or "formula"
  GroupKind kind = GroupKind::GL2;
  std::uint64_t q = 0;
  unsigned ell = 0;
  std::optional<std::uint64_t> classes;  // brute force only
  std::uint64_t real = 0;
  std::uint64_t strongly_real = 0;
  std::uint64_t real_regular = 0;
  std::uint64_t real_nonregular = 0;
  std::optional<std::array<TableRow, 5>> rows;  // GU2 only
};

/// Per-class records. `gu2` is required for GU2 groups.
std::vector<ConjClass> describe_classes(const Group& G, const ClassPartition& P, const RealitySweep& sweep,
                                        const GU2Classifier* gu2 = nullptr);

/// Throws Falsification when a real GU2 class fits no table row.
ClassCensus real_class_census(const Group& G, const std::vector<ConjClass>& classes);

ClassCensus formula_report(std::uint64_t q, unsigned ell, GroupKind kind);

/// Name of the first field where the two censuses differ (fields absent on
/// either side are skipped), or nullopt when they agree.
std::optional<std::string> first_difference(const ClassCensus& a, const ClassCensus& b);

}  // namespace glgu
