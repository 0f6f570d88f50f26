#pragma once

// Claim builders for the batch commands and the acceptance suite.

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "glgu/cache.hpp"
#include "glgu/census.hpp"
#include "glgu/chartab.hpp"
#include "glgu/report.hpp"

namespace glgu {

/// Lazily built, memoized artifacts per group, shared across claims.
class Context {
 public:
  Context(cache::Store& store, std::uint64_t budget, std::uint64_t seed, Exec exec = Exec::Parallel);
  ~Context();

  const Group& group(const GroupSpec& s);
  const ClassPartition& partition(const GroupSpec& s);
  const RealitySweep& sweep(const GroupSpec& s);
  /// nullptr for GL2.
  const GU2Classifier* labels(const GroupSpec& s);
  const std::vector<ConjClass>& classes(const GroupSpec& s);
  const ClassData& class_data(const GroupSpec& s);
  /// Table with indicators; restriction types are filled when l >= 2.
  CharTable& table(const GroupSpec& s);

  std::uint64_t seed() const { return seed_; }
  cache::Store& store() { return store_; }
  const std::vector<std::pair<std::string, double>>& timing() const { return timing_; }

 private:
  struct Entry;
  Entry& entry(const GroupSpec& s);
  template <class F>
  auto timed(const std::string& what, F&& f);

  cache::Store& store_;
  std::uint64_t budget_;
  std::uint64_t seed_;
  Exec exec_;
  std::map<std::string, std::unique_ptr<Entry>> entries_;
  std::vector<std::pair<std::string, double>> timing_;
};

/// Mixed-characteristic group with f = 1 for prime q, else the equal-characteristic one.
GroupSpec desk_spec(GroupKind kind, unsigned q, unsigned ell);

std::vector<Claim> involution_claims(Context& ctx, const GroupSpec& s, ordered_json* result = nullptr);
std::vector<Claim> census_claims(Context& ctx, const GroupSpec& s, ordered_json* result = nullptr);
std::vector<Claim> classify_claims(Context& ctx, const GroupSpec& s, ordered_json* result = nullptr);
std::vector<Claim> chartab_claims(Context& ctx, const GroupSpec& s, bool long_running, ordered_json* result = nullptr);

/// (q-1)(q-d)q^(2l-2), (q-d)q^(2l-1), (q+1)(q-d)q^(2l-2) for ss, sns, cus, with d = -1 (GL2), +1 (GU2).
std::uint64_t centralizer_formula(GroupKind kind, OrbitType type, std::uint64_t q, unsigned ell);
/// Least regular element of g(o_l) of the given type, in canonical order.
Mat2 least_regular_of_type(GroupKind kind, const Ring& R, OrbitType type);

/// Identities of formula_report for q in {3,5,7,9}, l <= 4, plus a count of
/// real classes over the symbolic GL2 canonical forms where |o_l| <= 729.
std::vector<Claim> formula_regression_claims();

struct Criterion {
  std::string id;
  std::string title;
  double limit_seconds = 0;
  std::vector<Claim> claims;
  double seconds = 0;
  bool pass() const;
};

/// Acceptance criteria 1-10 (9 split into 9a centralizers, 9b Z_A) and the
/// formula regression "R".
std::vector<Criterion> acceptance_suite(Context& ctx);

/// Runs one command end to end. Falsifications are reported as failed
/// claims; BudgetExceeded and I/O errors propagate.
Report run_command(const RunConfig& cfg);

}  // namespace glgu
