#pragma once

// Exact arithmetic in truncated discrete valuation rings o_l and their
// unramified quadratic extensions O_l = o_l[eps].
//
// Every ring value is stored as a canonical integer code. For the base ring
// the base-q digits of the code are the pi-adic digits of the value:
//   mixed characteristic  o_l = Z/p^l,        code = the residue 0..p^l-1
//   equal characteristic  o_l = F_q[t]/(t^l), code = sum a_k q^k, a_k in F_q
// so truncation, projection, valuation and multiplication by pi are the same
// digit manipulations in both families. An extension element x + y*eps is
// stored as x * |o_l| + y, i.e. ordered lexicographically on (x, y).

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace glgu {

enum class Family { Mixed, Equal };

std::string_view to_string(Family family);
Family parse_family(std::string_view text);

using Code = std::uint32_t;

struct RingDescriptor {
  Family family = Family::Mixed;
  unsigned p = 3;
  unsigned f = 1;
  unsigned ell = 1;
  bool extended = false;
  Code epsilon_sq = 0;  // code in the base ring

  friend bool operator==(const RingDescriptor&, const RingDescriptor&) = default;
};

std::string describe(const RingDescriptor& d);

class RingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {
struct RingData;
}

/// A truncated ring o_l or O_l. Cheap to copy; all state is immutable and shared.
class Ring {
 public:
  static Ring make(Family family, unsigned p, unsigned f, unsigned ell, bool extended);

  const RingDescriptor& descriptor() const;
  Family family() const { return descriptor().family; }
  unsigned p() const { return descriptor().p; }
  unsigned f() const { return descriptor().f; }
  unsigned ell() const { return descriptor().ell; }
  bool extended() const { return descriptor().extended; }

  std::uint64_t q() const;          // residue field size of the base ring
  std::uint64_t size() const;       // q^l or q^{2l}
  std::uint64_t base_size() const;  // q^l

  Ring base() const;
  Ring extension() const;
  Ring at_level(unsigned level) const;

  bool same_ring(const Ring& other) const { return descriptor() == other.descriptor(); }

  Code zero() const { return 0; }
  Code one() const;
  Code from_int(long long value) const;

  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const;
  Code neg(Code a) const;
  Code mul(Code a, Code b) const;
  Code pow(Code a, std::uint64_t e) const;
  bool is_unit(Code a) const;
  /// Throws RingError on a non-unit.
  Code inv(Code a) const;
  std::optional<Code> try_inv(Code a) const;

  /// Largest i <= l with a in pi^i R; valuation(0) = l.
  unsigned valuation(Code a) const;
  /// Keeps the pi-adic digits below `digits`; the result stays in this ring.
  Code truncate(Code a, unsigned digits) const;
  /// rho_{l,level}: the image in at_level(level).
  Code project(Code a, unsigned level) const;
  /// Zero-extension of a code of at_level(from_level) into this ring.
  Code lift(Code a, unsigned from_level) const;
  Code mul_pi_pow(Code a, unsigned i) const;
  /// Exact division by pi^i; requires valuation(a) >= i. The quotient is
  /// returned truncated to l - i digits (it is only defined modulo pi^{l-i}).
  Code div_pi_pow(Code a, unsigned i) const;
  Code residue(Code a) const { return project(a, 1); }

  // Quadratic extension structure. Only valid when extended().
  Code epsilon() const;
  Code epsilon_sq() const;  // as an element of this ring
  Code make(Code re, Code im) const;
  Code embed(Code base_code) const;
  Code re(Code a) const;
  Code im(Code a) const;
  bool in_base(Code a) const;
  Code conj(Code a) const;
  /// z * conj(z), returned as a code of base().
  Code norm(Code a) const;
  std::vector<Code> norm_one_kernel() const;

  /// Membership in (R^x)^2, decided on the residue and lifted by Hensel.
  bool is_square(Code a) const;
  /// A square root when a is the square of a unit.
  std::optional<Code> sqrt(Code a) const;

  /// Residue-field helpers on codes of at_level(1).
  bool residue_is_square(Code residue_code) const;
  /// Absolute trace F_q -> F_p of a base residue code; returns a value in [0, p).
  unsigned residue_trace(Code residue_code) const;

  std::vector<unsigned> digits(Code a) const;
  std::string to_string(Code a) const;

  std::vector<Code> elements() const;
  std::vector<Code> units() const;

 private:
  explicit Ring(std::shared_ptr<const detail::RingData> data) : data_(std::move(data)) {}
  std::shared_ptr<const detail::RingData> data_;
};

/// A ring value bound to its ring; operations across different rings throw.
class RElem {
 public:
  RElem(Ring ring, Code code);

  const Ring& ring() const { return ring_; }
  Code code() const { return code_; }

  friend RElem operator+(const RElem& a, const RElem& b);
  friend RElem operator-(const RElem& a, const RElem& b);
  friend RElem operator*(const RElem& a, const RElem& b);
  RElem operator-() const;
  friend bool operator==(const RElem& a, const RElem& b);

  RElem inv() const;
  bool is_unit() const { return ring_.is_unit(code_); }
  unsigned valuation() const { return ring_.valuation(code_); }
  RElem project(unsigned level) const;
  RElem serre_lift(unsigned target_ell) const;
  RElem conj() const;
  RElem norm() const;

  std::string to_string() const { return ring_.to_string(code_); }

 private:
  Ring ring_;
  Code code_;
};

bool is_prime(std::uint64_t n);

}  // namespace glgu
