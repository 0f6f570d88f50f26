#include "glgu/rings.hpp"

#include <algorithm>
#include <sstream>

namespace glgu {

namespace detail {

// Arithmetic of the residue field F_q = F_p[x]/(m(x)); element codes are the
// coefficient vectors read in base p.
struct FiniteField {
  unsigned p = 0;
  unsigned f = 1;
  unsigned q = 0;
  std::vector<unsigned> modulus;  // monic, degree f, low coefficient first
  std::vector<Code> add_table, mul_table, neg_table, inv_table;
  std::vector<unsigned> trace_table;

  Code add(Code a, Code b) const { return add_table[a * q + b]; }
  Code mul(Code a, Code b) const { return mul_table[a * q + b]; }
  Code neg(Code a) const { return neg_table[a]; }
};

namespace {

using Poly = std::vector<unsigned>;  // low coefficient first, over F_p

Poly poly_mul_mod_p(const Poly& a, const Poly& b, unsigned p) {
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return r;
}

Poly monic_from_code(std::uint64_t code, unsigned degree, unsigned p) {
  Poly poly(degree + 1, 0);
  for (unsigned i = 0; i < degree; ++i) {
    poly[i] = static_cast<unsigned>(code % p);
    code /= p;
  }
  poly[degree] = 1;
  return poly;
}

std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

bool is_irreducible(const Poly& poly, unsigned p) {
  const unsigned degree = static_cast<unsigned>(poly.size() - 1);
  // A reducible polynomial of degree f has a monic factor of degree <= f/2;
  // enumerate all products of two monic factors instead of dividing.
  for (unsigned d1 = 1; d1 <= degree / 2; ++d1) {
    const unsigned d2 = degree - d1;
    for (std::uint64_t c1 = 0; c1 < ipow(p, d1); ++c1) {
      const Poly g = monic_from_code(c1, d1, p);
      for (std::uint64_t c2 = 0; c2 < ipow(p, d2); ++c2) {
        if (poly_mul_mod_p(g, monic_from_code(c2, d2, p), p) == poly) return false;
      }
    }
  }
  return true;
}

Poly reduce_mod(Poly r, const Poly& modulus, unsigned p) {
  const std::size_t degree = modulus.size() - 1;
  for (std::size_t k = r.size(); k-- > degree;) {
    const unsigned c = r[k];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= degree; ++j) {
      r[k - degree + j] = (r[k - degree + j] + p - (c * modulus[j]) % p) % p;
    }
  }
  r.resize(degree);
  return r;
}

std::shared_ptr<const FiniteField> build_field(unsigned p, unsigned f) {
  auto field = std::make_shared<FiniteField>();
  field->p = p;
  field->f = f;
  field->q = static_cast<unsigned>(ipow(p, f));
  const unsigned q = field->q;
  if (f == 1) {
    field->modulus = {0, 1};
  } else {
    for (std::uint64_t c = 0;; ++c) {
      Poly candidate = monic_from_code(c, f, p);
      if (is_irreducible(candidate, p)) {
        field->modulus = std::move(candidate);
        break;
      }
    }
  }
  auto to_poly = [&](Code c) {
    Poly poly(f, 0);
    for (unsigned i = 0; i < f; ++i) {
      poly[i] = c % p;
      c /= p;
    }
    return poly;
  };
  auto to_code = [&](const Poly& poly) {
    Code c = 0;
    for (std::size_t i = poly.size(); i-- > 0;) c = c * p + poly[i];
    return c;
  };
  field->add_table.resize(std::size_t{q} * q);
  field->mul_table.resize(std::size_t{q} * q);
  field->neg_table.resize(q);
  field->inv_table.assign(q, 0);
  field->trace_table.resize(q);
  for (Code a = 0; a < q; ++a) {
    const Poly pa = to_poly(a);
    Poly na(f);
    for (unsigned i = 0; i < f; ++i) na[i] = (p - pa[i]) % p;
    field->neg_table[a] = to_code(na);
    for (Code b = 0; b < q; ++b) {
      const Poly pb = to_poly(b);
      Poly sum(f);
      for (unsigned i = 0; i < f; ++i) sum[i] = (pa[i] + pb[i]) % p;
      field->add_table[a * q + b] = to_code(sum);
      field->mul_table[a * q + b] =
          f == 1 ? static_cast<Code>((std::uint64_t{a} * b) % p)
                 : to_code(reduce_mod(poly_mul_mod_p(pa, pb, p), field->modulus, p));
    }
  }
  for (Code a = 1; a < q; ++a) {
    for (Code b = 1; b < q; ++b) {
      if (field->mul(a, b) == 1) {
        field->inv_table[a] = b;
        break;
      }
    }
  }
  for (Code a = 0; a < q; ++a) {
    // Tr(a) = a + a^p + ... + a^{p^{f-1}} lies in the prime field.
    Code power = a;
    Code trace = 0;
    for (unsigned j = 0; j < f; ++j) {
      trace = field->add(trace, power);
      Code next = 1;
      for (unsigned k = 0; k < p; ++k) next = field->mul(next, power);
      power = next;
    }
    field->trace_table[a] = trace;
  }
  return field;
}

}  // namespace

struct RingData {
  RingDescriptor desc;
  std::uint64_t q = 0;
  std::uint64_t base_size = 0;
  std::uint64_t size = 0;
  std::vector<std::uint64_t> qpow;
  std::shared_ptr<const FiniteField> field;  // equal characteristic only
  std::vector<Code> base_mul_table;          // equal characteristic, small rings
  std::vector<bool> residue_square;          // indexed by residue code of this ring
  std::shared_ptr<const RingData> base;      // the base ring data when extended

  // ---- base-ring primitives (operate on base codes) ----
  Code badd(Code a, Code b) const {
    if (desc.family == Family::Mixed) return static_cast<Code>((std::uint64_t{a} + b) % base_size);
    Code r = 0;
    for (unsigned k = desc.ell; k-- > 0;) {
      r = static_cast<Code>(r * q + field->add(digit(a, k), digit(b, k)));
    }
    return r;
  }
  Code bneg(Code a) const {
    if (desc.family == Family::Mixed) return static_cast<Code>((base_size - a) % base_size);
    Code r = 0;
    for (unsigned k = desc.ell; k-- > 0;) r = static_cast<Code>(r * q + field->neg(digit(a, k)));
    return r;
  }
  Code bmul(Code a, Code b) const {
    if (desc.family == Family::Mixed) return static_cast<Code>((std::uint64_t{a} * b) % base_size);
    if (!base_mul_table.empty()) return base_mul_table[std::uint64_t{a} * base_size + b];
    return bmul_slow(a, b);
  }
  Code bmul_slow(Code a, Code b) const {
    const unsigned ell = desc.ell;
    std::vector<Code> r(ell, 0);
    for (unsigned i = 0; i < ell; ++i) {
      const Code ai = digit(a, i);
      if (ai == 0) continue;
      for (unsigned j = 0; i + j < ell; ++j) {
        r[i + j] = field->add(r[i + j], field->mul(ai, digit(b, j)));
      }
    }
    Code out = 0;
    for (unsigned k = ell; k-- > 0;) out = static_cast<Code>(out * q + r[k]);
    return out;
  }
  Code digit(Code a, unsigned k) const { return static_cast<Code>((a / qpow[k]) % q); }
  unsigned bval(Code a) const {
    unsigned v = 0;
    while (v < desc.ell && digit(a, v) == 0) ++v;
    return v;
  }
};

}  // namespace detail

namespace {

using detail::RingData;

std::uint64_t ipow64(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

std::shared_ptr<const RingData> build_base(Family family, unsigned p, unsigned f, unsigned ell) {
  if (p % 2 == 0 || !is_prime(p)) throw RingError("p must be an odd prime, got " + std::to_string(p));
  if (f == 0) throw RingError("residue degree f must be >= 1");
  if (family == Family::Mixed && f != 1) throw RingError("mixed characteristic requires f = 1");
  if (ell == 0) throw RingError("truncation level must be >= 1");
  auto data = std::make_shared<RingData>();
  data->desc.family = family;
  data->desc.p = p;
  data->desc.f = f;
  data->desc.ell = ell;
  data->desc.extended = false;
  data->q = ipow64(p, f);
  long double approx = 1;
  for (unsigned i = 0; i < 2 * ell; ++i) approx *= static_cast<long double>(data->q);
  if (approx > 4294967295.0L) throw RingError("ring too large for 32-bit codes");
  data->base_size = ipow64(data->q, ell);
  data->size = data->base_size;
  data->qpow.resize(ell + 1);
  for (unsigned i = 0; i <= ell; ++i) data->qpow[i] = ipow64(data->q, i);
  if (family == Family::Equal) {
    data->field = detail::build_field(p, f);
    if (data->base_size <= 1024) {
      data->base_mul_table.resize(data->base_size * data->base_size);
      for (Code a = 0; a < data->base_size; ++a)
        for (Code b = 0; b < data->base_size; ++b)
          data->base_mul_table[std::uint64_t{a} * data->base_size + b] = data->bmul_slow(a, b);
    }
  }
  // Squares in the residue field F_q: residue codes are base digits.
  data->residue_square.assign(data->q, false);
  for (Code r = 1; r < data->q; ++r) {
    const Code sq = data->bmul(r, r) % static_cast<Code>(data->q);
    data->residue_square[sq] = true;
  }
  // Least unit (in code order) whose residue is a nonsquare.
  for (Code c = 1; c < data->base_size; ++c) {
    const Code r = c % static_cast<Code>(data->q);
    if (r != 0 && !data->residue_square[r]) {
      data->desc.epsilon_sq = c;
      break;
    }
  }
  return data;
}

std::shared_ptr<const RingData> build_extension(std::shared_ptr<const RingData> base) {
  auto data = std::make_shared<RingData>(*base);
  data->desc.extended = true;
  data->size = base->base_size * base->base_size;
  data->base = base;
  data->base_mul_table.clear();
  // Residue codes of O_1 are x * q + y for x + y*eps over F_q.
  const std::uint64_t q = base->q;
  const Code e = static_cast<Code>(base->desc.epsilon_sq % q);
  data->residue_square.assign(q * q, false);
  auto fmul = [&](Code a, Code b) { return base->bmul(a, b) % static_cast<Code>(q); };
  auto fadd = [&](Code a, Code b) { return base->badd(a, b) % static_cast<Code>(q); };
  for (Code x = 0; x < q; ++x) {
    for (Code y = 0; y < q; ++y) {
      if (x == 0 && y == 0) continue;
      const Code re = fadd(fmul(x, x), fmul(fmul(y, y), e));
      const Code im = fadd(fmul(x, y), fmul(x, y));
      data->residue_square[re * q + im] = true;
    }
  }
  return data;
}

}  // namespace

std::string_view to_string(Family family) { return family == Family::Mixed ? "mixed" : "equal"; }

Family parse_family(std::string_view text) {
  if (text == "mixed") return Family::Mixed;
  if (text == "equal") return Family::Equal;
  throw RingError("unknown ring family '" + std::string(text) + "' (expected mixed|equal)");
}

std::string describe(const RingDescriptor& d) {
  std::ostringstream os;
  os << to_string(d.family) << " p=" << d.p << " f=" << d.f << " ell=" << d.ell
     << (d.extended ? " extended" : " base") << " eps2=" << d.epsilon_sq;
  return os.str();
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Ring Ring::make(Family family, unsigned p, unsigned f, unsigned ell, bool extended) {
  auto base = build_base(family, p, f, ell);
  if (!extended) return Ring(base);
  return Ring(build_extension(base));
}

const RingDescriptor& Ring::descriptor() const { return data_->desc; }
std::uint64_t Ring::q() const { return data_->q; }
std::uint64_t Ring::size() const { return data_->size; }
std::uint64_t Ring::base_size() const { return data_->base_size; }

Ring Ring::base() const { return extended() ? Ring(data_->base) : *this; }
Ring Ring::extension() const { return extended() ? *this : Ring(build_extension(data_)); }

Ring Ring::at_level(unsigned level) const {
  if (level == ell()) return *this;
  return make(family(), p(), f(), level, extended());
}

Code Ring::one() const { return extended() ? static_cast<Code>(data_->base_size) : 1; }

Code Ring::from_int(long long value) const {
  const auto n = static_cast<long long>(data_->base_size);
  Code base_code = 0;
  if (family() == Family::Mixed) {
    base_code = static_cast<Code>(((value % n) + n) % n);
  } else {
    // The prime field sits in F_q as the constants 0..p-1.
    const long long pp = p();
    base_code = static_cast<Code>(((value % pp) + pp) % pp);
  }
  return extended() ? embed(base_code) : base_code;
}

Code Ring::add(Code a, Code b) const {
  const auto& d = *data_;
  if (!d.desc.extended) return d.badd(a, b);
  const auto& B = *d.base;
  const Code n = static_cast<Code>(d.base_size);
  return B.badd(a / n, b / n) * n + B.badd(a % n, b % n);
}

Code Ring::neg(Code a) const {
  const auto& d = *data_;
  if (!d.desc.extended) return d.bneg(a);
  const auto& B = *d.base;
  const Code n = static_cast<Code>(d.base_size);
  return B.bneg(a / n) * n + B.bneg(a % n);
}

Code Ring::sub(Code a, Code b) const { return add(a, neg(b)); }

Code Ring::mul(Code a, Code b) const {
  const auto& d = *data_;
  if (!d.desc.extended) return d.bmul(a, b);
  const auto& B = *d.base;
  const Code n = static_cast<Code>(d.base_size);
  const Code x1 = a / n, y1 = a % n, x2 = b / n, y2 = b % n;
  const Code re = B.badd(B.bmul(x1, x2), B.bmul(B.bmul(y1, y2), d.desc.epsilon_sq));
  const Code im = B.badd(B.bmul(x1, y2), B.bmul(x2, y1));
  return re * n + im;
}

Code Ring::pow(Code a, std::uint64_t e) const {
  Code result = one();
  while (e > 0) {
    if (e & 1U) result = mul(result, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return result;
}

bool Ring::is_unit(Code a) const { return residue(a) != 0; }

std::optional<Code> Ring::try_inv(Code a) const {
  if (!is_unit(a)) return std::nullopt;
  const auto& d = *data_;
  if (d.desc.extended) {
    const Ring b = base();
    const Code n_inv = b.inv(norm(a));
    return mul(conj(a), embed(n_inv));
  }
  // Newton iteration x <- x(2 - a x) from the residue inverse doubles precision.
  const Code r = a % static_cast<Code>(d.q);
  Code x = 0;
  if (d.desc.family == Family::Mixed) {
    for (Code c = 1; c < d.q; ++c)
      if ((std::uint64_t{c} * r) % d.q == 1) x = c;
  } else {
    x = d.field->inv_table[r];
  }
  const Code two = from_int(2);
  for (unsigned precision = 1; precision < d.desc.ell; precision *= 2) {
    x = mul(x, sub(two, mul(a, x)));
  }
  return x;
}

Code Ring::inv(Code a) const {
  auto r = try_inv(a);
  if (!r) throw RingError("inverse of non-unit " + to_string(a));
  return *r;
}

unsigned Ring::valuation(Code a) const {
  const auto& d = *data_;
  if (!d.desc.extended) return d.bval(a);
  const Code n = static_cast<Code>(d.base_size);
  return std::min(d.bval(a / n), d.bval(a % n));
}

Code Ring::truncate(Code a, unsigned digits) const {
  const auto& d = *data_;
  if (digits >= d.desc.ell) return a;
  const auto m = static_cast<Code>(d.qpow[digits]);
  if (!d.desc.extended) return a % m;
  const Code n = static_cast<Code>(d.base_size);
  return ((a / n) % m) * n + (a % n) % m;
}

Code Ring::project(Code a, unsigned level) const {
  const auto& d = *data_;
  if (level > d.desc.ell) throw RingError("projection to a level above the ring level");
  if (level == 0) throw RingError("projection to level 0");
  const auto m = static_cast<Code>(d.qpow[level]);
  if (!d.desc.extended) return a % m;
  const Code n = static_cast<Code>(d.base_size);
  return ((a / n) % m) * m + (a % n) % m;
}

Code Ring::lift(Code a, unsigned from_level) const {
  const auto& d = *data_;
  if (from_level > d.desc.ell) throw RingError("lift from a level above the ring level");
  if (!d.desc.extended) return a;
  const auto m = static_cast<Code>(d.qpow[from_level]);
  const Code n = static_cast<Code>(d.base_size);
  return (a / m) * n + a % m;
}

Code Ring::mul_pi_pow(Code a, unsigned i) const {
  const auto& d = *data_;
  if (i >= d.desc.ell) return 0;
  const std::uint64_t s = d.qpow[i];
  const std::uint64_t n = d.base_size;
  if (!d.desc.extended) return static_cast<Code>((a * s) % n);
  return static_cast<Code>((((a / n) * s) % n) * n + ((a % n) * s) % n);
}

Code Ring::div_pi_pow(Code a, unsigned i) const {
  if (valuation(a) < i) throw RingError("division by pi^i of an element of smaller valuation");
  const auto& d = *data_;
  if (i >= d.desc.ell) return 0;
  const auto s = static_cast<Code>(d.qpow[i]);
  if (!d.desc.extended) return a / s;
  const Code n = static_cast<Code>(d.base_size);
  return ((a / n) / s) * n + (a % n) / s;
}

Code Ring::epsilon() const {
  if (!extended()) throw RingError("epsilon requires the extension ring");
  return 1;  // x = 0, y = 1
}

Code Ring::epsilon_sq() const {
  return extended() ? embed(descriptor().epsilon_sq) : descriptor().epsilon_sq;
}

Code Ring::make(Code re_part, Code im_part) const {
  if (!extended()) throw RingError("make(x, y) requires the extension ring");
  return re_part * static_cast<Code>(data_->base_size) + im_part;
}

Code Ring::embed(Code base_code) const {
  if (!extended()) return base_code;
  return base_code * static_cast<Code>(data_->base_size);
}

Code Ring::re(Code a) const {
  if (!extended()) return a;
  return a / static_cast<Code>(data_->base_size);
}

Code Ring::im(Code a) const {
  if (!extended()) return 0;
  return a % static_cast<Code>(data_->base_size);
}

bool Ring::in_base(Code a) const { return im(a) == 0; }

Code Ring::conj(Code a) const {
  if (!extended()) throw RingError("Galois conjugation requires the extension ring");
  const Code n = static_cast<Code>(data_->base_size);
  return (a / n) * n + data_->base->bneg(a % n);
}

Code Ring::norm(Code a) const {
  if (!extended()) throw RingError("norm requires the extension ring");
  return re(mul(a, conj(a)));
}

std::vector<Code> Ring::norm_one_kernel() const {
  if (!extended()) throw RingError("norm_one_kernel requires the extension ring");
  std::vector<Code> out;
  for (Code z = 0; z < data_->size; ++z)
    if (norm(z) == 1) out.push_back(z);
  return out;
}

bool Ring::residue_is_square(Code residue_code) const {
  return residue_code < data_->residue_square.size() && data_->residue_square[residue_code];
}

unsigned Ring::residue_trace(Code residue_code) const {
  const auto& d = *data_;
  const Code r = static_cast<Code>(residue_code % d.q);
  if (d.desc.family == Family::Mixed) return r;
  return d.field->trace_table[r];
}

bool Ring::is_square(Code a) const { return is_unit(a) && residue_is_square(residue(a)); }

std::optional<Code> Ring::sqrt(Code a) const {
  if (!is_square(a)) return std::nullopt;
  const Ring level1 = at_level(1);
  const Code r = residue(a);
  std::optional<Code> root;
  for (Code c = 1; c < level1.size(); ++c) {
    if (level1.mul(c, c) == r) {
      root = c;
      break;
    }
  }
  Code x = lift(*root, 1);
  const Code two = from_int(2);
  for (unsigned precision = 1; precision < ell(); precision *= 2) {
    x = sub(x, mul(sub(mul(x, x), a), inv(mul(two, x))));
  }
  return std::min(x, neg(x));
}

std::vector<unsigned> Ring::digits(Code a) const {
  const auto& d = *data_;
  std::vector<unsigned> out;
  auto push = [&](Code c) {
    for (unsigned k = 0; k < d.desc.ell; ++k) out.push_back(d.digit(c, k));
  };
  if (!d.desc.extended) {
    push(a);
  } else {
    push(re(a));
    push(im(a));
  }
  return out;
}

std::string Ring::to_string(Code a) const {
  auto base_str = [&](Code c) {
    if (family() == Family::Mixed) return std::to_string(c);
    std::string s = "[";
    for (unsigned k = 0; k < ell(); ++k) {
      if (k) s += ' ';
      s += std::to_string(data_->digit(c, k));
    }
    return s + "]";
  };
  if (!extended()) return base_str(a);
  return base_str(re(a)) + "+" + base_str(im(a)) + "e";
}

std::vector<Code> Ring::elements() const {
  std::vector<Code> out(data_->size);
  for (Code c = 0; c < data_->size; ++c) out[c] = c;
  return out;
}

std::vector<Code> Ring::units() const {
  std::vector<Code> out;
  for (Code c = 0; c < data_->size; ++c)
    if (is_unit(c)) out.push_back(c);
  return out;
}

// ---- RElem ----

namespace {
void require_same(const RElem& a, const RElem& b) {
  if (!a.ring().same_ring(b.ring())) throw RingError("operands live in different rings");
}
}  // namespace

RElem::RElem(Ring ring, Code code) : ring_(std::move(ring)), code_(code) {
  if (code_ >= ring_.size()) throw RingError("code out of range for ring");
}

RElem operator+(const RElem& a, const RElem& b) {
  require_same(a, b);
  return RElem(a.ring_, a.ring_.add(a.code_, b.code_));
}

RElem operator-(const RElem& a, const RElem& b) {
  require_same(a, b);
  return RElem(a.ring_, a.ring_.sub(a.code_, b.code_));
}

RElem operator*(const RElem& a, const RElem& b) {
  require_same(a, b);
  return RElem(a.ring_, a.ring_.mul(a.code_, b.code_));
}

RElem RElem::operator-() const { return RElem(ring_, ring_.neg(code_)); }

bool operator==(const RElem& a, const RElem& b) {
  require_same(a, b);
  return a.code_ == b.code_;
}

RElem RElem::inv() const { return RElem(ring_, ring_.inv(code_)); }

RElem RElem::project(unsigned level) const {
  return RElem(ring_.at_level(level), ring_.project(code_, level));
}

RElem RElem::serre_lift(unsigned target_ell) const {
  if (target_ell < ring_.ell()) throw RingError("serre_lift target below the current level");
  const Ring target = ring_.at_level(target_ell);
  return RElem(target, target.lift(code_, ring_.ell()));
}

RElem RElem::conj() const { return RElem(ring_, ring_.conj(code_)); }

RElem RElem::norm() const { return RElem(ring_.base(), ring_.norm(code_)); }

}  // namespace glgu
