#include "glgu/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "glgu/kernels.hpp"
#include "glgu/modular.hpp"

namespace glgu {

using modular::Field;
using modular::Matrix;
using modular::u64;
using modular::Vec;

// ---- Class data ----

ClassData class_structure(const Group& G, const ClassPartition& P, Exec exec, std::uint64_t budget) {
  const std::uint64_t k = P.count();
  if (k * k * k > budget) throw BudgetExceeded("class structure constants", k * k * k, budget);
  ClassData d;
  d.group_order = G.order();
  d.class_of = P.class_of;
  d.reps = P.reps;
  d.sizes = P.sizes;
  d.identity_class = P.class_of[G.identity()];
  d.inverse_class.resize(k);
  d.square_class.resize(k);
  d.rep_order.resize(k);
  d.power_class.resize(k);
  for (std::size_t c = 0; c < k; ++c) {
    const auto g = P.reps[c];
    d.inverse_class[c] = P.class_of[G.inverse(g)];
    d.square_class[c] = P.class_of[G.mul(g, g)];
    auto x = G.identity();
    do {
      d.power_class[c].push_back(P.class_of[x]);
      x = G.mul(x, g);
    } while (x != G.identity());
    d.rep_order[c] = static_cast<std::uint32_t>(d.power_class[c].size());
    d.exponent = std::lcm(d.exponent, std::uint64_t{d.rep_order[c]});
  }
  d.coefficients = kernels::class_structure(G, P.class_of, P.reps, exec);
  return d;
}

// ---- Dixon ----

namespace {

constexpr unsigned kRandomTries = 6;
constexpr unsigned kMaxPrimes = 8;

std::size_t leading_column(const Vec& v) {
  std::size_t c = 0;
  while (c < v.size() && v[c] == 0) ++c;
  return c;
}

// Eigenspaces of M on the invariant subspace spanned by the RREF rows of V.
// nullopt when M is not diagonalizable over F_m on V.
std::optional<std::vector<Matrix>> eigenspaces(const Field& F, const Matrix& M, const Matrix& V) {
  const std::size_t d = V.size();
  const std::size_t k = M.size();
  std::vector<std::size_t> pivot(d);
  for (std::size_t t = 0; t < d; ++t) pivot[t] = leading_column(V[t]);
  Matrix restricted(d, Vec(d, 0));
  for (std::size_t s = 0; s < d; ++s)
    for (std::size_t t = 0; t < d; ++t) {
      u64 acc = 0;
      const auto& row = M[pivot[t]];
      for (std::size_t c = 0; c < k; ++c) acc = (acc + row[c] * V[s][c]) % F.modulus();
      restricted[t][s] = acc;
    }
  const Vec roots = F.roots(F.charpoly(restricted));
  std::vector<Matrix> spaces;
  std::size_t total = 0;
  for (u64 lambda : roots) {
    Matrix shifted = restricted;
    for (std::size_t t = 0; t < d; ++t) shifted[t][t] = F.sub(shifted[t][t], lambda);
    Matrix coords = F.kernel(shifted);
    Matrix space;
    for (const auto& u : coords) {
      Vec v(k, 0);
      for (std::size_t s = 0; s < d; ++s) {
        if (u[s] == 0) continue;
        for (std::size_t c = 0; c < k; ++c) v[c] = F.add(v[c], F.mul(u[s], V[s][c]));
      }
      space.push_back(std::move(v));
    }
    F.rref(space);
    total += space.size();
    spaces.push_back(std::move(space));
  }
  if (total != d) return std::nullopt;
  return spaces;
}

// Right-multiplication matrix of sum_i r_i K_i on central characters:
// M[j][c] = sum_i r_i a_{ijc}.
Matrix class_sum_combination(const Field& F, const ClassData& data, const Vec& r) {
  const std::size_t k = data.count();
  Matrix M(k, Vec(k, 0));
#pragma omp parallel for schedule(static)
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t c = 0; c < k; ++c) {
      u64 acc = 0;
      for (std::size_t i = 0; i < k; ++i)
        if (r[i]) acc = (acc + r[i] * data.coefficient(i, j, c)) % F.modulus();
      M[j][c] = acc;
    }
  return M;
}

std::optional<CharTable> dixon(const ClassData& data, u64 m, std::uint64_t seed) {
  const Field F(m);
  const std::size_t k = data.count();
  const u64 n = data.group_order;
  std::mt19937_64 rng(seed ^ (m * 0x9E3779B97F4A7C15ULL));
  std::uniform_int_distribution<u64> coin(0, m - 1);

  Matrix whole(k, Vec(k, 0));
  for (std::size_t i = 0; i < k; ++i) whole[i][i] = 1;
  std::vector<Matrix> work{whole};
  std::vector<Vec> lines;
  while (!work.empty()) {
    Matrix V = std::move(work.back());
    work.pop_back();
    if (V.size() == 1) {
      lines.push_back(std::move(V[0]));
      continue;
    }
    bool split = false;
    for (std::size_t attempt = 0; attempt < kRandomTries + k && !split; ++attempt) {
      Vec r(k, 0);
      if (attempt < kRandomTries) {
        for (auto& x : r) x = coin(rng);
      } else {
        r[attempt - kRandomTries] = 1;
      }
      auto spaces = eigenspaces(F, class_sum_combination(F, data, r), V);
      if (!spaces) return std::nullopt;
      if (spaces->size() > 1) {
        for (auto& s : *spaces) work.push_back(std::move(s));
        split = true;
      }
    }
    if (!split) return std::nullopt;
  }
  if (lines.size() != k) return std::nullopt;

  std::vector<u64> inv_size(k);
  for (std::size_t c = 0; c < k; ++c) inv_size[c] = F.inv(data.sizes[c] % m);
  const u64 root_bound = static_cast<u64>(std::sqrt(static_cast<double>(n))) + 1;

  CharTable t;
  t.modulus = m;
  t.exponent = data.exponent;
  t.zeta = F.pow(F.primitive_root(), (m - 1) / data.exponent);
  for (auto& w : lines) {
    const u64 w0 = w[data.identity_class];
    if (w0 == 0) return std::nullopt;
    const u64 s = F.inv(w0);
    for (auto& x : w) x = F.mul(x, s);
    u64 norm = 0;
    for (std::size_t c = 0; c < k; ++c)
      norm = F.add(norm, F.mul(F.mul(w[c], w[data.inverse_class[c]]), inv_size[c]));
    if (norm == 0) return std::nullopt;
    const u64 target = F.mul(n % m, F.inv(norm));
    u64 deg = 0;
    for (u64 x = 1; x <= root_bound && x * x <= n; ++x)
      if (x * x % m == target) deg = x;
    if (deg == 0) return std::nullopt;
    Vec chi(k);
    for (std::size_t c = 0; c < k; ++c) chi[c] = F.mul(F.mul(w[c], deg % m), inv_size[c]);
    t.values.push_back(std::move(chi));
    t.degrees.push_back(deg);
  }

  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  auto is_trivial = [&](std::size_t x) {
    return std::all_of(t.values[x].begin(), t.values[x].end(), [](u64 v) { return v == 1; });
  };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (t.degrees[a] != t.degrees[b]) return t.degrees[a] < t.degrees[b];
    const bool ta = is_trivial(a), tb = is_trivial(b);
    if (ta != tb) return ta;
    return t.values[a] < t.values[b];
  });
  CharTable sorted = t;
  for (std::size_t x = 0; x < k; ++x) {
    sorted.values[x] = t.values[order[x]];
    sorted.degrees[x] = t.degrees[order[x]];
  }
  sorted.real_valued.assign(k, 1);
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t c = 0; c < k; ++c)
      if (sorted.values[x][c] != sorted.values[x][data.inverse_class[c]]) sorted.real_valued[x] = 0;
  sorted.types.assign(k, std::nullopt);
  sorted.tangible.assign(k, std::nullopt);
  return sorted;
}

}  // namespace

CharTable character_table(const ClassData& data, std::uint64_t seed) {
  const u64 e = data.exponent;
  u64 m = modular::next_prime_congruent_one(e, 2 * modular::ceil_sqrt(data.group_order));
  for (unsigned attempt = 1; attempt <= kMaxPrimes; ++attempt) {
    if (auto t = dixon(data, m, seed)) {
      t->primes_tried = attempt;
      if (auto why = orthogonality_failure(*t, data)) throw std::runtime_error("character table: " + *why);
      return std::move(*t);
    }
    m = modular::next_prime_congruent_one(e, m);
  }
  throw std::runtime_error("character table: splitting failed for " + std::to_string(kMaxPrimes) + " primes");
}

std::optional<std::string> orthogonality_failure(const CharTable& table, const ClassData& data) {
  const Field F(table.modulus);
  const std::size_t k = data.count();
  if (table.count() != k) return "character count differs from class count";
  const u64 n = data.group_order % F.modulus();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      u64 s = 0;
      for (std::size_t c = 0; c < k; ++c)
        s = F.add(s, F.mul(data.sizes[c] % F.modulus(),
                           F.mul(table.values[a][c], table.values[b][data.inverse_class[c]])));
      if (s != (a == b ? n : 0))
        return "row orthogonality fails at (" + std::to_string(a) + ", " + std::to_string(b) + ")";
    }
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t c2 = 0; c2 < k; ++c2) {
      u64 s = 0;
      for (std::size_t x = 0; x < k; ++x)
        s = F.add(s, F.mul(table.values[x][c], table.values[x][data.inverse_class[c2]]));
      const u64 want = c == c2 ? F.mul(n, F.inv(data.sizes[c] % F.modulus())) : 0;
      if (s != want) return "column orthogonality fails at (" + std::to_string(c) + ", " + std::to_string(c2) + ")";
    }
  return std::nullopt;
}

void fs_indicators(CharTable& table, const ClassData& data) {
  const Field F(table.modulus);
  const u64 inv_n = F.inv(data.group_order % F.modulus());
  table.fs.assign(table.count(), 0);
  for (std::size_t x = 0; x < table.count(); ++x) {
    u64 s = 0;
    for (std::size_t c = 0; c < data.count(); ++c)
      s = F.add(s, F.mul(data.sizes[c] % F.modulus(), table.values[x][data.square_class[c]]));
    s = F.mul(s, inv_n);
    if (s == 0) {
      table.fs[x] = 0;
    } else if (s == 1) {
      table.fs[x] = 1;
    } else if (s == F.modulus() - 1) {
      table.fs[x] = -1;
    } else {
      throw std::logic_error("indicator of character " + std::to_string(x) + " is not in {-1, 0, 1} mod m");
    }
  }
}

SelfDualCensus self_dual_census(const CharTable& table) {
  if (table.fs.size() != table.count()) throw std::invalid_argument("run fs_indicators first");
  SelfDualCensus s;
  for (std::size_t x = 0; x < table.count(); ++x) {
    s.real_characters += table.real_valued[x] != 0;
    if (table.fs[x] == 1) s.orthogonal_dim += table.degrees[x];
    if (table.fs[x] == -1) s.symplectic_dim += table.degrees[x];
    s.fs_sum += table.fs[x] * static_cast<std::int64_t>(table.degrees[x]);
  }
  return s;
}

std::vector<std::uint64_t> eigenvalue_multiplicities(const CharTable& table, const ClassData& data,
                                                     std::size_t chi, std::size_t c) {
  const Field F(table.modulus);
  const u64 o = data.rep_order[c];
  const u64 zo = F.pow(table.zeta, table.exponent / o);
  const u64 inv_o = F.inv(o);
  std::vector<std::uint64_t> mult(o);
  for (u64 j = 0; j < o; ++j) {
    u64 s = 0;
    const u64 step = F.pow(zo, (o - j) % o);  // zeta_o^{-j}
    u64 z = 1;
    for (u64 t = 0; t < o; ++t, z = F.mul(z, step)) s = F.add(s, F.mul(table.values[chi][data.power_class[c][t]], z));
    mult[j] = F.mul(s, inv_o);
    if (mult[j] > table.degrees[chi]) throw std::logic_error("eigenvalue multiplicity exceeds the degree");
  }
  return mult;
}

std::complex<double> complex_value(const CharTable& table, const ClassData& data, std::size_t chi,
                                   std::size_t c) {
  const auto mult = eigenvalue_multiplicities(table, data, chi, c);
  std::complex<double> v = 0;
  for (std::size_t j = 0; j < mult.size(); ++j)
    if (mult[j]) v += static_cast<double>(mult[j]) * std::polar(1.0, 2 * std::numbers::pi * j / mult.size());
  return v;
}

// ---- Adjoint orbits and restriction ----

std::size_t LieOrbits::index_of(const Mat2& X) const {
  const MatKey key = mat::key(ring, X);
  const auto it = std::lower_bound(keys.begin(), keys.end(), key);
  if (it == keys.end() || *it != key) throw std::logic_error("not an element of the Lie algebra");
  return static_cast<std::size_t>(it - keys.begin());
}

LieOrbits lie_orbits(const Group& G) {
  LieOrbits o{G.ring(), lie_algebra(G.kind(), G.ring()), {}, {}, {}, {}};
  const Ring& R = o.ring;
  for (const auto& X : o.elements) o.keys.push_back(mat::key(R, X));
  constexpr std::uint32_t kNone = ~0U;
  o.orbit_of.assign(o.elements.size(), kNone);
  for (std::size_t s = 0; s < o.elements.size(); ++s) {
    if (o.orbit_of[s] != kNone) continue;
    const auto id = static_cast<std::uint32_t>(o.orbit_rep.size());
    o.orbit_rep.push_back(static_cast<std::uint32_t>(s));
    o.orbit_type.push_back(lie_type(G.kind(), R, o.elements[s]));
    std::vector<std::size_t> queue{s};
    o.orbit_of[s] = id;
    while (!queue.empty()) {
      const std::size_t x = queue.back();
      queue.pop_back();
      for (auto g : G.generators()) {
        const auto y = o.index_of(mat::conjugate(R, G.element(g), o.elements[x], G.element(G.inverse(g))));
        if (o.orbit_of[y] == kNone) {
          o.orbit_of[y] = id;
          queue.push_back(y);
        }
      }
    }
  }
  return o;
}

namespace {

// psi(z) = exp(2 pi i v/p^l) with v from this function.
u64 additive_exponent_base(const Ring& B, Code x) {
  if (B.family() == Family::Mixed) return x;
  u64 top_scale = 1;
  for (unsigned i = 0; i + 1 < B.ell(); ++i) top_scale *= B.p();
  return top_scale * B.residue_trace(B.digits(x).back());
}

u64 additive_exponent(const Ring& R, Code z) {
  u64 pl = 1;
  for (unsigned i = 0; i < R.ell(); ++i) pl *= R.p();
  if (!R.extended()) return additive_exponent_base(R, z) % pl;
  const Ring B = R.base();
  return (additive_exponent_base(B, R.re(z)) + additive_exponent_base(B, R.im(z))) % pl;
}

}  // namespace

std::vector<Restriction> restrict_to_congruence(const CharTable& table, const ClassData& data, const Group& G,
                                                const LieOrbits& orbits, unsigned i) {
  const Ring& R = G.ring();
  const unsigned ell = R.ell();
  if (i == 0 || i >= ell || 2 * i < ell) throw std::invalid_argument("K^i needs 1 <= i < l and 2i >= l");
  if (orbits.ring.ell() != ell - i) throw std::invalid_argument("Lie orbits are at the wrong level");
  const Field F(table.modulus);
  u64 pl = 1;
  for (unsigned s = 0; s < ell; ++s) pl *= R.p();

  const std::size_t n = orbits.elements.size();
  std::vector<Mat2> lifts(n);
  std::vector<std::uint32_t> cls(n);
  for (std::size_t b = 0; b < n; ++b) {
    lifts[b] = mat::lift(R, orbits.elements[b], ell - i);
    const Mat2 k = mat::add(R, mat::identity(R), mat::mul_pi_pow(R, lifts[b], i));
    cls[b] = data.class_of[G.index_of_checked(k)];
  }
  // inv_psi[a][b] = psi_A(I + pi^i B~)^{-1} in F_m.
  std::vector<Vec> inv_psi(n, Vec(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Code z = R.mul_pi_pow(mat::tr(R, mat::mul(R, lifts[a], lifts[b])), i);
      const u64 v = additive_exponent(R, z);
      const u64 g = std::gcd(v, pl);
      const u64 root = pl / g;
      if (table.exponent % root) throw std::logic_error("F_m lacks the roots of unity for psi");
      const u64 e = (table.exponent / root) * (v / g) % table.exponent;
      inv_psi[a][b] = F.pow(table.zeta, (table.exponent - e) % table.exponent);
    }
  const u64 inv_n = F.inv(n % F.modulus());

  std::vector<Restriction> out(table.count());
  for (std::size_t x = 0; x < table.count(); ++x) {
    Restriction& r = out[x];
    r.level = i;
    r.multiplicity.assign(n, 0);
    std::set<std::uint32_t> seen;
    u64 total = 0;
    for (std::size_t a = 0; a < n; ++a) {
      u64 s = 0;
      for (std::size_t b = 0; b < n; ++b) s = F.add(s, F.mul(table.values[x][cls[b]], inv_psi[a][b]));
      s = F.mul(s, inv_n);
      if (s > table.degrees[x]) throw std::logic_error("restriction multiplicity is not an integer in [0, deg]");
      r.multiplicity[a] = s;
      total += s;
      if (s) seen.insert(orbits.orbit_of[a]);
    }
    if (total != table.degrees[x])
      throw std::runtime_error("restriction of character " + std::to_string(x) + " to K^" + std::to_string(i) +
                               " does not decompose into linear characters");
    if (seen.size() != 1)
      throw std::runtime_error("character " + std::to_string(x) + " meets " + std::to_string(seen.size()) +
                               " adjoint orbits on K^" + std::to_string(i));
    r.orbit = *seen.begin();
    r.type = orbits.orbit_type[r.orbit];
  }
  return out;
}

void restriction_typing(CharTable& table, const ClassData& data, const Group& G) {
  const unsigned ell = G.spec().ell;
  if (ell < 2) throw std::invalid_argument("restriction typing needs l >= 2");
  const Group G1 = Group::enumerate(G.spec().at_level(1));
  const LieOrbits orbits = lie_orbits(G1);
  const auto res = restrict_to_congruence(table, data, G, orbits, ell - 1);
  table.types.assign(table.count(), std::nullopt);
  for (std::size_t x = 0; x < table.count(); ++x) table.types[x] = res[x].type;
}

// ---- Centralizers and Z_A ----

std::uint64_t centralizer_order(GroupKind kind, const Ring& R, const Mat2& A) {
  const Code n = static_cast<Code>(R.size());
  std::uint64_t count = 0;
  for (Code x = 0; x < n; ++x)
    for (Code y = 0; y < n; ++y)
      count += is_member(kind, R, mat::add(R, mat::scalar(R, x), mat::scale(R, y, A)));
  return count;
}

std::vector<Code> central_scalars(GroupKind kind, const Ring& R) {
  return kind == GroupKind::GL2 ? R.units() : R.norm_one_kernel();
}

std::vector<Code> za_scalars(GroupKind kind, const Ring& R, const Mat2& A) {
  const unsigned l1 = R.ell() / 2;
  if (l1 == 0) throw std::invalid_argument("Z_A needs l >= 2");
  const Ring R1 = R.at_level(l1);
  if (!mat::is_regular(R1, A)) throw std::invalid_argument("Z_A needs a regular A");
  std::set<Code> dets;
  const Code n1 = static_cast<Code>(R1.size());
  for (Code x = 0; x < n1; ++x)
    for (Code y = 0; y < n1; ++y) {
      const Mat2 C = mat::add(R1, mat::scalar(R1, x), mat::scale(R1, y, A));
      if (is_member(kind, R1, C)) dets.insert(mat::det(R1, C));
    }
  std::vector<Code> out;
  for (Code z : central_scalars(kind, R))
    if (dets.count(R.project(z, l1))) out.push_back(z);
  return out;
}

CentralizerReport centralizer_and_za(GroupKind kind, const Ring& R, const Mat2& A) {
  if (!is_lie_member(kind, R, A)) throw std::invalid_argument("A is not in the Lie algebra");
  if (!mat::is_regular(R, A)) throw std::invalid_argument("centralizer_and_za needs a regular A");
  CentralizerReport r;
  r.type = lie_type(kind, R, A);
  r.centralizer_order = centralizer_order(kind, R, A);
  r.center_order = central_scalars(kind, R).size();
  r.za_order = za_scalars(kind, R, mat::project(R, A, R.ell() / 2)).size();
  r.za_index = r.center_order / r.za_order;
  return r;
}

// ---- Tangibility ----

std::size_t type_slot(OrbitType t) {
  switch (t) {
    case OrbitType::ss: return 0;
    case OrbitType::sns: return 1;
    case OrbitType::cus: return 2;
    default: throw std::invalid_argument("non-regular type has no tangibility slot");
  }
}

std::array<std::uint64_t, 3> tangible_formula(std::uint64_t q, unsigned ell) {
  std::uint64_t q2 = 1;  // q^{l-2}
  for (unsigned i = 2; i < ell; ++i) q2 *= q;
  return {q2 * (q - 1) * (q - 1) / 2, 2 * q2 * q, q2 * (q * q - 1) / 2};
}

TangibilityCensus tangibility_census(CharTable& table, const ClassData& data, const Group& G, bool allow_odd) {
  const unsigned ell = G.spec().ell;
  if (ell != 2 && !(allow_odd && ell == 3)) throw std::invalid_argument("tangibility is implemented for l = 2 (l = 3 on request)");
  if (table.fs.size() != table.count()) throw std::invalid_argument("run fs_indicators first");
  const Field F(table.modulus);
  const unsigned l1 = ell / 2;
  const unsigned l2 = ell - l1;
  const Group G1 = Group::enumerate(G.spec().at_level(l1));
  const Ring& R1 = G1.ring();
  const LieOrbits orbits = lie_orbits(G1);
  const auto res = restrict_to_congruence(table, data, G, orbits, l2);
  const std::size_t zero = orbits.index_of(Mat2{});

  TangibilityCensus census;
  census.ell = ell;
  table.tangible.assign(table.count(), std::nullopt);
  for (std::size_t x = 0; x < table.count(); ++x) {
    const bool self_dual = table.fs[x] != 0;
    if (res[x].type == OrbitType::nreg) {
      if (self_dual) {
        ++census.nonregular_self_dual;
        census.nonregular_self_dual_pulled_back += res[x].multiplicity[zero] == table.degrees[x];
      }
      continue;
    }
    TangibleRecord rec;
    rec.character = static_cast<std::uint32_t>(x);
    rec.orbit_datum = orbits.elements[orbits.orbit_rep[res[x].orbit]];
    rec.type = res[x].type;
    rec.self_dual = self_dual;
    const Mat2& A = rec.orbit_datum;
    for (Group::Index g = 0; g < G1.order() && !rec.t1; ++g) {
      const Mat2 gA = mat::conjugate(R1, G1.element(g), A, G1.element(G1.inverse(g)));
      rec.t1 = mat::add(R1, A, gA) == Mat2{};
    }
    u64 s = 0;
    for (Code z : za_scalars(G.kind(), G.ring(), A))
      s = F.add(s, table.values[x][data.class_of[G.index_of_checked(mat::scalar(G.ring(), z))]]);
    rec.t2 = s != 0;
    table.tangible[x] = rec.tangible();
    if (rec.tangible()) ++census.tangible_by_type[type_slot(rec.type)];
    if (rec.tangible() != self_dual) census.mismatches.push_back(rec.character);
    census.records.push_back(rec);
  }
  return census;
}

}  // namespace glgu
