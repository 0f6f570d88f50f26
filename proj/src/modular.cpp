#include "glgu/modular.hpp"

#include <stdexcept>
#include <utility>

#include "glgu/rings.hpp"

namespace glgu::modular {

Field::Field(u64 m) : m_(m) {
  if (m < 2 || m >= (u64{1} << 31) || !is_prime(m)) throw std::invalid_argument("F_m needs a prime m < 2^31");
}

u64 Field::reduce(std::int64_t x) const {
  const auto mm = static_cast<std::int64_t>(m_);
  return static_cast<u64>(((x % mm) + mm) % mm);
}

u64 Field::pow(u64 a, u64 e) const {
  u64 r = 1;
  a %= m_;
  for (; e; e >>= 1, a = mul(a, a))
    if (e & 1) r = mul(r, a);
  return r;
}

u64 Field::inv(u64 a) const {
  if (a % m_ == 0) throw std::domain_error("inverse of zero in F_m");
  return pow(a, m_ - 2);
}

u64 Field::primitive_root() const {
  std::vector<u64> primes;
  u64 n = m_ - 1;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    primes.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) primes.push_back(n);
  for (u64 g = 2; g < m_; ++g) {
    bool ok = true;
    for (u64 r : primes) ok = ok && pow(g, (m_ - 1) / r) != 1;
    if (ok) return g;
  }
  return 1;  // m = 2
}

std::vector<std::size_t> Field::rref(Matrix& rows) const {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t ncols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const u64 s = inv(rows[r][c]);
    for (auto& x : rows[r]) x = mul(x, s);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const u64 f = rows[i][c];
      for (std::size_t j = c; j < ncols; ++j) rows[i][j] = sub(rows[i][j], mul(f, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

Matrix Field::kernel(const Matrix& M) const {
  if (M.empty()) return {};
  const std::size_t n = M[0].size();
  Matrix R = M;
  const auto pivots = rref(R);
  std::vector<char> is_pivot(n, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  Matrix basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = neg(R[r][f]);
    basis.push_back(std::move(v));
  }
  rref(basis);
  return basis;
}

Vec Field::charpoly(const Matrix& M) const {
  const std::size_t n = M.size();
  Matrix H = M;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && H[piv][j] == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      std::swap(H[piv], H[j + 1]);
      for (auto& row : H) std::swap(row[piv], row[j + 1]);
    }
    const u64 s = inv(H[j + 1][j]);
    for (std::size_t i = j + 2; i < n; ++i) {
      if (H[i][j] == 0) continue;
      const u64 f = mul(H[i][j], s);
      for (std::size_t c = 0; c < n; ++c) H[i][c] = sub(H[i][c], mul(f, H[j + 1][c]));
      for (std::size_t r = 0; r < n; ++r) H[r][j + 1] = add(H[r][j + 1], mul(f, H[r][i]));
    }
  }
  std::vector<Vec> p(n + 1);
  p[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    Vec next(k + 1, 0);
    for (std::size_t d = 0; d < p[k - 1].size(); ++d) {
      next[d + 1] = add(next[d + 1], p[k - 1][d]);
      next[d] = sub(next[d], mul(H[k - 1][k - 1], p[k - 1][d]));
    }
    u64 t = 1;
    for (std::size_t i = 1; i < k; ++i) {
      t = mul(t, H[k - i][k - i - 1]);
      const u64 f = mul(t, H[k - i - 1][k - 1]);
      if (f == 0) continue;
      for (std::size_t d = 0; d < p[k - i - 1].size(); ++d) next[d] = sub(next[d], mul(f, p[k - i - 1][d]));
    }
    p[k] = std::move(next);
  }
  return p[n];
}

u64 Field::eval(const Vec& poly, u64 x) const {
  u64 r = 0;
  for (std::size_t i = poly.size(); i-- > 0;) r = add(mul(r, x), poly[i]);
  return r;
}

Vec Field::roots(const Vec& poly) const {
  Vec out;
  for (u64 x = 0; x < m_; ++x)
    if (eval(poly, x) == 0) out.push_back(x);
  return out;
}

u64 next_prime_congruent_one(u64 n, u64 lower_bound) {
  u64 m = lower_bound / n * n + 1;
  if (m <= lower_bound) m += n;
  while (!is_prime(m)) m += n;
  return m;
}

u64 ceil_sqrt(u64 n) {
  u64 r = 0;
  while (r * r < n) ++r;
  return r;
}

}  // namespace glgu::modular
