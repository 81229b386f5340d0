#include "frames/field.hpp"

#include <string>
#include <utility>

#include "frames/errors.hpp"

namespace frames {

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) result = mulmod(result, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return result;
}

void require_same_length(const Vector& v, const Vector& w) {
  if (v.size() != w.size()) {
    throw InvalidArgument("vector length mismatch: " + std::to_string(v.size()) + " vs " +
                          std::to_string(w.size()));
  }
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(const PrimeField& f, Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
    }
    const Scalar inv = f.inv(m.at(row, col));
    for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) = f.mul(m.at(row, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      const Scalar factor = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(row, j)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

bool is_prime(std::uint64_t x) noexcept {
  if (x < 2) return false;
  for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (x % small == 0) return x == small;
  }
  std::uint64_t d = x - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t y = powmod(a, d, x);
    if (y == 1 || y == x - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      y = mulmod(y, y, x);
      if (y == x - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t modulus) : p_(modulus), nu_(0) {
  if (modulus >= (std::uint64_t{1} << 63)) throw InvalidArgument("modulus must be below 2^63");
  if (!is_prime(modulus)) throw InvalidArgument("modulus " + std::to_string(modulus) + " is not prime");
  if (modulus % 4 != 1) {
    throw InvalidArgument("modulus " + std::to_string(modulus) + " is not 1 mod 4; -1 has no square root");
  }
  std::uint64_t g = 2;
  while (powmod(g, (p_ - 1) / 2, p_) != p_ - 1) ++g;
  const std::uint64_t r = powmod(g, (p_ - 1) / 4, p_);
  nu_ = std::min(r, p_ - r);
}

Scalar PrimeField::add(Scalar a, Scalar b) const noexcept {
  const Scalar s = a + b;
  return s >= p_ ? s - p_ : s;
}

Scalar PrimeField::sub(Scalar a, Scalar b) const noexcept { return a >= b ? a - b : a + (p_ - b); }

Scalar PrimeField::mul(Scalar a, Scalar b) const noexcept { return mulmod(a, b, p_); }

Scalar PrimeField::neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }

Scalar PrimeField::pow(Scalar a, std::uint64_t e) const noexcept { return powmod(a, e, p_); }

Scalar PrimeField::inv(Scalar a) const {
  if (a % p_ == 0) throw DomainError("inverse of zero");
  return powmod(a, p_ - 2, p_);
}

Scalar PrimeField::from_int(Int v) const noexcept {
  const auto p = static_cast<Int>(p_);
  Int r = v % p;
  if (r < 0) r += p;
  return static_cast<Scalar>(r);
}

Int PrimeField::to_signed(Scalar a) const noexcept {
  return a > p_ / 2 ? -static_cast<Int>(p_ - a) : static_cast<Int>(a);
}

bool PrimeField::is_square(Scalar a) const noexcept {
  return a == 0 || powmod(a, (p_ - 1) / 2, p_) == 1;
}

std::optional<Scalar> PrimeField::sqrt(Scalar a) const {
  a %= p_;
  if (a == 0) return Scalar{0};
  if (!is_square(a)) return std::nullopt;
  std::uint64_t q = p_ - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  Scalar z = 2;
  while (is_square(z)) ++z;
  Scalar c = pow(z, q);
  Scalar t = pow(a, q);
  Scalar r = pow(a, (q + 1) / 2);
  int m = s;
  while (t != 1) {
    int i = 0;
    Scalar t2 = t;
    while (t2 != 1) {
      t2 = mul(t2, t2);
      ++i;
    }
    Scalar b = c;
    for (int k = 0; k < m - i - 1; ++k) b = mul(b, b);
    r = mul(r, b);
    c = mul(b, b);
    t = mul(t, c);
    m = i;
  }
  return std::min(r, p_ - r);
}

Matrix Matrix::identity(std::size_t k) {
  Matrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) m.at(i, i) = 1;
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

void Matrix::set_column(std::size_t j, const Vector& v) {
  if (v.size() != rows_) throw InvalidArgument("column length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool Matrix::is_zero() const noexcept {
  for (Scalar x : data_)
    if (x != 0) return false;
  return true;
}

Scalar bilinear(const PrimeField& f, const Vector& v, const Vector& w) {
  require_same_length(v, w);
  Scalar s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s = f.add(s, f.mul(v[i], w[i]));
  return s;
}

Matrix gram(const PrimeField& f, const Matrix& a) { return multiply(f, a.transpose(), a); }

Matrix multiply(const PrimeField& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("matrix shape mismatch in product");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar x = a.at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) = f.add(c.at(i, j), f.mul(x, b.at(k, j)));
    }
  }
  return c;
}

Matrix scale(const PrimeField& f, const Matrix& a, Scalar s) {
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = f.mul(a.at(i, j), s);
  return c;
}

std::size_t rank(const PrimeField& f, Matrix m) { return rref(f, m).size(); }

Matrix nullspace(const PrimeField& f, const Matrix& m) {
  Matrix r = m;
  const auto pivots = rref(f, r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Matrix basis(m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    basis.at(free_cols[k], k) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis.at(pivots[i], k) = f.neg(r.at(i, free_cols[k]));
  }
  return basis;
}

std::optional<Matrix> inverse(const PrimeField& f, const Matrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("inverse of a non-square matrix");
  const std::size_t k = m.rows();
  Matrix aug = hstack(m, Matrix::identity(k));
  const auto pivots = rref(f, aug);
  if (pivots.size() < k || (k > 0 && pivots[k - 1] != k - 1)) return std::nullopt;
  Matrix inv(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) inv.at(i, j) = aug.at(i, k + j);
  return inv;
}

Matrix select_columns(const Matrix& a, const std::vector<std::size_t>& cols) {
  Matrix s(a.rows(), cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k) s.set_column(k, a.column(cols[k]));
  return s;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw InvalidArgument("row count mismatch in hstack");
  Matrix c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, a.cols() + j) = b.at(i, j);
  }
  return c;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw InvalidArgument("column count mismatch in vstack");
  Matrix c(a.rows() + b.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) c.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i) c.at(a.rows() + i, j) = b.at(i, j);
  }
  return c;
}

FrameInvariants frame_invariants(const PrimeField& f, const Matrix& a) {
  FrameInvariants inv;
  inv.rank = static_cast<Int>(rank(f, a));
  const Matrix g = gram(f, a);
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (i != j && g.at(i, j) != 0) return inv;
  inv.in_variety = true;

  std::vector<std::size_t> isotropic;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    (g.at(j, j) != 0 ? inv.anisotropic_columns : isotropic).push_back(j);
  }
  inv.rk_ani = static_cast<Int>(inv.anisotropic_columns.size());
  inv.rk_iso = static_cast<Int>(rank(f, select_columns(a, isotropic)));
  if (inv.rk_ani + inv.rk_iso != inv.rank || inv.rk_ani + 2 * inv.rk_iso > static_cast<Int>(a.rows())) {
    throw std::logic_error("frame invariants violate rank identities");
  }
  return inv;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("empty range");
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = engine_();
    if (x >= threshold) return x % bound;
  }
}

Vector random_vector(const PrimeField& f, Rng& rng, std::size_t len) {
  Vector v(len);
  for (auto& x : v) x = rng.uniform(f);
  return v;
}

Matrix random_matrix(const PrimeField& f, Rng& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rng.uniform(f);
  return m;
}

Matrix random_isometry(const PrimeField& f, Rng& rng, std::size_t d) {
  Matrix q = Matrix::identity(d);
  for (std::size_t step = 0; step < d; ++step) {
    Vector v;
    Scalar norm = 0;
    do {
      v = random_vector(f, rng, d);
      norm = bilinear(f, v, v);
    } while (norm == 0);
    const Scalar c = f.mul(2, f.inv(norm));
    Matrix h = Matrix::identity(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) h.at(i, j) = f.sub(h.at(i, j), f.mul(c, f.mul(v[i], v[j])));
    q = multiply(f, h, q);
  }
  return q;
}

}  // namespace frames
