#include "steenrod/linalg.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace steenrod {

Matrix Matrix::identity(std::size_t n, Ring ring) {
  Matrix m(n, n, ring);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, ring_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = (*this)(r, c);
  return t;
}

Matrix Matrix::in_ring(Ring ring) const {
  Matrix m(rows_, cols_, ring);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = ring.normalize(data_[i]);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

Matrix Matrix::column_range(std::size_t begin, std::size_t end) const {
  Matrix m(rows_, end - begin, ring_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = begin; c < end; ++c) m.data_[r * m.cols_ + (c - begin)] = (*this)(r, c);
  return m;
}

Matrix Matrix::row_range(std::size_t begin, std::size_t end) const {
  Matrix m(end - begin, cols_, ring_);
  for (std::size_t r = begin; r < end; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.data_[(r - begin) * cols_ + c] = (*this)(r, c);
  return m;
}

Matrix Matrix::vstack(const Matrix& b) const {
  if (rows_ == 0) return b;
  if (b.rows_ == 0) return *this;
  if (b.cols_ != cols_) throw std::invalid_argument("vstack: column mismatch");
  Matrix m(rows_ + b.rows_, cols_, ring_);
  std::copy(data_.begin(), data_.end(), m.data_.begin());
  std::copy(b.data_.begin(), b.data_.end(), m.data_.begin() + data_.size());
  return m;
}

Matrix Matrix::hstack(const Matrix& b) const {
  if (b.rows_ != rows_) throw std::invalid_argument("hstack: row mismatch");
  Matrix m(rows_, cols_ + b.cols_, ring_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m.data_[r * m.cols_ + c] = (*this)(r, c);
    for (std::size_t c = 0; c < b.cols_; ++c) m.data_[r * m.cols_ + cols_ + c] = b(r, c);
  }
  return m;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("apply: size mismatch");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != 0 && v[c] != 0) acc += (*this)(r, c) * v[c];
    out[r] = ring_.normalize(acc);
  }
  return out;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(data_[a * cols_ + c], data_[b * cols_ + c]);
}

void Matrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap(data_[r * cols_ + a], data_[r * cols_ + b]);
}

void Matrix::add_row_multiple(std::size_t target, std::size_t source, const Rational& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    const Rational& s = data_[source * cols_ + c];
    if (s != 0) data_[target * cols_ + c] = ring_.normalize(data_[target * cols_ + c] + factor * s);
  }
}

void Matrix::add_col_multiple(std::size_t target, std::size_t source, const Rational& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    const Rational& s = data_[r * cols_ + source];
    if (s != 0) data_[r * cols_ + target] = ring_.normalize(data_[r * cols_ + target] + factor * s);
  }
}

void Matrix::scale_row(std::size_t r, const Rational& factor) {
  for (std::size_t c = 0; c < cols_; ++c) data_[r * cols_ + c] = ring_.normalize(data_[r * cols_ + c] * factor);
}

void Matrix::scale_col(std::size_t c, const Rational& factor) {
  for (std::size_t r = 0; r < rows_; ++r) data_[r * cols_ + c] = ring_.normalize(data_[r * cols_ + c] * factor);
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix m(a.rows_, b.cols_, a.ring_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) m.data_[i * m.cols_ + j] += x * b(k, j);
    }
  for (auto& v : m.data_) v = m.ring_.normalize(v);
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  Matrix m(a.rows_, a.cols_, a.ring_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) m.data_[i] = a.ring_.normalize(a.data_[i] + b.data_[i]);
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  Matrix m(a.rows_, a.cols_, a.ring_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) m.data_[i] = a.ring_.normalize(a.data_[i] - b.data_[i]);
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<Rational> SmithDecomposition::diagonal() const {
  std::vector<Rational> d;
  for (std::size_t i = 0; i < rank; ++i) d.push_back(D(i, i));
  return d;
}

namespace {

// Finds the nonzero entry of smallest pivot size in the trailing block.
bool find_pivot(const Matrix& m, std::size_t start, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  Rational best = 0;
  for (std::size_t r = start; r < m.rows(); ++r)
    for (std::size_t c = start; c < m.cols(); ++c) {
      if (m(r, c) == 0) continue;
      Rational size = m.ring().pivot_size(m(r, c));
      if (!found || size < best) {
        found = true;
        best = size;
        pr = r;
        pc = c;
        if (size == 1) return true;
      }
    }
  return found;
}

}  // namespace

SmithDecomposition smith_normal_form(const Matrix& a) {
  const Ring& ring = a.ring();
  SmithDecomposition s{a, Matrix::identity(a.rows(), ring), Matrix::identity(a.rows(), ring),
                       Matrix::identity(a.cols(), ring), Matrix::identity(a.cols(), ring), 0};
  Matrix& D = s.D;
  std::size_t t = 0;
  const std::size_t limit = std::min(a.rows(), a.cols());
  // Row operation E on D: D <- E D, U <- E U, U_inv <- U_inv E^{-1}.
  auto row_swap = [&](std::size_t i, std::size_t j) {
    D.swap_rows(i, j);
    s.U.swap_rows(i, j);
    s.U_inv.swap_cols(i, j);
  };
  auto row_add = [&](std::size_t target, std::size_t source, const Rational& f) {
    D.add_row_multiple(target, source, f);
    s.U.add_row_multiple(target, source, f);
    s.U_inv.add_col_multiple(source, target, -f);
  };
  // Column operation E on D: D <- D E, V <- V E, V_inv <- E^{-1} V_inv.
  auto col_swap = [&](std::size_t i, std::size_t j) {
    D.swap_cols(i, j);
    s.V.swap_cols(i, j);
    s.V_inv.swap_rows(i, j);
  };
  auto col_add = [&](std::size_t target, std::size_t source, const Rational& f) {
    D.add_col_multiple(target, source, f);
    s.V.add_col_multiple(target, source, f);
    s.V_inv.add_row_multiple(source, target, -f);
  };
  auto col_scale = [&](std::size_t c, const Rational& unit) {
    D.scale_col(c, unit);
    s.V.scale_col(c, unit);
    s.V_inv.scale_row(c, ring.inverse(unit));
  };

  while (t < limit) {
    std::size_t pr = 0, pc = 0;
    if (!find_pivot(D, t, pr, pc)) break;
    row_swap(t, pr);
    col_swap(t, pc);
    for (;;) {
      bool clean = true;
      for (std::size_t r = t + 1; r < D.rows(); ++r) {
        if (D(r, t) == 0) continue;
        Rational q = ring.quotient(D(r, t), D(t, t));
        row_add(r, t, -q);
        if (D(r, t) != 0) {
          clean = false;
          row_swap(t, r);
        }
      }
      for (std::size_t c = t + 1; c < D.cols(); ++c) {
        if (D(t, c) == 0) continue;
        Rational q = ring.quotient(D(t, c), D(t, t));
        col_add(c, t, -q);
        if (D(t, c) != 0) {
          clean = false;
          col_swap(t, c);
        }
      }
      if (!clean) continue;
      // Enforce divisibility of the remaining block by the pivot.
      bool divides = true;
      if (!ring.is_field()) {
        for (std::size_t r = t + 1; r < D.rows() && divides; ++r)
          for (std::size_t c = t + 1; c < D.cols(); ++c)
            if (D(r, c) != 0 && ring.quotient(D(r, c), D(t, t)) * D(t, t) != D(r, c)) {
              row_add(t, r, 1);
              divides = false;
              break;
            }
      }
      if (divides) break;
    }
    if (ring.pivot_size(D(t, t)) != D(t, t)) {
      // Make the pivot positive (over Z) or one (over a field).
      Rational unit = ring.is_field() ? ring.inverse(D(t, t)) : Rational(-1);
      col_scale(t, unit);
    } else if (ring.is_field() && D(t, t) != 1) {
      col_scale(t, ring.inverse(D(t, t)));
    }
    ++t;
  }
  s.rank = t;
  return s;
}

std::size_t rank(const Matrix& a) { return smith_normal_form(a).rank; }

Matrix kernel_basis(const Matrix& a) {
  SmithDecomposition s = smith_normal_form(a);
  return s.V.column_range(s.rank, a.cols());
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: size mismatch");
  const Ring& ring = a.ring();
  SmithDecomposition s = smith_normal_form(a);
  // D y = U b with x = V y.
  Vector ub = s.U.apply(b);
  Vector y(a.cols(), Rational(0));
  for (std::size_t i = 0; i < ub.size(); ++i) {
    if (i < s.rank) {
      const Rational& d = s.D(i, i);
      Rational q = ring.quotient(ub[i], d);
      if (ring.normalize(q * d) != ring.normalize(ub[i])) return std::nullopt;
      y[i] = q;
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return s.V.apply(y);
}

Rational determinant(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const Ring& ring = a.ring();
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination; exact over Z, and over fields the
  // divisions are field divisions.
  Matrix m = a;
  Rational sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Rational num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m.set(i, j, ring.is_field() ? num * ring.inverse(prev) : Rational(num / prev));
      }
    prev = m(k, k);
  }
  return ring.normalize(sign * m(n - 1, n - 1));
}

bool is_invertible(const Matrix& a) {
  if (a.rows() != a.cols()) return false;
  return a.ring().is_unit(determinant(a));
}

}  // namespace steenrod

namespace steenrod {

std::string to_string(const Matrix& a) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i) out << "; ";
    for (std::size_t j = 0; j < a.cols(); ++j) out << (j ? " " : "") << a(i, j);
  }
  out << "]";
  return out.str();
}

}  // namespace steenrod
