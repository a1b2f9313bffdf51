#include "minctrl/rational_matrix.hpp"

#include <algorithm>
#include <string>

#include "minctrl/error.hpp"

namespace minctrl {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
  if (data_.size() != rows * cols) {
    throw InvalidInput("rational matrix data has " + std::to_string(data_.size()) +
                       " entries, expected " + std::to_string(rows * cols));
  }
  for (auto& q : data_) {
    if (q.get_den() == 0) throw InvalidInput("rational entry with zero denominator");
    q.canonicalize();
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

RationalMatrix RationalMatrix::diagonal(std::span<const Rational> d) {
  RationalMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.set(i, i, d[i]);
  return m;
}

RationalMatrix RationalMatrix::from_rows(std::span<const RationalVector> rows) {
  if (rows.empty()) return {};
  const std::size_t cols = rows.front().size();
  std::vector<Rational> data;
  data.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw InvalidInput("ragged rows");
    data.insert(data.end(), r.begin(), r.end());
  }
  return RationalMatrix(rows.size(), cols, std::move(data));
}

RationalMatrix RationalMatrix::from_dense(const DenseMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out.data_[r * out.cols_ + c] = Rational(m(r, c));
  }
  return out;
}

void RationalMatrix::set(std::size_t r, std::size_t c, Rational v) {
  v.canonicalize();
  data_[r * cols_ + c] = std::move(v);
}

RationalVector RationalMatrix::row(std::size_t r) const {
  return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RationalVector RationalMatrix::column(std::size_t c) const {
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = (*this)(r, c);
  }
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InvalidInput("matrix product dimension mismatch");
  RationalMatrix out(rows_, rhs.cols_);
  Rational acc;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& lhs = (*this)(r, k);
      if (sgn(lhs) == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        const Rational& x = rhs(k, c);
        if (sgn(x) == 0) continue;
        acc = lhs * x;
        out.data_[r * rhs.cols_ + c] += acc;
      }
    }
  }
  return out;
}

RationalVector RationalMatrix::operator*(std::span<const Rational> v) const {
  if (cols_ != v.size()) throw InvalidInput("matrix-vector dimension mismatch");
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (sgn(v[c]) != 0 && sgn((*this)(r, c)) != 0) out[r] += (*this)(r, c) * v[c];
    }
  }
  return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InvalidInput("matrix sum dimension mismatch");
  RationalMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw InvalidInput("matrix difference dimension mismatch");
  }
  RationalMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

RationalMatrix RationalMatrix::inverse() const {
  if (!is_square()) throw InvalidInput("inverse of a non-square matrix");
  const std::size_t n = rows_;
  RationalMatrix work = *this;
  RationalMatrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(work(pivot, col)) == 0) ++pivot;
    if (pivot == n) throw InvalidInput("matrix is singular");
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(work.data_[pivot * n + c], work.data_[col * n + c]);
        std::swap(inv.data_[pivot * n + c], inv.data_[col * n + c]);
      }
    }
    const Rational scale = 1 / work(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      work.data_[col * n + c] *= scale;
      inv.data_[col * n + c] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(work(r, col)) == 0) continue;
      const Rational f = work(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        if (sgn(work(col, c)) != 0) work.data_[r * n + c] -= f * work(col, c);
        if (sgn(inv(col, c)) != 0) inv.data_[r * n + c] -= f * inv(col, c);
      }
    }
  }
  return inv;
}

bool RationalMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if ((*this)(r, c) != (*this)(c, r)) return false;
    }
  }
  return true;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

DenseMatrix RationalMatrix::to_dense() const {
  std::vector<double> values;
  values.reserve(data_.size());
  for (const auto& q : data_) values.push_back(q.get_d());
  return DenseMatrix(rows_, cols_, values);
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw InvalidInput("dot product length mismatch");
  Rational acc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) acc += a[i] * b[i];
  }
  return acc;
}

Rational parse_rational(const std::string& text) {
  auto bad = [&text]() { return InvalidInput("cannot parse rational '" + text + "'"); };
  std::string s;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t') s.push_back(ch);
  }
  if (s.empty()) throw bad();
  const auto dot_pos = s.find('.');
  const bool has_exp = s.find_first_of("eE") != std::string::npos;
  if (has_exp) throw bad();
  try {
    if (dot_pos != std::string::npos) {
      if (s.find('/') != std::string::npos) throw bad();
      std::string digits = s.substr(0, dot_pos) + s.substr(dot_pos + 1);
      const std::size_t frac_len = s.size() - dot_pos - 1;
      if (digits.empty() || digits == "-" || digits == "+") throw bad();
      if (digits.front() == '+') digits.erase(0, 1);
      mpz_class num(digits, 10);
      mpz_class den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    if (s.front() == '+') s.erase(0, 1);
    const auto slash = s.find('/');
    if (slash != std::string::npos && s.substr(slash + 1).find_first_not_of("0123456789") !=
                                          std::string::npos) {
      throw bad();
    }
    Rational q(s, 10);
    if (q.get_den() == 0) throw bad();
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw bad();
  }
}

std::string to_string(const Rational& q) { return q.get_str(10); }

}  // namespace minctrl
