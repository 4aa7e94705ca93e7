#include "involute/matrix.hpp"

#include "involute/errors.hpp"

namespace involute {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool RationalMatrix::is_zero() const {
  for (const auto& q : data_)
    if (!involute::is_zero(q)) return false;
  return true;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw ShapeError("matrix product shape mismatch");
  RationalMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (involute::is_zero(a)) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        const Rational& b = rhs(k, c);
        if (involute::is_zero(b)) continue;
        out(r, c) += a * b;
      }
    }
  }
  return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw ShapeError("matrix sum shape mismatch");
  RationalMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = data_[i] + rhs.data_[i];
  return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw ShapeError("matrix difference shape mismatch");
  RationalMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = data_[i] - rhs.data_[i];
  return out;
}

RationalMatrix RationalMatrix::scaled(const Rational& s) const {
  RationalMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * s;
  return out;
}

RationalMatrix RationalMatrix::kron(const RationalMatrix& rhs) const {
  RationalMatrix out(rows_ * rhs.rows_, cols_ * rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& a = (*this)(r, c);
      if (involute::is_zero(a)) continue;
      for (std::size_t rr = 0; rr < rhs.rows_; ++rr)
        for (std::size_t cc = 0; cc < rhs.cols_; ++cc) {
          const Rational& b = rhs(rr, cc);
          if (involute::is_zero(b)) continue;
          out(r * rhs.rows_ + rr, c * rhs.cols_ + cc) = a * b;
        }
    }
  return out;
}

RationalMatrix RationalMatrix::augmented(const RationalMatrix& rhs) const {
  if (rows_ != rhs.rows_) throw ShapeError("augment row mismatch");
  RationalMatrix out(rows_, cols_ + rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, cols_ + c) = rhs(r, c);
  }
  return out;
}

std::vector<Rational> RationalMatrix::apply(
    const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw ShapeError("matrix apply shape mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      if (involute::is_zero((*this)(r, c)) || involute::is_zero(v[c])) continue;
      out[r] += (*this)(r, c) * v[c];
    }
  return out;
}

RationalMatrix RationalMatrix::column(std::size_t c) const {
  RationalMatrix out(rows_, 1);
  for (std::size_t r = 0; r < rows_; ++r) out(r, 0) = (*this)(r, c);
  return out;
}

}  // namespace involute
