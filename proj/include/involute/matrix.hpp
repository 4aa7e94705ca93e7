#ifndef INVOLUTE_MATRIX_HPP
#define INVOLUTE_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "involute/rational.hpp"

namespace involute {

// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  bool operator==(const RationalMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  bool is_zero() const;

  RationalMatrix transposed() const;

  // Skips zero entries of *this, so sparse-times-dense stays cheap.
  RationalMatrix operator*(const RationalMatrix& rhs) const;
  RationalMatrix operator+(const RationalMatrix& rhs) const;
  RationalMatrix operator-(const RationalMatrix& rhs) const;
  RationalMatrix scaled(const Rational& s) const;

  // Kronecker product in the (this-index major, rhs-index minor) convention.
  RationalMatrix kron(const RationalMatrix& rhs) const;

  // Horizontal concatenation [this | rhs].
  RationalMatrix augmented(const RationalMatrix& rhs) const;

  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  RationalMatrix column(std::size_t c) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace involute

#endif
