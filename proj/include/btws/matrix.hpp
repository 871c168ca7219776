#pragma once

#include "btws/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

namespace btws {

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : _rows(rows), _cols(cols), _data(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return _rows; }
  std::size_t cols() const noexcept { return _cols; }
  bool        is_square() const noexcept { return _rows == _cols; }

  Int&       operator()(std::size_t i, std::size_t j) { return _data[i * _cols + j]; }
  Int const& operator()(std::size_t i, std::size_t j) const { return _data[i * _cols + j]; }

  IntMatrix transpose() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, Int const& factor);
  void add_col_multiple(std::size_t dst, std::size_t src, Int const& factor);
  void negate_row(std::size_t r);

  bool operator==(IntMatrix const&) const = default;

 private:
  std::size_t      _rows = 0;
  std::size_t      _cols = 0;
  std::vector<Int> _data;
};

IntMatrix operator+(IntMatrix const& a, IntMatrix const& b);
IntMatrix operator-(IntMatrix const& a, IntMatrix const& b);
IntMatrix operator*(IntMatrix const& a, IntMatrix const& b);

// Exact determinant by fraction-free (Bareiss) elimination. The empty matrix
// has determinant 1.
Int determinant(IntMatrix a);

std::ostream& operator<<(std::ostream& os, IntMatrix const& m);

}  // namespace btws
