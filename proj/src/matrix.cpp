#include "btws/matrix.hpp"

#include <cassert>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace btws {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : _rows(rows.size()), _cols(rows.size() == 0 ? 0 : rows.begin()->size()) {
  _data.reserve(_rows * _cols);
  for (auto const& row : rows) {
    if (row.size() != _cols) {
      throw std::invalid_argument("IntMatrix: ragged initializer");
    }
    for (long v : row) {
      _data.emplace_back(v);
    }
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1;
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(_cols, _rows);
  for (std::size_t i = 0; i < _rows; ++i) {
    for (std::size_t j = 0; j < _cols; ++j) {
      t(j, i) = (*this)(i, j);
    }
  }
  return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) {
    return;
  }
  for (std::size_t j = 0; j < _cols; ++j) {
    std::swap((*this)(a, j), (*this)(b, j));
  }
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) {
    return;
  }
  for (std::size_t i = 0; i < _rows; ++i) {
    std::swap((*this)(i, a), (*this)(i, b));
  }
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, Int const& factor) {
  if (factor == 0) {
    return;
  }
  for (std::size_t j = 0; j < _cols; ++j) {
    (*this)(dst, j) += factor * (*this)(src, j);
  }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, Int const& factor) {
  if (factor == 0) {
    return;
  }
  for (std::size_t i = 0; i < _rows; ++i) {
    (*this)(i, dst) += factor * (*this)(i, src);
  }
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < _cols; ++j) {
    (*this)(r, j) = -(*this)(r, j);
  }
}

IntMatrix operator+(IntMatrix const& a, IntMatrix const& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("IntMatrix +: shape mismatch");
  }
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      c(i, j) = a(i, j) + b(i, j);
    }
  }
  return c;
}

IntMatrix operator-(IntMatrix const& a, IntMatrix const& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("IntMatrix -: shape mismatch");
  }
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      c(i, j) = a(i, j) - b(i, j);
    }
  }
  return c;
}

IntMatrix operator*(IntMatrix const& a, IntMatrix const& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("IntMatrix *: shape mismatch");
  }
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) {
        continue;
      }
      for (std::size_t j = 0; j < b.cols(); ++j) {
        c(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return c;
}

Int determinant(IntMatrix a) {
  if (!a.is_square()) {
    throw std::invalid_argument("determinant: matrix is not square");
  }
  std::size_t const n = a.rows();
  if (n == 0) {
    return 1;
  }
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) {
        ++p;
      }
      if (p == n) {
        return 0;
      }
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        assert(v % prev == 0);
        a(i, j) = v / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::ostream& operator<<(std::ostream& os, IntMatrix const& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i == 0 ? "[" : ",[");
    for (std::size_t j = 0; j < m.cols(); ++j) {
      os << (j == 0 ? "" : ",") << m(i, j);
    }
    os << ']';
  }
  return os << ']';
}

}  // namespace btws
