#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace jacflow {

using Integer = mpz_class;

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Integer> row(std::size_t r) const;
  void append_row(const std::vector<Integer>& values);

  IntMatrix transpose() const;
  bool is_zero() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Exact determinant by Bareiss fraction-free elimination. Throws NotSquare.
Integer determinant(const IntMatrix& m);

// u * input * v == s, with s diagonal d_1 | d_2 | ... | d_r (all positive),
// zero elsewhere. v_inv is the inverse of v, maintained alongside it.
struct SnfResult {
  IntMatrix s;
  IntMatrix u;
  IntMatrix v;
  IntMatrix v_inv;

  std::vector<Integer> diagonal() const;  // the r nonzero entries
  std::size_t rank() const { return diagonal().size(); }
};

SnfResult smith_normal_form(const IntMatrix& m);

// Structure of Z^ambient_rank / rowspace(relations).
struct QuotientStructure {
  std::vector<Integer> torsion;  // invariant factors > 1, divisor-chained
  std::size_t free_rank = 0;
};

QuotientStructure invariant_factors(const IntMatrix& relations, std::size_t ambient_rank);

/// Floor-style residue in [0, m) for m > 0.
Integer mod_floor(const Integer& a, const Integer& m);

}  // namespace jacflow
