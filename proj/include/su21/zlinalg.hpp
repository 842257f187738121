#pragma once

// Integer matrices with arbitrary-precision entries, and their Hermite and
// Smith normal forms under unimodular row (and column) operations.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <vector>

namespace su21 {

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  // rows may be zero; cols must be positive.
  IntegerMatrix(std::size_t rows, std::size_t cols);
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  mpz_class& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const mpz_class& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<mpz_class> row(std::size_t i) const;
  void append_row(const std::vector<mpz_class>& r);
  bool row_is_zero(std::size_t i) const;

  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m);

// Row-style Hermite normal form: same shape as the input, zero rows last,
// positive pivots in strictly increasing columns, entries above a pivot in
// [0, pivot). The row lattice is unchanged.
IntegerMatrix hermite_normal_form(const IntegerMatrix& m);

// H together with an integral U such that U * M = H.
struct HermiteDecomposition {
  IntegerMatrix h;
  IntegerMatrix u;
};
HermiteDecomposition hermite_normal_form_with_transform(const IntegerMatrix& m);

// Number of nonzero rows of a matrix in Hermite normal form.
std::size_t hnf_rank(const IntegerMatrix& h);

struct SmithForm {
  // min(rows, cols) values d1 | d2 | ..., nonzero ones first.
  std::vector<mpz_class> diagonal;
  std::size_t cols = 0;

  std::size_t rank() const;
  // Free rank of Z^cols / (row lattice).
  std::size_t free_rank() const { return cols - rank(); }
  // The diagonal entries greater than one: torsion invariants of the quotient.
  std::vector<mpz_class> torsion() const;
};

SmithForm smith_normal_form(const IntegerMatrix& m);

// Order of the last unit vector in Z^cols / (row lattice + modulus Z^cols),
// computed with all entries reduced mod modulus. This divides the order in
// Z^cols / (row lattice). Requires 1 <= modulus < 2^31.
long last_generator_order_mod(const IntegerMatrix& m, long modulus);

}  // namespace su21
