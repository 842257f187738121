#include "su21/zlinalg.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <utility>

#include "su21/errors.hpp"

namespace su21 {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, mpz_class(0)) {
  if (cols == 0) throw InvalidParameters("IntegerMatrix needs at least one column");
}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  if (cols_ == 0) throw InvalidParameters("IntegerMatrix needs at least one column");
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidParameters("ragged IntegerMatrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<mpz_class> IntegerMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<long>(i * cols_),
          data_.begin() + static_cast<long>((i + 1) * cols_)};
}

void IntegerMatrix::append_row(const std::vector<mpz_class>& r) {
  if (r.size() != cols_) throw InvalidParameters("row has wrong length");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

bool IntegerMatrix::row_is_zero(std::size_t i) const {
  for (std::size_t j = 0; j < cols_; ++j)
    if ((*this)(i, j) != 0) return false;
  return true;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidParameters("matrix shapes do not match");
  IntegerMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

namespace {

using Row = std::vector<mpz_class>;

// target -= q * source on columns from `from` on.
void sub_mul(Row& target, const Row& source, const mpz_class& q, std::size_t from) {
  for (std::size_t j = from; j < target.size(); ++j) {
    if (source[j] == 0) continue;
    mpz_submul(target[j].get_mpz_t(), q.get_mpz_t(), source[j].get_mpz_t());
  }
}

// Row-style HNF on a vector of rows. When `transform` is given, the same row
// operations are applied to it.
void hnf_in_place(std::vector<Row>& rows, std::size_t cols, std::vector<Row>* transform) {
  const std::size_t n = rows.size();
  auto apply = [&](auto&& op) {
    op(rows);
    if (transform) op(*transform);
  };
  std::size_t pivot_row = 0;
  mpz_class q;
  for (std::size_t col = 0; col < cols && pivot_row < n; ++col) {
    while (true) {
      // Smallest nonzero |entry| at or below pivot_row.
      std::size_t best = n;
      for (std::size_t i = pivot_row; i < n; ++i) {
        if (rows[i][col] == 0) continue;
        if (best == n || mpz_cmpabs(rows[i][col].get_mpz_t(), rows[best][col].get_mpz_t()) < 0) best = i;
      }
      if (best == n) break;
      if (best != pivot_row) apply([&](std::vector<Row>& r) { std::swap(r[best], r[pivot_row]); });
      bool done = true;
      for (std::size_t i = pivot_row + 1; i < n; ++i) {
        if (rows[i][col] == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[pivot_row][col].get_mpz_t());
        sub_mul(rows[i], rows[pivot_row], q, col);
        if (transform) sub_mul((*transform)[i], (*transform)[pivot_row], q, 0);
        if (rows[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[pivot_row][col] == 0) continue;
    if (rows[pivot_row][col] < 0) {
      apply([&](std::vector<Row>& r) {
        for (auto& v : r[pivot_row]) v = -v;
      });
    }
    for (std::size_t i = 0; i < pivot_row; ++i) {
      if (rows[i][col] == 0) continue;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[pivot_row][col].get_mpz_t());
      if (q == 0) continue;
      sub_mul(rows[i], rows[pivot_row], q, col);
      if (transform) sub_mul((*transform)[i], (*transform)[pivot_row], q, 0);
    }
    ++pivot_row;
  }
}

std::vector<Row> to_rows(const IntegerMatrix& m) {
  std::vector<Row> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return rows;
}

IntegerMatrix from_rows(const std::vector<Row>& rows, std::size_t cols) {
  IntegerMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

}  // namespace

IntegerMatrix hermite_normal_form(const IntegerMatrix& m) {
  auto rows = to_rows(m);
  hnf_in_place(rows, m.cols(), nullptr);
  return from_rows(rows, m.cols());
}

HermiteDecomposition hermite_normal_form_with_transform(const IntegerMatrix& m) {
  auto rows = to_rows(m);
  std::vector<Row> u;
  if (m.rows() > 0) u = to_rows(IntegerMatrix::identity(m.rows()));
  hnf_in_place(rows, m.cols(), &u);
  HermiteDecomposition out{from_rows(rows, m.cols()), IntegerMatrix(0, std::max<std::size_t>(m.rows(), 1))};
  if (m.rows() > 0) out.u = from_rows(u, m.rows());
  return out;
}

std::size_t hnf_rank(const IntegerMatrix& h) {
  std::size_t r = 0;
  while (r < h.rows() && !h.row_is_zero(r)) ++r;
  return r;
}

std::size_t SmithForm::rank() const {
  return static_cast<std::size_t>(
      std::count_if(diagonal.begin(), diagonal.end(), [](const mpz_class& d) { return d != 0; }));
}

std::vector<mpz_class> SmithForm::torsion() const {
  std::vector<mpz_class> out;
  for (const auto& d : diagonal)
    if (d > 1) out.push_back(d);
  return out;
}

SmithForm smith_normal_form(const IntegerMatrix& m) {
  const std::size_t diag_len = std::min(m.rows(), m.cols());
  // Start from the HNF: only its nonzero rows matter.
  IntegerMatrix h = hermite_normal_form(m);
  const std::size_t r = hnf_rank(h);
  const std::size_t c = m.cols();
  std::vector<Row> a;
  for (std::size_t i = 0; i < r; ++i) a.push_back(h.row(i));

  mpz_class q;
  std::vector<mpz_class> diag;
  for (std::size_t t = 0; t < r; ++t) {
    while (true) {
      // Move the smallest nonzero |entry| of the trailing block to (t, t).
      std::size_t bi = r, bj = c;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j) {
          if (a[i][j] == 0) continue;
          if (bi == r || mpz_cmpabs(a[i][j].get_mpz_t(), a[bi][bj].get_mpz_t()) < 0) {
            bi = i;
            bj = j;
          }
        }
      if (bi == r) break;
      std::swap(a[t], a[bi]);
      if (bj != t)
        for (auto& row : a) std::swap(row[t], row[bj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (a[i][t] == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        sub_mul(a[i], a[t], q, t);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (a[t][j] == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t i = t; i < r; ++i) {
          if (a[i][t] != 0) mpz_submul(a[i][j].get_mpz_t(), q.get_mpz_t(), a[i][t].get_mpz_t());
        }
        if (a[t][j] != 0) clean = false;
      }
      if (clean) break;
    }
    diag.push_back(abs(a[t][t]));
  }
  // diag(x, y) ~ diag(gcd, lcm) restores the divisibility chain.
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      mpz_class g = gcd(diag[i], diag[j]);
      mpz_class l = lcm(diag[i], diag[j]);
      diag[i] = g;
      diag[j] = l;
    }
  diag.resize(diag_len, mpz_class(0));
  return {diag, c};
}

long last_generator_order_mod(const IntegerMatrix& m, long modulus) {
  if (modulus < 1 || modulus >= (1L << 31)) throw InvalidParameters("modulus out of range");
  const std::size_t c = m.cols();
  const long md = modulus;
  auto red = [md](long v) { return ((v % md) + md) % md; };
  std::vector<std::vector<long>> active;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<long> r(c);
    bool nz = false;
    for (std::size_t j = 0; j < c; ++j) {
      r[j] = static_cast<long>(mpz_fdiv_ui(m(i, j).get_mpz_t(), static_cast<unsigned long>(md)));
      nz = nz || r[j] != 0;
    }
    if (nz) active.push_back(std::move(r));
  }
  auto combine = [&](std::vector<long>& t, const std::vector<long>& s, long q, std::size_t from) {
    for (std::size_t j = from; j < c; ++j) {
      if (s[j] != 0) t[j] = red(static_cast<long>((static_cast<__int128>(t[j]) - static_cast<__int128>(q) * s[j]) % md));
    }
  };
  long pivot = md;
  for (std::size_t col = 0; col < c; ++col) {
    // Euclid among the active rows until one nonzero entry remains in col.
    while (true) {
      std::size_t best = active.size();
      for (std::size_t i = 0; i < active.size(); ++i) {
        if (active[i][col] == 0) continue;
        if (best == active.size() || active[i][col] < active[best][col]) best = i;
      }
      if (best == active.size()) {
        pivot = md;  // the pivot row is modulus * e_col itself
        break;
      }
      bool done = true;
      for (std::size_t i = 0; i < active.size(); ++i) {
        if (i == best || active[i][col] == 0) continue;
        combine(active[i], active[best], active[i][col] / active[best][col], col);
        if (active[i][col] != 0) done = false;
      }
      if (!done) continue;
      // Combine the survivor R with modulus * e_col: P = u R + v m e_col has
      // pivot d = gcd(a, m); Q = (m/d) R - (a/d) m e_col stays active.
      std::vector<long> r = std::move(active[best]);
      active.erase(active.begin() + static_cast<long>(best));
      pivot = std::gcd(r[col], md);
      const long m_over_d = md / pivot;
      std::vector<long> qrow(c, 0);
      for (std::size_t j = col + 1; j < c; ++j) {
        qrow[j] = red(static_cast<long>((static_cast<__int128>(m_over_d) * r[j]) % md));
      }
      if (std::any_of(qrow.begin(), qrow.end(), [](long x) { return x != 0; })) {
        active.push_back(std::move(qrow));
      }
      break;
    }
  }
  return pivot;
}

}  // namespace su21
