#pragma once

// Gamma(1) = SU(2,1) n SL3(Z[zeta]) for the Hermitian form J with ones on the
// antidiagonal, and the congruence subgroups inside it.

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "su21/eisenstein.hpp"

namespace su21 {

class GroupMatrix {
 public:
  // Zero-initialised; use identity() for the unit.
  GroupMatrix() = default;
  explicit GroupMatrix(const std::array<Eisenstein, 9>& entries) : e_(entries) {}

  static GroupMatrix identity();
  static GroupMatrix scalar(const Eisenstein& s);
  // The antidiagonal form J.
  static GroupMatrix form_j();

  // Zero-based row and column.
  const Eisenstein& operator()(int i, int j) const { return e_[3 * i + j]; }
  Eisenstein& operator()(int i, int j) { return e_[3 * i + j]; }

  const std::array<Eisenstein, 9>& entries() const { return e_; }

  bool is_identity() const;

  friend bool operator==(const GroupMatrix& g, const GroupMatrix& h) { return g.e_ == h.e_; }

 private:
  std::array<Eisenstein, 9> e_;
};

GroupMatrix operator*(const GroupMatrix& g, const GroupMatrix& h);
inline GroupMatrix mul(const GroupMatrix& g, const GroupMatrix& h) { return g * h; }

GroupMatrix transpose(const GroupMatrix& g);
GroupMatrix conj_transpose(const GroupMatrix& g);
// J conj(g)^t J; the group inverse for any g preserving the form.
GroupMatrix inverse(const GroupMatrix& g);
Eisenstein det(const GroupMatrix& g);
// conj(g)^t J g = J.
bool is_unitary(const GroupMatrix& g);

std::ostream& operator<<(std::ostream& os, const GroupMatrix& g);

// n(z, x): unipotent upper triangular with (1,2) entry sqrt(-3) z, (2,3) entry
// sqrt(-3) conj(z) and (1,3) entry (-3 norm(z) + x sqrt(-3)) / 2.
// Requires x = norm(z) mod 2; throws InvalidParameters otherwise.
GroupMatrix make_n(const Eisenstein& z, const mpz_class& x);
GroupMatrix make_n_transpose(const Eisenstein& z, const mpz_class& x);

// n1 = n(1,1), n2 = n(zeta,1), n3 = n(0,2), n4 = n1^t, n5 = n3^t.
const std::array<GroupMatrix, 5>& generators_upsilon();

// g = I mod beta entrywise. No unitarity check.
bool in_gamma_beta(const GroupMatrix& g, const Eisenstein& beta);
// unitary, det 1, g = I mod sqrt(-3) and g(1,1) = 1 mod 3.
bool in_upsilon(const GroupMatrix& g);

using F3Vector = std::array<int, 4>;

// (g12, g13, g21, g31) / sqrt(-3) reduced mod sqrt(-3). Throws DomainError
// unless in_upsilon(g).
F3Vector f_map(const GroupMatrix& g);
// v . F(g) = 0 in F_3. Throws DomainError unless in_upsilon(g).
bool in_index3(const GroupMatrix& g, const F3Vector& v);

// A subgroup of Gamma(1) the pipeline knows how to handle.
class SubgroupSpec {
 public:
  enum class Kind { upsilon, principal_congruence, index3 };

  static SubgroupSpec upsilon();
  // Gamma(beta). beta must be sqrt(-3) or a multiple of 3 (so that the group
  // sits inside Upsilon); throws InvalidParameters otherwise.
  static SubgroupSpec gamma(const Eisenstein& beta);
  static SubgroupSpec gamma_sqrt3() { return gamma(Eisenstein::sqrt_minus3()); }
  static SubgroupSpec gamma3() { return gamma(Eisenstein(3)); }
  // Upsilon_index3(v) with v stored as the lexicographically smaller of v, -v.
  // Throws InvalidParameters for v = 0.
  static SubgroupSpec index3(F3Vector v);

  Kind kind() const { return kind_; }
  const Eisenstein& level() const { return level_; }
  const F3Vector& vector() const { return v_; }

  // Gamma(sqrt(-3)) is the only representable group not contained in Upsilon.
  bool is_gamma_sqrt3() const;
  bool contained_in_upsilon() const { return !is_gamma_sqrt3(); }

  // Membership predicate. Assumes g already lies in Gamma(1).
  bool contains(const GroupMatrix& g) const;

  // upsilon, gamma_sqrt3, gamma3, gamma:a,b or index3:a,b,c,d
  std::string name() const;

  friend bool operator==(const SubgroupSpec&, const SubgroupSpec&) = default;

 private:
  Kind kind_ = Kind::upsilon;
  Eisenstein level_;
  F3Vector v_{0, 0, 0, 0};
};

// Throws ParseError for anything not produced by SubgroupSpec::name().
SubgroupSpec parse_subgroup(const std::string& text);

F3Vector canonical_index3_vector(F3Vector v);
// The 40 canonical nonzero vectors of F_3^4 up to sign, lexicographic order.
std::vector<F3Vector> all_index3_vectors();

}  // namespace su21
