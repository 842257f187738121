#pragma once

// Constructive membership for Upsilon: reduce g to the identity by left
// multiplication with n(z,x) and n(z,x)^t, lowering H(g) = norm(a) + norm(c)
// for the first column (a, b, c) at each step, and spell the result in n1..n5.

#include <gmpxx.h>

#include <vector>

#include "su21/eisenstein.hpp"
#include "su21/fpgroup.hpp"
#include "su21/matgroup.hpp"

namespace su21 {

// n(z, x), or its transpose.
struct UnipotentFactor {
  Eisenstein z;
  mpz_class x = 0;
  bool transposed = false;

  GroupMatrix matrix() const;
  friend bool operator==(const UnipotentFactor&, const UnipotentFactor&) = default;
};

struct HeightState {
  GroupMatrix g;
  mpz_class height;

  explicit HeightState(GroupMatrix m);
};

mpz_class height(const GroupMatrix& g);

// Nearest point of sqrt(-3) Z[zeta] to t, compared by exact norm. Ties go to
// the candidate with smaller real part, then smaller imaginary part; `tie` is
// set when more than one candidate is nearest.
Eisenstein nearest_sqrt_minus3_multiple(const EisensteinFraction& t, bool* tie = nullptr);

struct DescentStep {
  UnipotentFactor factor;
  GroupMatrix result;
  mpz_class height_before;
  mpz_class height_after;
  // norm(b'/c) (or norm(b'/a) on the transpose branch); at most 1.
  mpq_class lattice_norm;
  bool tie = false;
};

// One height-lowering step. Throws BaseCaseReached when H(g) = 1 and
// DomainError when g is not in Upsilon.
DescentStep descend(const GroupMatrix& g);

// n(z, x) as n1^p n2^q n3^k with z = p + q zeta; the transpose through n4, n5
// and n2^t = n3^-1 n1 n4 n1 n3^-2 n2.
Word word_for(const UnipotentFactor& f);

struct Decomposition {
  Word word;
  std::vector<DescentStep> steps;
  UnipotentFactor base;
};

// A word in n1..n5 evaluating to g. Throws DomainError when g is not in Upsilon.
Decomposition decompose_detailed(const GroupMatrix& g);
Word decompose(const GroupMatrix& g);

}  // namespace su21
