#pragma once

// Exact arithmetic in Z[zeta], zeta = exp(2 pi i / 3), and in its fraction
// field Q(zeta). Elements are stored in the basis {1, zeta}.

#include <gmpxx.h>

#include <array>
#include <complex>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>

namespace su21 {

class Eisenstein {
 public:
  Eisenstein() = default;
  Eisenstein(long a, long b = 0) : a_(a), b_(b) {}
  Eisenstein(mpz_class a, mpz_class b) : a_(std::move(a)), b_(std::move(b)) {}

  static Eisenstein zeta() { return {0, 1}; }
  // The square root of -3 with positive imaginary part: 1 + 2 zeta.
  static Eisenstein sqrt_minus3() { return {1, 2}; }

  const mpz_class& a() const { return a_; }
  const mpz_class& b() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  Eisenstein& operator+=(const Eisenstein& w);
  Eisenstein& operator-=(const Eisenstein& w);
  Eisenstein& operator*=(const Eisenstein& w);

  friend bool operator==(const Eisenstein& z, const Eisenstein& w) {
    return z.a_ == w.a_ && z.b_ == w.b_;
  }

 private:
  mpz_class a_ = 0;
  mpz_class b_ = 0;
};

Eisenstein operator+(Eisenstein z, const Eisenstein& w);
Eisenstein operator-(Eisenstein z, const Eisenstein& w);
Eisenstein operator*(const Eisenstein& z, const Eisenstein& w);
Eisenstein operator-(const Eisenstein& z);

inline Eisenstein add(const Eisenstein& z, const Eisenstein& w) { return z + w; }
inline Eisenstein mul(const Eisenstein& z, const Eisenstein& w) { return z * w; }
inline Eisenstein neg(const Eisenstein& z) { return -z; }

// conj(zeta) = zeta^2 = -1 - zeta.
Eisenstein conj(const Eisenstein& z);
mpz_class norm(const Eisenstein& z);
mpz_class trace(const Eisenstein& z);

inline Eisenstein sqrt_minus3() { return Eisenstein::sqrt_minus3(); }

// True when w | z in Z[zeta]. Zero divides only zero.
bool divides(const Eisenstein& w, const Eisenstein& z);
// Exact quotient z / w; throws NotDivisible when w = 0 or w does not divide z.
Eisenstein div_exact(const Eisenstein& z, const Eisenstein& w);
// z = 0 mod beta.
bool congruent_zero(const Eisenstein& z, const Eisenstein& beta);

// zeta = 1 mod sqrt(-3), so a + b zeta maps to a + b in F_3. Result in {0,1,2}.
int residue_mod_sqrt_minus3(const Eisenstein& z);
// Coordinates reduced into {0,1,2}.
std::pair<int, int> residue_mod_3(const Eisenstein& z);

std::complex<double> embed(const Eisenstein& z);

// The six units +-1, +-zeta, +-zeta^2.
bool is_unit(const Eisenstein& z);

std::string to_string(const Eisenstein& z);
std::ostream& operator<<(std::ostream& os, const Eisenstein& z);

// Reduce an integer into {0, 1, 2}.
int mod3(const mpz_class& n);

// An element of Q(zeta) as num / den with den > 0 and gcd(num.a, num.b, den) = 1.
class EisensteinFraction {
 public:
  EisensteinFraction() : den_(1) {}
  EisensteinFraction(Eisenstein num) : num_(std::move(num)), den_(1) {}
  EisensteinFraction(Eisenstein num, mpz_class den);

  const Eisenstein& num() const { return num_; }
  const mpz_class& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integral() const { return den_ == 1; }

  // Real part as a rational number.
  mpq_class real() const;
  // Imaginary part divided by sqrt(3), as a rational number.
  mpq_class imag_over_sqrt3() const;
  // Rational coordinates (p, q) with value p + q zeta.
  std::pair<mpq_class, mpq_class> coords() const;

  friend bool operator==(const EisensteinFraction& x, const EisensteinFraction& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }

 private:
  void normalize();

  Eisenstein num_;
  mpz_class den_;
};

EisensteinFraction operator+(const EisensteinFraction& x, const EisensteinFraction& y);
EisensteinFraction operator-(const EisensteinFraction& x, const EisensteinFraction& y);
EisensteinFraction operator-(const EisensteinFraction& x);
EisensteinFraction operator*(const EisensteinFraction& x, const EisensteinFraction& y);
// Throws DomainError on division by zero.
EisensteinFraction operator/(const EisensteinFraction& x, const EisensteinFraction& y);

EisensteinFraction conj(const EisensteinFraction& x);
mpq_class norm(const EisensteinFraction& x);
std::complex<double> embed(const EisensteinFraction& x);

}  // namespace su21
