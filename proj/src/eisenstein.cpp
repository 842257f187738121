#include "su21/eisenstein.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "su21/errors.hpp"

namespace su21 {

Eisenstein& Eisenstein::operator+=(const Eisenstein& w) {
  a_ += w.a_;
  b_ += w.b_;
  return *this;
}

Eisenstein& Eisenstein::operator-=(const Eisenstein& w) {
  a_ -= w.a_;
  b_ -= w.b_;
  return *this;
}

Eisenstein& Eisenstein::operator*=(const Eisenstein& w) {
  *this = *this * w;
  return *this;
}

Eisenstein operator+(Eisenstein z, const Eisenstein& w) { return z += w; }
Eisenstein operator-(Eisenstein z, const Eisenstein& w) { return z -= w; }

Eisenstein operator*(const Eisenstein& z, const Eisenstein& w) {
  // (a + b zeta)(c + d zeta) = (ac - bd) + (ad + bc - bd) zeta
  mpz_class bd = z.b() * w.b();
  mpz_class re = z.a() * w.a() - bd;
  mpz_class ze = z.a() * w.b() + z.b() * w.a() - bd;
  return {std::move(re), std::move(ze)};
}

Eisenstein operator-(const Eisenstein& z) { return {-z.a(), -z.b()}; }

Eisenstein conj(const Eisenstein& z) { return {z.a() - z.b(), -z.b()}; }

mpz_class norm(const Eisenstein& z) {
  return z.a() * z.a() - z.a() * z.b() + z.b() * z.b();
}

mpz_class trace(const Eisenstein& z) { return 2 * z.a() - z.b(); }

bool divides(const Eisenstein& w, const Eisenstein& z) {
  if (w.is_zero()) return z.is_zero();
  mpz_class n = norm(w);
  Eisenstein p = z * conj(w);
  return mpz_divisible_p(p.a().get_mpz_t(), n.get_mpz_t()) &&
         mpz_divisible_p(p.b().get_mpz_t(), n.get_mpz_t());
}

Eisenstein div_exact(const Eisenstein& z, const Eisenstein& w) {
  if (w.is_zero()) throw NotDivisible("division by zero in Z[zeta]");
  mpz_class n = norm(w);
  Eisenstein p = z * conj(w);
  if (!mpz_divisible_p(p.a().get_mpz_t(), n.get_mpz_t()) ||
      !mpz_divisible_p(p.b().get_mpz_t(), n.get_mpz_t())) {
    throw NotDivisible(to_string(w) + " does not divide " + to_string(z));
  }
  mpz_class qa, qb;
  mpz_divexact(qa.get_mpz_t(), p.a().get_mpz_t(), n.get_mpz_t());
  mpz_divexact(qb.get_mpz_t(), p.b().get_mpz_t(), n.get_mpz_t());
  return {std::move(qa), std::move(qb)};
}

bool congruent_zero(const Eisenstein& z, const Eisenstein& beta) {
  return divides(beta, z);
}

int mod3(const mpz_class& n) {
  return static_cast<int>(mpz_fdiv_ui(n.get_mpz_t(), 3));
}

int residue_mod_sqrt_minus3(const Eisenstein& z) {
  return mod3(z.a() + z.b());
}

std::pair<int, int> residue_mod_3(const Eisenstein& z) {
  return {mod3(z.a()), mod3(z.b())};
}

std::complex<double> embed(const Eisenstein& z) {
  // Re = a - b/2, Im = b sqrt(3)/2; 2a - b is formed exactly first.
  mpz_class twice_re = 2 * z.a() - z.b();
  return {0.5 * twice_re.get_d(), 0.5 * std::sqrt(3.0) * z.b().get_d()};
}

bool is_unit(const Eisenstein& z) { return norm(z) == 1; }

std::string to_string(const Eisenstein& z) {
  std::ostringstream os;
  os << z;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Eisenstein& z) {
  if (z.b() == 0) return os << z.a();
  if (z.a() != 0) os << z.a() << (z.b() > 0 ? "+" : "");
  if (z.b() == 1) {
    os << "z";
  } else if (z.b() == -1) {
    os << "-z";
  } else {
    os << z.b() << "z";
  }
  return os;
}

EisensteinFraction::EisensteinFraction(Eisenstein num, mpz_class den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw DomainError("zero denominator in Q(zeta)");
  normalize();
}

void EisensteinFraction::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  mpz_class g = gcd(gcd(num_.a(), num_.b()), den_);
  if (g != 1) {
    mpz_class a, b;
    mpz_divexact(a.get_mpz_t(), num_.a().get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), num_.b().get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    num_ = Eisenstein(std::move(a), std::move(b));
  }
}

mpq_class EisensteinFraction::real() const {
  mpq_class r(2 * num_.a() - num_.b(), 2 * den_);
  r.canonicalize();
  return r;
}

mpq_class EisensteinFraction::imag_over_sqrt3() const {
  mpq_class r(num_.b(), 2 * den_);
  r.canonicalize();
  return r;
}

std::pair<mpq_class, mpq_class> EisensteinFraction::coords() const {
  mpq_class p(num_.a(), den_), q(num_.b(), den_);
  p.canonicalize();
  q.canonicalize();
  return {p, q};
}

EisensteinFraction operator+(const EisensteinFraction& x, const EisensteinFraction& y) {
  return {Eisenstein(x.num().a() * y.den() + y.num().a() * x.den(),
                     x.num().b() * y.den() + y.num().b() * x.den()),
          x.den() * y.den()};
}

EisensteinFraction operator-(const EisensteinFraction& x) {
  return {-x.num(), x.den()};
}

EisensteinFraction operator-(const EisensteinFraction& x, const EisensteinFraction& y) {
  return x + (-y);
}

EisensteinFraction operator*(const EisensteinFraction& x, const EisensteinFraction& y) {
  return {x.num() * y.num(), x.den() * y.den()};
}

EisensteinFraction operator/(const EisensteinFraction& x, const EisensteinFraction& y) {
  if (y.is_zero()) throw DomainError("division by zero in Q(zeta)");
  // x / y = x.num * y.den * conj(y.num) / (x.den * norm(y.num))
  Eisenstein n = x.num() * conj(y.num()) * Eisenstein(y.den(), 0);
  return {std::move(n), x.den() * norm(y.num())};
}

EisensteinFraction conj(const EisensteinFraction& x) { return {conj(x.num()), x.den()}; }

mpq_class norm(const EisensteinFraction& x) {
  mpq_class r(norm(x.num()), x.den() * x.den());
  r.canonicalize();
  return r;
}

std::complex<double> embed(const EisensteinFraction& x) {
  return {x.real().get_d(), std::sqrt(3.0) * x.imag_over_sqrt3().get_d()};
}

}  // namespace su21
