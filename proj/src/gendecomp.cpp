#include "su21/gendecomp.hpp"

#include <optional>
#include <sstream>

#include "su21/errors.hpp"

namespace su21 {

GroupMatrix UnipotentFactor::matrix() const {
  return transposed ? make_n_transpose(z, x) : make_n(z, x);
}

mpz_class height(const GroupMatrix& g) { return norm(g(0, 0)) + norm(g(2, 0)); }

HeightState::HeightState(GroupMatrix m) : g(std::move(m)), height(su21::height(g)) {}

namespace {

mpz_class floor_of(const mpq_class& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

// Nearest integer; halves go down.
mpz_class round_half_down(const mpq_class& q) {
  mpz_class f;
  mpq_class shifted = q - mpq_class(1, 2);
  mpz_cdiv_q(f.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  return f;
}

EisensteinFraction frac(const Eisenstein& z) { return EisensteinFraction(z); }

// (Re, Im) order on Z[zeta], compared as (2a - b, b).
bool lex_less(const Eisenstein& u, const Eisenstein& v) {
  mpz_class ru = 2 * u.a() - u.b(), rv = 2 * v.a() - v.b();
  if (ru != rv) return ru < rv;
  return u.b() < v.b();
}

}  // namespace

Eisenstein nearest_sqrt_minus3_multiple(const EisensteinFraction& t, bool* tie) {
  const Eisenstein s3 = Eisenstein::sqrt_minus3();
  auto [p, q] = (t / frac(s3)).coords();
  const mpz_class p0 = floor_of(p), q0 = floor_of(q);
  std::optional<Eisenstein> best;
  mpq_class best_norm;
  int ties = 0;
  for (int dp = -1; dp <= 2; ++dp) {
    for (int dq = -1; dq <= 2; ++dq) {
      Eisenstein u = s3 * Eisenstein(p0 + dp, q0 + dq);
      mpq_class d = norm(t - frac(u));
      if (!best || d < best_norm) {
        best = u;
        best_norm = d;
        ties = 1;
      } else if (d == best_norm) {
        ++ties;
        if (lex_less(u, *best)) best = u;
      }
    }
  }
  if (tie) *tie = ties > 1;
  return *best;
}

DescentStep descend(const GroupMatrix& g) {
  if (!in_upsilon(g)) throw DomainError("descend: matrix is not in Upsilon");
  DescentStep step;
  step.height_before = height(g);
  if (step.height_before == 1) throw BaseCaseReached("H(g) = 1: g is already some n(z,x)");

  const Eisenstein s3 = Eisenstein::sqrt_minus3();
  const Eisenstein& a = g(0, 0);
  const Eisenstein& b = g(1, 0);
  const Eisenstein& c = g(2, 0);
  // Upper branch clears against c, the transpose branch against a.
  const bool upper = norm(a) > norm(c);
  const Eisenstein& pivot = upper ? c : a;
  const int reduced_row = upper ? 0 : 2;

  // sqrt(-3) conj(z) (resp. sqrt(-3) z) nearest to -b / pivot.
  Eisenstein u = nearest_sqrt_minus3_multiple(-frac(b) / frac(pivot), &step.tie);
  Eisenstein w = div_exact(u, s3);
  Eisenstein z = upper ? conj(w) : w;
  mpz_class x0 = norm(z) % 2;
  if (x0 < 0) x0 += 2;

  UnipotentFactor first{z, x0, !upper};
  GroupMatrix g1 = first.matrix() * g;
  step.lattice_norm = norm(frac(g1(1, 0)) / frac(pivot));
  if (step.lattice_norm > 1) throw Error("descend: norm(b'/c) > 1 after the z step");

  // sqrt(3) x nearest to Im(a' / c) (resp. Im(c' / a)).
  mpq_class s = (frac(g1(reduced_row, 0)) / frac(pivot)).imag_over_sqrt3();
  mpz_class x = round_half_down(s);

  step.factor = UnipotentFactor{z, x0 - 2 * x, !upper};
  step.result = step.factor.matrix() * g;
  step.height_after = height(step.result);
  if (step.result(reduced_row, 0) != g1(reduced_row, 0) - s3 * Eisenstein(x, 0) * pivot ||
      norm(frac(step.result(reduced_row, 0)) / frac(pivot)) > 1 ||
      step.height_after >= step.height_before) {
    std::ostringstream os;
    os << "descend failed to lower H for " << g;
    throw Error(os.str());
  }
  return step;
}

Word word_for(const UnipotentFactor& f) {
  const Eisenstein s3 = Eisenstein::sqrt_minus3();
  const mpz_class& p = f.z.a();
  const mpz_class& q = f.z.b();
  // n1^p n2^q = n(p, p) n(q zeta, q) = n(z, x') for some x'.
  GroupMatrix m = make_n(Eisenstein(p, 0), p) * make_n(Eisenstein(0, q), q);
  Eisenstein xs = div_exact(Eisenstein(2) * m(0, 2) + Eisenstein(3 * norm(f.z), 0), s3);
  if (!xs.is_rational()) throw Error("word_for: n1^p n2^q is not of the form n(z,x)");
  mpz_class diff = f.x - xs.a();
  if (mpz_odd_p(diff.get_mpz_t())) throw InvalidParameters("word_for: parity violation");
  const mpz_class half = diff / 2;
  if (!p.fits_slong_p() || !q.fits_slong_p() || !half.fits_slong_p()) {
    throw Error("word_for: exponent too large");
  }
  const long k = half.get_si(), pl = p.get_si(), ql = q.get_si();
  const Word n1{{0, 1}}, n2{{1, 1}}, n3{{2, 1}}, n4{{3, 1}}, n5{{4, 1}};
  if (!f.transposed) return free_reduce(concat(concat(power(n1, pl), power(n2, ql)), power(n3, k)));
  // (n1^p n2^q n3^k)^t = n5^k (n2^t)^q n4^p
  return free_reduce(concat(concat(power(n5, k), power(n2_transpose_word(), ql)), power(n4, pl)));
}

Decomposition decompose_detailed(const GroupMatrix& g) {
  if (!in_upsilon(g)) throw DomainError("decompose: matrix is not in Upsilon");
  Decomposition out;
  GroupMatrix cur = g;
  while (height(cur) != 1) {
    out.steps.push_back(descend(cur));
    cur = out.steps.back().result;
  }
  // H = 1 forces first column (1, 0, 0), so cur = n(z, x).
  const Eisenstein s3 = Eisenstein::sqrt_minus3();
  Eisenstein z = div_exact(cur(0, 1), s3);
  Eisenstein xs = div_exact(Eisenstein(2) * cur(0, 2) + Eisenstein(3 * norm(z), 0), s3);
  if (!xs.is_rational() || !(make_n(z, xs.a()) == cur)) {
    throw Error("decompose: base case is not of the form n(z,x)");
  }
  out.base = UnipotentFactor{z, xs.a(), false};

  // g = f1^-1 f2^-1 ... fK^-1 n(z, x)
  Word w;
  for (const auto& st : out.steps) w = concat(w, inverse(word_for(st.factor)));
  w = free_reduce(concat(w, word_for(out.base)));
  const auto& gens = generators_upsilon();
  if (!(evaluate_word(w, std::span<const GroupMatrix>(gens.data(), gens.size())) == g)) {
    throw Error("decompose: word does not evaluate back to the input");
  }
  out.word = std::move(w);
  return out;
}

Word decompose(const GroupMatrix& g) { return decompose_detailed(g).word; }

}  // namespace su21
