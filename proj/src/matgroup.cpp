#include "su21/matgroup.hpp"

#include <algorithm>
#include <ostream>
#include <regex>
#include <sstream>

#include "su21/errors.hpp"

namespace su21 {

GroupMatrix GroupMatrix::identity() { return scalar(Eisenstein(1)); }

GroupMatrix GroupMatrix::scalar(const Eisenstein& s) {
  GroupMatrix g;
  for (int i = 0; i < 3; ++i) g(i, i) = s;
  return g;
}

GroupMatrix GroupMatrix::form_j() {
  GroupMatrix g;
  g(0, 2) = 1;
  g(1, 1) = 1;
  g(2, 0) = 1;
  return g;
}

bool GroupMatrix::is_identity() const {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if ((*this)(i, j) != Eisenstein(i == j ? 1 : 0)) return false;
  return true;
}

GroupMatrix operator*(const GroupMatrix& g, const GroupMatrix& h) {
  GroupMatrix p;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Eisenstein s;
      for (int k = 0; k < 3; ++k) {
        if (g(i, k).is_zero() || h(k, j).is_zero()) continue;
        s += g(i, k) * h(k, j);
      }
      p(i, j) = std::move(s);
    }
  }
  return p;
}

GroupMatrix transpose(const GroupMatrix& g) {
  GroupMatrix t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t(i, j) = g(j, i);
  return t;
}

GroupMatrix conj_transpose(const GroupMatrix& g) {
  GroupMatrix t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t(i, j) = conj(g(j, i));
  return t;
}

GroupMatrix inverse(const GroupMatrix& g) {
  // (J g* J)(i,j) = conj(g(2-j, 2-i))
  GroupMatrix t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t(i, j) = conj(g(2 - j, 2 - i));
  return t;
}

Eisenstein det(const GroupMatrix& g) {
  return g(0, 0) * (g(1, 1) * g(2, 2) - g(1, 2) * g(2, 1)) -
         g(0, 1) * (g(1, 0) * g(2, 2) - g(1, 2) * g(2, 0)) +
         g(0, 2) * (g(1, 0) * g(2, 1) - g(1, 1) * g(2, 0));
}

bool is_unitary(const GroupMatrix& g) {
  return conj_transpose(g) * GroupMatrix::form_j() * g == GroupMatrix::form_j();
}

std::ostream& operator<<(std::ostream& os, const GroupMatrix& g) {
  os << '[';
  for (int i = 0; i < 3; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < 3; ++j) os << (j ? ", " : "") << g(i, j);
    os << ']';
  }
  return os << ']';
}

namespace {

// (-3 norm(z) + x sqrt(-3)) / 2, exact in Z[zeta] when x = norm(z) mod 2.
Eisenstein corner_entry(const Eisenstein& z, const mpz_class& x) {
  mpz_class nz = norm(z);
  if (mpz_odd_p(mpz_class(x - nz).get_mpz_t())) {
    std::ostringstream os;
    os << "n(z,x) needs x = norm(z) mod 2; got z = " << z << ", x = " << x;
    throw InvalidParameters(os.str());
  }
  Eisenstein twice = Eisenstein(-3 * nz, 0) + Eisenstein(x, 0) * Eisenstein::sqrt_minus3();
  return div_exact(twice, Eisenstein(2));
}

}  // namespace

GroupMatrix make_n(const Eisenstein& z, const mpz_class& x) {
  GroupMatrix g = GroupMatrix::identity();
  g(0, 2) = corner_entry(z, x);
  g(0, 1) = Eisenstein::sqrt_minus3() * z;
  g(1, 2) = Eisenstein::sqrt_minus3() * conj(z);
  return g;
}

GroupMatrix make_n_transpose(const Eisenstein& z, const mpz_class& x) {
  return transpose(make_n(z, x));
}

const std::array<GroupMatrix, 5>& generators_upsilon() {
  static const std::array<GroupMatrix, 5> gens = [] {
    GroupMatrix n1 = make_n(1, 1);
    GroupMatrix n2 = make_n(Eisenstein::zeta(), 1);
    GroupMatrix n3 = make_n(0, 2);
    return std::array<GroupMatrix, 5>{n1, n2, n3, transpose(n1), transpose(n3)};
  }();
  return gens;
}

bool in_gamma_beta(const GroupMatrix& g, const Eisenstein& beta) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const Eisenstein& e = g(i, j);
      if (!congruent_zero(i == j ? e - Eisenstein(1) : e, beta)) return false;
    }
  }
  return true;
}

bool in_upsilon(const GroupMatrix& g) {
  if (!in_gamma_beta(g, Eisenstein::sqrt_minus3())) return false;
  if (residue_mod_3(g(0, 0)) != std::pair<int, int>{1, 0}) return false;
  return det(g) == Eisenstein(1) && is_unitary(g);
}

namespace {

F3Vector f_map_unchecked(const GroupMatrix& g) {
  const Eisenstein s = Eisenstein::sqrt_minus3();
  return {residue_mod_sqrt_minus3(div_exact(g(0, 1), s)),
          residue_mod_sqrt_minus3(div_exact(g(0, 2), s)),
          residue_mod_sqrt_minus3(div_exact(g(1, 0), s)),
          residue_mod_sqrt_minus3(div_exact(g(2, 0), s))};
}

int dot3(const F3Vector& v, const F3Vector& w) {
  int s = 0;
  for (int i = 0; i < 4; ++i) s += v[i] * w[i];
  return s % 3;
}

}  // namespace

F3Vector f_map(const GroupMatrix& g) {
  if (!in_upsilon(g)) throw DomainError("F is defined on Upsilon only");
  return f_map_unchecked(g);
}

bool in_index3(const GroupMatrix& g, const F3Vector& v) { return dot3(v, f_map(g)) == 0; }

F3Vector canonical_index3_vector(F3Vector v) {
  for (int& c : v) c = ((c % 3) + 3) % 3;
  F3Vector neg;
  for (int i = 0; i < 4; ++i) neg[i] = (3 - v[i]) % 3;
  return std::min(v, neg);
}

std::vector<F3Vector> all_index3_vectors() {
  std::vector<F3Vector> out;
  for (int n = 1; n < 81; ++n) {
    F3Vector v{n / 27, (n / 9) % 3, (n / 3) % 3, n % 3};
    if (canonical_index3_vector(v) == v) out.push_back(v);
  }
  return out;
}

SubgroupSpec SubgroupSpec::upsilon() { return SubgroupSpec{}; }

SubgroupSpec SubgroupSpec::gamma(const Eisenstein& beta) {
  SubgroupSpec s;
  s.kind_ = Kind::principal_congruence;
  // Normalise the level up to units so that names are stable.
  Eisenstein b = beta;
  if (b == -Eisenstein::sqrt_minus3()) b = Eisenstein::sqrt_minus3();
  if (b.is_rational() && b.a() < 0) b = -b;
  if (b != Eisenstein::sqrt_minus3() && !divides(Eisenstein(3), b)) {
    throw InvalidParameters("principal congruence level must be sqrt(-3) or a multiple of 3");
  }
  s.level_ = b;
  return s;
}

SubgroupSpec SubgroupSpec::index3(F3Vector v) {
  v = canonical_index3_vector(v);
  if (v == F3Vector{0, 0, 0, 0}) throw InvalidParameters("index3 vector must be nonzero");
  SubgroupSpec s;
  s.kind_ = Kind::index3;
  s.v_ = v;
  return s;
}

bool SubgroupSpec::is_gamma_sqrt3() const {
  return kind_ == Kind::principal_congruence && level_ == Eisenstein::sqrt_minus3();
}

bool SubgroupSpec::contains(const GroupMatrix& g) const {
  switch (kind_) {
    case Kind::upsilon:
      return in_upsilon(g);
    case Kind::principal_congruence:
      return in_gamma_beta(g, level_);
    case Kind::index3:
      return in_upsilon(g) && dot3(v_, f_map_unchecked(g)) == 0;
  }
  return false;
}

std::string SubgroupSpec::name() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::upsilon:
      return "upsilon";
    case Kind::principal_congruence:
      if (is_gamma_sqrt3()) return "gamma_sqrt3";
      if (level_ == Eisenstein(3)) return "gamma3";
      os << "gamma:" << level_.a() << ',' << level_.b();
      return os.str();
    case Kind::index3:
      os << "index3:" << v_[0] << ',' << v_[1] << ',' << v_[2] << ',' << v_[3];
      return os.str();
  }
  return {};
}

SubgroupSpec parse_subgroup(const std::string& text) {
  if (text == "upsilon") return SubgroupSpec::upsilon();
  if (text == "gamma_sqrt3") return SubgroupSpec::gamma_sqrt3();
  if (text == "gamma3") return SubgroupSpec::gamma3();
  static const std::regex index3_re(R"(index3:(-?\d+),(-?\d+),(-?\d+),(-?\d+))");
  static const std::regex gamma_re(R"(gamma:(-?\d+),(-?\d+))");
  std::smatch m;
  try {
    if (std::regex_match(text, m, index3_re)) {
      return SubgroupSpec::index3(
          {std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]), std::stoi(m[4])});
    }
    if (std::regex_match(text, m, gamma_re)) {
      return SubgroupSpec::gamma(Eisenstein(mpz_class(m[1].str()), mpz_class(m[2].str())));
    }
  } catch (const InvalidParameters& e) {
    throw ParseError("bad group '" + text + "': " + e.what());
  } catch (const std::out_of_range&) {
    throw ParseError("bad group '" + text + "': coordinate out of range");
  }
  throw ParseError("unknown group '" + text +
                   "' (expected upsilon, gamma_sqrt3, gamma3 or index3:a,b,c,d)");
}

}  // namespace su21
