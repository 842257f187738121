#include "su21/weightdenom.hpp"

#include <regex>

#include "su21/errors.hpp"

namespace su21 {

namespace {

// Lifts (g, 0) and their cover inverses, one pair per generator.
struct GeneratorLifts {
  std::vector<CoverElement> forward;
  std::vector<CoverElement> backward;

  GeneratorLifts(std::span<const GroupMatrix> images, const SigmaOptions& options) {
    for (const auto& g : images) {
      forward.push_back({g, 0});
      backward.push_back(cover_inv(forward.back(), options));
    }
  }

  CoverElement lift(const Word& w, const SigmaOptions& options) const {
    CoverElement acc;
    for (const Letter& l : w) {
      if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= forward.size()) {
        throw InvalidParameters("generator index " + std::to_string(l.gen) + " out of range");
      }
      acc = cover_mul(acc, l.exp > 0 ? forward[l.gen] : backward[l.gen], options);
    }
    return acc;
  }
};

const Presentation& require_images(const Presentation& p) {
  if (!p.images) throw InvalidParameters("presentation has no matrix images");
  return p;
}

IntegerMatrix build_relation_matrix(const Presentation& p, const SigmaOptions& options) {
  require_images(p);
  const std::size_t r = p.generator_count();
  GeneratorLifts lifts(*p.images, options);
  IntegerMatrix m(0, r + 1);
  for (std::size_t j = 0; j < p.relators.size(); ++j) {
    CoverElement hat = lifts.lift(p.relators[j], options);
    if (!hat.g.is_identity()) {
      throw DomainError("relator " + std::to_string(j + 1) + " does not lift to the centre");
    }
    std::vector<long> sums = exponent_sum_row(p.relators[j], r);
    std::vector<mpz_class> row(sums.begin(), sums.end());
    row.push_back(-hat.n);
    m.append_row(row);
  }
  return m;
}

mpz_class denominator_from_hnf(const IntegerMatrix& h) {
  const std::size_t rank = hnf_rank(h);
  if (rank == 0) throw InfiniteOrder("relation matrix is zero: (I3,1) has infinite order");
  const std::size_t last = h.cols() - 1;
  for (std::size_t j = 0; j < last; ++j) {
    if (h(rank - 1, j) != 0) {
      throw InfiniteOrder("last nonzero HNF row is not (0 ... 0 n): (I3,1) has infinite order");
    }
  }
  return h(rank - 1, last);
}

DenominatorReport report_for(const Presentation& p, const PipelineOptions& options,
                             const SubgroupSpec& spec, std::size_t index) {
  DenominatorReport rep;
  rep.group = spec;
  rep.index_in_upsilon = index;
  rep.generator_count = p.generator_count();
  rep.relator_count = p.relators.size();
  IntegerMatrix m = build_relation_matrix(p, options.sigma);
  if (m.rows() == 0) throw InfiniteOrder("no relators: (I3,1) has infinite order");

  std::optional<mpz_class> certified;
  if (options.modular && index > 1 && index < (1UL << 31)) {
    // order mod index divides the true order, which divides the index.
    long d = last_generator_order_mod(m, static_cast<long>(index));
    if (static_cast<std::size_t>(d) == index) certified = mpz_class(d);
  }
  IntegerMatrix h = hermite_normal_form(m);
  rep.weight_denominator = certified ? *certified : denominator_from_hnf(h);
  SmithForm snf = smith_normal_form(h);
  rep.torsion_invariants = snf.torsion();
  rep.free_rank = snf.free_rank();
  return rep;
}

}  // namespace

CoverElement lift_word(const Word& w, std::span<const GroupMatrix> images,
                       const SigmaOptions& options) {
  return GeneratorLifts(images, options).lift(w, options);
}

IntegerMatrix relation_matrix(const Presentation& p, const SigmaOptions& options) {
  return build_relation_matrix(p, options);
}

DenominatorReport weight_denominator(const Presentation& p, const PipelineOptions& options) {
  PipelineOptions exact = options;
  exact.modular = false;
  DenominatorReport rep = report_for(p, exact, SubgroupSpec::upsilon(), 1);
  rep.note = "computed from a supplied presentation";
  return rep;
}

DenominatorReport weight_denominator_of(const SubgroupSpec& spec, const PipelineOptions& options) {
  if (spec.is_gamma_sqrt3()) {
    DenominatorReport rep = weight_denominator_of(SubgroupSpec::upsilon(), options);
    rep.group = spec;
    rep.note = "Gamma(sqrt(-3)) = Upsilon x centre; denominator taken from Upsilon";
    return rep;
  }
  const Presentation& ambient = upsilon_presentation();
  if (spec.kind() == SubgroupSpec::Kind::upsilon) {
    return report_for(ambient, options, spec, 1);
  }
  auto sub = reidemeister_schreier(
      ambient, [&spec](const GroupMatrix& g) { return spec.contains(g); }, options.max_index);
  return report_for(sub.presentation, options, spec, sub.index());
}

bool multiplier_system_exists(const SubgroupSpec& spec, const mpq_class& w,
                              const PipelineOptions& options) {
  mpq_class q = w;
  q.canonicalize();
  if (q.get_den() == 1) return true;
  DenominatorReport rep = weight_denominator_of(spec, options);
  return mpz_divisible_p(rep.weight_denominator.get_mpz_t(), q.get_den().get_mpz_t()) != 0;
}

mpq_class parse_weight(const std::string& text) {
  static const std::regex re(R"(\s*(-?\d+)(?:/(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw ParseError("bad weight '" + text + "' (expected a/b)");
  mpz_class num(m[1].str());
  mpz_class den = m[2].matched ? mpz_class(m[2].str()) : mpz_class(1);
  if (den < 1) throw ParseError("weight denominator must be at least 1");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace su21
