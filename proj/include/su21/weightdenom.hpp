#pragma once

// Weight denominators: the order of the central element (I3, 1) in the
// abelianization of the preimage of a group in the universal cover.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "su21/cocycle.hpp"
#include "su21/fpgroup.hpp"
#include "su21/matgroup.hpp"
#include "su21/zlinalg.hpp"

namespace su21 {

struct DenominatorReport {
  SubgroupSpec group;
  std::size_t index_in_upsilon = 1;
  std::size_t generator_count = 0;
  std::size_t relator_count = 0;
  mpz_class weight_denominator = 1;
  std::vector<mpz_class> torsion_invariants;
  std::size_t free_rank = 0;
  std::string note;

  friend bool operator==(const DenominatorReport&, const DenominatorReport&) = default;
};

struct PipelineOptions {
  std::size_t max_index = 512;
  SigmaOptions sigma = SigmaOptions::defaults();
  // Try the order of (I3,1) modulo the index first and fall back to exact HNF
  // unless that already certifies the answer.
  bool modular = false;
};

// Cover product of (image(g_i), 0)^{+-1} along w.
CoverElement lift_word(const Word& w, std::span<const GroupMatrix> images,
                       const SigmaOptions& options = SigmaOptions::defaults());

// Row j is the exponent sums of relator j followed by n_j, where the lift of
// relator j is (I3, -n_j). Throws DomainError if a lift has nonidentity matrix part.
IntegerMatrix relation_matrix(const Presentation& p,
                              const SigmaOptions& options = SigmaOptions::defaults());

// Reads n from the last nonzero HNF row (0 ... 0 n). Throws InfiniteOrder if
// that row has another shape. `group` and `index` are copied into the report.
DenominatorReport weight_denominator(const Presentation& p, const PipelineOptions& options = {});

// Reidemeister-Schreier from the Upsilon presentation, then weight_denominator.
// Gamma(sqrt(-3)) is answered by Upsilon, since the two agree modulo the centre.
DenominatorReport weight_denominator_of(const SubgroupSpec& spec, const PipelineOptions& options = {});

// True iff the denominator of w (in lowest terms) divides denom(spec).
bool multiplier_system_exists(const SubgroupSpec& spec, const mpq_class& w,
                              const PipelineOptions& options = {});
// Parses "a/b" or "a" with b >= 1. Throws ParseError.
mpq_class parse_weight(const std::string& text);

}  // namespace su21
