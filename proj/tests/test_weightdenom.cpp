#include <doctest.h>

#include "oracles.hpp"
#include "su21/errors.hpp"
#include "su21/json_io.hpp"
#include "su21/weightdenom.hpp"

using namespace su21;

namespace {
std::span<const GroupMatrix> upsilon_images() {
  const auto& g = generators_upsilon();
  return {g.data(), g.size()};
}
}  // namespace

TEST_CASE("lifting words") {
  CHECK(lift_word({}, upsilon_images()) == CoverElement{});
  const auto& p = upsilon_presentation();
  CoverElement r1 = lift_word(p.relators[0], upsilon_images());
  CHECK(r1.g.is_identity());
  CoverElement R = lift_word(upsilon_balanced_relation(), upsilon_images());
  CHECK(R == CoverElement{GroupMatrix::identity(), -1});
  for (const Word& r : p.relators) CHECK(lift_word(r, upsilon_images()).g.is_identity());
  CHECK_THROWS_AS(lift_word({{9, 1}}, upsilon_images()), InvalidParameters);
}

TEST_CASE("relation matrix") {
  const auto& p = upsilon_presentation();
  IntegerMatrix m = relation_matrix(p);
  CHECK(m.rows() == 13);
  CHECK(m.cols() == 6);
  for (std::size_t j = 0; j < 13; ++j) {
    auto sums = exponent_sum_row(p.relators[j], 5);
    for (std::size_t i = 0; i < 5; ++i) CHECK(m(j, i) == sums[i]);
  }

  Presentation withR = p;
  withR.relators.push_back(upsilon_balanced_relation());
  IntegerMatrix mr = relation_matrix(withR);
  CHECK(mr.row(13) == std::vector<mpz_class>{0, 0, 0, 0, 0, 1});

  Presentation trivial = p;
  trivial.relators = {Word{}};
  CHECK(relation_matrix(trivial).row(0) == std::vector<mpz_class>(6, 0));

  Presentation broken = p;
  broken.relators = {{{0, 1}}};
  CHECK_THROWS_AS(relation_matrix(broken), DomainError);

  Presentation abstract = p;
  abstract.images.reset();
  CHECK_THROWS_AS(relation_matrix(abstract), InvalidParameters);
}

TEST_CASE("relation rows are invariant under cyclic shifts of the relator") {
  const auto& p = upsilon_presentation();
  const IntegerMatrix m = relation_matrix(p);
  for (std::size_t j = 0; j < p.relators.size(); ++j) {
    Presentation shifted = p;
    for (std::size_t k = 1; k < p.relators[j].size(); ++k) {
      shifted.relators = {rotate(p.relators[j], k)};
      REQUIRE(relation_matrix(shifted).row(0) == m.row(j));
    }
  }
}

TEST_CASE("known weight denominators") {
  DenominatorReport u = weight_denominator_of(SubgroupSpec::upsilon());
  CHECK(u.weight_denominator == 1);
  CHECK(u.index_in_upsilon == 1);
  CHECK(u.generator_count == 5);
  CHECK(u.relator_count == 13);
  CHECK(weight_denominator(upsilon_presentation()).weight_denominator == 1);

  DenominatorReport s = weight_denominator_of(SubgroupSpec::gamma_sqrt3());
  CHECK(s.weight_denominator == 1);
  CHECK(s.group.is_gamma_sqrt3());
  CHECK_FALSE(s.note.empty());

  CHECK(weight_denominator_of(SubgroupSpec::index3({0, 1, 0, 0})).weight_denominator == 1);
  CHECK(weight_denominator_of(SubgroupSpec::index3({1, 0, 2, 0})).weight_denominator == 3);
  CHECK(weight_denominator_of(SubgroupSpec::index3({0, 0, 1, 0})).weight_denominator == 3);
  CHECK(weight_denominator_of(SubgroupSpec::index3({0, 0, 2, 0})).weight_denominator == 3);

  PipelineOptions tight;
  tight.max_index = 2;
  CHECK_THROWS_AS(weight_denominator_of(SubgroupSpec::index3({0, 0, 1, 0}), tight), IndexOverflow);
}

TEST_CASE("the modular fast path agrees with the exact path") {
  PipelineOptions modular;
  modular.modular = true;
  for (const auto& v : all_index3_vectors()) {
    const SubgroupSpec spec = SubgroupSpec::index3(v);
    REQUIRE(weight_denominator_of(spec, modular) == weight_denominator_of(spec));
  }
}

TEST_CASE("infinite order is reported, not returned") {
  Presentation p = upsilon_presentation();
  p.relators = {p.relators[0]};  // [n1, n3] alone leaves (I3,1) free
  CHECK_THROWS_AS(weight_denominator(p), InfiniteOrder);
  p.relators.clear();
  CHECK_THROWS_AS(weight_denominator(p), InfiniteOrder);
}

TEST_CASE("multiplier systems") {
  CHECK(multiplier_system_exists(SubgroupSpec::upsilon(), 5));
  CHECK_FALSE(multiplier_system_exists(SubgroupSpec::upsilon(), mpq_class(1, 3)));
  CHECK_FALSE(multiplier_system_exists(SubgroupSpec::gamma_sqrt3(), mpq_class(2, 3)));
  CHECK(multiplier_system_exists(SubgroupSpec::index3({0, 0, 1, 0}), mpq_class(1, 3)));
  CHECK(multiplier_system_exists(SubgroupSpec::index3({0, 0, 1, 0}), mpq_class(4, 6)));
  CHECK_FALSE(multiplier_system_exists(SubgroupSpec::index3({0, 0, 1, 0}), mpq_class(1, 2)));
  CHECK(parse_weight("1/3") == mpq_class(1, 3));
  CHECK(parse_weight("-4/6") == mpq_class(-2, 3));
  CHECK(parse_weight("7") == 7);
  CHECK_THROWS_AS(parse_weight("1/0"), ParseError);
  CHECK_THROWS_AS(parse_weight("1/-3"), ParseError);
  CHECK_THROWS_AS(parse_weight("x"), ParseError);
}

TEST_CASE("report JSON has sorted keys and every field") {
  DenominatorReport r = weight_denominator_of(SubgroupSpec::index3({0, 0, 1, 0}));
  nlohmann::json j = to_json(r);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(std::is_sorted(keys.begin(), keys.end()));
  CHECK(keys == std::vector<std::string>{"free_rank", "generator_count", "group", "index_in_upsilon",
                                         "relator_count", "torsion_invariants", "weight_denominator"});
  CHECK(j["group"] == "index3:0,0,1,0");
  CHECK(j["weight_denominator"] == 3);
  CHECK(nlohmann::json::parse(j.dump()) == j);
}

TEST_CASE("divisibility facts: 1 | d and d | index") {
  for (const auto& v : all_index3_vectors()) {
    DenominatorReport r = weight_denominator_of(SubgroupSpec::index3(v));
    REQUIRE(r.weight_denominator >= 1);
    REQUIRE(r.index_in_upsilon == 3);
    REQUIRE(mpz_divisible_ui_p(r.weight_denominator.get_mpz_t(), 1) != 0);
    REQUIRE(mpz_divisible_p(mpz_class(r.index_in_upsilon).get_mpz_t(),
                            r.weight_denominator.get_mpz_t()) != 0);
    REQUIRE((r.weight_denominator == 3) == (oracles::paper_denominator3_vectors().count(v) == 1));
  }
}
