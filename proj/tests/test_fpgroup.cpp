#include <doctest.h>

#include "oracles.hpp"
#include "su21/errors.hpp"
#include "su21/fpgroup.hpp"
#include "su21/weightdenom.hpp"
#include "su21/zlinalg.hpp"

using namespace su21;

namespace {
std::span<const GroupMatrix> upsilon_images() {
  const auto& g = generators_upsilon();
  return {g.data(), g.size()};
}

Presentation free_group(std::size_t rank) {
  Presentation p;
  p.generator_names = default_generator_names(rank, "x");
  return p;
}

long exponent_sum_of(const Word& w, int gen) {
  long s = 0;
  for (const Letter& l : w)
    if (l.gen == gen) s += l.exp;
  return s;
}

SmithForm abelianization(const Presentation& p) {
  IntegerMatrix m(0, p.generator_count());
  for (const Word& r : p.relators) {
    auto row = exponent_sum_row(r, p.generator_count());
    m.append_row(std::vector<mpz_class>(row.begin(), row.end()));
  }
  return smith_normal_form(m);
}

const Word a{{0, 1}}, A{{0, -1}}, b{{1, 1}}, B{{1, -1}};
}  // namespace

TEST_CASE("words") {
  CHECK(free_reduce(concat(a, A)).empty());
  CHECK(free_reduce({{0, 1}, {1, 1}, {1, -1}, {0, -1}, {2, 1}}) == Word{{2, 1}});
  CHECK(inverse(concat(a, b)) == concat(B, A));
  CHECK(power(a, 3) == Word{{0, 1}, {0, 1}, {0, 1}});
  CHECK(power(a, -2) == Word{{0, -1}, {0, -1}});
  CHECK(power(a, 0).empty());
  CHECK(commutator(a, b) == Word{{0, 1}, {1, 1}, {0, -1}, {1, -1}});
  CHECK(cyclic_reduce({{1, -1}, {0, 1}, {1, 1}}) == Word{{0, 1}});
  CHECK(rotate({{0, 1}, {1, 1}, {2, 1}}, 1) == Word{{1, 1}, {2, 1}, {0, 1}});
  CHECK(evaluate_word({}, upsilon_images()).is_identity());
  CHECK_THROWS_AS(evaluate_word({{7, 1}}, upsilon_images()), InvalidParameters);
  CHECK(exponent_sum_row(commutator(a, b), 2) == std::vector<long>{0, 0});

  auto rng = oracles::make_rng(10);
  for (int t = 0; t < 500; ++t) {
    Word w = oracles::random_word(rng, 3, 30);
    Word r = free_reduce(w);
    REQUIRE(free_reduce(r) == r);
    REQUIRE(exponent_sum_row(w, 3) == exponent_sum_row(r, 3));
    REQUIRE(free_reduce(concat(w, inverse(w))).empty());
    REQUIRE(evaluate_word(w, upsilon_images()) == evaluate_word(r, upsilon_images()));
  }
}

TEST_CASE("text format") {
  const auto& names = upsilon_presentation().generator_names;
  CHECK(names == std::vector<std::string>{"n1", "n2", "n3", "n4", "n5"});
  CHECK(format_word({}, names) == "1");
  CHECK(format_word({{0, 1}, {2, -1}}, names) == "n1 n3^-1");
  CHECK(parse_word("n3^-2 n1^2", names) == Word{{2, -1}, {2, -1}, {0, 1}, {0, 1}});
  CHECK(parse_word("1", names).empty());
  CHECK_THROWS_AS(parse_word("n6", names), ParseError);
  CHECK_THROWS_AS(parse_word("n1^x", names), ParseError);
  auto rels = parse_relators("# comment\n\nn1 n3 n1^-1 n3^-1\n", names);
  CHECK(rels.size() == 1);
  const auto& p = upsilon_presentation();
  CHECK(parse_relators(format_relators(p), names) == p.relators);
}

TEST_CASE("Upsilon presentation") {
  const auto& p = upsilon_presentation();
  CHECK(p.generator_count() == 5);
  CHECK(p.relators.size() == 13);
  CHECK_FALSE(first_failing_relator(p).has_value());
  const Word n1{{0, 1}}, n3{{2, 1}}, n5{{4, 1}};
  CHECK(p.relators[0] == commutator(n1, n3));
  CHECK(p.relators[3] == power(concat(n3, n5), 3));
  CHECK(exponent_sum_row(p.relators[3], 5) == std::vector<long>{0, 0, 3, 0, 3});
  for (const Word& r : p.relators) CHECK(evaluate_word(r, *p.images).is_identity());

  Presentation broken = p;
  broken.relators[6].pop_back();
  CHECK(first_failing_relator(broken) == std::optional<std::size_t>(6));
}

TEST_CASE("the balanced relation R and n2^t") {
  const auto& names = upsilon_presentation().generator_names;
  const Word expanded = parse_word(
      "n5^-1 n3^-1 n5^-1 n3^-1 n5^-1 n3^-1 n2^-1 n3^2 n4 n2 n1 n3 n5^-1 n1^-1 n4^-1 n5 n2 n4^-1 n5 "
      "n1^-1 n4^-1 n1^-1 n4^-1 n5 n1^-1 n2^-1 n5 n3 n5 n1 n4 n5^-1 n2^-1 n4 n3^-1 n1 n4 n2 n1",
      names);
  CHECK(upsilon_balanced_relation() == expanded);
  CHECK(exponent_sum_row(expanded, 5) == std::vector<long>(5, 0));
  CHECK(evaluate_word(expanded, upsilon_images()).is_identity());
  CHECK(evaluate_word(n2_transpose_word(), upsilon_images()) == transpose(generators_upsilon()[1]));
}

TEST_CASE("Reidemeister-Schreier: trivial and free-group cases") {
  const auto& p = upsilon_presentation();
  auto whole = reidemeister_schreier(p, [](const GroupMatrix&) { return true; }, 10);
  CHECK(whole.index() == 1);
  CHECK(whole.presentation.generator_count() == 5);
  CHECK(whole.presentation.relators == p.relators);
  CHECK(whole.generator_images == std::vector<GroupMatrix>(p.images->begin(), p.images->end()));

  // Exponent sum of x1 divisible by 3 in F2: Nielsen-Schreier rank 1 + 3(2 - 1) = 4.
  auto sub = reidemeister_schreier_abstract(
      free_group(2), [](const Word& w) { return exponent_sum_of(w, 0) % 3 == 0; }, 10);
  CHECK(sub.index() == 3);
  CHECK(sub.presentation.generator_count() == 4);
  CHECK(sub.presentation.relators.empty());
  for (const Word& h : sub.generator_images) CHECK(exponent_sum_of(h, 0) % 3 == 0);

  // <a | a^6> with even exponent sum: the subgroup <a^2> = Z/3.
  Presentation cyclic = free_group(1);
  cyclic.relators.push_back(power(a, 6));
  auto even = reidemeister_schreier_abstract(
      cyclic, [](const Word& w) { return exponent_sum_of(w, 0) % 2 == 0; }, 10);
  CHECK(even.index() == 2);
  CHECK(even.presentation.generator_count() == 1);
  CHECK(even.generator_images[0] == power(a, 2));
  for (const Word& r : even.presentation.relators) CHECK(r == power(Word{{0, 1}}, 3));
}

TEST_CASE("Reidemeister-Schreier: errors") {
  const auto& p = upsilon_presentation();
  CHECK_THROWS_AS(reidemeister_schreier(p, [](const GroupMatrix&) { return false; }, 10),
                  OracleInconsistency);
  CHECK_THROWS_AS(
      reidemeister_schreier(p, [](const GroupMatrix& g) { return in_gamma_beta(g, 3); }, 10),
      IndexOverflow);
  // A union of two cosets of Gamma(3) is not a subgroup.
  CHECK_THROWS_AS(reidemeister_schreier(
                      p, [](const GroupMatrix& g) { return f_map(g)[0] != 2; }, 100),
                  OracleInconsistency);
}

TEST_CASE("Reidemeister-Schreier on Upsilon: Gamma(3) and the index-3 groups") {
  const auto& p = upsilon_presentation();
  auto check = [&](const SubgroupSpec& spec, std::size_t expected_index) {
    auto sub = reidemeister_schreier(p, [&](const GroupMatrix& g) { return spec.contains(g); }, 512);
    REQUIRE(sub.index() == expected_index);
    const auto& graph = sub.graph;
    REQUIRE(graph.vertices[0].is_identity());
    REQUIRE(graph.edge_count() == expected_index * 2 * 5);
    for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
      for (std::size_t slot = 0; slot < 10; ++slot) {
        const auto& e = graph.edges[v][slot];
        GroupMatrix g = (*p.images)[slot / 2];
        if (slot % 2) g = inverse(g);
        REQUIRE(graph.vertices[v] * g == e.label * graph.vertices[e.target]);
      }
    }
    for (const auto& h : sub.generator_images) REQUIRE(spec.contains(h));
    REQUIRE_FALSE(first_failing_relator(sub.presentation).has_value());
  };
  check(SubgroupSpec::gamma3(), 81);
  for (const auto& v : all_index3_vectors()) check(SubgroupSpec::index3(v), 3);
}

TEST_CASE("rewriting") {
  const auto& p = upsilon_presentation();
  RewriteDictionary id;
  for (int i = 0; i < 5; ++i) {
    id.new_in_old.push_back({{i, 1}});
    id.old_in_new.push_back(Word{{i, 1}});
  }
  id.new_names = p.generator_names;
  Presentation same = rewrite_presentation(p, id);
  CHECK(same.relators == p.relators);
  CHECK(same.generator_names == p.generator_names);

  // <a | a^6> on b = a^2: a has no expression in b.
  Presentation cyclic = free_group(1);
  cyclic.relators.push_back(power(a, 6));
  RewriteDictionary squares;
  squares.new_in_old = {power(a, 2)};
  squares.old_in_new = {std::nullopt};
  CHECK_THROWS_AS(rewrite_presentation(cyclic, squares), IncompleteDictionary);

  // <a, b | [a, b]> with images n1, n3, rewritten on h1 = a, h2 = ab.
  Presentation ab;
  ab.generator_names = {"a", "b"};
  ab.relators = {commutator(a, b)};
  ab.images = std::vector<GroupMatrix>{generators_upsilon()[0], generators_upsilon()[2]};
  RewriteDictionary d;
  d.new_in_old = {a, concat(a, b)};
  d.old_in_new = {Word{{0, 1}}, Word{{0, -1}, {1, 1}}};
  Presentation q = rewrite_presentation(ab, d);
  CHECK(q.relators == std::vector<Word>{{{1, 1}, {0, -1}, {1, -1}, {0, 1}}});
  CHECK(q.images->at(1) == generators_upsilon()[0] * generators_upsilon()[2]);
  CHECK_FALSE(first_failing_relator(q).has_value());

  // A dictionary whose two halves disagree is rejected.
  d.old_in_new = {Word{{0, 1}}, Word{{1, 1}}};
  CHECK_THROWS_AS(rewrite_presentation(ab, d), InvalidParameters);
}

TEST_CASE("simplification keeps the abelianization and the weight denominator") {
  const auto& p = upsilon_presentation();
  for (const auto& v : {F3Vector{0, 0, 1, 0}, F3Vector{0, 1, 0, 0}}) {
    const SubgroupSpec spec = SubgroupSpec::index3(v);
    auto sub = reidemeister_schreier(p, [&](const GroupMatrix& g) { return spec.contains(g); }, 512);
    Presentation s = simplify_presentation(sub.presentation);
    CHECK(s.generator_count() <= sub.presentation.generator_count());
    CHECK_FALSE(first_failing_relator(s).has_value());
    SmithForm before = abelianization(sub.presentation), after = abelianization(s);
    CHECK(before.torsion() == after.torsion());
    CHECK(before.free_rank() == after.free_rank());
    CHECK(weight_denominator(s).weight_denominator ==
          weight_denominator(sub.presentation).weight_denominator);
  }
}
