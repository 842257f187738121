#pragma once

// Finitely presented groups: words, presentations with optional matrix images,
// Reidemeister-Schreier and rewriting.

#include <cstddef>
#include <deque>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "su21/errors.hpp"
#include "su21/matgroup.hpp"

namespace su21 {

struct Letter {
  int gen = 0;
  int exp = 1;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

Word free_reduce(Word w);
Word inverse(const Word& w);
Word concat(const Word& u, const Word& v);
// w^k for any integer k.
Word power(const Word& w, long k);
Word commutator(const Word& u, const Word& v);  // u v u^-1 v^-1
// Free reduction followed by removal of cancelling ends.
Word cyclic_reduce(Word w);
// The rotation of w left by k letters.
Word rotate(const Word& w, std::size_t k);

// Throws InvalidParameters if a generator index is out of range.
GroupMatrix evaluate_word(const Word& w, std::span<const GroupMatrix> images);

// Signed occurrence count of each generator.
std::vector<long> exponent_sum_row(const Word& w, std::size_t generator_count);

struct Presentation {
  std::vector<std::string> generator_names;
  std::vector<Word> relators;
  // One matrix per generator; absent for abstract presentations.
  std::optional<std::vector<GroupMatrix>> images;

  std::size_t generator_count() const { return generator_names.size(); }
  bool has_images() const { return images.has_value(); }
};

// Generator names g1, g2, ...
std::vector<std::string> default_generator_names(std::size_t count, std::string_view prefix);

// Space separated signed names: "n1 n3 n1^-1 n3^-1". The empty word prints as
// "1". Powers "n3^-2" are accepted on input.
std::string format_word(const Word& w, const std::vector<std::string>& names);
Word parse_word(std::string_view text, const std::vector<std::string>& names);
// One relator per line.
std::string format_relators(const Presentation& p);
std::vector<Word> parse_relators(std::string_view text, const std::vector<std::string>& names);

// Index of the first relator that does not evaluate to I3, if any.
std::optional<std::size_t> first_failing_relator(const Presentation& p);

// The five-generator, thirteen-relator presentation of Upsilon on n1..n5.
// Every relator is checked to evaluate to I3 at construction.
const Presentation& upsilon_presentation();
// r4^-1 r9^-1 r10^-1 r11, freely reduced.
Word upsilon_balanced_relation();
// n2^t = n3^-1 n1 n4 n1 n3^-2 n2.
Word n2_transpose_word();

// Reidemeister-Schreier coset graph. Slot 2i of a vertex holds the edge for
// generator i, slot 2i+1 the edge for its inverse.
template <class Element>
struct CosetGraph {
  struct Edge {
    std::size_t target = 0;
    Element label;
    // 0 for a trivial H-label, otherwise +-(k+1) for subgroup generator k.
    int symbol = 0;
  };

  std::vector<Element> vertices;
  std::vector<std::vector<Edge>> edges;

  std::size_t vertex_count() const { return vertices.size(); }
  std::size_t edge_count() const {
    std::size_t n = 0;
    for (const auto& e : edges) n += e.size();
    return n;
  }
};

template <class Element>
struct SubgroupPresentation {
  Presentation presentation;
  CosetGraph<Element> graph;
  std::vector<Element> generator_images;

  std::size_t index() const { return graph.vertex_count(); }
};

// Subgroup of a matrix-image presentation cut out by a membership predicate.
// Throws IndexOverflow past max_index cosets and OracleInconsistency if the
// predicate does not describe a subgroup.
SubgroupPresentation<GroupMatrix> reidemeister_schreier(
    const Presentation& ambient, const std::function<bool(const GroupMatrix&)>& membership,
    std::size_t max_index);

// Same algorithm on an abstract presentation, with group elements represented
// by freely reduced words in the ambient generators. Only sound when the
// ambient group is free, or when membership is well defined on the quotient.
SubgroupPresentation<Word> reidemeister_schreier_abstract(
    const Presentation& ambient, const std::function<bool(const Word&)>& membership,
    std::size_t max_index);

// New generators as words in the old ones, and every old generator as a word in
// the new ones. A missing old_in_new entry raises IncompleteDictionary.
struct RewriteDictionary {
  std::vector<Word> new_in_old;
  std::vector<std::optional<Word>> old_in_new;
  std::vector<std::string> new_names;  // defaults to h1, h2, ... when empty
};

Presentation rewrite_presentation(const Presentation& p, const RewriteDictionary& dict);

// Optional Tietze pass: cyclically reduce, drop trivial and duplicate
// relators, and eliminate generators that occur exactly once in a relator.
Presentation simplify_presentation(const Presentation& p, std::size_t max_relator_length = 64);

namespace detail {

template <class Element, class Ops>
SubgroupPresentation<Element> reidemeister_schreier_impl(
    std::size_t gen_count, const std::vector<Word>& relators,
    const std::vector<Element>& generators, const Ops& ops,
    const std::function<bool(const Element&)>& membership, std::size_t max_index) {
  SubgroupPresentation<Element> out;
  auto& graph = out.graph;
  if (!membership(ops.identity())) {
    throw OracleInconsistency("membership predicate rejects the identity");
  }

  std::vector<Element> letters;  // slot 2i = g_i, 2i+1 = g_i^-1
  letters.reserve(2 * gen_count);
  for (const auto& g : generators) {
    letters.push_back(g);
    letters.push_back(ops.inverse(g));
  }

  std::vector<Element> vertex_inverses;
  graph.vertices.push_back(ops.identity());
  vertex_inverses.push_back(ops.identity());
  graph.edges.emplace_back(2 * gen_count);

  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t r = queue.front();
    queue.pop_front();
    for (std::size_t slot = 0; slot < letters.size(); ++slot) {
      Element rg = ops.mul(graph.vertices[r], letters[slot]);
      std::optional<std::size_t> found;
      Element label;
      for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
        Element h = ops.mul(rg, vertex_inverses[v]);
        if (membership(h)) {
          found = v;
          label = std::move(h);
          break;
        }
      }
      auto& edge = graph.edges[r][slot];
      if (found) {
        edge.target = *found;
        edge.label = std::move(label);
        continue;
      }
      if (graph.vertices.size() >= max_index) {
        throw IndexOverflow("coset count exceeds max_index = " + std::to_string(max_index));
      }
      edge.target = graph.vertices.size();
      edge.label = ops.identity();
      vertex_inverses.push_back(ops.inverse(rg));
      graph.vertices.push_back(std::move(rg));
      graph.edges.emplace_back(2 * gen_count);
      queue.push_back(edge.target);
    }
  }

  // Every g-edge must be undone by the matching g^-1 edge with inverse label.
  for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
    for (std::size_t i = 0; i < gen_count; ++i) {
      const auto& fwd = graph.edges[v][2 * i];
      const auto& back = graph.edges[fwd.target][2 * i + 1];
      if (back.target != v || !(back.label == ops.inverse(fwd.label))) {
        throw OracleInconsistency("coset graph is not consistent: predicate is not a subgroup");
      }
    }
  }

  int next_symbol = 1;
  for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
    for (std::size_t i = 0; i < gen_count; ++i) {
      auto& fwd = graph.edges[v][2 * i];
      if (ops.is_identity(fwd.label)) continue;
      fwd.symbol = next_symbol;
      graph.edges[fwd.target][2 * i + 1].symbol = -next_symbol;
      out.generator_images.push_back(fwd.label);
      ++next_symbol;
    }
  }

  auto& pres = out.presentation;
  pres.generator_names = default_generator_names(out.generator_images.size(), "h");
  for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
    for (const Word& w : relators) {
      Word trace;
      std::size_t cur = v;
      for (const Letter& l : w) {
        const auto& e = graph.edges[cur][2 * l.gen + (l.exp < 0 ? 1 : 0)];
        if (e.symbol != 0) trace.push_back({std::abs(e.symbol) - 1, e.symbol > 0 ? 1 : -1});
        cur = e.target;
      }
      if (cur != v) throw OracleInconsistency("relator trace is not a closed loop");
      trace = free_reduce(std::move(trace));
      if (!trace.empty()) pres.relators.push_back(std::move(trace));
    }
  }
  return out;
}

}  // namespace detail

}  // namespace su21
