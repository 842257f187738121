#include "su21/fpgroup.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace su21 {

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (Letter& l : out) l.exp = -l.exp;
  return out;
}

Word concat(const Word& u, const Word& v) {
  Word out = u;
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

Word power(const Word& w, long k) {
  const Word base = k < 0 ? inverse(w) : w;
  Word out;
  for (long i = 0; i < std::labs(k); ++i) out.insert(out.end(), base.begin(), base.end());
  return out;
}

Word commutator(const Word& u, const Word& v) {
  return concat(concat(u, v), concat(inverse(u), inverse(v)));
}

Word cyclic_reduce(Word w) {
  w = free_reduce(std::move(w));
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo].gen == w[hi - 1].gen && w[lo].exp == -w[hi - 1].exp) {
    ++lo;
    --hi;
  }
  return Word(w.begin() + static_cast<long>(lo), w.begin() + static_cast<long>(hi));
}

Word rotate(const Word& w, std::size_t k) {
  if (w.empty()) return w;
  Word out = w;
  std::rotate(out.begin(), out.begin() + static_cast<long>(k % w.size()), out.end());
  return out;
}

GroupMatrix evaluate_word(const Word& w, std::span<const GroupMatrix> images) {
  GroupMatrix acc = GroupMatrix::identity();
  std::vector<std::optional<GroupMatrix>> inverses(images.size());
  for (const Letter& l : w) {
    if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= images.size()) {
      throw InvalidParameters("generator index " + std::to_string(l.gen) + " out of range");
    }
    if (l.exp > 0) {
      acc = acc * images[l.gen];
    } else {
      auto& inv = inverses[l.gen];
      if (!inv) inv = inverse(images[l.gen]);
      acc = acc * *inv;
    }
  }
  return acc;
}

std::vector<long> exponent_sum_row(const Word& w, std::size_t generator_count) {
  std::vector<long> row(generator_count, 0);
  for (const Letter& l : w) {
    if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= generator_count) {
      throw InvalidParameters("generator index " + std::to_string(l.gen) + " out of range");
    }
    row[l.gen] += l.exp;
  }
  return row;
}

std::vector<std::string> default_generator_names(std::size_t count, std::string_view prefix) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 0; i < count; ++i) names.push_back(std::string(prefix) + std::to_string(i + 1));
  return names;
}

std::string format_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& l : w) {
    if (!out.empty()) out += ' ';
    out += names.at(l.gen);
    if (l.exp < 0) out += "^-1";
  }
  return out;
}

Word parse_word(std::string_view text, const std::vector<std::string>& names) {
  Word w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    std::string name = tok;
    long k = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      name = tok.substr(0, caret);
      const char* first = tok.data() + caret + 1;
      const char* last = tok.data() + tok.size();
      auto [ptr, ec] = std::from_chars(first, last, k);
      if (ec != std::errc{} || ptr != last || k == 0) throw ParseError("bad exponent in '" + tok + "'");
    }
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw ParseError("unknown generator '" + name + "'");
    int gen = static_cast<int>(it - names.begin());
    for (long i = 0; i < std::labs(k); ++i) w.push_back({gen, k > 0 ? 1 : -1});
  }
  return w;
}

std::string format_relators(const Presentation& p) {
  std::string out;
  for (const Word& r : p.relators) out += format_word(r, p.generator_names) + '\n';
  return out;
}

std::vector<Word> parse_relators(std::string_view text, const std::vector<std::string>& names) {
  std::vector<Word> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line.front() == '#') continue;
    out.push_back(parse_word(line, names));
  }
  return out;
}

std::optional<std::size_t> first_failing_relator(const Presentation& p) {
  if (!p.images) throw InvalidParameters("presentation has no matrix images");
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (!evaluate_word(p.relators[i], *p.images).is_identity()) return i;
  }
  return std::nullopt;
}

namespace {

// Transcribed in display order; r_k is line k.
constexpr const char* kUpsilonRelators[] = {
    "n1 n3 n1^-1 n3^-1",
    "n2 n3 n2^-1 n3^-1",
    "n4 n5 n4^-1 n5^-1",
    "n3 n5 n3 n5 n3 n5",
    "n3 n2 n1 n2^-1 n3 n1^-1 n3",
    "n1^-1 n3 n4^-1 n1^-1 n3 n4^-1 n1^-1 n3 n4^-1",
    "n5^-1 n2 n5 n4^-1 n1^-1 n2^-1 n3 n4 n3^-1 n1",
    "n4^-1 n1^-1 n3 n5 n2 n1 n5^-1 n4 n2^-1 n3^-1",
    "n5^-1 n4 n1 n5 n3^-1 n1^-1 n2^-1 n4^-1 n3^-2 n2",
    "n5^-1 n2 n1 n5^-1 n4 n1 n4 n1 n5^-1 n4 n2^-1",
    "n3 n5 n1 n4 n5^-1 n2^-1 n4 n3^-1 n1 n4 n2 n1",
    "n3^-1 n1 n4 n2 n3 n1 n5^-1 n1^-1 n4^-1 n5 n1^-1 n2^-1",
    "n4^-1 n3^-1 n5 n3 n1^-1 n4^-1 n2 n1 n3^-1 n4 n1 n5^-1 n4 n2^-1 n1^-1 n3",
};

const std::vector<std::string>& upsilon_names() {
  static const std::vector<std::string> names = default_generator_names(5, "n");
  return names;
}

}  // namespace

const Presentation& upsilon_presentation() {
  static const Presentation p = [] {
    Presentation q;
    q.generator_names = upsilon_names();
    for (const char* r : kUpsilonRelators) q.relators.push_back(parse_word(r, q.generator_names));
    const auto& gens = generators_upsilon();
    q.images = std::vector<GroupMatrix>(gens.begin(), gens.end());
    if (auto bad = first_failing_relator(q)) {
      throw Error("Upsilon relator r" + std::to_string(*bad + 1) + " does not evaluate to I3");
    }
    return q;
  }();
  return p;
}

Word upsilon_balanced_relation() {
  const auto& r = upsilon_presentation().relators;
  Word w = concat(concat(inverse(r[3]), inverse(r[8])), concat(inverse(r[9]), r[10]));
  return free_reduce(std::move(w));
}

Word n2_transpose_word() { return parse_word("n3^-1 n1 n4 n1 n3^-2 n2", upsilon_names()); }

namespace {

struct MatrixOps {
  GroupMatrix identity() const { return GroupMatrix::identity(); }
  GroupMatrix mul(const GroupMatrix& a, const GroupMatrix& b) const { return a * b; }
  GroupMatrix inverse(const GroupMatrix& a) const { return su21::inverse(a); }
  bool is_identity(const GroupMatrix& a) const { return a.is_identity(); }
};

struct WordOps {
  Word identity() const { return {}; }
  Word mul(const Word& a, const Word& b) const { return free_reduce(concat(a, b)); }
  Word inverse(const Word& a) const { return su21::inverse(a); }
  bool is_identity(const Word& a) const { return a.empty(); }
};

}  // namespace

SubgroupPresentation<GroupMatrix> reidemeister_schreier(
    const Presentation& ambient, const std::function<bool(const GroupMatrix&)>& membership,
    std::size_t max_index) {
  if (!ambient.images) throw InvalidParameters("reidemeister_schreier needs matrix images");
  auto out = detail::reidemeister_schreier_impl<GroupMatrix>(
      ambient.generator_count(), ambient.relators, *ambient.images, MatrixOps{}, membership,
      max_index);
  out.presentation.images = out.generator_images;
  return out;
}

SubgroupPresentation<Word> reidemeister_schreier_abstract(
    const Presentation& ambient, const std::function<bool(const Word&)>& membership,
    std::size_t max_index) {
  std::vector<Word> gens;
  for (std::size_t i = 0; i < ambient.generator_count(); ++i) gens.push_back({{static_cast<int>(i), 1}});
  return detail::reidemeister_schreier_impl<Word>(ambient.generator_count(), ambient.relators,
                                                  gens, WordOps{}, membership, max_index);
}

namespace {

Word substitute(const Word& w, const std::vector<Word>& replacement) {
  Word out;
  for (const Letter& l : w) {
    const Word& piece = replacement.at(l.gen);
    if (l.exp > 0) {
      out.insert(out.end(), piece.begin(), piece.end());
    } else {
      Word inv = inverse(piece);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return free_reduce(std::move(out));
}

}  // namespace

Presentation rewrite_presentation(const Presentation& p, const RewriteDictionary& dict) {
  const std::size_t old_count = p.generator_count();
  const std::size_t new_count = dict.new_in_old.size();
  if (dict.old_in_new.size() != old_count) {
    throw IncompleteDictionary("need one expression per old generator");
  }
  std::vector<Word> old_to_new;
  for (std::size_t i = 0; i < old_count; ++i) {
    if (!dict.old_in_new[i]) {
      throw IncompleteDictionary("no expression for old generator " + p.generator_names[i]);
    }
    for (const Letter& l : *dict.old_in_new[i]) {
      if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= new_count) {
        throw InvalidParameters("old_in_new refers to a missing new generator");
      }
    }
    old_to_new.push_back(*dict.old_in_new[i]);
  }

  Presentation q;
  q.generator_names = dict.new_names.empty() ? default_generator_names(new_count, "h")
                                             : dict.new_names;
  if (q.generator_names.size() != new_count) throw InvalidParameters("new_names has wrong size");

  // Old relators with every g_i replaced by x_i(h).
  for (const Word& r : p.relators) {
    Word s = substitute(r, old_to_new);
    if (!s.empty()) q.relators.push_back(std::move(s));
  }
  // h_j = w_j(g) becomes h_j^-1 w_j(x(h)).
  for (std::size_t j = 0; j < new_count; ++j) {
    Word s = free_reduce(concat({{static_cast<int>(j), -1}}, substitute(dict.new_in_old[j], old_to_new)));
    if (!s.empty()) q.relators.push_back(std::move(s));
  }

  if (p.images) {
    std::vector<GroupMatrix> imgs;
    for (const Word& w : dict.new_in_old) imgs.push_back(evaluate_word(w, *p.images));
    for (std::size_t i = 0; i < old_count; ++i) {
      if (!(evaluate_word(old_to_new[i], imgs) == (*p.images)[i])) {
        throw InvalidParameters("dictionaries disagree on the image of " + p.generator_names[i]);
      }
    }
    q.images = std::move(imgs);
  }
  return q;
}

namespace {

// Smallest rotation of w or of its inverse, as a canonical key.
Word canonical_cyclic(const Word& w) {
  Word best = w;
  const Word inv = inverse(w);
  for (std::size_t k = 0; k < w.size(); ++k) {
    best = std::min({best, rotate(w, k), rotate(inv, k)});
  }
  return best;
}

std::vector<Word> tidy_relators(const std::vector<Word>& relators) {
  std::set<Word> seen;
  std::vector<Word> out;
  for (const Word& r : relators) {
    Word c = cyclic_reduce(r);
    if (c.empty()) continue;
    if (seen.insert(canonical_cyclic(c)).second) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

Presentation simplify_presentation(const Presentation& p, std::size_t max_relator_length) {
  Presentation q = p;
  q.relators = tidy_relators(q.relators);
  while (true) {
    // Shortest relator in which some generator appears exactly once.
    std::optional<std::pair<std::size_t, int>> pick;
    for (std::size_t ri = 0; ri < q.relators.size(); ++ri) {
      const Word& r = q.relators[ri];
      if (pick && q.relators[pick->first].size() <= r.size()) continue;
      std::map<int, int> count;
      for (const Letter& l : r) ++count[l.gen];
      for (auto [gen, c] : count) {
        if (c == 1) {
          pick = {ri, gen};
          break;
        }
      }
    }
    if (!pick) break;
    auto [ri, gen] = *pick;
    // Rotate so the generator comes first: g^e u = 1, so g = u^-e.
    Word r = q.relators[ri];
    auto pos = std::find_if(r.begin(), r.end(), [gen](const Letter& l) { return l.gen == gen; });
    r = rotate(r, static_cast<std::size_t>(pos - r.begin()));
    const int e = r.front().exp;
    Word rest(r.begin() + 1, r.end());
    Word value = e > 0 ? inverse(rest) : rest;

    std::vector<Word> replacement;
    for (std::size_t i = 0; i < q.generator_count(); ++i) {
      replacement.push_back({{static_cast<int>(i), 1}});
    }
    replacement[gen] = value;
    std::vector<Word> next;
    bool too_long = false;
    for (std::size_t i = 0; i < q.relators.size(); ++i) {
      if (i == ri) continue;
      Word s = substitute(q.relators[i], replacement);
      if (s.size() > max_relator_length) too_long = true;
      next.push_back(std::move(s));
    }
    if (too_long) break;
    // Renumber the generators above gen.
    for (Word& w : next) {
      for (Letter& l : w) {
        if (l.gen > gen) --l.gen;
      }
    }
    q.relators = tidy_relators(next);
    q.generator_names.erase(q.generator_names.begin() + gen);
    if (q.images) q.images->erase(q.images->begin() + gen);
  }
  return q;
}

}  // namespace su21
