#include "su21/json_io.hpp"

#include "su21/errors.hpp"

namespace su21 {

using nlohmann::json;

json integer_to_json(const mpz_class& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

mpz_class integer_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<unsigned long>()));
  if (j.is_string()) {
    mpz_class n;
    if (n.set_str(j.get<std::string>(), 10) != 0) throw ParseError("bad integer string " + j.dump());
    return n;
  }
  throw ParseError("expected an integer, got " + j.dump());
}

json to_json(const Eisenstein& z) { return json::array({integer_to_json(z.a()), integer_to_json(z.b())}); }

Eisenstein eisenstein_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("Eisenstein integer must be [a, b], got " + j.dump());
  return {integer_from_json(j[0]), integer_from_json(j[1])};
}

json to_json(const GroupMatrix& g) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i) {
    json row = json::array();
    for (int k = 0; k < 3; ++k) row.push_back(to_json(g(i, k)));
    rows.push_back(row);
  }
  return json{{"entries", rows}};
}

GroupMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("entries")) throw ParseError("matrix must be {\"entries\": ...}");
  const json& rows = j.at("entries");
  if (!rows.is_array() || rows.size() != 3) throw ParseError("entries must have three rows");
  GroupMatrix g;
  for (int i = 0; i < 3; ++i) {
    if (!rows[i].is_array() || rows[i].size() != 3) throw ParseError("each row must have three entries");
    for (int k = 0; k < 3; ++k) g(i, k) = eisenstein_from_json(rows[i][k]);
  }
  return g;
}

json to_json(const DenominatorReport& r) {
  json torsion = json::array();
  for (const auto& t : r.torsion_invariants) torsion.push_back(integer_to_json(t));
  json out{{"group", r.group.name()},
           {"index_in_upsilon", r.index_in_upsilon},
           {"generator_count", r.generator_count},
           {"relator_count", r.relator_count},
           {"weight_denominator", integer_to_json(r.weight_denominator)},
           {"torsion_invariants", torsion},
           {"free_rank", r.free_rank}};
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

}  // namespace su21
