// su21: command-line front end for the weight-denominator toolkit.
//
// Exit codes: 0 success, 1 domain or verification failure, 2 usage or parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "su21/cocycle.hpp"
#include "su21/errors.hpp"
#include "su21/fpgroup.hpp"
#include "su21/gendecomp.hpp"
#include "su21/json_io.hpp"
#include "su21/matgroup.hpp"
#include "su21/weightdenom.hpp"

namespace {

using nlohmann::json;
using namespace su21;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct CliConfig {
  bool json_output = false;
  std::size_t max_index = 512;
  double sigma_tolerance = 1e-6;
  bool parallel = false;

  PipelineOptions pipeline() const {
    PipelineOptions o;
    o.max_index = max_index;
    o.sigma.tolerance = sigma_tolerance;
    return o;
  }
};

// Thrown for unreadable files and similar usage problems.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GroupMatrix read_matrix(const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return matrix_from_json(j);
}

json vector_json(const F3Vector& v) { return json::array({v[0], v[1], v[2], v[3]}); }

// --- verify-presentation -------------------------------------------------

int cmd_verify_presentation(const CliConfig& cfg, const std::string& relator_file) {
  Presentation p = upsilon_presentation();
  if (!relator_file.empty()) p.relators = parse_relators(read_file(relator_file), p.generator_names);
  const auto& images = *p.images;
  json records = json::array();
  bool all_ok = true;
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    const bool ok = evaluate_word(p.relators[i], images).is_identity();
    all_ok = all_ok && ok;
    const std::string text = format_word(p.relators[i], p.generator_names);
    if (cfg.json_output) {
      records.push_back({{"index", i + 1}, {"ok", ok}, {"relator", text}});
    } else {
      std::cout << "r" << (i + 1) << ' ' << (ok ? "PASS" : "FAIL") << "  " << text << '\n';
    }
  }
  if (cfg.json_output) {
    print_json(records);
  } else {
    std::cout << (all_ok ? "all " : "not all ") << p.relators.size() << " relators evaluate to I3\n";
  }
  return all_ok ? kOk : kFailure;
}

// --- denom ---------------------------------------------------------------

void print_report(const DenominatorReport& r) {
  std::cout << "group:              " << r.group.name() << '\n'
            << "index in Upsilon:   " << r.index_in_upsilon << '\n'
            << "generators:         " << r.generator_count << '\n'
            << "relators:           " << r.relator_count << '\n'
            << "free rank:          " << r.free_rank << '\n'
            << "torsion invariants: [";
  for (std::size_t i = 0; i < r.torsion_invariants.size(); ++i) {
    std::cout << (i ? ", " : "") << r.torsion_invariants[i];
  }
  std::cout << "]\n";
  if (!r.note.empty()) std::cout << "note:               " << r.note << '\n';
  std::cout << "weight denominator: " << r.weight_denominator << '\n';
}

int cmd_denom(const CliConfig& cfg, const std::string& group) {
  const SubgroupSpec spec = parse_subgroup(group);
  const DenominatorReport r = weight_denominator_of(spec, cfg.pipeline());
  if (cfg.json_output) {
    print_json(to_json(r));
  } else {
    print_report(r);
  }
  return kOk;
}

// --- survey-index3 -------------------------------------------------------

int cmd_survey_index3(const CliConfig& cfg) {
  const std::vector<F3Vector> vectors = all_index3_vectors();
  const PipelineOptions options = cfg.pipeline();
  std::vector<DenominatorReport> reports;
  if (cfg.parallel) {
    std::vector<std::future<DenominatorReport>> jobs;
    for (const auto& v : vectors) {
      jobs.push_back(std::async(std::launch::async, [v, &options] {
        return weight_denominator_of(SubgroupSpec::index3(v), options);
      }));
    }
    for (auto& j : jobs) reports.push_back(j.get());
  } else {
    for (const auto& v : vectors) reports.push_back(weight_denominator_of(SubgroupSpec::index3(v), options));
  }

  std::map<mpz_class, std::size_t> counts;
  for (const auto& r : reports) ++counts[r.weight_denominator];
  // "13 groups with denominator 3, 27 with denominator 1": largest first.
  std::ostringstream summary;
  bool first = true;
  for (auto it = counts.rbegin(); it != counts.rend(); ++it) {
    summary << (first ? "" : ", ") << it->second << (first ? " groups" : "") << " with denominator "
            << it->first;
    first = false;
  }

  if (cfg.json_output) {
    json groups = json::array();
    for (const auto& r : reports) {
      groups.push_back({{"group", r.group.name()},
                        {"index_in_upsilon", r.index_in_upsilon},
                        {"vector", vector_json(r.group.vector())},
                        {"weight_denominator", integer_to_json(r.weight_denominator)}});
    }
    json count_json = json::object();
    for (const auto& [d, n] : counts) count_json[d.get_str()] = n;
    print_json({{"counts", count_json}, {"groups", groups}, {"summary", summary.str()}});
  } else {
    std::cout << "v            denominator\n";
    for (const auto& r : reports) {
      const F3Vector& v = r.group.vector();
      std::cout << '(' << v[0] << ',' << v[1] << ',' << v[2] << ',' << v[3] << ")    "
                << r.weight_denominator << '\n';
    }
    std::cout << summary.str() << '\n';
  }
  return kOk;
}

// --- sigma / decompose / exists ------------------------------------------

void require_gamma1(const GroupMatrix& g, const std::string& what) {
  if (!is_unitary(g) || !(det(g) == Eisenstein(1))) {
    throw DomainError(what + " is not in SU(2,1)(Z[zeta])");
  }
}

int cmd_sigma(const CliConfig& cfg, const std::string& g_file, const std::string& h_file) {
  const GroupMatrix g = read_matrix(g_file);
  const GroupMatrix h = read_matrix(h_file);
  require_gamma1(g, "g");
  require_gamma1(h, "h");
  SigmaOptions options = SigmaOptions::defaults();
  options.tolerance = cfg.sigma_tolerance;
  const long s = sigma(g, h, options);
  if (cfg.json_output) {
    print_json({{"sigma", s}});
  } else {
    std::cout << s << '\n';
  }
  return kOk;
}

int cmd_decompose(const CliConfig& cfg, const std::string& matrix_file) {
  const GroupMatrix g = read_matrix(matrix_file);
  const Decomposition d = decompose_detailed(g);
  const auto& names = upsilon_presentation().generator_names;
  const std::string word = format_word(d.word, names);
  if (cfg.json_output) {
    json heights = json::array();
    for (const auto& st : d.steps) heights.push_back(integer_to_json(st.height_before));
    heights.push_back(1);
    print_json({{"heights", heights}, {"length", d.word.size()}, {"word", word}});
  } else {
    std::cout << word << '\n';
  }
  return kOk;
}

int cmd_exists(const CliConfig& cfg, const std::string& group, const std::string& weight) {
  const SubgroupSpec spec = parse_subgroup(group);
  const mpq_class w = parse_weight(weight);
  const DenominatorReport r = weight_denominator_of(spec, cfg.pipeline());
  const bool exists =
      mpz_divisible_p(r.weight_denominator.get_mpz_t(), w.get_den_mpz_t()) != 0;
  if (cfg.json_output) {
    print_json({{"exists", exists},
                {"group", r.group.name()},
                {"weight", w.get_str()},
                {"weight_denominator", integer_to_json(r.weight_denominator)}});
  } else {
    std::cout << (exists ? "true" : "false") << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weight denominators of arithmetic subgroups of SU(2,1) over Z[zeta]"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  app.add_flag("--json", cfg.json_output, "JSON output with sorted keys");
  app.add_option("--max-index", cfg.max_index, "Largest coset count Reidemeister-Schreier may build")
      ->check(CLI::PositiveNumber);
  app.add_option("--sigma-tolerance", cfg.sigma_tolerance, "Rounding tolerance for sigma")
      ->check(CLI::Range(0.0, 0.5));
  app.add_flag("--parallel", cfg.parallel, "Run the index-3 survey on several threads");

  std::string relator_file;
  auto* verify = app.add_subcommand("verify-presentation", "Check the 13 relators of Upsilon");
  verify->add_option("--relators", relator_file, "Debug: read relators from FILE instead");

  std::string group;
  auto* denom = app.add_subcommand("denom", "Weight denominator of a group");
  denom->add_option("group", group, "upsilon, gamma_sqrt3, gamma3 or index3:a,b,c,d")->required();

  auto* survey = app.add_subcommand("survey-index3", "Weight denominators of the 40 index-3 groups");

  std::string g_file, h_file;
  auto* sig = app.add_subcommand("sigma", "The cocycle sigma(g, h)");
  sig->set_help_flag("--help", "Print this help message and exit");
  sig->add_option("--g", g_file, "Matrix file for g")->required();
  sig->add_option("--h", h_file, "Matrix file for h")->required();

  std::string matrix_file;
  auto* dec = app.add_subcommand("decompose", "Write an element of Upsilon as a word in n1..n5");
  dec->add_option("--matrix", matrix_file, "Matrix file")->required();

  std::string weight;
  auto* ex = app.add_subcommand("exists", "Does a multiplier system of the given weight exist?");
  ex->add_option("group", group, "Group name")->required();
  ex->add_option("weight", weight, "Weight a/b with b >= 1")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify) return cmd_verify_presentation(cfg, relator_file);
    if (*denom) return cmd_denom(cfg, group);
    if (*survey) return cmd_survey_index3(cfg);
    if (*sig) return cmd_sigma(cfg, g_file, h_file);
    if (*dec) return cmd_decompose(cfg, matrix_file);
    if (*ex) return cmd_exists(cfg, group, weight);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidParameters& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}
