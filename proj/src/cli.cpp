#include "homat/cli.hpp"

#include <memory>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "homat/automorphism.hpp"
#include "homat/enumerate.hpp"
#include "homat/errors.hpp"
#include "homat/hom.hpp"
#include "homat/invariance.hpp"
#include "homat/json_io.hpp"
#include "homat/tension.hpp"
#include "homat/tensor.hpp"
#include "homat/tutte.hpp"
#include "homat/weighted_graph.hpp"

namespace homat {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitInconsistent = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

Multigraph load_multigraph(const std::string& path) {
  try {
    return parse_multigraph(read_file(path));
  } catch (const input_error& e) {
    throw input_error(path + ": " + e.what());
  }
}

LabeledGraph load_labeled_graph(const std::string& path) {
  try {
    return parse_labeled_graph(read_file(path));
  } catch (const input_error& e) {
    throw input_error(path + ": " + e.what());
  }
}

WeightedGraph load_weighted_graph(const std::string& path) {
  try {
    return parse_weighted_graph(read_file(path));
  } catch (const input_error& e) {
    throw input_error(path + ": " + e.what());
  }
}

std::vector<long> parse_residue_set(const std::string& text) {
  std::vector<long> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      long value = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(value);
    } catch (const std::exception&) {
      throw input_error("--set: \"" + item + "\" is not an integer");
    }
  }
  return out;
}

std::string orbits_str(const std::vector<std::vector<int>>& orbits) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    if (i) os << ",";
    os << "[";
    for (std::size_t j = 0; j < orbits[i].size(); ++j) {
      if (j) os << ",";
      os << orbits[i][j];
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

void print_pair_scan(std::ostream& out, const PairScanReport& report, bool as_json) {
  if (as_json) {
    out << pair_scan_json(report) << "\n";
    return;
  }
  out << "group_property " << (report.group_property ? "true" : "false") << "\n";
  out << "identity_everywhere " << (report.identity_everywhere ? "true" : "false") << "\n";
  out << "pairs_tested " << report.pairs_tested << "\n";
  if (report.witness) {
    out << "witness F1 " << report.witness->f1.graph().describe() << " labels at";
    for (int v : report.witness->f1.labels()) out << " " << v;
    out << "\n";
    out << "witness F2 " << report.witness->f2.graph().describe() << " labels at";
    for (int v : report.witness->f2.labels()) out << " " << v;
    out << "\n";
    out << "lhs " << rational_str(report.witness->lhs) << "\n";
    out << "rhs " << rational_str(report.witness->rhs) << "\n";
  }
  out << (report.inconclusive
              ? "inconclusive"
              : (report.consistent() ? "consistent" : "inconsistent"))
      << "\n";
}

void print_verdict(std::ostream& out, const InvarianceVerdict& verdict, bool as_json) {
  if (as_json) {
    out << verdict_json(verdict) << "\n";
    return;
  }
  out << "target " << verdict.target << "\n";
  out << "transitive " << (verdict.transitive ? "true" : "false") << "\n";
  out << "generously_transitive " << (verdict.generously_transitive ? "true" : "false")
      << "\n";
  out << "pairs_tested " << verdict.pairs_tested << "\n";
  if (verdict.witness) {
    out << "witness first  " << verdict.witness->first.describe() << "\n";
    out << "witness second " << verdict.witness->second.describe() << "\n";
    out << "h " << rational_str(verdict.witness->h_first) << " vs "
        << rational_str(verdict.witness->h_second) << "\n";
  }
  out << (verdict.inconclusive
              ? "inconclusive"
              : (verdict.consistent ? "consistent" : "inconsistent"))
      << "\n";
}

int scan_exit(const PairScanReport& report) {
  if (report.inconclusive) return kExitBudget;
  return report.consistent() ? kExitOk : kExitInconsistent;
}

int verdict_exit(const InvarianceVerdict& verdict) {
  if (verdict.inconclusive) return kExitBudget;
  return verdict.consistent ? kExitOk : kExitInconsistent;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact graph homomorphism invariants"};
  app.require_subcommand(1);
  std::string file_f, file_g, set_text, format = "table";
  int opt_k = -1;
  long opt_n = 0, opt_m = 0;
  std::string opt_y;
  int max_n = 5, jobs = 1;

  CLI::App* cmd_hom = app.add_subcommand("hom", "weighted homomorphism count");
  cmd_hom->add_option("F", file_f)->required();
  cmd_hom->add_option("G", file_g)->required();

  CLI::App* cmd_h = app.add_subcommand("h", "normalized homomorphism count");
  cmd_h->add_option("F", file_f)->required();
  cmd_h->add_option("G", file_g)->required();

  CLI::App* cmd_tensor = app.add_subcommand("tensor", "labelled-graph tensor");
  cmd_tensor->add_option("--k", opt_k);
  cmd_tensor->add_option("F", file_f)->required();
  cmd_tensor->add_option("G", file_g)->required();

  CLI::App* cmd_tutte = app.add_subcommand("tutte", "Tutte polynomial");
  cmd_tutte->add_option("F", file_f)->required();

  CLI::App* cmd_chromatic = app.add_subcommand("chromatic", "proper coloring count");
  cmd_chromatic->add_option("--n", opt_n)->required();
  cmd_chromatic->add_option("F", file_f)->required();

  CLI::App* cmd_flow = app.add_subcommand("flow", "nowhere-zero flow count");
  cmd_flow->add_option("--n", opt_n)->required();
  cmd_flow->add_option("F", file_f)->required();

  CLI::App* cmd_aut = app.add_subcommand("aut", "automorphism group");
  cmd_aut->add_option("G", file_g)->required();
  cmd_aut->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

  CLI::App* cmd_gentrans = app.add_subcommand("gentrans", "generous transitivity");
  cmd_gentrans->add_option("G", file_g)->required();
  cmd_gentrans->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

  CLI::App* cmd_twinreduce = app.add_subcommand("twinreduce", "merge twin classes");
  cmd_twinreduce->add_option("G", file_g)->required();

  CLI::App* cmd_orbits = app.add_subcommand("orbits", "orbit count on k-tuples");
  cmd_orbits->add_option("--k", opt_k)->required();
  cmd_orbits->add_option("G", file_g)->required();

  CLI::App* cmd_ranktest = app.add_subcommand("ranktest", "tensor span rank vs orbits");
  cmd_ranktest->add_option("--k", opt_k)->required();
  cmd_ranktest->add_option("G", file_g)->required();
  cmd_ranktest->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

  CLI::App* cmd_tensions = app.add_subcommand("tensions", "tension count");
  cmd_tensions->add_option("--m", opt_m)->required();
  cmd_tensions->add_option("--set", set_text)->required();
  cmd_tensions->add_option("F", file_f)->required();

  CLI::App* cmd_verify = app.add_subcommand("verify", "verified identities");
  cmd_verify->require_subcommand(1);
  CLI::App* cmd_example1 = cmd_verify->add_subcommand("example1", "hom/Tutte identity");
  cmd_example1->add_option("--n", opt_n)->required();
  cmd_example1->add_option("--y", opt_y)->required();
  cmd_example1->add_option("F", file_f)->required();
  CLI::App* cmd_lemma1 = cmd_verify->add_subcommand("lemma1", "multiplicativity vs transitivity");
  cmd_lemma1->add_option("G", file_g)->required();
  cmd_lemma1->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));
  CLI::App* cmd_lemma2 = cmd_verify->add_subcommand("lemma2", "flip equality vs generous transitivity");
  cmd_lemma2->add_option("G", file_g)->required();
  cmd_lemma2->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));
  int pairs = kDefaultGeneratedPairs;
  unsigned long seed = kDefaultWitnessSeed;
  CLI::App* cmd_theorem1 = cmd_verify->add_subcommand("theorem1", "matroid invariance verdict");
  cmd_theorem1->add_option("G", file_g)->required();
  cmd_theorem1->add_option("--pairs", pairs);
  cmd_theorem1->add_option("--seed", seed);
  cmd_theorem1->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

  CLI::App* cmd_survey = app.add_subcommand("survey", "all simple graphs up to a size");
  cmd_survey->add_option("--max-n", max_n)->required();
  cmd_survey->add_option("--jobs", jobs);
  cmd_survey->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

  CLI::App* cmd_witness = app.add_subcommand("witness", "matroid invariance witness search");
  cmd_witness->add_option("G", file_g)->required();
  cmd_witness->add_option("--pairs", pairs);
  cmd_witness->add_option("--seed", seed);
  cmd_witness->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

  std::vector<const char*> argv;
  argv.push_back("homat");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  const bool as_json = format == "json";

  try {
    if (cmd_hom->parsed()) {
      out << rational_str(hom(load_multigraph(file_f), load_weighted_graph(file_g))) << "\n";
    } else if (cmd_h->parsed()) {
      out << rational_str(h(load_multigraph(file_f), load_weighted_graph(file_g))) << "\n";
    } else if (cmd_tensor->parsed()) {
      LabeledGraph f = load_labeled_graph(file_f);
      if (opt_k >= 0 && opt_k != f.k()) {
        throw input_error("--k disagrees with the file's label count");
      }
      out << tensor_json(hom_tensor(f, load_weighted_graph(file_g))) << "\n";
    } else if (cmd_tutte->parsed()) {
      out << polynomial_json(tutte(load_multigraph(file_f))) << "\n";
    } else if (cmd_chromatic->parsed()) {
      out << rational_str(chromatic_value(load_multigraph(file_f), opt_n)) << "\n";
    } else if (cmd_flow->parsed()) {
      out << rational_str(flow_value(load_multigraph(file_f), opt_n)) << "\n";
    } else if (cmd_aut->parsed()) {
      WeightedGraph g = load_weighted_graph(file_g);
      AutomorphismGroup group = automorphisms(g);
      auto orbits = vertex_orbits(group);
      if (as_json) {
        std::ostringstream os;
        os << "{\"order\":" << group.order() << ",\"orbits\":" << orbits_str(orbits)
           << ",\"transitive\":" << (is_transitive(group) ? "true" : "false")
           << ",\"generously_transitive\":"
           << (is_generously_transitive(group) ? "true" : "false") << "}";
        out << os.str() << "\n";
      } else {
        out << "order " << group.order() << "\n";
        out << "orbits " << orbits_str(orbits) << "\n";
        out << "transitive " << (is_transitive(group) ? "true" : "false") << "\n";
        out << "generously_transitive "
            << (is_generously_transitive(group) ? "true" : "false") << "\n";
      }
    } else if (cmd_gentrans->parsed()) {
      WeightedGraph g = load_weighted_graph(file_g);
      AutomorphismGroup group = automorphisms(g);
      bool gt = is_generously_transitive(group);
      if (as_json) {
        out << "{\"generously_transitive\":" << (gt ? "true" : "false")
            << ",\"orbits\":" << orbits_str(vertex_orbits(group)) << "}\n";
      } else {
        out << (gt ? "true" : "false") << "\n";
        out << "orbits " << orbits_str(vertex_orbits(group)) << "\n";
      }
    } else if (cmd_twinreduce->parsed()) {
      out << weighted_graph_json(twin_reduce(load_weighted_graph(file_g))) << "\n";
    } else if (cmd_orbits->parsed()) {
      out << orbit_count(load_weighted_graph(file_g), opt_k) << "\n";
    } else if (cmd_ranktest->parsed()) {
      WeightedGraph g = load_weighted_graph(file_g);
      long long rank = invariant_rank(g, opt_k);
      long long orbits = orbit_count(g, opt_k);
      if (as_json) {
        out << "{\"rank\":" << rank << ",\"orbit_count\":" << orbits << ",\"saturated\":"
            << (rank == orbits ? "true" : "false") << "}\n";
      } else {
        out << "rank " << rank << "\n";
        out << "orbit_count " << orbits << "\n";
        out << (rank == orbits ? "saturated" : "rank deficit") << "\n";
      }
      if (rank > orbits) return kExitInconsistent;  // impossible unless the engine is wrong
    } else if (cmd_tensions->parsed()) {
      Multigraph f = load_multigraph(file_f);
      if (opt_m < 1) throw input_error("--m must be positive");
      std::vector<long> s = parse_residue_set(set_text);
      std::vector<bool> in_s(static_cast<std::size_t>(opt_m), false);
      for (long r : s) in_s[static_cast<std::size_t>(((r % opt_m) + opt_m) % opt_m)] = true;
      for (long r = 0; r < opt_m; ++r) {
        if (in_s[static_cast<std::size_t>(r)] !=
            in_s[static_cast<std::size_t>((opt_m - r) % opt_m)]) {
          err << "warning: set is not symmetric mod " << opt_m
              << "; the count depends on the orientation\n";
          break;
        }
      }
      out << count_tensions(f, opt_m, s).get_str() << "\n";
    } else if (cmd_example1->parsed()) {
      Rational y = parse_rational(opt_y);
      TutteHomReport report = verify_tutte_hom_identity(load_multigraph(file_f), opt_n, y);
      out << rational_str(report.hom_side) << (report.equal ? " = " : " != ")
          << rational_str(report.tutte_side) << "\n";
      return report.equal ? kExitOk : kExitInconsistent;
    } else if (cmd_lemma1->parsed()) {
      PairScanReport report = check_multiplicativity(load_weighted_graph(file_g));
      print_pair_scan(out, report, as_json);
      return scan_exit(report);
    } else if (cmd_lemma2->parsed()) {
      PairScanReport report = check_flip_invariance(load_weighted_graph(file_g));
      print_pair_scan(out, report, as_json);
      return scan_exit(report);
    } else if (cmd_theorem1->parsed() || cmd_witness->parsed()) {
      InvarianceVerdict verdict =
          check_matroid_invariance(load_weighted_graph(file_g), pairs, seed);
      print_verdict(out, verdict, as_json);
      return verdict_exit(verdict);
    } else if (cmd_survey->parsed()) {
      auto rows = exhaustive_survey(max_n, jobs);
      bool any_inconsistent = false, any_inconclusive = false;
      for (const SurveyRow& row : rows) {
        if (as_json) {
          out << survey_row_json(row) << "\n";
        } else {
          out << row.index << " " << row.graph.describe()
              << " transitive=" << (row.transitive ? "yes" : "no")
              << " gentrans=" << (row.generously_transitive ? "yes" : "no")
              << " mult=" << (row.multiplicativity.consistent() ? "ok" : "BAD")
              << " flip=" << (row.flip_invariance.consistent() ? "ok" : "BAD")
              << " matroid=" << (row.matroid_invariance.consistent ? "ok" : "BAD")
              << (row.consistent ? "" : "  << inconsistent") << "\n";
        }
        bool row_inconclusive = row.multiplicativity.inconclusive ||
                                row.flip_invariance.inconclusive ||
                                row.matroid_invariance.inconclusive;
        any_inconclusive = any_inconclusive || row_inconclusive;
        any_inconsistent = any_inconsistent || (!row.consistent && !row_inconclusive);
      }
      if (any_inconsistent) return kExitInconsistent;
      if (any_inconclusive) return kExitBudget;
      return kExitOk;
    }
  } catch (const budget_error& e) {
    err << "budget: " << e.what() << "\n";
    return kExitBudget;
  } catch (const input_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}

}  // namespace homat
