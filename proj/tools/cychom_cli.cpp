#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cychom/calculus.hpp"
#include "cychom/error.hpp"
#include "cychom/expr.hpp"
#include "cychom/oracle.hpp"
#include "cychom/presentation_io.hpp"
#include "cychom/series_io.hpp"
#include "cychom/verify.hpp"

using namespace cychom;

namespace {

constexpr int kPass = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

void print_value(const Value& v, const std::string& format) {
  if (format == "json") {
    std::visit([](const auto& s) { std::cout << to_json(s).dump(2) << "\n"; }, v);
    return;
  }
  std::visit([](const auto& s) { std::cout << render(s) << "\n\n" << render_table(s); }, v);
}

std::optional<TriSeries> expected_series(const std::string& text, int trunc) {
  if (text.empty()) return std::nullopt;
  const Value v = evaluate(text, trunc);
  if (const auto* s = std::get_if<SignedSeries>(&v)) return tri_from_signed(*s);
  return std::get<TriSeries>(v);
}

int report(std::ostream& out, const std::string& what, const SlotReport& r) {
  if (r.equal) {
    out << what << ": PASS (" << r.slots_compared << " slots)\n";
    return kPass;
  }
  const TriKey& k = *r.first_discrepancy;
  out << what << ": FAIL at (n=" << k.n << ", q=" << k.q << ", e=" << k.sign << "): expected "
            << to_string(r.expected) << ", computed " << to_string(r.computed) << "\n";
  return kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact series calculus and homology oracle for cyclic and Hochschild homology of graded algebras"};
  app.require_subcommand(1);

  int trunc = 10;
  int max_hdeg = -1;
  std::string format = "table";
  std::uint64_t seed = 1;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--trunc", trunc, "weight bound N")->check(CLI::Range(0, 10000));
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"table", "json"}));
  };

  std::string expr_text;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a series expression, e.g. \"hcfree(7*y*z - 3*z^2)\"");
  eval_cmd->add_option("expression", expr_text, "expression in z, y (and x)")->required();
  add_common(eval_cmd);

  std::vector<std::string> preset_args;
  auto* predict_cmd = app.add_subcommand("predict", "closed-form cyclic homology, e.g. \"predict exceptional B0 2\"");
  predict_cmd->add_option("preset", preset_args, "preset name followed by its parameters")->required();
  add_common(predict_cmd);

  std::string file;
  std::string expect_hc, expect_hh;
  auto* oracle_cmd = app.add_subcommand("oracle", "compute HH and HC of a presentation (JSON file) by brute force");
  oracle_cmd->add_option("file", file, "presentation file")->required()->check(CLI::ExistingFile);
  add_common(oracle_cmd);
  oracle_cmd->add_option("--max-hdeg", max_hdeg, "largest homological degree (default N)")->check(CLI::Range(0, 10000));
  oracle_cmd->add_option("--expect-hc", expect_hc, "expression the HC table must match");
  oracle_cmd->add_option("--expect-hh", expect_hh, "expression the HH table must match");

  bool list = false;
  bool all = false;
  std::vector<std::string> cases;
  auto* verify_cmd = app.add_subcommand("verify", "run named verification cases");
  verify_cmd->add_flag("--list", list, "list the case names");
  verify_cmd->add_flag("--all", all, "run every case");
  verify_cmd->add_option("cases", cases, "case names");
  verify_cmd->add_option("--seed", seed, "seed for randomized cases");

  auto* presets_cmd = app.add_subcommand("list-presets", "list prediction presets and expression functions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }
  // the file's own bound applies unless --trunc was given
  const bool trunc_given = oracle_cmd->count("--trunc") > 0;

  try {
    if (*eval_cmd) {
      print_value(evaluate(expr_text, trunc), format);
      return kPass;
    }

    if (*predict_cmd) {
      Preset p;
      p.name = preset_args.front();
      std::size_t first = 1;
      if (p.name == "exceptional") {
        if (preset_args.size() < 2) throw CLI::ValidationError("predict exceptional needs a variant: A0, A1, B0 or B1");
        p.variant = preset_args[1];
        first = 2;
      }
      for (std::size_t i = first; i < preset_args.size(); ++i) {
        try {
          std::size_t used = 0;
          p.params.push_back(std::stoi(preset_args[i], &used));
          if (used != preset_args[i].size()) throw std::invalid_argument("trailing characters");
        } catch (const std::logic_error&) {
          throw CLI::ValidationError("preset parameter '" + preset_args[i] + "' is not an integer");
        }
      }
      print_value(predict(p, trunc), format);
      return kPass;
    }

    if (*oracle_cmd) {
      Presentation p = load_presentation(file);
      if (trunc_given) p.trunc = trunc;
      const int n = p.trunc;
      const HomologyTable table = run_oracle(complete(p), n, max_hdeg, presentation_hash(p));
      if (format == "json") {
        std::cout << to_json(table).dump(2) << "\n";
      } else {
        std::cout << render_table(table);
      }
      int code = kPass;
      const auto& c = table.checks;
      if (!c.norm_map_agrees || !c.hc0_matches_direct || !c.hh_hc_consistent) code = kMismatch;
      std::ostream& out = format == "json" ? std::cerr : std::cout;
      if (auto hc = expected_series(expect_hc, n)) {
        code = std::max(code, report(out, "HC vs expected", verify_against(table, *hc, HomologyKind::kCyclic)));
      }
      if (auto hh = expected_series(expect_hh, n)) {
        code = std::max(code, report(out, "HH vs expected", verify_against(table, *hh, HomologyKind::kHochschild)));
      }
      return code;
    }

    if (*verify_cmd) {
      if (list) {
        for (const auto& c : verify_cases()) std::cout << c.name << "  " << c.description << "\n";
        return kPass;
      }
      if (all) {
        for (const auto& c : verify_cases()) cases.push_back(c.name);
      }
      if (cases.empty()) throw CLI::ValidationError("verify needs case names, --all or --list");
      int code = kPass;
      for (const auto& name : cases) {
        const CaseResult r = run_case(name, seed);
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << "\n";
        for (const auto& d : r.details) std::cout << "    " << d << "\n";
        if (!r.pass) code = kMismatch;
      }
      return code;
    }

    if (*presets_cmd) {
      for (const auto& name : preset_names()) std::cout << preset_usage(name) << "\n";
      std::cout << "\nexpression functions:\n";
      for (const auto& [name, help] : function_signatures()) std::cout << "  " << help << "\n";
      return kPass;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
