// motivic: compute classes and Hodge diamonds of moduli of rank-3 bundles,
// rank-2 pairs and rank-3 Higgs bundles on a curve; run verification sweeps.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or hypothesis error.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "motivic/bundles.hpp"
#include "motivic/higgs.hpp"
#include "motivic/pairs.hpp"
#include "motivic/render.hpp"
#include "motivic/verify.hpp"

namespace {

constexpr int kVerifyFailed = 1;
constexpr int kUsageError = 2;

const std::map<std::string, motivic::OutputFormat> kFormats{
    {"class-json", motivic::OutputFormat::ClassJson},
    {"poincare", motivic::OutputFormat::Poincare},
    {"diamond-text", motivic::OutputFormat::DiamondText},
    {"diamond-json", motivic::OutputFormat::DiamondJson},
};

void add_format_option(CLI::App* cmd, motivic::OutputFormat& fmt) {
  cmd->add_option("--format", fmt, "class-json | poincare | diamond-text | diamond-json")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case))
      ->default_str("diamond-text");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Motives and Hodge diamonds of moduli spaces of bundles, pairs and Higgs bundles on a curve"};
  app.require_subcommand(1);

  int genus = 0;
  int degree = 0;
  motivic::OutputFormat format = motivic::OutputFormat::DiamondText;

  auto* bundles = app.add_subcommand("bundles", "rank-3 vector bundle moduli N(3,d) or N_L(3,d)");
  bool fixed_det = false;
  bundles->add_option("--genus,-g", genus, "genus of the curve (>= 2)")->required();
  bundles->add_option("--degree,-d", degree, "degree, coprime to 3")->required();
  bundles->add_flag("--fixed-det", fixed_det, "fixed determinant moduli N_L");
  add_format_option(bundles, format);

  auto* pairs = app.add_subcommand("pairs", "rank-2 pair moduli P^i_e");
  int pair_degree = 0;
  std::optional<int> chamber;
  std::optional<std::string> sigma;
  std::string method = "flip";
  pairs->add_option("--genus,-g", genus, "genus of the curve")->required();
  pairs->add_option("--e", pair_degree, "pair degree e (>= 2)")->required();
  auto* chamber_opt = pairs->add_option("--chamber,-i", chamber, "chamber index i");
  pairs->add_option("--sigma", sigma, "stability parameter as an exact rational a/b")->excludes(chamber_opt);
  pairs->add_option("--method", method, "flip | sym | geo")->check(CLI::IsMember({"flip", "sym", "geo"}));
  add_format_option(pairs, format);

  auto* higgs = app.add_subcommand("higgs", "rank-3 Higgs moduli M(3,d)");
  bool mod_jac = false;
  higgs->add_option("--genus,-g", genus, "genus of the curve (>= 2)")->required();
  higgs->add_option("--degree,-d", degree, "degree, coprime to 3")->required();
  higgs->add_flag("--mod-jac", mod_jac, "divide out the Jacobian factor");
  add_format_option(higgs, format);

  auto* audit = app.add_subcommand("audit", "per-component twist/dimension audit of the Higgs fixed loci");
  audit->add_option("--genus,-g", genus, "genus of the curve (>= 2)")->required();
  audit->add_option("--degree,-d", degree, "degree, coprime to 3")->required();

  auto* verify = app.add_subcommand("verify", "run verification sweeps");
  std::string suite = "all";
  int max_genus = 4;
  verify->add_option("--suite", suite, "identities | positivity | duality | degree-independence | audit | all")
      ->check(CLI::IsMember(motivic::suite_names()));
  verify->add_option("--max-genus", max_genus, "largest genus swept (>= 2)")->check(CLI::Range(2, 64));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*bundles) {
      const motivic::BundleSpec spec{genus, degree};
      const auto cls = fixed_det ? motivic::bundle_motive_fixed_det(spec) : motivic::bundle_motive(spec);
      std::cout << motivic::render(cls, format);
    } else if (*pairs) {
      motivic::ChamberSpec spec{genus, pair_degree, 0};
      if (sigma) {
        spec.chamber = motivic::chamber_of(motivic::parse_rational(*sigma), pair_degree);
      } else if (chamber) {
        spec.chamber = *chamber;
      } else {
        std::cerr << "pairs: one of --chamber or --sigma is required\n";
        return kUsageError;
      }
      motivic::MotiveClass cls(std::max(genus, 1));
      if (method == "flip") {
        cls = motivic::pair_motive_flip(spec);
      } else if (method == "sym") {
        cls = motivic::pair_motive_sym(spec);
      } else {
        cls = motivic::pair_motive_geo(spec);
      }
      std::cout << motivic::render(cls, format);
    } else if (*higgs) {
      const auto spec = motivic::HiggsSpec::make(genus, degree);
      const auto cls = mod_jac ? motivic::higgs_motive_mod_jac(spec) : motivic::higgs_motive(spec);
      std::cout << motivic::render(cls, format);
    } else if (*audit) {
      const auto report = motivic::audit_fixed_loci(motivic::HiggsSpec::make(genus, degree));
      std::cout << report.format();
      return report.all_passed() ? 0 : kVerifyFailed;
    } else if (*verify) {
      bool ok = true;
      for (const auto& r : motivic::run_suite(suite, max_genus)) {
        std::cout << r.summary() << "\n";
        ok = ok && r.passed();
      }
      return ok ? 0 : kVerifyFailed;
    }
  } catch (const motivic::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return 0;
}
