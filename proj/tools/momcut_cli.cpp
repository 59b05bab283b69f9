// Command-line front end for the momcut library.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "momcut/momcut.hpp"

namespace {

using namespace momcut;

struct Options {
  RunConfig config;
  std::vector<double> domain;
  std::string out_report;
  std::string out_curves;
  bool grid_set = false;

  // generators
  double mu1 = 0.4, sigma1 = 0.25, mu2 = 0.6, sigma2 = 0.25;
  std::string generator = "normal";
  std::vector<std::uint64_t> seeds{1, 2};
  std::size_t modes = 64;
  std::vector<std::size_t> zero_band{17, 48};
  bool no_band = false;
  double margin = 0.05;

  // data
  std::string data_f, data_g, data;
  std::string gaps;

  // 2-D factors, each "mu,sigma"
  std::vector<double> f_x1{0.4, 0.25}, f_x2{0.6, 0.25}, g_x1{0.6, 0.25}, g_x2{0.4, 0.25};
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--n", o.config.n, "Number of known moments, counting the zeroth")->check(CLI::PositiveNumber);
  cmd->add_option("--epsilon", o.config.epsilon, "Tolerance on d(f<, g<)")->check(CLI::PositiveNumber);
  cmd->add_option("--grid", o.config.grid, "Grid points on [0,1] (odd)");
  cmd->add_option("--kgrid", o.config.kgrid, "Minimum k-grid points on [0,K] (odd)");
  cmd->add_option_function<std::string>(
         "--strategy", [&o](const std::string& s) { o.config.strategy = parse_strategy_kind(s); },
         "Remainder bound")
      ->check(CLI::IsMember({"holder", "bounded", "abscont", "ibp"}));
  cmd->add_option("--out-report", o.out_report, "Write the JSON report here");
  cmd->add_option("--out-curves", o.out_curves, "Write the curve CSV here");
}

void add_spectrum(CLI::App* cmd, Options& o) {
  cmd->add_option("--seed", o.seeds, "Spectrum seed(s)")->delimiter(',');
  cmd->add_option("--modes", o.modes, "Number of sine modes")->check(CLI::PositiveNumber);
  cmd->add_option("--zero-band", o.zero_band, "Zeroed mode range lo,hi (1-based)")->delimiter(',')->expected(2);
  cmd->add_flag("--no-band", o.no_band, "Do not zero any modes");
  cmd->add_option("--margin", o.margin, "Positivity margin added after the shift")->check(CLI::PositiveNumber);
}

SpectrumSpec spectrum_spec(const Options& o, std::uint64_t seed) {
  SpectrumSpec s;
  s.seed = seed;
  s.num_modes = o.modes;
  s.margin = o.margin;
  if (o.no_band) {
    s.zero_band.reset();
  } else {
    s.zero_band = std::pair{o.zero_band.at(0), o.zero_band.at(1)};
  }
  return s;
}

std::optional<DomainMap> domain_of(const Options& o) {
  if (o.domain.empty()) return std::nullopt;
  if (o.domain.size() != 2) throw Error(ErrorCode::InvalidArgument, "--domain expects a,b");
  return DomainMap{o.domain[0], o.domain[1]};
}

void finish(const ComparisonResult& result, const Options& o) {
  std::cout << report_to_string(result.report);
  if (!o.out_report.empty()) emit_report(result.report, o.out_report);
  if (!o.out_curves.empty()) {
    emit_curves(result.f, result.g, result.f_smoothed, result.g_smoothed, o.out_curves);
  }
}

void run_compare_pdf(Options& o) {
  if (o.generator == "spectrum" && o.seeds.size() != 2) {
    throw Error(ErrorCode::InvalidArgument, "spectrum comparison needs --seed s1,s2");
  }
  auto make = [&](std::size_t side) {
    if (o.generator == "normal") {
      return side == 0 ? truncated_normal({o.mu1, o.sigma1}, o.config.grid)
                       : truncated_normal({o.mu2, o.sigma2}, o.config.grid);
    }
    return scale_separated_pdf(spectrum_spec(o, o.seeds[side]), o.config.grid);
  };
  const GridFunction1D f = make(0);
  const GridFunction1D g = make(1);
  ComparisonResult result = run_comparison(Distribution::from_grid(f), Distribution::from_grid(g), o.config);
  auto& md = result.report.metadata;
  md["generator"] = o.generator;
  if (o.generator == "normal") {
    md["f"] = "mu=" + format_double(o.mu1) + ",sigma=" + format_double(o.sigma1);
    md["g"] = "mu=" + format_double(o.mu2) + ",sigma=" + format_double(o.sigma2);
  } else {
    md["f"] = "seed=" + std::to_string(o.seeds[0]);
    md["g"] = "seed=" + std::to_string(o.seeds[1]);
    md["modes"] = std::to_string(o.modes);
    md["zero_band"] = o.no_band ? "none" : std::to_string(o.zero_band[0]) + "," + std::to_string(o.zero_band[1]);
    md["margin"] = format_double(o.margin);
  }
  finish(result, o);
}

void run_compare_data(Options& o) {
  const std::string text_f = detail::read_file(o.data_f);
  const std::string text_g = detail::read_file(o.data_g);
  const RescaledData data = rescale_to_unit(parse_dataset(text_f), parse_dataset(text_g), domain_of(o));
  o.config.domain = data.map;
  ComparisonResult result = run_comparison(Distribution::from_samples(data.f, o.config.grid),
                                           Distribution::from_samples(data.g, o.config.grid), o.config);
  auto& md = result.report.metadata;
  md["f"] = o.data_f + " (" + std::to_string(data.f.size()) + " values, fnv1a " + fingerprint(text_f) + ")";
  md["g"] = o.data_g + " (" + std::to_string(data.g.size()) + " values, fnv1a " + fingerprint(text_g) + ")";
  finish(result, o);
}

void run_compare_mixed(Options& o) {
  const std::string text = detail::read_file(o.data);
  const RescaledData data = rescale_to_unit(parse_dataset(text), {}, domain_of(o));
  o.config.domain = data.map;
  GridFunction1D g = o.generator == "normal" ? truncated_normal({o.mu2, o.sigma2}, o.config.grid)
                                             : scale_separated_pdf(spectrum_spec(o, o.seeds.at(0)), o.config.grid);
  ComparisonResult result =
      run_comparison(Distribution::from_samples(data.f, o.config.grid), Distribution::from_grid(g), o.config);
  auto& md = result.report.metadata;
  md["f"] = o.data + " (" + std::to_string(data.f.size()) + " values, fnv1a " + fingerprint(text) + ")";
  md["generator"] = o.generator;
  md["g"] = o.generator == "normal" ? "mu=" + format_double(o.mu2) + ",sigma=" + format_double(o.sigma2)
                                    : "seed=" + std::to_string(o.seeds.at(0));
  finish(result, o);
}

void run_cutoff_only(Options& o) {
  const MomentGap gap = load_gap_file(o.gaps);
  ComparisonReport report = cutoff_only(gap, o.config.epsilon);
  report.metadata["gap_file"] = o.gaps;
  std::cout << report_to_string(report);
  if (!o.out_report.empty()) emit_report(report, o.out_report);
}

void run_gen_spectrum(Options& o) {
  const SpectrumSpec spec = spectrum_spec(o, o.seeds.at(0));
  const GridFunction1D f = scale_separated_pdf(spec, o.config.grid);
  const std::vector<double> amplitudes = spectrum_amplitudes(spec);
  if (!o.out_curves.empty()) {
    auto out = detail::open_output(o.out_curves);
    out << "x,f\n";
    for (std::size_t i = 0; i < f.num_points(); ++i) out << format_double(f.node(i)) << ',' << format_double(f[i]) << '\n';
  }
  std::cout << "mode,amplitude\n";
  for (std::size_t j = 0; j < amplitudes.size(); ++j) std::cout << j + 1 << ',' << format_double(amplitudes[j]) << '\n';
}

void run_compare_2d(Options& o) {
  if (!o.grid_set) o.config.grid = 101;
  auto factor = [&](const std::vector<double>& p) {
    if (p.size() != 2) throw Error(ErrorCode::InvalidArgument, "2-D factors expect mu,sigma");
    return truncated_normal({p[0], p[1]}, o.config.grid);
  };
  const GridFunction2D f = product(factor(o.f_x1), factor(o.f_x2));
  const GridFunction2D g = product(factor(o.g_x1), factor(o.g_x2));
  Comparison2DResult result = run_comparison_2d(f, g, o.config);
  auto pair = [](const std::vector<double>& p) { return format_double(p[0]) + "," + format_double(p[1]); };
  result.report.metadata["f"] = "normal(" + pair(o.f_x1) + ") x normal(" + pair(o.f_x2) + ")";
  result.report.metadata["g"] = "normal(" + pair(o.g_x1) + ") x normal(" + pair(o.g_x2) + ")";
  std::cout << report_to_string(result.report);
  if (!o.out_report.empty()) emit_report(result.report, o.out_report);
  if (!o.out_curves.empty()) emit_curves_2d(result.f, result.g, result.f_smoothed, result.g_smoothed, o.out_curves);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cut-off scale at which two PDFs agree, from bounds on their moments"};
  app.require_subcommand(1);
  Options o;

  auto* pdf = app.add_subcommand("compare-pdf", "Compare two generated PDFs");
  add_common(pdf, o);
  add_spectrum(pdf, o);
  pdf->add_option("--generator", o.generator, "PDF family")->check(CLI::IsMember({"normal", "spectrum"}));
  pdf->add_option("--mu1", o.mu1, "Mean of the first truncated normal");
  pdf->add_option("--sigma1", o.sigma1, "Width of the first truncated normal");
  pdf->add_option("--mu2", o.mu2, "Mean of the second truncated normal");
  pdf->add_option("--sigma2", o.sigma2, "Width of the second truncated normal");

  auto* data = app.add_subcommand("compare-data", "Compare two datasets (single-column CSV)");
  add_common(data, o);
  data->add_option("--data-f", o.data_f, "First dataset, one value per line")->required();
  data->add_option("--data-g", o.data_g, "Second dataset, one value per line")->required();
  data->add_option("--domain", o.domain, "Support a,b mapped onto [0,1]")->delimiter(',')->expected(2);
  data->add_option("--inflate-se", o.config.inflate_se, "Add z standard errors to each moment gap");

  auto* mixed = app.add_subcommand("compare-mixed", "Compare a dataset with a generated PDF");
  add_common(mixed, o);
  add_spectrum(mixed, o);
  mixed->add_option("--data", o.data, "Dataset, one value per line")->required();
  mixed->add_option("--domain", o.domain, "Support a,b mapped onto [0,1]")->delimiter(',')->expected(2);
  mixed->add_option("--inflate-se", o.config.inflate_se, "Add z standard errors to each moment gap");
  mixed->add_option("--generator", o.generator, "PDF family")->check(CLI::IsMember({"normal", "spectrum"}));
  mixed->add_option("--mu", o.mu2, "Mean of the truncated normal");
  mixed->add_option("--sigma", o.sigma2, "Width of the truncated normal");

  auto* cut = app.add_subcommand("cutoff-only", "Cut-off from a gap file (M_0..M_{n-1}, R_n)");
  cut->add_option("--gaps", o.gaps, "Gap file: M_0..M_{n-1}, then R_n")->required();
  cut->add_option("--epsilon", o.config.epsilon)->check(CLI::PositiveNumber);
  cut->add_option("--out-report", o.out_report);

  auto* gen = app.add_subcommand("gen-spectrum", "Emit a scale-separated random-spectrum PDF");
  add_spectrum(gen, o);
  gen->add_option("--grid", o.config.grid);
  gen->add_option("--out-curves", o.out_curves, "Write x,f CSV here");

  auto* two = app.add_subcommand("compare-2d", "Compare two product PDFs on [0,1]^2 with a common cut-off");
  add_common(two, o);
  two->add_option("--f-x1", o.f_x1, "mu,sigma")->delimiter(',')->expected(2);
  two->add_option("--f-x2", o.f_x2, "mu,sigma")->delimiter(',')->expected(2);
  two->add_option("--g-x1", o.g_x1, "mu,sigma")->delimiter(',')->expected(2);
  two->add_option("--g-x2", o.g_x2, "mu,sigma")->delimiter(',')->expected(2);

  CLI11_PARSE(app, argc, argv);

  try {
    o.grid_set = two->count("--grid") > 0;
    if (pdf->parsed()) run_compare_pdf(o);
    else if (data->parsed()) run_compare_data(o);
    else if (mixed->parsed()) run_compare_mixed(o);
    else if (cut->parsed()) run_cutoff_only(o);
    else if (gen->parsed()) run_gen_spectrum(o);
    else if (two->parsed()) run_compare_2d(o);
  } catch (const momcut::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
