#include <cmath>
#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "emit.hpp"
#include "maxkin/constants.hpp"
#include "maxkin/distribution.hpp"
#include "maxkin/kinetics.hpp"
#include "maxkin/quadrature.hpp"
#include "maxkin/random_walk.hpp"
#include "maxkin/sampler.hpp"
#include "maxkin/version.hpp"
#include "verify_suite.hpp"

namespace {

using maxkin::cli::Envelope;
using maxkin::cli::Format;
using maxkin::cli::Json;

// Post-parse validation problem: message to stderr, exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutputOptions {
  std::string format = "csv";
  std::string path;
  bool no_timestamp = false;

  Format parsed_format() const {
    return format == "json" ? Format::Json : Format::Csv;
  }
};

void add_output_flags(CLI::App* cmd, OutputOptions* out) {
  cmd->add_option("--format", out->format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--output", out->path,
                  "Write to this file instead of standard output");
  cmd->add_flag("--no-timestamp", out->no_timestamp,
                "Omit the generated_at metadata field");
}

void emit(const Envelope& envelope, const OutputOptions& out) {
  const std::string body =
      render(envelope, out.parsed_format(), !out.no_timestamp);
  maxkin::cli::write_output(body, out.path);
}

// Unit entry shared by pdf/sample/tail: either --reduced (k = 1, mass via
// --mass) or SI kelvin with exactly one of --mass-amu / --mass-kg.
struct StateFlags {
  double temperature = 310.0;
  bool reduced = false;
  double mass_reduced = 1.0;
  double mass_amu = 0.0;
  double mass_kg = 0.0;
  CLI::Option* opt_amu = nullptr;
  CLI::Option* opt_kg = nullptr;
  CLI::Option* opt_reduced_mass = nullptr;

  void add_to(CLI::App* cmd) {
    cmd->add_option("-T,--temperature", temperature,
                    "Temperature (kelvin, or reduced units)")
        ->capture_default_str();
    cmd->add_flag("--reduced", reduced,
                  "Reduced units: k = 1, dimensionless mass");
    opt_reduced_mass =
        cmd->add_option("-m,--mass", mass_reduced,
                        "Mass in reduced units (requires --reduced)")
            ->capture_default_str();
    opt_amu = cmd->add_option("--mass-amu", mass_amu,
                              "Molecular mass in atomic mass units");
    opt_kg = cmd->add_option("--mass-kg", mass_kg, "Molecular mass in kg");
    opt_amu->excludes(opt_kg);
  }

  maxkin::ThermalState resolve(Json& params) const {
    params["temperature"] = temperature;
    if (reduced) {
      if (opt_amu->count() > 0 || opt_kg->count() > 0) {
        throw UsageError("--reduced excludes --mass-amu/--mass-kg");
      }
      params["unit_system"] = "reduced";
      params["mass"] = mass_reduced;
      return {temperature, mass_reduced, maxkin::UnitSystem::Reduced};
    }
    if (opt_reduced_mass->count() > 0) {
      throw UsageError("-m/--mass requires --reduced");
    }
    const int given = (opt_amu->count() > 0) + (opt_kg->count() > 0);
    if (given != 1) {
      throw UsageError(
          "exactly one of --mass-amu, --mass-kg or --reduced is required");
    }
    const double mass_si = opt_amu->count() > 0
                               ? mass_amu * maxkin::constants::amu_kg
                               : mass_kg;
    params["unit_system"] = "si";
    params["mass_kg"] = mass_si;
    return {temperature, mass_si, maxkin::UnitSystem::SI};
  }
};

maxkin::TailModel parse_model(const std::string& name) {
  return name == "exponential" ? maxkin::TailModel::Exponential
                               : maxkin::TailModel::ExactQ;
}

// ---------------------------------------------------------------------------
// pdf

struct PdfOptions {
  StateFlags state;
  double max_speed = 0.0;
  CLI::Option* opt_max_speed = nullptr;
  int points = 100;
  OutputOptions out;
};

int run_pdf(const PdfOptions& opt) {
  if (opt.points < 2) {
    throw UsageError("--points must be at least 2");
  }
  if (opt.opt_max_speed->count() > 0 && !(opt.max_speed > 0.0)) {
    throw UsageError("--max-speed must be positive");
  }
  Envelope envelope;
  envelope.command = "pdf";
  const maxkin::ThermalState state = opt.state.resolve(envelope.parameters);
  const maxkin::MaxwellParams p = maxkin::params_from_state(state);

  double max_speed = opt.max_speed;
  if (opt.opt_max_speed->count() == 0) {
    max_speed = 5.0 / std::sqrt(p.c);  // five most-probable speeds
  }
  envelope.parameters["c"] = p.c;
  envelope.parameters["max_speed"] = max_speed;
  envelope.parameters["points"] = opt.points;

  envelope.columns = {"speed", "speed_density", "speed_cdf"};
  for (int i = 0; i < opt.points; ++i) {
    const double s = max_speed * i / (opt.points - 1);
    envelope.rows.push_back(
        {s, maxkin::speed_density(s, p), maxkin::speed_cdf(s, p)});
  }
  emit(envelope, opt.out);
  return 0;
}

// ---------------------------------------------------------------------------
// sample

struct SampleOptions {
  StateFlags state;
  std::uint64_t count = 1000;
  double c_direct = 0.0;
  CLI::Option* opt_c = nullptr;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  OutputOptions out;
};

int run_sample(const SampleOptions& opt) {
  if (opt.count == 0) {
    throw UsageError("-n must be at least 1");
  }
  Envelope envelope;
  envelope.command = "sample";

  double c = 0.0;
  if (opt.opt_c->count() > 0) {
    if (!(opt.c_direct > 0.0)) {
      throw UsageError("--c must be positive");
    }
    c = opt.c_direct;
    envelope.parameters["c"] = c;
  } else {
    const maxkin::ThermalState state = opt.state.resolve(envelope.parameters);
    c = maxkin::params_from_state(state).c;
    envelope.parameters["c"] = c;
  }
  envelope.parameters["count"] = opt.count;
  envelope.parameters["seed"] = opt.seed;
  envelope.parameters["stream_id"] = opt.stream;

  const maxkin::SampleBatch batch = maxkin::sample_batch(
      opt.count, maxkin::MaxwellParams(c), {opt.seed, opt.stream});

  envelope.columns = {"vx", "vy", "vz", "speed"};
  envelope.rows.reserve(batch.count());
  for (const maxkin::VelocityVector& v : batch.velocities) {
    envelope.rows.push_back(
        {v.vx, v.vy, v.vz, std::sqrt(v.squared_speed())});
  }
  if (batch.count() >= 2) {
    const maxkin::EmpiricalMoments m = maxkin::empirical_moments(batch);
    envelope.summary["mean_vx"] = m.component_mean[0];
    envelope.summary["mean_vy"] = m.component_mean[1];
    envelope.summary["mean_vz"] = m.component_mean[2];
    envelope.summary["var_vx"] = m.component_variance[0];
    envelope.summary["var_vy"] = m.component_variance[1];
    envelope.summary["var_vz"] = m.component_variance[2];
    envelope.summary["mean_speed"] = m.mean_speed;
    envelope.summary["mean_squared_speed"] = m.mean_squared_speed;
  }
  emit(envelope, opt.out);
  return 0;
}

// ---------------------------------------------------------------------------
// tail

struct TailOptions {
  StateFlags state;
  double lambda = 0.0;
  double ea = 0.0;
  CLI::Option* opt_lambda = nullptr;
  CLI::Option* opt_ea = nullptr;
  std::string model = "exact";
  double collision_time = maxkin::kDefaultCollisionTime;
  OutputOptions out;
};

int run_tail(const TailOptions& opt) {
  Envelope envelope;
  envelope.command = "tail";

  maxkin::ActivationSpec activation;
  if (opt.opt_lambda->count() > 0) {
    activation = maxkin::ActivationSpec::from_lambda(opt.lambda);
  } else if (opt.opt_ea->count() > 0) {
    // lambda = E_a/(kT) needs the temperature and unit system only; the
    // mass slot of the state is irrelevant here.
    const auto units = opt.state.reduced ? maxkin::UnitSystem::Reduced
                                         : maxkin::UnitSystem::SI;
    const maxkin::ThermalState state(opt.state.temperature, 1.0, units);
    activation = maxkin::ActivationSpec::from_energy(opt.ea, state);
    envelope.parameters["temperature"] = opt.state.temperature;
    envelope.parameters["unit_system"] =
        opt.state.reduced ? "reduced" : "si";
    envelope.parameters["e_activation"] = opt.ea;
  } else {
    throw UsageError("either --lambda or --ea is required");
  }
  const maxkin::TailModel model = parse_model(opt.model);
  const double fraction = maxkin::tail_fraction(activation, model);

  envelope.parameters["lambda"] = activation.lambda;
  envelope.parameters["model"] = opt.model;
  envelope.parameters["collision_time"] = opt.collision_time;

  envelope.report["lambda"] = activation.lambda;
  envelope.report["model"] = opt.model;
  envelope.report["fraction"] = fraction;
  envelope.report["collision_time"] = opt.collision_time;
  envelope.report["reaction_time"] =
      maxkin::reaction_time(fraction, opt.collision_time);
  emit(envelope, opt.out);
  return 0;
}

// ---------------------------------------------------------------------------
// fever

struct FeverOptions {
  double t_base = 310.0;
  double t_new = 311.0;
  double fraction = 1e-12;
  std::string model = "exponential";
  OutputOptions out;
};

int run_fever(const FeverOptions& opt) {
  Envelope envelope;
  envelope.command = "fever";
  envelope.parameters["t_base"] = opt.t_base;
  envelope.parameters["t_new"] = opt.t_new;
  envelope.parameters["baseline_fraction"] = opt.fraction;
  envelope.parameters["model"] = opt.model;

  const maxkin::SensitivityReport report = maxkin::fever_report(
      opt.t_base, opt.t_new, opt.fraction, parse_model(opt.model));

  envelope.report["lambda_base"] = report.lambda_base;
  envelope.report["lambda_new"] = report.lambda_new;
  envelope.report["t_base"] = report.t_base;
  envelope.report["t_new"] = report.t_new;
  envelope.report["fraction_base"] = report.fraction_base;
  envelope.report["fraction_new"] = report.fraction_new;
  envelope.report["ratio"] = report.ratio;
  envelope.report["relative_change"] = report.relative_change;
  envelope.report["percent_change"] = 100.0 * report.relative_change;
  envelope.report["model"] = opt.model;
  emit(envelope, opt.out);
  return 0;
}

// ---------------------------------------------------------------------------
// walk

struct WalkOptions {
  std::int64_t steps = 100;
  int dim = 1;
  std::int64_t trials = 10'000;
  double step_length = 1.0;
  double step_time = 1.0;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  OutputOptions out;
};

int run_walk(const WalkOptions& opt) {
  Envelope envelope;
  envelope.command = "walk";
  envelope.parameters["steps"] = opt.steps;
  envelope.parameters["dimension"] = opt.dim;
  envelope.parameters["trials"] = opt.trials;
  envelope.parameters["step_length"] = opt.step_length;
  envelope.parameters["step_time"] = opt.step_time;
  envelope.parameters["seed"] = opt.seed;
  envelope.parameters["stream_id"] = opt.stream;

  maxkin::WalkSpec spec;
  spec.steps = opt.steps;
  spec.dimension = opt.dim;
  spec.step_length = opt.step_length;
  spec.trials = opt.trials;
  spec.seed_spec = {opt.seed, opt.stream};
  const maxkin::WalkSummary summary = maxkin::simulate_walks(spec);

  envelope.report["trials"] = summary.trials;
  envelope.report["mean_dx"] = summary.mean_displacement[0];
  envelope.report["mean_dy"] = summary.mean_displacement[1];
  envelope.report["mean_dz"] = summary.mean_displacement[2];
  envelope.report["mean_squared_displacement"] =
      summary.mean_squared_displacement;
  envelope.report["variance_of_squared_displacement"] =
      summary.variance_of_squared_displacement;

  const double d = maxkin::diffusion_coefficient_from_walk(
      opt.step_length, opt.step_time, opt.dim);
  envelope.report["diffusion_coefficient"] = d;
  envelope.report["diffusion_length"] = maxkin::diffusion_length(
      d, static_cast<double>(opt.steps) * opt.step_time, opt.dim);
  emit(envelope, opt.out);
  return 0;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
  maxkin::cli::VerifyTolerances tols;
  OutputOptions out;
};

int run_verify(const VerifyOptions& opt) {
  const std::vector<maxkin::cli::CheckResult> checks =
      maxkin::cli::run_verify_suite(opt.tols);

  Envelope envelope;
  envelope.command = "verify";
  envelope.parameters["tol_gauss"] = opt.tols.gauss;
  envelope.parameters["tol_normalization"] = opt.tols.normalization;
  envelope.parameters["tol_mean_energy"] = opt.tols.mean_energy;
  envelope.parameters["tol_separability"] = opt.tols.separability;
  envelope.parameters["ks_critical"] = opt.tols.ks_critical;
  envelope.parameters["ks_samples"] = opt.tols.ks_samples;
  envelope.parameters["seed"] = opt.tols.seed;

  bool all_passed = true;
  envelope.columns = {"check", "status", "measured", "tolerance"};
  Json json_checks = Json::array();
  for (const maxkin::cli::CheckResult& check : checks) {
    all_passed = all_passed && check.passed;
    envelope.rows.push_back({check.name,
                             check.passed ? "PASS" : "FAIL",
                             check.measured, check.tolerance});
    Json item;
    item["name"] = check.name;
    item["passed"] = check.passed;
    item["measured"] = check.measured;
    item["tolerance"] = check.tolerance;
    if (!check.detail.empty()) {
      item["detail"] = check.detail;
    }
    json_checks.push_back(std::move(item));
  }
  envelope.summary["all_passed"] = all_passed;

  if (opt.out.parsed_format() == Format::Json) {
    envelope.columns.clear();
    envelope.rows.clear();
    envelope.summary = Json::object();
    envelope.report["checks"] = std::move(json_checks);
    envelope.report["all_passed"] = all_passed;
  }
  emit(envelope, opt.out);
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maxwell-Boltzmann statistics, activation-energy kinetics and "
               "random-walk diffusion estimates"};
  app.set_version_flag("--version", std::string("maxkin ") + maxkin::kVersion);
  app.require_subcommand(1);

  PdfOptions pdf;
  SampleOptions sample;
  TailOptions tail;
  FeverOptions fever;
  WalkOptions walk;
  VerifyOptions verify;

  CLI::App* cmd_pdf = app.add_subcommand(
      "pdf", "Tabulate the speed density and CDF on a grid");
  pdf.state.add_to(cmd_pdf);
  pdf.opt_max_speed =
      cmd_pdf->add_option("--max-speed", pdf.max_speed,
                          "Upper end of the speed grid (default: 5/sqrt(c))");
  cmd_pdf->add_option("--points", pdf.points, "Number of grid points (>= 2)")
      ->capture_default_str();
  add_output_flags(cmd_pdf, &pdf.out);

  CLI::App* cmd_sample = app.add_subcommand(
      "sample", "Draw a reproducible batch of velocity vectors");
  sample.state.add_to(cmd_sample);
  cmd_sample->add_option("-n,--count", sample.count, "Number of vectors")
      ->capture_default_str();
  sample.opt_c = cmd_sample->add_option(
      "--c", sample.c_direct,
      "Distribution parameter c directly (skips temperature/mass)");
  cmd_sample->add_option("--seed", sample.seed, "RNG seed")
      ->capture_default_str();
  cmd_sample->add_option("--stream", sample.stream, "RNG stream id")
      ->capture_default_str();
  add_output_flags(cmd_sample, &sample.out);

  CLI::App* cmd_tail = app.add_subcommand(
      "tail", "Fast-particle fraction and reaction-time estimate");
  tail.state.add_to(cmd_tail);
  tail.opt_lambda = cmd_tail->add_option(
      "--lambda", tail.lambda, "Reduced activation energy E_a/(kT)");
  tail.opt_ea = cmd_tail->add_option(
      "--ea", tail.ea,
      "Activation energy (J in SI mode, dimensionless with --reduced)");
  tail.opt_lambda->excludes(tail.opt_ea);
  cmd_tail->add_option("--model", tail.model, "Tail model")
      ->check(CLI::IsMember({"exact", "exponential"}))
      ->capture_default_str();
  cmd_tail
      ->add_option("--collision-time", tail.collision_time,
                   "Mean time between collisions, seconds")
      ->capture_default_str();
  add_output_flags(cmd_tail, &tail.out);

  CLI::App* cmd_fever = app.add_subcommand(
      "fever", "Sensitivity of the fast-particle fraction to a temperature "
               "change (default: 310 K -> 311 K at baseline 1e-12)");
  cmd_fever->add_option("--t-base", fever.t_base, "Base temperature, K")
      ->capture_default_str();
  cmd_fever->add_option("--t-new", fever.t_new, "New temperature, K")
      ->capture_default_str();
  cmd_fever
      ->add_option("--fraction", fever.fraction,
                   "Baseline qualifying fraction at t-base")
      ->capture_default_str();
  cmd_fever->add_option("--model", fever.model, "Tail model")
      ->check(CLI::IsMember({"exact", "exponential"}))
      ->capture_default_str();
  add_output_flags(cmd_fever, &fever.out);

  CLI::App* cmd_walk = app.add_subcommand(
      "walk", "Simulate symmetric lattice walks and report displacement "
              "statistics");
  cmd_walk->add_option("--steps", walk.steps, "Steps per walk")
      ->capture_default_str();
  cmd_walk->add_option("--dim", walk.dim, "Dimension (1, 2 or 3)")
      ->capture_default_str();
  cmd_walk->add_option("--trials", walk.trials, "Number of walks")
      ->capture_default_str();
  cmd_walk->add_option("--step-length", walk.step_length, "Lattice step")
      ->capture_default_str();
  cmd_walk
      ->add_option("--step-time", walk.step_time,
                   "Time per step (for the diffusion bridge)")
      ->capture_default_str();
  cmd_walk->add_option("--seed", walk.seed, "RNG seed")->capture_default_str();
  cmd_walk->add_option("--stream", walk.stream, "RNG stream id")
      ->capture_default_str();
  add_output_flags(cmd_walk, &walk.out);

  CLI::App* cmd_verify = app.add_subcommand(
      "verify", "Run the built-in oracle suite and report pass/fail");
  cmd_verify
      ->add_option("--tol-gauss", verify.tols.gauss,
                   "Absolute tolerance for the Gauss integral")
      ->capture_default_str();
  cmd_verify
      ->add_option("--tol-normalization", verify.tols.normalization,
                   "Absolute tolerance for 3-D normalization")
      ->capture_default_str();
  cmd_verify
      ->add_option("--tol-mean-energy", verify.tols.mean_energy,
                   "Relative tolerance for the mean-energy identity")
      ->capture_default_str();
  cmd_verify
      ->add_option("--tol-separability", verify.tols.separability,
                   "Bound on the separability residual")
      ->capture_default_str();
  cmd_verify
      ->add_option("--ks-critical", verify.tols.ks_critical,
                   "KS critical coefficient (of 1/sqrt(n))")
      ->capture_default_str();
  cmd_verify->add_option("--ks-n", verify.tols.ks_samples, "KS sample size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd_verify->add_option("--seed", verify.tols.seed, "RNG seed")
      ->capture_default_str();
  add_output_flags(cmd_verify, &verify.out);

  int rc = 0;
  cmd_pdf->callback([&] { rc = run_pdf(pdf); });
  cmd_sample->callback([&] { rc = run_sample(sample); });
  cmd_tail->callback([&] { rc = run_tail(tail); });
  cmd_fever->callback([&] { rc = run_fever(fever); });
  cmd_walk->callback([&] { rc = run_walk(walk); });
  cmd_verify->callback([&] { rc = run_verify(verify); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
