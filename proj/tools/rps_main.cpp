// Command-line front end: ingests JSON model files, runs negation
// experiments, and emits tables as CSV (4 decimals, byte-deterministic) or
// JSON (full precision).

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rps/rps.hpp"

namespace {

std::string fmt4(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", value);
  return buf;
}

std::string csv_cell(const std::string& raw) {
  if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
  std::string quoted = "\"";
  for (char c : raw) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string join_labels(const rps::frame& f, const std::vector<int>& indices,
                        const char* separator) {
  std::string out;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i > 0) out += separator;
    out += f.label(indices[i]);
  }
  return out;
}

struct options {
  std::string model_path;
  int iterations = rps::default_trace_iterations;
  std::string format = "csv";
  std::string method;
  bool renormalize = false;
  int max_frame_size = rps::default_enumeration_cap;
};

int run_negate(const options& opt) {
  const auto mf = rps::load_model_file(opt.model_path);
  const auto pm = rps::to_pm(mf, opt.renormalize);
  const rps::event_space space(pm.base_frame(), opt.max_frame_size);
  const auto series = rps::iterate_negation(pm, opt.iterations, space);

  if (opt.format == "csv") {
    std::string header = "i";
    for (const auto& event : space.nonempty_events()) {
      header += ",";
      header += csv_cell(join_labels(pm.base_frame(), event.indices(), ">"));
    }
    std::cout << header << "\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
      std::string row = std::to_string(i);
      for (double mass : rps::as_dense_vector(series[i], space)) {
        row += ",";
        row += fmt4(mass);
      }
      std::cout << row << "\n";
    }
  } else {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& pm_i : series) {
      rows.push_back(rps::to_model_json(pm_i));
    }
    std::cout << rows.dump(2) << "\n";
  }
  return 0;
}

int run_trace(const options& opt) {
  const auto mf = rps::load_model_file(opt.model_path);
  const auto pm = rps::to_pm(mf, opt.renormalize);
  const auto trace =
      rps::build_trace(pm, opt.iterations, rps::default_convergence_eps, opt.max_frame_size);
  const auto delta = rps::pes_cardinality(static_cast<rps::count_t>(pm.base_frame().size()));
  const auto theoretical =
      rps::theoretical_distance_series(trace.step_distances.front(), delta, opt.iterations);

  const int k = opt.iterations;
  auto ratio_defined = [&](int i) {
    return i + 1 < k && trace.step_distances[static_cast<std::size_t>(i) + 1] > 0.0;
  };
  auto ratio_at = [&](int i) {
    return trace.step_distances[static_cast<std::size_t>(i)] /
           trace.step_distances[static_cast<std::size_t>(i) + 1];
  };

  if (opt.format == "csv") {
    std::cout << "i,entropy,step_distance,theoretical_distance,distance_ratio\n";
    for (int i = 0; i <= k; ++i) {
      std::string row = std::to_string(i);
      row += ",";
      row += fmt4(trace.entropies[static_cast<std::size_t>(i)]);
      row += ",";
      if (i < k) row += fmt4(trace.step_distances[static_cast<std::size_t>(i)]);
      row += ",";
      if (i < k) row += fmt4(theoretical[static_cast<std::size_t>(i)]);
      row += ",";
      if (ratio_defined(i)) row += fmt4(ratio_at(i));
      std::cout << row << "\n";
    }
  } else {
    nlohmann::json doc;
    doc["fixed_point"] = trace.fixed_point;
    if (trace.converged_at) {
      doc["converged_at"] = *trace.converged_at;
    } else {
      doc["converged_at"] = nullptr;
    }
    doc["entropy"] = trace.entropies;
    doc["step_distance"] = trace.step_distances;
    doc["theoretical_distance"] = theoretical;
    auto& ratios = doc["distance_ratio"] = nlohmann::json::array();
    for (int i = 0; i + 1 < k; ++i) {
      if (ratio_defined(i)) {
        ratios.push_back(ratio_at(i));
      } else {
        ratios.push_back(nullptr);
      }
    }
    std::cout << doc.dump(2) << "\n";
  }
  return 0;
}

int run_baseline(const options& opt) {
  const auto mf = rps::load_model_file(opt.model_path);
  if (opt.method == "yager") {
    const auto negated = rps::yager_negate(rps::to_probability(mf, opt.renormalize));
    if (opt.format == "csv") {
      std::cout << "outcome,probability\n";
      for (std::size_t i = 0; i < negated.size(); ++i) {
        std::cout << csv_cell(negated.labels()[i]) << "," << fmt4(negated.probs()[i])
                  << "\n";
      }
    } else {
      std::cout << rps::to_model_json(negated).dump(2) << "\n";
    }
  } else {
    const auto negated = rps::yin_negate(rps::to_bpa(mf, opt.renormalize));
    if (opt.format == "csv") {
      std::cout << "subset,mass\n";
      for (const auto& [s, mass] : negated.masses()) {
        std::cout << csv_cell(join_labels(negated.base_frame(), s, "+")) << ","
                  << fmt4(mass) << "\n";
      }
    } else {
      std::cout << rps::to_model_json(negated).dump(2) << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"random permutation set toolkit: negation, entropy and distance"};
  app.require_subcommand(1);

  options opt;

  auto add_common = [&](CLI::App* cmd, bool needs_iterations, int min_iterations) {
    cmd->add_option("model", opt.model_path, "model file (JSON)")->required();
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_flag("--renormalize", opt.renormalize,
                  "rescale input masses to sum 1 instead of rejecting them");
    cmd->add_option("--max-frame-size", opt.max_frame_size,
                    "largest frame the enumeration will accept")
        ->check(CLI::Range(1, 20))
        ->capture_default_str();
    if (needs_iterations) {
      cmd->add_option("--iterations,-k", opt.iterations, "number of negation steps")
          ->check(CLI::Range(min_iterations, 1000000))
          ->capture_default_str();
    }
  };

  CLI::App* negate = app.add_subcommand(
      "negate", "iterate the negation map and emit the mass-function series");
  add_common(negate, true, 0);

  CLI::App* trace = app.add_subcommand(
      "trace", "emit per-step entropy, step distances and the geometric law");
  add_common(trace, true, 1);

  CLI::App* baseline = app.add_subcommand(
      "baseline", "one negation step of the probability or evidence baselines");
  add_common(baseline, false, 0);
  baseline->add_option("--method", opt.method, "negation baseline")
      ->required()
      ->check(CLI::IsMember({"yager", "yin"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(negate)) return run_negate(opt);
    if (app.got_subcommand(trace)) return run_trace(opt);
    return run_baseline(opt);
  } catch (const rps::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const rps::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const rps::resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const rps::error& e) {
    // domain, overflow and numerical errors share the math-domain exit code
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
