// Command-line front end: closed-form metric curves over parameter grids,
// optional simulation overlays, the full validation report, and a
// self-contained SVG chart renderer for quick inspection of any CSV the tool
// wrote.  All SNR flags are in dB; conversion to linear scale happens here
// and nowhere else.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <memory>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rfso/analytics.hpp"
#include "rfso/channel.hpp"
#include "rfso/curve.hpp"
#include "rfso/montecarlo.hpp"
#include "rfso/validation.hpp"

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

// ---------------------------------------------------------------------------
// JSON config file support: a flat object whose keys are long option names
// (without the leading dashes) and whose values are scalars or arrays.
// Values only fill options the command line left untouched, so flags always
// override the file.
void apply_json_config(CLI::App* cmd, const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open config file: " + path);
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("config is not valid JSON: ") +
                             e.what());
  }
  if (!j.is_object()) {
    throw std::runtime_error("config must be a JSON object of option values");
  }
  for (const auto& [key, value] : j.items()) {
    CLI::Option* opt = cmd->get_option_no_throw("--" + key);
    if (opt == nullptr) {
      throw std::runtime_error("config key '" + key +
                               "' does not name an option of this command");
    }
    if (opt->count() > 0) continue;  // the command line set it already
    if (value.is_array()) {
      for (const auto& element : value) {
        opt->add_result(element.is_string() ? element.get<std::string>()
                                            : element.dump());
      }
    } else {
      opt->add_result(value.is_string() ? value.get<std::string>()
                                        : value.dump());
    }
    opt->run_callback();
  }
}

// ---------------------------------------------------------------------------
// Flag parsing helpers.

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    const auto first = token.find_first_not_of(" \t");
    const auto last = token.find_last_not_of(" \t");
    if (first == std::string::npos) continue;
    out.push_back(token.substr(first, last - first + 1));
  }
  if (out.empty()) {
    throw std::invalid_argument("expected a comma-separated list, got '" +
                                text + "'");
  }
  return out;
}

struct XiValue {
  double value = 0.0;
  std::string token;  // as typed; used for column suffixes
};

std::vector<XiValue> parse_xi_list(const std::string& text) {
  std::vector<XiValue> out;
  for (const std::string& token : split_list(text)) {
    std::string lowered = token;
    std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (lowered == "inf" || lowered == "infinity") {
      out.push_back({kInf, "inf"});
      continue;
    }
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || !(value > 0.0)) {
      throw std::invalid_argument("--xi entries must be positive numbers or "
                                  "'inf', got '" +
                                  token + "'");
    }
    out.push_back({value, token});
  }
  return out;
}

std::vector<double> parse_grid(const std::string& text) {
  double start = 0.0, stop = 0.0, step = 0.0;
  char c1 = 0, c2 = 0;
  std::istringstream in(text);
  if (!(in >> start >> c1 >> stop >> c2 >> step) || c1 != ':' || c2 != ':' ||
      !(in >> std::ws).eof()) {
    throw std::invalid_argument("--grid must look like start:stop:step, got '" +
                                text + "'");
  }
  if (!(step > 0.0) || stop < start) {
    throw std::invalid_argument(
        "--grid needs a positive step and stop >= start");
  }
  const auto count =
      static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) {
    grid[i] = start + static_cast<double>(i) * step;
  }
  return grid;
}

// ---------------------------------------------------------------------------
// Metric curve generation.

struct MetricFlags {
  double alpha = 2.1;
  double beta = 3.5;
  std::string xi = "1";
  double relay_c = 0.6;
  double gbar1_db = 10.0;
  double gbar2_db = 10.0;
  std::string grid;
  std::string modulation;
  int order = 1;
  double s_point = 1.0;
  std::uint64_t samples = 0;  // 0: analytic curve only
  std::uint64_t seed = 20260819;
  std::string out;
  std::string config_path;
};

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot open output file: " + path);
  }
  file << text;
}

bool metric_has_overlay(rfso::analytics::Metric metric) {
  using rfso::analytics::Metric;
  return metric != Metric::kPdf && metric != Metric::kMgf;
}

// Simulation companion for one analytic column; empty when --samples is 0.
std::vector<rfso::montecarlo::Estimate> overlay_estimates(
    const rfso::analytics::MetricRequest& request, std::uint64_t samples,
    std::uint64_t seed) {
  using rfso::analytics::Metric;
  namespace mc = rfso::montecarlo;
  mc::McConfig cfg;
  cfg.samples = samples;
  cfg.seed = seed;
  if (request.metric == Metric::kCdf) {
    return mc::empirical_cdf(request.params, request.grid, cfg);
  }
  std::vector<mc::Estimate> estimates;
  estimates.reserve(request.grid.size());
  for (std::size_t i = 0; i < request.grid.size(); ++i) {
    rfso::channel::LinkParams p = request.params;
    p.gbar1 = db_to_linear(request.grid[i]);
    mc::McConfig point_cfg = cfg;
    point_cfg.seed = seed + 131ULL * i;
    switch (request.metric) {
      case Metric::kBer:
        estimates.push_back(mc::estimate_ber(
            p, std::get<rfso::channel::BinaryScheme>(*request.modulation),
            point_cfg));
        break;
      case Metric::kSer:
        estimates.push_back(mc::estimate_ser(p, *request.modulation, point_cfg));
        break;
      case Metric::kMoment:
        estimates.push_back(
            mc::estimate_moment(p, *request.moment_order, point_cfg));
        break;
      case Metric::kAf:
        estimates.push_back(mc::estimate_af(p, *request.af_order, point_cfg));
        break;
      case Metric::kCapacity:
        estimates.push_back(mc::estimate_capacity(p, point_cfg));
        break;
      default:
        throw std::invalid_argument(
            "no simulation overlay exists for this metric; drop --samples");
    }
  }
  return estimates;
}

int run_metric(rfso::analytics::Metric metric, const MetricFlags& flags) {
  using rfso::analytics::Metric;
  const std::vector<XiValue> xis = parse_xi_list(flags.xi);
  const bool snr_grid = metric == Metric::kCdf || metric == Metric::kPdf;
  const std::vector<double> grid = parse_grid(
      !flags.grid.empty() ? flags.grid : (snr_grid ? "0.5:20:0.5" : "0:40:5"));

  std::vector<rfso::channel::ModulationSpec> modulations;
  if (metric == Metric::kBer || metric == Metric::kSer) {
    const std::string fallback = metric == Metric::kBer ? "cbpsk" : "mpsk:8";
    for (const std::string& token :
         split_list(flags.modulation.empty() ? fallback : flags.modulation)) {
      modulations.push_back(rfso::channel::parse_modulation(token));
    }
  } else {
    modulations.push_back(rfso::channel::cbpsk());  // placeholder, unused
  }

  if (flags.samples > 0 && !metric_has_overlay(metric)) {
    throw std::invalid_argument(
        "no simulation overlay exists for this metric; drop --samples");
  }

  rfso::Curve merged;
  merged.x = grid;
  std::size_t column_index = 0;
  for (const XiValue& xi : xis) {
    for (const auto& modulation : modulations) {
      rfso::analytics::MetricRequest request;
      request.params.alpha = flags.alpha;
      request.params.beta = flags.beta;
      request.params.xi = xi.value;
      request.params.relay_gain_c = flags.relay_c;
      request.params.gbar1 = db_to_linear(flags.gbar1_db);
      request.params.gbar2 = db_to_linear(flags.gbar2_db);
      request.metric = metric;
      request.grid = grid;
      if (metric == Metric::kBer || metric == Metric::kSer) {
        request.modulation = modulation;
      }
      if (metric == Metric::kMoment) request.moment_order = flags.order;
      if (metric == Metric::kAf) request.af_order = flags.order;
      if (metric == Metric::kMgf) request.mgf_point = flags.s_point;

      rfso::Curve curve = rfso::analytics::evaluate_metric(request);
      merged.x_label = curve.x_label;
      rfso::Column column = std::move(curve.columns[0]);
      if (xis.size() > 1) column.name += "_xi" + xi.token;
      const std::string base_name = column.name;
      merged.columns.push_back(std::move(column));

      if (flags.samples > 0) {
        const auto estimates = overlay_estimates(
            request, flags.samples, flags.seed + 100003ULL * column_index);
        rfso::Column mc_value{base_name + "_mc", {}};
        rfso::Column mc_se{base_name + "_mc_se", {}};
        for (const auto& e : estimates) {
          mc_value.values.push_back(e.value);
          mc_se.values.push_back(e.std_error);
        }
        merged.columns.push_back(std::move(mc_value));
        merged.columns.push_back(std::move(mc_se));
      }
      ++column_index;
    }
  }
  merged.validate();
  write_text(flags.out, rfso::to_csv(merged));
  return 0;
}

// ---------------------------------------------------------------------------
// Validation report.

struct ValidateFlags {
  std::uint64_t seed = 20260819;
  std::uint64_t samples = 1'000'000;
  std::string out;
};

int run_validate(const ValidateFlags& flags) {
  rfso::validation::ValidationOptions opts;
  opts.seed = flags.seed;
  opts.base_samples = flags.samples;
  const auto outputs = rfso::validation::run_validation(opts);
  write_text(flags.out, outputs.report_text());
  if (!flags.out.empty()) {
    write_text(flags.out + ".csv", outputs.csv_text());
  }
  return outputs.all_pass ? 0 : 2;
}

// ---------------------------------------------------------------------------
// SVG chart rendering.

struct ChartFlags {
  std::string in;
  std::string out;
  std::string title;
  bool logy = false;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;  // row-major, header.size() wide
};

Table read_csv(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    throw std::runtime_error("cannot open input CSV: " + path);
  }
  Table table;
  std::string line;
  if (!std::getline(file, line)) {
    throw std::runtime_error("input CSV is empty: " + path);
  }
  std::istringstream head(line);
  std::string cell;
  while (std::getline(head, cell, ',')) table.header.push_back(cell);
  while (std::getline(file, line)) {
    if (line.empty()) continue;
    std::istringstream in(line);
    std::vector<double> row;
    while (std::getline(in, cell, ',')) row.push_back(std::stod(cell));
    if (row.size() != table.header.size()) {
      throw std::runtime_error("ragged CSV row in " + path);
    }
    table.rows.push_back(std::move(row));
  }
  if (table.rows.empty() || table.header.size() < 2) {
    throw std::runtime_error("input CSV needs a grid column and at least one "
                             "value column: " +
                             path);
  }
  return table;
}

std::string format_tick(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

double nice_step(double raw) {
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double unit = raw / mag;
  if (unit <= 1.0) return mag;
  if (unit <= 2.0) return 2.0 * mag;
  if (unit <= 2.5) return 2.5 * mag;
  if (unit <= 5.0) return 5.0 * mag;
  return 10.0 * mag;
}

std::string xml_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

int run_chart(const ChartFlags& flags) {
  const Table table = read_csv(flags.in);
  const std::size_t series = table.header.size() - 1;

  const double width = 960.0, height = 560.0;
  const double ml = 78.0, mr = 24.0, mt = flags.title.empty() ? 28.0 : 52.0;
  const double mb = 56.0;
  const double pw = width - ml - mr;
  const double ph = height - mt - mb;

  double xmin = kInf, xmax = -kInf, ymin = kInf, ymax = -kInf;
  for (const auto& row : table.rows) {
    xmin = std::min(xmin, row[0]);
    xmax = std::max(xmax, row[0]);
    for (std::size_t c = 1; c < row.size(); ++c) {
      const double y = row[c];
      if (flags.logy && !(y > 0.0)) continue;
      if (!std::isfinite(y)) continue;
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  }
  if (!(ymin <= ymax)) {
    throw std::runtime_error(flags.logy
                                 ? "no positive values to draw on a log axis"
                                 : "no finite values to draw");
  }
  if (xmax == xmin) {
    xmax += 0.5;
    xmin -= 0.5;
  }
  double lo = flags.logy ? std::log10(ymin) : ymin;
  double hi = flags.logy ? std::log10(ymax) : ymax;
  if (flags.logy) {
    lo = std::floor(lo);
    hi = std::ceil(hi);
    if (hi == lo) hi = lo + 1.0;
  } else {
    const double pad = hi == lo ? std::max(std::abs(hi), 1.0) * 0.05
                                : (hi - lo) * 0.05;
    lo -= pad;
    hi += pad;
  }

  const auto sx = [&](double x) {
    return ml + (x - xmin) / (xmax - xmin) * pw;
  };
  const auto sy = [&](double y) {
    const double t = flags.logy ? std::log10(y) : y;
    return mt + (hi - t) / (hi - lo) * ph;
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
      << height << "\">\n";
  svg << "<rect width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n";
  svg << "<g font-family=\"sans-serif\" font-size=\"13\">\n";
  if (!flags.title.empty()) {
    svg << "<text x=\"" << width / 2
        << "\" y=\"24\" text-anchor=\"middle\" font-size=\"17\">"
        << xml_escape(flags.title) << "</text>\n";
  }

  // Gridlines and tick labels.
  svg.setf(std::ios::fixed);
  svg.precision(2);
  if (flags.logy) {
    for (double e = lo; e <= hi + 1e-9; e += 1.0) {
      const double y = sy(std::pow(10.0, e));
      svg << "<line x1=\"" << ml << "\" y1=\"" << y << "\" x2=\"" << ml + pw
          << "\" y2=\"" << y << "\" stroke=\"#dddddd\"/>\n";
      svg << "<text x=\"" << ml - 8 << "\" y=\"" << y + 4
          << "\" text-anchor=\"end\">1e" << static_cast<int>(e) << "</text>\n";
    }
  } else {
    const double step = nice_step((hi - lo) / 6.0);
    for (double v = std::ceil(lo / step) * step; v <= hi + 1e-9 * step;
         v += step) {
      const double y = sy(v);
      svg << "<line x1=\"" << ml << "\" y1=\"" << y << "\" x2=\"" << ml + pw
          << "\" y2=\"" << y << "\" stroke=\"#dddddd\"/>\n";
      svg << "<text x=\"" << ml - 8 << "\" y=\"" << y + 4
          << "\" text-anchor=\"end\">" << format_tick(v) << "</text>\n";
    }
  }
  const double xstep = nice_step((xmax - xmin) / 7.0);
  for (double v = std::ceil(xmin / xstep) * xstep; v <= xmax + 1e-9 * xstep;
       v += xstep) {
    const double x = sx(v);
    svg << "<line x1=\"" << x << "\" y1=\"" << mt << "\" x2=\"" << x
        << "\" y2=\"" << mt + ph << "\" stroke=\"#eeeeee\"/>\n";
    svg << "<text x=\"" << x << "\" y=\"" << mt + ph + 18
        << "\" text-anchor=\"middle\">" << format_tick(v) << "</text>\n";
  }
  svg << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << pw
      << "\" height=\"" << ph << "\" fill=\"none\" stroke=\"#333333\"/>\n";
  svg << "<text x=\"" << ml + pw / 2 << "\" y=\"" << height - 12
      << "\" text-anchor=\"middle\">" << xml_escape(table.header[0])
      << "</text>\n";

  static const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                   "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
  constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

  for (std::size_t c = 0; c < series; ++c) {
    const char* color = kPalette[c % kPaletteSize];
    std::ostringstream points;
    bool open = false;
    const auto flush = [&]() {
      if (open) {
        svg << "<polyline fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"1.8\" points=\"" << points.str() << "\"/>\n";
      }
      points.str("");
      open = false;
    };
    for (const auto& row : table.rows) {
      const double y = row[c + 1];
      if (!std::isfinite(y) || (flags.logy && !(y > 0.0))) {
        flush();
        continue;
      }
      points << (open ? " " : "");
      points.setf(std::ios::fixed);
      points.precision(2);
      points << sx(row[0]) << "," << sy(y);
      open = true;
    }
    flush();
    // Legend entry.
    const double ly = mt + 16.0 + 18.0 * static_cast<double>(c);
    svg << "<line x1=\"" << ml + pw - 150 << "\" y1=\"" << ly << "\" x2=\""
        << ml + pw - 122 << "\" y2=\"" << ly << "\" stroke=\"" << color
        << "\" stroke-width=\"2.2\"/>\n";
    svg << "<text x=\"" << ml + pw - 116 << "\" y=\"" << ly + 4 << "\">"
        << xml_escape(table.header[c + 1]) << "</text>\n";
  }
  svg << "</g>\n</svg>\n";

  write_text(flags.out, svg.str());
  return 0;
}

// ---------------------------------------------------------------------------

void add_metric_flags(CLI::App* cmd, MetricFlags& flags, bool snr_grid) {
  cmd->add_option("--alpha", flags.alpha,
                  "large-scale turbulence shape (> 0)")
      ->capture_default_str();
  cmd->add_option("--beta", flags.beta, "small-scale turbulence shape (> 0)")
      ->capture_default_str();
  cmd->add_option("--xi", flags.xi,
                  "misalignment ratio; comma list, 'inf' disables the "
                  "misalignment model")
      ->capture_default_str();
  cmd->add_option("--relay-c", flags.relay_c, "fixed relay gain constant (> 0)")
      ->capture_default_str();
  cmd->add_option("--gbar1-db", flags.gbar1_db,
                  snr_grid ? "first-hop average SNR in dB"
                           : "first-hop average SNR in dB (unused: the grid "
                             "sweeps it)")
      ->capture_default_str();
  cmd->add_option("--gbar2-db", flags.gbar2_db,
                  "second-hop average SNR in dB")
      ->capture_default_str();
  cmd->add_option("--grid", flags.grid,
                  snr_grid ? "SNR grid start:stop:step, linear "
                             "(default 0.5:20:0.5)"
                           : "first-hop average SNR grid start:stop:step in "
                             "dB (default 0:40:5)");
  cmd->add_option("--samples", flags.samples,
                  "add simulation columns with this many draws per point")
      ->capture_default_str();
  cmd->add_option("--seed", flags.seed, "simulation seed")
      ->capture_default_str();
  cmd->add_option("--out", flags.out, "output CSV path (default: stdout)");
  cmd->add_option("--config", flags.config_path,
                  "JSON file of option defaults (flags override it)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Dual-hop RF/optical relay link metrics: closed-form curves, "
      "simulation overlays, validation, and charts"};
  app.require_subcommand(1);

  using rfso::analytics::Metric;
  int exit_code = 0;
  const auto guard = [&exit_code](auto&& body) {
    try {
      exit_code = body();
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      exit_code = 3;
    }
  };

  struct MetricCommand {
    const char* name;
    const char* help;
    Metric metric;
    bool snr_grid;
  };
  static const MetricCommand kMetricCommands[] = {
      {"cdf", "distribution function of the end-to-end SNR", Metric::kCdf,
       true},
      {"pdf", "density of the end-to-end SNR", Metric::kPdf, true},
      {"mgf", "E[exp(-s snr)] over a first-hop SNR grid", Metric::kMgf, false},
      {"moments", "raw moment E[snr^n] over a first-hop SNR grid",
       Metric::kMoment, false},
      {"af", "amount of fading of order n over a first-hop SNR grid",
       Metric::kAf, false},
      {"ber", "average bit error rate of binary schemes", Metric::kBer, false},
      {"ser", "average symbol error rate of M-ary schemes", Metric::kSer,
       false},
      {"capacity", "ergodic capacity in bits per channel use",
       Metric::kCapacity, false},
  };

  std::vector<std::unique_ptr<MetricFlags>> flag_blocks;
  for (const MetricCommand& mc : kMetricCommands) {
    CLI::App* cmd = app.add_subcommand(mc.name, mc.help);
    flag_blocks.push_back(std::make_unique<MetricFlags>());
    MetricFlags& flags = *flag_blocks.back();
    add_metric_flags(cmd, flags, mc.snr_grid);
    if (mc.metric == Metric::kBer || mc.metric == Metric::kSer) {
      cmd->add_option("--modulation", flags.modulation,
                      mc.metric == Metric::kBer
                          ? "comma list of cbfsk|cbpsk|nbfsk|dbpsk "
                            "(default cbpsk)"
                          : "comma list of mpsk:M|mam:M|mqam:M or binary "
                            "scheme names (default mpsk:8)");
    }
    if (mc.metric == Metric::kMoment || mc.metric == Metric::kAf) {
      flags.order = mc.metric == Metric::kAf ? 2 : 1;
      cmd->add_option("--order", flags.order, "statistic order n (>= 1)")
          ->capture_default_str();
    }
    if (mc.metric == Metric::kMgf) {
      cmd->add_option("--s", flags.s_point, "transform variable s (>= 0)")
          ->capture_default_str();
    }
    const Metric metric = mc.metric;
    cmd->callback([&guard, cmd, &flags, metric]() {
      guard([cmd, &flags, metric]() {
        if (!flags.config_path.empty()) apply_json_config(cmd, flags.config_path);
        return run_metric(metric, flags);
      });
    });
  }

  ValidateFlags validate_flags;
  CLI::App* validate =
      app.add_subcommand("validate",
                         "run every acceptance check (closed forms vs "
                         "simulation vs independent integration)");
  validate->add_option("--seed", validate_flags.seed, "master seed")
      ->capture_default_str();
  validate
      ->add_option("--samples", validate_flags.samples,
                   "base sample budget per statistical check")
      ->capture_default_str();
  validate->add_option(
      "--out", validate_flags.out,
      "report path (default: stdout); the capacity-vs-xi table goes to "
      "<out>.csv");
  std::string validate_config;
  validate->add_option("--config", validate_config,
                       "JSON file of option defaults (flags override it)");
  validate->callback([&guard, validate, &validate_config, &validate_flags]() {
    guard([validate, &validate_config, &validate_flags]() {
      if (!validate_config.empty()) apply_json_config(validate, validate_config);
      return run_validate(validate_flags);
    });
  });

  ChartFlags chart_flags;
  CLI::App* chart = app.add_subcommand(
      "chart", "render a CSV written by this tool as a standalone SVG chart");
  chart->add_option("--in", chart_flags.in, "input CSV path")->required();
  chart->add_option("--out", chart_flags.out,
                    "output SVG path (default: stdout)");
  chart->add_option("--title", chart_flags.title, "chart title");
  chart->add_flag("--logy", chart_flags.logy, "logarithmic value axis");
  chart->callback([&guard, &chart_flags]() {
    guard([&chart_flags]() { return run_chart(chart_flags); });
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  return exit_code;
}
