#include "ttflow/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "svg_canvas.hpp"
#include "ttflow/error.hpp"
#include "ttflow/flow.hpp"
#include "ttflow/limits.hpp"
#include "ttflow/thermo.hpp"

namespace ttflow::cli {

namespace {

using nlohmann::json;

constexpr double kFieldMargin = 1e-3;
constexpr int kDefaultGrid = 21;
constexpr TRange kDefaultPlotRange{-3.0, 3.0, 121};
constexpr int kHyperbolaSamples = 201;
constexpr double kPlotWidth = 640.0;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::SpecMismatch: return kExitSpecMismatch;
    case ErrorKind::InvalidArgument:
    case ErrorKind::InvalidOrdering: return kExitInvalidConfig;
    default: return kExitOutOfRegion;
  }
}

template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    body();
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidConfig;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

std::string resolve_format(const RunConfig& c) {
  if (c.subcommand == "plot") {
    if (!c.format.empty() && c.format != "svg") throw ConfigError("plot only writes svg");
    return "svg";
  }
  if (c.format.empty()) return "csv";
  if (c.format != "csv" && c.format != "json") {
    throw ConfigError("format must be csv or json for " + c.subcommand);
  }
  return c.format;
}

void check_tol(const RunConfig& c) {
  if (!(c.tol > 0.0)) throw ConfigError("--tol must be positive");
}

DiamondSpec diamond_of(const RunConfig& c) {
  if (!(c.L > 0.0) || !std::isfinite(c.L)) throw ConfigError("--L must be positive");
  if (!std::isfinite(c.L1)) throw ConfigError("--L1 must be finite");
  return {c.L, c.L1};
}

WedgeSpec wedge_of(const RunConfig& c) {
  if (!std::isfinite(c.apex)) throw ConfigError("--apex must be finite");
  return {c.apex};
}

RegionSpec region_of(const RunConfig& c) {
  if (c.region == "diamond") return diamond_of(c);
  if (c.region == "wedge") return wedge_of(c);
  throw ConfigError("--region must be diamond or wedge");
}

TRange range_of(const RunConfig& c, const std::optional<TRange>& fallback = std::nullopt) {
  if (!c.t_range && !fallback) throw ConfigError("--t min:max:n is required");
  const TRange r = c.t_range ? *c.t_range : *fallback;
  if (r.n < 2) throw ConfigError("--t needs n >= 2");
  if (!std::isfinite(r.min) || !std::isfinite(r.max) || !(r.min < r.max)) {
    throw ConfigError("--t needs min < max");
  }
  return r;
}

const NullPair& single_start(const RunConfig& c) {
  if (c.starts.size() != 1) throw ConfigError("exactly one --start zp,zm is required");
  return c.starts.front();
}

SpacetimePoint planar_point(const NullPair& z) {
  return {0.5 * (z.plus + z.minus), 0.5 * (z.plus - z.minus), 0.0, 0.0};
}

NullPair planar_of(const SpacetimePoint& x) { return {x.x0 + x.x1, x.x0 - x.x1}; }

// beta in the signed (x0 + x1, x0 - x1) ordering.
NullPair planar_beta(const NullRadialCoords& z, const DiamondSpec& d) {
  const NullPair b = beta_field(z, d);
  if (z.radius() > 0.0 && z.direction().x < 0.0) return {b.minus, b.plus};
  return b;
}

json region_json(const RunConfig& c) {
  if (c.region == "wedge") return {{"kind", "wedge"}, {"apex", c.apex}};
  return {{"kind", "diamond"}, {"L", c.L}, {"L1", c.L1}};
}

void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_number(row[i]);
    out << '\n';
  }
}

json rows_json(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows) {
  json samples = json::array();
  for (const auto& row : rows) {
    json obj = json::object();
    for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = row[i];
    samples.push_back(std::move(obj));
  }
  return samples;
}

std::vector<PlanePoint> plane_points(const std::vector<SpacetimePoint>& pts) {
  std::vector<PlanePoint> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back({p.x1, p.x0});
  return out;
}

std::string hex_color(double level) {
  const double u = std::clamp(level, 0.0, 1.0);
  const int r = static_cast<int>(std::lround(255.0 - 55.0 * u));
  const int g = static_cast<int>(std::lround(255.0 - 225.0 * u));
  char buf[16];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, g);
  return buf;
}

}  // namespace

TRange parse_t_range(const std::string& text) {
  TRange r;
  char tail = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &r.min, &r.max, &r.n, &tail) != 3) {
    throw Error(ErrorKind::InvalidArgument, "expected min:max:n, got '" + text + "'");
  }
  return r;
}

NullPair parse_null_pair(const std::string& text) {
  NullPair z;
  char tail = 0;
  if (std::sscanf(text.c_str(), "%lf,%lf%c", &z.plus, &z.minus, &tail) != 2) {
    throw Error(ErrorKind::InvalidArgument, "expected zp,zm, got '" + text + "'");
  }
  return z;
}

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12e", value);
  return buf;
}

int cmd_traj(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const std::string format = resolve_format(config);
    const RegionSpec region = region_of(config);
    const TRange range = range_of(config);
    const SpacetimePoint start = planar_point(single_start(config));
    const Trajectory traj = sample_trajectory(start, range.min, range.max, range.n, region);

    const std::vector<std::string> header{"t", "z_plus", "z_minus", "x0", "x1", "T", "a"};
    std::vector<std::vector<double>> rows;
    for (std::size_t k = 0; k < traj.points.size(); ++k) {
      const SpacetimePoint& p = traj.points[k];
      const NullPair z = planar_of(p);
      double temperature = 0.0;
      double accel = 0.0;
      if (const auto* d = std::get_if<DiamondSpec>(&region)) {
        const NullRadialCoords zr = from_planar(z);
        temperature = diamond_temperature(zr, *d).temperature;
        accel = acceleration_at(zr, *d);
      } else {
        const double w1 = p.x1 - config.apex;
        accel = 1.0 / std::sqrt(w1 * w1 - p.x0 * p.x0);
        temperature = wedge_temperature(accel);
      }
      rows.push_back({traj.t_values[k], z.plus, z.minus, p.x0, p.x1, temperature, accel});
    }
    if (format == "json") {
      out << json{{"command", "traj"}, {"region", region_json(config)}, {"samples", rows_json(header, rows)}}
                 .dump(2)
          << '\n';
    } else {
      write_csv(out, header, rows);
    }
  });
}

int cmd_field(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const std::string format = resolve_format(config);
    if (config.region != "diamond") throw ConfigError("field supports only --region diamond");
    const DiamondSpec d = diamond_of(config);
    const int n = config.grid.value_or(kDefaultGrid);
    if (n < 2) throw ConfigError("--grid needs n >= 2");

    const double reach = d.size_L * (1.0 - kFieldMargin);
    auto node = [&](int k) { return reach * (2.0 * k / (n - 1) - 1.0); };
    const std::vector<std::string> header{"z_plus", "z_minus", "beta_plus", "beta_minus", "T", "a", "ratio"};
    std::vector<std::vector<double>> rows;
    rows.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const NullPair lab{node(i) + d.translation_L1, node(j) - d.translation_L1};
        const NullRadialCoords z = from_planar(lab);
        const NullPair beta = planar_beta(z, d);
        const TemperatureSample sample = diamond_temperature(z, d);
        rows.push_back({lab.plus, lab.minus, beta.plus, beta.minus, sample.temperature,
                        sample.acceleration, temperature_ratio(z, d)});
      }
    }
    if (format == "json") {
      out << json{{"command", "field"}, {"region", region_json(config)}, {"samples", rows_json(header, rows)}}
                 .dump(2)
          << '\n';
    } else {
      write_csv(out, header, rows);
    }
  });
}

int cmd_limits(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const std::string format = resolve_format(config);
    LimitMode mode{};
    if (config.mode == "minkowski") {
      mode = LimitMode::Minkowski;
    } else if (config.mode == "wedge") {
      mode = LimitMode::Wedge;
    } else {
      throw ConfigError("--mode must be minkowski or wedge");
    }
    const DiamondSpec d = diamond_of(config);
    const TRange range = range_of(config);

    if (config.grid) {
      check_tol(config);
      if (*config.grid < 1) throw ConfigError("--grid needs n >= 1");
      const RegimeMap map = regime_map(mode, d, range.max, config.tol, *config.grid);
      const std::vector<std::string> header{"r", "ratio", "max_rel_dev", "agrees"};
      std::vector<std::vector<double>> rows;
      int agreeing = 0;
      for (const auto& cell : map.cells) {
        rows.push_back({cell.radius, cell.ratio, cell.max_rel_dev, cell.agrees ? 1.0 : 0.0});
        agreeing += cell.agrees ? 1 : 0;
      }
      if (format == "json") {
        out << json{{"command", "limits"}, {"mode", to_string(mode)}, {"region", region_json(config)},
                    {"t_probe", range.max}, {"tol", config.tol}, {"cells", rows_json(header, rows)}}
                   .dump(2)
            << '\n';
      } else {
        write_csv(out, header, rows);
        out << "# agreeing_cells=" << agreeing << " of " << map.cells.size() << '\n';
      }
      return;
    }

    const NullRadialCoords start = from_planar(single_start(config));
    const DeviationReport report = deviation_scan(mode, start, d, range.min, range.max, range.n);
    const std::vector<std::string> header{"t",           "exact_plus", "exact_minus", "limit_plus",
                                          "limit_minus", "abs_dev",    "rel_dev"};
    std::vector<std::vector<double>> rows;
    for (std::size_t k = 0; k < report.t_values.size(); ++k) {
      rows.push_back({report.t_values[k], report.exact[k].plus, report.exact[k].minus, report.limit[k].plus,
                      report.limit[k].minus, report.abs_dev[k], report.rel_dev[k]});
    }
    if (format == "json") {
      out << json{{"command", "limits"},
                  {"mode", to_string(mode)},
                  {"region", region_json(config)},
                  {"samples", rows_json(header, rows)},
                  {"max_abs_dev", report.max_abs_dev},
                  {"max_rel_dev", report.max_rel_dev}}
                 .dump(2)
          << '\n';
    } else {
      write_csv(out, header, rows);
      out << "# max_abs_dev=" << format_number(report.max_abs_dev)
          << " max_rel_dev=" << format_number(report.max_rel_dev) << '\n';
    }
  });
}

int cmd_plot(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    resolve_format(config);
    const RegionSpec region = region_of(config);
    const bool is_diamond = std::holds_alternative<DiamondSpec>(region);
    if (config.grid && !is_diamond) throw ConfigError("temperature shading needs --region diamond");
    if (config.grid && *config.grid < 1) throw ConfigError("--grid needs n >= 1");
    for (const double w : config.hyperbolas) {
      if (!(w > 0.0) || !std::isfinite(w)) throw ConfigError("--hyperbola needs w > 0");
    }
    const TRange range = range_of(config, kDefaultPlotRange);

    std::vector<Trajectory> orbits;
    for (const auto& s : config.starts) {
      orbits.push_back(sample_trajectory(planar_point(s), range.min, range.max, range.n, region));
    }

    Bounds bounds{};
    if (const auto* d = std::get_if<DiamondSpec>(&region)) {
      bounds = {d->translation_L1 - d->size_L, d->translation_L1 + d->size_L, -d->size_L, d->size_L};
    } else {
      bounds = {config.apex, config.apex + 2.0, -1.0, 1.0};
    }
    for (const auto& o : orbits) {
      for (const auto& p : o.points) bounds.include({p.x1, p.x0});
    }
    if (!config.hyperbolas.empty()) bounds.include({config.apex, 0.0});
    SvgCanvas canvas(bounds.padded(0.05), kPlotWidth);
    const Bounds& view = canvas.world();

    if (config.grid) {
      const auto& d = std::get<DiamondSpec>(region);
      const int n = *config.grid;
      const double L = d.size_L;
      const double half = L / n;
      std::vector<double> log_t;
      std::vector<std::vector<PlanePoint>> cells;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          const double cp = -L + (2 * i + 1) * half;
          const double cm = -L + (2 * j + 1) * half;
          const NullRadialCoords z = from_planar({cp + d.translation_L1, cm - d.translation_L1});
          log_t.push_back(std::log(diamond_temperature(z, d).temperature));
          std::vector<PlanePoint> corners;
          for (const auto& [dp, dm] : {std::pair{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}) {
            const double p = cp + dp * half;
            const double m = cm + dm * half;
            corners.push_back({d.translation_L1 + 0.5 * (p - m), 0.5 * (p + m)});
          }
          cells.push_back(std::move(corners));
        }
      }
      const auto [lo, hi] = std::minmax_element(log_t.begin(), log_t.end());
      const double span = *hi - *lo;
      canvas.raw("<g id=\"temperature\">");
      for (std::size_t k = 0; k < cells.size(); ++k) {
        const double level = span > 0.0 ? (log_t[k] - *lo) / span : 0.0;
        canvas.polygon(cells[k], "fill=\"" + hex_color(level) + "\" stroke=\"none\"");
      }
      canvas.raw("</g>");
    }

    const std::string axis = "stroke=\"#999999\" stroke-width=\"0.5\" stroke-dasharray=\"2,2\"";
    if (view.x0_min < 0.0 && view.x0_max > 0.0) canvas.line({view.x1_min, 0.0}, {view.x1_max, 0.0}, axis);
    if (view.x1_min < 0.0 && view.x1_max > 0.0) canvas.line({0.0, view.x0_min}, {0.0, view.x0_max}, axis);

    if (!is_diamond || !config.hyperbolas.empty()) {
      const double reach = 2.0 * std::max({view.x1_max - config.apex, std::abs(view.x0_min), view.x0_max});
      canvas.polyline({{config.apex + reach, -reach}, {config.apex, 0.0}, {config.apex + reach, reach}},
                      "id=\"wedge\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"");
    }
    if (const auto* d = std::get_if<DiamondSpec>(&region)) {
      const double c = d->translation_L1;
      const double L = d->size_L;
      canvas.polygon({{c - L, 0.0}, {c, L}, {c + L, 0.0}, {c, -L}},
                     "id=\"diamond\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"");
    }

    for (std::size_t h = 0; h < config.hyperbolas.size(); ++h) {
      const double w = config.hyperbolas[h];
      std::vector<PlanePoint> pts;
      for (int k = 0; k < kHyperbolaSamples; ++k) {
        const double x0 = view.x0_min + (view.x0_max - view.x0_min) * k / (kHyperbolaSamples - 1);
        const double x1 = config.apex + std::sqrt(w * w + x0 * x0);
        if (x1 <= view.x1_max) pts.push_back({x1, x0});
      }
      canvas.polyline(pts, "id=\"hyperbola-" + std::to_string(h) +
                               "\" fill=\"none\" stroke=\"#1f4fbf\" stroke-width=\"1.5\" stroke-dasharray=\"6,3\"");
    }
    for (std::size_t k = 0; k < orbits.size(); ++k) {
      canvas.polyline(plane_points(orbits[k].points),
                      "id=\"orbit-" + std::to_string(k) + "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"");
    }
    out << canvas.str();
  });
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ostringstream buffer;
  int code = kExitInvalidConfig;
  if (config.subcommand == "traj") {
    code = cmd_traj(config, buffer, err);
  } else if (config.subcommand == "field") {
    code = cmd_field(config, buffer, err);
  } else if (config.subcommand == "limits") {
    code = cmd_limits(config, buffer, err);
  } else if (config.subcommand == "plot") {
    code = cmd_plot(config, buffer, err);
  } else {
    err << "error: unknown subcommand '" << config.subcommand << "'\n";
  }
  if (code != kExitOk) return code;
  if (config.out.empty()) {
    out << buffer.str();
    return kExitOk;
  }
  std::ofstream file(config.out, std::ios::binary);
  if (!file || !(file << buffer.str())) {
    err << "error: cannot write " << config.out << '\n';
    return kExitInvalidConfig;
  }
  return kExitOk;
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Modular flow, inverse temperature and limit scans for wedges and causal diamonds"};
  app.require_subcommand(1);

  RunConfig config;
  std::vector<std::string> starts;
  std::string t_text;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--region", config.region, "diamond | wedge")->check(CLI::IsMember({"diamond", "wedge"}));
    sub->add_option("--L", config.L, "diamond size");
    sub->add_option("--L1", config.L1, "diamond translation along axis 1");
    sub->add_option("--apex", config.apex, "wedge apex offset along axis 1");
    sub->add_option("--start", starts, "start point as zp,zm = x0+x1,x0-x1 (use --start=zp,zm)");
    sub->add_option("--t", t_text, "modular-time range min:max:n (use --t=min:max:n)");
    sub->add_option("--grid", config.grid, "grid size");
    sub->add_option("--tol", config.tol, "relative tolerance");
    sub->add_option("--mode", config.mode, "minkowski | wedge");
    sub->add_option("--format", config.format, "csv | json | svg");
    sub->add_option("--out", config.out, "output path (default stdout)");
  };
  const std::pair<const char*, const char*> subcommands[] = {
      {"traj", "sample modular-flow orbits with T and a"},
      {"field", "beta, T, a and T_W/T_O on a diamond grid"},
      {"limits", "deviation from the Minkowski or wedge limit"},
      {"plot", "SVG of orbits, outlines and temperature shading"},
  };
  for (const auto& [name, help] : subcommands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub);
    if (std::string(name) == "plot") {
      sub->add_option("--hyperbola", config.hyperbolas, "overlay wedge hyperbola of parameter w");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidConfig;
  }

  for (const CLI::App* sub : app.get_subcommands()) config.subcommand = sub->get_name();
  try {
    for (const auto& s : starts) config.starts.push_back(parse_null_pair(s));
    if (!t_text.empty()) config.t_range = parse_t_range(t_text);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidConfig;
  }
  return run(config, out, err);
}

}  // namespace ttflow::cli
