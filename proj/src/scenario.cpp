#include "oscdyn/scenario.hpp"

#include <cmath>
#include <filesystem>
#include <stdexcept>

#include "oscdyn/csv.hpp"
#include "oscdyn/svg.hpp"

namespace oscdyn {
namespace {

ScenarioKind parse_kind(const std::string& value) {
  if (value == "pair-energy") return ScenarioKind::pair_energy;
  if (value == "maxima-path") return ScenarioKind::maxima_path;
  if (value == "husimi-grid") return ScenarioKind::husimi_grid;
  if (value == "husimi-reduced") return ScenarioKind::husimi_reduced;
  if (value == "chain-excitations") return ScenarioKind::chain_excitations;
  if (value == "oracle-compare") return ScenarioKind::oracle_compare;
  throw ConfigError("unknown scenario kind '" + value + "'");
}

bool is_time_series_kind(ScenarioKind kind) {
  return kind == ScenarioKind::pair_energy ||
         kind == ScenarioKind::maxima_path ||
         kind == ScenarioKind::chain_excitations;
}

bool is_grid_kind(ScenarioKind kind) {
  return kind == ScenarioKind::husimi_grid ||
         kind == ScenarioKind::husimi_reduced;
}

DampingEnvelope parse_envelope(const ConfigDoc& doc,
                               const std::string& section) {
  const std::string mode = doc.get_string(section, "damping", "none");
  try {
    if (mode == "none") return DampingEnvelope::constant(0.0);
    if (mode == "constant")
      return DampingEnvelope::constant(doc.require_number(section, "g0"));
    if (mode == "markovian")
      return DampingEnvelope::markovian(doc.require_number(section, "gamma"));
  } catch (const std::invalid_argument& e) {
    throw ConfigError("[" + section + "]: " + e.what());
  }
  throw ConfigError("[" + section + "]: damping must be none, constant or " +
                    "markovian, got '" + mode + "'");
}

std::complex<double> parse_complex(const ConfigDoc& doc,
                                   const std::string& section,
                                   const std::string& stem) {
  return {doc.get_number(section, stem + "_re", 0.0),
          doc.get_number(section, stem + "_im", 0.0)};
}

SeriesSpec parse_series(const ConfigDoc& doc, const std::string& section,
                        ScenarioKind kind, const std::string& id) {
  SeriesSpec s;
  s.id = id;
  s.label = doc.get_string(section, "label", id);
  s.params.omega0 = doc.get_number(section, "omega0", 1.0);
  s.params.coupling = doc.get_number(section, "coupling", 1.0);
  s.params.omega_drive = doc.get_number(section, "omega_drive", 1.0);
  const double amplitude = doc.get_number(section, "drive", 0.0);
  s.params.drive =
      amplitude == 0.0 ? DriveSpec::zero() : DriveSpec::constant(amplitude);
  s.env = parse_envelope(doc, section);

  switch (kind) {
    case ScenarioKind::pair_energy:
      s.params.nbar_b = doc.get_number(section, "nbar_b", 0.0);
      s.params.nbar_c = doc.get_number(section, "nbar_c", 0.0);
      s.n1_init = doc.get_number(section, "n1", 0.0);
      s.n2_init = doc.get_number(section, "n2", 0.0);
      if (s.n1_init < 0.0 || s.n2_init < 0.0)
        throw ConfigError("[" + section + "]: n1/n2 must be nonnegative");
      break;
    case ScenarioKind::maxima_path:
      s.init.alpha0 = parse_complex(doc, section, "alpha0");
      s.init.beta0 = parse_complex(doc, section, "beta0");
      s.oscillator = doc.get_int(section, "oscillator", 2);
      break;
    case ScenarioKind::husimi_grid:
      s.init.alpha0 = parse_complex(doc, section, "alpha0");
      s.init.beta0 = parse_complex(doc, section, "beta0");
      s.nbar = doc.get_number(section, "nbar", 0.0);
      s.oscillator = doc.get_int(section, "oscillator", 2);
      break;
    case ScenarioKind::husimi_reduced:
      s.nbar = doc.get_number(section, "nbar", 0.0);
      s.photons = doc.get_int(section, "photons", 1);
      if (s.photons < 0)
        throw ConfigError("[" + section + "]: photons must be >= 0");
      break;
    case ScenarioKind::chain_excitations:
      s.params.chain_size = doc.get_int(section, "chain_size", 2);
      s.params.nbar_b = doc.get_number(section, "nbar_b", 0.0);
      break;
    case ScenarioKind::oracle_compare:
      break;
  }

  if (kind == ScenarioKind::maxima_path || kind == ScenarioKind::husimi_grid) {
    if (s.oscillator != 1 && s.oscillator != 2)
      throw ConfigError("[" + section + "]: oscillator must be 1 or 2");
  }
  if (is_grid_kind(kind)) {
    // snapshot is measured in coupling * t, like the figure axes
    s.snapshot_time = doc.get_number(section, "snapshot", 0.0);
    if (s.snapshot_time < 0.0)
      throw ConfigError("[" + section + "]: snapshot must be nonnegative");
    if (s.snapshot_time > 0.0 && !(s.params.coupling > 0.0))
      throw ConfigError("[" + section +
                        "]: snapshot > 0 needs a positive coupling");
    const double lo = doc.get_number(section, "grid_min", -3.0);
    const double hi = doc.get_number(section, "grid_max", 3.0);
    s.grid.re_min = s.grid.im_min = lo;
    s.grid.re_max = s.grid.im_max = hi;
    s.grid.points = doc.get_int(section, "grid_points", 201);
    try {
      s.grid.check();
    } catch (const std::invalid_argument& e) {
      throw ConfigError("[" + section + "]: " + e.what());
    }
    s.nbar = std::max(s.nbar, 0.0);
  }

  try {
    s.params.check();
  } catch (const std::invalid_argument& e) {
    throw ConfigError("[" + section + "]: " + e.what());
  }
  return s;
}

}  // namespace

std::vector<double> TimeGrid::times(double coupling) const {
  if (points < 2)
    throw std::invalid_argument("TimeGrid: points must be >= 2");
  if (!(end > start)) throw std::invalid_argument("TimeGrid: empty range");
  std::vector<double> out(static_cast<size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double raw = start + (end - start) * i / (points - 1);
    out[static_cast<size_t>(i)] = to_seconds(raw, coupling);
  }
  return out;
}

double TimeGrid::to_seconds(double value, double coupling) const {
  if (!coupling_units) return value;
  if (!(coupling > 0.0))
    throw std::invalid_argument(
        "TimeGrid: coupling units need a positive coupling");
  return value / coupling;
}

Scenario load_scenario(const ConfigDoc& doc) {
  if (!doc.has_section("scenario"))
    throw ConfigError("missing [scenario] section");

  Scenario sc;
  sc.kind = parse_kind(doc.require_string("scenario", "kind"));
  sc.name = doc.require_string("scenario", "name");
  sc.title = doc.get_string("scenario", "title", "");
  sc.xlabel = doc.get_string("scenario", "xlabel", "");
  sc.ylabel = doc.get_string("scenario", "ylabel", "");
  sc.out_dir = doc.get_string("scenario", "output", "out");
  sc.out_basename = doc.get_string("scenario", "basename", sc.name);

  if (sc.kind == ScenarioKind::pair_energy) {
    const std::string cols = doc.get_string("scenario", "columns", "e1,e2");
    size_t pos = 0;
    while (pos <= cols.size()) {
      const size_t comma = std::min(cols.find(',', pos), cols.size());
      const std::string col = cols.substr(pos, comma - pos);
      if (col != "e1" && col != "e2")
        throw ConfigError("columns must list e1 and/or e2, got '" + col + "'");
      sc.columns.push_back(col);
      pos = comma + 1;
    }
  }

  if (is_time_series_kind(sc.kind)) {
    if (!doc.has_section("time")) throw ConfigError("missing [time] section");
    sc.time.start = doc.require_number("time", "start");
    sc.time.end = doc.require_number("time", "end");
    sc.time.points = doc.get_int("time", "points", 401);
    const std::string units = doc.get_string("time", "units", "absolute");
    if (units != "absolute" && units != "coupling")
      throw ConfigError("[time]: units must be absolute or coupling");
    sc.time.coupling_units = units == "coupling";
    if (!(sc.time.end > sc.time.start))
      throw ConfigError("[time]: end must exceed start");
    if (sc.time.points < 2) throw ConfigError("[time]: points must be >= 2");
    if (sc.time.start < 0.0)
      throw ConfigError("[time]: start must be nonnegative");
  }

  if (sc.kind == ScenarioKind::oracle_compare) {
    sc.oracle.sets = doc.get_int("oracle", "sets", sc.oracle.sets);
    sc.oracle.seed = static_cast<unsigned long long>(
        doc.get_number("oracle", "seed", static_cast<double>(sc.oracle.seed)));
    sc.oracle.time_points =
        doc.get_int("oracle", "points", sc.oracle.time_points);
    sc.oracle.time_max =
        doc.get_number("oracle", "time_max", sc.oracle.time_max);
    sc.oracle.tolerance =
        doc.get_number("oracle", "tolerance", sc.oracle.tolerance);
    if (sc.oracle.sets < 1 || sc.oracle.time_points < 2 ||
        !(sc.oracle.time_max > 0.0) || !(sc.oracle.tolerance > 0.0))
      throw ConfigError("[oracle]: bad sweep parameters");
  }

  for (const std::string& section : doc.section_names()) {
    if (section.rfind("series.", 0) != 0) continue;
    if (sc.kind == ScenarioKind::oracle_compare)
      throw ConfigError("oracle-compare scenarios take no [series.*] sections");
    const std::string id = section.substr(7);
    if (id.empty()) throw ConfigError("empty series id in [" + section + "]");
    sc.series.push_back(parse_series(doc, section, sc.kind, id));
  }
  if (sc.kind != ScenarioKind::oracle_compare && sc.series.empty())
    throw ConfigError("scenario needs at least one [series.*] section");

  doc.reject_unused();
  return sc;
}

namespace {

std::string time_column(const TimeGrid& grid) {
  return grid.coupling_units ? "kt" : "t";
}

std::vector<double> raw_grid(const TimeGrid& grid) {
  std::vector<double> out(static_cast<size_t>(grid.points));
  for (int i = 0; i < grid.points; ++i)
    out[static_cast<size_t>(i)] =
        grid.start + (grid.end - grid.start) * i / (grid.points - 1);
  return out;
}

[[noreturn]] void rethrow_with_series(const std::string& id,
                                      const AccuracyError& e) {
  throw std::runtime_error("series '" + id + "': " + e.what());
}

double snapshot_seconds(const SeriesSpec& s) {
  return s.snapshot_time == 0.0 ? 0.0 : s.snapshot_time / s.params.coupling;
}

void write_grid_outputs(const std::string& base, const SeriesSpec& s,
                        const Eigen::MatrixXd& values, const GridSpec& grid,
                        const Scenario& sc, RunResult& result) {
  CsvTable table;
  table.header = {"re", "im", "q"};
  table.rows.reserve(static_cast<size_t>(grid.points) * grid.points);
  for (int i = 0; i < grid.points; ++i)
    for (int j = 0; j < grid.points; ++j)
      table.rows.push_back({grid.re_at(j), grid.im_at(i), values(i, j)});
  const std::string csv_path = base + "_" + s.id + ".csv";
  write_csv(csv_path, table);
  result.files.push_back(csv_path);

  FigureStyle style{sc.title + " (" + s.label + ")", sc.xlabel, sc.ylabel};
  const std::string svg_path = base + "_" + s.id + ".svg";
  write_text_file(svg_path, emit_heatmap(values, grid, style));
  result.files.push_back(svg_path);
}

}  // namespace

RunResult run_scenario(const Scenario& sc, const RunOptions& opt) {
  if (sc.kind == ScenarioKind::oracle_compare)
    throw std::invalid_argument(
        "run_scenario: oracle-compare runs through the CLI, not the figure "
        "pipeline");
  if (sc.series.empty())
    throw std::invalid_argument("run_scenario: no series to compute");

  const std::string out_dir = opt.out_dir.empty() ? sc.out_dir : opt.out_dir;
  std::filesystem::create_directories(out_dir);
  const std::string base =
      out_dir + "/" + (sc.out_basename.empty() ? sc.name : sc.out_basename);

  QuadratureConfig quad;
  if (opt.tol > 0.0) {
    quad.abs_tol = opt.tol;
    quad.rel_tol = opt.tol;
  }

  RunResult result;
  std::vector<LineSeries> lines;

  switch (sc.kind) {
    case ScenarioKind::pair_energy: {
      const std::vector<double> raw = raw_grid(sc.time);
      for (const SeriesSpec& s : sc.series) {
        std::vector<PairEnergies> energies;
        try {
          energies = pair_energy_series(s.params, s.env, s.n1_init, s.n2_init,
                                        sc.time.times(s.params.coupling), quad);
        } catch (const AccuracyError& e) {
          rethrow_with_series(s.id, e);
        }
        CsvTable table;
        table.header.push_back(time_column(sc.time));
        for (const std::string& col : sc.columns) table.header.push_back(col);
        for (size_t i = 0; i < raw.size(); ++i) {
          std::vector<double> row{raw[i]};
          for (const std::string& col : sc.columns)
            row.push_back(col == "e1" ? energies[i].first : energies[i].second);
          table.rows.push_back(std::move(row));
        }
        const std::string csv_path = base + "_" + s.id + ".csv";
        write_csv(csv_path, table);
        result.files.push_back(csv_path);
        for (const std::string& col : sc.columns) {
          LineSeries line;
          line.label =
              sc.columns.size() > 1 ? s.label + " " + col : s.label;
          line.x = raw;
          line.y.reserve(raw.size());
          for (const auto& e : energies)
            line.y.push_back(col == "e1" ? e.first : e.second);
          lines.push_back(std::move(line));
        }
      }
      break;
    }
    case ScenarioKind::maxima_path: {
      const std::vector<double> raw = raw_grid(sc.time);
      for (const SeriesSpec& s : sc.series) {
        std::vector<PhasePoint> path;
        try {
          path = maxima_series(s.params, s.env, s.init,
                               sc.time.times(s.params.coupling), quad);
        } catch (const AccuracyError& e) {
          rethrow_with_series(s.id, e);
        }
        CsvTable table;
        table.header = {time_column(sc.time), "re1", "im1", "re2", "im2"};
        for (size_t i = 0; i < raw.size(); ++i)
          table.rows.push_back({raw[i], path[i].alpha1.real(),
                                path[i].alpha1.imag(), path[i].alpha2.real(),
                                path[i].alpha2.imag()});
        const std::string csv_path = base + "_" + s.id + ".csv";
        write_csv(csv_path, table);
        result.files.push_back(csv_path);
        LineSeries line;
        line.label = s.label;
        line.x.reserve(path.size());
        line.y.reserve(path.size());
        for (const auto& p : path) {
          const std::complex<double> nu =
              s.oscillator == 1 ? p.alpha1 : p.alpha2;
          line.x.push_back(nu.real());
          line.y.push_back(nu.imag());
        }
        lines.push_back(std::move(line));
      }
      break;
    }
    case ScenarioKind::chain_excitations: {
      const std::vector<double> raw = raw_grid(sc.time);
      for (const SeriesSpec& s : sc.series) {
        Eigen::MatrixXd n;
        try {
          n = chain_excitation_series(s.params, s.env,
                                      sc.time.times(s.params.coupling), quad);
        } catch (const AccuracyError& e) {
          rethrow_with_series(s.id, e);
        }
        CsvTable table;
        table.header.push_back(time_column(sc.time));
        for (int site = 1; site <= s.params.chain_size; ++site)
          table.header.push_back("n" + std::to_string(site));
        for (size_t i = 0; i < raw.size(); ++i) {
          std::vector<double> row{raw[i]};
          for (int site = 0; site < s.params.chain_size; ++site)
            row.push_back(n(static_cast<int>(i), site));
          table.rows.push_back(std::move(row));
        }
        const std::string csv_path = base + "_" + s.id + ".csv";
        write_csv(csv_path, table);
        result.files.push_back(csv_path);
        for (int site = 0; site < s.params.chain_size; ++site) {
          LineSeries line;
          line.label = s.label + " n" + std::to_string(site + 1);
          line.x = raw;
          line.y.reserve(raw.size());
          for (size_t i = 0; i < raw.size(); ++i)
            line.y.push_back(n(static_cast<int>(i), site));
          lines.push_back(std::move(line));
        }
      }
      break;
    }
    case ScenarioKind::husimi_grid: {
      for (const SeriesSpec& s : sc.series) {
        GridSpec grid = s.grid;
        if (opt.grid_points > 0) grid.points = opt.grid_points;
        CoherentContext ctx;
        try {
          ctx = coherent_context(s.params, s.env, s.init, s.nbar,
                                 snapshot_seconds(s), quad);
        } catch (const AccuracyError& e) {
          rethrow_with_series(s.id, e);
        }
        write_grid_outputs(base, s, husimi_coherent_grid(ctx, s.oscillator, grid),
                           grid, sc, result);
      }
      return result;
    }
    case ScenarioKind::husimi_reduced: {
      for (const SeriesSpec& s : sc.series) {
        GridSpec grid = s.grid;
        if (opt.grid_points > 0) grid.points = opt.grid_points;
        NumberStateContext ctx;
        try {
          ctx = number_state_context(s.params, s.env, s.nbar,
                                     snapshot_seconds(s), quad);
        } catch (const AccuracyError& e) {
          rethrow_with_series(s.id, e);
        }
        write_grid_outputs(base, s,
                           husimi_number_reduced_grid(ctx, s.photons, grid),
                           grid, sc, result);
      }
      return result;
    }
    case ScenarioKind::oracle_compare:
      break;  // unreachable, rejected above
  }

  FigureStyle style{sc.title, sc.xlabel, sc.ylabel};
  const std::string svg_path = base + ".svg";
  write_text_file(svg_path, emit_figure(lines, style));
  result.files.push_back(svg_path);
  return result;
}

}  // namespace oscdyn
