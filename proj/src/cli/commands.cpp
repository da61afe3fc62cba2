#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "defbose/cli.hpp"
#include "defbose/error.hpp"
#include "defbose/perturb.hpp"
#include "defbose/thermo.hpp"

namespace defbose::cli {

namespace {

constexpr int kExactDecimalDigits = 20;

struct Table {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

void write_csv(const Table& t, std::ostream& out) {
  for (const auto& [key, value] : t.metadata) out << "# " << key << '=' << value << '\n';
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << '\n';
  }
}

void write_json(const Table& t, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["metadata"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : t.metadata) doc["metadata"][key] = value;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = row[i];
    doc["rows"].push_back(std::move(obj));
  }
  out << doc.dump(2) << '\n';
}

void write_pretty(const Table& t, std::ostream& out) {
  for (const auto& [key, value] : t.metadata) out << key << ": " << value << '\n';
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out << (i ? "  " : "") << cells[i];
      if (i + 1 < cells.size()) out << std::string(width[i] - cells[i].size(), ' ');
    }
    out << '\n';
  };
  line(t.columns);
  for (const auto& row : t.rows) line(row);
}

void write_table(const Table& t, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::Csv: write_csv(t, out); break;
    case OutputFormat::Json: write_json(t, out); break;
    case OutputFormat::Pretty: write_pretty(t, out); break;
  }
}

std::string decimal_text(const Scalar& s, const Backend& backend) {
  if (s.backend() == BackendKind::TruncPoly && !s.get<TruncPoly>().variables().empty()) return "NA";
  return s.to_scientific(backend.kind == BackendKind::Decimal ? backend.digits : kExactDecimalDigits);
}

bool exact_column(const Backend& b) { return b.kind != BackendKind::Decimal; }

StructureFunction require_sf(const JobSpec& job) {
  if (!job.sf) throw Error(ErrorKind::ParseError, "--sf <descriptor> is required");
  return StructureFunction::parse(*job.sf);
}

std::vector<std::pair<std::string, std::string>> header(const JobSpec& job, const std::string& sf) {
  return {{"artifact", std::string("defbose ") + DEFBOSE_VERSION},
          {"command", job.subcommand},
          {"sf", sf},
          {"K", std::to_string(job.order)},
          {"backend", job.backend.to_string()}};
}

void add_model_metadata(Table& t, const StructureFunction& sf, int order) {
  const ModelMetadata meta = model_metadata(sf, order);
  t.metadata.emplace_back("mu_is_reciprocal_integer", meta.mu_reciprocal_integer ? "true" : "false");
  if (meta.mu_reciprocal_integer) t.metadata.emplace_back("mu_reciprocal_m", std::to_string(*meta.mu_reciprocal_integer));
  t.metadata.emplace_back("first_nonpositive_phi",
                          meta.first_nonpositive_phi ? std::to_string(*meta.first_nonpositive_phi) : "none");
}

void validate_order(const JobSpec& job) {
  if (job.order < 2) throw Error(ErrorKind::ParseError, "--K must be >= 2");
}

}  // namespace

void cmd_virial(const JobSpec& job, std::ostream& out) {
  validate_order(job);
  const StructureFunction sf = require_sf(job);
  const VirialTable<Scalar> table = virial_coefficients(GasModel(sf, job.order, job.backend));
  Table t;
  t.metadata = header(job, sf.to_string());
  t.metadata.emplace_back("provenance", std::string(to_string(Provenance::Engine)));
  add_model_metadata(t, sf, job.order);
  t.columns = {"k", "V_k_decimal"};
  if (exact_column(job.backend)) t.columns.emplace_back("V_k_exact");
  for (const auto& e : table.entries) {
    std::vector<std::string> row{std::to_string(e.k), decimal_text(e.value, job.backend)};
    if (exact_column(job.backend)) row.push_back(e.value.to_string());
    t.rows.push_back(std::move(row));
  }
  write_table(t, job.format, out);
}

void cmd_series(const JobSpec& job, std::ostream& out) {
  validate_order(job);
  const StructureFunction sf = require_sf(job);
  const GasModel model(sf, job.order, job.backend);
  if (job.which != "all" && job.which != "particle" && job.which != "pressure" && job.which != "fugacity") {
    throw Error(ErrorKind::ParseError, "--which must be particle, pressure, fugacity or all");
  }
  Table t;
  t.metadata = header(job, sf.to_string());
  add_model_metadata(t, sf, job.order);
  t.columns = {"series", "variable", "n", "coefficient_decimal"};
  if (exact_column(job.backend)) t.columns.emplace_back("coefficient_exact");
  auto emit = [&](const std::string& name, const PowerSeries<Scalar>& s) {
    for (int n = 0; n <= s.order(); ++n) {
      std::vector<std::string> row{name, std::string(1, s.variable()), std::to_string(n),
                                   decimal_text(s[n], job.backend)};
      if (exact_column(job.backend)) row.push_back(s[n].to_string());
      t.rows.push_back(std::move(row));
    }
  };
  if (job.which == "all" || job.which == "particle") emit("particle", particle_series(model));
  if (job.which == "all" || job.which == "pressure") emit("pressure", pressure_series(model));
  if (job.which == "all" || job.which == "fugacity") emit("fugacity", fugacity_of_density(model));
  write_table(t, job.format, out);
}

void cmd_eps_expand(const JobSpec& job, std::ostream& out) {
  validate_order(job);
  Table t;
  t.metadata = header(job, "q-eps:order=" + std::to_string(job.order));
  t.columns = {"table", "index", "eps_power", "coefficient"};
  for (const auto& [key, c] : monomial_expansion(job.order, job.order)) {
    t.rows.push_back({"monomial", std::to_string(key.first), std::to_string(key.second), c.to_string()});
  }
  for (int n = 1; n <= job.order; ++n) {
    const TruncPoly basic = eval_eps(n, job.order);
    for (const auto& [e, c] : basic.terms()) {
      t.rows.push_back({"basic_number", std::to_string(n), std::to_string(e[0]), c.to_string()});
    }
  }
  write_table(t, job.format, out);
}

void cmd_hamiltonian(const JobSpec& job, std::ostream& out) {
  validate_order(job);
  if (job.mu_order < 0) throw Error(ErrorKind::ParseError, "--mu-order must be >= 0");
  Table t;
  t.metadata = header(job, "mu-q");
  t.metadata.emplace_back("mu_order", std::to_string(job.mu_order));
  t.columns = {"split", "eps_power", "mu_power", "polynomial_in_N"};
  const HamiltonianSplit single = hamiltonian_split(job.order);
  for (int i = 0; i <= single.order; ++i) {
    t.rows.push_back({"single", std::to_string(i), "0", single.terms[i].to_string()});
  }
  const SplitPoly two = two_param_split(job.order, job.mu_order);
  for (const auto& [e, poly] : two.terms()) {
    t.rows.push_back({"double", std::to_string(e[0]), std::to_string(e[1]), poly.to_string()});
  }
  write_table(t, job.format, out);
}

void cmd_sweep(const JobSpec& job, std::ostream& out) {
  validate_order(job);
  if (job.sweeps.empty()) throw Error(ErrorKind::ParseError, "sweep needs at least one --sweep range");
  std::optional<StructureFunction> base;
  if (job.sf) base = StructureFunction::parse(*job.sf);

  std::vector<std::string> names;
  std::vector<std::vector<Rational>> axes;
  for (const auto& r : job.sweeps) {
    if (std::find(names.begin(), names.end(), r.param) != names.end()) {
      throw Error(ErrorKind::ParseError, "parameter '" + r.param + "' swept twice");
    }
    names.push_back(r.param);
    axes.push_back(r.values());
  }

  // Lexicographic grid, first range slowest.
  std::vector<std::vector<Rational>> grid{{}};
  for (const auto& axis : axes) {
    std::vector<std::vector<Rational>> next;
    next.reserve(grid.size() * axis.size());
    for (const auto& prefix : grid) {
      for (const auto& v : axis) {
        next.push_back(prefix);
        next.back().push_back(v);
      }
    }
    grid = std::move(next);
  }

  std::vector<StructureFunction> models;
  models.reserve(grid.size());
  for (const auto& point : grid) {
    std::map<std::string, Rational> params;
    for (std::size_t i = 0; i < names.size(); ++i) params.emplace(names[i], point[i]);
    models.push_back(with_parameters(base, params));
  }
  // Validate every point before starting workers so errors are deterministic.
  for (const auto& sf : models) (void)context_for(GasModel(sf, job.order, job.backend));

  std::vector<std::vector<std::vector<std::string>>> results(models.size());
  std::vector<std::exception_ptr> errors(models.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < models.size(); i = next++) {
      try {
        const auto table = virial_coefficients(GasModel(models[i], job.order, job.backend));
        for (const auto& e : table.entries) {
          std::vector<std::string> row;
          for (const auto& v : grid[i]) row.push_back(v.to_string());
          row.push_back(std::to_string(e.k));
          row.push_back(decimal_text(e.value, job.backend));
          if (exact_column(job.backend)) row.push_back(e.value.to_string());
          results[i].push_back(std::move(row));
        }
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned threads = job.threads != 0 ? job.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, models.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  Table t;
  t.metadata = header(job, base ? base->to_string() : models.front().to_string());
  t.metadata.emplace_back("provenance", std::string(to_string(Provenance::Engine)));
  std::string swept;
  for (const auto& r : job.sweeps) {
    swept += (swept.empty() ? "" : " ") + r.param + "=" + r.start.to_string() + ":" + r.stop.to_string() + ":" +
             r.step.to_string();
  }
  t.metadata.emplace_back("sweep", swept);
  t.columns = names;
  t.columns.emplace_back("k");
  t.columns.emplace_back("V_k_decimal");
  if (exact_column(job.backend)) t.columns.emplace_back("V_k_exact");
  for (auto& rows : results) {
    for (auto& row : rows) t.rows.push_back(std::move(row));
  }
  write_table(t, job.format, out);
}

namespace {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::DomainError:
    case ErrorKind::UnsupportedOrder:
      return kExitUsage;
    case ErrorKind::BackendUnsupported:
      return kExitBackend;
    default:
      return kExitFailure;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact virial expansions of deformed Bose gases", "defbose"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("defbose ") + DEFBOSE_VERSION);

  JobSpec job;
  std::string backend_text = "exact";
  std::string format_text = "csv";
  std::vector<std::string> sweep_texts;

  auto common = [&](CLI::App* sub, bool model_options) {
    sub->add_option("--K", job.order, "truncation order (>= 2)");
    sub->add_option("--format", format_text, "csv | json | pretty");
    sub->add_option("--out", job.out, "write output to this file");
    if (model_options) {
      sub->add_option("--sf", job.sf, "structure function descriptor");
      sub->add_option("--backend", backend_text, "exact | decimal:<digits>");
    }
  };

  CLI::App* virial = app.add_subcommand("virial", "virial coefficients V_1..V_K");
  common(virial, true);
  CLI::App* series = app.add_subcommand("series", "particle, pressure and fugacity series");
  common(series, true);
  series->add_option("--which", job.which, "particle | pressure | fugacity | all");
  CLI::App* eps = app.add_subcommand("eps-expand", "eps expansion tables of the q basic number");
  common(eps, false);
  CLI::App* ham = app.add_subcommand("hamiltonian", "eps and (eps, mu) splits of the single-mode Hamiltonian");
  common(ham, false);
  ham->add_option("--mu-order", job.mu_order, "mu order of the two-parameter split");
  CLI::App* sweep = app.add_subcommand("sweep", "virial coefficients over a parameter grid");
  common(sweep, true);
  sweep->add_option("--sweep", sweep_texts, "<param>=<a>:<b>:<step>")->required();
  sweep->add_option("--threads", job.threads, "worker threads (0 = all cores)");
  CLI::App* check = app.add_subcommand("check-paper", "verify the published closed forms and report misprints");
  common(check, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "defbose: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    for (CLI::App* sub : app.get_subcommands()) job.subcommand = sub->get_name();
    job.backend = Backend::parse(backend_text);
    job.format = parse_format(format_text);
    for (const auto& s : sweep_texts) job.sweeps.push_back(SweepRange::parse(s));

    std::ostringstream buffer;
    int code = kExitOk;
    if (job.subcommand == "virial") {
      cmd_virial(job, buffer);
    } else if (job.subcommand == "series") {
      cmd_series(job, buffer);
    } else if (job.subcommand == "eps-expand") {
      cmd_eps_expand(job, buffer);
    } else if (job.subcommand == "hamiltonian") {
      cmd_hamiltonian(job, buffer);
    } else if (job.subcommand == "sweep") {
      cmd_sweep(job, buffer);
    } else {
      code = cmd_check_paper(job, buffer);
    }
    if (job.out) {
      std::ofstream file(*job.out, std::ios::binary);
      if (!file) {
        err << "defbose: cannot open '" << *job.out << "' for writing\n";
        return kExitFailure;
      }
      file << buffer.str();
    } else {
      out << buffer.str();
    }
    return code;
  } catch (const Error& e) {
    err << "defbose: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "defbose: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace defbose::cli
