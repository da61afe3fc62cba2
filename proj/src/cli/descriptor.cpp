#include <set>

#include "defbose/cli.hpp"
#include "defbose/error.hpp"

namespace defbose::cli {

namespace {

constexpr std::size_t kMaxSweepPoints = 100000;

[[noreturn]] void usage(const std::string& why) { throw Error(ErrorKind::ParseError, why); }

}  // namespace

OutputFormat parse_format(std::string_view text) {
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  if (text == "pretty") return OutputFormat::Pretty;
  usage("format must be csv, json or pretty");
}

SweepRange SweepRange::parse(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) usage("sweep must look like <param>=<a>:<b>:<step>");
  SweepRange r;
  r.param = std::string(text.substr(0, eq));
  if (r.param != "mu" && r.param != "q" && r.param != "t") usage("sweep parameter must be mu, q or t");
  std::string_view rest = text.substr(eq + 1);
  const auto c1 = rest.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : rest.find(':', c1 + 1);
  if (c2 == std::string_view::npos || rest.find(':', c2 + 1) != std::string_view::npos) {
    usage("sweep range must be <a>:<b>:<step>");
  }
  r.start = Rational::parse(rest.substr(0, c1));
  r.stop = Rational::parse(rest.substr(c1 + 1, c2 - c1 - 1));
  r.step = Rational::parse(rest.substr(c2 + 1));
  if (r.step.is_zero()) usage("sweep step must be nonzero");
  return r;
}

std::vector<Rational> SweepRange::values() const {
  std::vector<Rational> out;
  const bool up = step.sign() > 0;
  for (Rational v = start; up ? v <= stop : v >= stop; v += step) {
    if (out.size() == kMaxSweepPoints) usage("sweep range for '" + param + "' has too many points");
    out.push_back(v);
  }
  if (out.empty()) usage("sweep range for '" + param + "' is empty");
  return out;
}

StructureFunction with_parameters(const std::optional<StructureFunction>& base,
                                  const std::map<std::string, Rational>& params) {
  auto get = [&](const char* key) -> std::optional<Rational> {
    auto it = params.find(key);
    return it == params.end() ? std::nullopt : std::optional<Rational>(it->second);
  };
  if (!base) {
    const auto mu = get("mu");
    const auto q = get("q");
    const auto t = get("t");
    if (t) {
      if (!mu || !q) usage("sweeping t needs mu and q (swept or given with --sf)");
      return TInterp{*t, *mu, *q};
    }
    if (mu && q) return MuThenQ{*mu, *q};
    if (mu) return QuadraticMu{*mu};
    if (q) return QBasic{*q};
    usage("nothing to sweep");
  }
  std::set<std::string> used;
  auto take = [&](const char* key, Rational& slot) {
    if (auto v = get(key)) {
      slot = *v;
      used.insert(key);
    }
  };
  StructureFunction::Variant v = base->variant();
  // Sweeping t over a two-parameter model walks the interpolating family.
  if (const auto t = get("t")) {
    if (const auto* m = std::get_if<MuThenQ>(&v)) {
      v = TInterp{*t, m->mu, m->q};
      used.insert("t");
    } else if (const auto* m = std::get_if<QThenMu>(&v)) {
      v = TInterp{*t, m->mu, m->q};
      used.insert("t");
    }
  }
  std::visit(
      [&](auto& x) {
        if constexpr (requires { x.mu; }) take("mu", x.mu);
        if constexpr (requires { x.q; }) take("q", x.q);
        if constexpr (requires { x.t; }) take("t", x.t);
      },
      v);
  for (const auto& [key, value] : params) {
    if (!used.contains(key)) usage("'" + base->to_string() + "' has no parameter '" + key + "'");
  }
  return StructureFunction(std::move(v));
}

}  // namespace defbose::cli
