#include "defbose/thermo.hpp"

#include <charconv>

namespace defbose {

Backend Backend::parse(std::string_view text) {
  if (text == "exact") return exact();
  if (text == "decimal") return decimal();
  constexpr std::string_view prefix = "decimal:";
  if (text.substr(0, prefix.size()) == prefix) {
    const std::string_view num = text.substr(prefix.size());
    int digits = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), digits);
    if (ec == std::errc() && ptr == num.data() + num.size() && digits >= 1 && digits <= 100000) {
      return decimal(digits);
    }
  }
  throw Error(ErrorKind::ParseError, "backend must be 'exact' or 'decimal:<digits>', got '" + std::string(text) + "'");
}

std::string Backend::to_string() const {
  return kind == BackendKind::Decimal ? "decimal:" + std::to_string(digits) : "exact";
}

GasModel::GasModel(StructureFunction sf_, int order_, Backend backend_)
    : sf(std::move(sf_)), order(order_), backend(backend_) {
  if (order < 2) throw Error(ErrorKind::DomainError, "truncation order K must be >= 2");
}

std::string_view to_string(Provenance p) noexcept {
  switch (p) {
    case Provenance::Engine: return "engine";
    case Provenance::ClosedFormCorrected: return "closed-form-corrected";
    case Provenance::Printed: return "printed";
  }
  return "unknown";
}

ModelMetadata model_metadata(const StructureFunction& sf, int order) {
  ModelMetadata meta;
  meta.mu_reciprocal_integer = sf.mu_reciprocal_integer();
  if (sf.is_eps_expansion()) return meta;
  for (int n = 2; n <= order; ++n) {
    int sign;
    if (auto r = eval_rational(sf, n)) {
      sign = r->sign();
    } else {
      sign = eval<Decimal>(sf, n, {30}).sign();
    }
    if (sign <= 0) {
      meta.first_nonpositive_phi = n;
      break;
    }
  }
  return meta;
}

scalar_traits<Scalar>::context context_for(const GasModel& model) {
  scalar_traits<Scalar>::context ctx;
  ctx.digits = model.backend.digits;
  if (model.backend.kind == BackendKind::Decimal) {
    if (model.sf.is_eps_expansion()) {
      throw Error(ErrorKind::BackendUnsupported, "the eps expansion is formal; use the exact backend");
    }
    ctx.backend = BackendKind::Decimal;
    return ctx;
  }
  if (const auto* eps = std::get_if<QBasicEps>(&model.sf.variant())) {
    ctx.backend = BackendKind::TruncPoly;
    ctx.variables = {"eps"};
    ctx.bounds = Exponents{eps->order, 0};
    return ctx;
  }
  if (model.sf.needs_real_powers(model.order)) {
    throw Error(ErrorKind::BackendUnsupported,
                "'" + model.sf.to_string() + "' raises q to a non-integer power; use --backend decimal:<digits>");
  }
  ctx.backend = BackendKind::Surd;
  return ctx;
}

namespace {

// Runs f<T>(typed context) for the concrete scalar type behind the model.
template <class F>
decltype(auto) dispatch(const GasModel& model, F&& f) {
  const auto ctx = context_for(model);
  switch (ctx.backend) {
    case BackendKind::Decimal: return f(scalar_traits<Decimal>::context{ctx.digits});
    case BackendKind::TruncPoly: return f(scalar_traits<TruncPoly>::context{ctx.variables, ctx.bounds});
    default: return f(scalar_traits<SurdRational>::context{});
  }
}

template <class T>
PowerSeries<Scalar> wrap(const PowerSeries<T>& s) {
  std::vector<Scalar> c;
  c.reserve(s.coefficients().size());
  for (const auto& x : s.coefficients()) c.emplace_back(x);
  return PowerSeries<Scalar>(s.variable(), std::move(c));
}

template <class T>
VirialTable<Scalar> wrap(const VirialTable<T>& t) {
  VirialTable<Scalar> out;
  for (const auto& e : t.entries) out.entries.push_back({e.k, Scalar(e.value), e.provenance});
  return out;
}

template <class Ctx>
using scalar_of = std::conditional_t<
    std::is_same_v<Ctx, scalar_traits<Decimal>::context>, Decimal,
    std::conditional_t<std::is_same_v<Ctx, scalar_traits<TruncPoly>::context>, TruncPoly, SurdRational>>;

}  // namespace

VirialTable<Scalar> virial_coefficients(const GasModel& model) {
  return dispatch(model, [&](const auto& ctx) {
    using T = scalar_of<std::decay_t<decltype(ctx)>>;
    return wrap(virial_coefficients<T>(model.sf, model.order, ctx));
  });
}

PowerSeries<Scalar> particle_series(const GasModel& model) {
  return dispatch(model, [&](const auto& ctx) {
    using T = scalar_of<std::decay_t<decltype(ctx)>>;
    return wrap(particle_series<T>(model.sf, model.order, ctx));
  });
}

PowerSeries<Scalar> pressure_series(const GasModel& model) {
  return dispatch(model, [&](const auto& ctx) {
    using T = scalar_of<std::decay_t<decltype(ctx)>>;
    return wrap(pressure_series<T>(model.sf, model.order, ctx));
  });
}

PowerSeries<Scalar> fugacity_of_density(const GasModel& model) {
  return dispatch(model, [&](const auto& ctx) {
    using T = scalar_of<std::decay_t<decltype(ctx)>>;
    return wrap(fugacity_of_density<T>(model.sf, model.order, ctx));
  });
}

}  // namespace defbose
