#include "wle/weights.hpp"

#include <cmath>
#include <sstream>

namespace wle {

namespace {

using Ctx = WeightContext;

double checked(double value, const std::string& name, const char* where) {
  if (!std::isfinite(value)) {
    throw WeightDomainError("weight '" + name + "' is not real-valued at " +
                            where);
  }
  return value;
}

double zero(double, double) { return 0.0; }

// Table-1 style entry: value at adjacency, 0 elsewhere.
WeightFunction degree_entry(std::string name,
                            std::function<double(double, double, const Ctx&)> f,
                            WeightFunction::Asymptotic f1,
                            std::vector<double> params = {}) {
  WeightFunction::Definition def;
  def.name = std::move(name);
  def.kind = WeightKind::DegreeBased;
  def.adjacency_only = true;
  def.evaluate = [f = std::move(f)](Distance, double di, double dj,
                                     const Ctx& ctx) { return f(di, dj, ctx); };
  def.f1_asym = std::move(f1);
  def.f2_asym = zero;
  def.limit = LimitClass::infinite();
  def.params = std::move(params);
  return WeightFunction(std::move(def));
}

WeightFunction entry(std::string name, WeightKind kind,
                     WeightFunction::Evaluator f, WeightFunction::Asymptotic f1,
                     WeightFunction::Asymptotic f2, LimitClass limit) {
  WeightFunction::Definition def;
  def.name = std::move(name);
  def.kind = kind;
  def.evaluate = std::move(f);
  def.f1_asym = std::move(f1);
  def.f2_asym = std::move(f2);
  def.limit = limit;
  return WeightFunction(std::move(def));
}

}  // namespace

std::string_view to_string(WeightKind kind) noexcept {
  switch (kind) {
    case WeightKind::DegreeBased:
      return "degree-based";
    case WeightKind::DistanceBased:
      return "distance-based";
    case WeightKind::DegreeDistance:
      return "degree-distance";
  }
  return "unknown";
}

DisconnectedGraphError::DisconnectedGraphError(const std::string& weight)
    : std::runtime_error(
          "weight '" + weight +
          "' depends on distances but the graph is disconnected; "
          "resample with --resample-disconnected (or resample_disconnected = "
          "true in a sweep config)") {}

WeightFunction::WeightFunction(Definition def) : def_(std::move(def)) {
  if (!def_.evaluate || !def_.f1_asym || !def_.f2_asym) {
    throw std::invalid_argument("WeightFunction '" + def_.name +
                                "': evaluator and asymptotics are required");
  }
}

double WeightFunction::evaluate(Distance d, double di, double dj,
                                const WeightContext& ctx) const {
  if (d < 1) {
    throw std::invalid_argument("weight '" + def_.name +
                                "' evaluated at distance < 1");
  }
  if (def_.adjacency_only && d >= 2) return 0.0;  // includes kUnreachable
  if (d == kUnreachable) throw DisconnectedGraphError(def_.name);
  return checked(def_.evaluate(d, di, dj, ctx), def_.name,
                 ("D=" + std::to_string(d) + ", d_i=" + std::to_string(di) +
                  ", d_j=" + std::to_string(dj))
                     .c_str());
}

AsymPair WeightFunction::asym(double n, double p) const {
  const std::string where =
      "n=" + std::to_string(n) + ", p=" + std::to_string(p);
  return {checked(def_.f1_asym(n, p), def_.name, where.c_str()),
          checked(def_.f2_asym(n, p), def_.name, where.c_str())};
}

WeightFunction WeightFunction::scaled(double c) const {
  std::ostringstream name;
  name << c << '*' << def_.name;
  Definition s = def_;
  s.name = name.str();
  s.evaluate = [inner = def_.evaluate, c](Distance d, double di, double dj,
                                           const Ctx& ctx) {
    return c * inner(d, di, dj, ctx);
  };
  s.f1_asym = [inner = def_.f1_asym, c](double n, double p) {
    return c * inner(n, p);
  };
  s.f2_asym = [inner = def_.f2_asym, c](double n, double p) {
    return c * inner(n, p);
  };
  return WeightFunction(std::move(s));
}

std::vector<WeightFunction> registry(double alpha) {
  using std::log;
  using std::pow;
  using std::sqrt;
  const auto DB = WeightKind::DistanceBased;
  const auto DD = WeightKind::DegreeDistance;

  std::vector<WeightFunction> r;

  {
    WeightFunction::Definition s;
    s.name = "unweighted";
    s.kind = DB;
    s.adjacency_only = true;
    s.evaluate = [](Distance, double, double, const Ctx&) { return 1.0; };
    s.f1_asym = [](double, double) { return 1.0; };
    s.f2_asym = zero;
    r.emplace_back(std::move(s));
  }

  // Degree-based indices; x = np below.
  r.push_back(degree_entry(
      "first_zagreb", [](double a, double b, const Ctx&) { return a + b; },
      [](double n, double p) { return 2 * n * p; }));
  r.push_back(degree_entry(
      "second_zagreb", [](double a, double b, const Ctx&) { return a * b; },
      [](double n, double p) { return (n * p) * (n * p); }));
  r.push_back(degree_entry(
      "randic", [](double a, double b, const Ctx&) { return 1 / sqrt(a * b); },
      [](double n, double p) { return 1 / (n * p); }));
  r.push_back(degree_entry(
      "general_randic",
      [alpha](double a, double b, const Ctx&) { return pow(a * b, alpha); },
      [alpha](double n, double p) { return pow(n * p, 2 * alpha); }, {alpha}));
  r.push_back(degree_entry(
      "abc",
      [](double a, double b, const Ctx&) {
        return sqrt(a + b - 2) / sqrt(a * b);
      },
      [](double n, double p) {
        const double x = n * p;
        return sqrt(2 * x - 2) / x;
      }));
  r.push_back(degree_entry(
      "azi",
      [](double a, double b, const Ctx&) { return pow(a * b / (a + b - 2), 3); },
      [](double n, double p) {
        const double x = n * p;
        return pow(x * x / (2 * x - 2), 3);
      }));
  r.push_back(degree_entry(
      "ag",
      [](double a, double b, const Ctx&) { return 2 * sqrt(a * b) / (a + b); },
      [](double, double) { return 1.0; }));
  r.push_back(degree_entry(
      "harmonic", [](double a, double b, const Ctx&) { return 2 / (a + b); },
      [](double n, double p) { return 1 / (n * p); }));
  r.push_back(degree_entry(
      "sci", [](double a, double b, const Ctx&) { return 1 / sqrt(a + b); },
      [](double n, double p) { return 1 / sqrt(2 * n * p); }));
  r.push_back(degree_entry(
      "first_multi_zagreb",
      [](double a, double b, const Ctx&) { return log(a) / a + log(b) / b; },
      [](double n, double p) { return 2 * log(n * p) / (n * p); }));
  r.push_back(degree_entry(
      "modified_multi_zagreb",
      [](double a, double b, const Ctx&) { return log(a + b); },
      [](double n, double p) { return log(2 * n * p); }));
  r.push_back(degree_entry(
      "second_multi_zagreb",
      [](double a, double b, const Ctx&) { return log(a) + log(b); },
      [](double n, double p) { return 2 * log(n * p); }));
  r.push_back(degree_entry(
      "lanzhou",
      [](double a, double b, const Ctx& ctx) {
        return (static_cast<double>(ctx.n) - 1) * (a + b) - (a * a + b * b);
      },
      [](double n, double p) {
        const double x = n * p;
        return (n - 1) * 2 * x - 2 * x * x;
      }));

  // Distance-based indices.
  r.push_back(entry(
      "harary", DB,
      [](Distance d, double, double, const Ctx&) { return 1.0 / d; },
      [](double, double) { return 1.0; }, [](double, double) { return 0.5; },
      LimitClass::finite(2.0)));
  r.push_back(entry(
      "hyper_wiener", DB,
      [](Distance d, double, double, const Ctx&) {
        const double x = d;
        return (x + x * x) / 2;
      },
      [](double, double) { return 1.0; }, [](double, double) { return 3.0; },
      LimitClass::finite(1.0 / 3.0)));
  r.push_back(entry(
      "rcw", DB,
      [](Distance d, double, double, const Ctx& ctx) {
        if (ctx.diameter == kUnreachable) {
          throw WeightDomainError("rcw: graph diameter is infinite");
        }
        return 1.0 / (static_cast<double>(ctx.diameter) + 1 - d);
      },
      [](double, double) { return 0.5; }, [](double, double) { return 1.0; },
      LimitClass::finite(0.5)));
  r.push_back(entry(
      "reverse_wiener", DB,
      [](Distance d, double, double, const Ctx& ctx) {
        if (ctx.diameter == kUnreachable) {
          throw WeightDomainError("reverse_wiener: graph diameter is infinite");
        }
        return static_cast<double>(ctx.diameter) - d;
      },
      [](double, double) { return 1.0; }, zero, LimitClass::infinite()));

  // Degree-distance indices.
  r.push_back(entry(
      "degree_distance", DD,
      [](Distance d, double a, double b, const Ctx&) { return (a + b) * d; },
      [](double n, double p) { return 2 * n * p; },
      [](double n, double p) { return 4 * n * p; }, LimitClass::finite(0.5)));
  r.push_back(entry(
      "gutman", DD,
      [](Distance d, double a, double b, const Ctx&) { return a * b * d; },
      [](double n, double p) { return (n * p) * (n * p); },
      [](double n, double p) { return 2 * (n * p) * (n * p); },
      LimitClass::finite(0.5)));
  r.push_back(entry(
      "add_harary", DD,
      [](Distance d, double a, double b, const Ctx&) { return (a + b) / d; },
      [](double n, double p) { return 2 * n * p; },
      [](double n, double p) { return n * p; }, LimitClass::finite(2.0)));
  r.push_back(entry(
      "mult_harary", DD,
      [](Distance d, double a, double b, const Ctx&) { return a * b / d; },
      [](double n, double p) { return (n * p) * (n * p); },
      [](double n, double p) { return (n * p) * (n * p) / 2; },
      LimitClass::finite(2.0)));

  return r;
}

std::vector<std::string> weight_names() {
  std::vector<std::string> names;
  for (const auto& w : registry()) names.push_back(w.name());
  return names;
}

WeightFunction find_weight(std::string_view name, double alpha) {
  for (auto& w : registry(alpha)) {
    if (w.name() == name) return w;
  }
  throw std::invalid_argument("unknown weight '" + std::string(name) + "'");
}

AsymPair asym_pair(const WeightFunction& w, double n, double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("asym_pair: p must lie in (0, 1)");
  }
  if (!(n >= 2)) throw std::invalid_argument("asym_pair: n must be >= 2");
  return w.asym(n, p);
}

double evaluate_entry(const WeightFunction& w, Distance d, double di, double dj,
                      const WeightContext& ctx) {
  return w.evaluate(d, di, dj, ctx);
}

}  // namespace wle
