#include "wle/predictors.hpp"

#include <cmath>
#include <stdexcept>

namespace wle {

namespace {

void require_open_p(double p, const char* who) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument(std::string(who) + ": p must lie in (0, 1)");
  }
}

double n32(double n) { return n * std::sqrt(n); }

}  // namespace

std::string_view to_string(Quantity q) noexcept {
  switch (q) {
    case Quantity::EAdj:
      return "E_adj";
    case Quantity::EWf:
      return "E_Wf";
    case Quantity::LEf:
      return "LE_f";
    case Quantity::LEPlusf:
      return "LE_plus_f";
    case Quantity::LELf:
      return "LEL_f";
    case Quantity::IEf:
      return "IE_f";
  }
  return "unknown";
}

Quantity parse_quantity(std::string_view name) {
  for (Quantity q : kAllQuantities) {
    if (to_string(q) == name) return q;
  }
  throw std::invalid_argument("unknown quantity '" + std::string(name) + "'");
}

nlohmann::json to_json(const Prediction& p) {
  nlohmann::json j = {{"quantity", to_string(p.quantity)}};
  if (p.bracket) {
    j["bracket"] = {{"lower", p.bracket->lower}, {"upper", p.bracket->upper}};
  } else if (p.value) {
    j["value"] = *p.value;
  } else {
    j["value"] = nullptr;
  }
  j["source"] = p.source;
  if (!p.note.empty()) j["note"] = p.note;
  return j;
}

Prediction predict_lel_ie(const WeightFunction& w, double n, double p,
                          Quantity q) {
  require_open_p(p, "predict_lel_ie");
  if (q != Quantity::LELf && q != Quantity::IEf) {
    throw std::invalid_argument("predict_lel_ie: quantity must be LEL_f or IE_f");
  }
  const AsymPair f = asym_pair(w, n, p);
  Prediction out;
  out.quantity = q;
  if (w.limit_class().is_finite()) {
    const double c = w.limit_class().constant();
    out.value = std::sqrt(std::abs(f.f2)) *
                std::sqrt(std::abs(1 + (c - 1) * p)) * n32(n);
    out.source = "lel_ie_finite_ratio";
  } else {
    out.value = std::sqrt(std::abs(f.f1)) * std::sqrt(p) * n32(n);
    out.source = "lel_ie_adjacency_dominant";
  }
  return out;
}

Prediction predict_le_bracket(const WeightFunction& w, double n, double p,
                              Quantity q) {
  require_open_p(p, "predict_le_bracket");
  Prediction out;
  out.quantity = q;
  out.source = "le_distance_only_bracket";
  if (w.depends_on_degrees()) {
    out.note = "weight '" + w.name() +
               "' depends on degrees; the Laplacian-energy bounds need "
               "f(1,.,.) and f(2,.,.) to be constants";
    return out;
  }
  const AsymPair f = asym_pair(w, n, p);
  const double gap = std::abs(f.f1 - f.f2);
  const double scale = gap * std::sqrt(p * (1 - p)) * n32(n);
  double lo = 0, hi = 0;
  if (q == Quantity::LEf) {
    lo = coeff::kLaplacianLower * scale;
    hi = coeff::kSqrt2 * scale;
  } else if (q == Quantity::LEPlusf) {
    lo = (coeff::kSignlessCentre - coeff::kSqrt2) * scale;
    hi = (coeff::kSignlessCentre + coeff::kSqrt2) * scale;
  } else {
    throw std::invalid_argument(
        "predict_le_bracket: quantity must be LE_f or LE_plus_f");
  }
  out.bracket = Bracket{std::max(lo, 0.0), hi};
  return out;
}

Prediction predict_energy_wf(const WeightFunction& w, double n, double p) {
  require_open_p(p, "predict_energy_wf");
  Prediction out;
  out.quantity = Quantity::EWf;
  out.source = "energy_weighted_distance";
  const LimitClass& lim = w.limit_class();
  if (lim.is_finite() && lim.constant() == 1.0) {
    out.note = "f(1,np,np)/f(2,np,np) -> 1: only o(|f(2,np,np)|) n^{3/2} known";
    return out;
  }
  const AsymPair f = asym_pair(w, n, p);
  out.value = std::abs(f.f1 - f.f2) * coeff::kSemicircle *
              std::sqrt(p * (1 - p)) * n32(n);
  return out;
}

Prediction predict_energy_adj(const WeightFunction& w, double n, double p) {
  require_open_p(p, "predict_energy_adj");
  if (!w.adjacency_only()) {
    throw std::invalid_argument("predict_energy_adj: weight '" + w.name() +
                                "' is not degree-based");
  }
  const AsymPair f = asym_pair(w, n, p);
  Prediction out;
  out.quantity = Quantity::EAdj;
  out.source = "energy_weighted_adjacency";
  out.value =
      std::abs(f.f1) * coeff::kSemicircle * std::sqrt(p * (1 - p)) * n32(n);
  return out;
}

double predict_bulk_eigenvalue(const WeightFunction& w, double n, double p) {
  require_open_p(p, "predict_bulk_eigenvalue");
  const AsymPair f = asym_pair(w, n, p);
  return (f.f1 - f.f2) * p * n + f.f2 * n;
}

ExcludeExtremes bulk_exclusions(const WeightFunction& w, double n, double p) {
  const AsymPair f = asym_pair(w, n, p);
  const double gap = f.f1 - f.f2;
  // F > 0, f2 >= 0: lambda_{n-1} = O(nF) and lambda_n = 0 sit below the bulk.
  if (gap > 0 && f.f2 >= 0) return {0, 2};
  // Every other sign pattern leaves one outlier at each end.
  return {1, 1};
}

Prediction predict(Quantity q, const WeightFunction& w, double n, double p) {
  switch (q) {
    case Quantity::EAdj:
      return predict_energy_adj(w, n, p);
    case Quantity::EWf:
      return predict_energy_wf(w, n, p);
    case Quantity::LEf:
    case Quantity::LEPlusf:
      return predict_le_bracket(w, n, p, q);
    case Quantity::LELf:
    case Quantity::IEf:
      return predict_lel_ie(w, n, p, q);
  }
  throw std::invalid_argument("predict: unknown quantity");
}

double conjecture_margin(const EnergyReport& report) {
  return report.laplacian_energy - report.graph_energy;
}

}  // namespace wle
