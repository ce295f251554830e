#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <string_view>

#include "wle/energies.hpp"
#include "wle/spectral.hpp"
#include "wle/weights.hpp"

namespace wle {

enum class Quantity { EAdj, EWf, LEf, LEPlusf, LELf, IEf };

/// "E_adj", "E_Wf", "LE_f", "LE_plus_f", "LEL_f", "IE_f".
std::string_view to_string(Quantity q) noexcept;
/// Throws std::invalid_argument for unknown names.
Quantity parse_quantity(std::string_view name);

inline constexpr Quantity kAllQuantities[] = {
    Quantity::EAdj, Quantity::EWf,  Quantity::LEf,
    Quantity::LEPlusf, Quantity::LELf, Quantity::IEf};

struct Bracket {
  double lower = 0;
  double upper = 0;
};

/// Leading-order value of an energy. Point predictions set `value`, bound
/// predictions set `bracket`; neither set means the asymptotics say nothing
/// usable for this weight (see `note`).
struct Prediction {
  Quantity quantity = Quantity::LELf;
  std::optional<double> value;
  std::optional<Bracket> bracket;
  std::string source;
  std::string note;

  bool indeterminate() const noexcept { return !value && !bracket; }
};

nlohmann::json to_json(const Prediction& p);

namespace coeff {
inline constexpr double kPi = 3.14159265358979323846;
/// Semicircle mean |x| constant for adjacency-type energies.
inline constexpr double kSemicircle = 8.0 / (3.0 * kPi);
inline constexpr double kLaplacianLower = 0.94280904158206336587;  // 2 sqrt2 / 3
inline constexpr double kSqrt2 = 1.41421356237309504880;
inline constexpr double kSignlessCentre = 16.0 / (3.0 * kPi);
}  // namespace coeff

/// LEL_f and IE_f share one leading term:
///   C infinite: sqrt|f1| sqrt(p) n^{3/2}
///   C finite:   sqrt|f2| sqrt|1 + (C-1)p| n^{3/2}
Prediction predict_lel_ie(const WeightFunction& w, double n, double p,
                          Quantity q = Quantity::LELf);

/// Bounds on LE_f (q = LEf) or LE_f^+ (q = LEPlusf) for weights that depend
/// on distance only; indeterminate for degree-dependent weights. Negative
/// lower endpoints are floored at 0.
Prediction predict_le_bracket(const WeightFunction& w, double n, double p,
                              Quantity q = Quantity::LEf);

/// E(W_f) = |f1 - f2| (8/3pi) sqrt(p(1-p)) n^{3/2}; indeterminate when
/// f1/f2 -> 1.
Prediction predict_energy_wf(const WeightFunction& w, double n, double p);

/// E(A_f) = |f1| (8/3pi) sqrt(p(1-p)) n^{3/2}. Throws std::invalid_argument
/// for weights that are not adjacency-only.
Prediction predict_energy_adj(const WeightFunction& w, double n, double p);

/// Location of the L_f eigenvalue bulk: (f1 - f2) p n + f2 n.
double predict_bulk_eigenvalue(const WeightFunction& w, double n, double p);

/// Outliers of the L_f spectrum that sit outside the bulk, chosen by the
/// signs of F = f1 - f2 and f2. Always includes the zero eigenvalue.
ExcludeExtremes bulk_exclusions(const WeightFunction& w, double n, double p);

/// Dispatches to the predictor for q.
Prediction predict(Quantity q, const WeightFunction& w, double n, double p);

/// LE_f - E(W_f); positive when the instance satisfies the strict dominance.
double conjecture_margin(const EnergyReport& report);

}  // namespace wle
