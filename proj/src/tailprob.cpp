#include "hda/tailprob.hpp"

#include <cmath>

#include "hda/errors.hpp"

namespace hda {

namespace {

std::pair<double, bool> clamp_unit(double p) {
  if (std::isnan(p)) return {1.0, true};
  if (p < 0.0) return {0.0, true};
  if (p > 1.0) return {1.0, true};
  return {p, false};
}

TailMethod label(Cone cone, bool semiparametric) {
  if (cone == Cone::NonStandardSqcap)
    return semiparametric ? TailMethod::SemiparametricSqcap
                          : TailMethod::NonparametricSqcap;
  return semiparametric ? TailMethod::SemiparametricE0 : TailMethod::NonparametricE0;
}

}  // namespace

TailEstimate joint_tail(const HdaModel& model, const BivariateSample& sample,
                        const TailQuery& q, MethodChoice choice) {
  if (q.mode != QueryMode::Joint)
    throw Error(ErrorCode::InvalidConfig, "joint_tail answers Joint queries");
  if (sample.n() != model.n)
    throw Error(ErrorCode::InvalidConfig, "model and sample sizes differ");
  if (!(model.evt.scale > 0.0))
    throw Error(ErrorCode::DegenerateData, "model scale must be positive");

  const bool semi = choice == MethodChoice::Semiparametric ||
                    (choice == MethodChoice::Auto && model.spectral.selected() >= 50);
  const double x = (q.u - model.evt.location) / model.evt.scale;
  const double y = (q.v - model.evt.location) / model.evt.scale;
  const ConeMode mode =
      model.cone == Cone::NonStandardSqcap ? ConeMode::Sqcap : ConeMode::E0;
  const double mass = semi ? nu_semiparametric(model, x, y)
                           : nu_nonparametric(sample, model.evt, x, y, mode);
  const double ratio =
      static_cast<double>(model.k) / static_cast<double>(model.n);

  TailEstimate out;
  out.method = label(model.cone, semi);
  out.k = model.k;
  auto [p, clamped] = clamp_unit(ratio * mass);
  out.probability = p;
  out.clamped = clamped;
  return out;
}

TailEstimate marginal2_tail(const HdaModel& sqcap_model, double v) {
  if (sqcap_model.cone != Cone::NonStandardSqcap)
    throw Error(ErrorCode::InvalidConfig, "marginal2_tail needs a Sqcap model");
  const double y = (v - sqcap_model.evt.location) / sqcap_model.evt.scale;
  const double denom = psi_unified(sqcap_model.evt.gamma, y);
  const double ratio =
      static_cast<double>(sqcap_model.k) / static_cast<double>(sqcap_model.n);

  TailEstimate out;
  out.method = TailMethod::SemiparametricSqcap;
  out.k = sqcap_model.k;
  auto [p, clamped] = clamp_unit(std::isinf(denom) ? 0.0 : ratio / denom);
  out.probability = p;
  out.clamped = clamped;
  return out;
}

}  // namespace hda
