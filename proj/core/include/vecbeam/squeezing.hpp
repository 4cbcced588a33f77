#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace vecbeam {

/// v = 10^(db / 10).
double db_to_variance(double db);
/// Inverse of db_to_variance. Throws DomainError for v <= 0.
double variance_to_db(double variance);

/// Amplitude-quadrature noise variance relative to shot noise.
class SqueezingState {
 public:
  explicit SqueezingState(double variance, std::optional<double> uncertainty_db = std::nullopt);
  static SqueezingState from_db(double db, std::optional<double> uncertainty_db = std::nullopt);

  double variance() const { return variance_; }
  double db() const { return variance_to_db(variance_); }
  std::optional<double> uncertainty_db() const { return uncertainty_db_; }
  bool squeezed() const { return variance_ < 1.0; }

 private:
  double variance_;
  std::optional<double> uncertainty_db_;
};

/// Beam-splitter loss: V' = eta V + (1 - eta). The dB uncertainty scales by
/// the first-order factor eta V / V'.
SqueezingState apply_loss(const SqueezingState& s, double transmission);

struct BudgetStage {
  double transmission = 1.0;
  double cumulative_transmission = 1.0;
  SqueezingState state{1.0};
};

struct BudgetReport {
  SqueezingState input{1.0};
  std::vector<BudgetStage> stages;
  const SqueezingState& output() const { return stages.empty() ? input : stages.back().state; }
  double total_transmission() const { return stages.empty() ? 1.0 : stages.back().cumulative_transmission; }
};

BudgetReport budget(double input_db, std::span<const double> transmissions,
                    std::optional<double> input_uncertainty_db = std::nullopt);

/// Plain-text table: stage, eta, cumulative eta, variance, dB.
std::string format_budget_table(const BudgetReport& report);
std::string format_budget_csv(const BudgetReport& report);

/// eta = (V_out - 1) / (V_in - 1). Throws DomainError when no eta in [0, 1]
/// explains the pair.
double loss_for_target(double input_db, double output_db);

}  // namespace vecbeam
