#include "vecbeam/squeezing.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "vecbeam/errors.hpp"

namespace vecbeam {

double db_to_variance(double db) {
  if (!std::isfinite(db)) throw DomainError("db_to_variance: non-finite dB value");
  return std::pow(10.0, db / 10.0);
}

double variance_to_db(double variance) {
  if (!(variance > 0.0) || !std::isfinite(variance)) {
    throw DomainError("variance_to_db: variance must be positive and finite");
  }
  return 10.0 * std::log10(variance);
}

SqueezingState::SqueezingState(double variance, std::optional<double> uncertainty_db)
    : variance_(variance), uncertainty_db_(uncertainty_db) {
  if (!(variance > 0.0) || !std::isfinite(variance)) throw DomainError("squeezing variance must be > 0");
  if (uncertainty_db && !(*uncertainty_db >= 0.0)) throw DomainError("uncertainty must be >= 0 dB");
}

SqueezingState SqueezingState::from_db(double db, std::optional<double> uncertainty_db) {
  return SqueezingState(db_to_variance(db), uncertainty_db);
}

SqueezingState apply_loss(const SqueezingState& s, double transmission) {
  if (!(transmission >= 0.0 && transmission <= 1.0)) {
    throw DomainError("apply_loss: transmission must lie in [0, 1]");
  }
  const double kept = transmission * s.variance();
  const double out = kept + (1.0 - transmission);
  std::optional<double> unc;
  if (s.uncertainty_db()) unc = *s.uncertainty_db() * kept / out;
  return SqueezingState(out, unc);
}

BudgetReport budget(double input_db, std::span<const double> transmissions,
                    std::optional<double> input_uncertainty_db) {
  BudgetReport report{SqueezingState::from_db(input_db, input_uncertainty_db), {}};
  SqueezingState state = report.input;
  double cumulative = 1.0;
  for (double eta : transmissions) {
    state = apply_loss(state, eta);
    cumulative *= eta;
    report.stages.push_back({eta, cumulative, state});
  }
  return report;
}

namespace {

std::string uncertainty_text(const SqueezingState& s) {
  if (!s.uncertainty_db()) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, " +/- %.3f", *s.uncertainty_db());
  return buf;
}

}  // namespace

std::string format_budget_table(const BudgetReport& report) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof line, "%-6s %10s %14s %12s %10s\n", "stage", "eta", "cumulative_eta", "variance",
                "dB");
  out << line;
  std::snprintf(line, sizeof line, "%-6s %10s %14.6f %12.6f %10.4f%s\n", "input", "-", 1.0, report.input.variance(),
                report.input.db(), uncertainty_text(report.input).c_str());
  out << line;
  for (std::size_t k = 0; k < report.stages.size(); ++k) {
    const auto& st = report.stages[k];
    std::snprintf(line, sizeof line, "%-6zu %10.6f %14.6f %12.6f %10.4f%s\n", k + 1, st.transmission,
                  st.cumulative_transmission, st.state.variance(), st.state.db(), uncertainty_text(st.state).c_str());
    out << line;
  }
  std::snprintf(line, sizeof line, "final: %.4f dB (total transmission %.6f, loss %.2f %%)\n", report.output().db(),
                report.total_transmission(), 100.0 * (1.0 - report.total_transmission()));
  out << line;
  return out.str();
}

std::string format_budget_csv(const BudgetReport& report) {
  std::ostringstream out;
  out.precision(17);
  out << "stage,eta,cumulative_eta,variance,db,uncertainty_db\n";
  auto unc = [](const SqueezingState& s) {
    std::ostringstream v;
    v.precision(17);
    if (s.uncertainty_db()) v << *s.uncertainty_db();
    return v.str();
  };
  out << "input,,1," << report.input.variance() << ',' << report.input.db() << ',' << unc(report.input) << '\n';
  for (std::size_t k = 0; k < report.stages.size(); ++k) {
    const auto& st = report.stages[k];
    out << k + 1 << ',' << st.transmission << ',' << st.cumulative_transmission << ',' << st.state.variance() << ','
        << st.state.db() << ',' << unc(st.state) << '\n';
  }
  return out.str();
}

double loss_for_target(double input_db, double output_db) {
  const double vin = db_to_variance(input_db);
  const double vout = db_to_variance(output_db);
  if (vin == 1.0) {
    if (vout == 1.0) return 1.0;
    throw DomainError("loss_for_target: a shot-noise input cannot reach a different output");
  }
  const double eta = (vout - 1.0) / (vin - 1.0);
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw DomainError("loss_for_target: no transmission in [0, 1] maps the input onto the output");
  }
  return eta;
}

}  // namespace vecbeam
