#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace doekit::stats {

struct QuartileSummary {
  double q1 = 0.0;
  double q2 = 0.0;
  double q3 = 0.0;
  double mean = 0.0;
  std::size_t n = 0;
};

struct PairedSample {
  std::vector<std::pair<double, double>> pairs; // (before, after)
};

enum class Sidedness { TwoSided, Greater, Less };

struct WilcoxonResult {
  double statistic = 0.0; // W: sum of positive-difference ranks
  double p_value = 1.0;
  std::size_t n = 0; // pairs remaining after dropping zero differences
  bool exact = false;
};

// Quartiles by linear interpolation between closest order statistics
// (position (n-1)*p on the sorted sample); mean is the arithmetic mean.
// Throws Error(EmptyInput) on an empty sample.
QuartileSummary quartile_summary(const std::vector<double>& values);

nlohmann::json quartile_summary_to_json(const QuartileSummary& summary);

// Average ranks (ties share the mean of their positions), 1-based.
std::vector<double> average_ranks(const std::vector<double>& values);

// Tie-corrected rank correlation (tau-b) between two rank vectors.
// Throws Error(DegenerateRanking) when fewer than 2 items or when either
// vector is entirely tied.
double kendall_tau_ranks(const std::vector<double>& ranks_a,
                         const std::vector<double>& ranks_b);

// Convenience over two orderings of the same id set: rank = position.
double kendall_tau(const std::vector<std::string>& order_a,
                   const std::vector<std::string>& order_b);

// Signed-rank test on paired differences d = before - after. Differences
// of exactly zero are dropped; absolute differences get average ranks and
// W sums the ranks of the positive ones. Exact p by enumeration over sign
// assignments for n <= 25; normal approximation with tie correction and
// continuity correction beyond that.
WilcoxonResult wilcoxon_signed_rank(const PairedSample& sample,
                                    Sidedness sidedness = Sidedness::TwoSided);

// Spearman rho: Pearson correlation of average-ranked data. Pearson itself
// is exposed for callers that want the raw-data coefficient.
double spearman_rho(const std::vector<double>& x, const std::vector<double>& y);
double pearson(const std::vector<double>& x, const std::vector<double>& y);

} // namespace doekit::stats
