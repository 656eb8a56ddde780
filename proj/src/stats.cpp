#include "doekit/stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include <nlohmann/json.hpp>

#include "doekit/errors.hpp"

namespace doekit::stats {

namespace {

double interpolated_quantile(const std::vector<double>& sorted, double p) {
  const std::size_t n = sorted.size();
  if (n == 1) return sorted[0];
  double h = static_cast<double>(n - 1) * p;
  std::size_t lo = static_cast<std::size_t>(std::floor(h));
  std::size_t hi = std::min(lo + 1, n - 1);
  double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

} // namespace

QuartileSummary quartile_summary(const std::vector<double>& values) {
  if (values.empty()) throw Error(Errc::EmptyInput, "empty sample");
  std::vector<double> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  QuartileSummary summary;
  summary.n = sorted.size();
  summary.q1 = interpolated_quantile(sorted, 0.25);
  summary.q2 = interpolated_quantile(sorted, 0.50);
  summary.q3 = interpolated_quantile(sorted, 0.75);
  summary.mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) /
                 static_cast<double>(sorted.size());
  return summary;
}

nlohmann::json quartile_summary_to_json(const QuartileSummary& summary) {
  return {{"q1", summary.q1},
          {"q2", summary.q2},
          {"q3", summary.q3},
          {"mean", summary.mean},
          {"n", summary.n}};
}

std::vector<double> average_ranks(const std::vector<double>& values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> index(n);
  std::iota(index.begin(), index.end(), std::size_t{0});
  std::sort(index.begin(), index.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[index[j + 1]] == values[index[i]]) ++j;
    double avg = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (std::size_t k = i; k <= j; ++k) ranks[index[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

double kendall_tau_ranks(const std::vector<double>& ranks_a,
                         const std::vector<double>& ranks_b) {
  const std::size_t n = ranks_a.size();
  if (n != ranks_b.size())
    throw Error(Errc::DegenerateRanking, "rank vectors differ in length");
  if (n < 2) throw Error(Errc::DegenerateRanking, "need at least 2 items");

  auto tie_pairs = [](const std::vector<double>& ranks) {
    std::map<double, std::size_t> groups;
    for (double r : ranks) ++groups[r];
    double total = 0.0;
    for (const auto& [value, count] : groups) {
      (void)value;
      total += static_cast<double>(count) * (count - 1) / 2.0;
    }
    return total;
  };

  const double n0 = static_cast<double>(n) * (n - 1) / 2.0;
  const double n1 = tie_pairs(ranks_a);
  const double n2 = tie_pairs(ranks_b);
  if (n1 == n0 || n2 == n0)
    throw Error(Errc::DegenerateRanking, "all ranks tied in one list");

  double concordant_minus_discordant = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double da = ranks_a[i] - ranks_a[j];
      double db = ranks_b[i] - ranks_b[j];
      double product = da * db;
      if (product > 0) concordant_minus_discordant += 1.0;
      else if (product < 0) concordant_minus_discordant -= 1.0;
    }
  }
  return concordant_minus_discordant / std::sqrt((n0 - n1) * (n0 - n2));
}

double kendall_tau(const std::vector<std::string>& order_a,
                   const std::vector<std::string>& order_b) {
  if (order_a.size() != order_b.size())
    throw Error(Errc::DegenerateRanking, "orderings differ in length");
  std::map<std::string, double> position;
  for (std::size_t i = 0; i < order_b.size(); ++i)
    position[order_b[i]] = static_cast<double>(i + 1);
  if (position.size() != order_b.size())
    throw Error(Errc::DegenerateRanking, "duplicate id in ordering");

  std::vector<double> ranks_a;
  std::vector<double> ranks_b;
  ranks_a.reserve(order_a.size());
  ranks_b.reserve(order_a.size());
  for (std::size_t i = 0; i < order_a.size(); ++i) {
    auto it = position.find(order_a[i]);
    if (it == position.end())
      throw Error(Errc::DegenerateRanking,
                  "id sets differ: " + order_a[i] + " missing");
    ranks_a.push_back(static_cast<double>(i + 1));
    ranks_b.push_back(it->second);
  }
  return kendall_tau_ranks(ranks_a, ranks_b);
}

WilcoxonResult wilcoxon_signed_rank(const PairedSample& sample,
                                    Sidedness sidedness) {
  std::vector<double> diffs;
  diffs.reserve(sample.pairs.size());
  for (const auto& [before, after] : sample.pairs) {
    double d = before - after;
    if (d != 0.0) diffs.push_back(d);
  }
  if (diffs.empty())
    throw Error(Errc::AllZeroDifferences, "all paired differences are zero");

  const std::size_t n = diffs.size();
  std::vector<double> abs_diffs(n);
  for (std::size_t i = 0; i < n; ++i) abs_diffs[i] = std::fabs(diffs[i]);
  std::vector<double> ranks = average_ranks(abs_diffs);

  double w = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    if (diffs[i] > 0) w += ranks[i];

  WilcoxonResult result;
  result.statistic = w;
  result.n = n;

  if (n <= 25) {
    // Exact null distribution over the 2^n sign assignments, tabulated on
    // doubled ranks so tied (half-integer) ranks stay integral.
    std::vector<long long> doubled(n);
    long long total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      doubled[i] = std::llround(ranks[i] * 2.0);
      total += doubled[i];
    }
    std::vector<double> count(static_cast<std::size_t>(total) + 1, 0.0);
    count[0] = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (long long s = total; s >= doubled[i]; --s)
        count[static_cast<std::size_t>(s)] +=
            count[static_cast<std::size_t>(s - doubled[i])];
    }
    const double denom = std::pow(2.0, static_cast<double>(n));
    long long w2 = std::llround(w * 2.0);
    double greater = 0.0;
    double less = 0.0;
    for (long long s = 0; s <= total; ++s) {
      double c = count[static_cast<std::size_t>(s)];
      if (s >= w2) greater += c;
      if (s <= w2) less += c;
    }
    greater /= denom;
    less /= denom;
    result.exact = true;
    switch (sidedness) {
    case Sidedness::Greater: result.p_value = greater; break;
    case Sidedness::Less: result.p_value = less; break;
    case Sidedness::TwoSided:
      result.p_value = std::min(1.0, 2.0 * std::min(greater, less));
      break;
    }
    return result;
  }

  // Normal approximation with tie correction and continuity correction.
  const double dn = static_cast<double>(n);
  const double mean = dn * (dn + 1.0) / 4.0;
  double tie_term = 0.0;
  {
    std::map<double, std::size_t> groups;
    for (double a : abs_diffs) ++groups[a];
    for (const auto& [value, t] : groups) {
      (void)value;
      double td = static_cast<double>(t);
      tie_term += td * td * td - td;
    }
  }
  const double variance =
      dn * (dn + 1.0) * (2.0 * dn + 1.0) / 24.0 - tie_term / 48.0;
  const double sd = std::sqrt(variance);
  const double greater = 1.0 - normal_cdf((w - mean - 0.5) / sd);
  const double less = normal_cdf((w - mean + 0.5) / sd);
  result.exact = false;
  switch (sidedness) {
  case Sidedness::Greater: result.p_value = greater; break;
  case Sidedness::Less: result.p_value = less; break;
  case Sidedness::TwoSided:
    result.p_value = std::min(1.0, 2.0 * std::min(greater, less));
    break;
  }
  return result;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw Error(Errc::DegenerateInput, "need two equal-length samples, n >= 2");
  const double n = static_cast<double>(x.size());
  double mean_x = std::accumulate(x.begin(), x.end(), 0.0) / n;
  double mean_y = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double cov = 0.0;
  double var_x = 0.0;
  double var_y = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double dx = x[i] - mean_x;
    double dy = y[i] - mean_y;
    cov += dx * dy;
    var_x += dx * dx;
    var_y += dy * dy;
  }
  if (var_x == 0.0 || var_y == 0.0)
    throw Error(Errc::DegenerateInput, "zero variance");
  return cov / std::sqrt(var_x * var_y);
}

double spearman_rho(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw Error(Errc::DegenerateInput, "need two equal-length samples, n >= 2");
  std::vector<double> rx = average_ranks(x);
  std::vector<double> ry = average_ranks(y);
  return pearson(rx, ry);
}

} // namespace doekit::stats
