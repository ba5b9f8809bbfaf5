#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <string>
#include <vector>

namespace sketchlab {

struct Sample {
  std::string name;
  std::vector<double> values;
};

struct TestResult {
  double statistic = 0.0;
  double p_value = 1.0;
  std::vector<std::size_t> n;
  std::string method;
};

enum class Adjustment { bonferroni, holm, none };

std::string to_string(Adjustment adjustment);
Adjustment adjustment_from_string(const std::string& name);

struct DunnPair {
  std::size_t i = 0;  // group indices, i < j
  std::size_t j = 0;
  double z = 0.0;
  double p_raw = 1.0;
  double p_adjusted = 1.0;
};

// Pairwise post hoc table over k groups; one entry per unordered pair.
struct DunnResult {
  std::size_t group_count = 0;
  std::vector<DunnPair> pairs;
  std::string adjustment;

  const DunnPair& pair(std::size_t a, std::size_t b) const;
};

struct HistogramBin {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t count = 0;
};

// Average ranks (1-based), ties share the mean of their rank span.
std::vector<double> average_ranks(const std::vector<double>& values);

// Sample distance correlation in [0, 1] from double-centered pairwise
// distance matrices; 0 when either marginal distance variance vanishes.
double distance_correlation(const Sample& x, const Sample& y);

// Shapiro-Wilk normality test, Royston's approximation, 3 <= n <= 5000.
TestResult shapiro_wilk(const Sample& x);

// Rank-based k-group test with tie correction. All values identical is
// treated as "no separation": H = 0, p = 1.
TestResult kruskal_wallis(const std::vector<Sample>& groups);

DunnResult dunn_test(const std::vector<Sample>& groups, Adjustment adjustment);

std::vector<double> group_medians(const std::vector<Sample>& groups);

// Equal-width bins over [min, max], right-open except the last.
std::vector<HistogramBin> histogram(const Sample& x, int bins);

}  // namespace sketchlab
