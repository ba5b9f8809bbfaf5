#include "sketchlab/stats.hpp"

#include "sketchlab/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace sketchlab {

std::string to_string(Adjustment adjustment) {
  switch (adjustment) {
    case Adjustment::bonferroni: return "bonferroni";
    case Adjustment::holm: return "holm";
    case Adjustment::none: return "none";
  }
  throw std::logic_error("to_string: unknown adjustment");
}

Adjustment adjustment_from_string(const std::string& name) {
  if (name == "bonferroni") return Adjustment::bonferroni;
  if (name == "holm") return Adjustment::holm;
  if (name == "none") return Adjustment::none;
  throw std::invalid_argument("unknown p-value adjustment: " + name);
}

const DunnPair& DunnResult::pair(std::size_t a, std::size_t b) const {
  if (a > b) {
    std::swap(a, b);
  }
  for (const DunnPair& p : pairs) {
    if (p.i == a && p.j == b) {
      return p;
    }
  }
  throw std::out_of_range("DunnResult::pair: no such pair");
}

std::vector<double> average_ranks(const std::vector<double>& values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) {
      ++j;
    }
    const double shared = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) {
      ranks[order[k]] = shared;
    }
    i = j + 1;
  }
  return ranks;
}

namespace {

void require_finite(const Sample& s) {
  for (double v : s.values) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("sample '" + s.name + "' contains non-finite values");
    }
  }
}

Eigen::MatrixXd centered_distance_matrix(const std::vector<double>& v) {
  const auto n = static_cast<Eigen::Index>(v.size());
  Eigen::MatrixXd d(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      d(i, j) = std::abs(v[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(j)]);
    }
  }
  const Eigen::VectorXd row_means = d.rowwise().mean();
  const double grand_mean = d.mean();
  d.colwise() -= row_means;
  d.rowwise() -= row_means.transpose();
  d.array() += grand_mean;
  return d;
}

// Sum of (t^3 - t) over tie groups of the pooled values.
double tie_cubic_term(const std::vector<double>& pooled) {
  std::map<double, std::size_t> counts;
  for (double v : pooled) {
    ++counts[v];
  }
  double acc = 0.0;
  for (const auto& [value, t] : counts) {
    const auto td = static_cast<double>(t);
    acc += td * td * td - td;
  }
  return acc;
}

struct PooledRanks {
  std::vector<double> rank_sums;   // per group
  std::vector<std::size_t> sizes;  // per group
  std::size_t total = 0;
  double tie_term = 0.0;  // sum of t^3 - t
};

PooledRanks pool_and_rank(const std::vector<Sample>& groups) {
  if (groups.size() < 2) {
    throw std::invalid_argument("need at least 2 groups");
  }
  std::vector<double> pooled;
  std::vector<std::size_t> owner;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    require_finite(groups[g]);
    if (groups[g].values.empty()) {
      throw std::invalid_argument("group '" + groups[g].name + "' is empty");
    }
    for (double v : groups[g].values) {
      pooled.push_back(v);
      owner.push_back(g);
    }
  }
  if (pooled.size() < 3) {
    throw std::invalid_argument("need at least 3 pooled observations");
  }
  const std::vector<double> ranks = average_ranks(pooled);
  PooledRanks out;
  out.rank_sums.assign(groups.size(), 0.0);
  out.sizes.assign(groups.size(), 0);
  out.total = pooled.size();
  out.tie_term = tie_cubic_term(pooled);
  for (std::size_t i = 0; i < pooled.size(); ++i) {
    out.rank_sums[owner[i]] += ranks[i];
    ++out.sizes[owner[i]];
  }
  return out;
}

}  // namespace

double distance_correlation(const Sample& x, const Sample& y) {
  if (x.values.size() != y.values.size()) {
    throw std::invalid_argument("distance_correlation: length mismatch");
  }
  if (x.values.size() < 2) {
    throw std::invalid_argument("distance_correlation: need at least 2 observations");
  }
  require_finite(x);
  require_finite(y);

  const Eigen::MatrixXd a = centered_distance_matrix(x.values);
  const Eigen::MatrixXd b = centered_distance_matrix(y.values);
  const double n2 = static_cast<double>(x.values.size()) * static_cast<double>(x.values.size());
  const double dcov2 = a.cwiseProduct(b).sum() / n2;
  const double dvarx2 = a.cwiseProduct(a).sum() / n2;
  const double dvary2 = b.cwiseProduct(b).sum() / n2;
  if (dvarx2 <= 0.0 || dvary2 <= 0.0) {
    return 0.0;
  }
  const double ratio = std::max(0.0, dcov2) / std::sqrt(dvarx2 * dvary2);
  return std::clamp(std::sqrt(ratio), 0.0, 1.0);
}

TestResult shapiro_wilk(const Sample& sample) {
  const std::size_t n = sample.values.size();
  if (n < 3) {
    throw std::invalid_argument("shapiro_wilk: need at least 3 observations");
  }
  if (n > 5000) {
    throw std::invalid_argument("shapiro_wilk: approximation valid only up to n = 5000");
  }
  require_finite(sample);

  std::vector<double> x = sample.values;
  std::sort(x.begin(), x.end());
  if (!(x.back() - x.front() > 0.0)) {
    throw std::invalid_argument("shapiro_wilk: sample has zero variance");
  }

  const std::size_t half = n / 2;
  const double an = static_cast<double>(n);
  std::vector<double> a(half, 0.0);

  if (n == 3) {
    a[0] = std::sqrt(0.5);
  } else {
    // Expected normal order statistics for the lower half, then Royston's
    // polynomial correction of the two outermost weights.
    std::vector<double> m(half, 0.0);
    double summ2 = 0.0;
    for (std::size_t i = 0; i < half; ++i) {
      m[i] = normal_quantile((static_cast<double>(i + 1) - 0.375) / (an + 0.25));
      summ2 += m[i] * m[i];
    }
    summ2 *= 2.0;
    const double ssumm2 = std::sqrt(summ2);
    const double rsn = 1.0 / std::sqrt(an);
    const double a1 =
        -m[0] / ssumm2 +
        rsn * (0.221157 +
               rsn * (-0.147981 + rsn * (-2.071190 + rsn * (4.434685 + rsn * -2.706056))));
    std::size_t first_untouched;
    double fac;
    if (n > 5) {
      const double a2 =
          -m[1] / ssumm2 +
          rsn * (0.042981 +
                 rsn * (-0.293762 + rsn * (-1.752461 + rsn * (5.682633 + rsn * -3.582633))));
      fac = std::sqrt((summ2 - 2.0 * m[0] * m[0] - 2.0 * m[1] * m[1]) /
                      (1.0 - 2.0 * a1 * a1 - 2.0 * a2 * a2));
      a[1] = a2;
      first_untouched = 2;
    } else {
      fac = std::sqrt((summ2 - 2.0 * m[0] * m[0]) / (1.0 - 2.0 * a1 * a1));
      first_untouched = 1;
    }
    a[0] = a1;
    for (std::size_t i = first_untouched; i < half; ++i) {
      a[i] = -m[i] / fac;
    }
  }

  const double mean = std::accumulate(x.begin(), x.end(), 0.0) / an;
  double ssq = 0.0;
  for (double v : x) {
    ssq += (v - mean) * (v - mean);
  }
  double num = 0.0;
  for (std::size_t i = 0; i < half; ++i) {
    num += a[i] * (x[n - 1 - i] - x[i]);
  }
  double w = num * num / ssq;
  w = std::min(w, 1.0);

  double p;
  if (n == 3) {
    constexpr double kSixOverPi = 1.90985931710274;
    constexpr double kAsinSqrt34 = 1.04719755119660;
    p = std::clamp(kSixOverPi * (std::asin(std::sqrt(w)) - kAsinSqrt34), 0.0, 1.0);
  } else {
    double y = std::log1p(-w);
    double mu, sigma;
    if (n <= 11) {
      const double gamma = -2.273 + 0.459 * an;
      if (y >= gamma) {
        return {w, 0.0, {n}, "shapiro-wilk"};
      }
      y = -std::log(gamma - y);
      mu = 0.5440 + an * (-0.39978 + an * (0.025054 + an * -6.714e-4));
      sigma = std::exp(1.3822 + an * (-0.77857 + an * (0.062767 + an * -0.0020322)));
    } else {
      const double logn = std::log(an);
      mu = -1.5861 + logn * (-0.31082 + logn * (-0.083751 + logn * 0.0038915));
      sigma = std::exp(-0.4803 + logn * (-0.082676 + logn * 0.0030302));
    }
    p = 1.0 - normal_cdf((y - mu) / sigma);
  }
  return {w, p, {n}, "shapiro-wilk"};
}

TestResult kruskal_wallis(const std::vector<Sample>& groups) {
  const PooledRanks ranks = pool_and_rank(groups);
  const double n = static_cast<double>(ranks.total);

  double rank_square_term = 0.0;
  for (std::size_t g = 0; g < ranks.sizes.size(); ++g) {
    rank_square_term += ranks.rank_sums[g] * ranks.rank_sums[g] /
                        static_cast<double>(ranks.sizes[g]);
  }
  const double h_raw = 12.0 / (n * (n + 1.0)) * rank_square_term - 3.0 * (n + 1.0);
  const double tie_correction = 1.0 - ranks.tie_term / (n * n * n - n);

  TestResult result;
  result.n = ranks.sizes;
  result.method = "kruskal-wallis";
  if (tie_correction <= 0.0) {
    // Every pooled value identical: no separation by construction.
    result.statistic = 0.0;
    result.p_value = 1.0;
    return result;
  }
  result.statistic = std::max(0.0, h_raw / tie_correction);
  result.p_value =
      chi_square_sf(result.statistic, static_cast<int>(groups.size()) - 1);
  return result;
}

DunnResult dunn_test(const std::vector<Sample>& groups, Adjustment adjustment) {
  const PooledRanks ranks = pool_and_rank(groups);
  const double n = static_cast<double>(ranks.total);
  const std::size_t k = groups.size();
  const double variance_base =
      n * (n + 1.0) / 12.0 - ranks.tie_term / (12.0 * (n - 1.0));

  DunnResult result;
  result.group_count = k;
  result.adjustment = to_string(adjustment);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      DunnPair pair;
      pair.i = i;
      pair.j = j;
      const double mean_i = ranks.rank_sums[i] / static_cast<double>(ranks.sizes[i]);
      const double mean_j = ranks.rank_sums[j] / static_cast<double>(ranks.sizes[j]);
      const double se2 = variance_base * (1.0 / static_cast<double>(ranks.sizes[i]) +
                                          1.0 / static_cast<double>(ranks.sizes[j]));
      if (se2 > 0.0) {
        pair.z = (mean_i - mean_j) / std::sqrt(se2);
        pair.p_raw = 2.0 * (1.0 - normal_cdf(std::abs(pair.z)));
      } else {
        // Degenerate pooled sample (all values equal).
        pair.z = 0.0;
        pair.p_raw = 1.0;
      }
      result.pairs.push_back(pair);
    }
  }

  const double m = static_cast<double>(result.pairs.size());
  switch (adjustment) {
    case Adjustment::none:
      for (DunnPair& p : result.pairs) {
        p.p_adjusted = p.p_raw;
      }
      break;
    case Adjustment::bonferroni:
      for (DunnPair& p : result.pairs) {
        p.p_adjusted = std::min(1.0, m * p.p_raw);
      }
      break;
    case Adjustment::holm: {
      std::vector<std::size_t> order(result.pairs.size());
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return result.pairs[a].p_raw < result.pairs[b].p_raw;
      });
      double running = 0.0;
      for (std::size_t rank = 0; rank < order.size(); ++rank) {
        const double multiplier = m - static_cast<double>(rank);
        const double adjusted =
            std::min(1.0, multiplier * result.pairs[order[rank]].p_raw);
        running = std::max(running, adjusted);
        result.pairs[order[rank]].p_adjusted = running;
      }
      break;
    }
  }
  return result;
}

std::vector<double> group_medians(const std::vector<Sample>& groups) {
  std::vector<double> medians;
  medians.reserve(groups.size());
  for (const Sample& group : groups) {
    if (group.values.empty()) {
      throw std::invalid_argument("group_medians: group '" + group.name + "' is empty");
    }
    std::vector<double> sorted = group.values;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    if (n % 2 == 1) {
      medians.push_back(sorted[n / 2]);
    } else {
      medians.push_back(0.5 * (sorted[n / 2 - 1] + sorted[n / 2]));
    }
  }
  return medians;
}

std::vector<HistogramBin> histogram(const Sample& sample, int bins) {
  if (bins < 1) {
    throw std::invalid_argument("histogram: bins must be >= 1");
  }
  if (sample.values.empty()) {
    throw std::invalid_argument("histogram: empty sample");
  }
  require_finite(sample);
  const auto [lo_it, hi_it] = std::minmax_element(sample.values.begin(), sample.values.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  const double width = (hi - lo) / bins;

  std::vector<HistogramBin> out(static_cast<std::size_t>(bins));
  for (int b = 0; b < bins; ++b) {
    out[static_cast<std::size_t>(b)].lo = lo + width * b;
    out[static_cast<std::size_t>(b)].hi = b + 1 == bins ? hi : lo + width * (b + 1);
  }
  for (double v : sample.values) {
    int idx = width > 0.0 ? static_cast<int>((v - lo) / width) : 0;
    idx = std::clamp(idx, 0, bins - 1);
    ++out[static_cast<std::size_t>(idx)].count;
  }
  return out;
}

}  // namespace sketchlab
