#ifndef MYCO_STATS_HPP
#define MYCO_STATS_HPP

#include <cstddef>
#include <functional>
#include <vector>

namespace myco {

double mean(const std::vector<double>& x);
double variance(const std::vector<double>& x);  // unbiased
double std_error(const std::vector<double>& x);
double pearson_correlation(const std::vector<double>& x, const std::vector<double>& y);

// Least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

// Two-sample Kolmogorov-Smirnov statistic sup |F1 - F2| (inputs get sorted).
double ks_statistic(std::vector<double> a, std::vector<double> b);
// Critical value c(alpha) sqrt((n+m)/(n m)) for the two-sample test.
double ks_critical(double alpha, std::size_t n, std::size_t m);

// Chi-squared upper quantile via the Wilson-Hilferty approximation.
double chi2_quantile(double p, double dof);
double normal_quantile(double p);

// Halton low-discrepancy sequence in [0,1), bases 2,3,5,7,... per dimension.
class Halton {
 public:
  explicit Halton(int dim);
  std::vector<double> next();

 private:
  std::vector<int> bases_;
  unsigned long long index_ = 0;
};

// Adaptive Simpson quadrature to the given absolute tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth = 30);

}  // namespace myco

#endif
