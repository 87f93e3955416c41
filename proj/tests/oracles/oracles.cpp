#include "oracles.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>

namespace oracles {

namespace {

std::vector<double> avg_ranks_of_abs(const std::vector<double>& v) {
    std::vector<double> ranks(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        double less = 0, equal = 0;
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (std::fabs(v[j]) < std::fabs(v[i])) less += 1;
            if (std::fabs(v[j]) == std::fabs(v[i])) equal += 1;
        }
        ranks[i] = less + (equal + 1) / 2;
    }
    return ranks;
}

std::vector<double> nonzero(const std::vector<double>& diffs) {
    std::vector<double> out;
    for (double d : diffs) {
        if (d != 0) out.push_back(d);
    }
    return out;
}

}  // namespace

double wilcoxon_w_plus(const std::vector<double>& diffs) {
    auto v = nonzero(diffs);
    auto ranks = avg_ranks_of_abs(v);
    double w = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] > 0) w += ranks[i];
    }
    return w;
}

double wilcoxon_exact_p(const std::vector<double>& diffs) {
    auto v = nonzero(diffs);
    auto ranks = avg_ranks_of_abs(v);
    const double observed = wilcoxon_w_plus(diffs);
    double hits = 0, total = 0;
    std::function<void(std::size_t, double)> rec = [&](std::size_t i, double w) {
        if (i == ranks.size()) {
            total += 1;
            if (w >= observed - 1e-9) hits += 1;
            return;
        }
        rec(i + 1, w);
        rec(i + 1, w + ranks[i]);
    };
    rec(0, 0.0);
    return hits / total;
}

long long cliffs_numerator(const std::vector<double>& x, const std::vector<double>& y) {
    long long s = 0;
    for (double a : x) {
        for (double b : y) s += (a > b) - (a < b);
    }
    return s;
}

std::vector<double> symmetric_eigenvalues(const std::vector<double>& a, int n) {
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m(i, j) = a[static_cast<std::size_t>(i * n + j)];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
    std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    std::sort(out.rbegin(), out.rend());
    return out;
}

std::vector<double> covariance_eigenvalues(const std::vector<double>& x, int n, int d) {
    Eigen::MatrixXd m(n, d);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < d; ++j) m(i, j) = x[static_cast<std::size_t>(i * d + j)];
    }
    Eigen::MatrixXd centered = m.rowwise() - m.colwise().mean();
    Eigen::MatrixXd cov = centered.transpose() * centered / double(n - 1);
    std::vector<double> flat(cov.data(), cov.data() + d * d);
    return symmetric_eigenvalues(flat, d);
}

double incomplete_beta_series(double a, double b, double x) {
    // I_x(a,b) = x^a (1-x)^b / (a B(a,b)) * sum_n B(a+1,n+1)/B(a+b,n+1) x^n
    const double log_front = a * std::log(x) + b * std::log1p(-x) -
                             (std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b)) - std::log(a);
    double term = 1, sum = 1;
    for (int n = 0; n < 100000; ++n) {
        term *= (a + b + n) / (a + 1 + n) * x;
        sum += term;
        if (term < 1e-17 * sum) break;
    }
    return std::exp(log_front) * sum;
}

}  // namespace oracles
