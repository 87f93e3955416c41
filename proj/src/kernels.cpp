#include "denominal/kernels.hpp"

#include <algorithm>
#include <cmath>

#include "denominal/error.hpp"

namespace denominal::kernels {

namespace {

std::vector<double> centered(std::span<const double> x, std::size_t n, std::size_t d, std::span<const double> mean) {
    std::vector<double> c(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n * d));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < d; ++j) c[i * d + j] -= mean[j];
    }
    return c;
}

std::vector<double> row_norms(std::span<const double> x, std::size_t n, std::size_t d) {
    std::vector<double> norms(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0;
        for (std::size_t k = 0; k < d; ++k) s += x[i * d + k] * x[i * d + k];
        norms[i] = std::sqrt(s);
        if (norms[i] == 0) throw Error(ErrorKind::ZeroVector, "row " + std::to_string(i) + " is a zero vector");
    }
    return norms;
}

double clamp_unit(double v) { return std::clamp(v, -1.0, 1.0); }

void check_enumeration_size(std::size_t n) {
    if (n > 40) throw Error(ErrorKind::InvalidConfig, "sign enumeration limited to 40 weights");
}

}  // namespace

namespace serial {

std::vector<double> covariance(std::span<const double> x, std::size_t n, std::size_t d, std::span<const double> mean) {
    const auto c = centered(x, n, d, mean);
    std::vector<double> cov(d * d);
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = a; b < d; ++b) {
            double s = 0;
            for (std::size_t i = 0; i < n; ++i) s += c[i * d + a] * c[i * d + b];
            cov[a * d + b] = cov[b * d + a] = s / static_cast<double>(n - 1);
        }
    }
    return cov;
}

std::vector<double> gram(std::span<const double> x, std::size_t n, std::size_t d, std::span<const double> mean) {
    const auto c = centered(x, n, d, mean);
    std::vector<double> g(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            double s = 0;
            for (std::size_t k = 0; k < d; ++k) s += c[i * d + k] * c[j * d + k];
            g[i * n + j] = g[j * n + i] = s / static_cast<double>(n - 1);
        }
    }
    return g;
}

std::vector<double> cosine_gram(std::span<const double> x, std::size_t n, std::size_t d) {
    const auto norms = row_norms(x, n, d);
    std::vector<double> g(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            double s = 0;
            for (std::size_t k = 0; k < d; ++k) s += x[i * d + k] * x[j * d + k];
            g[i * n + j] = g[j * n + i] = clamp_unit(s / (norms[i] * norms[j]));
        }
    }
    return g;
}

Dominance dominance_counts(std::span<const double> a, std::span<const double> b) {
    Dominance out;
    for (double x : a) {
        for (double y : b) {
            out.greater += x > y;
            out.less += x < y;
        }
    }
    return out;
}

std::uint64_t sign_enumeration_count(std::span<const std::int64_t> weights, std::int64_t threshold) {
    check_enumeration_size(weights.size());
    const std::uint64_t patterns = std::uint64_t{1} << weights.size();
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < patterns; ++mask) {
        std::int64_t sum = 0;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            if (mask >> i & 1) sum += weights[i];
        }
        count += sum >= threshold;
    }
    return count;
}

}  // namespace serial

namespace parallel {

std::vector<double> covariance(std::span<const double> x, std::size_t n, std::size_t d, std::span<const double> mean) {
    const auto c = centered(x, n, d, mean);
    std::vector<double> cov(d * d);
    const auto dd = static_cast<std::ptrdiff_t>(d);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t a = 0; a < dd; ++a) {
        for (std::size_t b = static_cast<std::size_t>(a); b < d; ++b) {
            double s = 0;
            for (std::size_t i = 0; i < n; ++i) s += c[i * d + static_cast<std::size_t>(a)] * c[i * d + b];
            cov[static_cast<std::size_t>(a) * d + b] = cov[b * d + static_cast<std::size_t>(a)] =
                s / static_cast<double>(n - 1);
        }
    }
    return cov;
}

std::vector<double> gram(std::span<const double> x, std::size_t n, std::size_t d, std::span<const double> mean) {
    const auto c = centered(x, n, d, mean);
    std::vector<double> g(n * n);
    const auto nn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t ii = 0; ii < nn; ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        for (std::size_t j = i; j < n; ++j) {
            double s = 0;
            for (std::size_t k = 0; k < d; ++k) s += c[i * d + k] * c[j * d + k];
            g[i * n + j] = g[j * n + i] = s / static_cast<double>(n - 1);
        }
    }
    return g;
}

std::vector<double> cosine_gram(std::span<const double> x, std::size_t n, std::size_t d) {
    const auto norms = row_norms(x, n, d);
    std::vector<double> g(n * n);
    const auto nn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t ii = 0; ii < nn; ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        for (std::size_t j = i; j < n; ++j) {
            double s = 0;
            for (std::size_t k = 0; k < d; ++k) s += x[i * d + k] * x[j * d + k];
            g[i * n + j] = g[j * n + i] = clamp_unit(s / (norms[i] * norms[j]));
        }
    }
    return g;
}

Dominance dominance_counts(std::span<const double> a, std::span<const double> b) {
    // Sort b once; each a_i then needs two binary searches.
    std::vector<double> sorted(b.begin(), b.end());
    std::sort(sorted.begin(), sorted.end());
    std::int64_t greater = 0, less = 0;
    const auto na = static_cast<std::ptrdiff_t>(a.size());
#pragma omp parallel for reduction(+ : greater, less)
    for (std::ptrdiff_t i = 0; i < na; ++i) {
        const double x = a[static_cast<std::size_t>(i)];
        greater += std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin();
        less += sorted.end() - std::upper_bound(sorted.begin(), sorted.end(), x);
    }
    return {greater, less};
}

std::uint64_t sign_enumeration_count(std::span<const std::int64_t> weights, std::int64_t threshold) {
    check_enumeration_size(weights.size());
    // Split the weights into a low block whose 2^L subset sums are tabulated
    // and sorted, and a high block enumerated in parallel.
    const std::size_t low = std::min<std::size_t>(weights.size(), 12);
    const std::size_t high = weights.size() - low;
    std::vector<std::int64_t> table(std::size_t{1} << low, 0);
    for (std::size_t mask = 1; mask < table.size(); ++mask) {
        const auto bit = static_cast<std::size_t>(__builtin_ctzll(mask));
        table[mask] = table[mask & (mask - 1)] + weights[bit];
    }
    std::sort(table.begin(), table.end());

    const auto prefixes = static_cast<std::int64_t>(std::uint64_t{1} << high);
    std::uint64_t count = 0;
#pragma omp parallel for reduction(+ : count) schedule(static)
    for (std::int64_t p = 0; p < prefixes; ++p) {
        std::int64_t sum = 0;
        for (std::size_t i = 0; i < high; ++i) {
            if (static_cast<std::uint64_t>(p) >> i & 1) sum += weights[low + i];
        }
        count += static_cast<std::uint64_t>(table.end() - std::lower_bound(table.begin(), table.end(), threshold - sum));
    }
    return count;
}

}  // namespace parallel

}  // namespace denominal::kernels
