#include "pd/stats.hpp"

#include "pd/errors.hpp"

#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>

namespace pd {

namespace {

inline int bit_at(ByteView data, std::size_t i) {
    return (data[i >> 3] >> (i & 7)) & 1;
}

// Upper regularized incomplete gamma Q(a, x), the chi-square tail.
double igamc(double a, double x) {
    if (x <= 0.0) return 1.0;
    return boost::math::gamma_q(a, x);
}

double chi2_tail(double stat, double dof) {
    if (dof <= 0.0) return 1.0;
    return igamc(dof / 2.0, stat / 2.0);
}

// psi-squared statistic of the NIST serial test: overlapping m-bit windows
// with wraparound.
double psi_sq(ByteView data, unsigned m) {
    if (m == 0) return 0.0;
    std::size_t n = data.size() * 8;
    std::vector<std::uint64_t> counts(std::size_t{1} << m, 0);
    std::uint32_t window = 0;
    std::uint32_t mask = (1u << m) - 1u;
    for (std::size_t i = 0; i + 1 < m; ++i) window = (window << 1) | static_cast<std::uint32_t>(bit_at(data, i));
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = (i + m - 1) % n;
        window = ((window << 1) | static_cast<std::uint32_t>(bit_at(data, j))) & mask;
        counts[window]++;
    }
    double sum = 0.0;
    for (std::uint64_t c : counts) sum += static_cast<double>(c) * static_cast<double>(c);
    return sum * static_cast<double>(std::size_t{1} << m) / static_cast<double>(n) - static_cast<double>(n);
}

} // namespace

double monobit_p(ByteView data) {
    if (data.empty()) return 1.0;
    std::size_t n = data.size() * 8;
    std::int64_t s = 0;
    for (std::uint8_t byte : data) {
        s += 2 * __builtin_popcount(byte) - 8;
    }
    double s_obs = std::abs(static_cast<double>(s)) / std::sqrt(static_cast<double>(n));
    return boost::math::erfc(s_obs / std::sqrt(2.0));
}

double serial_p(ByteView data, unsigned m) {
    if (m < 2) raise(Errc::domain, "serial test needs m >= 2");
    if (data.size() * 8 < (std::size_t{1} << (m + 2))) return 1.0;
    double d1 = psi_sq(data, m) - psi_sq(data, m - 1);
    return igamc(std::pow(2.0, static_cast<double>(m) - 2.0), d1 / 2.0);
}

double chi2_gof_p(const std::vector<std::uint64_t>& counts, const std::vector<double>& expected) {
    if (counts.size() != expected.size()) raise(Errc::precondition, "histogram sizes differ");
    double stat = 0.0;
    std::size_t used = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (expected[i] <= 0.0) continue;
        double d = static_cast<double>(counts[i]) - expected[i];
        stat += d * d / expected[i];
        ++used;
    }
    if (used < 2) return 1.0;
    return chi2_tail(stat, static_cast<double>(used - 1));
}

double chi2_two_sample_p(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    if (a.size() != b.size()) raise(Errc::precondition, "histogram sizes differ");
    double na = 0.0;
    double nb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        na += static_cast<double>(a[i]);
        nb += static_cast<double>(b[i]);
    }
    if (na == 0.0 || nb == 0.0) return 1.0;
    double stat = 0.0;
    std::size_t used = 0;
    double total = na + nb;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double row = static_cast<double>(a[i]) + static_cast<double>(b[i]);
        if (row == 0.0) continue;
        double ea = row * na / total;
        double eb = row * nb / total;
        double da = static_cast<double>(a[i]) - ea;
        double db = static_cast<double>(b[i]) - eb;
        stat += da * da / ea + db * db / eb;
        ++used;
    }
    if (used < 2) return 1.0;
    return chi2_tail(stat, static_cast<double>(used - 1));
}

double chi2_uniform_p(const std::vector<std::uint64_t>& values, std::uint64_t num_bins) {
    if (num_bins < 2) raise(Errc::domain, "need at least 2 bins");
    std::vector<std::uint64_t> counts(num_bins, 0);
    for (std::uint64_t v : values) {
        if (v >= num_bins) raise(Errc::precondition, "value outside bin range");
        counts[v]++;
    }
    std::vector<double> expected(num_bins,
                                 static_cast<double>(values.size()) / static_cast<double>(num_bins));
    return chi2_gof_p(counts, expected);
}

std::vector<std::uint64_t> byte_histogram(ByteView data) {
    std::vector<std::uint64_t> h(256, 0);
    for (std::uint8_t b : data) h[b]++;
    return h;
}

BatteryResult randomness_battery(ByteView data) {
    BatteryResult r;
    auto consider = [&](double p, const char* name) {
        if (p < r.min_p) {
            r.min_p = p;
            r.worst_test = name;
        }
    };
    consider(monobit_p(data), "monobit");
    consider(serial_p(data, 3), "serial");
    if (data.size() >= 4096) {
        auto h = byte_histogram(data);
        std::vector<double> expected(256, static_cast<double>(data.size()) / 256.0);
        consider(chi2_gof_p(h, expected), "byte-frequency");
    }
    return r;
}

double binomial_ci95_halfwidth(std::uint64_t successes, std::uint64_t trials) {
    if (trials == 0) return 0.0;
    double p = static_cast<double>(successes) / static_cast<double>(trials);
    return 1.96 * std::sqrt(std::max(p * (1.0 - p), 1e-12) / static_cast<double>(trials));
}

} // namespace pd
