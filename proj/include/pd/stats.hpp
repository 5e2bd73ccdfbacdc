#ifndef PD_STATS_HPP
#define PD_STATS_HPP

#include "pd/bytes.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pd {

// Statistical distinguishers. Every function returns a p-value in [0, 1];
// small values reject the null hypothesis named in the comment.

// Null: bits are i.i.d. fair coin flips (NIST frequency test over the bits
// of `data`).
double monobit_p(ByteView data);

// Null: bits are i.i.d. fair coin flips. NIST serial test over overlapping
// m-bit windows; returns the first of the two serial p-values.
double serial_p(ByteView data, unsigned m = 3);

// Null: `counts[i]` are multinomial draws with the given expected values.
double chi2_gof_p(const std::vector<std::uint64_t>& counts,
                  const std::vector<double>& expected);

// Null: the samples behind the two histograms come from one distribution.
// Histograms must have equal bin counts; empty-in-both bins are dropped.
double chi2_two_sample_p(const std::vector<std::uint64_t>& a,
                         const std::vector<std::uint64_t>& b);

// Null: values are uniform over [0, num_bins).
double chi2_uniform_p(const std::vector<std::uint64_t>& values, std::uint64_t num_bins);

// Histogram of byte values (256 bins).
std::vector<std::uint64_t> byte_histogram(ByteView data);

struct BatteryResult {
    double min_p = 1.0;
    std::string worst_test;
    bool pass(double alpha) const { return min_p > alpha; }
};

// Monobit + serial + byte-frequency battery over one byte stream.
BatteryResult randomness_battery(ByteView data);

// Half-width of the normal-approximation 95% confidence interval for a
// binomial proportion.
double binomial_ci95_halfwidth(std::uint64_t successes, std::uint64_t trials);

} // namespace pd

#endif
