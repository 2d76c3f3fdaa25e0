#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bergman {

using Vec = std::vector<double>;
using ScalarField = std::function<double(std::span<const double>)>;

double dot(std::span<const double> a, std::span<const double> b);
double norm_sq(std::span<const double> a);
double dist_sq(std::span<const double> a, std::span<const double> b);

// Fixed-order pairwise reduction; all integral and norm accumulations go
// through this so repeated runs sum in the same order.
double pairwise_sum(std::span<const double> v);

// Least-squares slope of y against x.
double fit_slope(std::span<const double> x, std::span<const double> y);

// Slope of log(y) against log(u); u and y must be positive.
double fit_loglog_slope(std::span<const double> u, std::span<const double> y);

uint64_t splitmix64(uint64_t& state);

// FNV-1a over bytes, used for cache and output digests.
uint64_t fnv1a64(std::span<const unsigned char> bytes);
uint64_t fnv1a64_file(const std::string& path);

std::string format_g17(double v);

}  // namespace bergman
