#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace wlab {

// Comparison slack used throughout: absolute 1e-9 scaled by max(1, |values|).
inline constexpr double kSlack = 1e-9;

inline double scale_of(double a, double b) {
  return std::max({1.0, std::fabs(a), std::fabs(b)});
}

// a >= b up to scaled slack.
inline bool ge_tol(double a, double b, double eps = kSlack) {
  return a >= b - eps * scale_of(a, b);
}

inline bool close_tol(double a, double b, double eps = kSlack) {
  return std::fabs(a - b) <= eps * scale_of(a, b);
}

struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Deterministic uniform helpers over std::mt19937_64. The standard
// distributions are implementation-defined; these are pinned so committed
// seeds reproduce byte-identical reports.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

inline std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n) {
  // n is tiny everywhere this is used; modulo bias is negligible.
  return n == 0 ? 0 : rng() % n;
}

template <class T>
void shuffle_vec(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[uniform_index(rng, i)]);
}

// Shortest round-trippable decimal form, used for byte-stable CSV/JSON.
std::string format_double(double x);

}  // namespace wlab
