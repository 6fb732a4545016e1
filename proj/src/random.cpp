#include "hfspan/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <stdexcept>
#include <utility>

namespace hfspan {

double Rng::uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::uint64_t Rng::index(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("index range must be non-empty");
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

double Rng::normal() {
  double u1;
  do {
    u1 = uniform01();
  } while (u1 == 0.0);
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Distribution parse_distribution(std::string_view name) {
  if (name == "uniform-square" || name == "uniform") return Distribution::uniform_square;
  if (name == "clustered") return Distribution::clustered;
  if (name == "grid") return Distribution::grid;
  throw std::invalid_argument("unknown distribution '" + std::string(name) +
                              "' (expected uniform-square, clustered or grid)");
}

std::string to_string(Distribution d) {
  switch (d) {
    case Distribution::uniform_square: return "uniform-square";
    case Distribution::clustered: return "clustered";
    case Distribution::grid: return "grid";
  }
  return "unknown";
}

std::vector<Point> generate_points(Distribution d, std::size_t n, std::uint64_t seed) {
  std::vector<Point> out;
  out.reserve(n);
  if (d == Distribution::grid) {
    std::size_t side = 1;
    while (side * side < n) ++side;
    for (std::size_t i = 0; i < n; ++i) {
      out.emplace_back(static_cast<double>(i % side) / static_cast<double>(side),
                       static_cast<double>(i / side) / static_cast<double>(side));
    }
    return out;
  }

  Rng rng(seed);
  std::set<std::pair<double, double>> seen;
  auto accept = [&](double x, double y) {
    if (seen.emplace(x, y).second) out.emplace_back(x, y);
  };

  if (d == Distribution::uniform_square) {
    while (out.size() < n) {
      const double x = rng.uniform01();
      const double y = rng.uniform01();
      accept(x, y);
    }
    return out;
  }

  const std::size_t clusters =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(n)) / 2.0)));
  constexpr double kSpread = 0.03;
  std::vector<Point> centres;
  for (std::size_t c = 0; c < clusters; ++c) {
    const double x = 0.1 + 0.8 * rng.uniform01();
    const double y = 0.1 + 0.8 * rng.uniform01();
    centres.emplace_back(x, y);
  }
  while (out.size() < n) {
    const Point& c = centres[out.size() % clusters];
    const double x = c.x + kSpread * rng.normal();
    const double y = c.y + kSpread * rng.normal();
    accept(x, y);
  }
  return out;
}

}  // namespace hfspan
