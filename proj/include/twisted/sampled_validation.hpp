#pragma once

// Cocycle checks on infinite groups by random sampling.

#include <array>
#include <concepts>
#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "twisted/torus_values.hpp"

namespace twisted {

template <typename M>
concept GroupCocycle = requires(const M& m, const typename M::element_type& a) {
  { m.identity() } -> std::convertible_to<typename M::element_type>;
  { m.multiply(a, a) } -> std::convertible_to<typename M::element_type>;
  { m.value(a, a) } -> std::convertible_to<RotationNumber>;
};

template <typename T>
struct SampledReport {
  bool ok = true;
  std::size_t checked = 0;
  std::uint64_t seed = 0;
  std::optional<std::array<T, 3>> witness;
  std::string message;
};

/// Checks sigma(a,b) + sigma(ab,c) == sigma(a,bc) + sigma(b,c) and
/// sigma(a,e) == sigma(e,a) == 0 on `count` triples drawn by `draw(rng)`.
template <GroupCocycle M, typename Draw>
SampledReport<typename M::element_type> validate_sampled(const M& sigma, Draw&& draw, std::size_t count,
                                                         std::uint64_t seed) {
  using T = typename M::element_type;
  SampledReport<T> report;
  report.seed = seed;
  std::mt19937_64 rng(seed);
  const T e = sigma.identity();
  for (std::size_t i = 0; i < count; ++i) {
    T a = draw(rng), b = draw(rng), c = draw(rng);
    ++report.checked;
    if (!sigma.value(a, e).is_zero() || !sigma.value(e, a).is_zero()) {
      report.ok = false;
      report.witness = {{a, e, e}};
      report.message = "unit condition fails";
      return report;
    }
    const RotationNumber lhs = sigma.value(a, b) + sigma.value(sigma.multiply(a, b), c);
    const RotationNumber rhs = sigma.value(a, sigma.multiply(b, c)) + sigma.value(b, c);
    if (lhs != rhs) {
      report.ok = false;
      report.witness = {{std::move(a), std::move(b), std::move(c)}};
      report.message = "cocycle identity fails";
      return report;
    }
  }
  return report;
}

/// Uniform integer vectors in [-box, box]^dim for array- or vector-like T.
template <typename T>
auto box_sampler(std::int64_t box, std::size_t dim = std::tuple_size_v<T>) {
  return [box, dim](std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> d(-box, box);
    T v{};
    if constexpr (requires { v.resize(dim); }) v.resize(dim);
    for (auto& x : v) x = d(rng);
    return v;
  };
}

}  // namespace twisted
