// Tensor-product quadrature over axis-aligned boxes.
//
// Samples are weighted and stored in a fixed (x-major, then y, then z) order
// and reduced pairwise, so results are bit-reproducible for identical inputs.
#pragma once

#include "dirac_magneto/errors.hpp"
#include "dirac_magneto/spinor_core.hpp"

#include <Eigen/Dense>
#include <Eigen/StdVector>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace dmag {

enum class QuadratureKind { midpoint, simpson };

struct QuadratureRule {
  QuadratureKind kind = QuadratureKind::simpson;
  int refinement_levels = 2;
};

/// For Simpson, samples_per_axis counts nodes (odd, >= 3); for midpoint it
/// counts cells.
template <typename Real>
struct BoxRegion {
  Vector3<Real> origin = Vector3<Real>::Zero();
  Vector3<Real> side_lengths = Vector3<Real>::Ones();
  std::array<int, 3> samples_per_axis{3, 3, 3};

  static BoxRegion cube(const Vector3<Real>& origin, Real side, int samples) {
    return BoxRegion{origin, Vector3<Real>::Constant(side), {samples, samples, samples}};
  }

  Real volume() const { return side_lengths.prod(); }

  Vector3<Real> center() const { return origin + side_lengths / Real(2); }

  /// Closed-box membership.
  bool contains(const Vector3<Real>& x) const {
    for (int a = 0; a < 3; ++a) {
      if (x(a) < origin(a) || x(a) > origin(a) + side_lengths(a)) return false;
    }
    return true;
  }

  void validate(QuadratureKind kind) const {
    for (int a = 0; a < 3; ++a) {
      if (!(side_lengths(a) > Real(0)) || !std::isfinite(static_cast<double>(side_lengths(a)))) {
        throw std::invalid_argument("box region: side lengths must be positive");
      }
      if (!std::isfinite(static_cast<double>(origin(a)))) throw std::invalid_argument("box region: origin must be finite");
      const int n = samples_per_axis[static_cast<std::size_t>(a)];
      if (n < 3) throw std::invalid_argument("box region: at least 3 samples per axis are required");
      if (kind == QuadratureKind::simpson && n % 2 == 0) {
        throw std::invalid_argument("box region: Simpson rule requires an odd sample count per axis (got " +
                                    std::to_string(n) + ")");
      }
    }
  }
};

template <typename Value, typename Real = double>
struct IntegralResult {
  Value value;
  Real error_estimate{0};
  int levels_used{1};
};

template <typename Real>
struct ConvergenceRow {
  Real spacing;                 // x-axis node spacing
  Real value;
  std::optional<Real> delta;    // |value - value of previous (coarser) row|
  std::optional<Real> ratio;    // previous delta / delta
};

namespace detail {

template <typename T>
using aligned_vector = std::vector<T, Eigen::aligned_allocator<T>>;

template <typename Value>
bool all_finite(const Value& v) {
  if constexpr (std::is_arithmetic_v<Value>) {
    return std::isfinite(v);
  } else {
    return v.allFinite();
  }
}

template <typename Value, typename Real>
Real magnitude(const Value& v) {
  if constexpr (std::is_arithmetic_v<Value>) {
    return std::abs(v);
  } else {
    return v.template lpNorm<Eigen::Infinity>();
  }
}

template <typename Value>
Value pairwise_sum(std::span<const Value> terms) {
  if (terms.size() <= 8) {
    Value acc = terms[0];
    for (std::size_t i = 1; i < terms.size(); ++i) acc = acc + terms[i];
    return acc;
  }
  const std::size_t half = terms.size() / 2;
  return pairwise_sum<Value>(terms.first(half)) + pairwise_sum<Value>(terms.subspan(half));
}

template <typename Real>
struct AxisNodes {
  std::vector<Real> x;
  std::vector<Real> w;  // small integers; their sum is the exact total weight
  Real total() const { return std::accumulate(w.begin(), w.end(), Real(0)); }
};

template <typename Real>
Real axis_spacing(QuadratureKind kind, Real length, int n) {
  return kind == QuadratureKind::simpson ? length / Real(n - 1) : length / Real(n);
}

template <typename Real>
AxisNodes<Real> axis_nodes(QuadratureKind kind, Real origin, Real length, int n) {
  AxisNodes<Real> nodes;
  nodes.x.resize(static_cast<std::size_t>(n));
  nodes.w.resize(static_cast<std::size_t>(n));
  const Real h = axis_spacing(kind, length, n);
  for (int i = 0; i < n; ++i) {
    const auto u = static_cast<std::size_t>(i);
    if (kind == QuadratureKind::simpson) {
      nodes.x[u] = origin + Real(i) * h;
      nodes.w[u] = (i == 0 || i == n - 1) ? Real(1) : (i % 2 == 1 ? Real(4) : Real(2));
    } else {
      nodes.x[u] = origin + (Real(i) + Real(0.5)) * h;
      nodes.w[u] = Real(1);
    }
  }
  return nodes;
}

/// Sample count after halving the spacing of an `n`-sample axis once.
inline int refined(QuadratureKind kind, int n) { return kind == QuadratureKind::simpson ? 2 * (n - 1) + 1 : 2 * n; }

inline constexpr int kMaxSamplesPerAxis = 1 << 12;

inline double richardson_divisor(QuadratureKind kind) {
  return kind == QuadratureKind::simpson ? 15.0 : 3.0;
}

template <typename Real, typename Sampler>
auto single_level(Sampler& f, const BoxRegion<Real>& region, QuadratureKind kind) {
  using Value = std::decay_t<std::invoke_result_t<Sampler&, const Vector3<Real>&>>;
  const auto nx = axis_nodes(kind, region.origin(0), region.side_lengths(0), region.samples_per_axis[0]);
  const auto ny = axis_nodes(kind, region.origin(1), region.side_lengths(1), region.samples_per_axis[1]);
  const auto nz = axis_nodes(kind, region.origin(2), region.side_lengths(2), region.samples_per_axis[2]);

  aligned_vector<Value> terms;
  terms.reserve(nx.x.size() * ny.x.size() * nz.x.size());
  Vector3<Real> p;
  for (std::size_t i = 0; i < nx.x.size(); ++i) {
    for (std::size_t j = 0; j < ny.x.size(); ++j) {
      for (std::size_t k = 0; k < nz.x.size(); ++k) {
        p << nx.x[i], ny.x[j], nz.x[k];
        const Value sample = f(static_cast<const Vector3<Real>&>(p));
        if (!all_finite(sample)) {
          throw IntegrationError({static_cast<double>(p(0)), static_cast<double>(p(1)), static_cast<double>(p(2))});
        }
        const Real w = nx.w[i] * ny.w[j] * nz.w[k];
        terms.push_back(Value(w * sample));
      }
    }
  }
  const Value sum = pairwise_sum<Value>(std::span<const Value>(terms.data(), terms.size()));
  const Real total = nx.total() * ny.total() * nz.total();
  return Value(region.volume() * Value(sum / total));
}

}  // namespace detail

/// Grid hierarchy for `rule`, finest first. The region's own sample counts
/// are the coarsest level and every further level halves the spacing.
/// Throws std::invalid_argument when the region is not admissible or the
/// finest grid would exceed kMaxSamplesPerAxis on some axis.
template <typename Real>
std::vector<BoxRegion<Real>> level_grids(const BoxRegion<Real>& region, const QuadratureRule& rule) {
  region.validate(rule.kind);
  if (rule.refinement_levels < 1) throw std::invalid_argument("quadrature rule: refinement_levels must be >= 1");
  std::vector<BoxRegion<Real>> grids{region};
  for (int level = 1; level < rule.refinement_levels; ++level) {
    BoxRegion<Real> g = grids.back();
    for (auto& n : g.samples_per_axis) {
      if (n > detail::kMaxSamplesPerAxis / 2) {
        throw std::invalid_argument("quadrature rule: " + std::to_string(rule.refinement_levels) +
                                    " levels exceed " + std::to_string(detail::kMaxSamplesPerAxis) +
                                    " samples per axis");
      }
      n = detail::refined(rule.kind, n);
    }
    grids.push_back(g);
  }
  std::reverse(grids.begin(), grids.end());
  return grids;
}

/// Integrates `f` over `region` on the finest grid of the hierarchy. The
/// error estimate is the Richardson difference of the two finest grids
/// (/15 Simpson, /3 midpoint) and is zero for a single level.
template <typename Real, typename Sampler>
auto integrate(Sampler&& f, const BoxRegion<Real>& region, const QuadratureRule& rule) {
  using Value = std::decay_t<std::invoke_result_t<Sampler&, const Vector3<Real>&>>;
  const auto grids = level_grids(region, rule);

  IntegralResult<Value, Real> result{detail::single_level(f, grids[0], rule.kind), Real(0), rule.refinement_levels};
  if (grids.size() >= 2) {
    const Value coarse = detail::single_level(f, grids[1], rule.kind);
    const Value diff = result.value - coarse;
    result.error_estimate = detail::magnitude<Value, Real>(diff) / Real(detail::richardson_divisor(rule.kind));
  }
  return result;
}

template <typename Real, typename Sampler>
IntegralResult<Real, Real> integrate_scalar(Sampler&& f, const BoxRegion<Real>& region, const QuadratureRule& rule) {
  return integrate(std::forward<Sampler>(f), region, rule);
}

template <typename Real, typename Sampler>
IntegralResult<Vector3<Real>, Real> integrate_vector(Sampler&& f, const BoxRegion<Real>& region,
                                                     const QuadratureRule& rule) {
  return integrate(std::forward<Sampler>(f), region, rule);
}

/// One row per level, starting from the region's own sample counts and
/// doubling the number of intervals each step.
template <typename Real, typename Sampler>
std::vector<ConvergenceRow<Real>> convergence_study(Sampler&& f, const BoxRegion<Real>& region,
                                                    QuadratureKind kind, int levels) {
  if (levels < 2) throw std::invalid_argument("convergence study: at least 2 levels are required");
  region.validate(kind);
  std::vector<ConvergenceRow<Real>> rows;
  BoxRegion<Real> g = region;
  for (int level = 0; level < levels; ++level) {
    const Real value = detail::single_level(f, g, kind);
    ConvergenceRow<Real> row{detail::axis_spacing(kind, g.side_lengths(0), g.samples_per_axis[0]), value,
                             std::nullopt, std::nullopt};
    if (!rows.empty()) {
      row.delta = std::abs(value - rows.back().value);
      if (rows.back().delta && *row.delta > Real(0)) row.ratio = *rows.back().delta / *row.delta;
    }
    rows.push_back(row);
    for (auto& n : g.samples_per_axis) n = detail::refined(kind, n);
  }
  return rows;
}

}  // namespace dmag
