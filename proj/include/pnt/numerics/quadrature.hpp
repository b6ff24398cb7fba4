#pragma once

#include <cstddef>
#include <functional>
#include <utility>

#include "pnt/numerics/directed.hpp"

namespace pnt {

// What the caller knows about the integrand on [a, b]. Panel enclosures are
// only as valid as this claim.
enum class Shape {
  monotone,  // range on a panel is spanned by its endpoint values
  convex,    // midpoint rule <= integral <= trapezoid rule
  concave,   // trapezoid rule <= integral <= midpoint rule
  custom,    // caller supplies `range`
};

struct Integrand {
  std::function<Real(Real)> f;
  Shape shape = Shape::monotone;
  // Enclosure of f on [lo, hi]; used only when shape == custom.
  std::function<std::pair<Real, Real>(Real, Real)> range;
};

struct QuadResult {
  DirectedValue enclosure;
  Real width = 0;
  bool converged = false;
  std::size_t panels = 0;

  Real lower() const { return enclosure.lower().to_real(); }
  Real upper() const { return enclosure.upper().to_real(); }
  // Throws Error naming the achieved width when tol was not reached.
  const QuadResult& require_converged() const;
};

// Enclosure of int_a^b f with width <= tol, built from per-panel bounds and
// refined by bisecting panels wider than their share of tol. When the panel
// budget runs out the result reports converged == false and the width
// actually achieved.
QuadResult adaptive_quad(const Integrand& f, Real a, Real b, Real tol,
                         std::size_t max_panels = std::size_t{1} << 22);

}  // namespace pnt
