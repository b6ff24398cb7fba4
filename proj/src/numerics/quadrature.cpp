#include "pnt/numerics/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "pnt/error.hpp"

namespace pnt {

namespace {

struct Panel {
  Real a, b, lo, hi;
};

Panel bound_panel(const Integrand& g, Real a, Real b) {
  const Real h = b - a;
  Real lo = 0, hi = 0;
  switch (g.shape) {
    case Shape::monotone: {
      const Real fa = g.f(a), fb = g.f(b);
      lo = h * std::min(fa, fb);
      hi = h * std::max(fa, fb);
      break;
    }
    case Shape::convex:
    case Shape::concave: {
      const Real mid = h * g.f(a + h / 2);
      const Real trap = h * (g.f(a) + g.f(b)) / 2;
      lo = g.shape == Shape::convex ? mid : trap;
      hi = g.shape == Shape::convex ? trap : mid;
      break;
    }
    case Shape::custom: {
      const auto [fmin, fmax] = g.range(a, b);
      lo = h * fmin;
      hi = h * fmax;
      break;
    }
  }
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw DomainError("adaptive_quad: integrand not finite on panel");
  // Rounding in f and in the rule itself.
  const Real pad = 8 * kRealEpsilon * std::max(std::fabs(lo), std::fabs(hi));
  return {a, b, lo - pad, hi + pad};
}

}  // namespace

const QuadResult& QuadResult::require_converged() const {
  if (!converged) {
    throw Error("adaptive_quad: tolerance not reached; achieved width " + std::to_string(static_cast<double>(width)) +
                " with " + std::to_string(panels) + " panels");
  }
  return *this;
}

QuadResult adaptive_quad(const Integrand& g, Real a, Real b, Real tol, std::size_t max_panels) {
  if (!(a < b)) throw DomainError("adaptive_quad: need a < b");
  if (!(tol > 0)) throw DomainError("adaptive_quad: tolerance must be positive");
  if (!g.f && g.shape != Shape::custom) throw DomainError("adaptive_quad: no integrand");
  if (g.shape == Shape::custom && !g.range) throw DomainError("adaptive_quad: custom shape needs a range callback");

  std::vector<Panel> panels{bound_panel(g, a, b)};
  auto total_width = [&] {
    Real w = 0;
    for (const auto& p : panels) w += p.hi - p.lo;
    return w;
  };

  Real width = total_width();
  while (width > tol && panels.size() < max_panels) {
    const Real share = tol / static_cast<Real>(panels.size());
    std::vector<Panel> next;
    next.reserve(panels.size() * 2);
    bool split = false;
    for (const auto& p : panels) {
      if (p.hi - p.lo > share && next.size() + 2 <= max_panels) {
        const Real m = p.a + (p.b - p.a) / 2;
        if (m > p.a && m < p.b) {
          next.push_back(bound_panel(g, p.a, m));
          next.push_back(bound_panel(g, m, p.b));
          split = true;
          continue;
        }
      }
      next.push_back(p);
    }
    panels = std::move(next);
    width = total_width();
    if (!split) break;
  }

  // Ascending-order summation with an absolute bound on its rounding error.
  Real lo = 0, hi = 0, mag = 0;
  for (const auto& p : panels) {
    lo += p.lo;
    hi += p.hi;
    mag += std::max(std::fabs(p.lo), std::fabs(p.hi));
  }
  const Real slack = 2 * static_cast<Real>(panels.size() + 2) * kRealEpsilon * mag;
  lo -= slack;
  hi += slack;

  QuadResult r;
  r.enclosure = DirectedValue(LogScalar::from_real(lo), LogScalar::from_real(hi));
  r.width = hi - lo;
  r.converged = r.width <= tol;
  r.panels = panels.size();
  return r;
}

}  // namespace pnt
