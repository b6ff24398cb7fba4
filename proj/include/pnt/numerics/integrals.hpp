#pragma once

#include <limits>
#include <vector>

#include "pnt/numerics/directed.hpp"

namespace pnt {

enum class Direction { lower, upper };

// One piece of [e^a, e^b] in log coordinates. Head panels (log t <= k + 1)
// are bounded by length times the extreme integrand; the rest use the
// integration-by-parts bound.
struct LogPanel {
  Real lo_log;
  Real hi_log;
  bool by_parts;
};

struct PanelOptions {
  // Target ratio (upper - lower) / lower per by-parts panel.
  Real rel_slack = 1e-4L;
  // Cap on panel width in log coordinates.
  Real max_width = std::numeric_limits<Real>::infinity();
};

// Partition of [e^a_log, e^b_log] used for bounding int dt / log^k t.
std::vector<LogPanel> inv_log_power_panels(Real a_log, Real b_log, int k,
                                           const PanelOptions& opts = {});

// Enclosure of int_{e^lo}^{e^hi} dt / log^k t over a single panel.
//
// By parts, I = [t / log^k t] + k * int dt / log^(k+1) t, and on the panel
// the second integral lies between I / hi and I / lo. Hence
//   dF / (1 - k/hi) <= I <= dF / (1 - k/lo),   dF = F(e^hi) - F(e^lo).
DirectedValue inv_log_power_panel(const LogPanel& panel, int k);

// Enclosure of int_{e^a_log}^{e^b_log} dt / log^k t. Requires
// e^a_log >= 2 and a_log <= b_log.
DirectedValue inv_log_power_enclosure(Real a_log, Real b_log, int k,
                                      const PanelOptions& opts = {});

// One-sided rigorous bound of the same integral.
LogScalar bound_inv_log_power_integral(Real a_log, Real b_log, int k, Direction direction);

}  // namespace pnt
