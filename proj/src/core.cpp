#include "gp/core.hpp"

#include <algorithm>
#include <cmath>

namespace gp {

double iou(const TimeSpan& a, const TimeSpan& b) {
  const double inter =
      std::max(0.0, std::min(a.end_s, b.end_s) - std::max(a.start_s, b.start_s));
  const double uni = a.length() + b.length() - inter;
  if (uni <= 0.0) {
    // Both spans are points. Identical points overlap fully.
    return a == b ? 1.0 : 0.0;
  }
  return inter / uni;
}

double start_distance(const TimeSpan& pred, const TimeSpan& gt) {
  return std::abs(pred.start_s - gt.start_s);
}

}  // namespace gp
