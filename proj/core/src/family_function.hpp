#pragma once

#include <cmath>

#include "ptlocus/airy.hpp"
#include "ptlocus/contour.hpp"

namespace ptlocus::detail {

// w, w', w'' = z w for a solution family, naturally scaled.
inline contour::AnalyticFunction family_function(airy::SolutionFamily family) {
  return [family](Complex z) {
    const airy::AiryEval e = airy::eval_airy(z, family, airy::Scaling::Natural);
    const double growth = 1.0 + std::sqrt(std::abs(z));
    return contour::Sample{e.value, e.derivative, z * e.value, e.scale, e.scale * growth};
  };
}

// w', w'' = z w, w''' = w + z w'.
inline contour::AnalyticFunction family_derivative_function(airy::SolutionFamily family) {
  return [family](Complex z) {
    const airy::AiryEval e = airy::eval_airy(z, family, airy::Scaling::Natural);
    const double growth = 1.0 + std::sqrt(std::abs(z));
    return contour::Sample{e.derivative, z * e.value, e.value + z * e.derivative, e.scale * growth,
                           e.scale * growth * growth};
  };
}

}  // namespace ptlocus::detail
