#pragma once

#include <functional>

namespace polboost {

struct ScalarMaximum {
  double x{0.0};
  double value{0.0};
  int evaluations{0};
};

/// Golden-section search for the maximum of a unimodal f on [a, b]; stops
/// once the bracket is narrower than `tolerance`.
ScalarMaximum golden_section_maximize(const std::function<double(double)> &f, double a, double b,
                                      double tolerance);

} // namespace polboost
