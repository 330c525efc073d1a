#include "polboost/optimize.hpp"

#include "polboost/errors.hpp"

#include <cmath>

namespace polboost {

ScalarMaximum golden_section_maximize(const std::function<double(double)> &f, double a, double b,
                                      double tolerance) {
  if (!(b > a))
    throw DomainError("golden-section bracket must satisfy a < b");
  if (!(tolerance > 0.0))
    throw DomainError("golden-section tolerance must be positive");

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  int evaluations = 2;
  while (b - a > tolerance) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    ++evaluations;
  }
  return fc >= fd ? ScalarMaximum{c, fc, evaluations} : ScalarMaximum{d, fd, evaluations};
}

} // namespace polboost
