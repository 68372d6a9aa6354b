// Copyright 2026 The qmetro Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QMETRO_GOLDEN_SECTION_HPP
#define QMETRO_GOLDEN_SECTION_HPP

#include <cmath>
#include <stdexcept>

namespace qmetro {

struct ScalarMinimum {
  double x = 0.0;
  double fx = 0.0;
  int iterations = 0;
};

// Golden-section search for a unimodal f on [lo, hi]. Shrinks the bracket
// until its width is at most x_tol and returns its midpoint.
template <typename F>
ScalarMinimum golden_section_minimize(F&& f, double lo, double hi, double x_tol,
                                      int max_iterations = 1000) {
  if (!(lo <= hi) || !(x_tol > 0.0)) {
    throw std::invalid_argument("golden_section_minimize: invalid bracket or tolerance");
  }
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  int it = 0;
  while (b - a > x_tol && it < max_iterations) {
    if (fc < fd) {
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
    ++it;
  }
  const double x = 0.5 * (a + b);
  return {x, f(x), it};
}

}  // namespace qmetro

#endif  // QMETRO_GOLDEN_SECTION_HPP
