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

#ifndef QMETRO_RNG_HPP
#define QMETRO_RNG_HPP

#include <complex>
#include <cstdint>
#include <random>
#include <string_view>

namespace qmetro {

/// Seedable, splittable random stream.
///
/// A stream is identified by a 64-bit key. Substreams are derived from the
/// key (never from the engine state), so the values a consumer sees depend
/// only on (master seed, purpose label, index) and not on how many numbers
/// other consumers have drawn or in which order trials were executed.
/// Streams are values: copying one forks an identical sequence.
class RngStream {
 public:
  explicit RngStream(std::uint64_t master_seed);

  static RngStream substream(std::uint64_t master_seed, std::string_view label,
                             std::uint64_t index);

  RngStream child(std::string_view label, std::uint64_t index = 0) const;

  std::uint64_t key() const { return key_; }

  double uniform(double lo, double hi);
  double normal();
  // Standard complex Gaussian: E|z|^2 = 1.
  std::complex<double> complex_normal();
  std::size_t index(std::size_t n);

 private:
  std::uint64_t key_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace qmetro

#endif  // QMETRO_RNG_HPP
