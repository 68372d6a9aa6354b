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

#include "qmetro/rng.hpp"

#include <cmath>

#include "qmetro/errors.hpp"

namespace qmetro {

namespace {

// FNV-1a
std::uint64_t hash_label(std::string_view label) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t derive_key(std::uint64_t parent, std::string_view label, std::uint64_t index) {
  return splitmix64(splitmix64(parent ^ hash_label(label)) + splitmix64(index + 1));
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RngStream::RngStream(std::uint64_t master_seed)
    : key_(master_seed), engine_(splitmix64(master_seed)) {}

RngStream RngStream::substream(std::uint64_t master_seed, std::string_view label,
                               std::uint64_t index) {
  return RngStream(derive_key(master_seed, label, index));
}

RngStream RngStream::child(std::string_view label, std::uint64_t index) const {
  return RngStream(derive_key(key_, label, index));
}

double RngStream::uniform(double lo, double hi) {
  // 53 random mantissa bits in [0, 1).
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

double RngStream::normal() { return normal_(engine_); }

std::complex<double> RngStream::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re / std::sqrt(2.0), im / std::sqrt(2.0)};
}

std::size_t RngStream::index(std::size_t n) {
  if (n == 0) throw InvalidInput("RngStream::index: empty range");
  return static_cast<std::size_t>(engine_() % n);
}

}  // namespace qmetro
