// Copyright 2026 The epipriv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EPIPRIV_RANDOM_H_
#define EPIPRIV_RANDOM_H_

#include <cstdint>
#include <random>

namespace epipriv {

// Deterministic random stream identified by (seed, stream). The same
// (seed, stream) pair yields a bit-identical draw sequence on every
// platform; all sample conversions are done from raw 64-bit words rather
// than through std::*_distribution, whose output is implementation-defined.
//
// Independent streams for parallel or repeated work are derived from one
// base seed via substream(); streams with distinct ids are decorrelated by
// a splitmix64-style hash of (seed, stream).
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed, std::uint64_t stream = 0);

  // Next raw 64-bit word.
  std::uint64_t next_u64();

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform();

  // Uniform on [lo, hi).
  double uniform(double lo, double hi);

  // Bernoulli(p) draw; p outside [0,1] is clamped.
  bool bernoulli(double p);

  // Standard normal draw (Box-Muller; two uniforms per value).
  double normal();

  // A fresh stream derived from this source's seed and the given stream id.
  // Does not consume or depend on this source's draw position.
  RandomSource substream(std::uint64_t stream) const;

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

}  // namespace epipriv

#endif  // EPIPRIV_RANDOM_H_
