/*
 * Copyright 2026 The polyent Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef POLYENT_RNG_HPP_
#define POLYENT_RNG_HPP_

#include <complex>
#include <cstdint>
#include <random>

namespace polyent {

// Seedable generator with a fully specified output sequence, so that sweeps
// are bit-reproducible across platforms and standard libraries:
//   * bits: std::mt19937_64 (its sequence is fixed by the C++ standard);
//   * uniform doubles: top 53 bits scaled by 2^-53, in [0, 1);
//   * normals: Box-Muller on two uniforms, both outputs used in order.
// Independent streams come from derive_seed(), a SplitMix64 mix of the parent
// seed and the stream index.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bits() { return engine_(); }
  double uniform();
  double normal();
  // Standard complex normal: real and imaginary parts N(0, 1/2).
  std::complex<double> complex_normal();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace polyent

#endif  // POLYENT_RNG_HPP_
