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

#ifndef POLYENT_KERNELS_HPP_
#define POLYENT_KERNELS_HPP_

#include <complex>
#include <cstddef>
#include <string_view>

namespace polyent {

using cplx = std::complex<double>;

namespace kernels {

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);

// Inner loops shared by the dense linear algebra. All vectors are contiguous
// arrays of interleaved (re, im) doubles, i.e. std::complex<double>.
struct KernelTable {
  Isa isa;
  // sum_i conj(x_i) * y_i
  cplx (*dotc)(const cplx* x, const cplx* y, std::size_t n);
  // sum_i x_i * y_i
  cplx (*dotu)(const cplx* x, const cplx* y, std::size_t n);
  // y += a * x
  void (*axpy)(cplx a, const cplx* x, cplx* y, std::size_t n);
  // (x, y) <- (m00 x + m01 y, m10 x + m11 y), elementwise
  void (*mix_rows)(cplx* x, cplx* y, std::size_t n, cplx m00, cplx m01,
                   cplx m10, cplx m11);
  // sum_i |x_i|^2
  double (*norm_sq)(const cplx* x, std::size_t n);
};

const KernelTable& scalar_table();

// nullptr when the variant was not compiled in or the CPU lacks it.
const KernelTable* avx2_table();

// The table used by every numeric routine in the library. Chosen on first
// use: the widest supported ISA unless POLYENT_ISA=scalar is set.
const KernelTable& active();

// Overrides the runtime choice. Returns false (and leaves the selection
// unchanged) when the requested ISA is unavailable.
bool select(Isa isa);

}  // namespace kernels
}  // namespace polyent

#endif  // POLYENT_KERNELS_HPP_
