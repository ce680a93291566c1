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

// AVX2 + FMA variants. This translation unit is compiled with -mavx2 -mfma and
// must only be entered after the dispatcher has confirmed CPU support.

#include <immintrin.h>

#include "polyent/kernels.hpp"

namespace polyent::kernels {
namespace {

// Two complex doubles per register: [re0, im0, re1, im1].
inline __m256d load2(const cplx* p) {
  return _mm256_loadu_pd(reinterpret_cast<const double*>(p));
}

inline void store2(cplx* p, __m256d v) {
  _mm256_storeu_pd(reinterpret_cast<double*>(p), v);
}

inline __m256d swap_re_im(__m256d v) { return _mm256_permute_pd(v, 0b0101); }

// Broadcast complex m times packed v.
inline __m256d cmul(__m256d mr, __m256d mi, __m256d v) {
  return _mm256_fmaddsub_pd(mr, v, _mm256_mul_pd(mi, swap_re_im(v)));
}

struct Lanes {
  double v[4];
};

inline Lanes lanes(__m256d x) {
  Lanes l;
  _mm256_storeu_pd(l.v, x);
  return l;
}

cplx dotc_avx2(const cplx* x, const cplx* y, std::size_t n) {
  __m256d same = _mm256_setzero_pd();
  __m256d cross = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = load2(x + i);
    const __m256d yv = load2(y + i);
    same = _mm256_fmadd_pd(xv, yv, same);
    cross = _mm256_fmadd_pd(xv, swap_re_im(yv), cross);
  }
  const Lanes s = lanes(same);
  const Lanes c = lanes(cross);
  double re = (s.v[0] + s.v[1]) + (s.v[2] + s.v[3]);
  double im = (c.v[0] - c.v[1]) + (c.v[2] - c.v[3]);
  for (; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

cplx dotu_avx2(const cplx* x, const cplx* y, std::size_t n) {
  __m256d same = _mm256_setzero_pd();
  __m256d cross = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = load2(x + i);
    const __m256d yv = load2(y + i);
    same = _mm256_fmadd_pd(xv, yv, same);
    cross = _mm256_fmadd_pd(xv, swap_re_im(yv), cross);
  }
  const Lanes s = lanes(same);
  const Lanes c = lanes(cross);
  double re = (s.v[0] - s.v[1]) + (s.v[2] - s.v[3]);
  double im = (c.v[0] + c.v[1]) + (c.v[2] + c.v[3]);
  for (; i < n; ++i) {
    re += x[i].real() * y[i].real() - x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() + x[i].imag() * y[i].real();
  }
  return {re, im};
}

void axpy_avx2(cplx a, const cplx* x, cplx* y, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    store2(y + i, _mm256_add_pd(load2(y + i), cmul(ar, ai, load2(x + i))));
  }
  for (; i < n; ++i) {
    const double xr = x[i].real();
    const double xi = x[i].imag();
    y[i] = {y[i].real() + a.real() * xr - a.imag() * xi,
            y[i].imag() + a.real() * xi + a.imag() * xr};
  }
}

void mix_rows_avx2(cplx* x, cplx* y, std::size_t n, cplx m00, cplx m01,
                   cplx m10, cplx m11) {
  const __m256d r00 = _mm256_set1_pd(m00.real());
  const __m256d i00 = _mm256_set1_pd(m00.imag());
  const __m256d r01 = _mm256_set1_pd(m01.real());
  const __m256d i01 = _mm256_set1_pd(m01.imag());
  const __m256d r10 = _mm256_set1_pd(m10.real());
  const __m256d i10 = _mm256_set1_pd(m10.imag());
  const __m256d r11 = _mm256_set1_pd(m11.real());
  const __m256d i11 = _mm256_set1_pd(m11.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = load2(x + i);
    const __m256d yv = load2(y + i);
    store2(x + i, _mm256_add_pd(cmul(r00, i00, xv), cmul(r01, i01, yv)));
    store2(y + i, _mm256_add_pd(cmul(r10, i10, xv), cmul(r11, i11, yv)));
  }
  for (; i < n; ++i) {
    const cplx xv = x[i];
    const cplx yv = y[i];
    x[i] = {m00.real() * xv.real() - m00.imag() * xv.imag() +
                m01.real() * yv.real() - m01.imag() * yv.imag(),
            m00.real() * xv.imag() + m00.imag() * xv.real() +
                m01.real() * yv.imag() + m01.imag() * yv.real()};
    y[i] = {m10.real() * xv.real() - m10.imag() * xv.imag() +
                m11.real() * yv.real() - m11.imag() * yv.imag(),
            m10.real() * xv.imag() + m10.imag() * xv.real() +
                m11.real() * yv.imag() + m11.imag() * yv.real()};
  }
}

double norm_sq_avx2(const cplx* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = load2(x + i);
    acc = _mm256_fmadd_pd(xv, xv, acc);
  }
  const Lanes l = lanes(acc);
  double sum = (l.v[0] + l.v[1]) + (l.v[2] + l.v[3]);
  for (; i < n; ++i) {
    sum += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  }
  return sum;
}

constexpr KernelTable kAvx2Table{Isa::kAvx2, dotc_avx2, dotu_avx2, axpy_avx2,
                                 mix_rows_avx2, norm_sq_avx2};

}  // namespace

const KernelTable& avx2_table_unchecked() { return kAvx2Table; }

}  // namespace polyent::kernels
