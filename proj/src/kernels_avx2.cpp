// AVX2 kernel variants. This translation unit is the only one compiled with
// -mavx2 -mfma; callers reach it through the runtime dispatch in kernels.cpp.

#include "rqte/kernels.hpp"

#include <cmath>
#include <immintrin.h>

namespace rqte::kernels {

namespace {

// Quadrant indices are extracted through cvtpd_epi32, valid for
// |phase| * 2/pi < 2^31. The dispatcher guarantees |phase| <= kPhaseLimit and
// reverts to libm for wider elements.
constexpr double kPhaseLimit = 1e9;

// Three-part Cody-Waite split of pi/2.
constexpr double kPio2Hi = 1.57079632673412561417e+00;
constexpr double kPio2Mid = 6.07710050650619224932e-11;
constexpr double kPio2Lo = 2.02226624879595063154e-21;

constexpr double kTwoOverPi = 6.36619772367581343076e-01;

// Minimax coefficients for sin/cos on |r| <= pi/4 (highest order first).
constexpr double kSinCoef[6] = {
    1.58962301576546568060e-10, -2.50507477628578072866e-8,
    2.75573136213857245213e-6,  -1.98412698295895385996e-4,
    8.33333333332211858878e-3,  -1.66666666666666307295e-1,
};
constexpr double kCosCoef[6] = {
    -1.13585365213876817300e-11, 2.08757008419747316778e-9,
    -2.75573141792967388112e-7,  2.48015872888517179954e-5,
    -1.38888888888730564116e-3,  4.16666666666665929218e-2,
};

inline __m256d poly6(const double* coef, __m256d z) {
  __m256d p = _mm256_set1_pd(coef[0]);
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(coef[1]));
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(coef[2]));
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(coef[3]));
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(coef[4]));
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(coef[5]));
  return p;
}

// Four-lane sin and cos. Requires |x| <= kPhaseLimit.
inline void sincos4(__m256d x, __m256d& s_out, __m256d& c_out) {
  const __m256d jd = _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(kTwoOverPi)),
                                     _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(jd, _mm256_set1_pd(kPio2Hi), x);
  r = _mm256_fnmadd_pd(jd, _mm256_set1_pd(kPio2Mid), r);
  r = _mm256_fnmadd_pd(jd, _mm256_set1_pd(kPio2Lo), r);

  const __m256d z = _mm256_mul_pd(r, r);
  const __m256d sin_r = _mm256_fmadd_pd(_mm256_mul_pd(poly6(kSinCoef, z), z), r, r);
  const __m256d cos_r =
      _mm256_add_pd(_mm256_fnmadd_pd(z, _mm256_set1_pd(0.5), _mm256_set1_pd(1.0)),
                    _mm256_mul_pd(poly6(kCosCoef, z), _mm256_mul_pd(z, z)));

  const __m256i q = _mm256_cvtepi32_epi64(_mm256_cvtpd_epi32(jd));
  const __m256i one = _mm256_set1_epi64x(1);
  const __m256i two = _mm256_set1_epi64x(2);
  const __m256d swap_mask =
      _mm256_castsi256_pd(_mm256_cmpeq_epi64(_mm256_and_si256(q, one), one));
  const __m256d sin_sel = _mm256_blendv_pd(sin_r, cos_r, swap_mask);
  const __m256d cos_sel = _mm256_blendv_pd(cos_r, sin_r, swap_mask);

  const __m256d sign_bit = _mm256_set1_pd(-0.0);
  const __m256d sin_neg =
      _mm256_castsi256_pd(_mm256_cmpeq_epi64(_mm256_and_si256(q, two), two));
  const __m256d cos_neg = _mm256_castsi256_pd(
      _mm256_cmpeq_epi64(_mm256_and_si256(_mm256_add_epi64(q, one), two), two));

  s_out = _mm256_xor_pd(sin_sel, _mm256_and_pd(sin_neg, sign_bit));
  c_out = _mm256_xor_pd(cos_sel, _mm256_and_pd(cos_neg, sign_bit));
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d sum2 = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(sum2, _mm_unpackhi_pd(sum2, sum2)));
}

}  // namespace

std::complex<double> phasor_sum_avx2(const double* amp, const double* k, const double* omega,
                                     std::size_t n, double x, double t) {
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  double re_tail = 0.0;
  double im_tail = 0.0;

  const __m256d xv = _mm256_set1_pd(x);
  const __m256d tv = _mm256_set1_pd(t);
  const __m256d limit = _mm256_set1_pd(kPhaseLimit);
  const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d kv = _mm256_loadu_pd(k + i);
    const __m256d ov = _mm256_loadu_pd(omega + i);
    const __m256d av = _mm256_loadu_pd(amp + i);
    // Same rounding sequence as the scalar path: fma(k, x, -(omega*t)).
    const __m256d phase = _mm256_fmsub_pd(kv, xv, _mm256_mul_pd(ov, tv));

    if (_mm256_movemask_pd(_mm256_cmp_pd(_mm256_and_pd(phase, abs_mask), limit, _CMP_GT_OQ))) {
      alignas(32) double ph[4];
      alignas(32) double am[4];
      _mm256_store_pd(ph, phase);
      _mm256_store_pd(am, av);
      for (int lane = 0; lane < 4; ++lane) {
        re_tail += am[lane] * std::cos(ph[lane]);
        im_tail += am[lane] * std::sin(ph[lane]);
      }
      continue;
    }

    __m256d s, c;
    sincos4(phase, s, c);
    acc_re = _mm256_fmadd_pd(av, c, acc_re);
    acc_im = _mm256_fmadd_pd(av, s, acc_im);
  }

  for (; i < n; ++i) {
    const double phase = std::fma(k[i], x, -(omega[i] * t));
    re_tail += amp[i] * std::cos(phase);
    im_tail += amp[i] * std::sin(phase);
  }

  return {hsum(acc_re) + re_tail, hsum(acc_im) + im_tail};
}

double norm_sq_sum_avx2(const std::complex<double>* values, std::size_t n) {
  const double* d = reinterpret_cast<const double*>(values);
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a = _mm256_loadu_pd(d + 2 * i);
    const __m256d b = _mm256_loadu_pd(d + 2 * i + 4);
    acc0 = _mm256_fmadd_pd(a, a, acc0);
    acc1 = _mm256_fmadd_pd(b, b, acc1);
  }

  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) {
    acc += std::norm(values[i]);
  }
  return acc;
}

Moments modulus_moments_avx2(const std::complex<double>* values, std::size_t n,
                             double x0, double dx) {
  const double* d = reinterpret_cast<const double*>(values);
  __m256d m0 = _mm256_setzero_pd();
  __m256d m1 = _mm256_setzero_pd();
  __m256d m2 = _mm256_setzero_pd();

  // hadd interleaves 128-bit lanes: weights come out in logical order
  // {i, i+2, i+1, i+3}, so the abscissa offsets follow the same order.
  const __m256d off = _mm256_set_pd(3.0, 1.0, 2.0, 0.0);
  const __m256d dxv = _mm256_set1_pd(dx);

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a = _mm256_loadu_pd(d + 2 * i);
    const __m256d b = _mm256_loadu_pd(d + 2 * i + 4);
    const __m256d w = _mm256_hadd_pd(_mm256_mul_pd(a, a), _mm256_mul_pd(b, b));
    const __m256d base = _mm256_set1_pd(x0 + static_cast<double>(i) * dx);
    const __m256d xv = _mm256_fmadd_pd(off, dxv, base);
    m0 = _mm256_add_pd(m0, w);
    const __m256d wx = _mm256_mul_pd(w, xv);
    m1 = _mm256_add_pd(m1, wx);
    m2 = _mm256_fmadd_pd(wx, xv, m2);
  }

  Moments m;
  m.m0 = hsum(m0);
  m.m1 = hsum(m1);
  m.m2 = hsum(m2);
  for (; i < n; ++i) {
    const double w = std::norm(values[i]);
    const double xi = x0 + static_cast<double>(i) * dx;
    m.m0 += w;
    m.m1 += w * xi;
    m.m2 += w * xi * xi;
  }
  return m;
}

}  // namespace rqte::kernels
