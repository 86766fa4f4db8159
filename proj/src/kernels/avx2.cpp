#include <immintrin.h>

#include <limits>

#include "tdroute/kernels.hpp"

namespace tdroute::kernels::avx2 {

namespace {

constexpr std::size_t kWidth = 4;

struct ConeRegs {
  __m256d e1x, e1y, e2x, e2y, inv;
};

ConeRegs load_cone(const ConeTable& t, int c) {
  return {_mm256_set1_pd(t.e1x[c]), _mm256_set1_pd(t.e1y[c]), _mm256_set1_pd(t.e2x[c]),
          _mm256_set1_pd(t.e2y[c]), _mm256_set1_pd(t.inv[c])};
}

// Same operation order as the scalar reference.
inline void cone_coords(const ConeRegs& r, __m256d dx, __m256d dy, __m256d& a, __m256d& b) {
  a = _mm256_mul_pd(_mm256_sub_pd(_mm256_mul_pd(dx, r.e2y), _mm256_mul_pd(dy, r.e2x)), r.inv);
  b = _mm256_mul_pd(_mm256_sub_pd(_mm256_mul_pd(r.e1x, dy), _mm256_mul_pd(r.e1y, dx)), r.inv);
}

inline __m256d inside_mask(__m256d a, __m256d b) {
  const __m256d zero = _mm256_setzero_pd();
  return _mm256_and_pd(_mm256_cmp_pd(a, zero, _CMP_GT_OQ), _mm256_cmp_pd(b, zero, _CMP_GT_OQ));
}

}  // namespace

NearestInCones nearest_in_cones(const ConeTable& t, double ux, double uy,
                                std::span<const double> xs, std::span<const double> ys,
                                double tie_tolerance) {
  NearestInCones r;
  const std::size_t n = xs.size();
  const std::size_t body = n - n % kWidth;
  const __m256d vux = _mm256_set1_pd(ux);
  const __m256d vuy = _mm256_set1_pd(uy);
  const __m256d lane = _mm256_set_pd(3.0, 2.0, 1.0, 0.0);
  const double inf = std::numeric_limits<double>::infinity();

  const ConeRegs regs[3] = {load_cone(t, 0), load_cone(t, 1), load_cone(t, 2)};
  __m256d vbest[3] = {_mm256_set1_pd(inf), _mm256_set1_pd(inf), _mm256_set1_pd(inf)};
  __m256d vidx[3] = {_mm256_set1_pd(-1.0), _mm256_set1_pd(-1.0), _mm256_set1_pd(-1.0)};

  for (std::size_t k = 0; k < body; k += kWidth) {
    const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs.data() + k), vux);
    const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys.data() + k), vuy);
    const __m256d ids = _mm256_add_pd(_mm256_set1_pd(static_cast<double>(k)), lane);
    for (int c = 0; c < 3; ++c) {
      __m256d a, b;
      cone_coords(regs[c], dx, dy, a, b);
      const __m256d s = _mm256_add_pd(a, b);
      const __m256d take =
          _mm256_and_pd(inside_mask(a, b), _mm256_cmp_pd(s, vbest[c], _CMP_LT_OQ));
      vbest[c] = _mm256_blendv_pd(vbest[c], s, take);
      vidx[c] = _mm256_blendv_pd(vidx[c], ids, take);
    }
  }

  std::array<double, 3> best;
  for (int c = 0; c < 3; ++c) {
    alignas(32) double lb[kWidth];
    alignas(32) double li[kWidth];
    _mm256_store_pd(lb, vbest[c]);
    _mm256_store_pd(li, vidx[c]);
    best[c] = inf;
    for (std::size_t l = 0; l < kWidth; ++l) {
      if (li[l] < 0.0) continue;
      const auto id = static_cast<std::int64_t>(li[l]);
      if (lb[l] < best[c] || (lb[l] == best[c] && id < r.index[c])) {
        best[c] = lb[l];
        r.index[c] = id;
      }
    }
  }

  for (std::size_t k = body; k < n; ++k) {
    const double dx = xs[k] - ux;
    const double dy = ys[k] - uy;
    for (int c = 0; c < 3; ++c) {
      const double a = (dx * t.e2y[c] - dy * t.e2x[c]) * t.inv[c];
      const double b = (t.e1x[c] * dy - t.e1y[c] * dx) * t.inv[c];
      if (a > 0.0 && b > 0.0) {
        const double s = a + b;
        if (s < best[c]) {
          best[c] = s;
          r.index[c] = static_cast<std::int64_t>(k);
        }
      }
    }
  }

  for (int c = 0; c < 3; ++c) {
    if (r.index[c] == kNone) continue;
    r.scale[c] = best[c];
    const double limit = best[c] + best[c] * tie_tolerance;
    const __m256d vlimit = _mm256_set1_pd(limit);
    int within = 0;
    for (std::size_t k = 0; k < body; k += kWidth) {
      const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs.data() + k), vux);
      const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys.data() + k), vuy);
      __m256d a, b;
      cone_coords(regs[c], dx, dy, a, b);
      const __m256d s = _mm256_add_pd(a, b);
      const __m256d hit =
          _mm256_and_pd(inside_mask(a, b), _mm256_cmp_pd(s, vlimit, _CMP_LE_OQ));
      within += __builtin_popcount(static_cast<unsigned>(_mm256_movemask_pd(hit)));
    }
    for (std::size_t k = body; k < n; ++k) {
      const double dx = xs[k] - ux;
      const double dy = ys[k] - uy;
      const double a = (dx * t.e2y[c] - dy * t.e2x[c]) * t.inv[c];
      const double b = (t.e1x[c] * dy - t.e1y[c] * dx) * t.inv[c];
      if (a > 0.0 && b > 0.0 && a + b <= limit) ++within;
    }
    r.tie[c] = within > 1;
  }
  return r;
}

void parallel_scan(const ConeTable& t, double px, double py, std::span<const double> xs,
                   std::span<const double> ys, double tolerance, std::span<std::uint8_t> out) {
  const double tol2 = tolerance * tolerance;
  const std::size_t n = xs.size();
  const std::size_t body = n - n % kWidth;
  const __m256d vpx = _mm256_set1_pd(px);
  const __m256d vpy = _mm256_set1_pd(py);
  const __m256d vtol2 = _mm256_set1_pd(tol2);
  const __m256d zero = _mm256_setzero_pd();

  for (std::size_t k = 0; k < body; k += kWidth) {
    const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs.data() + k), vpx);
    const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys.data() + k), vpy);
    const int same = _mm256_movemask_pd(
        _mm256_and_pd(_mm256_cmp_pd(dx, zero, _CMP_EQ_OQ), _mm256_cmp_pd(dy, zero, _CMP_EQ_OQ)));
    const __m256d len2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
    const __m256d bound = _mm256_mul_pd(vtol2, len2);
    int side_bits[3];
    for (int s = 0; s < 3; ++s) {
      const __m256d c = _mm256_sub_pd(_mm256_mul_pd(_mm256_set1_pd(t.sx[s]), dy),
                                      _mm256_mul_pd(_mm256_set1_pd(t.sy[s]), dx));
      side_bits[s] = _mm256_movemask_pd(_mm256_cmp_pd(_mm256_mul_pd(c, c), bound, _CMP_LE_OQ));
    }
    for (std::size_t l = 0; l < kWidth; ++l) {
      const int bit = 1 << l;
      std::uint8_t code = kFree;
      if (same & bit) {
        code = kCoincident;
      } else if (side_bits[0] & bit) {
        code = 1;
      } else if (side_bits[1] & bit) {
        code = 2;
      } else if (side_bits[2] & bit) {
        code = 3;
      }
      out[k + l] = code;
    }
  }
  if (body < n) {
    scalar::parallel_scan(t, px, py, xs.subspan(body), ys.subspan(body), tolerance,
                          out.subspan(body));
  }
}

}  // namespace tdroute::kernels::avx2
