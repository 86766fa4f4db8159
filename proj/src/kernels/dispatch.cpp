#include <atomic>

#include "tdroute/geometry.hpp"
#include "tdroute/kernels.hpp"

namespace tdroute::kernels {

namespace {

// -1: follow detection, otherwise the pinned Isa value.
std::atomic<int> forced{-1};

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

Isa detected_isa() {
#if defined(TDROUTE_HAVE_AVX2)
  static const bool has_avx2 = __builtin_cpu_supports("avx2");
  if (has_avx2) return Isa::avx2;
#endif
  return Isa::scalar;
}

Isa active_isa() {
  const int f = forced.load(std::memory_order_relaxed);
  if (f < 0) return detected_isa();
  const auto isa = static_cast<Isa>(f);
  if (isa == Isa::avx2 && detected_isa() != Isa::avx2) return Isa::scalar;
  return isa;
}

void force_isa(std::optional<Isa> isa) {
  forced.store(isa ? static_cast<int>(*isa) : -1, std::memory_order_relaxed);
}

ConeTable cone_table(const TriangleShape& shape) {
  ConeTable t{};
  for (int c = 0; c < 3; ++c) {
    const ConeBasis& b = shape.basis(c + 1);
    t.e1x[c] = b.e1.x;
    t.e1y[c] = b.e1.y;
    t.e2x[c] = b.e2.x;
    t.e2y[c] = b.e2.y;
    t.inv[c] = b.inv_det;
    const Point s = shape.side_direction(c + 1);
    t.sx[c] = s.x;
    t.sy[c] = s.y;
  }
  return t;
}

NearestInCones nearest_in_cones(const ConeTable& t, double ux, double uy,
                                std::span<const double> xs, std::span<const double> ys,
                                double tie_tolerance) {
#if defined(TDROUTE_HAVE_AVX2)
  if (active_isa() == Isa::avx2) return avx2::nearest_in_cones(t, ux, uy, xs, ys, tie_tolerance);
#endif
  return scalar::nearest_in_cones(t, ux, uy, xs, ys, tie_tolerance);
}

void parallel_scan(const ConeTable& t, double px, double py, std::span<const double> xs,
                   std::span<const double> ys, double tolerance, std::span<std::uint8_t> out) {
#if defined(TDROUTE_HAVE_AVX2)
  if (active_isa() == Isa::avx2) {
    avx2::parallel_scan(t, px, py, xs, ys, tolerance, out);
    return;
  }
#endif
  scalar::parallel_scan(t, px, py, xs, ys, tolerance, out);
}

}  // namespace tdroute::kernels
