#pragma once

// Data-parallel inner loops of graph construction and validation.
//
// Every kernel has a scalar reference in tdroute::kernels::scalar and, on
// x86-64, an AVX2 variant in tdroute::kernels::avx2. Both perform the same
// IEEE operations in the same order (the build disables FMA contraction), so
// their results are bit-identical; tests/test_kernels.cpp checks this. The
// dispatching entry points pick the widest variant the CPU supports.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace tdroute {
class TriangleShape;
}

namespace tdroute::kernels {

enum class Isa : std::uint8_t { scalar, avx2 };

std::string_view to_string(Isa isa);

// Widest variant supported by this CPU and build.
Isa detected_isa();
// Variant used by the dispatching entry points.
Isa active_isa();
// Pin the dispatching entry points to one variant (nullopt restores
// detection). Requesting an unsupported variant falls back to scalar.
void force_isa(std::optional<Isa> isa);

// Cone bases in flat form: for cone c (0-based), a point d has coordinates
// a = (d.x*e2y - d.y*e2x)*inv and b = (e1x*d.y - e1y*d.x)*inv.
struct ConeTable {
  std::array<double, 3> e1x, e1y, e2x, e2y, inv;
  // Unit side directions.
  std::array<double, 3> sx, sy;
};

ConeTable cone_table(const TriangleShape& shape);

inline constexpr std::int64_t kNone = -1;

// Result of scanning all candidates from one apex: for every positive cone
// the candidate with the least homothet scale (lowest index on exact
// equality), and whether a second candidate lies within the relative tie
// tolerance of it.
struct NearestInCones {
  std::array<std::int64_t, 3> index{kNone, kNone, kNone};
  std::array<double, 3> scale{0.0, 0.0, 0.0};
  std::array<bool, 3> tie{false, false, false};

  friend bool operator==(const NearestInCones&, const NearestInCones&) = default;
};

// Codes written by parallel_scan.
inline constexpr std::uint8_t kFree = 0;
inline constexpr std::uint8_t kCoincident = 4;  // 1..3 name the parallel side

namespace scalar {
NearestInCones nearest_in_cones(const ConeTable& t, double ux, double uy,
                                std::span<const double> xs, std::span<const double> ys,
                                double tie_tolerance);
void parallel_scan(const ConeTable& t, double px, double py, std::span<const double> xs,
                   std::span<const double> ys, double tolerance, std::span<std::uint8_t> out);
}  // namespace scalar

#if defined(TDROUTE_HAVE_AVX2)
namespace avx2 {
NearestInCones nearest_in_cones(const ConeTable& t, double ux, double uy,
                                std::span<const double> xs, std::span<const double> ys,
                                double tie_tolerance);
void parallel_scan(const ConeTable& t, double px, double py, std::span<const double> xs,
                   std::span<const double> ys, double tolerance, std::span<std::uint8_t> out);
}  // namespace avx2
#endif

NearestInCones nearest_in_cones(const ConeTable& t, double ux, double uy,
                                std::span<const double> xs, std::span<const double> ys,
                                double tie_tolerance);

// out[k] = kCoincident if point k equals p, else the first side (1..3) that
// the direction p -> point k is parallel to within `tolerance` radians, else
// kFree.
void parallel_scan(const ConeTable& t, double px, double py, std::span<const double> xs,
                   std::span<const double> ys, double tolerance, std::span<std::uint8_t> out);

}  // namespace tdroute::kernels
