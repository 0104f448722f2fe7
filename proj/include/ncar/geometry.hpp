#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace ncar {

/// A data point: a coordinate vector plus its index in the owning dataset.
struct Point {
  std::vector<double> coords;
  int id = -1;
};

/// Thrown by ratio() when the query point coincides with focus B; callers
/// treat such a point as interior to B's side.
struct DegenerateRatio : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when the two foci of an Apollonius region coincide.
struct CoincidentFoci : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Absolute distance below which two points are treated as coincident.
inline constexpr double kCoincidentTol = 1e-12;

// |k - 1| at or below this collapses the locus to the perpendicular bisector.
inline constexpr double kUnitRatioTol = 1e-9;

// Scale-invariant tolerance for boundary classification of the ratio test.
inline double boundary_tol(double k) { return 1e-9 * (k > 1.0 ? k : 1.0); }

double euclidean(std::span<const double> a, std::span<const double> b);
double distance(const Point& a, const Point& b);

enum class RegionForm { SphereSideA, SphereSideB, BisectorLine };
enum class Side { Inside, OnBoundary, Outside };

/// Locus of points M with d(A, M) / d(M, B) = k for foci A, B.
///
/// For k < 1 the locus is a sphere enclosing A (SphereSideA), for k > 1 a
/// sphere enclosing B (SphereSideB), and for k = 1 it degenerates to the
/// perpendicular bisector hyperplane (BisectorLine), which carries no center
/// or radius. The formulas are plain vector expressions, so the same type
/// covers circles, spheres and their higher-dimensional analogues.
struct ApolloniusRegion {
  Point focus_a;
  Point focus_b;
  double k = 1.0;
  RegionForm form = RegionForm::BisectorLine;
  std::optional<std::vector<double>> center;
  std::optional<double> radius;
};

/// Distance ratio d(a, m) / d(m, b). Throws DegenerateRatio when m coincides
/// with b.
double ratio(const Point& a, const Point& b, const Point& m);

/// Builds the Apollonius region for foci (a, b) and ratio k > 0.
///
/// When the locus is a sphere, center = (a - k^2 b) / (1 - k^2) componentwise
/// and radius = k d(a,b) / |1 - k^2|. Throws CoincidentFoci when a and b
/// coincide.
ApolloniusRegion apollonius_region(const Point& a, const Point& b, double k);

/// Classifies m against the region boundary via the dimension-free ratio
/// test. Points coincident with an enclosed focus count as Inside; a
/// BisectorLine region is OnBoundary for equidistant points and Outside
/// everywhere else (tolerance 1e-9 * max(1, d(a,b))).
Side side_of(const ApolloniusRegion& region, const Point& m);

}  // namespace ncar
