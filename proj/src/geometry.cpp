#include "ncar/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace ncar {

double euclidean(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size())
    throw std::invalid_argument("euclidean: dimension mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

double distance(const Point& a, const Point& b) {
  return euclidean(a.coords, b.coords);
}

double ratio(const Point& a, const Point& b, const Point& m) {
  const double dmb = distance(m, b);
  if (dmb <= kCoincidentTol)
    throw DegenerateRatio("ratio: query point coincides with focus B");
  return distance(a, m) / dmb;
}

ApolloniusRegion apollonius_region(const Point& a, const Point& b, double k) {
  if (!(k > 0.0))
    throw std::invalid_argument("apollonius_region: k must be positive");
  const double dab = distance(a, b);
  if (dab <= kCoincidentTol)
    throw CoincidentFoci("apollonius_region: foci coincide");

  ApolloniusRegion region;
  region.focus_a = a;
  region.focus_b = b;
  region.k = k;
  if (std::abs(k - 1.0) <= kUnitRatioTol) {
    region.form = RegionForm::BisectorLine;
    return region;
  }
  region.form = k < 1.0 ? RegionForm::SphereSideA : RegionForm::SphereSideB;
  const double denom = 1.0 - k * k;
  std::vector<double> center(a.coords.size());
  for (std::size_t i = 0; i < center.size(); ++i)
    center[i] = (a.coords[i] - k * k * b.coords[i]) / denom;
  region.center = std::move(center);
  region.radius = k * dab / std::abs(denom);
  return region;
}

Side side_of(const ApolloniusRegion& region, const Point& m) {
  const double dam = distance(region.focus_a, m);
  const double dmb = distance(region.focus_b, m);

  if (region.form == RegionForm::BisectorLine) {
    const double dab = distance(region.focus_a, region.focus_b);
    const double tol = 1e-9 * (dab > 1.0 ? dab : 1.0);
    return std::abs(dam - dmb) <= tol ? Side::OnBoundary : Side::Outside;
  }
  if (dmb <= kCoincidentTol)
    return region.form == RegionForm::SphereSideB ? Side::Inside
                                                  : Side::Outside;
  if (dam <= kCoincidentTol)
    return region.form == RegionForm::SphereSideA ? Side::Inside
                                                  : Side::Outside;

  const double r = dam / dmb;
  if (std::abs(r - region.k) <= boundary_tol(region.k)) return Side::OnBoundary;
  if (region.form == RegionForm::SphereSideB)
    return r > region.k ? Side::Inside : Side::Outside;
  return r < region.k ? Side::Inside : Side::Outside;
}

}  // namespace ncar
