#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tt/lengths.hpp"

namespace tt {

// Floating-point reconstruction of the figure. It shares no arithmetic with
// the surd engine and is used as an independent oracle for it.
struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct Scene {
  double R1 = 0.0;
  double R2 = 0.0;
  Point I, C1, C2, T1, T2, M, M1, M2, F, K;
  double omega = 0.0;  // angle M C1 I
  double phi = 0.0;    // angle M C2 I

  std::vector<std::pair<std::string, Point>> points() const;
};

Scene build_scene(double R1, double R2);
Scene build_scene(const RadiiPair& r);

double distance(Point a, Point b);
// Angle ABC at vertex b, in radians.
double angle_at(Point a, Point b, Point c);

// Euclidean re-measurement of every LengthSet field, keyed by field name.
std::map<std::string, double> measure(const Scene& s);

struct CheckEntry {
  std::string name;
  double expected = 0.0;
  double observed = 0.0;
  double deviation = 0.0;
  bool pass = false;
};

struct CheckReport {
  std::vector<CheckEntry> entries;
  double max_deviation = 0.0;

  bool passed() const;
  std::vector<std::string> failures() const;
};

// Oracle lengths against surd_to_float of compute_lengths, relative deviation.
// Throws VerificationFailure naming every offending length.
CheckReport cross_check(const RadiiPair& r, double rel_tol = 1e-9);

// Perpendicularities, the two families of equal angles, omega + phi = pi/2,
// the sine relations and the IM1MM2 rectangle. Absolute deviation for angles
// and cosines, relative for lengths. Throws VerificationFailure on any miss.
CheckReport check_angles(const Scene& s, double tol = 1e-9);

}  // namespace tt
