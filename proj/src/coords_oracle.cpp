#include "tt/coords_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace tt {

namespace {

Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
Point operator*(double k, Point a) { return {k * a.x, k * a.y}; }
double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
double norm(Point a) { return std::hypot(a.x, a.y); }
Point midpoint(Point a, Point b) { return 0.5 * (a + b); }

// Tangent point on circle (center, radius) seen from an external point,
// taking the one in the upper half-plane.
Point upper_tangent_point(Point external, Point center, double radius) {
  const Point offset = external - center;
  const double d = norm(offset);
  const Point u = (1.0 / d) * offset;
  const double cos_a = radius / d;
  const double sin_a = std::sqrt((d - radius) * (d + radius)) / d;
  const Point ccw{u.x * cos_a - u.y * sin_a, u.x * sin_a + u.y * cos_a};
  const Point cw{u.x * cos_a + u.y * sin_a, -u.x * sin_a + u.y * cos_a};
  return center + radius * (ccw.y > cw.y ? ccw : cw);
}

Point project_onto_line(Point p, Point a, Point b) {
  const Point dir = b - a;
  return a + (dot(p - a, dir) / dot(dir, dir)) * dir;
}

// |cos| of the angle between two directions; 0 when perpendicular.
double perpendicularity(Point u, Point v) { return std::abs(dot(u, v)) / (norm(u) * norm(v)); }

}  // namespace

std::vector<std::pair<std::string, Point>> Scene::points() const {
  return {{"I", I},   {"C1", C1}, {"C2", C2}, {"T1", T1}, {"T2", T2},
          {"M", M},   {"M1", M1}, {"M2", M2}, {"F", F},   {"K", K}};
}

double distance(Point a, Point b) { return norm(b - a); }

double angle_at(Point a, Point b, Point c) {
  const Point u = a - b;
  const Point v = c - b;
  return std::atan2(std::abs(cross(u, v)), dot(u, v));
}

Scene build_scene(double R1, double R2) {
  if (!(R2 > 0.0) || !(R1 > R2) || !std::isfinite(R1)) {
    throw Error(ErrorKind::InvalidRadii, "require R1 > R2 > 0");
  }
  Scene s;
  s.R1 = R1;
  s.R2 = R2;
  s.I = {0.0, 0.0};
  s.C1 = {-R1, 0.0};
  s.C2 = {R2, 0.0};
  s.K = {2.0 * R1 * R2 / (R1 - R2), 0.0};
  s.T1 = upper_tangent_point(s.K, s.C1, R1);
  s.T2 = upper_tangent_point(s.K, s.C2, R2);
  s.M = midpoint(s.T1, s.T2);
  s.M1 = midpoint(s.T1, s.I);
  s.M2 = midpoint(s.I, s.T2);
  s.F = project_onto_line(s.C2, s.C1, s.T1);
  s.omega = angle_at(s.M, s.C1, s.I);
  s.phi = angle_at(s.M, s.C2, s.I);
  return s;
}

Scene build_scene(const RadiiPair& r) {
  validate(r);
  return build_scene(r.R1.get_d(), r.R2.get_d());
}

std::map<std::string, double> measure(const Scene& s) {
  return {
      {"t1t2", distance(s.T1, s.T2)}, {"x1", distance(s.C1, s.M)},   {"x2", distance(s.C2, s.M)},
      {"a1", distance(s.T1, s.I)},    {"a2", distance(s.T2, s.I)},   {"h1", distance(s.C1, s.M1)},
      {"h2", distance(s.C2, s.M2)},   {"m1m", distance(s.M1, s.M)},  {"m2m", distance(s.M2, s.M)},
      {"im", distance(s.I, s.M)},     {"c2k", distance(s.C2, s.K)},  {"c1k", distance(s.C1, s.K)},
      {"t2k", distance(s.T2, s.K)},   {"t1k", distance(s.T1, s.K)},  {"d1", distance(s.C1, s.T2)},
      {"d2", distance(s.C2, s.T1)},
  };
}

bool CheckReport::passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const CheckEntry& e) { return e.pass; });
}

std::vector<std::string> CheckReport::failures() const {
  std::vector<std::string> out;
  for (const auto& e : entries) {
    if (!e.pass) out.push_back(e.name);
  }
  return out;
}

namespace {

void add(CheckReport& report, std::string name, double expected, double observed, double deviation, double tol) {
  report.entries.push_back({std::move(name), expected, observed, deviation, deviation <= tol});
  report.max_deviation = std::max(report.max_deviation, deviation);
}

double relative(double expected, double observed) {
  const double scale = std::max(std::abs(expected), std::abs(observed));
  return scale == 0.0 ? 0.0 : std::abs(observed - expected) / scale;
}

void throw_on_failure(const CheckReport& report, std::string_view what) {
  if (report.passed()) return;
  std::ostringstream msg;
  msg << what << " failed for:";
  for (const auto& name : report.failures()) msg << ' ' << name;
  msg << " (max deviation " << report.max_deviation << ")";
  throw Error(ErrorKind::VerificationFailure, msg.str());
}

}  // namespace

CheckReport cross_check(const RadiiPair& r, double rel_tol) {
  if (!(rel_tol > 0.0)) throw Error(ErrorKind::InvalidInput, "tolerance must be positive");
  const LengthSet ls = compute_lengths(r);
  const auto measured = measure(build_scene(r));
  const auto fields = ls.fields();
  CheckReport report;
  for (std::size_t i = 0; i < LengthSet::kNames.size(); ++i) {
    const std::string name(LengthSet::kNames[i]);
    const double exact = surd_to_float(*fields[i]);
    const double observed = measured.at(name);
    add(report, name, exact, observed, relative(exact, observed), rel_tol);
  }
  throw_on_failure(report, "length cross-check");
  return report;
}

CheckReport check_angles(const Scene& s, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidInput, "tolerance must be positive");
  CheckReport report;
  auto perpendicular = [&](std::string name, Point u, Point v) {
    add(report, std::move(name), 0.0, perpendicularity(u, v), perpendicularity(u, v), tol);
  };
  perpendicular("MI perp C1C2", s.I - s.M, s.C2 - s.C1);
  perpendicular("C1M perp MC2", s.M - s.C1, s.C2 - s.M);
  perpendicular("T1I perp IT2", s.I - s.T1, s.T2 - s.I);
  perpendicular("MC1 perp T1I", s.C1 - s.M, s.I - s.T1);
  perpendicular("T1C1 perp T1T2", s.C1 - s.T1, s.T2 - s.T1);
  perpendicular("T2C2 perp T1T2", s.C2 - s.T2, s.T2 - s.T1);

  const std::vector<std::pair<std::string, double>> phi_angles{
      {"C1T1I", angle_at(s.C1, s.T1, s.I)}, {"T1IC1", angle_at(s.T1, s.I, s.C1)},
      {"T1MC1", angle_at(s.T1, s.M, s.C1)}, {"C1MI", angle_at(s.C1, s.M, s.I)},
      {"MIT2", angle_at(s.M, s.I, s.T2)},   {"MT2I", angle_at(s.M, s.T2, s.I)},
      {"IC2M", angle_at(s.I, s.C2, s.M)},   {"MC2T2", angle_at(s.M, s.C2, s.T2)},
  };
  const std::vector<std::pair<std::string, double>> omega_angles{
      {"T1C1M", angle_at(s.T1, s.C1, s.M)}, {"IC1M", angle_at(s.I, s.C1, s.M)},
      {"MT1I", angle_at(s.M, s.T1, s.I)},   {"T1IM", angle_at(s.T1, s.I, s.M)},
      {"IMC2", angle_at(s.I, s.M, s.C2)},   {"C2MT2", angle_at(s.C2, s.M, s.T2)},
      {"C2IT2", angle_at(s.C2, s.I, s.T2)}, {"IT2C2", angle_at(s.I, s.T2, s.C2)},
  };
  for (const auto& [name, value] : phi_angles) {
    add(report, "angle " + name + " = phi", s.phi, value, std::abs(value - s.phi), tol);
  }
  for (const auto& [name, value] : omega_angles) {
    add(report, "angle " + name + " = omega", s.omega, value, std::abs(value - s.omega), tol);
  }

  const double right = std::numbers::pi / 2.0;
  add(report, "omega + phi = pi/2", right, s.omega + s.phi, std::abs(s.omega + s.phi - right), tol);
  const double a1 = distance(s.T1, s.I);
  const double a2 = distance(s.T2, s.I);
  add(report, "sin omega = a1/(2 R1)", a1 / (2.0 * s.R1), std::sin(s.omega),
      std::abs(std::sin(s.omega) - a1 / (2.0 * s.R1)), tol);
  add(report, "sin phi = a2/(2 R2)", a2 / (2.0 * s.R2), std::sin(s.phi),
      std::abs(std::sin(s.phi) - a2 / (2.0 * s.R2)), tol);

  perpendicular("rectangle corner M1", s.I - s.M1, s.M - s.M1);
  perpendicular("rectangle corner M", s.M1 - s.M, s.M2 - s.M);
  perpendicular("rectangle corner M2", s.M - s.M2, s.I - s.M2);
  perpendicular("rectangle corner I", s.M2 - s.I, s.M1 - s.I);
  const double im1 = distance(s.I, s.M1);
  const double mm2 = distance(s.M, s.M2);
  const double im2 = distance(s.I, s.M2);
  const double mm1 = distance(s.M, s.M1);
  add(report, "IM1 = MM2", im1, mm2, relative(im1, mm2), tol);
  add(report, "IM2 = MM1", im2, mm1, relative(im2, mm1), tol);

  throw_on_failure(report, "angle check");
  return report;
}

}  // namespace tt
