// Copyright 2026 The projnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "projnet/error.hpp"
#include "projnet/finite_field.hpp"

namespace projnet {

/// A point of P2(F_q) in canonical form: exactly one of (1,x,y), (0,1,x),
/// (0,0,1). Lines are represented by their dual point.
class ProjectivePoint {
 public:
  const GaloisField& field() const { return coords_[0].field(); }
  const FieldElement& operator[](std::size_t i) const { return coords_[i]; }
  std::array<std::uint32_t, 3> codes() const {
    return {coords_[0].code(), coords_[1].code(), coords_[2].code()};
  }

  std::string label() const {
    return "(" + coords_[0].to_string() + "," + coords_[1].to_string() + "," +
           coords_[2].to_string() + ")";
  }

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator<(const ProjectivePoint& a, const ProjectivePoint& b) {
    return a.codes() < b.codes();
  }

 private:
  explicit ProjectivePoint(std::array<FieldElement, 3> coords)
      : coords_(std::move(coords)) {}

  friend ProjectivePoint canonicalize(const FieldElement&, const FieldElement&,
                                      const FieldElement&);

  std::array<FieldElement, 3> coords_;
};

/// Scales a nonzero coordinate triple so its first nonzero entry is one.
inline ProjectivePoint canonicalize(const FieldElement& a,
                                    const FieldElement& b,
                                    const FieldElement& c) {
  detail::require(a.field() == b.field() && b.field() == c.field(),
                  "coordinates belong to different fields");
  const FieldElement* lead = !a.is_zero()   ? &a
                             : !b.is_zero() ? &b
                             : !c.is_zero() ? &c
                                            : nullptr;
  detail::require(lead != nullptr, "the zero vector is not a projective point");
  const FieldElement scale = lead->inverse();
  return ProjectivePoint({a * scale, b * scale, c * scale});
}

inline ProjectivePoint canonicalize(const GaloisField& f,
                                    std::array<std::uint32_t, 3> codes) {
  return canonicalize(f.element(codes[0]), f.element(codes[1]),
                      f.element(codes[2]));
}

inline std::size_t plane_size(std::uint64_t q) { return q * q + q + 1; }

/// Position of a canonical point in plane_points() order:
/// (0,0,1) first, then (0,1,x), then (1,x,y), each by code.
inline std::size_t point_index(const ProjectivePoint& point) {
  const std::size_t q = point.field().order();
  const auto c = point.codes();
  if (c[0] == 1) return 1 + q + std::size_t{c[1]} * q + c[2];
  if (c[1] == 1) return 1 + c[2];
  return 0;
}

inline std::vector<ProjectivePoint> plane_points(const GaloisField& f) {
  const std::uint32_t q = f.order();
  std::vector<ProjectivePoint> points;
  points.reserve(plane_size(q));
  points.push_back(canonicalize(f, {0, 0, 1}));
  for (std::uint32_t x = 0; x < q; ++x) points.push_back(canonicalize(f, {0, 1, x}));
  for (std::uint32_t x = 0; x < q; ++x) {
    for (std::uint32_t y = 0; y < q; ++y) {
      points.push_back(canonicalize(f, {1, x, y}));
    }
  }
  return points;
}

inline FieldElement dot(const ProjectivePoint& p, const ProjectivePoint& l) {
  detail::require(p.field() == l.field(), "points belong to different planes");
  return p[0] * l[0] + p[1] * l[1] + p[2] * l[2];
}

inline bool orthogonal(const ProjectivePoint& p, const ProjectivePoint& l) {
  return dot(p, l).is_zero();
}

/// The point orthogonal to both arguments (the line through two points, or
/// the intersection of two lines).
inline ProjectivePoint cross(const ProjectivePoint& p,
                             const ProjectivePoint& r) {
  detail::require(p.field() == r.field(), "points belong to different planes");
  detail::require(!(p == r), "cross product of equal points is undefined");
  return canonicalize(p[1] * r[2] - p[2] * r[1], p[2] * r[0] - p[0] * r[2],
                      p[0] * r[1] - p[1] * r[0]);
}

/// Points incident to the line with dual point `line`, in index order.
/// Always q + 1 of them.
inline std::vector<ProjectivePoint> points_on_line(const ProjectivePoint& line) {
  const GaloisField& f = line.field();
  const std::uint32_t q = f.order();
  const auto [a, b, c] = line.codes();
  std::vector<ProjectivePoint> points;
  points.reserve(q + 1);
  if (c == 0) points.push_back(canonicalize(f, {0, 0, 1}));
  // (0,1,x): b + c x = 0
  if (c != 0) {
    points.push_back(canonicalize(f, {0, 1, f.neg(f.div(b, c))}));
  } else if (b == 0) {
    for (std::uint32_t x = 0; x < q; ++x) points.push_back(canonicalize(f, {0, 1, x}));
  }
  // (1,x,y): a + b x + c y = 0
  if (c != 0) {
    for (std::uint32_t x = 0; x < q; ++x) {
      const std::uint32_t y = f.neg(f.div(f.add(a, f.mul(b, x)), c));
      points.push_back(canonicalize(f, {1, x, y}));
    }
  } else if (b != 0) {
    const std::uint32_t x = f.neg(f.div(a, b));
    for (std::uint32_t y = 0; y < q; ++y) points.push_back(canonicalize(f, {1, x, y}));
  }
  std::sort(points.begin(), points.end(), [](const auto& u, const auto& v) {
    return point_index(u) < point_index(v);
  });
  return points;
}

/// For every point (by index) the sorted indices of its q + 1 orthogonal
/// points.
inline std::vector<std::vector<std::uint32_t>> orthogonality_lists(
    const GaloisField& f) {
  const auto points = plane_points(f);
  std::vector<std::vector<std::uint32_t>> lists(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (const auto& x : points_on_line(points[i])) {
      lists[i].push_back(static_cast<std::uint32_t>(point_index(x)));
    }
  }
  return lists;
}

inline std::vector<ProjectivePoint> self_orthogonal_points(const GaloisField& f) {
  std::vector<ProjectivePoint> result;
  for (const auto& p : plane_points(f)) {
    if (orthogonal(p, p)) result.push_back(p);
  }
  return result;
}

namespace detail {

// Companion-matrix action v -> M v with M = [[0,0,c0],[1,0,c1],[0,1,c2]].
inline std::array<std::uint32_t, 3> companion_apply(
    const GaloisField& f, const std::array<std::uint32_t, 3>& coeff,
    const std::array<std::uint32_t, 3>& v) {
  return {f.mul(coeff[0], v[2]), f.add(v[0], f.mul(coeff[1], v[2])),
          f.add(v[1], f.mul(coeff[2], v[2]))};
}

inline std::array<std::uint32_t, 3> normalize(
    const GaloisField& f, const std::array<std::uint32_t, 3>& v) {
  const std::uint32_t lead = v[0] != 0 ? v[0] : v[1] != 0 ? v[1] : v[2];
  const std::uint32_t s = f.inv(lead);
  return {f.mul(v[0], s), f.mul(v[1], s), f.mul(v[2], s)};
}

/// Points listed along the orbit of (1,0,0) under a cyclic projectivity that
/// is transitive on the whole plane (a Singer cycle), found by scanning
/// companion matrices in code order.
inline std::vector<std::array<std::uint32_t, 3>> singer_orbit(
    const GaloisField& f) {
  const std::uint32_t q = f.order();
  const std::size_t n = plane_size(q);
  const std::array<std::uint32_t, 3> start{1, 0, 0};
  for (std::uint32_t c0 = 1; c0 < q; ++c0) {
    for (std::uint32_t c1 = 0; c1 < q; ++c1) {
      for (std::uint32_t c2 = 0; c2 < q; ++c2) {
        const std::array<std::uint32_t, 3> coeff{c0, c1, c2};
        std::vector<std::array<std::uint32_t, 3>> orbit;
        orbit.reserve(n);
        auto v = start;
        do {
          orbit.push_back(v);
          v = normalize(f, companion_apply(f, coeff, v));
        } while (v != start && orbit.size() <= n);
        if (orbit.size() == n) return orbit;
      }
    }
  }
  ensure(false, "no Singer cycle found");
  return {};
}

}  // namespace detail

/// Partition of P2(F_q), q = s^2, into s^2 - s + 1 Baer subplanes P2(F_s):
/// the orbits of the order-(s^2+s+1) subgroup of a Singer cycle. Groups are
/// ordered by orbit offset; points within a group by index.
inline std::vector<std::vector<ProjectivePoint>> subplane_partition(
    const GaloisField& f) {
  detail::require(f.degree() % 2 == 0, "subplane partition requires q to be a square");
  std::uint64_t s = 1;
  for (std::uint32_t i = 0; i < f.degree() / 2; ++i) s *= f.characteristic();
  const std::size_t groups = s * s - s + 1;
  const auto orbit = detail::singer_orbit(f);
  std::vector<std::vector<ProjectivePoint>> partition(groups);
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    partition[k % groups].push_back(canonicalize(f, orbit[k]));
  }
  for (auto& group : partition) {
    std::sort(group.begin(), group.end(), [](const auto& u, const auto& v) {
      return point_index(u) < point_index(v);
    });
  }
  return partition;
}

/// Lines (as dual points) meeting `points` in at least two points.
inline std::vector<ProjectivePoint> spanned_lines(
    const std::vector<ProjectivePoint>& points) {
  std::set<ProjectivePoint> lines;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      lines.insert(cross(points[i], points[j]));
    }
  }
  std::vector<ProjectivePoint> result(lines.begin(), lines.end());
  std::sort(result.begin(), result.end(), [](const auto& u, const auto& v) {
    return point_index(u) < point_index(v);
  });
  return result;
}

/// True when `points` form a subplane of order s: s^2+s+1 points and every
/// line through two of them carries exactly s+1 of them.
inline bool is_subplane(const std::vector<ProjectivePoint>& points,
                        std::uint64_t s) {
  if (points.size() != s * s + s + 1) return false;
  for (const auto& line : spanned_lines(points)) {
    std::size_t on = 0;
    for (const auto& x : points) on += orthogonal(x, line) ? 1 : 0;
    if (on != s + 1) return false;
  }
  return spanned_lines(points).size() == points.size();
}

}  // namespace projnet
