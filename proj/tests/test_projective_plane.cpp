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

#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <set>
#include <vector>

#include "projnet/projective_plane.hpp"

using namespace projnet;

namespace {

std::array<std::uint32_t, 3> codes_of(const GaloisField& f, std::array<std::uint32_t, 3> c) {
  return canonicalize(f, c).codes();
}

using Codes = std::array<std::uint32_t, 3>;

}  // namespace

TEST_CASE("plane sizes and canonical shapes") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16}) {
    const auto f = GaloisField::of_order(q);
    const auto points = plane_points(f);
    REQUIRE(points.size() == q * q + q + 1);
    std::set<Codes> distinct;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto c = points[i].codes();
      distinct.insert(c);
      REQUIRE(point_index(points[i]) == i);
      const bool shape = c[0] == 1 || (c[0] == 0 && c[1] == 1) || c == Codes{0, 0, 1};
      REQUIRE(shape);
      REQUIRE(canonicalize(points[i][0], points[i][1], points[i][2]) == points[i]);
    }
    REQUIRE(distinct.size() == points.size());
  }
}

TEST_CASE("canonicalize scales by the inverse of the leading coordinate") {
  const auto f5 = GaloisField::of_order(5);
  CHECK(codes_of(f5, {2, 4, 1}) == Codes{1, 2, 3});
  const auto f2 = GaloisField::of_order(2);
  CHECK(codes_of(f2, {0, 1, 1}) == Codes{0, 1, 1});
  const auto f4 = GaloisField::of_order(4);
  CHECK(codes_of(f4, {2, 0, 2}) == Codes{1, 0, 1});
  CHECK_THROWS_AS(canonicalize(f4, {0, 0, 0}), precondition_error);
  CHECK_THROWS_AS(canonicalize(f4.one(), f5.one(), f4.one()), precondition_error);
}

TEST_CASE("dot and cross products") {
  const auto f2 = GaloisField::of_order(2);
  const auto f3 = GaloisField::of_order(3);
  CHECK(dot(canonicalize(f2, {1, 0, 0}), canonicalize(f2, {0, 0, 1})).is_zero());
  CHECK(dot(canonicalize(f2, {1, 1, 1}), canonicalize(f2, {1, 1, 1})).is_one());
  CHECK(dot(canonicalize(f3, {1, 1, 1}), canonicalize(f3, {1, 2, 0})).is_zero());
  CHECK(cross(canonicalize(f2, {1, 0, 0}), canonicalize(f2, {0, 1, 0})).codes() == Codes{0, 0, 1});
  CHECK(cross(canonicalize(f2, {1, 1, 0}), canonicalize(f2, {0, 1, 1})).codes() == Codes{1, 1, 1});
  CHECK_THROWS_AS(cross(canonicalize(f3, {1, 2, 0}), canonicalize(f3, {2, 1, 0})),
                  precondition_error);
  CHECK_THROWS_AS(dot(canonicalize(f2, {1, 0, 0}), canonicalize(f3, {1, 0, 0})),
                  precondition_error);

  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    const auto points = plane_points(GaloisField::of_order(q));
    for (const auto& x : points) {
      for (const auto& y : points) {
        REQUIRE(dot(x, y) == dot(y, x));
        if (x == y) continue;
        const auto z = cross(x, y);
        REQUIRE(orthogonal(z, x));
        REQUIRE(orthogonal(z, y));
      }
    }
  }
}

TEST_CASE("two distinct points have exactly one common orthogonal point") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    const auto points = plane_points(GaloisField::of_order(q));
    for (std::size_t i = 0; i < points.size(); ++i) {
      for (std::size_t j = i + 1; j < points.size(); ++j) {
        std::size_t common = 0;
        for (const auto& z : points) {
          common += orthogonal(points[i], z) && orthogonal(z, points[j]) ? 1 : 0;
        }
        REQUIRE(common == 1);
      }
    }
  }
}

TEST_CASE("points on a line match a brute-force scan") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 27}) {
    const auto f = GaloisField::of_order(q);
    const auto points = plane_points(f);
    for (const auto& line : points) {
      std::vector<ProjectivePoint> scan;
      for (const auto& x : points) {
        if (orthogonal(x, line)) scan.push_back(x);
      }
      REQUIRE(scan.size() == q + 1);
      REQUIRE(points_on_line(line) == scan);
    }
  }
}

TEST_CASE("self-orthogonal points") {
  const auto f2 = GaloisField::of_order(2);
  std::vector<Codes> got;
  for (const auto& p : self_orthogonal_points(f2)) got.push_back(p.codes());
  CHECK(got == std::vector<Codes>{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  for (std::uint64_t q : {3, 4, 5, 7, 8, 9, 11, 16, 23, 27}) {
    REQUIRE(self_orthogonal_points(GaloisField::of_order(q)).size() == q + 1);
  }
}

TEST_CASE("subplane partition into Baer subplanes") {
  struct Case {
    std::uint64_t q, s;
  };
  for (const auto [q, s] : {Case{4, 2}, Case{9, 3}, Case{16, 4}, Case{25, 5}, Case{49, 7}}) {
    const auto f = GaloisField::of_order(q);
    const auto groups = subplane_partition(f);
    REQUIRE(groups.size() == s * s - s + 1);
    std::set<Codes> covered;
    for (const auto& g : groups) {
      REQUIRE(g.size() == s * s + s + 1);
      REQUIRE(is_subplane(g, s));
      for (const auto& p : g) covered.insert(p.codes());
    }
    REQUIRE(covered.size() == q * q + q + 1);
  }
  CHECK_THROWS_AS(subplane_partition(GaloisField::of_order(8)), precondition_error);
  CHECK_THROWS_AS(subplane_partition(GaloisField::of_order(5)), precondition_error);
}

TEST_CASE("subplane check rejects non-subplanes") {
  const auto f = GaloisField::of_order(4);
  const auto points = plane_points(f);
  const std::vector<ProjectivePoint> first(points.begin(), points.begin() + 7);
  CHECK_FALSE(is_subplane(first, 2));
}
