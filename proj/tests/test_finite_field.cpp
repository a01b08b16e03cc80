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
#include <random>
#include <set>
#include <vector>

#include "projnet/finite_field.hpp"

using projnet::GaloisField;
using projnet::precondition_error;

namespace {

// Schoolbook polynomial arithmetic over GF(p), independent of the log tables.
struct NaiveField {
  std::uint32_t p;
  std::vector<std::uint32_t> modulus;  // monic, low-order first

  std::size_t m() const { return modulus.size() - 1; }

  std::vector<std::uint32_t> decode(std::uint32_t code) const {
    std::vector<std::uint32_t> c(m());
    for (auto& d : c) {
      d = code % p;
      code /= p;
    }
    return c;
  }
  std::uint32_t encode(const std::vector<std::uint32_t>& c) const {
    std::uint32_t code = 0;
    for (std::size_t i = c.size(); i-- > 0;) code = code * p + c[i];
    return code;
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    const auto x = decode(a), y = decode(b);
    std::vector<std::uint64_t> prod(2 * m(), 0);
    for (std::size_t i = 0; i < m(); ++i) {
      for (std::size_t j = 0; j < m(); ++j) prod[i + j] += std::uint64_t{x[i]} * y[j];
    }
    for (auto& v : prod) v %= p;
    for (std::size_t d = prod.size(); d-- > m();) {
      const std::uint64_t lead = prod[d];
      if (lead == 0) continue;
      for (std::size_t i = 0; i <= m(); ++i) {
        prod[d - m() + i] = (prod[d - m() + i] + (p - lead) * modulus[i]) % p;
      }
    }
    std::vector<std::uint32_t> r(m());
    for (std::size_t i = 0; i < m(); ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
    return encode(r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    auto x = decode(a);
    const auto y = decode(b);
    for (std::size_t i = 0; i < m(); ++i) x[i] = (x[i] + y[i]) % p;
    return encode(x);
  }
};

const std::vector<std::uint64_t> kSmallOrders = {2,  3,  4,  5,  7,  8,  9,  11, 13, 16, 17,
                                                 19, 23, 25, 27, 29, 31, 32, 37, 41, 43, 47,
                                                 49, 53, 59, 61, 64};
const std::vector<std::uint64_t> kLargeOrders = {67,  81,  125, 128, 243, 256, 343,
                                                 512, 625, 729, 961, 1024};

void check_axioms(const GaloisField& f, std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  REQUIRE(f.add(a, b) == f.add(b, a));
  REQUIRE(f.mul(a, b) == f.mul(b, a));
  REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
  REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
  REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
}

}  // namespace

TEST_CASE("field construction picks the lowest monic irreducible modulus") {
  CHECK(GaloisField::create(2, 1).modulus() == std::vector<std::uint32_t>{0, 1});
  CHECK(GaloisField::create(2, 2).modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(GaloisField::create(2, 3).modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
  CHECK(GaloisField::create(3, 2).modulus() == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(GaloisField::create(3, 2).elements().size() == 9);
  CHECK(GaloisField::of_order(4).format(2) == "x");
  CHECK(GaloisField::of_order(9).format(5) == "x+2");
}

TEST_CASE("field construction rejects bad parameters") {
  CHECK_THROWS_AS(GaloisField::create(4, 1), precondition_error);
  CHECK_THROWS_AS(GaloisField::create(2, 0), precondition_error);
  CHECK_THROWS_AS(GaloisField::create(2, 21), precondition_error);
  CHECK_NOTHROW(GaloisField::create(2, 20));
  CHECK_THROWS_WITH(GaloisField::of_order(6), "q must be a prime power (got 6)");
  CHECK_THROWS_AS(GaloisField::of_order(1), precondition_error);
}

TEST_CASE("small arithmetic examples") {
  const auto f2 = GaloisField::of_order(2);
  CHECK(f2.add(1, 1) == 0);
  const auto f4 = GaloisField::of_order(4);
  const auto x = f4.element(2);
  CHECK((x * x).to_string() == "x+1");
  const auto f5 = GaloisField::of_order(5);
  CHECK(f5.element(2).inverse().code() == 3);
  CHECK_THROWS_WITH(f5.zero().inverse(), "inversion of zero");
  CHECK_THROWS_WITH(f5.one() + f4.one(), "operands belong to different fields");
  CHECK(f5.element(2).pow(4).is_one());
  CHECK((f5.element(1) - f5.element(3)).code() == 3);
  CHECK((-f5.element(1)).code() == 4);
}

TEST_CASE("table arithmetic agrees with schoolbook polynomial arithmetic") {
  for (const auto q : kSmallOrders) {
    const auto f = GaloisField::of_order(q);
    const NaiveField naive{f.characteristic(), f.modulus()};
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        REQUIRE(f.mul(a, b) == naive.mul(a, b));
        REQUIRE(f.add(a, b) == naive.add(a, b));
      }
    }
  }
}

TEST_CASE("field axioms hold exhaustively for q <= 64") {
  for (const auto q : kSmallOrders) {
    const auto f = GaloisField::of_order(q);
    for (std::uint32_t a = 0; a < q; ++a) {
      REQUIRE(f.add(a, f.neg(a)) == 0);
      if (a != 0) REQUIRE(f.mul(a, f.inv(a)) == 1);
      for (std::uint32_t b = 0; b < q; ++b) {
        for (std::uint32_t c = 0; c < q; ++c) check_axioms(f, a, b, c);
      }
    }
  }
}

TEST_CASE("field axioms hold on random triples for larger q") {
  std::mt19937_64 rng(20261016);
  for (const auto q : kLargeOrders) {
    const auto f = GaloisField::of_order(q);
    const NaiveField naive{f.characteristic(), f.modulus()};
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(q - 1));
    for (int i = 0; i < 10000; ++i) {
      const auto a = pick(rng), b = pick(rng), c = pick(rng);
      check_axioms(f, a, b, c);
      REQUIRE(f.mul(a, b) == naive.mul(a, b));
      if (a != 0) REQUIRE(f.mul(a, f.inv(a)) == 1);
    }
  }
}

TEST_CASE("primitive element is the first generator") {
  CHECK(GaloisField::of_order(5).primitive_element().code() == 2);
  CHECK(GaloisField::of_order(7).primitive_element().code() == 3);
  CHECK(GaloisField::of_order(4).primitive_element().to_string() == "x");
  CHECK_THROWS_AS(GaloisField::of_order(2).primitive_element(), precondition_error);

  for (const auto q : kSmallOrders) {
    if (q < 3) continue;
    const auto f = GaloisField::of_order(q);
    const auto xi = f.primitive_element();
    // No earlier element generates the group.
    for (std::uint32_t c = 1; c < xi.code(); ++c) REQUIRE(f.multiplicative_order(c) < q - 1);
    std::set<std::uint32_t> powers;
    std::uint32_t x = 1;
    for (std::uint64_t i = 0; i + 1 < q; ++i) {
      powers.insert(x);
      x = f.mul(x, xi.code());
    }
    REQUIRE(powers.size() == q - 1);
    REQUIRE(x == 1);
  }
}

TEST_CASE("nonzero squares") {
  auto codes = [](const GaloisField& f) {
    std::vector<std::uint32_t> out;
    for (const auto& e : f.nonzero_squares()) out.push_back(e.code());
    return out;
  };
  CHECK(codes(GaloisField::of_order(5)) == std::vector<std::uint32_t>{1, 4});
  CHECK(codes(GaloisField::of_order(13)) == std::vector<std::uint32_t>{1, 3, 4, 9, 10, 12});
  CHECK(codes(GaloisField::of_order(9)).size() == 4);
  for (const auto q : kSmallOrders) {
    const auto f = GaloisField::of_order(q);
    const std::size_t expected = q % 2 == 1 ? (q - 1) / 2 : q - 1;
    REQUIRE(f.nonzero_squares().size() == expected);
  }
}
