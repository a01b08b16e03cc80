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

#include <sstream>

#include "projnet/generators.hpp"
#include "projnet/io.hpp"
#include "projnet/manifest.hpp"

using namespace projnet;

namespace {

Topology roundtrip_edgelist(const Topology& g) {
  std::ostringstream out;
  write_edgelist(g, out);
  std::istringstream in(out.str());
  return read_edgelist(in);
}

}  // namespace

TEST_CASE("edge list format") {
  const auto g = build_pn(2);
  std::ostringstream out;
  write_edgelist(g, out);
  const auto text = out.str();
  CHECK(std::count(text.begin(), text.end(), '\n') == 21);
  CHECK(text.rfind("0 8\n0 10\n0 12\n", 0) == 0);
  const auto back = roundtrip_edgelist(g);
  CHECK(back.edges() == g.edges());
  CHECK(back.family() == Family::custom);
}

TEST_CASE("edge list round trip preserves metrics") {
  for (const auto& g : {build_demi_pn(5), build_mms(4), build_dragonfly(2), build_paley(17)}) {
    const auto a = analyze(g);
    const auto b = analyze(roundtrip_edgelist(g));
    CHECK(a.arc_loads == b.arc_loads);
    CHECK(a.kbar == b.kbar);
    CHECK(a.u == b.u);
  }
}

TEST_CASE("malformed edge lists") {
  auto read = [](const std::string& s) {
    std::istringstream in(s);
    return read_edgelist(in);
  };
  CHECK(read("# comment\n0 1\n\n1 2  # tail\n").num_edges() == 2);
  CHECK_THROWS_AS(read(""), precondition_error);
  CHECK_THROWS_AS(read("0 1\nx y\n"), precondition_error);
  CHECK_THROWS_AS(read("0 1 2\n"), precondition_error);
  CHECK_THROWS_AS(read("0\n"), precondition_error);
  CHECK_THROWS_AS(read("0 -1\n"), precondition_error);
  CHECK_THROWS_AS(read("0 1\n2 3\n"), precondition_error);  // disconnected
  CHECK_THROWS_AS(read("0 1\n1 1\n"), precondition_error);  // self-loop
  CHECK_THROWS_AS(read("0 1\n1 0\n"), precondition_error);  // duplicate
  CHECK_THROWS_AS(read("0 2\n"), precondition_error);       // vertex 1 missing
}

TEST_CASE("graph JSON round trip keeps roles") {
  const auto g = build_oft(3);
  std::ostringstream out;
  write_graph(g, GraphFormat::json, out);
  const auto j = Json::parse(out.str());
  CHECK(j["schema"] == 1);
  CHECK(j["family"] == "oft");
  CHECK(j["vertices"] == 39);
  std::istringstream in(out.str());
  const auto back = read_graph_json(in);
  CHECK(back.edges() == g.edges());
  CHECK(back.leaves() == g.leaves());
  CHECK(analyze(back, Scope::leaf).arc_loads == analyze(g, Scope::leaf).arc_loads);

  std::istringstream bad("{\"schema\": 2, \"vertices\": 2, \"edges\": [[0, 1]]}");
  CHECK_THROWS_AS(read_graph_json(bad), precondition_error);
  std::istringstream broken("{\"schema\": 1,");
  CHECK_THROWS_AS(read_graph_json(broken), precondition_error);
  std::istringstream missing("{\"schema\": 1, \"edges\": []}");
  CHECK_THROWS_AS(read_graph_json(missing), precondition_error);
}

TEST_CASE("DOT output") {
  std::ostringstream out;
  write_dot(build_mms(3), out);
  const auto s = out.str();
  CHECK(s.rfind("graph \"mms(q=3)\" {", 0) == 0);
  CHECK(s.find("style=dashed") != std::string::npos);
  std::ostringstream oft;
  write_dot(build_oft(2), oft);
  CHECK(oft.str().find("shape=box") != std::string::npos);
}

TEST_CASE("metrics JSON keeps exact rationals") {
  const auto g = build_demi_pn(2);
  const auto j = metrics_json(g, analyze(g));
  CHECK(j["u"]["numerator"] == "11");
  CHECK(j["u"]["denominator"] == "12");
  CHECK(j["distance_distribution"] == Json::array({0, 18, 24}));
  CHECK(j["kbar"]["decimal"].get<double>() == Catch::Approx(11.0 / 7));
  const auto m = build_mms(3);
  CHECK(metrics_json(m, analyze(m)).contains("load_by_class"));
}

TEST_CASE("CSV outputs") {
  const auto g = build_pn(2);
  const auto r = analyze(g);
  std::ostringstream d, l;
  write_distance_csv(r, d);
  CHECK(d.str() == "distance,count\n1,42\n2,84\n3,56\n");
  write_load_histogram_csv(r, l);
  CHECK(l.str() == "load,arcs\n" + to_fraction_string(r.max_load) + ",42\n");
}

TEST_CASE("manifest digests") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  RunManifest m;
  m.command = "generate";
  m.arguments = {"generate", "pn", "--q", "2"};
  m.add_output("-", "0 1\n");
  const auto j = m.to_json();
  CHECK(j["outputs"][0]["bytes"] == 4);
  CHECK(j["versions"]["projnet"] == kVersion);
  CHECK(j["seed"].is_null());
}
