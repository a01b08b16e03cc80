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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "projnet/error.hpp"
#include "projnet/topology.hpp"

namespace projnet {

/// One row of a published case-study table. Values are transcribed as
/// printed; `group_size_estimated` marks sizes printed with an asterisk
/// (approximate group sizes).
struct PublishedRow {
  std::string label;
  Family family;
  TopologyParams params;
  std::uint64_t T;
  std::uint64_t R;
  std::uint64_t N;
  std::uint64_t Delta0;
  std::optional<double> subscription;
  std::optional<std::uint64_t> group_size;
  bool group_size_estimated;
  std::optional<std::uint64_t> groups;
  std::uint64_t electrical;
  std::uint64_t optical;
  double cost_per_node;
  double power_per_node;
  std::string preset;
};

struct PublishedTable {
  std::string id;
  std::string title;
  std::vector<PublishedRow> rows;
};

// Transcribed data. Not computed by this library; used as injected cable
// splits and as comparison values only.
inline const std::vector<PublishedTable>& published_tables() {
  static const std::vector<PublishedTable> tables = {
      {"IV",
       "direct networks, about 10000 compute nodes",
       {
           {"Hamming K22^2", Family::hamming, {.n = 22}, 10648, 64, 484, 22, 1.002, 484, false, 22,
            5082, 5082, 1145.41, 8.15, "10k"},
           {"demi-PN(27)", Family::demi_pn, {.q = 27}, 10598, 42, 757, 14, 0.999, 504, true, 22,
            556, 10028, 1282.59, 8.40, "10k"},
           {"SF MMS(19)", Family::mms, {.q = 19}, 9386, 42, 722, 13, 0.991, 494, false, 19, 3971,
            6498, 1294.51, 9.05, "10k"},
           {"PN(23)", Family::pn, {.q = 23}, 9954, 33, 1106, 9, 0.921, 396, true, 26, 1907, 11365,
            1546.83, 10.27, "10k"},
           {"dragonfly(7)", Family::dragonfly, {.h = 7}, 9702, 27, 1386, 7, 0.994, 490, true, 20,
            8926, 4514, 1404.42, 10.80, "10k"},
       }},
      {"V",
       "direct networks, about 25000 compute nodes",
       {
           {"Hamming K29^2", Family::hamming, {.n = 29}, 24389, 85, 841, 29, 1.001, 435, true, 58,
            5684, 17864, 1237.43, 8.21, "25k"},
           {"demi-PN(37)", Family::demi_pn, {.q = 37}, 26733, 57, 1407, 19, 0.999, 532, true, 51,
            620, 26094, 1314.29, 8.40, "25k"},
           {"SF MMS(27)", Family::mms, {.q = 27}, 26244, 59, 1458, 18, 0.976, 486, false, 54,
            10935, 18954, 1344.11, 9.18, "25k"},
           {"PN(31)", Family::pn, {.q = 31}, 25818, 45, 1986, 13, 1.003, 520, true, 51, 3381,
            28395, 1497.77, 9.70, "25k"},
           {"dragonfly(9)", Family::dragonfly, {.h = 9}, 26406, 35, 2934, 9, 0.996, 486, true, 55,
            25101, 13041, 1457.39, 10.89, "25k"},
       }},
      {"VI",
       "indirect networks, all cables optical",
       {
           {"MLFM 22", Family::mlfm, {.n = 22}, 9702, 42, 693, 21, std::nullopt, std::nullopt,
            false, std::nullopt, 0, 9702, 1297.18, 8.4, "10k"},
           {"MLFM 30", Family::mlfm, {.n = 30}, 25230, 58, 1305, 29, std::nullopt, std::nullopt,
            false, std::nullopt, 0, 25230, 1321.76, 8.4, "25k"},
           {"OFT 16", Family::oft, {.q = 16}, 9282, 34, 819, 17, std::nullopt, std::nullopt, false,
            std::nullopt, 0, 9282, 1282.19, 8.4, "10k"},
           {"OFT 23", Family::oft, {.q = 23}, 26544, 48, 1659, 24, std::nullopt, std::nullopt,
            false, std::nullopt, 0, 26544, 1312.14, 8.4, "25k"},
       }},
  };
  return tables;
}

inline const PublishedTable& published_table(const std::string& id) {
  for (const auto& t : published_tables()) {
    if (t.id == id) return t;
  }
  throw precondition_error("unknown table '" + id + "' (expected IV, V or VI)");
}

}  // namespace projnet
