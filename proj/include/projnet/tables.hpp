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

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "projnet/design.hpp"
#include "projnet/generators.hpp"
#include "projnet/reference_tables.hpp"

namespace projnet {

/// `injected` prices the published cable splits; `heuristic` prices this
/// library's own layouts.
enum class TableMode { injected, heuristic };

inline TableMode parse_table_mode(std::string_view s) {
  if (s == "injected") return TableMode::injected;
  if (s == "heuristic") return TableMode::heuristic;
  throw precondition_error("unknown table mode '" + std::string(s) +
                           "' (expected injected or heuristic)");
}

struct TableRow {
  const PublishedRow* published = nullptr;
  DesignReport design;
  std::optional<std::uint64_t> group_size;
  std::optional<std::uint64_t> groups;
};

struct TableOptions {
  TableMode mode = TableMode::injected;
  std::uint64_t seed = 1;
  AnalysisOptions analysis{};
};

/// Rebuilds each network of a published table, dimensions it and prices it
/// under the table's cost preset. Heuristic mode asks the greedy search for
/// the published group count.
inline std::vector<TableRow> reproduce_table(const std::string& id, const TableOptions& o = {}) {
  const auto& table = published_table(id);
  std::vector<TableRow> rows;
  for (const auto& ref : table.rows) {
    DesignOptions d;
    d.config = cost_preset(ref.preset);
    d.seed = o.seed;
    d.analysis = o.analysis;
    d.groups = ref.groups;
    if (o.mode == TableMode::injected) d.injected_split = {{ref.electrical, ref.optical}};
    TableRow row;
    row.published = &ref;
    row.design = design(build(ref.family, ref.params), d);
    if (row.design.layout) {
      row.group_size = row.design.layout->typical_group_terminals();
      row.groups = row.design.layout->num_groups();
      if (row.design.layout->strategy == "all-optical") row.group_size = row.design.Delta0();
    } else {
      row.group_size = ref.group_size;
      row.groups = ref.groups;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Column order: topology, structural columns, layout, price.
inline std::string table_csv(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "topology,T,R,N,Delta0,subscription,group_size,groups,electrical,optical,"
         "cost_per_node,power_per_node\n";
  auto opt = [](const std::optional<std::uint64_t>& v) {
    return v ? std::to_string(*v) : std::string();
  };
  for (const auto& r : rows) {
    const auto& d = r.design;
    out << r.published->label << ',' << d.T << ',' << d.R << ',' << d.N << ',' << d.Delta0() << ','
        << to_decimal_string(d.subscription(), 3) << ',' << opt(r.group_size) << ','
        << opt(r.groups) << ',' << d.electrical << ',' << d.optical << ','
        << to_decimal_string(d.price.cost_per_node, 2) << ','
        << to_decimal_string(d.price.power_per_node, 2) << '\n';
  }
  return out.str();
}

}  // namespace projnet
