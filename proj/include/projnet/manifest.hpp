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

#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "projnet/error.hpp"

namespace projnet {

inline constexpr const char* kVersion = "0.1.0";

/// Hex SHA-256 of a byte string.
inline std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  detail::ensure(EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) == 1,
                 "SHA-256 computation failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

struct OutputDigest {
  std::string path;
  std::uint64_t bytes = 0;
  std::string sha256;
};

/// Record of one CLI run: what was asked and what was written.
struct RunManifest {
  std::string command;
  std::vector<std::string> arguments;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> config_path;
  std::vector<OutputDigest> outputs;

  void add_output(const std::string& path, const std::string& contents) {
    outputs.push_back({path, contents.size(), sha256_hex(contents)});
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["command"] = command;
    j["arguments"] = arguments;
    j["seed"] = seed ? nlohmann::ordered_json(*seed) : nlohmann::ordered_json(nullptr);
    j["config"] = config_path ? nlohmann::ordered_json(*config_path) : nlohmann::ordered_json(nullptr);
    j["versions"] = {{"projnet", kVersion}};
    nlohmann::ordered_json outs = nlohmann::ordered_json::array();
    for (const auto& o : outputs) {
      outs.push_back({{"path", o.path}, {"bytes", o.bytes}, {"sha256", o.sha256}});
    }
    j["outputs"] = std::move(outs);
    return j;
  }
};

/// Writes contents to path, or to stdout when path is empty or "-".
inline void write_output(const std::string& path, const std::string& contents) {
  if (path.empty() || path == "-") {
    std::fwrite(contents.data(), 1, contents.size(), stdout);
    std::fflush(stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  detail::require(static_cast<bool>(out), "cannot open output file '" + path + "'");
  out << contents;
  detail::require(static_cast<bool>(out), "failed writing output file '" + path + "'");
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  detail::require(static_cast<bool>(in), "cannot open input file '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace projnet
