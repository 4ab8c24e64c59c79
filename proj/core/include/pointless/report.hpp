/*
   Copyright 2026 The pointless Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef POINTLESS_REPORT_HPP
#define POINTLESS_REPORT_HPP

#include <string>

#include "pointless/params.hpp"
#include "pointless/search.hpp"
#include "pointless/table.hpp"

namespace pointless {

/// JSON renderings with a fixed key order. Timings appear only when asked
/// for, so that output is byte-stable for a given seed and thread count.
struct JsonOptions {
  bool timings = false;
  bool hex = false;
  int indent = 2;
};

std::string extension_json(const GeometricExtension& e, int n, const PointlessReport* report, const JsonOptions& opts = {});
std::string table_json(const std::vector<TableRowResult>& rows, std::uint64_t seed, const JsonOptions& opts = {});
std::string parameters_json(const ParameterChoice& pc, const JsonOptions& opts = {});
std::string euler_json(const EulerReport& rep, const JsonOptions& opts = {});
std::string bounds_json(const BoundsReport& rep, const JsonOptions& opts = {});

}  // namespace pointless

#endif
