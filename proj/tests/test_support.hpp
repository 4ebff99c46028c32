// Copyright 2026 The ucqnn Authors
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

#include "ucqnn/uc_model.hpp"

#include <random>
#include <string>

namespace ucqnn::testing {

inline std::string data_path(const std::string &file) {
    return std::string(UCQNN_DATA_DIR) + "/" + file;
}

inline UCInstance five_unit(double load, double spare) {
    return load_instance_file(data_path("units5.json")).with_demand(load, spare);
}

inline UCInstance ten_unit(double load) {
    return load_instance_file(data_path("units10.json"))
        .with_demand(load, std::nullopt);
}

/// The four (L, S) operating points and optimal unit strings of the 5-unit
/// double-constraint experiments.
struct Scenario {
    double load;
    double spare;
    const char *units;
};
inline constexpr Scenario kOperatingPoints[] = {
    {0.6, 0.2, "10000"},
    {0.9, 0.2, "11000"},
    {1.1, 0.4, "11010"},
    {1.4, 0.5, "11011"},
};

} // namespace ucqnn::testing
