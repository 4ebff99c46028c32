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

#include <cstddef>
#include <span>
#include <vector>

namespace ucqnn {

struct AdamOptions {
    double learning_rate = 0.05;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
};

/// Adam with bias-corrected moments; step() moves against the gradient.
class Adam {
  public:
    Adam(std::size_t size, AdamOptions options);

    void step(std::span<double> params, std::span<const double> grad);
    void reset();

    [[nodiscard]] std::size_t steps() const noexcept { return t_; }
    [[nodiscard]] const AdamOptions &options() const noexcept { return opt_; }

  private:
    AdamOptions opt_;
    std::vector<double> m_;
    std::vector<double> v_;
    std::size_t t_ = 0;
};

} // namespace ucqnn
