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
#include "ucqnn/optimizer.hpp"

#include "ucqnn/errors.hpp"

#include <cmath>

namespace ucqnn {

Adam::Adam(std::size_t size, AdamOptions options)
    : opt_(options), m_(size, 0.0), v_(size, 0.0) {
    if (!(options.learning_rate > 0.0)) {
        throw ContractViolation("learning rate must be > 0");
    }
}

void Adam::step(std::span<double> params, std::span<const double> grad) {
    if (params.size() != m_.size() || grad.size() != m_.size()) {
        throw ContractViolation("Adam: parameter/gradient size mismatch");
    }
    ++t_;
    const double t = static_cast<double>(t_);
    const double c1 = 1.0 - std::pow(opt_.beta1, t);
    const double c2 = 1.0 - std::pow(opt_.beta2, t);
    for (std::size_t i = 0; i < params.size(); ++i) {
        m_[i] = opt_.beta1 * m_[i] + (1.0 - opt_.beta1) * grad[i];
        v_[i] = opt_.beta2 * v_[i] + (1.0 - opt_.beta2) * grad[i] * grad[i];
        const double m_hat = m_[i] / c1;
        const double v_hat = v_[i] / c2;
        params[i] -= opt_.learning_rate * m_hat / (std::sqrt(v_hat) + opt_.epsilon);
    }
}

void Adam::reset() {
    std::fill(m_.begin(), m_.end(), 0.0);
    std::fill(v_.begin(), v_.end(), 0.0);
    t_ = 0;
}

} // namespace ucqnn
