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
/**
 * @file
 * Single-period unit-commitment instances: generator fleet, load, optional
 * spare-capacity requirement and the penalty/slack settings used when the
 * instance is encoded as a QUBO.
 */
#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ucqnn {

/// One generator. Cost of running it at output `p` is a*p^2 + b*p + c.
struct UnitSpec {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double p = 0.0;
    std::optional<double> p_max;

    bool operator==(const UnitSpec &) const = default;
};

/**
 * Penalty weights and slack encoding. Unset fields are filled with defaults
 * when an instance is created:
 *
 *  - lambda1 = lambda2 = 10 * (sum of unit costs) / g^2 with g = min_i p_i,
 *    so the smallest balance violation costs more than the whole fleet.
 *  - c_c is the greatest common granularity of every p_max, L and S.
 *  - slack_bits is the smallest k with c_c * (2^k - 1) >= sum(p_max) - L - S.
 *
 * lambda2, c_c and slack_bits only apply to instances with a spare constraint.
 */
struct PenaltyConfig {
    std::optional<double> lambda1;
    std::optional<double> lambda2;
    std::optional<double> c_c;
    std::optional<int> slack_bits;

    bool operator==(const PenaltyConfig &) const = default;
};

/// Raw instance contents as read from a document, before validation.
struct InstanceSpec {
    std::vector<UnitSpec> units;
    double load = 0.0;
    std::optional<double> spare;
    PenaltyConfig penalty;
};

/// Upper bound on the slack bit count accepted by validation.
inline constexpr int kMaxSlackBits = 40;

/**
 * Validated, immutable UC instance. Units keep file order; unit i (1-based)
 * is binary variable i and qubit i-1 everywhere downstream.
 */
class UCInstance {
  public:
    /// Validates `spec` and resolves penalty defaults. Throws ValidationError
    /// or ConfigError.
    static UCInstance create(InstanceSpec spec);

    [[nodiscard]] const std::vector<UnitSpec> &units() const noexcept {
        return units_;
    }
    [[nodiscard]] std::size_t num_units() const noexcept {
        return units_.size();
    }
    [[nodiscard]] double load() const noexcept { return load_; }
    [[nodiscard]] std::optional<double> spare() const noexcept {
        return spare_;
    }
    [[nodiscard]] bool double_constraint() const noexcept {
        return spare_.has_value();
    }

    /// Fully resolved penalty settings. For single-constraint instances only
    /// lambda1 is set.
    [[nodiscard]] const PenaltyConfig &penalty() const noexcept {
        return resolved_;
    }
    /// Penalty settings as requested before defaults were applied.
    [[nodiscard]] const PenaltyConfig &requested_penalty() const noexcept {
        return requested_;
    }

    [[nodiscard]] double lambda1() const { return *resolved_.lambda1; }
    /// 0 for single-constraint instances.
    [[nodiscard]] double lambda2() const {
        return resolved_.lambda2.value_or(0.0);
    }
    /// 0 for single-constraint instances.
    [[nodiscard]] double slack_granularity() const {
        return resolved_.c_c.value_or(0.0);
    }
    /// Number of auxiliary qubits k (0 without a spare constraint).
    [[nodiscard]] std::size_t slack_bits() const {
        return static_cast<std::size_t>(resolved_.slack_bits.value_or(0));
    }
    /// n + k.
    [[nodiscard]] std::size_t num_vars() const {
        return num_units() + slack_bits();
    }

    /// Same fleet and requested penalties with a different load/spare.
    /// Defaults are re-resolved for the new operating point.
    [[nodiscard]] UCInstance with_demand(double load,
                                         std::optional<double> spare) const;

    /// Same fleet and demand with some penalty fields overridden.
    [[nodiscard]] UCInstance with_penalty(const PenaltyConfig &overrides) const;

    [[nodiscard]] InstanceSpec spec() const;

    /// Structural equality over units, demand and resolved penalties.
    bool operator==(const UCInstance &other) const;

  private:
    UCInstance() = default;

    std::vector<UnitSpec> units_;
    double load_ = 0.0;
    std::optional<double> spare_;
    PenaltyConfig requested_;
    PenaltyConfig resolved_;
};

/// a*p^2 + b*p + c.
[[nodiscard]] double unit_cost(const UnitSpec &unit) noexcept;

/// Sum of unit_cost over the whole fleet.
[[nodiscard]] double fleet_cost(const UCInstance &instance) noexcept;

/// Largest g such that every value is an integer multiple of g, to within
/// 1e-9 absolute. Zero entries are ignored. Throws ConfigError if no value is
/// positive.
[[nodiscard]] double common_granularity(const std::vector<double> &values);

/// Parses a JSON instance document. Throws ParseError naming the field.
[[nodiscard]] InstanceSpec parse_instance(std::string_view document);

/// parse_instance followed by UCInstance::create.
[[nodiscard]] UCInstance load_instance(std::string_view document);
[[nodiscard]] UCInstance load_instance_file(const std::filesystem::path &path);

/// Serializes the instance with resolved penalty settings.
[[nodiscard]] std::string save_instance(const UCInstance &instance);
void save_instance_file(const UCInstance &instance,
                        const std::filesystem::path &path);

} // namespace ucqnn
