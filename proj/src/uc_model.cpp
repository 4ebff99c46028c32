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
#include "ucqnn/uc_model.hpp"

#include "ucqnn/errors.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace ucqnn {

namespace {

using nlohmann::json;

constexpr double kGranularityScale = 1e9;

bool finite(double v) { return std::isfinite(v); }

void validate_unit(const UnitSpec &u, std::size_t index) {
    const auto where = "unit " + std::to_string(index + 1) + ": ";
    if (!finite(u.a) || !finite(u.b) || !finite(u.c)) {
        throw ValidationError(where + "cost coefficients must be finite");
    }
    if (u.c < 0.0) {
        throw ValidationError(where + "opening cost c must be >= 0");
    }
    if (!finite(u.p) || u.p <= 0.0) {
        throw ValidationError(where + "power p must be > 0");
    }
    if (u.p_max && (!finite(*u.p_max) || *u.p_max < u.p)) {
        throw ValidationError(where + "p_max must be >= p");
    }
}

// Smallest k with c_c * (2^k - 1) >= range.
int bits_to_cover(double c_c, double range) {
    if (range <= 0.0) {
        return 0;
    }
    const double steps = range / c_c;
    for (int k = 0; k <= kMaxSlackBits; ++k) {
        if (std::ldexp(1.0, k) - 1.0 >= steps - 1e-9) {
            return k;
        }
    }
    throw ConfigError("slack range " + std::to_string(range) +
                      " needs more than " + std::to_string(kMaxSlackBits) +
                      " bits at granularity " + std::to_string(c_c));
}

double read_number(const json &obj, const std::string &key,
                   const std::string &path) {
    if (!obj.contains(key)) {
        throw ParseError(path + key, "missing");
    }
    const auto &v = obj.at(key);
    if (!v.is_number()) {
        throw ParseError(path + key, "expected a number");
    }
    return v.get<double>();
}

std::optional<double> read_optional_number(const json &obj,
                                           const std::string &key,
                                           const std::string &path) {
    if (!obj.contains(key) || obj.at(key).is_null()) {
        return std::nullopt;
    }
    return read_number(obj, key, path);
}

} // namespace

double unit_cost(const UnitSpec &unit) noexcept {
    return unit.a * unit.p * unit.p + unit.b * unit.p + unit.c;
}

double fleet_cost(const UCInstance &instance) noexcept {
    double total = 0.0;
    for (const auto &u : instance.units()) {
        total += unit_cost(u);
    }
    return total;
}

double common_granularity(const std::vector<double> &values) {
    std::int64_t g = 0;
    for (double v : values) {
        const double scaled = std::abs(v) * kGranularityScale;
        const auto rounded = static_cast<std::int64_t>(std::llround(scaled));
        if (rounded != 0) {
            g = std::gcd(g, rounded);
        }
    }
    if (g == 0) {
        throw ConfigError("cannot derive slack granularity from all-zero data");
    }
    return static_cast<double>(g) / kGranularityScale;
}

UCInstance UCInstance::create(InstanceSpec spec) {
    if (spec.units.empty()) {
        throw ValidationError("instance needs at least one unit");
    }
    for (std::size_t i = 0; i < spec.units.size(); ++i) {
        validate_unit(spec.units[i], i);
    }
    if (!finite(spec.load) || spec.load <= 0.0) {
        throw ValidationError("load L must be > 0");
    }
    if (spec.spare) {
        if (!finite(*spec.spare) || *spec.spare < 0.0) {
            throw ValidationError("spare S must be >= 0");
        }
        for (std::size_t i = 0; i < spec.units.size(); ++i) {
            if (!spec.units[i].p_max) {
                throw ValidationError("unit " + std::to_string(i + 1) +
                                      ": p_max required when spare is set");
            }
        }
    }

    const auto &req = spec.penalty;
    if (req.lambda1 && !(finite(*req.lambda1) && *req.lambda1 > 0.0)) {
        throw ValidationError("lambda1 must be > 0");
    }
    if (req.lambda2 && !(finite(*req.lambda2) && *req.lambda2 > 0.0)) {
        throw ValidationError("lambda2 must be > 0");
    }
    if (req.c_c && !(finite(*req.c_c) && *req.c_c > 0.0)) {
        throw ValidationError("c_c must be > 0");
    }
    if (req.slack_bits &&
        (*req.slack_bits < 0 || *req.slack_bits > kMaxSlackBits)) {
        throw ValidationError("slack bit count k must be in [0, " +
                              std::to_string(kMaxSlackBits) + "]");
    }

    UCInstance inst;
    inst.units_ = std::move(spec.units);
    inst.load_ = spec.load;
    inst.spare_ = spec.spare;
    inst.requested_ = req;

    double total_cost = 0.0;
    double min_power = std::numeric_limits<double>::infinity();
    for (const auto &u : inst.units_) {
        total_cost += unit_cost(u);
        min_power = std::min(min_power, u.p);
    }
    // An all-free fleet still needs a positive balance penalty.
    const double default_lambda =
        (total_cost > 0.0 ? 10.0 * total_cost : 1.0) / (min_power * min_power);

    PenaltyConfig resolved;
    resolved.lambda1 = req.lambda1.value_or(default_lambda);
    if (inst.spare_) {
        resolved.lambda2 = req.lambda2.value_or(default_lambda);

        std::vector<double> grid_values;
        double max_total = 0.0;
        for (const auto &u : inst.units_) {
            grid_values.push_back(*u.p_max);
            max_total += *u.p_max;
        }
        grid_values.push_back(inst.load_);
        grid_values.push_back(*inst.spare_);
        const double c_c = req.c_c ? *req.c_c : common_granularity(grid_values);
        const double range = max_total - inst.load_ - *inst.spare_;

        int k = 0;
        if (req.slack_bits) {
            k = *req.slack_bits;
            const double reach = c_c * (std::ldexp(1.0, k) - 1.0);
            if (reach < range - 1e-9 * std::max(1.0, std::abs(range))) {
                throw ConfigError("slack range c_c*(2^k-1) = " +
                                  std::to_string(reach) +
                                  " does not cover sum(p_max) - L - S = " +
                                  std::to_string(range));
            }
        } else {
            k = bits_to_cover(c_c, range);
        }
        resolved.c_c = c_c;
        resolved.slack_bits = k;
    }
    inst.resolved_ = resolved;
    return inst;
}

UCInstance UCInstance::with_demand(double load,
                                   std::optional<double> spare) const {
    InstanceSpec s{units_, load, spare, requested_};
    return create(std::move(s));
}

UCInstance UCInstance::with_penalty(const PenaltyConfig &overrides) const {
    PenaltyConfig merged = requested_;
    if (overrides.lambda1) {
        merged.lambda1 = overrides.lambda1;
    }
    if (overrides.lambda2) {
        merged.lambda2 = overrides.lambda2;
    }
    if (overrides.c_c) {
        merged.c_c = overrides.c_c;
    }
    if (overrides.slack_bits) {
        merged.slack_bits = overrides.slack_bits;
    }
    return create(InstanceSpec{units_, load_, spare_, merged});
}

InstanceSpec UCInstance::spec() const {
    return InstanceSpec{units_, load_, spare_, requested_};
}

bool UCInstance::operator==(const UCInstance &other) const {
    return units_ == other.units_ && load_ == other.load_ &&
           spare_ == other.spare_ && resolved_ == other.resolved_;
}

InstanceSpec parse_instance(std::string_view document) {
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::parse_error &e) {
        throw ParseError("<document>", e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("<document>", "expected a JSON object");
    }

    InstanceSpec spec;
    if (!doc.contains("units")) {
        throw ParseError("units", "missing");
    }
    const auto &units = doc.at("units");
    if (!units.is_array()) {
        throw ParseError("units", "expected an array");
    }
    for (std::size_t i = 0; i < units.size(); ++i) {
        const auto path = "units[" + std::to_string(i) + "].";
        const auto &u = units[i];
        if (!u.is_object()) {
            throw ParseError("units[" + std::to_string(i) + "]",
                             "expected an object");
        }
        UnitSpec unit;
        unit.a = read_number(u, "a", path);
        unit.b = read_number(u, "b", path);
        unit.c = read_number(u, "c", path);
        unit.p = read_number(u, "p", path);
        unit.p_max = read_optional_number(u, "p_max", path);
        spec.units.push_back(unit);
    }
    spec.load = read_number(doc, "load", "");
    spec.spare = read_optional_number(doc, "spare", "");

    if (doc.contains("penalty") && !doc.at("penalty").is_null()) {
        const auto &pen = doc.at("penalty");
        if (!pen.is_object()) {
            throw ParseError("penalty", "expected an object");
        }
        spec.penalty.lambda1 = read_optional_number(pen, "lambda1", "penalty.");
        spec.penalty.lambda2 = read_optional_number(pen, "lambda2", "penalty.");
        spec.penalty.c_c = read_optional_number(pen, "c_c", "penalty.");
        if (pen.contains("k") && !pen.at("k").is_null()) {
            if (!pen.at("k").is_number_integer()) {
                throw ParseError("penalty.k", "expected an integer");
            }
            spec.penalty.slack_bits = pen.at("k").get<int>();
        }
    }
    return spec;
}

UCInstance load_instance(std::string_view document) {
    return UCInstance::create(parse_instance(document));
}

UCInstance load_instance_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(path.string(), "cannot open file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_instance(buf.str());
}

std::string save_instance(const UCInstance &instance) {
    json doc;
    doc["units"] = json::array();
    for (const auto &u : instance.units()) {
        json unit{{"a", u.a}, {"b", u.b}, {"c", u.c}, {"p", u.p}};
        if (u.p_max) {
            unit["p_max"] = *u.p_max;
        }
        doc["units"].push_back(unit);
    }
    doc["load"] = instance.load();
    if (instance.spare()) {
        doc["spare"] = *instance.spare();
    }
    json pen{{"lambda1", instance.lambda1()}};
    if (instance.double_constraint()) {
        pen["lambda2"] = instance.lambda2();
        pen["c_c"] = instance.slack_granularity();
        pen["k"] = static_cast<int>(instance.slack_bits());
    }
    doc["penalty"] = pen;
    return doc.dump(2) + "\n";
}

void save_instance_file(const UCInstance &instance,
                        const std::filesystem::path &path) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write " + path.string());
    }
    out << save_instance(instance);
}

} // namespace ucqnn
