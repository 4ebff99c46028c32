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
 * Penalty-method QUBO encoding of a UC instance and its Ising (spin) form.
 *
 * Variable i (0-based here, 1-based in files and reports) is unit i+1 for
 * i < n and slack bit j = i-n+1 for i >= n. In an assignment packed into an
 * integer, bit i holds x_i. Spins follow x = (1 - z) / 2, so x=0 is z=+1.
 */
#pragma once

#include "ucqnn/uc_model.hpp"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ucqnn {

/// Largest variable count the dense encoder accepts.
inline constexpr std::size_t kMaxEncodedVars = 64;

/// constant + sum_i coef[i] * x_i
struct LinearForm {
    std::vector<double> coef;
    double constant = 0.0;

    [[nodiscard]] double evaluate(std::uint64_t bits) const noexcept;
};

/// Symbolic aggregates over the binary variables of an instance.
struct Aggregates {
    LinearForm cost;      ///< F = sum f_i x_i
    LinearForm power;     ///< P = sum p_i x_i
    LinearForm max_power; ///< M = sum p_max,i x_i (zero without spare)
    LinearForm slack;     ///< R = sum 2^(j-1) x_(n+j)
};

/// Degree-2 polynomial over binary variables; quadratic terms stored in the
/// upper triangle (i < j) of a dense n_vars x n_vars array.
class QuboPolynomial {
  public:
    QuboPolynomial() = default;
    explicit QuboPolynomial(std::size_t n_vars);

    [[nodiscard]] std::size_t num_vars() const noexcept { return n_; }
    [[nodiscard]] double linear(std::size_t i) const { return linear_.at(i); }
    [[nodiscard]] double quadratic(std::size_t i, std::size_t j) const;
    [[nodiscard]] double constant() const noexcept { return constant_; }

    void add_constant(double v) noexcept { constant_ += v; }
    void add_linear(std::size_t i, double v);
    /// Adds v * x_i * x_j; i == j folds into the linear term (x^2 = x).
    void add_quadratic(std::size_t i, std::size_t j, double v);
    /// Adds weight * form.
    void add_form(const LinearForm &form, double weight);
    /// Adds weight * form^2, expanded with x_i^2 = x_i.
    void add_square(const LinearForm &form, double weight);

    [[nodiscard]] double evaluate(std::uint64_t bits) const;
    [[nodiscard]] double evaluate(std::span<const std::uint8_t> x) const;

  private:
    std::size_t n_ = 0;
    std::vector<double> linear_;
    std::vector<double> quad_;
    double constant_ = 0.0;
};

/// H = offset + sum_i h_i z_i + sum_{i<j} J_ij z_i z_j.
class IsingModel {
  public:
    IsingModel() = default;
    explicit IsingModel(std::size_t n_vars);

    [[nodiscard]] std::size_t num_vars() const noexcept { return n_; }
    [[nodiscard]] double h(std::size_t i) const { return h_.at(i); }
    [[nodiscard]] double coupling(std::size_t i, std::size_t j) const;
    [[nodiscard]] double offset() const noexcept { return offset_; }

    void set_offset(double v) noexcept { offset_ = v; }
    void add_offset(double v) noexcept { offset_ += v; }
    void add_h(std::size_t i, double v);
    void add_coupling(std::size_t i, std::size_t j, double v);

    /// Energy for explicit spins; each entry must be +1 or -1.
    [[nodiscard]] double energy(std::span<const int> spins) const;
    /// Energy of the spin image of a packed binary assignment.
    [[nodiscard]] double energy_of_bits(std::uint64_t bits) const;

    IsingModel &operator+=(const IsingModel &other);

  private:
    std::size_t n_ = 0;
    std::vector<double> h_;
    std::vector<double> j_;
    double offset_ = 0.0;
};

[[nodiscard]] IsingModel operator+(IsingModel lhs, const IsingModel &rhs);

/// Weights used by penalized_objective.
struct PenaltyWeights {
    double balance = 0.0;  ///< lambda1
    double spare = 0.0;    ///< lambda2
    double slack_unit = 0.0; ///< c_c
    double load = 0.0;     ///< L
    double spare_margin = 0.0; ///< S
    bool has_spare = false;
};

[[nodiscard]] Aggregates build_aggregates(const UCInstance &instance);

/// F + lambda1 (P - L)^2 [+ lambda2 (M - c_c R - L - S)^2].
[[nodiscard]] QuboPolynomial penalized_objective(const Aggregates &agg,
                                                 const PenaltyWeights &w);

/// The penalized QUBO of an instance using its resolved penalty settings.
[[nodiscard]] QuboPolynomial build_qubo(const UCInstance &instance);

/// Substitutes x_i = (1 - z_i) / 2.
[[nodiscard]] IsingModel to_ising(const QuboPolynomial &q);

/// Ising energy for explicit spins; throws ContractViolation on a length
/// mismatch or a spin that is not +-1.
[[nodiscard]] double ising_energy(const IsingModel &m,
                                  std::span<const int> spins);

/// Spin vector for a packed binary assignment.
[[nodiscard]] std::vector<int> spins_of_bits(std::uint64_t bits,
                                             std::size_t n_vars);

/// Renders x_1 x_2 ... x_n left to right.
[[nodiscard]] std::string bitstring_of(std::uint64_t bits, std::size_t n_vars);
[[nodiscard]] std::uint64_t bits_of(std::string_view bitstring);

/**
 * Coefficient list: an `offset <value>` line followed by `i j value` lines
 * with 1-based indices; `i i value` is the linear term h_i.
 */
void write_coefficients(std::ostream &out, const IsingModel &m);
[[nodiscard]] IsingModel read_coefficients(std::istream &in);

} // namespace ucqnn
