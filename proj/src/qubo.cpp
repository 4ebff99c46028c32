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
#include "ucqnn/qubo.hpp"

#include "ucqnn/errors.hpp"

#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace ucqnn {

namespace {

void check_size(std::size_t n) {
    if (n > kMaxEncodedVars) {
        throw CapacityError("at most " + std::to_string(kMaxEncodedVars) +
                            " variables supported, got " + std::to_string(n));
    }
}

double bit(std::uint64_t bits, std::size_t i) {
    return static_cast<double>((bits >> i) & 1U);
}

} // namespace

double LinearForm::evaluate(std::uint64_t bits) const noexcept {
    double v = constant;
    for (std::size_t i = 0; i < coef.size(); ++i) {
        v += coef[i] * bit(bits, i);
    }
    return v;
}

QuboPolynomial::QuboPolynomial(std::size_t n_vars)
    : n_(n_vars), linear_(n_vars, 0.0), quad_(n_vars * n_vars, 0.0) {
    check_size(n_vars);
}

double QuboPolynomial::quadratic(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_ || i == j) {
        throw ContractViolation("quadratic index out of range");
    }
    return i < j ? quad_[i * n_ + j] : quad_[j * n_ + i];
}

void QuboPolynomial::add_linear(std::size_t i, double v) {
    if (i >= n_) {
        throw ContractViolation("linear index out of range");
    }
    linear_[i] += v;
}

void QuboPolynomial::add_quadratic(std::size_t i, std::size_t j, double v) {
    if (i >= n_ || j >= n_) {
        throw ContractViolation("quadratic index out of range");
    }
    if (i == j) {
        linear_[i] += v;
    } else if (i < j) {
        quad_[i * n_ + j] += v;
    } else {
        quad_[j * n_ + i] += v;
    }
}

void QuboPolynomial::add_form(const LinearForm &form, double weight) {
    constant_ += weight * form.constant;
    for (std::size_t i = 0; i < form.coef.size(); ++i) {
        add_linear(i, weight * form.coef[i]);
    }
}

void QuboPolynomial::add_square(const LinearForm &form, double weight) {
    // (c + sum a_i x_i)^2 = c^2 + sum (2 c a_i + a_i^2) x_i
    //                       + sum_{i<j} 2 a_i a_j x_i x_j
    const auto &a = form.coef;
    const double c = form.constant;
    constant_ += weight * c * c;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0.0) {
            continue;
        }
        add_linear(i, weight * (2.0 * c * a[i] + a[i] * a[i]));
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            if (a[j] != 0.0) {
                add_quadratic(i, j, weight * 2.0 * a[i] * a[j]);
            }
        }
    }
}

double QuboPolynomial::evaluate(std::uint64_t bits) const {
    double v = constant_;
    for (std::size_t i = 0; i < n_; ++i) {
        if (((bits >> i) & 1U) == 0) {
            continue;
        }
        v += linear_[i];
        for (std::size_t j = i + 1; j < n_; ++j) {
            if ((bits >> j) & 1U) {
                v += quad_[i * n_ + j];
            }
        }
    }
    return v;
}

double QuboPolynomial::evaluate(std::span<const std::uint8_t> x) const {
    if (x.size() != n_) {
        throw ContractViolation("assignment length does not match polynomial");
    }
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < n_; ++i) {
        if (x[i] > 1) {
            throw ContractViolation("assignment entries must be 0 or 1");
        }
        bits |= static_cast<std::uint64_t>(x[i]) << i;
    }
    return evaluate(bits);
}

IsingModel::IsingModel(std::size_t n_vars)
    : n_(n_vars), h_(n_vars, 0.0), j_(n_vars * n_vars, 0.0) {
    check_size(n_vars);
}

double IsingModel::coupling(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_ || i == j) {
        throw ContractViolation("coupling index out of range");
    }
    return i < j ? j_[i * n_ + j] : j_[j * n_ + i];
}

void IsingModel::add_h(std::size_t i, double v) {
    if (i >= n_) {
        throw ContractViolation("spin index out of range");
    }
    h_[i] += v;
}

void IsingModel::add_coupling(std::size_t i, std::size_t j, double v) {
    if (i >= n_ || j >= n_ || i == j) {
        throw ContractViolation("coupling index out of range");
    }
    if (i < j) {
        j_[i * n_ + j] += v;
    } else {
        j_[j * n_ + i] += v;
    }
}

double IsingModel::energy(std::span<const int> spins) const {
    double e = offset_;
    for (std::size_t i = 0; i < n_; ++i) {
        const double zi = spins[i];
        e += h_[i] * zi;
        for (std::size_t j = i + 1; j < n_; ++j) {
            e += j_[i * n_ + j] * zi * spins[j];
        }
    }
    return e;
}

double IsingModel::energy_of_bits(std::uint64_t bits) const {
    double e = offset_;
    for (std::size_t i = 0; i < n_; ++i) {
        const double zi = ((bits >> i) & 1U) ? -1.0 : 1.0;
        e += h_[i] * zi;
        for (std::size_t j = i + 1; j < n_; ++j) {
            const double zj = ((bits >> j) & 1U) ? -1.0 : 1.0;
            e += j_[i * n_ + j] * zi * zj;
        }
    }
    return e;
}

IsingModel &IsingModel::operator+=(const IsingModel &other) {
    if (other.n_ != n_) {
        throw ContractViolation("cannot add models of different sizes");
    }
    offset_ += other.offset_;
    for (std::size_t i = 0; i < h_.size(); ++i) {
        h_[i] += other.h_[i];
    }
    for (std::size_t i = 0; i < j_.size(); ++i) {
        j_[i] += other.j_[i];
    }
    return *this;
}

IsingModel operator+(IsingModel lhs, const IsingModel &rhs) {
    lhs += rhs;
    return lhs;
}

Aggregates build_aggregates(const UCInstance &instance) {
    const std::size_t n = instance.num_units();
    const std::size_t k = instance.slack_bits();
    check_size(n + k);
    Aggregates agg;
    agg.cost.coef.assign(n + k, 0.0);
    agg.power.coef.assign(n + k, 0.0);
    agg.max_power.coef.assign(n + k, 0.0);
    agg.slack.coef.assign(n + k, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto &u = instance.units()[i];
        agg.cost.coef[i] = unit_cost(u);
        agg.power.coef[i] = u.p;
        agg.max_power.coef[i] = u.p_max.value_or(0.0);
    }
    for (std::size_t j = 0; j < k; ++j) {
        agg.slack.coef[n + j] = std::ldexp(1.0, static_cast<int>(j));
    }
    return agg;
}

QuboPolynomial penalized_objective(const Aggregates &agg,
                                   const PenaltyWeights &w) {
    QuboPolynomial q(agg.cost.coef.size());
    q.add_form(agg.cost, 1.0);

    LinearForm balance = agg.power;
    balance.constant -= w.load;
    q.add_square(balance, w.balance);

    if (w.has_spare) {
        LinearForm spare = agg.max_power;
        for (std::size_t i = 0; i < spare.coef.size(); ++i) {
            spare.coef[i] -= w.slack_unit * agg.slack.coef[i];
        }
        spare.constant += -w.slack_unit * agg.slack.constant - w.load -
                          w.spare_margin;
        q.add_square(spare, w.spare);
    }
    return q;
}

QuboPolynomial build_qubo(const UCInstance &instance) {
    PenaltyWeights w;
    w.balance = instance.lambda1();
    w.load = instance.load();
    if (instance.double_constraint()) {
        w.has_spare = true;
        w.spare = instance.lambda2();
        w.slack_unit = instance.slack_granularity();
        w.spare_margin = *instance.spare();
    }
    return penalized_objective(build_aggregates(instance), w);
}

IsingModel to_ising(const QuboPolynomial &q) {
    // a x_i          -> a/2 - a/2 z_i
    // b x_i x_j      -> b/4 (1 - z_i - z_j + z_i z_j)
    const std::size_t n = q.num_vars();
    IsingModel m(n);
    m.set_offset(q.constant());
    for (std::size_t i = 0; i < n; ++i) {
        const double a = q.linear(i);
        m.add_offset(0.5 * a);
        m.add_h(i, -0.5 * a);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double b = q.quadratic(i, j);
            if (b == 0.0) {
                continue;
            }
            m.add_offset(0.25 * b);
            m.add_h(i, -0.25 * b);
            m.add_h(j, -0.25 * b);
            m.add_coupling(i, j, 0.25 * b);
        }
    }
    return m;
}

double ising_energy(const IsingModel &m, std::span<const int> spins) {
    if (spins.size() != m.num_vars()) {
        throw ContractViolation("spin assignment has " +
                                std::to_string(spins.size()) +
                                " entries, model has " +
                                std::to_string(m.num_vars()));
    }
    for (int z : spins) {
        if (z != 1 && z != -1) {
            throw ContractViolation("spins must be +1 or -1");
        }
    }
    return m.energy(spins);
}

std::vector<int> spins_of_bits(std::uint64_t bits, std::size_t n_vars) {
    std::vector<int> z(n_vars);
    for (std::size_t i = 0; i < n_vars; ++i) {
        z[i] = ((bits >> i) & 1U) ? -1 : 1;
    }
    return z;
}

std::string bitstring_of(std::uint64_t bits, std::size_t n_vars) {
    std::string s(n_vars, '0');
    for (std::size_t i = 0; i < n_vars; ++i) {
        if ((bits >> i) & 1U) {
            s[i] = '1';
        }
    }
    return s;
}

std::uint64_t bits_of(std::string_view bitstring) {
    if (bitstring.size() > 64) {
        throw ContractViolation("bitstring longer than 64 characters");
    }
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < bitstring.size(); ++i) {
        if (bitstring[i] == '1') {
            bits |= std::uint64_t{1} << i;
        } else if (bitstring[i] != '0') {
            throw ContractViolation("bitstring must contain only 0 and 1");
        }
    }
    return bits;
}

void write_coefficients(std::ostream &out, const IsingModel &m) {
    const auto old_precision = out.precision();
    out.precision(std::numeric_limits<double>::max_digits10);
    out << "offset " << m.offset() << '\n';
    const std::size_t n = m.num_vars();
    for (std::size_t i = 0; i < n; ++i) {
        out << i + 1 << ' ' << i + 1 << ' ' << m.h(i) << '\n';
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = m.coupling(i, j);
            if (v != 0.0) {
                out << i + 1 << ' ' << j + 1 << ' ' << v << '\n';
            }
        }
    }
    out.precision(old_precision);
}

IsingModel read_coefficients(std::istream &in) {
    std::string line;
    double offset = 0.0;
    struct Entry {
        std::size_t i, j;
        double v;
    };
    std::vector<Entry> entries;
    std::size_t n = 0;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::istringstream ls(line);
        if (line.rfind("offset", 0) == 0) {
            std::string tag;
            if (!(ls >> tag >> offset)) {
                throw ParseError("line " + std::to_string(line_no),
                                 "bad offset line");
            }
            continue;
        }
        Entry e{};
        if (!(ls >> e.i >> e.j >> e.v) || e.i == 0 || e.j == 0) {
            throw ParseError("line " + std::to_string(line_no),
                             "expected 'i j value' with 1-based indices");
        }
        n = std::max({n, e.i, e.j});
        entries.push_back(e);
    }
    IsingModel m(n);
    m.set_offset(offset);
    for (const auto &e : entries) {
        if (e.i == e.j) {
            m.add_h(e.i - 1, e.v);
        } else {
            m.add_coupling(e.i - 1, e.j - 1, e.v);
        }
    }
    return m;
}

} // namespace ucqnn
