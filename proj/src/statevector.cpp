// Copyright 2026 The ghzbell Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ghzbell/statevector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace ghzbell {

namespace {

constexpr double norm_tol = 1e-12;
constexpr double imag_tol = 1e-9;

std::size_t qubit_mask(std::size_t num_qubits, std::size_t qubit) {
    return std::size_t{1} << (num_qubits - 1 - qubit);
}

} // namespace

PauliString::PauliString(std::vector<Pauli> ops) : ops_(std::move(ops)) {
    if (ops_.empty()) {
        throw std::invalid_argument("PauliString: empty operator list");
    }
}

PauliString PauliString::parse(std::string_view text) {
    std::vector<Pauli> ops;
    ops.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case 'I':
            ops.push_back(Pauli::I);
            break;
        case 'X':
            ops.push_back(Pauli::X);
            break;
        case 'Y':
            ops.push_back(Pauli::Y);
            break;
        case 'Z':
            ops.push_back(Pauli::Z);
            break;
        default:
            throw std::invalid_argument(std::string("PauliString: bad operator '") +
                                        c + "'");
        }
    }
    return PauliString(std::move(ops));
}

std::string PauliString::str() const {
    std::string s;
    s.reserve(ops_.size());
    for (Pauli p : ops_) {
        s.push_back(static_cast<char>(p));
    }
    return s;
}

StateVector::StateVector(std::size_t num_qubits,
                         std::vector<complex_t> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
    if (num_qubits_ < 1 || num_qubits_ > max_qubits) {
        throw std::invalid_argument("StateVector: num_qubits out of [1, 12]");
    }
    if (amplitudes_.size() != (std::size_t{1} << num_qubits_)) {
        throw std::invalid_argument(
            "StateVector: amplitude count must be exactly 2^num_qubits");
    }
    if (std::abs(norm() - 1.0) > norm_tol) {
        throw std::invalid_argument("StateVector: amplitudes are not normalized");
    }
}

StateVector StateVector::normalized(std::size_t num_qubits,
                                    std::vector<complex_t> amplitudes) {
    double s = 0.0;
    for (const complex_t &a : amplitudes) {
        s += std::norm(a);
    }
    if (s <= 0.0) {
        throw std::invalid_argument("StateVector: zero vector cannot be normalized");
    }
    const double inv = 1.0 / std::sqrt(s);
    for (complex_t &a : amplitudes) {
        a *= inv;
    }
    return StateVector(num_qubits, std::move(amplitudes));
}

double StateVector::norm() const {
    double s = 0.0;
    for (const complex_t &a : amplitudes_) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

StateVector make_ghz(std::size_t num_qubits) {
    if (num_qubits < 2) {
        throw std::invalid_argument("make_ghz: need at least 2 qubits");
    }
    if (num_qubits > StateVector::max_qubits) {
        throw std::invalid_argument("make_ghz: exceeds dense-representation cap");
    }
    const std::size_t dim = std::size_t{1} << num_qubits;
    // (|+...+> + |-...->)/sqrt(2) expanded over basis states b:
    //   amp(b) = 2^-((n+1)/2) * (i^w + (-i)^w),  w = popcount(b),
    // which vanishes for odd w and equals ±2^-((n-1)/2) for even w.
    const double mag = std::pow(2.0, -0.5 * static_cast<double>(num_qubits - 1));
    std::vector<complex_t> amps(dim, complex_t{0.0, 0.0});
    for (std::size_t b = 0; b < dim; ++b) {
        const unsigned w = static_cast<unsigned>(std::popcount(b));
        if (w % 2 == 0) {
            amps[b] = (w % 4 == 0) ? complex_t{mag, 0.0} : complex_t{-mag, 0.0};
        }
    }
    return StateVector(num_qubits, std::move(amps));
}

StateVector make_weighted_ghz(double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const double inv = 1.0 / std::sqrt(8.0);
    // i^w cycle for the |+++> branch; the |---> branch carries (-i)^w.
    static constexpr complex_t i_pow[4] = {
        {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    std::vector<complex_t> amps(8);
    for (std::size_t b = 0; b < 8; ++b) {
        const unsigned w = static_cast<unsigned>(std::popcount(b));
        const complex_t plus = i_pow[w % 4];
        const complex_t minus = std::conj(plus);
        amps[b] = inv * (c * plus + s * minus);
    }
    return StateVector(3, std::move(amps));
}

double expectation(const StateVector &state, const PauliString &p) {
    const std::size_t n = state.num_qubits();
    if (p.size() != n) {
        throw std::invalid_argument(
            "expectation: Pauli string length does not match qubit count");
    }

    // P|b> = phase(b) |b ^ flip_mask>; accumulate <psi|P|psi> directly.
    std::size_t flip_mask = 0;
    for (std::size_t q = 0; q < n; ++q) {
        const Pauli op = p.op(q);
        if (op == Pauli::X || op == Pauli::Y) {
            flip_mask |= qubit_mask(n, q);
        }
    }

    const auto &amps = state.amplitudes();
    complex_t acc{0.0, 0.0};
    for (std::size_t b = 0; b < amps.size(); ++b) {
        const complex_t src = amps[b];
        if (src == complex_t{0.0, 0.0}) {
            continue;
        }
        complex_t phase{1.0, 0.0};
        for (std::size_t q = 0; q < n; ++q) {
            const bool bit = (b & qubit_mask(n, q)) != 0;
            switch (p.op(q)) {
            case Pauli::Z:
                if (bit) {
                    phase = -phase;
                }
                break;
            case Pauli::Y:
                // Y|0> = i|1>, Y|1> = -i|0>
                phase *= bit ? complex_t{0.0, -1.0} : complex_t{0.0, 1.0};
                break;
            default:
                break;
            }
        }
        acc += std::conj(amps[b ^ flip_mask]) * phase * src;
    }

    if (std::abs(acc.imag()) > imag_tol) {
        throw std::logic_error(
            "expectation: non-negligible imaginary part in a Pauli expectation");
    }
    return acc.real();
}

} // namespace ghzbell
