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

/**
 * @file
 * Dense pure-state representation for a handful of qubits and exact
 * Pauli-string expectation values.
 *
 * Conventions fixed here and used everywhere else in the library:
 *  - qubit 0 is the leftmost tensor factor, i.e. the most significant bit
 *    of the computational-basis index;
 *  - basis bit 0 is the Z=+1 eigenstate |0>, basis bit 1 is Z=-1;
 *  - the y-axis eigenstates are |+>_y = (|0> + i|1>)/sqrt(2) and
 *    |->_y = (|0> - i|1>)/sqrt(2).
 */

#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ghzbell {

using complex_t = std::complex<double>;

/// Single-qubit Pauli operator label.
enum class Pauli : char { I = 'I', X = 'X', Y = 'Y', Z = 'Z' };

/**
 * A tensor product of single-qubit Pauli operators, one per qubit.
 */
class PauliString {
  public:
    explicit PauliString(std::vector<Pauli> ops);

    /// Parses a string such as "ZXX" or "IXYZ".
    static PauliString parse(std::string_view text);

    std::size_t size() const { return ops_.size(); }
    Pauli op(std::size_t qubit) const { return ops_[qubit]; }
    const std::vector<Pauli> &ops() const { return ops_; }
    std::string str() const;

  private:
    std::vector<Pauli> ops_;
};

/**
 * Normalized pure state of `num_qubits` qubits, stored as the full complex
 * amplitude vector in the computational (Z) basis.
 *
 * Immutable after construction; safe for concurrent read-only use.
 */
class StateVector {
  public:
    /// Dense storage cap.
    static constexpr std::size_t max_qubits = 12;

    /**
     * @param num_qubits number of qubits, in [1, max_qubits]
     * @param amplitudes complex amplitudes, length exactly 2^num_qubits,
     *        normalized to unit 2-norm within 1e-12
     * @throws std::invalid_argument on any violated precondition
     */
    StateVector(std::size_t num_qubits, std::vector<complex_t> amplitudes);

    /// Builds a state from an unnormalized amplitude vector by rescaling.
    static StateVector normalized(std::size_t num_qubits,
                                  std::vector<complex_t> amplitudes);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return amplitudes_.size(); }
    const std::vector<complex_t> &amplitudes() const { return amplitudes_; }
    complex_t amplitude(std::size_t basis_index) const {
        return amplitudes_[basis_index];
    }
    /// 2-norm of the amplitude vector (1 by construction, up to rounding).
    double norm() const;

  private:
    std::size_t num_qubits_;
    std::vector<complex_t> amplitudes_;
};

/**
 * GHZ state (|+...+> + |-...->)/sqrt(2) over `num_qubits` qubits, with |+>
 * and |-> the y-axis eigenstates, expanded in the computational basis.
 *
 * For three qubits this evaluates to (|000> - |011> - |101> - |110>)/2 and
 * satisfies <ZZZ> = +1 and <ZXX> = <XZX> = <XXZ> = -1.
 *
 * @throws std::invalid_argument unless 2 <= num_qubits <= max_qubits
 */
StateVector make_ghz(std::size_t num_qubits);

/**
 * Three-qubit state cos(theta)|+++>_y + sin(theta)|--->_y.
 * theta = pi/4 reproduces make_ghz(3); theta = 0 is the product state.
 */
StateVector make_weighted_ghz(double theta);

/**
 * Exact expectation value <psi|P|psi>.
 *
 * The result of a Pauli-string expectation is real; an imaginary part above
 * 1e-9 indicates a broken evaluation and raises std::logic_error. Anything
 * smaller is discarded.
 *
 * @throws std::invalid_argument if the string length differs from the qubit
 *         count
 */
double expectation(const StateVector &state, const PauliString &p);

} // namespace ghzbell
