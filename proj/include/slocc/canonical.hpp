// Copyright 2026 The slocc4 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Representative states for every reachable 3- and 4-qubit class, and random
// SLOCC sampling.

#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "slocc/qstate.hpp"
#include "slocc/quad.hpp"
#include "slocc/tri.hpp"

namespace slocc {

/// A family name plus its parameters.
///
/// 4-qubit families are named by QuadTag ("W0kPsi_W", ...). 3-qubit ones are
/// "GHZ", "W", "Sep000" and "Bisep". "SepLine" is the 4-qubit state
/// |0>(p0|0>)|Psi> + |1>|W> with Psi11 = 0, whose line has separable points
/// at x = -1/(p0 Psi01) and x = -1/(p0 Psi10).
///
/// Parameters (complex, defaults in brackets):
///   W0kPsi_W:      lambda [0]
///   WW_W:          mu [0], a3 [1], a5 [1]; `sign` picks a3 + a5 +- 2 sqrt(a3 a5)
///   SepLine:       p0 [1], psi00 [1], psi01 [1], psi10 [2]
/// `cut` (1..3) selects the biseparable qubit for Bisep, W0kPsi_0kPsi,
/// W0Psi_GHZ and W0kPsi_W by permuting the last three qubits.
struct FamilySpec {
    std::string family;
    std::map<std::string, Complex> params;
    int sign = +1;
    int cut = 1;

    Complex param(const std::string &name, Complex fallback) const;
};

/// Throws ConstraintViolation (naming the violated inequality) or
/// ParseError for an unknown family or parameter.
PureState make_canonical(const FamilySpec &spec);

/// Names accepted by make_canonical.
std::vector<std::string> family_names();

/// Principal square root: nonnegative real part, positive imaginary part on
/// the negative real axis.
Complex principal_sqrt(Complex z);

/// A fixture: a state and the verdict classify4 must give on qubit 1.
struct Fixture {
    std::string name;
    PureState state;
    QuadTag tag;
    std::vector<int> cuts;
};

/// One representative per 4-qubit class (cuts = 1 where applicable) plus
/// the separable-line construction.
std::vector<Fixture> quad_fixtures();

/// 3-qubit canonical states: GHZ, W, Sep000, Bisep(1..3).
std::vector<std::pair<PureState, TriClass>> tri_fixtures();

/// Singular values log-uniform in [1/sqrt(c), sqrt(c)], Haar singular
/// vectors. Deterministic in the generator state.
LocalOperator random_local_operator(double max_condition, std::mt19937_64 &rng);
SloccOp random_slocc(int qubits, double max_condition, std::mt19937_64 &rng);
SloccOp random_slocc(int qubits, double max_condition, std::uint64_t seed);

/// Haar-uniform 2x2 unitary.
LocalOperator random_unitary(std::mt19937_64 &rng);

/// Complex Gaussian amplitudes (uniform on the sphere after normalization).
PureState random_state(int qubits, std::mt19937_64 &rng);

}  // namespace slocc
