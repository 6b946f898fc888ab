// Copyright 2026 The uvlab Authors
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

#pragma once

// Test-only reference implementations. They share no code paths with the
// library beyond PureState storage: plain loops over explicit graphs and
// full joint outcome grids.

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "uvlab/state.hpp"
#include "uvlab/succinct_graph.hpp"

namespace oracle {

struct Qma2Value {
    double equality;
    double consistency;
    double uniformity;
    double total;
};

/// Two-proof verifier evaluated from amplitudes: overlap sum, full
/// (3 * 2^n)^2 grid with the reject rules, and the uniformity projector
/// (I - |u_N><u_N|) (x) |u_3><u_3| applied as a dense matrix.
Qma2Value qma2(const uvlab::ExplicitGraph &g, int n, const uvlab::PureState &r1, const uvlab::PureState &r2);

/// Bell consistency by enumerating every joint outcome tuple and every pair i < j.
double bell_consistency(const uvlab::ExplicitGraph &g, int n, const std::vector<uvlab::PureState> &proofs);

/// Bell uniformity by enumerating the 3^k per-register events
/// {x = 1, (x = 0, y = 0), (x = 0, y = 1)} (k <= 13).
double bell_uniformity(const std::vector<uvlab::PureState> &proofs);

/// Pr[Binomial(k, p) < threshold] by direct summation.
double binomial_lower_tail(std::size_t k, double p, std::size_t threshold);

/// Dense 2^q x 2^q matrix of a gate on qubits `targets` of a q-qubit register
/// (qubit 0 most significant), built from Kronecker products.
Eigen::MatrixXcd dense_gate(const Eigen::MatrixXcd &local, std::size_t qubits, std::vector<std::size_t> targets);

/// SWAP test by explicit ancilla + CSWAP statevector in the full space.
double swap_test_statevector(const uvlab::PureState &a, const uvlab::PureState &b);

}  // namespace oracle
