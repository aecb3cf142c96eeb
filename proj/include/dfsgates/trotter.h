// Copyright 2026 The dfsgates Authors
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
#ifndef DFSGATES_TROTTER_H
#define DFSGATES_TROTTER_H

// Pulse schedules: ordered products of exponentials of real exchange
// combinations, and the builders for decoupled evolution and the CNOT
// constructions.
//
// A schedule's steps are listed in the order the factors are written in the
// product, so the unitary is E(steps[0]) * E(steps[1]) * ... and the LAST
// step acts first on a state. E(step) = exp(i sum_ij c_ij rho((i j)) + i phase).

#include <map>
#include <string>
#include <vector>

#include "dfsgates/encoding.h"
#include "dfsgates/linalg.h"
#include "dfsgates/symrep.h"

namespace dfsgates {

enum class StepKind {
    Hamiltonian,  // carries the Hamiltonian being evolved
    Decoupler,    // U, U_a, U_b and their inverses/powers
    Local,        // single-qubit rotations inside one block
    Prefactor,    // fixed local corrections such as exp(-i pi/4 (I + (12)))
};

std::string to_string(StepKind kind);
/// Throws std::invalid_argument for unknown names.
StepKind parse_step_kind(const std::string &text);

struct PulseStep {
    std::map<Transposition, double> coeffs;  // radians, no zero entries
    double phase = 0.0;                      // identity coefficient, radians
    StepKind kind = StepKind::Hamiltonian;
    /// Pulse time in radians: max |coefficient| for a single factor, the sum of
    /// the parts for a consolidated step.
    double duration = 0.0;

    /// Drops zero coefficients and sets duration to max |coefficient|.
    static PulseStep make(std::map<Transposition, double> coeffs, double phase, StepKind kind);

    double max_coefficient() const;
    bool has_negative() const;
    GroupAlgebraElement generator() const;
};

/// Dense generator sum c_ij rho((i j)) + phase * I in an irrep.
Matrix step_generator(const PulseStep &step, const Partition &irrep);

struct PulseSchedule {
    std::string name;
    int order = 1;
    int n = 1;
    bool sector_independent = false;
    bool consolidated = false;
    std::vector<PulseStep> steps;

    size_t size() const {
        return steps.size();
    }
};

/// Sum of step durations divided by pi/2, i.e. in units of one full swap.
double normalized_time(const PulseSchedule &schedule);

/// Number of steps with at least one negative exchange coefficient.
int negative_step_count(const PulseSchedule &schedule, bool hamiltonian_only = false);

/// exp(i t h) as a single step. Throws std::invalid_argument unless h is a
/// real combination of transpositions and the identity.
PulseStep exponential_step(const GroupAlgebraElement &h, double t, StepKind kind);

/// Product formula for exp(i alpha sum_j terms[j]) with n iterations.
/// order 0: (prod_j e^{i alpha/n A_j})^n.
/// order 1: (e^{A_k/2n} ... e^{A_2/2n} e^{A_1/n} e^{A_2/2n} ... e^{A_k/2n})^n
/// (each exponent times i alpha). A single term gives one exact step.
PulseSchedule trotter_product(const std::vector<GroupAlgebraElement> &terms, double alpha, int n, int order = 1);

/// Local transpositions dropped from the decouplers: per block, the first
/// within-block transposition commuting with h in both irreps, if any.
std::vector<Transposition> prunable_local_transpositions(const GroupAlgebraElement &h);

/// Approximates exp(i alpha D(h)) with U = exp(i pi/2 (Sigma_a + Sigma_b)) and
/// dt = alpha / 4n.
/// order 1: U^dag ((e^{i dt/2 h} U)^3 e^{i dt h} (U^dag e^{i dt/2 h})^3)^n U.
/// order 0: (U^2 e^{i dt h} U^dag e^{i dt h} U^dag e^{i dt h} U^dag e^{i dt h} U)^n.
PulseSchedule decoupled_evolution(const GroupAlgebraElement &h, double alpha, int n, int order = 1,
                                  bool prune = true);

/// Same target with the pair decouplers U_a, U_b and T = e^{i dt h}:
/// order 1: (T^1/2 U_b T^1/2 U_b^dag U_a T U_b T U_a^dag T^1/2 U_b^dag T^1/2)^n, a
/// symmetric split into h + U_b h U_b^dag and its U_a conjugate. Second order
/// per step when h commutes with U_b h U_b^dag.
/// order 0: (T U_a T U_a^dag U_b T U_a T U_a^dag U_b^dag)^n.
PulseSchedule paired_decoupled_evolution(const GroupAlgebraElement &h, double alpha, int n, int order = 1,
                                         bool prune = true);

/// N = 3 sqrt(3)/4 ((15) - (14) + (25) - (24)).
GroupAlgebraElement cnot_hamiltonian();
/// N_1 = sqrt(3)/4 ((56) - (46) + 3 ((34) - (35))).
GroupAlgebraElement spin1_cnot_hamiltonian();
/// exp(-i pi/4 (I + (12))).
PulseStep cnot_prefactor();

/// Prefactor times decoupled_evolution(N, pi/2, n): CNOT in both sectors.
PulseSchedule cnot_spin_independent(int n, int order = 1, bool prune = true);
/// Prefactor times paired_decoupled_evolution(N_1, pi/2, n): CNOT for spin 1.
PulseSchedule cnot_spin1(int n, int order = 1, bool prune = true);

/// exp(i delta) exp(i alpha X) exp(i beta Z) exp(i gamma X) on the qubit of
/// block 1 or 2, through X = -(ab)/sqrt3 - 2(ac)/sqrt3 and Z = -(ab).
PulseSchedule single_qubit_schedule(int block, double alpha, double beta, double gamma, double delta);

struct LocalRotation {
    int block = 1;
    Pauli axis = Pauli::X;  // X or Z
    double angle = 0.0;     // exp(i angle axis)
};

/// G = K1 exp(i alpha XX) exp(i beta YY) exp(i gamma ZZ) K2, with K1 and K2
/// products of rotations in listed order (first entry leftmost).
struct CanonicalGateSpec {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    std::vector<LocalRotation> k1;
    std::vector<LocalRotation> k2;
};

enum class SynthesisMode { Spin0, Spin1, SectorIndependent };

/// The YY factor is exp(i pi/4 (XI+IX)) exp(i beta ZZ) exp(-i pi/4 (XI+IX)).
/// Each XX/ZZ factor is a decoupled evolution of the Hamiltonian from
/// hamiltonian_from_pauli. SectorIndependent mode uses the spin-1 calibration
/// and requires alpha, beta, gamma in {-pi/2, 0, pi/2}; otherwise it throws
/// std::invalid_argument.
PulseSchedule canonical_two_qubit_schedule(const CanonicalGateSpec &spec, SynthesisMode mode, int n);

/// Greedy left-to-right merge of adjacent steps whose generators commute in
/// both (3,3) and (4,2). Merged steps add coefficients, phases and durations;
/// steps that cancel to the identity are dropped.
PulseSchedule consolidate(const PulseSchedule &schedule);

enum class CancelMode {
    FullSum,   // add k * (all fifteen transpositions); central, global phase only
    LocalSum,  // add k_b * (block local sum) for negative local coefficients
    CrossSum,  // cross-block sum for cross negatives, block sums for local ones
};

std::string to_string(CancelMode mode);
CancelMode parse_cancel_mode(const std::string &text);

/// Removes negative coefficients from Hamiltonian steps by adding transposition
/// sums scaled by the largest negative magnitude. A step with a single
/// negative transposition is shifted by a multiple of 2 pi instead. Other
/// step kinds are left alone. On a consolidated schedule each step's duration
/// grows by the change in its largest coefficient.
PulseSchedule cancel_negatives(const PulseSchedule &schedule, CancelMode mode = CancelMode::FullSum);

}  // namespace dfsgates

#endif
