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
#include "dfsgates/trotter.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dfsgates {

namespace {

constexpr double kDropTolerance = 1e-14;
constexpr double kCommuteTolerance = 1e-12;

const Partition &spin0_irrep() {
    static const Partition p({3, 3});
    return p;
}

const Partition &spin1_irrep() {
    static const Partition p({4, 2});
    return p;
}

// 1 or 2 for within-block transpositions, 0 for cross-block ones.
int block_of(Transposition t) {
    if (t.j <= 3) {
        return 1;
    }
    if (t.i >= 4) {
        return 2;
    }
    return 0;
}

std::vector<Transposition> local_transpositions(int block) {
    int o = block == 1 ? 0 : 3;
    return {Transposition(o + 1, o + 2), Transposition(o + 1, o + 3), Transposition(o + 2, o + 3)};
}

std::vector<Transposition> all_transpositions() {
    std::vector<Transposition> out;
    for (int i = 1; i <= 6; i++) {
        for (int j = i + 1; j <= 6; j++) {
            out.emplace_back(i, j);
        }
    }
    return out;
}

std::map<Transposition, double> scaled(const std::map<Transposition, double> &c, double s) {
    std::map<Transposition, double> out;
    for (const auto &[t, v] : c) {
        out[t] = v * s;
    }
    return out;
}

bool commute_in_both(const Matrix &a0, const Matrix &b0, const Matrix &a1, const Matrix &b1) {
    return max_abs(commutator(a0, b0)) <= kCommuteTolerance && max_abs(commutator(a1, b1)) <= kCommuteTolerance;
}

void check_iterations(int n) {
    if (n < 1) {
        throw std::invalid_argument("iteration count must be >= 1, got " + std::to_string(n));
    }
}

void check_order(int order) {
    if (order != 0 && order != 1) {
        throw std::invalid_argument("order must be 0 or 1, got " + std::to_string(order));
    }
}

// exp(i angle (sum over the kept local transpositions)) for one or both blocks.
PulseStep decoupler_step(const std::vector<int> &blocks, double angle, const std::vector<Transposition> &pruned) {
    std::map<Transposition, double> c;
    for (int b : blocks) {
        for (const auto &t : local_transpositions(b)) {
            if (std::find(pruned.begin(), pruned.end(), t) == pruned.end()) {
                c[t] = angle;
            }
        }
    }
    return PulseStep::make(std::move(c), 0.0, StepKind::Decoupler);
}

void append(PulseSchedule &dst, const PulseSchedule &src) {
    dst.steps.insert(dst.steps.end(), src.steps.begin(), src.steps.end());
}

std::map<Transposition, double> pauli_x_coeffs(int block, double angle) {
    auto t = local_transpositions(block);
    return {{t[0], -angle / std::sqrt(3.0)}, {t[1], -2.0 * angle / std::sqrt(3.0)}};
}

std::map<Transposition, double> pauli_z_coeffs(int block, double angle) {
    return {{local_transpositions(block)[0], -angle}};
}

void check_block(int block) {
    if (block != 1 && block != 2) {
        throw std::invalid_argument("block must be 1 or 2, got " + std::to_string(block));
    }
}

PulseStep rotation_step(const LocalRotation &r) {
    check_block(r.block);
    switch (r.axis) {
        case Pauli::X:
            return PulseStep::make(pauli_x_coeffs(r.block, r.angle), 0.0, StepKind::Local);
        case Pauli::Z:
            return PulseStep::make(pauli_z_coeffs(r.block, r.angle), 0.0, StepKind::Local);
        default:
            throw std::invalid_argument("local rotations must be about X or Z");
    }
}

double largest_negative(const std::map<Transposition, double> &c, int block_filter) {
    double k = 0.0;
    for (const auto &[t, v] : c) {
        if (block_filter >= 0 && block_of(t) != block_filter) {
            continue;
        }
        k = std::max(k, -v);
    }
    return k;
}

}  // namespace

std::string to_string(StepKind kind) {
    switch (kind) {
        case StepKind::Hamiltonian:
            return "hamiltonian";
        case StepKind::Decoupler:
            return "decoupler";
        case StepKind::Local:
            return "local";
        case StepKind::Prefactor:
            return "prefactor";
    }
    return "hamiltonian";
}

StepKind parse_step_kind(const std::string &text) {
    for (StepKind k : {StepKind::Hamiltonian, StepKind::Decoupler, StepKind::Local, StepKind::Prefactor}) {
        if (to_string(k) == text) {
            return k;
        }
    }
    throw std::invalid_argument("unknown step kind '" + text + "'");
}

PulseStep PulseStep::make(std::map<Transposition, double> coeffs, double phase, StepKind kind) {
    PulseStep s;
    for (const auto &[t, v] : coeffs) {
        if (std::abs(v) > kDropTolerance) {
            s.coeffs[t] = v;
        }
    }
    s.phase = phase;
    s.kind = kind;
    s.duration = s.max_coefficient();
    return s;
}

double PulseStep::max_coefficient() const {
    double m = 0.0;
    for (const auto &[t, v] : coeffs) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

bool PulseStep::has_negative() const {
    return std::any_of(coeffs.begin(), coeffs.end(), [](const auto &kv) { return kv.second < 0.0; });
}

GroupAlgebraElement PulseStep::generator() const {
    auto g = GroupAlgebraElement::from_transpositions(6, coeffs);
    if (phase != 0.0) {
        g += GroupAlgebraElement::identity(6, phase);
    }
    return g;
}

Matrix step_generator(const PulseStep &step, const Partition &irrep) {
    const auto &rep = young_rep(irrep);
    Matrix g = Matrix::Identity(rep.dim(), rep.dim()) * step.phase;
    for (const auto &[t, v] : step.coeffs) {
        g += rep.transposition(t).cast<Complex>() * v;
    }
    return g;
}

double normalized_time(const PulseSchedule &schedule) {
    double total = 0.0;
    for (const auto &s : schedule.steps) {
        total += s.duration;
    }
    return total / (kPi / 2.0);
}

int negative_step_count(const PulseSchedule &schedule, bool hamiltonian_only) {
    int count = 0;
    for (const auto &s : schedule.steps) {
        if (hamiltonian_only && s.kind != StepKind::Hamiltonian) {
            continue;
        }
        count += s.has_negative() ? 1 : 0;
    }
    return count;
}

PulseStep exponential_step(const GroupAlgebraElement &h, double t, StepKind kind) {
    auto ex = h.as_exchange_combination();
    if (!ex) {
        throw std::invalid_argument("not a real combination of transpositions: " + h.str());
    }
    return PulseStep::make(scaled(ex->first, t), ex->second * t, kind);
}

PulseSchedule trotter_product(const std::vector<GroupAlgebraElement> &terms, double alpha, int n, int order) {
    check_iterations(n);
    check_order(order);
    PulseSchedule out;
    out.name = "trotter_product";
    out.order = order;
    out.n = n;
    if (terms.empty()) {
        return out;
    }
    if (terms.size() == 1) {
        out.steps.push_back(exponential_step(terms[0], alpha, StepKind::Hamiltonian));
        return out;
    }
    double dt = alpha / n;
    std::vector<PulseStep> full, half;
    for (const auto &t : terms) {
        full.push_back(exponential_step(t, dt, StepKind::Hamiltonian));
        half.push_back(exponential_step(t, dt / 2.0, StepKind::Hamiltonian));
    }
    size_t k = terms.size();
    for (int it = 0; it < n; it++) {
        if (order == 0) {
            out.steps.insert(out.steps.end(), full.begin(), full.end());
            continue;
        }
        for (size_t j = k; j-- > 1;) {
            out.steps.push_back(half[j]);
        }
        out.steps.push_back(full[0]);
        for (size_t j = 1; j < k; j++) {
            out.steps.push_back(half[j]);
        }
    }
    return out;
}

std::vector<Transposition> prunable_local_transpositions(const GroupAlgebraElement &h) {
    Matrix h0 = young_rep(spin0_irrep()).element(h);
    Matrix h1 = young_rep(spin1_irrep()).element(h);
    std::vector<Transposition> out;
    for (int b : {1, 2}) {
        for (const auto &t : local_transpositions(b)) {
            Matrix t0 = young_rep(spin0_irrep()).transposition(t).cast<Complex>();
            Matrix t1 = young_rep(spin1_irrep()).transposition(t).cast<Complex>();
            if (commute_in_both(h0, t0, h1, t1)) {
                out.push_back(t);
                break;
            }
        }
    }
    return out;
}

PulseSchedule decoupled_evolution(const GroupAlgebraElement &h, double alpha, int n, int order, bool prune) {
    check_iterations(n);
    check_order(order);
    std::vector<Transposition> pruned;
    if (prune) {
        pruned = prunable_local_transpositions(h);
    }
    PulseStep u = decoupler_step({1, 2}, kPi / 6.0, pruned);
    PulseStep u_dag = decoupler_step({1, 2}, -kPi / 6.0, pruned);
    PulseStep u_sq = decoupler_step({1, 2}, kPi / 3.0, pruned);
    double dt = alpha / (4.0 * n);
    PulseStep e = exponential_step(h, dt, StepKind::Hamiltonian);
    PulseStep e_half = exponential_step(h, dt / 2.0, StepKind::Hamiltonian);

    PulseSchedule out;
    out.name = "decoupled_evolution";
    out.order = order;
    out.n = n;
    auto &s = out.steps;
    if (order == 1) {
        s.push_back(u_dag);
        for (int it = 0; it < n; it++) {
            for (int r = 0; r < 3; r++) {
                s.push_back(e_half);
                s.push_back(u);
            }
            s.push_back(e);
            for (int r = 0; r < 3; r++) {
                s.push_back(u_dag);
                s.push_back(e_half);
            }
        }
        s.push_back(u);
    } else {
        for (int it = 0; it < n; it++) {
            s.insert(s.end(), {u_sq, e, u_dag, e, u_dag, e, u_dag, e, u});
        }
    }
    return out;
}

PulseSchedule paired_decoupled_evolution(const GroupAlgebraElement &h, double alpha, int n, int order, bool prune) {
    check_iterations(n);
    check_order(order);
    std::vector<Transposition> pruned;
    if (prune) {
        pruned = prunable_local_transpositions(h);
    }
    PulseStep ua = decoupler_step({1}, kPi / 3.0, pruned);
    PulseStep ua_dag = decoupler_step({1}, -kPi / 3.0, pruned);
    PulseStep ub = decoupler_step({2}, kPi / 3.0, pruned);
    PulseStep ub_dag = decoupler_step({2}, -kPi / 3.0, pruned);
    double dt = alpha / (4.0 * n);
    PulseStep t = exponential_step(h, dt, StepKind::Hamiltonian);
    PulseStep t_half = exponential_step(h, dt / 2.0, StepKind::Hamiltonian);

    PulseSchedule out;
    out.name = "paired_decoupled_evolution";
    out.order = order;
    out.n = n;
    auto &s = out.steps;
    for (int it = 0; it < n; it++) {
        if (order == 1) {
            s.insert(s.end(), {t_half, ub, t_half, ub_dag, ua, t, ub, t, ua_dag, t_half, ub_dag, t_half});
        } else {
            s.insert(s.end(), {t, ua, t, ua_dag, ub, t, ua, t, ua_dag, ub_dag});
        }
    }
    return out;
}

GroupAlgebraElement cnot_hamiltonian() {
    double c = 3.0 * std::sqrt(3.0) / 4.0;
    return GroupAlgebraElement::from_transpositions(
        6, {{{1, 5}, c}, {{1, 4}, -c}, {{2, 5}, c}, {{2, 4}, -c}});
}

GroupAlgebraElement spin1_cnot_hamiltonian() {
    double c = std::sqrt(3.0) / 4.0;
    return GroupAlgebraElement::from_transpositions(
        6, {{{5, 6}, c}, {{4, 6}, -c}, {{3, 4}, 3.0 * c}, {{3, 5}, -3.0 * c}});
}

PulseStep cnot_prefactor() {
    return PulseStep::make({{Transposition(1, 2), -kPi / 4.0}}, -kPi / 4.0, StepKind::Prefactor);
}

PulseSchedule cnot_spin_independent(int n, int order, bool prune) {
    PulseSchedule body = decoupled_evolution(cnot_hamiltonian(), kPi / 2.0, n, order, prune);
    PulseSchedule out;
    out.name = "cnot_spin_independent";
    out.order = order;
    out.n = n;
    out.sector_independent = true;
    out.steps.push_back(cnot_prefactor());
    append(out, body);
    return out;
}

PulseSchedule cnot_spin1(int n, int order, bool prune) {
    PulseSchedule body = paired_decoupled_evolution(spin1_cnot_hamiltonian(), kPi / 2.0, n, order, prune);
    PulseSchedule out;
    out.name = "cnot_spin1";
    out.order = order;
    out.n = n;
    out.steps.push_back(cnot_prefactor());
    append(out, body);
    return out;
}

PulseSchedule single_qubit_schedule(int block, double alpha, double beta, double gamma, double delta) {
    check_block(block);
    PulseSchedule out;
    out.name = "single_qubit";
    out.order = 0;
    out.n = 1;
    out.sector_independent = true;
    for (const auto &r : {LocalRotation{block, Pauli::X, alpha}, LocalRotation{block, Pauli::Z, beta},
                          LocalRotation{block, Pauli::X, gamma}}) {
        if (r.angle != 0.0) {
            out.steps.push_back(rotation_step(r));
        }
    }
    if (delta != 0.0) {
        if (out.steps.empty()) {
            out.steps.push_back(PulseStep::make({}, delta, StepKind::Local));
        } else {
            out.steps.front().phase += delta;
        }
    }
    return out;
}

PulseSchedule canonical_two_qubit_schedule(const CanonicalGateSpec &spec, SynthesisMode mode, int n) {
    check_iterations(n);
    for (double a : {spec.alpha, spec.beta, spec.gamma}) {
        if (!std::isfinite(a)) {
            throw std::invalid_argument("canonical angles must be finite");
        }
        if (mode == SynthesisMode::SectorIndependent) {
            bool allowed = std::abs(a) < 1e-12 || std::abs(std::abs(a) - kPi / 2.0) < 1e-12;
            if (!allowed) {
                throw std::invalid_argument("sector-independent synthesis needs angles in {-pi/2, 0, pi/2}, got " +
                                            std::to_string(a));
            }
        }
    }
    SpinSector sector = mode == SynthesisMode::Spin0 ? SpinSector::Spin0 : SpinSector::Spin1;
    auto interaction = [&](PauliWord w, double angle) {
        auto h = hamiltonian_from_pauli({{w, 1.0}}, sector).element;
        return decoupled_evolution(h, angle, n, 1, true);
    };

    PulseSchedule out;
    out.name = "canonical_two_qubit";
    out.order = 1;
    out.n = n;
    out.sector_independent = mode == SynthesisMode::SectorIndependent;
    for (const auto &r : spec.k1) {
        out.steps.push_back(rotation_step(r));
    }
    if (spec.alpha != 0.0) {
        append(out, interaction({Pauli::X, Pauli::X}, spec.alpha));
    }
    if (spec.beta != 0.0) {
        auto plus = pauli_x_coeffs(1, kPi / 4.0);
        plus.merge(pauli_x_coeffs(2, kPi / 4.0));
        out.steps.push_back(PulseStep::make(plus, 0.0, StepKind::Local));
        append(out, interaction({Pauli::Z, Pauli::Z}, spec.beta));
        out.steps.push_back(PulseStep::make(scaled(plus, -1.0), 0.0, StepKind::Local));
    }
    if (spec.gamma != 0.0) {
        append(out, interaction({Pauli::Z, Pauli::Z}, spec.gamma));
    }
    for (const auto &r : spec.k2) {
        out.steps.push_back(rotation_step(r));
    }
    return out;
}

PulseSchedule consolidate(const PulseSchedule &schedule) {
    PulseSchedule out = schedule;
    out.steps.clear();
    out.consolidated = true;
    if (schedule.steps.empty()) {
        return out;
    }
    const Partition &p0 = spin0_irrep();
    const Partition &p1 = spin1_irrep();

    PulseStep cur = schedule.steps.front();
    Matrix cur0 = step_generator(cur, p0);
    Matrix cur1 = step_generator(cur, p1);
    double pending_phase = 0.0;
    double pending_duration = 0.0;
    auto flush = [&]() {
        if (cur.coeffs.empty()) {
            pending_phase += cur.phase;
            pending_duration += cur.duration;
            return;
        }
        cur.phase += pending_phase;
        cur.duration += pending_duration;
        pending_phase = 0.0;
        pending_duration = 0.0;
        out.steps.push_back(cur);
    };
    for (size_t k = 1; k < schedule.steps.size(); k++) {
        const PulseStep &next = schedule.steps[k];
        Matrix n0 = step_generator(next, p0);
        Matrix n1 = step_generator(next, p1);
        if (commute_in_both(cur0, n0, cur1, n1)) {
            std::map<Transposition, double> sum = cur.coeffs;
            for (const auto &[t, v] : next.coeffs) {
                sum[t] += v;
            }
            StepKind kind = (cur.kind == StepKind::Hamiltonian || next.kind == StepKind::Hamiltonian)
                                ? StepKind::Hamiltonian
                                : cur.kind;
            double duration = cur.duration + next.duration;
            cur = PulseStep::make(std::move(sum), cur.phase + next.phase, kind);
            cur.duration = duration;
            cur0 += n0;
            cur1 += n1;
        } else {
            flush();
            cur = next;
            cur0 = std::move(n0);
            cur1 = std::move(n1);
        }
    }
    flush();
    if (pending_phase != 0.0 || pending_duration != 0.0) {
        if (out.steps.empty()) {
            if (pending_phase != 0.0) {
                PulseStep s = PulseStep::make({}, pending_phase, schedule.steps.back().kind);
                s.duration = pending_duration;
                out.steps.push_back(s);
            }
        } else {
            out.steps.back().phase += pending_phase;
            out.steps.back().duration += pending_duration;
        }
    }
    return out;
}

std::string to_string(CancelMode mode) {
    switch (mode) {
        case CancelMode::FullSum:
            return "full-sum";
        case CancelMode::LocalSum:
            return "local-sum";
        case CancelMode::CrossSum:
            return "cross-sum";
    }
    return "full-sum";
}

CancelMode parse_cancel_mode(const std::string &text) {
    for (CancelMode m : {CancelMode::FullSum, CancelMode::LocalSum, CancelMode::CrossSum}) {
        if (to_string(m) == text) {
            return m;
        }
    }
    throw std::invalid_argument("unknown cancellation mode '" + text + "'");
}

PulseSchedule cancel_negatives(const PulseSchedule &schedule, CancelMode mode) {
    PulseSchedule out = schedule;
    for (auto &step : out.steps) {
        if (step.kind != StepKind::Hamiltonian || !step.has_negative()) {
            continue;
        }
        double old_max = step.max_coefficient();
        auto c = step.coeffs;
        if (c.size() == 1) {
            auto &v = c.begin()->second;
            v += 2.0 * kPi * std::ceil(-v / (2.0 * kPi));
        } else {
            auto add_sum = [&c](const std::vector<Transposition> &ts, double k) {
                if (k <= 0.0) {
                    return;
                }
                for (const auto &t : ts) {
                    c[t] += k;
                }
            };
            if (mode == CancelMode::FullSum) {
                add_sum(all_transpositions(), largest_negative(c, -1));
            } else {
                double k1 = largest_negative(c, 1);
                double k2 = largest_negative(c, 2);
                double kc = mode == CancelMode::CrossSum ? largest_negative(c, 0) : 0.0;
                add_sum(local_transpositions(1), k1);
                add_sum(local_transpositions(2), k2);
                std::vector<Transposition> cross;
                for (const auto &t : all_transpositions()) {
                    if (block_of(t) == 0) {
                        cross.push_back(t);
                    }
                }
                add_sum(cross, kc);
            }
        }
        for (auto &[t, v] : c) {
            if (v < 0.0 && v > -kDropTolerance) {
                v = 0.0;
            }
        }
        double duration = step.duration;
        step = PulseStep::make(std::move(c), step.phase, step.kind);
        step.duration = duration + step.max_coefficient() - old_max;
    }
    return out;
}

}  // namespace dfsgates
