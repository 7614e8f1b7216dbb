// Copyright 2026 The drbench Authors
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

#include <gtest/gtest.h>

#include "drbench/gates.h"
#include "drbench/protocols.h"
#include "drbench/simulator.h"

using namespace drbench;

namespace {

ExperimentDesign drb_design(int n, double p_cnot = 0.5) {
    ExperimentDesign d;
    d.protocol = Protocol::DRB;
    d.device = DeviceSpec::all_to_all(n);
    d.sampler = SamplerSpec::pcnot(p_cnot);
    d.lengths = {0, 3, 7};
    d.circuits_per_length = 5;
    d.shots = 10;
    d.seed = 1234;
    d.compile.trials = 2;
    return d;
}

}  // namespace

TEST(DrbGeneration, LengthZeroIsPrepThenMeas) {
    ExperimentDesign d = drb_design(3);
    Rng rng(1);
    for (int k = 0; k < 20; k++) {
        Circuit c = generate_drb_circuit(d, 0, rng);
        EXPECT_EQ(c.stage_depth(Stage::Core), 0u);
        verify_composition(c);
        Rng sim(2);
        EXPECT_EQ(simulate_circuit(c, build_model_zero(3), 50, sim).successes, 50u);
    }
}

TEST(DrbGeneration, CoreLayerCountAndComposition) {
    Rng rng(3);
    for (int n : {1, 2, 4, 6}) {
        ExperimentDesign d = drb_design(n);
        for (int m : {1, 4, 9}) {
            Circuit c = generate_drb_circuit(d, m, rng);
            EXPECT_EQ(c.stage_depth(Stage::Core), static_cast<size_t>(m));
            EXPECT_EQ(apply_clifford(circuit_clifford(c), StabilizerState::zero(n)), StabilizerState::basis(c.target));
        }
    }
}

TEST(DrbGeneration, CrosstalkDeviceRespectsEdges) {
    ExperimentDesign d;
    d.device = DeviceSpec::ring_with_center5();
    d.sampler = SamplerSpec::category({0.25, 0.5, 0.25}, {{}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {{4, 0}, {4, 1}, {4, 2}, {4, 3}}});
    Rng rng(4);
    for (int k = 0; k < 30; k++) {
        Circuit c = generate_drb_circuit(d, 6, rng);
        check_against_device(c, d.device);
    }
}

TEST(DrbGeneration, FrameRandomizationModes) {
    Rng rng(5);
    for (bool physical : {false, true}) {
        ExperimentDesign d = drb_design(4, 0.75);
        d.frame_randomization = true;
        d.emit_frame_physically = physical;
        d.device.gate_set = GateSet::C24;
        for (int k = 0; k < 30; k++) {
            Circuit c = generate_drb_circuit(d, 8, rng);
            verify_composition(c);
            if (!physical) {
                EXPECT_EQ(c.stage_depth(Stage::Core), 8u);
                continue;
            }
            // Dropping the Pauli gates leaves the same Clifford up to a Pauli.
            Circuit stripped = c;
            for (auto &layer : stripped.layers) {
                if (layer.stage != Stage::Core) {
                    continue;
                }
                std::erase_if(layer.gates, [](const Gate &g) {
                    return !g.is_cnot() && (g.clifford == c1::x() || g.clifford == c1::y() || g.clifford == c1::z());
                });
            }
            EXPECT_EQ(circuit_clifford(stripped).s(), circuit_clifford(c).s());
        }
    }
}

TEST(CrbGeneration, SmallLengths) {
    ExperimentDesign d = drb_design(3);
    d.protocol = Protocol::CRB;
    Rng rng(6);
    Circuit c0 = generate_crb_circuit(d, 0, rng);
    EXPECT_TRUE(circuit_clifford(c0).is_identity());
    EXPECT_TRUE(c0.target.none());
    Circuit c1 = generate_crb_circuit(d, 1, rng);
    EXPECT_TRUE(circuit_clifford(c1).is_identity());
}

TEST(CrbGeneration, NoiselessSuccessIsOne) {
    ExperimentDesign d = drb_design(3);
    d.protocol = Protocol::CRB;
    d.device = DeviceSpec::ring(3);
    Rng rng(7);
    ErrorModel zero = build_model_zero(3);
    for (int k = 0; k < 200; k++) {
        int m = static_cast<int>(rng.uniform(21));
        Circuit c = generate_crb_circuit(d, m, rng);
        Rng sim(k);
        EXPECT_EQ(simulate_circuit(c, zero, 5, sim).successes, 5u);
    }
}

TEST(Experiment, CountsAndDeterminism) {
    ExperimentDesign d = drb_design(3);
    d.lengths = {0, 5, 10};
    d.circuits_per_length = 28;
    Experiment a = generate_experiment(d, 1);
    EXPECT_EQ(a.circuits.size(), 84u);
    Experiment b = generate_experiment(d, 4);
    ASSERT_EQ(a.circuits.size(), b.circuits.size());
    for (size_t k = 0; k < a.circuits.size(); k++) {
        EXPECT_EQ(circuit_to_text(a.circuits[k]), circuit_to_text(b.circuits[k]));
    }
    EXPECT_EQ(a.circuits[0].id, "m0-0000");
    EXPECT_EQ(a.circuits[0].seed, circuit_seed(d.seed, 0, 0));
    EXPECT_GT(a.compile_stats.count, 0u);
}

TEST(Experiment, DefaultDesignMatchesExperiments) {
    ExperimentDesign d;
    EXPECT_EQ(d.lengths, (std::vector<int>{0, 5, 10, 15, 20, 25, 30}));
    EXPECT_EQ(d.circuits_per_length, 28);
    EXPECT_EQ(d.shots, 1024);
}

TEST(Experiment, ValidationErrors) {
    ExperimentDesign d = drb_design(3);
    d.lengths = {5, 0};
    EXPECT_THROW(d.validate(), std::invalid_argument);
    d = drb_design(3);
    d.circuits_per_length = 0;
    EXPECT_THROW(d.validate(), std::invalid_argument);
    d = drb_design(3);
    d.device.edges.clear();
    EXPECT_THROW(d.validate(), std::invalid_argument);
}

TEST(CircuitText, RoundTrip) {
    ExperimentDesign d = drb_design(4);
    Rng rng(8);
    Circuit c = generate_drb_circuit(d, 5, rng);
    c.id = "m5-0001";
    c.seed = 99;
    EXPECT_EQ(circuit_from_text(circuit_to_text(c)), c);
    EXPECT_THROW(circuit_from_text("# n=2\nFOO 0\n"), std::invalid_argument);
    EXPECT_THROW(circuit_from_text("# n=2\nCNOT 0,5\n"), std::invalid_argument);
    EXPECT_THROW(circuit_from_text("H 0\n"), std::invalid_argument);
}
