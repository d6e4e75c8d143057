// Copyright 2026 The tdepth Authors
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

#include "tdepth/clifford.h"

#include <cmath>
#include <map>
#include <random>

#include "gtest/gtest.h"
#include "tdepth/error.h"
#include "tdepth/oracle.h"

using namespace tdepth;

namespace {

PauliOperator random_pauli(size_t n, std::mt19937_64 &rng) {
    uint64_t mask = (uint64_t{1} << n) - 1;
    return PauliOperator(n, rng() & mask, rng() & mask, rng() & 3);
}

std::vector<GateToken> all_gates(size_t n) {
    std::vector<GateToken> out;
    for (size_t a = 0; a < n; a++) {
        for (auto k : {GateToken::Kind::H, GateToken::Kind::S, GateToken::Kind::X, GateToken::Kind::Z}) {
            out.push_back({k, a, 0});
        }
        for (size_t b = 0; b < n; b++) {
            if (a != b) {
                for (auto k : {GateToken::Kind::CX, GateToken::Kind::CZ, GateToken::Kind::SWAP}) {
                    out.push_back({k, a, b});
                }
            }
        }
    }
    return out;
}

// C P C^dagger from dense matrices, read back as a signed Pauli.
PauliOperator dense_conjugate(const oracle::DenseMatrix &c, const PauliOperator &p) {
    auto m = c * oracle::dense_of_pauli(p) * c.adjoint();
    size_t n = p.num_qubits();
    for (uint64_t l = 0; l < (uint64_t{1} << (2 * n)); l++) {
        for (uint8_t e = 0; e < 4; e++) {
            PauliOperator q = PauliOperator::from_label(n, l).with_phase(e);
            if (oracle::dense_of_pauli(q) == m) {
                return q;
            }
        }
    }
    ADD_FAILURE() << "conjugate of " << p << " is not a Pauli";
    return p;
}

}  // namespace

TEST(gate_word, parse) {
    auto w = parse_gate_word("H 0; CX 0 1\nSWAP 1 2;S 2", 3);
    ASSERT_EQ(w.size(), 4u);
    EXPECT_EQ(w[1].kind, GateToken::Kind::CX);
    EXPECT_EQ(w[1].q0, 0u);
    EXPECT_EQ(w[1].q1, 1u);
    EXPECT_EQ(render_gate_word(w), "H 0; CX 0 1; SWAP 1 2; S 2");
    EXPECT_TRUE(parse_gate_word("", 2).empty());
    EXPECT_TRUE(parse_gate_word(" ; \n", 2).empty());

    EXPECT_THROW(parse_gate_word("T 0", 1), ParseError);
    EXPECT_THROW(parse_gate_word("CX 0", 2), ParseError);
    EXPECT_THROW(parse_gate_word("H 0 1", 2), ParseError);
    EXPECT_THROW(parse_gate_word("CX 1 1", 2), ParseError);
    EXPECT_THROW(parse_gate_word("H x", 2), ParseError);
    try {
        parse_gate_word("H 5", 2);
        FAIL();
    } catch (const ParseError &) {
        FAIL() << "index errors are not parse errors";
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::IndexOutOfRange);
    }
}

TEST(tableau, single_gates) {
    auto h = CliffordTableau::from_gate_word(1, "H 0");
    EXPECT_EQ(h.conjugate(PauliOperator::x(1, 0)), PauliOperator::z(1, 0));
    EXPECT_EQ(h.conjugate(PauliOperator::z(1, 0)), PauliOperator::x(1, 0));
    EXPECT_EQ(h.conjugate(PauliOperator::y(1, 0)), -PauliOperator::y(1, 0));

    auto s = CliffordTableau::from_gate_word(1, "S 0");
    EXPECT_EQ(s.conjugate(PauliOperator::x(1, 0)), PauliOperator::y(1, 0));
    EXPECT_EQ(s.conjugate(PauliOperator::y(1, 0)), -PauliOperator::x(1, 0));
    EXPECT_EQ(s.str(), "+Y,+Z");

    EXPECT_TRUE(CliffordTableau::from_gate_word(2, "").is_identity());
    EXPECT_EQ(CliffordTableau::from_gate_word(2, ""), CliffordTableau::identity(2));
}

TEST(tableau, gates_match_dense_conjugation) {
    for (size_t n : {1, 2}) {
        for (const auto &g : all_gates(n)) {
            auto c = CliffordTableau::from_gate(n, g);
            auto d = oracle::dense_of_gate(n, g);
            ASSERT_TRUE(d.is_unitary());
            for (uint64_t l = 0; l < (uint64_t{1} << (2 * n)); l++) {
                PauliOperator p = PauliOperator::from_label(n, l);
                EXPECT_EQ(c.conjugate(p), dense_conjugate(d, p)) << g.str() << " on " << p;
            }
        }
    }
}

TEST(tableau, gate_words_match_dense_conjugation) {
    std::mt19937_64 rng(9);
    auto gates = all_gates(3);
    for (int t = 0; t < 20; t++) {
        std::vector<GateToken> w;
        for (int k = 0; k < 8; k++) {
            w.push_back(gates[rng() % gates.size()]);
        }
        auto c = CliffordTableau::from_gate_word(3, w);
        auto d = oracle::dense_of_gate_word(3, w);
        for (int k = 0; k < 6; k++) {
            PauliOperator p = random_pauli(3, rng);
            EXPECT_EQ(c.conjugate(p), dense_conjugate(d, p)) << render_gate_word(w);
        }
    }
}

TEST(tableau, automorphism) {
    std::mt19937_64 rng(10);
    for (int t = 0; t < 300; t++) {
        size_t n = 1 + t % 5;
        auto c = random_clifford(n, rng);
        EXPECT_EQ(conjugate_pauli(CliffordTableau::identity(n), random_pauli(n, rng)).num_qubits(), n);
        PauliOperator p = random_pauli(n, rng), q = random_pauli(n, rng);
        EXPECT_EQ(conjugate_pauli(CliffordTableau::identity(n), p), p);
        EXPECT_EQ(c.conjugate(p * q), c.conjugate(p) * c.conjugate(q));
        EXPECT_EQ(commutes(p, q), commutes(c.conjugate(p), c.conjugate(q)));
        EXPECT_EQ(c.conjugate(p).phase() & 1, p.phase() & 1);
    }
    EXPECT_THROW(CliffordTableau::identity(2).conjugate(PauliOperator::x(3, 0)), Error);
}

TEST(tableau, compose_and_inverse) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; t++) {
        size_t n = 1 + t % 4;
        auto a = random_clifford(n, rng), b = random_clifford(n, rng), c = random_clifford(n, rng);
        EXPECT_TRUE(compose(inverse(a), a).is_identity());
        EXPECT_TRUE(compose(a, inverse(a)).is_identity());
        EXPECT_EQ(inverse(inverse(a)), a);
        EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
        PauliOperator p = random_pauli(n, rng);
        EXPECT_EQ(compose(a, b).conjugate(p), a.conjugate(b.conjugate(p)));
    }
    // (HS)^3 is a global phase.
    EXPECT_TRUE(CliffordTableau::from_gate_word(1, "H 0; S 0; H 0; S 0; H 0; S 0").is_identity());
    EXPECT_THROW(compose(CliffordTableau::identity(1), CliffordTableau::identity(2)), Error);
}

TEST(tableau, gate_word_order) {
    // The leftmost gate is applied last: "S 0; H 0" is the matrix S*H.
    auto c = CliffordTableau::from_gate_word(1, "S 0; H 0");
    auto s = CliffordTableau::from_gate_word(1, "S 0");
    auto h = CliffordTableau::from_gate_word(1, "H 0");
    EXPECT_EQ(c, compose(s, h));
    EXPECT_EQ(c.conjugate(PauliOperator::z(1, 0)), PauliOperator::y(1, 0));
}

TEST(tableau, str_round_trip) {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 100; t++) {
        auto c = random_clifford(1 + t % 4, rng);
        EXPECT_EQ(CliffordTableau::from_str(c.str()), c);
    }
    EXPECT_EQ(CliffordTableau::from_str("id", 3), CliffordTableau::identity(3));
    EXPECT_THROW(CliffordTableau::from_str("+Z,+Z"), Error);
    EXPECT_THROW(CliffordTableau::from_str("+X"), Error);
}

TEST(tableau, from_images_validation) {
    EXPECT_NO_THROW(CliffordTableau::from_images({PauliOperator::z(1, 0)}, {-PauliOperator::x(1, 0)}));
    EXPECT_THROW(CliffordTableau::from_images({PauliOperator::z(1, 0)}, {PauliOperator::z(1, 0)}), Error);
    EXPECT_THROW(CliffordTableau::from_images({PauliOperator::x(1, 0).times_i_power(1)}, {PauliOperator::z(1, 0)}),
                 Error);
}

TEST(tableau, quarter_rotation_matches_dense) {
    for (size_t n : {1, 2}) {
        for (uint64_t l = 1; l < (uint64_t{1} << (2 * n)); l++) {
            PauliOperator p = PauliOperator::from_label(n, l);
            auto e = oracle::dense_of_exponential(p);
            auto plus_quarter = e * e;  // exp(+i pi P / 4)
            auto minus_quarter = plus_quarter.adjoint();
            for (int sign : {+1, -1}) {
                auto c = CliffordTableau::pauli_quarter_rotation(p, sign);
                const auto &d = sign > 0 ? minus_quarter : plus_quarter;
                for (uint64_t q = 0; q < (uint64_t{1} << (2 * n)); q++) {
                    PauliOperator qp = PauliOperator::from_label(n, q);
                    EXPECT_EQ(c.conjugate(qp), dense_conjugate(d, qp)) << p << " sign " << sign << " on " << qp;
                }
            }
        }
    }
}

TEST(synthesize_mapping, standard_sets) {
    for (size_t n = 1; n <= 4; n++) {
        for (size_t m = 1; m <= n; m++) {
            std::vector<PauliOperator> zs;
            for (size_t q = 0; q < m; q++) {
                zs.push_back(PauliOperator::z(n, q));
            }
            PauliSet s = PauliSet::validate(zs);
            auto c = synthesize_mapping(s);
            for (size_t k = 0; k < m; k++) {
                EXPECT_EQ(c.conjugate(s[k]), PauliOperator::z(n, k));
            }
        }
    }
}

TEST(synthesize_mapping, zz) {
    std::vector<PauliOperator> v{PauliOperator::from_str("ZZ")};
    PauliSet s = PauliSet::validate(v);
    auto c = synthesize_mapping(s);
    EXPECT_EQ(c.conjugate(s[0]), PauliOperator::from_str("ZI"));

    // A hand-picked alternative that qualifies: CX with control on the second qubit.
    auto cx = CliffordTableau::from_gate_word(2, "CX 1 0");
    EXPECT_EQ(cx.conjugate(s[0]), PauliOperator::from_str("ZI"));
    auto d = oracle::dense_of_gate_word(2, parse_gate_word("CX 1 0", 2));
    EXPECT_EQ(dense_conjugate(d, s[0]), PauliOperator::from_str("ZI"));
}

TEST(synthesize_mapping, random_sets) {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 500; t++) {
        size_t n = 1 + t % 4;
        size_t m = 1 + rng() % n;
        std::vector<PauliOperator> chosen;
        F2Basis basis;
        while (chosen.size() < m) {
            PauliOperator p = random_pauli(n, rng).unsigned_part();
            bool ok = std::all_of(chosen.begin(), chosen.end(), [&](auto &q) { return commutes(p, q); });
            if (ok && basis.insert(p)) {
                chosen.push_back(p);
            }
        }
        PauliSet s = PauliSet::validate(chosen);
        auto c = synthesize_mapping(s);
        ASSERT_TRUE(c.is_symplectic());
        for (size_t k = 0; k < m; k++) {
            EXPECT_EQ(c.conjugate(s[k]), PauliOperator::z(n, k)) << s.str();
        }
        // Deterministic.
        EXPECT_EQ(synthesize_mapping(s), c);
    }
    EXPECT_THROW(synthesize_mapping(PauliSet(2)), Error);
}

TEST(random_clifford, symplectic_and_reproducible) {
    std::mt19937_64 rng(14);
    for (int t = 0; t < 10000; t++) {
        auto c = random_clifford(1 + t % 6, rng);
        ASSERT_TRUE(c.is_symplectic());
        for (const auto &p : c.x_images()) {
            ASSERT_TRUE(p.is_hermitian());
        }
    }
    EXPECT_EQ(random_clifford(4, uint64_t{77}), random_clifford(4, uint64_t{77}));
    EXPECT_NE(random_clifford(4, uint64_t{77}), random_clifford(4, uint64_t{78}));
}

TEST(random_clifford, uniform_on_one_qubit) {
    std::mt19937_64 rng(15);
    std::map<std::string, uint64_t> counts;
    const int draws = 100000;
    for (int t = 0; t < draws; t++) {
        counts[random_clifford(1, rng).str()]++;
    }
    ASSERT_EQ(counts.size(), 24u);
    double expected = draws / 24.0;
    double chi2 = 0;
    for (const auto &[key, c] : counts) {
        chi2 += (c - expected) * (c - expected) / expected;
    }
    // 23 degrees of freedom: mean 23, standard deviation sqrt(46).
    EXPECT_LT(chi2, 23 + 5 * std::sqrt(46.0)) << chi2;
}

TEST(group_order, small_widths) {
    EXPECT_EQ(group_order(1), 24);
    EXPECT_EQ(group_order(2), 11520);
    EXPECT_EQ(group_order(3), 92897280);
    EXPECT_EQ(group_order(4), BigInt("12128668876800"));
}

TEST(z_diagonal, examples_and_image_shape) {
    EXPECT_TRUE(is_z_diagonal(CliffordTableau::identity(3)));
    EXPECT_FALSE(is_z_diagonal(CliffordTableau::from_gate_word(1, "H 0")));
    EXPECT_FALSE(is_z_diagonal(CliffordTableau::from_gate_word(1, "X 0")));
    EXPECT_TRUE(is_z_diagonal(CliffordTableau::from_gate_word(2, "S 0; CZ 0 1; Z 1")));

    std::mt19937_64 rng(16);
    std::vector<GateToken> diagonal_gates;
    for (const auto &g : all_gates(3)) {
        if (g.kind == GateToken::Kind::S || g.kind == GateToken::Kind::Z || g.kind == GateToken::Kind::CZ) {
            diagonal_gates.push_back(g);
        }
    }
    size_t found = 0;
    for (int t = 0; t < 3000; t++) {
        size_t n = 1 + t % 3;
        CliffordTableau c;
        if (t % 2 == 0 && n == 3) {
            std::vector<GateToken> w;
            for (int k = 0; k < 6; k++) {
                w.push_back(diagonal_gates[rng() % diagonal_gates.size()]);
            }
            c = CliffordTableau::from_gate_word(3, w);
        } else {
            c = random_clifford(n, rng);
        }
        if (!c.is_z_diagonal()) {
            continue;
        }
        found++;
        for (size_t j = 0; j < n; j++) {
            const PauliOperator &img = c.x_images()[j];
            EXPECT_EQ(img.xs(), PauliOperator::x(n, j).xs());
        }
    }
    EXPECT_GT(found, 500u);
}
