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

#include "tdepth/channel.h"

#include <random>
#include <set>

#include "gtest/gtest.h"
#include "tdepth/census.h"
#include "tdepth/error.h"
#include "tdepth/oracle.h"

using namespace tdepth;

namespace {

const DyadicSqrt2Scalar ONE = DyadicSqrt2Scalar::one();
const DyadicSqrt2Scalar H = DyadicSqrt2Scalar::inv_sqrt2();

uint64_t lbl(const char *s) {
    return PauliOperator::from_str(s).label();
}

PauliOperator random_positive(size_t n, std::mt19937_64 &rng) {
    std::uniform_int_distribution<uint64_t> pick(1, (uint64_t{1} << (2 * n)) - 1);
    return PauliOperator::from_label(n, pick(rng));
}

std::vector<GateToken> random_word(size_t n, size_t len, std::mt19937_64 &rng) {
    std::vector<GateToken> w;
    for (size_t k = 0; k < len; k++) {
        size_t a = rng() % n;
        size_t kind = rng() % (n > 1 ? 7 : 4);
        if (kind < 4) {
            w.push_back({static_cast<GateToken::Kind>(kind), a, 0});
        } else {
            size_t b = (a + 1 + rng() % (n - 1)) % n;
            w.push_back({static_cast<GateToken::Kind>(kind), a, b});
        }
    }
    return w;
}

}  // namespace

TEST(channel, identity_and_hadamard) {
    EXPECT_EQ(channel_of_clifford(CliffordTableau::identity(2)), ChannelRep::identity(2));

    ChannelRep h = channel_of_clifford(CliffordTableau::from_gate_word(1, "H 0"));
    EXPECT_EQ(h.at(lbl("I"), lbl("I")), ONE);
    EXPECT_EQ(h.at(lbl("Z"), lbl("X")), ONE);
    EXPECT_EQ(h.at(lbl("X"), lbl("Z")), ONE);
    EXPECT_EQ(h.at(lbl("Y"), lbl("Y")), -ONE);
    EXPECT_TRUE(is_signed_permutation(h));
    EXPECT_EQ(h, oracle::channel_bruteforce(oracle::dense_of_gate_word(1, parse_gate_word("H 0", 1))));
}

TEST(channel, clifford_matches_bruteforce) {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 100; t++) {
        size_t n = 1 + t % 2;
        auto w = random_word(n, 10, rng);
        EXPECT_EQ(channel_of_clifford(CliffordTableau::from_gate_word(n, w)),
                  oracle::channel_bruteforce(oracle::dense_of_gate_word(n, w)))
            << render_gate_word(w);
    }
}

TEST(channel, faithful_on_one_qubit) {
    std::mt19937_64 rng(18);
    std::set<std::string> tableaux, channels;
    for (int t = 0; t < 2000; t++) {
        auto c = random_clifford(1, rng);
        tableaux.insert(c.str());
        channels.insert(channel_of_clifford(c).to_tsv());
    }
    EXPECT_EQ(tableaux.size(), 24u);
    EXPECT_EQ(channels.size(), 24u);
}

TEST(channel, exponential_of_z) {
    ChannelRep r = channel_of_exponential(PauliOperator::z(1, 0));
    EXPECT_EQ(r.at(lbl("X"), lbl("X")), H);
    EXPECT_EQ(r.at(lbl("Y"), lbl("X")), -H);
    EXPECT_EQ(r.at(lbl("X"), lbl("Y")), H);
    EXPECT_EQ(r.at(lbl("Y"), lbl("Y")), H);
    for (const char *c : {"I", "Z"}) {
        for (const char *row : {"I", "X", "Y", "Z"}) {
            EXPECT_EQ(r.at(lbl(row), lbl(c)), row == std::string(c) ? ONE : DyadicSqrt2Scalar());
        }
    }
    EXPECT_EQ(r, oracle::channel_bruteforce(oracle::dense_of_exponential(PauliOperator::z(1, 0))));

    try {
        channel_of_exponential(PauliOperator::identity(2));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::IdentityPauli);
    }
    try {
        channel_of_exponential(-PauliOperator::z(1, 0));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NonPositivePauli);
    }
}

TEST(channel, exponentials_match_bruteforce_and_are_orthogonal) {
    for (size_t n : {1, 2}) {
        for (uint64_t l = 1; l < (uint64_t{1} << (2 * n)); l++) {
            PauliOperator p = PauliOperator::from_label(n, l);
            ChannelRep r = channel_of_exponential(p);
            EXPECT_EQ(r, oracle::channel_bruteforce(oracle::dense_of_exponential(p))) << p;
        }
    }
    std::mt19937_64 rng(19);
    for (int t = 0; t < 30; t++) {
        ChannelRep r = channel_of_exponential(random_positive(3, rng));
        EXPECT_TRUE(r.is_orthogonal());
        EXPECT_FALSE(is_signed_permutation(r));
    }
}

TEST(channel, structured_updates_match_products) {
    std::mt19937_64 rng(20);
    for (int t = 0; t < 30; t++) {
        size_t n = 1 + t % 3;
        CanonicalForm f = random_form(n, rng);
        ChannelRep m = channel_of_canonical(f);
        PauliOperator p = random_positive(n, rng);
        CliffordTableau c = random_clifford(n, rng);

        ChannelRep a = m;
        a.right_multiply_exponential(p);
        EXPECT_EQ(a, multiply(m, channel_of_exponential(p)));
        ChannelRep b = m;
        b.left_multiply_exponential(p);
        EXPECT_EQ(b, multiply(channel_of_exponential(p), m));
        ChannelRep d = m;
        d.right_multiply_clifford(c);
        EXPECT_EQ(d, multiply(m, channel_of_clifford(c)));
        ChannelRep e = m;
        e.left_multiply_clifford(c);
        EXPECT_EQ(e, multiply(channel_of_clifford(c), m));
    }
}

TEST(channel, multiply) {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 50; t++) {
        size_t n = 1 + t % 3;
        CliffordTableau c1 = random_clifford(n, rng), c2 = random_clifford(n, rng);
        ChannelRep a = channel_of_clifford(c1);
        EXPECT_EQ(multiply(a, ChannelRep::identity(n)), a);
        EXPECT_EQ(multiply(a, channel_of_clifford(c2)), channel_of_clifford(compose(c1, c2)));
        ChannelRep f = channel_of_canonical(random_form(n, rng));
        EXPECT_TRUE(multiply(f, a).is_orthogonal());
        EXPECT_TRUE(multiply(f, f).is_orthogonal());
        EXPECT_EQ(f.transpose().transpose(), f);
        EXPECT_TRUE(multiply(f, f.transpose()) == ChannelRep::identity(n));
    }
    EXPECT_THROW(multiply(ChannelRep::identity(1), ChannelRep::identity(2)), Error);
}

TEST(channel, non_orthogonal_is_detected) {
    ChannelRep r = ChannelRep::identity(1);
    r.at(1, 1) = H;
    EXPECT_FALSE(r.is_orthogonal());
    EXPECT_FALSE(ChannelRep(1).is_orthogonal());
}

TEST(channel, canonical_form_channels) {
    EXPECT_EQ(channel_of_canonical(CanonicalForm{PauliSet(2), CliffordTableau::identity(2)}), ChannelRep::identity(2));

    std::vector<PauliOperator> z{PauliOperator::z(1, 0)};
    CanonicalForm f{PauliSet::validate(z), CliffordTableau::identity(1)};
    PauliSpectrum s = pauli_spectrum(channel_of_canonical(f));
    ASSERT_FALSE(s.empty());
    // Smallest nonzero magnitude.
    EXPECT_EQ(s[1].magnitude, H);

    // Ordering of commuting exponentials is irrelevant.
    std::mt19937_64 rng(22);
    for (int t = 0; t < 30; t++) {
        CanonicalForm g = random_form(3, rng);
        std::vector<PauliOperator> order = g.set.elements();
        std::shuffle(order.begin(), order.end(), rng);
        ChannelRep r = ChannelRep::identity(3);
        for (const auto &p : order) {
            r.right_multiply_exponential(p);
        }
        r.right_multiply_clifford(g.clifford);
        EXPECT_EQ(r, channel_of_canonical(g));
    }
}

TEST(channel, layered_channel) {
    std::vector<PauliOperator> a{PauliOperator::from_str("ZI")}, b{PauliOperator::from_str("XX")};
    LayeredForm f{{PauliSet::validate(a), PauliSet::validate(b)}, CliffordTableau::from_gate_word(2, "H 1")};
    ChannelRep expected = multiply(multiply(channel_of_exponential(a[0]), channel_of_exponential(b[0])),
                                   channel_of_clifford(f.clifford));
    EXPECT_EQ(channel_of_layered(f), expected);
}

TEST(channel, unit_rows) {
    ChannelRep r = channel_of_exponential(PauliOperator::z(1, 0));
    EXPECT_EQ(unit_rows(r), (std::vector<uint64_t>{lbl("I"), lbl("Z")}));
    EXPECT_EQ(unit_rows(channel_of_clifford(random_clifford(2, uint64_t{3}))).size(), 16u);

    std::mt19937_64 rng(23);
    for (int t = 0; t < 100; t++) {
        CanonicalForm f = random_form(1 + t % 3, rng);
        EXPECT_EQ(unit_rows(channel_of_canonical(f)), commutant(f.set)) << render(f);
    }
}

TEST(channel, signed_permutation) {
    EXPECT_TRUE(is_signed_permutation(ChannelRep::identity(2)));
    std::mt19937_64 rng(24);
    for (int t = 0; t < 50; t++) {
        size_t n = 1 + t % 3;
        EXPECT_TRUE(is_signed_permutation(channel_of_clifford(random_clifford(n, rng))));
        EXPECT_FALSE(is_signed_permutation(channel_of_canonical(random_form(n, rng))));
    }
    ChannelRep doubled = ChannelRep::identity(1);
    doubled.at(1, 2) = ONE;  // two units in one row
    EXPECT_FALSE(is_signed_permutation(doubled));
}

TEST(channel, spectrum) {
    PauliSpectrum id = pauli_spectrum(ChannelRep::identity(1));
    ASSERT_EQ(id.size(), 2u);
    EXPECT_TRUE(id[0].magnitude.is_zero());
    EXPECT_EQ(id[0].count, 12u);
    EXPECT_EQ(id[1].magnitude, ONE);
    EXPECT_EQ(id[1].count, 4u);
    EXPECT_EQ(reference_spectrum(1, 0), id);

    std::mt19937_64 rng(25);
    for (int t = 0; t < 60; t++) {
        size_t n = 1 + t % 3;
        CanonicalForm f = random_form(n, rng);
        ChannelRep r = channel_of_canonical(f);
        PauliSpectrum s = pauli_spectrum(r);
        EXPECT_EQ(s, reference_spectrum(n, f.t_count()));

        std::vector<PauliOperator> zs;
        for (size_t q = 0; q < f.t_count(); q++) {
            zs.push_back(PauliOperator::z(n, q));
        }
        CanonicalForm ref{PauliSet::validate(zs), CliffordTableau::identity(n)};
        EXPECT_EQ(s, pauli_spectrum(channel_of_canonical(ref)));

        ChannelRep shifted = r;
        shifted.left_multiply_clifford(random_clifford(n, rng));
        shifted.right_multiply_clifford(random_clifford(n, rng));
        EXPECT_EQ(pauli_spectrum(shifted), s);

        uint64_t total = 0;
        for (const auto &e : s) {
            total += e.count;
        }
        EXPECT_EQ(total, r.dim() * r.dim());
    }
}

TEST(channel, infer_t_count) {
    EXPECT_EQ(infer_t_count(ChannelRep::identity(3)), 0u);
    std::vector<PauliOperator> z{PauliOperator::z(1, 0)};
    EXPECT_EQ(infer_t_count(channel_of_canonical(CanonicalForm{PauliSet::validate(z), CliffordTableau::identity(1)})),
              1u);

    // T-depth two products fall outside the depth-one spectrum pattern.
    auto expect_mismatch = [](const ChannelRep &r) {
        try {
            infer_t_count(r);
            ADD_FAILURE() << "accepted a channel outside the depth-one class";
        } catch (const Error &e) {
            EXPECT_EQ(e.kind(), ErrorKind::SpectrumMismatch);
        }
    };
    expect_mismatch(multiply(channel_of_exponential(PauliOperator::z(1, 0)), channel_of_exponential(PauliOperator::x(1, 0))));
    // Three non-commuting rotations on one qubit, padded to three qubits: the smallest magnitude
    // suggests T-count 3 but the multiset is not the T x T x T one.
    ChannelRep three = channel_of_exponential(PauliOperator::from_str("ZII"));
    three.right_multiply_exponential(PauliOperator::from_str("XII"));
    three.right_multiply_exponential(PauliOperator::from_str("ZII"));
    EXPECT_NE(pauli_spectrum(three), reference_spectrum(3, 3));
    expect_mismatch(three);

    // Spectrum matching is only a necessary condition: Rz Rx on one qubit of two has exactly the
    // T x T multiset, so it is accepted with T-count 2.
    ChannelRep padded = multiply(channel_of_exponential(PauliOperator::from_str("ZI")),
                                 channel_of_exponential(PauliOperator::from_str("XI")));
    EXPECT_EQ(pauli_spectrum(padded), reference_spectrum(2, 2));
    EXPECT_EQ(infer_t_count(padded), 2u);
    ChannelRep zero(1);
    expect_mismatch(zero);

    for (size_t n : {1, 2}) {
        for (const auto &f : all_forms(n)) {
            EXPECT_EQ(infer_t_count(channel_of_canonical(f)), f.t_count());
        }
    }
}

TEST(channel, reconciliation) {
    std::mt19937_64 rng(26);
    for (int t = 0; t < 40; t++) {
        size_t n = 1 + t % 3;
        CanonicalForm a = random_form(n, rng, true), b = random_form(n, rng, true);
        ChannelRep ra = channel_of_canonical(a), rb = channel_of_canonical(b);
        ChannelRep shifted = ra;
        shifted.right_multiply_clifford(random_clifford(n, rng));

        bool literal = is_signed_permutation(multiply(ra.transpose(), rb));
        EXPECT_EQ(reconcilable_by_signed_permutation(ra, rb), literal);
        EXPECT_EQ(literal, a.set == b.set);
        EXPECT_TRUE(reconcilable_by_signed_permutation(ra, shifted));
        EXPECT_TRUE(is_signed_permutation(multiply(ra.transpose(), shifted)));
        SignedColumnIndex ia(ra), ib(rb), is(shifted);
        EXPECT_EQ(ia.covers(ib), literal);
        EXPECT_TRUE(ia.covers(is));
        EXPECT_TRUE(is.covers(ia));
    }
}

TEST(channel, tsv) {
    std::string tsv = channel_of_exponential(PauliOperator::z(1, 0)).to_tsv();
    EXPECT_EQ(tsv.substr(0, tsv.find('\n')), "\tI\tZ\tX\tY");
    EXPECT_NE(tsv.find("√2"), std::string::npos);
}

TEST(channel, size_guard) {
    EXPECT_THROW(ChannelRep(6), Error);
}
