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

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "tdepth/error.h"

namespace tdepth {

namespace {

bool anticommutes(const PauliOperator &a, const PauliOperator &b) {
    return !commutes(a, b);
}

PauliOperator pauli_from_u128(size_t n, unsigned __int128 v) {
    return PauliOperator(n, static_cast<uint64_t>(v >> 64), static_cast<uint64_t>(v));
}

// Symplectic Gram-Schmidt over the span of `vectors`. Returns hyperbolic pairs (e, f) with
// e and f anticommuting and every pair commuting with every other pair. Vectors are consumed in
// order, so the output is deterministic.
std::vector<std::pair<PauliOperator, PauliOperator>> symplectic_gram_schmidt(std::vector<PauliOperator> vectors) {
    std::vector<std::pair<PauliOperator, PauliOperator>> pairs;
    size_t head = 0;
    while (head < vectors.size()) {
        PauliOperator e = vectors[head++];
        if (e.is_identity_up_to_phase()) {
            continue;
        }
        size_t partner = head;
        while (partner < vectors.size() && !anticommutes(e, vectors[partner])) {
            partner++;
        }
        if (partner == vectors.size()) {
            throw std::logic_error("symplectic_gram_schmidt: degenerate input span");
        }
        PauliOperator f = vectors[partner];
        vectors.erase(vectors.begin() + static_cast<std::ptrdiff_t>(partner));
        for (size_t k = head; k < vectors.size(); k++) {
            PauliOperator b = vectors[k];
            if (anticommutes(b, f)) {
                b = b * e;
            }
            if (anticommutes(vectors[k], e)) {
                b = b * f;
            }
            vectors[k] = b.unsigned_part();
        }
        pairs.emplace_back(e.unsigned_part(), f.unsigned_part());
    }
    return pairs;
}

size_t parse_index(std::string_view token, size_t offset) {
    size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
        throw ParseError(offset, "expected a qubit index, got '" + std::string(token) + "'");
    }
    return value;
}

}  // namespace

////////////////////////////////////////////////////////////////////////////////
// Gate words

std::string GateToken::str() const {
    switch (kind) {
        case Kind::H:
            return "H " + std::to_string(q0);
        case Kind::S:
            return "S " + std::to_string(q0);
        case Kind::X:
            return "X " + std::to_string(q0);
        case Kind::Z:
            return "Z " + std::to_string(q0);
        case Kind::CX:
            return "CX " + std::to_string(q0) + " " + std::to_string(q1);
        case Kind::CZ:
            return "CZ " + std::to_string(q0) + " " + std::to_string(q1);
        case Kind::SWAP:
            return "SWAP " + std::to_string(q0) + " " + std::to_string(q1);
    }
    return "?";
}

std::vector<GateToken> parse_gate_word(std::string_view text, size_t num_qubits) {
    std::vector<GateToken> out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find_first_of(";\n", start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view segment = text.substr(start, end - start);

        // Split the segment on whitespace, remembering offsets for error reporting.
        std::vector<std::pair<std::string_view, size_t>> parts;
        size_t p = 0;
        while (p < segment.size()) {
            while (p < segment.size() && (segment[p] == ' ' || segment[p] == '\t' || segment[p] == '\r')) {
                p++;
            }
            size_t q = p;
            while (q < segment.size() && segment[q] != ' ' && segment[q] != '\t' && segment[q] != '\r') {
                q++;
            }
            if (q > p) {
                parts.emplace_back(segment.substr(p, q - p), start + p);
            }
            p = q;
        }

        if (!parts.empty()) {
            auto [name, offset] = parts[0];
            GateToken tok{};
            size_t arity = 1;
            if (name == "H") {
                tok.kind = GateToken::Kind::H;
            } else if (name == "S") {
                tok.kind = GateToken::Kind::S;
            } else if (name == "X") {
                tok.kind = GateToken::Kind::X;
            } else if (name == "Z") {
                tok.kind = GateToken::Kind::Z;
            } else if (name == "CX") {
                tok.kind = GateToken::Kind::CX;
                arity = 2;
            } else if (name == "CZ") {
                tok.kind = GateToken::Kind::CZ;
                arity = 2;
            } else if (name == "SWAP") {
                tok.kind = GateToken::Kind::SWAP;
                arity = 2;
            } else {
                throw ParseError(offset, "BadToken: unknown gate '" + std::string(name) + "'");
            }
            if (parts.size() != arity + 1) {
                throw ParseError(
                    offset, "BadToken: gate " + std::string(name) + " takes " + std::to_string(arity) + " qubit(s)");
            }
            tok.q0 = parse_index(parts[1].first, parts[1].second);
            if (arity == 2) {
                tok.q1 = parse_index(parts[2].first, parts[2].second);
            }
            if (tok.q0 >= num_qubits || (arity == 2 && tok.q1 >= num_qubits)) {
                throw Error(
                    ErrorKind::IndexOutOfRange,
                    "gate '" + tok.str() + "' on " + std::to_string(num_qubits) + " qubit(s)");
            }
            if (arity == 2 && tok.q0 == tok.q1) {
                throw ParseError(offset, "BadToken: two-qubit gate on a repeated qubit");
            }
            out.push_back(tok);
        }
        start = end + 1;
    }
    return out;
}

std::string render_gate_word(const std::vector<GateToken> &word) {
    std::string out;
    for (size_t k = 0; k < word.size(); k++) {
        if (k) {
            out += "; ";
        }
        out += word[k].str();
    }
    return out;
}

////////////////////////////////////////////////////////////////////////////////
// CliffordTableau

CliffordTableau::CliffordTableau(size_t num_qubits) : n_(num_qubits) {
    xs_.reserve(num_qubits);
    zs_.reserve(num_qubits);
    for (size_t q = 0; q < num_qubits; q++) {
        xs_.push_back(PauliOperator::x(num_qubits, q));
        zs_.push_back(PauliOperator::z(num_qubits, q));
    }
}

CliffordTableau CliffordTableau::from_images(std::vector<PauliOperator> x_images, std::vector<PauliOperator> z_images) {
    if (x_images.size() != z_images.size()) {
        throw Error(ErrorKind::InvalidArgument, "tableau needs as many X images as Z images");
    }
    CliffordTableau out;
    out.n_ = x_images.size();
    for (const auto &p : x_images) {
        if (p.num_qubits() != out.n_) {
            throw Error(ErrorKind::MismatchedQubits, "tableau image width differs from qubit count");
        }
    }
    for (const auto &p : z_images) {
        if (p.num_qubits() != out.n_) {
            throw Error(ErrorKind::MismatchedQubits, "tableau image width differs from qubit count");
        }
    }
    out.xs_ = std::move(x_images);
    out.zs_ = std::move(z_images);
    if (!out.is_symplectic()) {
        throw Error(ErrorKind::InvalidArgument, "tableau images are not Hermitian and symplectic");
    }
    return out;
}

CliffordTableau CliffordTableau::from_gate(size_t n, const GateToken &g) {
    if (g.q0 >= n || (g.is_two_qubit() && g.q1 >= n)) {
        throw Error(ErrorKind::IndexOutOfRange, "gate '" + g.str() + "' on " + std::to_string(n) + " qubit(s)");
    }
    CliffordTableau t(n);
    size_t a = g.q0, b = g.q1;
    switch (g.kind) {
        case GateToken::Kind::H:
            std::swap(t.xs_[a], t.zs_[a]);
            break;
        case GateToken::Kind::S:
            t.xs_[a] = PauliOperator::y(n, a);
            break;
        case GateToken::Kind::X:
            t.zs_[a] = -t.zs_[a];
            break;
        case GateToken::Kind::Z:
            t.xs_[a] = -t.xs_[a];
            break;
        case GateToken::Kind::CX:
            t.xs_[a] = PauliOperator::x(n, a) * PauliOperator::x(n, b);
            t.zs_[b] = PauliOperator::z(n, a) * PauliOperator::z(n, b);
            break;
        case GateToken::Kind::CZ:
            t.xs_[a] = PauliOperator::x(n, a) * PauliOperator::z(n, b);
            t.xs_[b] = PauliOperator::z(n, a) * PauliOperator::x(n, b);
            break;
        case GateToken::Kind::SWAP:
            std::swap(t.xs_[a], t.xs_[b]);
            std::swap(t.zs_[a], t.zs_[b]);
            break;
    }
    return t;
}

CliffordTableau CliffordTableau::from_gate_word(size_t num_qubits, const std::vector<GateToken> &word) {
    CliffordTableau result(num_qubits);
    for (const auto &g : word) {
        result = compose(result, from_gate(num_qubits, g));
    }
    return result;
}

CliffordTableau CliffordTableau::from_gate_word(size_t num_qubits, std::string_view text) {
    return from_gate_word(num_qubits, parse_gate_word(text, num_qubits));
}

CliffordTableau CliffordTableau::pauli_quarter_rotation(const PauliOperator &p, int sign) {
    if (!p.is_hermitian()) {
        throw Error(ErrorKind::NonHermitianInput, p.str() + " is not Hermitian");
    }
    size_t n = p.num_qubits();
    CliffordTableau t(n);
    // exp(-i s pi P/4) Q exp(i s pi P/4) = -i s P Q for anticommuting Q.
    int power = sign > 0 ? 3 : 1;
    for (size_t q = 0; q < n; q++) {
        if (!commutes(p, t.xs_[q])) {
            t.xs_[q] = (p * t.xs_[q]).times_i_power(power);
        }
        if (!commutes(p, t.zs_[q])) {
            t.zs_[q] = (p * t.zs_[q]).times_i_power(power);
        }
    }
    return t;
}

PauliOperator CliffordTableau::conjugate(const PauliOperator &p) const {
    if (p.num_qubits() != n_) {
        throw Error(ErrorKind::MismatchedQubits, "conjugating a " + std::to_string(p.num_qubits()) +
                                                     "-qubit Pauli by a " + std::to_string(n_) + "-qubit Clifford");
    }
    // i^e W = i^{e + |x&z|} X^x Z^z, and conjugation distributes over the product.
    int e = p.phase() + static_cast<int>(__builtin_popcountll(p.xs() & p.zs()));
    PauliOperator r = PauliOperator::identity(n_).times_i_power(e);
    for (size_t q = 0; q < n_; q++) {
        if (p.x_bit(q)) {
            r = r * xs_[q];
        }
    }
    for (size_t q = 0; q < n_; q++) {
        if (p.z_bit(q)) {
            r = r * zs_[q];
        }
    }
    return r;
}

CliffordTableau CliffordTableau::inverse() const {
    CliffordTableau out(n_);
    auto preimage = [&](const PauliOperator &g) {
        // The x_j bit of C^dagger G C is w(G, C Z_j C^dagger), its z_j bit is w(G, C X_j C^dagger).
        uint64_t xs = 0, zs = 0;
        for (size_t j = 0; j < n_; j++) {
            uint64_t bit = uint64_t{1} << (n_ - 1 - j);
            if (!commutes(g, zs_[j])) {
                xs |= bit;
            }
            if (!commutes(g, xs_[j])) {
                zs |= bit;
            }
        }
        PauliOperator q(n_, xs, zs, 0);
        if (conjugate(q) != g) {
            q = -q;
        }
        return q;
    };
    for (size_t j = 0; j < n_; j++) {
        out.xs_[j] = preimage(PauliOperator::x(n_, j));
        out.zs_[j] = preimage(PauliOperator::z(n_, j));
    }
    return out;
}

bool CliffordTableau::is_identity() const {
    return *this == CliffordTableau(n_);
}

bool CliffordTableau::is_symplectic() const {
    if (xs_.size() != n_ || zs_.size() != n_) {
        return false;
    }
    for (size_t i = 0; i < n_; i++) {
        if (!xs_[i].is_hermitian() || !zs_[i].is_hermitian()) {
            return false;
        }
        for (size_t j = 0; j < n_; j++) {
            if (commutes(xs_[i], zs_[j]) != (i != j)) {
                return false;
            }
            if (!commutes(xs_[i], xs_[j]) || !commutes(zs_[i], zs_[j])) {
                return false;
            }
        }
    }
    return true;
}

bool CliffordTableau::is_z_diagonal() const {
    for (size_t q = 0; q < n_; q++) {
        if (zs_[q] != PauliOperator::z(n_, q)) {
            return false;
        }
    }
    return true;
}

std::string CliffordTableau::str() const {
    std::string out;
    for (size_t q = 0; q < n_; q++) {
        out += (q ? "," : "") + xs_[q].str();
    }
    for (size_t q = 0; q < n_; q++) {
        out += "," + zs_[q].str();
    }
    return out;
}

CliffordTableau CliffordTableau::from_str(std::string_view text, size_t num_qubits_hint) {
    if (text == "id") {
        if (num_qubits_hint == 0) {
            throw ParseError(0, "'id' needs a known qubit count");
        }
        return CliffordTableau(num_qubits_hint);
    }
    std::vector<PauliOperator> images;
    size_t start = 0;
    while (true) {
        size_t end = text.find(',', start);
        std::string_view piece = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        try {
            images.push_back(PauliOperator::from_str(piece));
        } catch (const ParseError &e) {
            throw ParseError(start + e.position(), "bad tableau row '" + std::string(piece) + "'");
        }
        if (end == std::string_view::npos) {
            break;
        }
        start = end + 1;
    }
    size_t n = images[0].num_qubits();
    if (images.size() != 2 * n) {
        throw ParseError(0, "tableau needs 2n = " + std::to_string(2 * n) + " rows, got " +
                                std::to_string(images.size()));
    }
    for (const auto &p : images) {
        if (p.num_qubits() != n) {
            throw ParseError(0, "tableau rows have differing widths");
        }
    }
    std::vector<PauliOperator> xs(images.begin(), images.begin() + static_cast<std::ptrdiff_t>(n));
    std::vector<PauliOperator> zs(images.begin() + static_cast<std::ptrdiff_t>(n), images.end());
    try {
        return from_images(std::move(xs), std::move(zs));
    } catch (const Error &e) {
        throw ParseError(0, e.what());
    }
}

std::ostream &operator<<(std::ostream &out, const CliffordTableau &c) {
    return out << c.str();
}

CliffordTableau compose(const CliffordTableau &a, const CliffordTableau &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw Error(ErrorKind::MismatchedQubits, "composing Cliffords of different widths");
    }
    std::vector<PauliOperator> xs, zs;
    xs.reserve(a.num_qubits());
    zs.reserve(a.num_qubits());
    for (size_t q = 0; q < a.num_qubits(); q++) {
        xs.push_back(a.conjugate(b.x_images()[q]));
        zs.push_back(a.conjugate(b.z_images()[q]));
    }
    return CliffordTableau::from_images(std::move(xs), std::move(zs));
}

CliffordTableau inverse(const CliffordTableau &c) {
    return c.inverse();
}

PauliOperator conjugate_pauli(const CliffordTableau &c, const PauliOperator &p) {
    return c.conjugate(p);
}

bool is_z_diagonal(const CliffordTableau &c) {
    return c.is_z_diagonal();
}

CliffordTableau synthesize_mapping(const PauliSet &s) {
    size_t n = s.num_qubits();
    size_t m = s.size();
    if (m == 0 || m > n) {
        throw Error(ErrorKind::InvalidSet, "need 1 <= |set| <= n, got " + std::to_string(m));
    }
    const auto &ps = s.elements();

    // Solve w(a_k, P_j) = delta_{jk}. Row j holds the coefficients of w(P_j, .) over the 2n
    // unknowns (x bits in the high word, z bits in the low word), i.e. P_j with x and z swapped.
    std::vector<unsigned __int128> rows(m);
    std::vector<uint64_t> combos(m);
    for (size_t j = 0; j < m; j++) {
        rows[j] = (static_cast<unsigned __int128>(ps[j].zs()) << 64) | ps[j].xs();
        combos[j] = uint64_t{1} << j;
    }
    std::vector<int> pivot_col(m, -1);
    size_t rank = 0;
    for (int col = 0; col < 128 && rank < m; col++) {
        size_t r = rank;
        while (r < m && !((rows[r] >> col) & 1)) {
            r++;
        }
        if (r == m) {
            continue;
        }
        std::swap(rows[r], rows[rank]);
        std::swap(combos[r], combos[rank]);
        for (size_t k = 0; k < m; k++) {
            if (k != rank && ((rows[k] >> col) & 1)) {
                rows[k] ^= rows[rank];
                combos[k] ^= combos[rank];
            }
        }
        pivot_col[rank] = col;
        rank++;
    }
    if (rank != m) {
        throw Error(ErrorKind::InvalidSet, "set is not independent");
    }
    std::vector<PauliOperator> duals;
    for (size_t k = 0; k < m; k++) {
        unsigned __int128 v = 0;
        for (size_t i = 0; i < m; i++) {
            if ((combos[i] >> k) & 1) {
                v |= static_cast<unsigned __int128>(1) << pivot_col[i];
            }
        }
        duals.push_back(pauli_from_u128(n, v));
    }

    // Make the duals mutually commuting without disturbing w(a_k, P_j).
    for (size_t k = 0; k < m; k++) {
        for (size_t j = 0; j < k; j++) {
            if (anticommutes(duals[k], duals[j])) {
                duals[k] = (duals[k] * ps[j]).unsigned_part();
            }
        }
    }

    // Complete with hyperbolic pairs from the symplectic complement.
    std::vector<PauliOperator> rest;
    for (uint64_t label_bit = 0; label_bit < 2 * n; label_bit++) {
        PauliOperator g = label_bit < n ? PauliOperator::z(n, n - 1 - label_bit)
                                        : PauliOperator::x(n, 2 * n - 1 - label_bit);
        PauliOperator proj = g;
        for (size_t i = 0; i < m; i++) {
            if (anticommutes(g, duals[i])) {
                proj = proj * ps[i];
            }
            if (anticommutes(g, ps[i])) {
                proj = proj * duals[i];
            }
        }
        rest.push_back(proj.unsigned_part());
    }
    auto pairs = symplectic_gram_schmidt(std::move(rest));
    if (pairs.size() != n - m) {
        throw std::logic_error("synthesize_mapping: complement has the wrong dimension");
    }

    // D maps Z_k -> P_k, so D^dagger maps P_k -> Z_k.
    std::vector<PauliOperator> dx, dz;
    for (size_t k = 0; k < m; k++) {
        dx.push_back(duals[k]);
        dz.push_back(ps[k].unsigned_part());
    }
    for (const auto &[e, f] : pairs) {
        dx.push_back(e);
        dz.push_back(f);
    }
    return CliffordTableau::from_images(std::move(dx), std::move(dz)).inverse();
}

CliffordTableau random_clifford(size_t n, std::mt19937_64 &rng) {
    if (n == 0 || n > MAX_LABEL_QUBITS) {
        throw Error(ErrorKind::InvalidArgument, "random_clifford needs 1 <= n <= 32");
    }
    std::vector<std::pair<PauliOperator, PauliOperator>> basis;
    for (size_t q = 0; q < n; q++) {
        basis.emplace_back(PauliOperator::x(n, q), PauliOperator::z(n, q));
    }
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<PauliOperator> xs, zs;
    for (size_t k = 0; k < n; k++) {
        size_t r = basis.size();
        std::vector<int> alpha(r), beta(r);
        bool nonzero = false;
        while (!nonzero) {
            for (size_t i = 0; i < r; i++) {
                alpha[i] = coin(rng);
                beta[i] = coin(rng);
                nonzero |= alpha[i] || beta[i];
            }
        }
        std::vector<int> gamma(r), delta(r);
        for (size_t i = 0; i < r; i++) {
            gamma[i] = coin(rng);
            delta[i] = coin(rng);
        }
        // w(v, w) = sum_i alpha_i delta_i + beta_i gamma_i; fix one free coordinate to make it 1.
        size_t t = 0;
        while (!alpha[t] && !beta[t]) {
            t++;
        }
        int parity = 0;
        for (size_t i = 0; i < r; i++) {
            if (i != t) {
                parity ^= (alpha[i] & delta[i]) ^ (beta[i] & gamma[i]);
            }
        }
        if (alpha[t]) {
            delta[t] = (1 ^ parity ^ (beta[t] & gamma[t])) & 1;
        } else {
            gamma[t] = (1 ^ parity) & 1;
        }
        PauliOperator v = PauliOperator::identity(n), w = PauliOperator::identity(n);
        for (size_t i = 0; i < r; i++) {
            if (alpha[i]) v = v * basis[i].first;
            if (beta[i]) v = v * basis[i].second;
            if (gamma[i]) w = w * basis[i].first;
            if (delta[i]) w = w * basis[i].second;
        }
        v = v.unsigned_part();
        w = w.unsigned_part();

        std::vector<PauliOperator> rest;
        for (const auto &[e, f] : basis) {
            for (const PauliOperator &b : {e, f}) {
                PauliOperator proj = b;
                if (anticommutes(b, w)) {
                    proj = proj * v;
                }
                if (anticommutes(b, v)) {
                    proj = proj * w;
                }
                rest.push_back(proj.unsigned_part());
            }
        }
        basis = symplectic_gram_schmidt(std::move(rest));

        xs.push_back(coin(rng) ? -v : v);
        zs.push_back(coin(rng) ? -w : w);
    }
    return CliffordTableau::from_images(std::move(xs), std::move(zs));
}

CliffordTableau random_clifford(size_t num_qubits, uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_clifford(num_qubits, rng);
}

BigInt group_order(size_t n) {
    if (n == 0) {
        throw Error(ErrorKind::InvalidArgument, "group_order needs n >= 1");
    }
    BigInt result = BigInt(1) << (n * n + 2 * n);
    for (size_t j = 1; j <= n; j++) {
        result *= (BigInt(1) << (2 * j)) - 1;
    }
    return result;
}

}  // namespace tdepth
