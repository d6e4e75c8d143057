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

#include "tdepth/canonical.h"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "tdepth/error.h"

namespace tdepth {

namespace {

std::string_view trim(std::string_view s, size_t *offset = nullptr) {
    size_t b = 0;
    while (b < s.size() && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) {
        b++;
    }
    size_t e = s.size();
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) {
        e--;
    }
    if (offset != nullptr) {
        *offset += b;
    }
    return s.substr(b, e - b);
}

// One layer pushed through the accumulated Clifford `prefix`: returns the positive set and
// replaces `prefix` by (absorbed quarter rotations) * prefix.
PauliSet push_layer(CliffordTableau &prefix, const TLayer &layer) {
    size_t n = prefix.num_qubits();
    std::vector<PauliOperator> positives;
    std::vector<PauliOperator> negated;
    for (size_t q = 0; q < n; q++) {
        if (layer[q] == TMark::None) {
            continue;
        }
        // T ~ exp(-i pi Z/8) and T^dagger ~ exp(+i pi Z/8), up to global phase.
        int sign = layer[q] == TMark::T ? -1 : 1;
        PauliOperator image = prefix.conjugate(PauliOperator::z(n, q));
        if (image.phase() == 2) {
            sign = -sign;
        }
        positives.push_back(image.unsigned_part());
        if (sign < 0) {
            negated.push_back(image.unsigned_part());
        }
    }
    PauliSet set = PauliSet::validate(positives);
    // exp(-i pi P/8) = exp(-i pi P/4) exp(i pi P/8); the quarter rotations commute with every
    // factor of the layer and move to the right end.
    CliffordTableau absorbed = CliffordTableau::identity(n);
    for (const auto &p : negated) {
        absorbed = compose(absorbed, CliffordTableau::pauli_quarter_rotation(p, +1));
    }
    prefix = compose(absorbed, prefix);
    return set;
}

std::vector<size_t> parse_index_list(std::string_view list, size_t offset) {
    std::vector<size_t> out;
    if (list.empty()) {
        return out;
    }
    size_t start = 0;
    while (true) {
        size_t end = list.find(',', start);
        std::string_view piece = list.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        size_t value = 0;
        auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size()) {
            throw ParseError(offset + start, "expected a qubit index, got '" + std::string(piece) + "'");
        }
        out.push_back(value);
        if (end == std::string_view::npos) {
            break;
        }
        start = end + 1;
    }
    return out;
}

}  // namespace

////////////////////////////////////////////////////////////////////////////////
// TLayer

TLayer::TLayer(std::vector<TMark> marks) : marks_(std::move(marks)) {
    if (count() == 0) {
        throw Error(ErrorKind::InvalidArgument, "a T layer must mark at least one qubit");
    }
}

TLayer TLayer::from_qubits(size_t n, const std::vector<size_t> &t_qubits, const std::vector<size_t> &tdg_qubits) {
    std::vector<TMark> marks(n, TMark::None);
    auto place = [&](const std::vector<size_t> &qs, TMark mark) {
        for (size_t q : qs) {
            if (q >= n) {
                throw Error(ErrorKind::IndexOutOfRange, "T layer qubit " + std::to_string(q));
            }
            if (marks[q] != TMark::None) {
                throw Error(ErrorKind::InvalidArgument, "qubit " + std::to_string(q) + " is marked twice");
            }
            marks[q] = mark;
        }
    };
    place(t_qubits, TMark::T);
    place(tdg_qubits, TMark::Tdg);
    return TLayer(std::move(marks));
}

size_t TLayer::count() const {
    return static_cast<size_t>(std::count_if(marks_.begin(), marks_.end(), [](TMark m) { return m != TMark::None; }));
}

std::string TLayer::str() const {
    std::string t, tdg;
    for (size_t q = 0; q < marks_.size(); q++) {
        std::string &dst = marks_[q] == TMark::T ? t : tdg;
        if (marks_[q] == TMark::None) {
            continue;
        }
        dst += (dst.empty() ? "" : ",") + std::to_string(q);
    }
    std::string out;
    if (!t.empty()) {
        out += "t=" + t;
    }
    if (!tdg.empty()) {
        out += (out.empty() ? "" : " ") + std::string("tdg=") + tdg;
    }
    return out;
}

void TLayerCircuit::validate() const {
    if (cliffords.size() != layers.size() + 1) {
        throw Error(ErrorKind::InvalidArgument, "a depth-d circuit holds d + 1 Cliffords");
    }
    for (const auto &c : cliffords) {
        if (c.num_qubits() != num_qubits) {
            throw Error(ErrorKind::WidthMismatch, "Clifford width differs from circuit width");
        }
    }
    for (const auto &l : layers) {
        if (l.num_qubits() != num_qubits) {
            throw Error(ErrorKind::WidthMismatch, "T layer width differs from circuit width");
        }
    }
}

////////////////////////////////////////////////////////////////////////////////
// Canonicalization

CanonicalForm canonicalize_depth_one(const CliffordTableau &c1, const TLayer &layer, const CliffordTableau &c2) {
    size_t n = c1.num_qubits();
    if (c2.num_qubits() != n || layer.num_qubits() != n) {
        throw Error(ErrorKind::WidthMismatch, "depth-one input widths differ");
    }
    CliffordTableau prefix = c1;
    PauliSet set = push_layer(prefix, layer);
    return CanonicalForm{std::move(set), compose(prefix, c2)};
}

LayeredForm canonicalize_depth_d(const TLayerCircuit &circuit) {
    circuit.validate();
    LayeredForm out;
    CliffordTableau prefix = circuit.cliffords[0];
    for (size_t k = 0; k < circuit.depth(); k++) {
        out.layers.push_back(push_layer(prefix, circuit.layers[k]));
        prefix = compose(prefix, circuit.cliffords[k + 1]);
    }
    out.clifford = std::move(prefix);
    return out;
}

bool equals(const CanonicalForm &a, const CanonicalForm &b) {
    return a.set == b.set && a.clifford == b.clifford;
}

////////////////////////////////////////////////////////////////////////////////
// Text formats

std::string render(const CanonicalForm &f) {
    std::string out = "P: ";
    out += f.set.empty() ? "none" : f.set.str();
    out += " | C: ";
    out += f.clifford.is_identity() ? "id" : f.clifford.str();
    return out;
}

CanonicalForm parse_canonical(std::string_view text, size_t num_qubits_hint) {
    size_t bar = text.find('|');
    if (bar == std::string_view::npos) {
        throw ParseError(0, "expected 'P: ... | C: ...'");
    }
    size_t left_off = 0;
    std::string_view left = trim(text.substr(0, bar), &left_off);
    if (left.substr(0, 2) != "P:") {
        throw ParseError(left_off, "expected 'P:'");
    }
    size_t set_off = left_off + 2;
    std::string_view set_text = trim(left.substr(2), &set_off);

    size_t right_off = bar + 1;
    std::string_view right = trim(text.substr(bar + 1), &right_off);
    if (right.substr(0, 2) != "C:") {
        throw ParseError(right_off, "expected 'C:'");
    }
    size_t c_off = right_off + 2;
    std::string_view c_text = trim(right.substr(2), &c_off);

    std::vector<PauliOperator> elements;
    if (set_text != "none") {
        size_t start = 0;
        while (true) {
            size_t end = set_text.find(',', start);
            std::string_view piece =
                set_text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
            try {
                elements.push_back(PauliOperator::from_str(piece));
            } catch (const ParseError &e) {
                throw ParseError(set_off + start + e.position(), "bad Pauli '" + std::string(piece) + "'");
            }
            if (end == std::string_view::npos) {
                break;
            }
            start = end + 1;
        }
    }

    size_t n = num_qubits_hint;
    if (!elements.empty()) {
        n = elements[0].num_qubits();
    }
    if (c_text != "id") {
        CliffordTableau c;
        try {
            c = CliffordTableau::from_str(c_text);
        } catch (const ParseError &e) {
            throw ParseError(c_off + e.position(), e.detail());
        }
        if (!elements.empty() && c.num_qubits() != n) {
            throw ParseError(c_off, "Clifford width differs from the Pauli set width");
        }
        n = c.num_qubits();
    }
    if (n == 0) {
        throw ParseError(c_off, "cannot determine the qubit count");
    }

    PauliSet set(n);
    if (!elements.empty()) {
        for (const auto &p : elements) {
            if (!p.is_positive()) {
                throw ParseError(set_off, "set elements must be positive: " + p.str());
            }
        }
        try {
            set = PauliSet::validate(elements);
        } catch (const Error &e) {
            throw ParseError(set_off, e.what());
        }
        if (set.elements() != elements) {
            throw ParseError(set_off, "set elements must be listed in ascending label order");
        }
    }
    CliffordTableau c = c_text == "id" ? CliffordTableau::identity(n) : CliffordTableau::from_str(c_text);
    return CanonicalForm{std::move(set), std::move(c)};
}

TLayerCircuit parse_circuit(std::string_view text) {
    struct Item {
        bool is_layer;
        size_t offset;
        std::vector<GateToken> word;
        std::vector<size_t> t, tdg;
    };
    std::vector<Item> items;
    size_t declared = 0;
    size_t max_index_plus_one = 0;

    size_t line_start = 0;
    while (line_start <= text.size()) {
        size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) {
            line_end = text.size();
        }
        std::string_view line = text.substr(line_start, line_end - line_start);
        size_t hash = line.find('#');
        if (hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        size_t off = line_start;
        line = trim(line, &off);
        if (!line.empty()) {
            size_t colon = line.find(':');
            if (colon == std::string_view::npos) {
                throw ParseError(off, "expected 'QUBITS:', 'CLIFFORD:' or 'TLAYER:'");
            }
            std::string_view key = line.substr(0, colon);
            size_t body_off = off + colon + 1;
            std::string_view body = trim(line.substr(colon + 1), &body_off);
            if (key == "QUBITS") {
                auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), declared);
                if (ec != std::errc() || ptr != body.data() + body.size() || declared == 0 || declared > 32) {
                    throw ParseError(body_off, "QUBITS needs an integer in 1..32");
                }
            } else if (key == "CLIFFORD") {
                Item item{false, off, {}, {}, {}};
                try {
                    item.word = parse_gate_word(body, MAX_LABEL_QUBITS);
                } catch (const ParseError &e) {
                    throw ParseError(body_off + e.position(), e.detail());
                }
                for (const auto &g : item.word) {
                    max_index_plus_one = std::max(max_index_plus_one, g.q0 + 1);
                    if (g.is_two_qubit()) {
                        max_index_plus_one = std::max(max_index_plus_one, g.q1 + 1);
                    }
                }
                items.push_back(std::move(item));
            } else if (key == "TLAYER") {
                Item item{true, off, {}, {}, {}};
                size_t p = 0;
                while (p < body.size()) {
                    while (p < body.size() && body[p] == ' ') {
                        p++;
                    }
                    size_t q = body.find(' ', p);
                    if (q == std::string_view::npos) {
                        q = body.size();
                    }
                    std::string_view part = body.substr(p, q - p);
                    if (part.substr(0, 2) == "t=") {
                        item.t = parse_index_list(part.substr(2), body_off + p + 2);
                    } else if (part.substr(0, 4) == "tdg=") {
                        item.tdg = parse_index_list(part.substr(4), body_off + p + 4);
                    } else if (!part.empty()) {
                        throw ParseError(body_off + p, "expected t=<q,...> or tdg=<q,...>");
                    }
                    p = q;
                }
                for (size_t v : item.t) {
                    max_index_plus_one = std::max(max_index_plus_one, v + 1);
                }
                for (size_t v : item.tdg) {
                    max_index_plus_one = std::max(max_index_plus_one, v + 1);
                }
                if (item.t.empty() && item.tdg.empty()) {
                    throw ParseError(off, "a T layer must mark at least one qubit");
                }
                items.push_back(std::move(item));
            } else {
                throw ParseError(off, "unknown line kind '" + std::string(key) + "'");
            }
        }
        line_start = line_end + 1;
    }

    for (size_t k = 1; k < items.size(); k++) {
        if (items[k].is_layer == items[k - 1].is_layer) {
            throw ParseError(items[k].offset, items[k].is_layer ? "two T layers without a Clifford between them"
                                                                : "two Clifford lines in a row");
        }
    }

    size_t n = declared ? declared : max_index_plus_one;
    if (n == 0) {
        throw ParseError(0, "cannot determine the qubit count; add a QUBITS line");
    }
    if (max_index_plus_one > n) {
        throw Error(ErrorKind::IndexOutOfRange, "qubit index beyond QUBITS: " + std::to_string(n));
    }

    TLayerCircuit circuit;
    circuit.num_qubits = n;
    bool expect_clifford = true;
    for (const auto &item : items) {
        if (expect_clifford && item.is_layer) {
            circuit.words.emplace_back();
        }
        if (item.is_layer) {
            try {
                circuit.layers.push_back(TLayer::from_qubits(n, item.t, item.tdg));
            } catch (const Error &e) {
                throw ParseError(item.offset, e.what());
            }
            expect_clifford = true;
        } else {
            circuit.words.push_back(item.word);
            expect_clifford = false;
        }
    }
    if (expect_clifford) {
        circuit.words.emplace_back();
    }
    for (const auto &w : circuit.words) {
        circuit.cliffords.push_back(CliffordTableau::from_gate_word(n, w));
    }
    circuit.validate();
    return circuit;
}

std::string render_circuit(const TLayerCircuit &circuit) {
    circuit.validate();
    if (circuit.words.size() != circuit.cliffords.size()) {
        throw Error(ErrorKind::InvalidArgument, "circuit has no gate words to render");
    }
    std::ostringstream out;
    out << "QUBITS: " << circuit.num_qubits << '\n';
    for (size_t k = 0; k < circuit.cliffords.size(); k++) {
        out << "CLIFFORD: " << render_gate_word(circuit.words[k]) << '\n';
        if (k < circuit.layers.size()) {
            out << "TLAYER: " << circuit.layers[k].str() << '\n';
        }
    }
    return out.str();
}

}  // namespace tdepth
