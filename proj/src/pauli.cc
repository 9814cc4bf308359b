// Copyright 2026 The lulc Authors
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

#include "lulc/pauli.h"

#include <array>
#include <bit>
#include <complex>

#include "lulc/error.h"

namespace lulc {

namespace {

using Mat2 = std::array<std::complex<double>, 4>;

Mat2 mul(const Mat2 &a, const Mat2 &b) {
    return {
        a[0] * b[0] + a[1] * b[2],
        a[0] * b[1] + a[1] * b[3],
        a[2] * b[0] + a[3] * b[2],
        a[2] * b[1] + a[3] * b[3],
    };
}

std::complex<double> ipow(int e) {
    static const std::complex<double> powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return powers[((e % 4) + 4) % 4];
}

/// W(z, x) on one qubit, index 2z + x.
Mat2 single_w(int index) {
    const Mat2 id{1, 0, 0, 1};
    const Mat2 px{0, 1, 1, 0};
    const Mat2 pz{1, 0, 0, -1};
    int z = index >> 1;
    int x = index & 1;
    Mat2 m = mul(z ? pz : id, x ? px : id);
    for (auto &e : m) {
        e *= ipow(z * x);
    }
    return m;
}

std::array<std::array<uint8_t, 4>, 4> build_phase_table() {
    std::array<std::array<uint8_t, 4>, 4> table{};
    for (int a = 0; a < 4; a++) {
        for (int b = 0; b < 4; b++) {
            Mat2 prod = mul(single_w(a), single_w(b));
            Mat2 target = single_w(a ^ b);
            bool found = false;
            for (int t = 0; t < 4 && !found; t++) {
                bool match = true;
                for (int e = 0; e < 4; e++) {
                    if (std::abs(prod[e] - ipow(t) * target[e]) > 1e-12) {
                        match = false;
                    }
                }
                if (match) {
                    table[a][b] = static_cast<uint8_t>(t);
                    found = true;
                }
            }
            if (!found) {
                throw Error(ErrorCode::InternalInconsistency, "Pauli phase table generation failed");
            }
        }
    }
    return table;
}

void require_same_qubits(const PauliOp &a, const PauliOp &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw Error(
            ErrorCode::SizeMismatch,
            "Pauli operators act on different qubit counts: " + std::to_string(a.num_qubits()) + " vs " +
                std::to_string(b.num_qubits()));
    }
}

}  // namespace

const std::array<std::array<uint8_t, 4>, 4> &single_qubit_phase_table() {
    static const auto table = build_phase_table();
    return table;
}

PauliOp::PauliOp(BitVec z_, BitVec x_, uint8_t phase) : z(std::move(z_)), x(std::move(x_)), phase_exp(phase & 3) {
    if (z.size() != x.size()) {
        throw Error(ErrorCode::SizeMismatch, "z and x parts of a Pauli operator differ in length");
    }
}

PauliOp PauliOp::z_type(const BitVec &t) {
    return PauliOp(t, BitVec(t.size()), 0);
}

PauliOp PauliOp::x_type(const BitVec &t) {
    return PauliOp(BitVec(t.size()), t, 0);
}

PauliOp PauliOp::from_string(std::string_view text) {
    uint8_t sign = 0;
    size_t pos = 0;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        sign = text[0] == '-' ? 2 : 0;
        pos = 1;
        if (pos < text.size() && text[pos] == 'i') {
            sign = (sign + 1) & 3;
            pos++;
        }
    }
    std::string_view letters = text.substr(pos);
    if (letters.empty()) {
        throw Error(ErrorCode::ParseError, "empty Pauli string: \"" + std::string(text) + "\"");
    }
    PauliOp p(letters.size());
    uint8_t y_count = 0;
    for (size_t j = 0; j < letters.size(); j++) {
        switch (letters[j]) {
            case 'I':
                break;
            case 'X':
                p.x.set(j, true);
                break;
            case 'Z':
                p.z.set(j, true);
                break;
            case 'Y':
                p.x.set(j, true);
                p.z.set(j, true);
                y_count++;
                break;
            default:
                throw Error(
                    ErrorCode::ParseError,
                    std::string("illegal character '") + letters[j] + "' in Pauli string \"" + std::string(text) + "\"");
        }
    }
    // Y = -W(1,1) = i^2 W(1,1).
    p.phase_exp = static_cast<uint8_t>((sign + 2 * y_count) & 3);
    return p;
}

char PauliOp::letter(size_t j) const {
    static const char letters[4] = {'I', 'X', 'Z', 'Y'};
    return letters[2 * z.get(j) + x.get(j)];
}

uint8_t PauliOp::literal_sign_exp() const {
    size_t y_count = (z & x).popcount();
    return static_cast<uint8_t>((phase_exp + 4 - 2 * (y_count & 1)) & 3);
}

std::string PauliOp::str() const {
    static const char *prefixes[4] = {"+", "+i", "-", "-i"};
    std::string out = prefixes[literal_sign_exp()];
    for (size_t j = 0; j < num_qubits(); j++) {
        out.push_back(letter(j));
    }
    return out;
}

std::vector<size_t> PauliOp::support() const {
    std::vector<size_t> out;
    for (size_t j = 0; j < num_qubits(); j++) {
        if (z.get(j) || x.get(j)) {
            out.push_back(j);
        }
    }
    return out;
}

bool PauliOp::has_full_support() const {
    return support().size() == num_qubits();
}

PauliOp PauliOp::from_symplectic(const BitVec &zx, uint8_t phase_exp) {
    size_t n = zx.size() / 2;
    return PauliOp(zx.slice(0, n), zx.slice(n, n), phase_exp);
}

PauliOp multiply(const PauliOp &a, const PauliOp &b) {
    require_same_qubits(a, b);
    const auto &table = single_qubit_phase_table();
    uint64_t phase = a.phase_exp + b.phase_exp;
    auto za = a.z.words();
    auto xa = a.x.words();
    auto zb = b.z.words();
    auto xb = b.x.words();
    for (size_t w = 0; w < za.size(); w++) {
        for (int pa = 1; pa < 4; pa++) {
            uint64_t ma = ((pa >> 1) ? za[w] : ~za[w]) & ((pa & 1) ? xa[w] : ~xa[w]);
            for (int pb = 1; pb < 4; pb++) {
                uint8_t t = table[pa][pb];
                if (t == 0) {
                    continue;
                }
                uint64_t mb = ((pb >> 1) ? zb[w] : ~zb[w]) & ((pb & 1) ? xb[w] : ~xb[w]);
                phase += static_cast<uint64_t>(t) * std::popcount(ma & mb);
            }
        }
    }
    return PauliOp(a.z ^ b.z, a.x ^ b.x, static_cast<uint8_t>(phase & 3));
}

PauliOp PauliOp::operator*(const PauliOp &rhs) const {
    return multiply(*this, rhs);
}

PauliOp &PauliOp::operator*=(const PauliOp &rhs) {
    *this = multiply(*this, rhs);
    return *this;
}

bool PauliOp::commutes(const PauliOp &other) const {
    return !symplectic_product(*this, other);
}

PauliOp PauliOp::tensor(const PauliOp &other) const {
    // Each W factor carries its own i^{zx}, so phases simply add.
    return PauliOp(z.concat(other.z), x.concat(other.x), static_cast<uint8_t>((phase_exp + other.phase_exp) & 3));
}

bool symplectic_product(const BitVec &z1, const BitVec &x1, const BitVec &z2, const BitVec &x2) {
    return z1.dot(x2) ^ x1.dot(z2);
}

bool symplectic_product(const PauliOp &a, const PauliOp &b) {
    require_same_qubits(a, b);
    return symplectic_product(a.z, a.x, b.z, b.x);
}

}  // namespace lulc
