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

#include "lulc/smith.h"

#include <sstream>

#include "lulc/error.h"

namespace lulc {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw Error(ErrorCode::SizeMismatch, "ragged integer matrix literal");
        }
        for (long long v : row) {
            data_.emplace_back(v);
        }
    }
}

IntMatrix IntMatrix::identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m.at(i, i) = 1;
    }
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix &rhs) const {
    if (cols_ != rhs.rows_) {
        throw Error(ErrorCode::SizeMismatch, "integer matrix product dimensions differ");
    }
    IntMatrix out(rows_, rhs.cols_);
    for (size_t i = 0; i < rows_; i++) {
        for (size_t l = 0; l < cols_; l++) {
            const BigInt &a = at(i, l);
            if (a == 0) {
                continue;
            }
            for (size_t j = 0; j < rhs.cols_; j++) {
                out.at(i, j) += a * rhs.at(l, j);
            }
        }
    }
    return out;
}

std::vector<BigInt> IntMatrix::operator*(const std::vector<BigInt> &x) const {
    if (cols_ != x.size()) {
        throw Error(ErrorCode::SizeMismatch, "integer matrix-vector dimensions differ");
    }
    std::vector<BigInt> out(rows_);
    for (size_t i = 0; i < rows_; i++) {
        for (size_t j = 0; j < cols_; j++) {
            if (x[j] != 0) {
                out[i] += at(i, j) * x[j];
            }
        }
    }
    return out;
}

bool IntMatrix::is_diagonal() const {
    for (size_t i = 0; i < rows_; i++) {
        for (size_t j = 0; j < cols_; j++) {
            if (i != j && at(i, j) != 0) {
                return false;
            }
        }
    }
    return true;
}

std::string IntMatrix::str() const {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < rows_; i++) {
        out << (i ? ", [" : "[");
        for (size_t j = 0; j < cols_; j++) {
            out << (j ? ", " : "") << at(i, j);
        }
        out << "]";
    }
    out << "]";
    return out.str();
}

std::vector<BigInt> SmithForm::invariant_factors() const {
    std::vector<BigInt> out;
    for (size_t i = 0; i < rank; i++) {
        out.push_back(diagonal.at(i, i));
    }
    return out;
}

namespace {

/// Elementary operations applied to the working matrix and mirrored onto the
/// accumulated transforms.
struct SmithState {
    IntMatrix a;
    IntMatrix left, right, left_inv, right_inv;
    bool track_inverses;

    // row_i -= q·row_t
    void row_sub(size_t i, size_t t, const BigInt &q) {
        if (q == 0) {
            return;
        }
        for (size_t j = 0; j < a.cols(); j++) {
            if (a.at(t, j) != 0) {
                a.at(i, j) -= q * a.at(t, j);
            }
        }
        for (size_t j = 0; j < left.cols(); j++) {
            if (left.at(t, j) != 0) {
                left.at(i, j) -= q * left.at(t, j);
            }
        }
        if (track_inverses) {
            for (size_t r = 0; r < left_inv.rows(); r++) {
                if (left_inv.at(r, i) != 0) {
                    left_inv.at(r, t) += q * left_inv.at(r, i);
                }
            }
        }
    }

    // col_j -= q·col_t
    void col_sub(size_t j, size_t t, const BigInt &q) {
        if (q == 0) {
            return;
        }
        for (size_t r = 0; r < a.rows(); r++) {
            if (a.at(r, t) != 0) {
                a.at(r, j) -= q * a.at(r, t);
            }
        }
        for (size_t r = 0; r < right.rows(); r++) {
            if (right.at(r, t) != 0) {
                right.at(r, j) -= q * right.at(r, t);
            }
        }
        if (track_inverses) {
            for (size_t c = 0; c < right_inv.cols(); c++) {
                if (right_inv.at(j, c) != 0) {
                    right_inv.at(t, c) += q * right_inv.at(j, c);
                }
            }
        }
    }

    void swap_rows(size_t i, size_t t) {
        if (i == t) {
            return;
        }
        for (size_t j = 0; j < a.cols(); j++) {
            std::swap(a.at(i, j), a.at(t, j));
        }
        for (size_t j = 0; j < left.cols(); j++) {
            std::swap(left.at(i, j), left.at(t, j));
        }
        if (track_inverses) {
            for (size_t r = 0; r < left_inv.rows(); r++) {
                std::swap(left_inv.at(r, i), left_inv.at(r, t));
            }
        }
    }

    void swap_cols(size_t j, size_t t) {
        if (j == t) {
            return;
        }
        for (size_t r = 0; r < a.rows(); r++) {
            std::swap(a.at(r, j), a.at(r, t));
        }
        for (size_t r = 0; r < right.rows(); r++) {
            std::swap(right.at(r, j), right.at(r, t));
        }
        if (track_inverses) {
            for (size_t c = 0; c < right_inv.cols(); c++) {
                std::swap(right_inv.at(j, c), right_inv.at(t, c));
            }
        }
    }

    void negate_row(size_t i) {
        for (size_t j = 0; j < a.cols(); j++) {
            a.at(i, j) = -a.at(i, j);
        }
        for (size_t j = 0; j < left.cols(); j++) {
            left.at(i, j) = -left.at(i, j);
        }
        if (track_inverses) {
            for (size_t r = 0; r < left_inv.rows(); r++) {
                left_inv.at(r, i) = -left_inv.at(r, i);
            }
        }
    }

    /// Moves the smallest nonzero |entry| of the trailing block to (t, t).
    bool place_pivot(size_t t) {
        size_t best_i = 0, best_j = 0;
        bool found = false;
        BigInt best;
        for (size_t i = t; i < a.rows() && !(found && best == 1); i++) {
            for (size_t j = t; j < a.cols(); j++) {
                const BigInt &v = a.at(i, j);
                if (v == 0) {
                    continue;
                }
                BigInt m = abs(v);
                if (!found || m < best) {
                    found = true;
                    best = m;
                    best_i = i;
                    best_j = j;
                    if (best == 1) {
                        break;
                    }
                }
            }
        }
        if (found) {
            swap_rows(t, best_i);
            swap_cols(t, best_j);
        }
        return found;
    }
};

BigInt floor_div(const BigInt &a, const BigInt &b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        q -= 1;
    }
    return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix &input, bool track_inverses) {
    size_t m = input.rows();
    size_t n = input.cols();
    SmithState st{
        input,
        IntMatrix::identity(m),
        IntMatrix::identity(n),
        track_inverses ? IntMatrix::identity(m) : IntMatrix(),
        track_inverses ? IntMatrix::identity(n) : IntMatrix(),
        track_inverses};
    size_t t = 0;
    for (; t < std::min(m, n); t++) {
        if (!st.place_pivot(t)) {
            break;
        }
        while (true) {
            bool dirty = false;
            for (size_t i = t + 1; i < m; i++) {
                if (st.a.at(i, t) != 0) {
                    st.row_sub(i, t, floor_div(st.a.at(i, t), st.a.at(t, t)));
                    dirty |= st.a.at(i, t) != 0;
                }
            }
            for (size_t j = t + 1; j < n; j++) {
                if (st.a.at(t, j) != 0) {
                    st.col_sub(j, t, floor_div(st.a.at(t, j), st.a.at(t, t)));
                    dirty |= st.a.at(t, j) != 0;
                }
            }
            if (dirty) {
                st.place_pivot(t);
                continue;
            }
            // Divisibility: fold a non-multiple into the pivot row and retry.
            const BigInt &p = st.a.at(t, t);
            bool divides = true;
            if (abs(p) != 1) {
                for (size_t i = t + 1; i < m && divides; i++) {
                    for (size_t j = t + 1; j < n; j++) {
                        if (st.a.at(i, j) % p != 0) {
                            st.row_sub(t, i, -1);
                            divides = false;
                            break;
                        }
                    }
                }
            }
            if (divides) {
                break;
            }
        }
        if (st.a.at(t, t) < 0) {
            st.negate_row(t);
        }
    }
    SmithForm out;
    out.rank = t;
    out.diagonal = std::move(st.a);
    out.left = std::move(st.left);
    out.right = std::move(st.right);
    out.left_inverse = std::move(st.left_inv);
    out.right_inverse = std::move(st.right_inv);
    return out;
}

std::optional<std::vector<BigInt>> solve_integer_system(const SmithForm &snf, const std::vector<BigInt> &b) {
    // A x = b  ⇔  D y = L b with x = R y.
    std::vector<BigInt> lb = snf.left * b;
    std::vector<BigInt> y(snf.diagonal.cols());
    for (size_t i = 0; i < lb.size(); i++) {
        if (i < snf.rank) {
            const BigInt &d = snf.diagonal.at(i, i);
            if (lb[i] % d != 0) {
                return std::nullopt;
            }
            y[i] = lb[i] / d;
        } else if (lb[i] != 0) {
            return std::nullopt;
        }
    }
    return snf.right * y;
}

}  // namespace lulc
