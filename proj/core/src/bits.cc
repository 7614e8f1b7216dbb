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

#include "drbench/bits.h"

#include <stdexcept>

namespace drbench {

namespace {

size_t words_for(size_t bits) { return (bits + 63) >> 6; }

}  // namespace

BitVector::BitVector(size_t num_bits) : num_bits_(num_bits), words_(words_for(num_bits), 0) {}

BitVector BitVector::from_string(const std::string &bits) {
    BitVector out(bits.size());
    for (size_t k = 0; k < bits.size(); k++) {
        if (bits[k] == '1') {
            out.set(k, true);
        } else if (bits[k] != '0') {
            throw std::invalid_argument("bit string may only contain '0' and '1': " + bits);
        }
    }
    return out;
}

BitVector BitVector::unit(size_t num_bits, size_t index) {
    BitVector out(num_bits);
    out.set(index, true);
    return out;
}

BitVector &BitVector::operator^=(const BitVector &other) {
    for (size_t w = 0; w < words_.size(); w++) {
        words_[w] ^= other.words_[w];
    }
    return *this;
}

BitVector &BitVector::operator&=(const BitVector &other) {
    for (size_t w = 0; w < words_.size(); w++) {
        words_[w] &= other.words_[w];
    }
    return *this;
}

BitVector BitVector::operator^(const BitVector &other) const {
    BitVector out = *this;
    out ^= other;
    return out;
}

BitVector BitVector::operator&(const BitVector &other) const {
    BitVector out = *this;
    out &= other;
    return out;
}

bool BitVector::dot(const BitVector &other) const {
    uint64_t acc = 0;
    for (size_t w = 0; w < words_.size(); w++) {
        acc ^= words_[w] & other.words_[w];
    }
    return std::popcount(acc) & 1;
}

size_t BitVector::popcount() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVector::any() const {
    for (uint64_t w : words_) {
        if (w) {
            return true;
        }
    }
    return false;
}

void BitVector::clear() {
    for (auto &w : words_) {
        w = 0;
    }
}

size_t BitVector::find_next(size_t start) const {
    if (start >= num_bits_) {
        return num_bits_;
    }
    size_t w = start >> 6;
    uint64_t cur = words_[w] & (~uint64_t{0} << (start & 63));
    while (true) {
        if (cur) {
            size_t k = (w << 6) + std::countr_zero(cur);
            return k < num_bits_ ? k : num_bits_;
        }
        if (++w >= words_.size()) {
            return num_bits_;
        }
        cur = words_[w];
    }
}

BitVector BitVector::slice(size_t start, size_t count) const {
    BitVector out(count);
    for (size_t k = 0; k < count; k++) {
        if (get(start + k)) {
            out.set(k, true);
        }
    }
    return out;
}

void BitVector::assign_slice(size_t start, const BitVector &other) {
    for (size_t k = 0; k < other.size(); k++) {
        set(start + k, other.get(k));
    }
}

std::string BitVector::str() const {
    std::string out(num_bits_, '0');
    for (size_t k = 0; k < num_bits_; k++) {
        if (get(k)) {
            out[k] = '1';
        }
    }
    return out;
}

std::strong_ordering BitVector::operator<=>(const BitVector &other) const {
    if (auto c = num_bits_ <=> other.num_bits_; c != 0) {
        return c;
    }
    // Lexicographic in bit index order.
    for (size_t k = 0; k < num_bits_; k++) {
        bool a = get(k);
        bool b = other.get(k);
        if (a != b) {
            return a ? std::strong_ordering::greater : std::strong_ordering::less;
        }
    }
    return std::strong_ordering::equal;
}

BitMatrix::BitMatrix(size_t rows, size_t cols) : num_cols_(cols), rows_(rows, BitVector(cols)) {}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix out(n, n);
    for (size_t k = 0; k < n; k++) {
        out.set(k, k, true);
    }
    return out;
}

BitMatrix BitMatrix::symplectic_form(size_t n) {
    BitMatrix out(2 * n, 2 * n);
    for (size_t k = 0; k < n; k++) {
        out.set(k, n + k, true);
        out.set(n + k, k, true);
    }
    return out;
}

BitVector BitMatrix::column(size_t c) const {
    BitVector out(rows());
    for (size_t r = 0; r < rows(); r++) {
        if (get(r, c)) {
            out.set(r, true);
        }
    }
    return out;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix out(num_cols_, rows());
    for (size_t r = 0; r < rows(); r++) {
        for (size_t c = rows_[r].find_next(0); c < num_cols_; c = rows_[r].find_next(c + 1)) {
            out.set(c, r, true);
        }
    }
    return out;
}

BitMatrix BitMatrix::operator*(const BitMatrix &rhs) const {
    if (num_cols_ != rhs.rows()) {
        throw std::invalid_argument("BitMatrix product dimension mismatch");
    }
    BitMatrix out(rows(), rhs.cols());
    for (size_t r = 0; r < rows(); r++) {
        const BitVector &src = rows_[r];
        for (size_t k = src.find_next(0); k < num_cols_; k = src.find_next(k + 1)) {
            out.rows_[r] ^= rhs.rows_[k];
        }
    }
    return out;
}

BitVector BitMatrix::operator*(const BitVector &v) const {
    if (num_cols_ != v.size()) {
        throw std::invalid_argument("BitMatrix-vector product dimension mismatch");
    }
    BitVector out(rows());
    for (size_t r = 0; r < rows(); r++) {
        if (rows_[r].dot(v)) {
            out.set(r, true);
        }
    }
    return out;
}

size_t BitMatrix::rank() const {
    BitMatrix work = *this;
    size_t rank = 0;
    for (size_t c = 0; c < num_cols_ && rank < rows(); c++) {
        size_t pivot = rank;
        while (pivot < rows() && !work.get(pivot, c)) {
            pivot++;
        }
        if (pivot == rows()) {
            continue;
        }
        work.swap_rows(rank, pivot);
        for (size_t r = rank + 1; r < rows(); r++) {
            if (work.get(r, c)) {
                work.row_xor(r, rank);
            }
        }
        rank++;
    }
    return rank;
}

bool BitMatrix::is_invertible() const { return rows() == num_cols_ && rank() == rows(); }

BitMatrix BitMatrix::inverse() const {
    size_t n = rows();
    if (n != num_cols_) {
        throw std::invalid_argument("cannot invert a non-square matrix");
    }
    BitMatrix work = *this;
    BitMatrix inv = identity(n);
    for (size_t c = 0; c < n; c++) {
        size_t pivot = c;
        while (pivot < n && !work.get(pivot, c)) {
            pivot++;
        }
        if (pivot == n) {
            throw std::invalid_argument("matrix is singular over GF(2)");
        }
        work.swap_rows(c, pivot);
        inv.swap_rows(c, pivot);
        for (size_t r = 0; r < n; r++) {
            if (r != c && work.get(r, c)) {
                work.row_xor(r, c);
                inv.row_xor(r, c);
            }
        }
    }
    return inv;
}

std::string BitMatrix::str() const {
    std::string out;
    for (const auto &r : rows_) {
        out += r.str();
        out += '\n';
    }
    return out;
}

std::strong_ordering BitMatrix::operator<=>(const BitMatrix &other) const {
    if (auto c = rows() <=> other.rows(); c != 0) {
        return c;
    }
    if (auto c = num_cols_ <=> other.num_cols_; c != 0) {
        return c;
    }
    for (size_t r = 0; r < rows(); r++) {
        if (auto c = rows_[r] <=> other.rows_[r]; c != 0) {
            return c;
        }
    }
    return std::strong_ordering::equal;
}

}  // namespace drbench
