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

#ifndef DRBENCH_BITS_H
#define DRBENCH_BITS_H

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace drbench {

/// Fixed-length vector over GF(2), packed into 64-bit words.
///
/// Bits beyond size() in the last word are always zero, so word-level
/// comparisons and popcounts are exact.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(size_t num_bits);

    static BitVector from_string(const std::string &bits);
    static BitVector unit(size_t num_bits, size_t index);

    size_t size() const { return num_bits_; }
    size_t num_words() const { return words_.size(); }

    bool get(size_t k) const { return (words_[k >> 6] >> (k & 63)) & 1; }
    void set(size_t k, bool value) {
        uint64_t mask = uint64_t{1} << (k & 63);
        if (value) {
            words_[k >> 6] |= mask;
        } else {
            words_[k >> 6] &= ~mask;
        }
    }
    void flip(size_t k) { words_[k >> 6] ^= uint64_t{1} << (k & 63); }
    bool operator[](size_t k) const { return get(k); }

    BitVector &operator^=(const BitVector &other);
    BitVector &operator&=(const BitVector &other);
    BitVector operator^(const BitVector &other) const;
    BitVector operator&(const BitVector &other) const;

    /// Parity of the bitwise AND, i.e. the GF(2) dot product.
    bool dot(const BitVector &other) const;
    size_t popcount() const;
    bool any() const;
    bool none() const { return !any(); }
    void clear();

    /// Index of the lowest set bit at or after `start`, or size() if none.
    size_t find_next(size_t start) const;

    /// The bits [start, start + count) as a new vector.
    BitVector slice(size_t start, size_t count) const;
    /// Overwrites bits [start, start + other.size()) with other.
    void assign_slice(size_t start, const BitVector &other);

    std::string str() const;

    const uint64_t *data() const { return words_.data(); }
    uint64_t *data() { return words_.data(); }

    bool operator==(const BitVector &other) const = default;
    std::strong_ordering operator<=>(const BitVector &other) const;

   private:
    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

/// Dense matrix over GF(2) stored as packed rows.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols);

    static BitMatrix identity(size_t n);
    /// Standard symplectic form [[0, I], [I, 0]] on 2n coordinates.
    static BitMatrix symplectic_form(size_t n);

    size_t rows() const { return rows_.size(); }
    size_t cols() const { return num_cols_; }

    bool get(size_t r, size_t c) const { return rows_[r].get(c); }
    void set(size_t r, size_t c, bool v) { rows_[r].set(c, v); }
    BitVector &row(size_t r) { return rows_[r]; }
    const BitVector &row(size_t r) const { return rows_[r]; }
    BitVector column(size_t c) const;

    /// row[dst] ^= row[src]
    void row_xor(size_t dst, size_t src) { rows_[dst] ^= rows_[src]; }
    void swap_rows(size_t a, size_t b) { std::swap(rows_[a], rows_[b]); }

    BitMatrix transposed() const;
    BitMatrix operator*(const BitMatrix &rhs) const;
    BitVector operator*(const BitVector &v) const;

    size_t rank() const;
    bool is_invertible() const;
    /// Inverse over GF(2); throws std::invalid_argument when singular.
    BitMatrix inverse() const;

    std::string str() const;

    bool operator==(const BitMatrix &other) const = default;
    std::strong_ordering operator<=>(const BitMatrix &other) const;

   private:
    size_t num_cols_ = 0;
    std::vector<BitVector> rows_;
};

}  // namespace drbench

#endif
