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

#include "drbench/clifford.h"

#include <stdexcept>

#include "drbench/gates.h"

namespace drbench {

CliffordOp::CliffordOp(size_t n) : n_(n), img_x_(2 * n, n), img_z_(2 * n, n), v_(2 * n, 0) {
    for (size_t q = 0; q < n; q++) {
        img_x_.set(q, q, true);
        img_z_.set(n + q, q, true);
    }
}

bool CliffordOp::is_valid_phase_vector(const BitMatrix &s, const std::vector<uint8_t> &v) {
    size_t nn = s.rows();
    if (v.size() != nn || s.cols() != nn || nn % 2 != 0) {
        return false;
    }
    size_t n = nn / 2;
    for (size_t k = 0; k < nn; k++) {
        size_t ys = 0;
        for (size_t q = 0; q < n; q++) {
            ys += s.get(q, k) && s.get(n + q, k);
        }
        if (v[k] > 3 || ((v[k] ^ ys) & 1) != 0) {
            return false;
        }
    }
    return true;
}

CliffordOp CliffordOp::from_symplectic(const BitMatrix &s, const std::vector<uint8_t> &v) {
    if (s.rows() != s.cols() || s.rows() % 2 != 0) {
        throw std::invalid_argument("symplectic matrix must be 2n x 2n");
    }
    size_t n = s.rows() / 2;
    CliffordOp out(n);
    BitMatrix cols = s.transposed();
    for (size_t k = 0; k < 2 * n; k++) {
        out.img_x_.row(k) = cols.row(k).slice(0, n);
        out.img_z_.row(k) = cols.row(k).slice(n, n);
    }
    out.v_ = v;
    if (!out.is_symplectic()) {
        throw std::invalid_argument("matrix is not symplectic");
    }
    if (!is_valid_phase_vector(s, v)) {
        throw std::invalid_argument("phase vector is not valid for the symplectic matrix");
    }
    return out;
}

CliffordOp CliffordOp::from_images(const std::vector<PauliOp> &images) {
    if (images.size() % 2 != 0 || images.empty()) {
        throw std::invalid_argument("need 2n images");
    }
    size_t n = images.size() / 2;
    CliffordOp out(n);
    for (size_t k = 0; k < images.size(); k++) {
        if (images[k].num_qubits() != n) {
            throw std::invalid_argument("image dimension mismatch");
        }
        out.img_x_.row(k) = images[k].x;
        out.img_z_.row(k) = images[k].z;
        out.v_[k] = images[k].phase;
    }
    if (!out.is_valid()) {
        throw std::invalid_argument("images do not define a Clifford operation");
    }
    return out;
}

BitMatrix CliffordOp::s() const {
    BitMatrix out(2 * n_, 2 * n_);
    for (size_t k = 0; k < 2 * n_; k++) {
        for (size_t q = 0; q < n_; q++) {
            out.set(q, k, img_x_.get(k, q));
            out.set(n_ + q, k, img_z_.get(k, q));
        }
    }
    return out;
}

PauliOp CliffordOp::image(size_t k) const { return PauliOp(img_x_.row(k), img_z_.row(k), v_[k]); }

bool CliffordOp::is_symplectic() const {
    size_t nn = 2 * n_;
    for (size_t j = 0; j < nn; j++) {
        for (size_t k = j; k < nn; k++) {
            bool form = img_x_.row(j).dot(img_z_.row(k)) ^ img_z_.row(j).dot(img_x_.row(k));
            bool expected = j < n_ && k == j + n_;
            if (form != expected) {
                return false;
            }
        }
    }
    return true;
}

bool CliffordOp::is_valid() const {
    if (!is_symplectic()) {
        return false;
    }
    for (size_t k = 0; k < 2 * n_; k++) {
        size_t ys = (img_x_.row(k) & img_z_.row(k)).popcount();
        if (v_[k] > 3 || ((v_[k] ^ ys) & 1) != 0) {
            return false;
        }
    }
    return true;
}

bool CliffordOp::is_identity() const { return *this == CliffordOp(n_); }

void CliffordOp::prepend_1q(size_t qubit, const OneQubitClifford &gate) {
    for (size_t k = 0; k < 2 * n_; k++) {
        bool a = img_x_.get(k, qubit);
        bool b = img_z_.get(k, qubit);
        conjugate_1q_bits(gate, a, b, v_[k]);
        img_x_.set(k, qubit, a);
        img_z_.set(k, qubit, b);
    }
}

void CliffordOp::prepend_cnot(size_t control, size_t target) {
    for (size_t k = 0; k < 2 * n_; k++) {
        if (img_x_.get(k, control)) {
            img_x_.row(k).flip(target);
        }
        if (img_z_.get(k, target)) {
            img_z_.row(k).flip(control);
        }
    }
}

std::string CliffordOp::str() const {
    std::string out;
    for (size_t k = 0; k < 2 * n_; k++) {
        out += (k < n_ ? "X" : "Z") + std::to_string(k % n_) + " -> " + image(k).str() + "\n";
    }
    return out;
}

PauliOp conjugate_pauli(const CliffordOp &c, const PauliOp &p) {
    size_t n = c.n_;
    if (p.num_qubits() != n) {
        throw std::invalid_argument("conjugate_pauli dimension mismatch");
    }
    // c (i^ph X^x Z^z) c^dag = i^ph * prod_k (c P_k c^dag)^{u_k}, multiplied in basis order.
    PauliOp acc(n);
    acc.phase = p.phase;
    auto multiply_in = [&](size_t k) {
        uint8_t swap_sign = acc.z.dot(c.img_x_.row(k)) ? 2 : 0;
        acc.phase = (acc.phase + c.v_[k] + swap_sign) & 3;
        acc.x ^= c.img_x_.row(k);
        acc.z ^= c.img_z_.row(k);
    };
    for (size_t q = p.x.find_next(0); q < n; q = p.x.find_next(q + 1)) {
        multiply_in(q);
    }
    for (size_t q = p.z.find_next(0); q < n; q = p.z.find_next(q + 1)) {
        multiply_in(n + q);
    }
    return acc;
}

CliffordOp compose(const CliffordOp &a, const CliffordOp &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("compose dimension mismatch");
    }
    size_t n = a.num_qubits();
    std::vector<PauliOp> images;
    images.reserve(2 * n);
    for (size_t k = 0; k < 2 * n; k++) {
        images.push_back(conjugate_pauli(a, b.image(k)));
    }
    return CliffordOp::from_images(images);
}

CliffordOp invert(const CliffordOp &c) {
    size_t n = c.num_qubits();
    // s^{-1} = Lambda s^T Lambda for symplectic s.
    BitMatrix lambda = BitMatrix::symplectic_form(n);
    BitMatrix s_inv = lambda * c.s().transposed() * lambda;
    std::vector<PauliOp> images;
    images.reserve(2 * n);
    for (size_t k = 0; k < 2 * n; k++) {
        BitVector col = s_inv.column(k);
        PauliOp q(col.slice(0, n), col.slice(n, n), 0);
        // c(q) = i^phi P_k, so the inverse maps P_k to i^{-phi} q.
        PauliOp forward = conjugate_pauli(c, q);
        q.phase = (4 - forward.phase) & 3;
        images.push_back(std::move(q));
    }
    return CliffordOp::from_images(images);
}

}  // namespace drbench
