// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The wfdm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace wfdm
{

using cplx = std::complex<double>;

// Ordered complex baseband samples. Every processing stage consumes and produces these.
using ComplexSequence = std::vector<cplx>;

inline constexpr double kPi = 3.14159265358979323846;

// Dense column-major complex matrix. Sized for the steering/precoding matrices used here
// ((2N+1)L x K with K a handful of users), not for general numerics.
class CMatrix
{
public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static CMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return data_.empty(); }

    cplx &operator()(std::size_t r, std::size_t c) { return data_[c * rows_ + r]; }
    const cplx &operator()(std::size_t r, std::size_t c) const { return data_[c * rows_ + r]; }

    std::span<cplx> col(std::size_t c) { return {data_.data() + c * rows_, rows_}; }
    std::span<const cplx> col(std::size_t c) const { return {data_.data() + c * rows_, rows_}; }

    std::span<const cplx> data() const noexcept { return data_; }

    CMatrix adjoint() const;

    // this * v
    ComplexSequence apply(std::span<const cplx> v) const;
    // this^H * v
    ComplexSequence apply_adjoint(std::span<const cplx> v) const;

    friend CMatrix operator*(const CMatrix &a, const CMatrix &b);
    friend CMatrix operator-(const CMatrix &a, const CMatrix &b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

// Largest entrywise modulus, used for residual checks.
double max_abs(const CMatrix &m);

double norm2(std::span<const cplx> v);
double energy(std::span<const cplx> v);
cplx dot_conj(std::span<const cplx> a, std::span<const cplx> b); // a^H b

} // namespace wfdm
