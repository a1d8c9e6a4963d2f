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

#include "wfdm/types.hpp"

#include <cmath>
#include <stdexcept>

namespace wfdm
{

CMatrix CMatrix::identity(std::size_t n)
{
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::adjoint() const
{
    CMatrix out(cols_, rows_);
    for (std::size_t c = 0; c < cols_; ++c)
        for (std::size_t r = 0; r < rows_; ++r)
            out(c, r) = std::conj((*this)(r, c));
    return out;
}

ComplexSequence CMatrix::apply(std::span<const cplx> v) const
{
    if (v.size() != cols_)
        throw std::invalid_argument("CMatrix::apply: dimension mismatch");
    ComplexSequence out(rows_);
    for (std::size_t c = 0; c < cols_; ++c)
    {
        const cplx vc = v[c];
        const cplx *column = data_.data() + c * rows_;
        for (std::size_t r = 0; r < rows_; ++r)
            out[r] += column[r] * vc;
    }
    return out;
}

ComplexSequence CMatrix::apply_adjoint(std::span<const cplx> v) const
{
    if (v.size() != rows_)
        throw std::invalid_argument("CMatrix::apply_adjoint: dimension mismatch");
    ComplexSequence out(cols_);
    for (std::size_t c = 0; c < cols_; ++c)
        out[c] = dot_conj(col(c), v);
    return out;
}

CMatrix operator*(const CMatrix &a, const CMatrix &b)
{
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("CMatrix multiply: dimension mismatch");
    CMatrix out(a.rows_, b.cols_);
    for (std::size_t c = 0; c < b.cols_; ++c)
        for (std::size_t k = 0; k < a.cols_; ++k)
        {
            const cplx bkc = b(k, c);
            for (std::size_t r = 0; r < a.rows_; ++r)
                out(r, c) += a(r, k) * bkc;
        }
    return out;
}

CMatrix operator-(const CMatrix &a, const CMatrix &b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("CMatrix subtract: dimension mismatch");
    CMatrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i)
        out.data_[i] = a.data_[i] - b.data_[i];
    return out;
}

double max_abs(const CMatrix &m)
{
    double best = 0.0;
    for (const cplx &z : m.data())
        best = std::max(best, std::abs(z));
    return best;
}

double energy(std::span<const cplx> v)
{
    double e = 0.0;
    for (const cplx &z : v)
        e += std::norm(z);
    return e;
}

double norm2(std::span<const cplx> v) { return std::sqrt(energy(v)); }

cplx dot_conj(std::span<const cplx> a, std::span<const cplx> b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("dot_conj: dimension mismatch");
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
    {
        // conj(a) * b, unrolled to keep the hot loop free of complex temporaries
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

} // namespace wfdm
