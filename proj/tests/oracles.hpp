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

// Reference computations for the test suite. Deliberately naive and independent of
// the library code paths they check.

#pragma once

#include "wfdm/types.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <vector>

namespace oracle
{

using wfdm::cplx;
using wfdm::kPi;
using Vec = std::vector<cplx>;
using Mat = std::vector<Vec>; // row-major

inline Vec naive_dft(const Vec &s)
{
    const std::size_t J = s.size();
    Vec out(J);
    for (std::size_t k = 0; k < J; ++k)
    {
        cplx acc = 0.0;
        for (std::size_t n = 0; n < J; ++n)
            acc += s[n] * std::exp(cplx(0.0, -2.0 * kPi * static_cast<double>(k * n) / static_cast<double>(J)));
        out[k] = acc / std::sqrt(static_cast<double>(J));
    }
    return out;
}

inline Mat dft_matrix(std::size_t J)
{
    Mat m(J, Vec(J));
    for (std::size_t k = 0; k < J; ++k)
        for (std::size_t n = 0; n < J; ++n)
            m[k][n] = std::exp(cplx(0.0, -2.0 * kPi * static_cast<double>(k * n) / static_cast<double>(J))) /
                      std::sqrt(static_cast<double>(J));
    return m;
}

inline Mat matmul(const Mat &a, const Mat &b)
{
    const std::size_t n = a.size(), m = b[0].size(), inner = b.size();
    Mat c(n, Vec(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < inner; ++k)
                c[i][j] += a[i][k] * b[k][j];
    return c;
}

inline Mat identity(std::size_t n)
{
    Mat m(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1.0;
    return m;
}

inline Mat adjoint(const Mat &a)
{
    Mat t(a[0].size(), Vec(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j)
            t[j][i] = std::conj(a[i][j]);
    return t;
}

inline Vec matvec(const Mat &a, const Vec &v)
{
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            out[i] += a[i][j] * v[j];
    return out;
}

// Direct weight formula, no modular reduction.
inline std::array<cplx, 4> weights(double alpha, const std::array<int, 4> &m, const std::array<int, 4> &n)
{
    std::array<cplx, 4> w{};
    for (int i = 0; i < 4; ++i)
    {
        cplx acc = 0.0;
        for (int k = 0; k < 4; ++k)
        {
            const double ph = (4.0 * m[k] + 1.0) * (4.0 * n[k] + k) * alpha - k * i;
            acc += std::exp(cplx(0.0, -0.5 * kPi * ph));
        }
        w[i] = 0.25 * acc;
    }
    return w;
}

// Σ ω_i D^i as an explicit J x J matrix.
inline Mat wfrft_matrix(std::size_t J, const std::array<cplx, 4> &w)
{
    const Mat d = dft_matrix(J);
    Mat power = identity(J);
    Mat out(J, Vec(J));
    for (int i = 0; i < 4; ++i)
    {
        for (std::size_t r = 0; r < J; ++r)
            for (std::size_t c = 0; c < J; ++c)
                out[r][c] += w[i] * power[r][c];
        power = matmul(d, power);
    }
    return out;
}

inline double max_abs_diff(const Vec &a, const Vec &b)
{
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

inline double q(double t) { return 0.5 * std::erfc(t / std::sqrt(2.0)); }

// Phase density of exp(j0)·√γ + CN(0,1) noise, γ = Es/σ².
inline double phase_pdf(double theta, double gamma)
{
    const double c = std::cos(theta);
    return std::exp(-gamma) / (2.0 * kPi) +
           0.5 * std::sqrt(gamma / kPi) * c * std::exp(-gamma * std::sin(theta) * std::sin(theta)) *
               std::erfc(-std::sqrt(gamma) * c);
}

// Exact bit error rate of Gray-labelled M-PSK over AWGN, by integrating the phase density
// over each decision sector.
inline double mpsk_gray_ber(double gamma, int M)
{
    const int bits = std::countr_zero(static_cast<unsigned>(M));
    const double width = 2.0 * kPi / M;
    std::vector<double> p(static_cast<std::size_t>(M));
    for (int d = 0; d < M; ++d)
    {
        const double a = d * width - width / 2.0;
        const int steps = 4000;
        const double h = width / steps;
        double acc = phase_pdf(a, gamma) + phase_pdf(a + width, gamma);
        for (int i = 1; i < steps; ++i)
            acc += (i % 2 ? 4.0 : 2.0) * phase_pdf(a + i * h, gamma);
        p[static_cast<std::size_t>(d)] = acc * h / 3.0;
    }
    double ber = 0.0;
    for (int i = 0; i < M; ++i)
        for (int d = 0; d < M; ++d)
        {
            const int j = (i + d) % M;
            const unsigned li = static_cast<unsigned>(i ^ (i >> 1));
            const unsigned lj = static_cast<unsigned>(j ^ (j >> 1));
            ber += p[static_cast<std::size_t>(d)] * std::popcount(li ^ lj);
        }
    return ber / (static_cast<double>(M) * bits);
}

// One steering-vector entry, evaluated from scratch.
inline cplx steering_entry(int n, int l, int N, int L, double f0, double df, double p, double d, double c,
                           double t, double range, double theta)
{
    const double inc = df * std::log(std::pow(std::abs(n) + 1.0, p) * (l + 1.0));
    const double phase = 2.0 * kPi * inc * (t - range / c) + 2.0 * kPi * f0 * n * d * std::sin(theta) / c;
    return std::exp(cplx(0.0, phase)) / std::sqrt(static_cast<double>((2 * N + 1) * L));
}

} // namespace oracle
