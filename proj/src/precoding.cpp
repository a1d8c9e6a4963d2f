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

#include "wfdm/precoding.hpp"

#include "wfdm/errors.hpp"

#include <cmath>
#include <limits>

namespace wfdm
{

namespace
{

struct Cholesky
{
    CMatrix lower;
    bool ok = true;
};

Cholesky cholesky(const CMatrix &g)
{
    const std::size_t n = g.rows();
    Cholesky out{CMatrix(n, n), true};
    CMatrix &L = out.lower;
    for (std::size_t j = 0; j < n; ++j)
    {
        double d = g(j, j).real();
        for (std::size_t k = 0; k < j; ++k)
            d -= std::norm(L(j, k));
        if (!(d > 0.0))
        {
            out.ok = false;
            return out;
        }
        const double ljj = std::sqrt(d);
        L(j, j) = ljj;
        for (std::size_t i = j + 1; i < n; ++i)
        {
            cplx acc = g(i, j);
            for (std::size_t k = 0; k < j; ++k)
                acc -= L(i, k) * std::conj(L(j, k));
            L(i, j) = acc / ljj;
        }
    }
    return out;
}

// Solves (L Lᴴ) X = B in place.
void cholesky_solve(const CMatrix &L, CMatrix &B)
{
    const std::size_t n = L.rows();
    for (std::size_t c = 0; c < B.cols(); ++c)
    {
        for (std::size_t i = 0; i < n; ++i)
        {
            cplx acc = B(i, c);
            for (std::size_t k = 0; k < i; ++k)
                acc -= L(i, k) * B(k, c);
            B(i, c) = acc / L(i, i).real();
        }
        for (std::size_t ii = n; ii-- > 0;)
        {
            cplx acc = B(ii, c);
            for (std::size_t k = ii + 1; k < n; ++k)
                acc -= std::conj(L(k, ii)) * B(k, c);
            B(ii, c) = acc / L(ii, ii).real();
        }
    }
}

std::pair<std::size_t, std::size_t> most_coherent_pair(const CMatrix &g)
{
    std::pair<std::size_t, std::size_t> best{0, 0};
    double best_val = -1.0;
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = i + 1; j < g.cols(); ++j)
        {
            const double denom = std::sqrt(g(i, i).real() * g(j, j).real());
            const double coh = denom > 0.0 ? std::abs(g(i, j)) / denom : 1.0;
            if (coh > best_val)
            {
                best_val = coh;
                best = {i, j};
            }
        }
    return best;
}

} // namespace

void AnDmConfig::validate() const
{
    if (!(beta1 > 0.0 && beta1 < 1.0))
        throw ConfigError("beta1", "power splitting factor must lie in (0, 1)");
}

Precoder build_precoder(const CMatrix &h_matrix, double cond_limit)
{
    const std::size_t K = h_matrix.cols();
    if (K == 0 || h_matrix.rows() == 0)
        throw InvalidInput("build_precoder: empty steering matrix");
    if (K > h_matrix.rows())
        throw InvalidInput("build_precoder: more users than array degrees of freedom");

    const CMatrix gram = h_matrix.adjoint() * h_matrix;
    const Cholesky chol = cholesky(gram);

    double condition = std::numeric_limits<double>::infinity();
    if (chol.ok)
    {
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
        for (std::size_t i = 0; i < K; ++i)
        {
            lo = std::min(lo, chol.lower(i, i).real());
            hi = std::max(hi, chol.lower(i, i).real());
        }
        condition = (hi / lo) * (hi / lo);
    }
    if (!chol.ok || !(condition <= cond_limit))
    {
        const auto [a, b] = most_coherent_pair(gram);
        throw IllConditionedGeometry(a, b, condition);
    }

    // P = H G⁻¹, computed as (G⁻¹ Hᴴ)ᴴ since G is Hermitian.
    CMatrix rhs = h_matrix.adjoint();
    cholesky_solve(chol.lower, rhs);

    Precoder pre;
    pre.p_matrix = rhs.adjoint();
    pre.h_matrix = h_matrix;
    pre.gram_condition = condition;
    double trace = 0.0;
    for (const cplx &z : pre.p_matrix.data())
        trace += std::norm(z);
    pre.epsilon = 1.0 / trace;
    return pre;
}

ComplexSequence transmit_cooperative(const Precoder &pre, std::span<const cplx> u, double ps)
{
    if (u.size() != pre.users())
        throw InvalidInput("transmit_cooperative: expected " + std::to_string(pre.users()) + " symbols, got " +
                           std::to_string(u.size()));
    ComplexSequence x = pre.p_matrix.apply(u);
    const double a = std::sqrt(ps);
    for (cplx &z : x)
        z *= a;
    return x;
}

ComplexSequence project_null_space(const Precoder &pre, std::span<const cplx> g)
{
    const ComplexSequence coeff = pre.h_matrix.apply_adjoint(g);
    ComplexSequence out(g.begin(), g.end());
    const ComplexSequence along = pre.p_matrix.apply(coeff);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] -= along[i];
    return out;
}

ComplexSequence draw_an_direction(const Precoder &pre, RandomStream &rng)
{
    if (pre.users() >= pre.dimension())
        throw DegenerateBaseline("AN baseline: steering matrix is square, no null space for artificial noise");
    ComplexSequence g(pre.dimension());
    for (cplx &z : g)
        z = rng.complex_gaussian(1.0);
    ComplexSequence w = project_null_space(pre, g);
    const double n = norm2(w);
    for (cplx &z : w)
        z /= n;
    return w;
}

ComplexSequence transmit_an_baseline(const Precoder &pre, std::span<const cplx> s, double ps, const AnDmConfig &cfg,
                                     RandomStream &rng)
{
    cfg.validate();
    if (s.size() != pre.users())
        throw InvalidInput("transmit_an_baseline: expected " + std::to_string(pre.users()) + " symbols, got " +
                           std::to_string(s.size()));
    const ComplexSequence w = draw_an_direction(pre, rng);
    ComplexSequence x = pre.p_matrix.apply(s);
    const double a_sig = std::sqrt(cfg.beta1 * cfg.beta1 * ps);
    const double a_an = std::sqrt((1.0 - cfg.beta1 * cfg.beta1) * ps);
    for (std::size_t i = 0; i < x.size(); ++i)
        x[i] = a_sig * x[i] + a_an * w[i];
    return x;
}

} // namespace wfdm
