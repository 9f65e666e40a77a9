// SPDX-License-Identifier: Apache-2.0
//
// simo-sounder: SIMO indoor channel-sounder simulation and analysis
// Copyright (C) 2026 The simo-sounder Authors
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

#include "simo/channel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace simo
{
    namespace
    {
        double log2_1p(double x) { return std::log1p(x) / std::numbers::ln2; }

        void require_finite(const GainVector &h)
        {
            for (const auto &v : h)
                if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                    throw Error(ErrorKind::invalid_input, "gain vector has a non-finite component");
        }
    }

    const char *to_string(ErrorKind kind) noexcept
    {
        switch (kind)
        {
        case ErrorKind::invalid_input: return "invalid-input";
        case ErrorKind::undefined_ratio: return "undefined-ratio";
        case ErrorKind::reference_zero: return "reference-zero";
        case ErrorKind::invalid_geometry: return "invalid-geometry";
        case ErrorKind::singular_geometry: return "singular-geometry";
        case ErrorKind::invalid_ray: return "invalid-ray";
        case ErrorKind::degenerate_reference: return "degenerate-reference";
        case ErrorKind::empty_input: return "empty-input";
        case ErrorKind::incomparable_reports: return "incomparable-reports";
        case ErrorKind::malformed_config: return "malformed-config";
        case ErrorKind::malformed_input: return "malformed-input";
        case ErrorKind::numeric_failure: return "numeric-failure";
        case ErrorKind::io_failure: return "io-failure";
        }
        return "unknown";
    }

    double power_ratio_to_db(double ratio)
    {
        if (ratio == 0.0)
            return -std::numeric_limits<double>::infinity();
        return 10.0 * std::log10(ratio);
    }

    double amplitude_ratio_to_db(double ratio)
    {
        if (ratio == 0.0)
            return -std::numeric_limits<double>::infinity();
        return 20.0 * std::log10(ratio);
    }

    // ----- GainVector -------------------------------------------------------

    GainVector::GainVector(std::vector<cdouble> gains) : gains_(std::move(gains))
    {
        if (gains_.empty())
            throw Error(ErrorKind::invalid_input, "gain vector must have at least one element");
        for (std::size_t i = 0; i < gains_.size(); ++i)
            if (!std::isfinite(gains_[i].real()) || !std::isfinite(gains_[i].imag()))
                throw Error(ErrorKind::invalid_input, "gain h_" + std::to_string(i + 1) + " is not finite");
    }

    GainVector::GainVector(std::initializer_list<cdouble> gains) : GainVector(std::vector<cdouble>(gains)) {}

    double GainVector::total_power() const noexcept
    {
        double sum = 0.0;
        for (const auto &v : gains_)
            sum += std::norm(v);
        return sum;
    }

    GainVector GainVector::scaled(double factor) const
    {
        std::vector<cdouble> out(gains_);
        for (auto &v : out)
            v *= factor;
        return GainVector(std::move(out));
    }

    GainVector GainVector::zeros(std::size_t n) { return GainVector(std::vector<cdouble>(n, cdouble{})); }

    // ----- Snr --------------------------------------------------------------

    Snr Snr::from_linear(double rho)
    {
        if (!std::isfinite(rho) || rho < 0.0)
            throw Error(ErrorKind::invalid_input, "SNR must be finite and non-negative");
        return Snr(rho);
    }

    Snr Snr::from_db(double db)
    {
        if (std::isnan(db) || db == std::numeric_limits<double>::infinity())
            throw Error(ErrorKind::invalid_input, "SNR in dB must not be NaN or +inf");
        return Snr(db_to_power_ratio(db));
    }

    std::vector<std::optional<double>> GainRatioVector::db() const
    {
        std::vector<std::optional<double>> out;
        out.reserve(ratios_.size());
        for (double r : ratios_)
            out.push_back(r > 0.0 ? std::optional<double>(20.0 * std::log10(r)) : std::nullopt);
        return out;
    }

    // ----- Operations -------------------------------------------------------

    Capacity capacity(const GainVector &h, Snr rho)
    {
        require_finite(h);
        return {log2_1p(rho.linear() * h.total_power())};
    }

    Capacity capacity_det_oracle(const GainVector &h, Snr rho)
    {
        require_finite(h);
        const std::size_t n = h.size();

        // h is a 1 x N row, so h^H h is the N x N outer product conj(h_i) h_j.
        // Eliminated in extended precision: the pivots cancel terms of size rho |h|^2.
        using ext = std::complex<long double>;
        const long double r = rho.linear();
        std::vector<ext> a(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                a[i * n + j] = ext(i == j ? 1.0L : 0.0L) + r * std::conj(ext(h[i])) * ext(h[j]);

        ext det = 1.0L;
        for (std::size_t col = 0; col < n; ++col)
        {
            std::size_t pivot = col;
            for (std::size_t row = col + 1; row < n; ++row)
                if (std::abs(a[row * n + col]) > std::abs(a[pivot * n + col]))
                    pivot = row;
            if (pivot != col)
            {
                for (std::size_t k = 0; k < n; ++k)
                    std::swap(a[col * n + k], a[pivot * n + k]);
                det = -det;
            }
            const ext p = a[col * n + col];
            det *= p;
            if (p == ext{})
                break;
            for (std::size_t row = col + 1; row < n; ++row)
            {
                const ext f = a[row * n + col] / p;
                for (std::size_t k = col; k < n; ++k)
                    a[row * n + k] -= f * a[col * n + k];
            }
        }
        // I + rho h^H h is Hermitian positive definite: det is real and >= 1 up to rounding.
        return {std::max(0.0, static_cast<double>(std::log2(det.real())))};
    }

    double mean_branch_capacity(const GainVector &h, Snr rho)
    {
        require_finite(h);
        double sum = 0.0;
        for (const auto &v : h)
            sum += log2_1p(rho.linear() * std::norm(v));
        return sum / static_cast<double>(h.size());
    }

    double normalized_capacity(const GainVector &h, Snr rho)
    {
        require_finite(h);
        if (rho.linear() == 0.0)
            throw Error(ErrorKind::undefined_ratio, "normalized capacity is 0/0 at rho = 0");
        if (h.total_power() == 0.0)
            throw Error(ErrorKind::undefined_ratio, "normalized capacity is 0/0 for an all-zero channel");
        const double denominator = mean_branch_capacity(h, rho);
        if (denominator == 0.0)
            throw Error(ErrorKind::undefined_ratio, "mean branch capacity underflows to zero");
        return capacity(h, rho).bps_per_hz / denominator;
    }

    GainRatioVector gain_ratios(const GainVector &h)
    {
        require_finite(h);
        const double reference = std::abs(h[0]);
        if (reference == 0.0)
            throw Error(ErrorKind::reference_zero, "reference element h_1 has zero magnitude");
        std::vector<double> ratios(h.size());
        ratios[0] = 1.0;
        for (std::size_t i = 1; i < h.size(); ++i)
            ratios[i] = std::abs(h[i]) / reference;
        return GainRatioVector(std::move(ratios));
    }

    std::optional<double> rss_dbm(cdouble h_i, double tx_power_dbm)
    {
        if (!std::isfinite(h_i.real()) || !std::isfinite(h_i.imag()) || !std::isfinite(tx_power_dbm))
            throw Error(ErrorKind::invalid_input, "rss_dbm needs a finite gain and transmit power");
        const double magnitude = std::abs(h_i);
        if (magnitude == 0.0)
            return std::nullopt;
        return tx_power_dbm + 20.0 * std::log10(magnitude);
    }
}
