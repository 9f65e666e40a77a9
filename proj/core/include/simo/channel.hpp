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

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "simo/error.hpp"

namespace simo
{
    using cdouble = std::complex<double>;

    // ----- dB helpers -------------------------------------------------------

    inline double db_to_power_ratio(double db) { return std::pow(10.0, db / 10.0); }
    inline double db_to_amplitude_ratio(double db) { return std::pow(10.0, db / 20.0); }
    double power_ratio_to_db(double ratio);     // -inf for 0
    double amplitude_ratio_to_db(double ratio); // -inf for 0

    // ----- GainVector -------------------------------------------------------

    /// Complex voltage gains h_1..h_N from the single transmit antenna to each receive element
    /// for one snapshot. Element i lives at index i-1.
    class GainVector
    {
    public:
        /// Throws ErrorKind::invalid_input if empty or any component is NaN/Inf.
        explicit GainVector(std::vector<cdouble> gains);
        GainVector(std::initializer_list<cdouble> gains);

        std::size_t size() const noexcept { return gains_.size(); }
        const cdouble &operator[](std::size_t i) const { return gains_[i]; }
        std::span<const cdouble> values() const noexcept { return gains_; }
        auto begin() const noexcept { return gains_.begin(); }
        auto end() const noexcept { return gains_.end(); }

        /// Sum of |h_i|^2.
        double total_power() const noexcept;
        GainVector scaled(double factor) const;

        static GainVector zeros(std::size_t n);

        friend bool operator==(const GainVector &, const GainVector &) = default;

    private:
        std::vector<cdouble> gains_;
    };

    // ----- Snr --------------------------------------------------------------

    /// Linear SNR rho >= 0 with dB conversions.
    class Snr
    {
    public:
        static Snr from_linear(double rho);
        static Snr from_db(double db);

        double linear() const noexcept { return rho_; }
        double db() const { return power_ratio_to_db(rho_); }

        friend bool operator==(const Snr &, const Snr &) = default;

    private:
        explicit Snr(double rho) : rho_(rho) {}
        double rho_;
    };

    /// Spectral efficiency in bps/Hz, always >= 0.
    struct Capacity
    {
        double bps_per_hz = 0.0;
        friend auto operator<=>(const Capacity &, const Capacity &) = default;
    };

    /// K_i1 = |h_i| / |h_1|. The first entry is exactly 1.
    class GainRatioVector
    {
    public:
        explicit GainRatioVector(std::vector<double> ratios) : ratios_(std::move(ratios)) {}

        std::size_t size() const noexcept { return ratios_.size(); }
        double operator[](std::size_t i) const { return ratios_[i]; }
        std::span<const double> linear() const noexcept { return ratios_; }

        /// 20*log10 view; entries with a zero ratio have no finite dB value.
        std::vector<std::optional<double>> db() const;

    private:
        std::vector<double> ratios_;
    };

    // ----- Operations -------------------------------------------------------

    /// log2(det(I + rho h^H h)) evaluated through its rank-one closed form log2(1 + rho sum|h_i|^2).
    Capacity capacity(const GainVector &h, Snr rho);

    /// Same quantity computed the long way: builds the N x N matrix I + rho h^H h and takes its
    /// determinant by complex LU with partial pivoting. Used to cross-check `capacity`.
    Capacity capacity_det_oracle(const GainVector &h, Snr rho);

    /// SIMO capacity over the mean of the N single-branch capacities.
    /// Lies in (1, N]. Throws ErrorKind::undefined_ratio when rho == 0 or h is all zero.
    double normalized_capacity(const GainVector &h, Snr rho);

    /// Mean single-branch capacity (1/N) sum log2(1 + rho |h_i|^2), the normalized-capacity denominator.
    double mean_branch_capacity(const GainVector &h, Snr rho);

    /// Throws ErrorKind::reference_zero when |h_1| == 0.
    GainRatioVector gain_ratios(const GainVector &h);

    /// tx_power_dbm + 20 log10|h_i|. Returns nullopt (below noise floor) for a zero gain.
    std::optional<double> rss_dbm(cdouble h_i, double tx_power_dbm);
}
