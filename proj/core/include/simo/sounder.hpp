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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "simo/channel.hpp"
#include "simo/geometry.hpp"

namespace simo
{
    /// Measurement timing and excitation.
    struct SnapshotConfig
    {
        std::size_t intervals = 2;
        std::size_t snapshots_per_interval = 100;
        double snapshot_dt_ms = 4.0;
        double tx_power_dbm = -8.0;
        std::size_t samples_per_snapshot = 1024;
        double sample_rate_hz = 1.0e6;
        double tone_offset_hz = 1.0e5;
        std::uint64_t seed = 1;

        /// Throws ErrorKind::invalid_input on zero counts, non-positive dt or an unrepresentable tone.
        void validate() const;
        /// Single-tone amplitude in sqrt(mW): |s[n]|^2 equals the transmit power.
        double tone_amplitude() const;
    };

    /// Block fading around the geometric mean gains. Each snapshot draws, per element, a
    /// log-normal amplitude factor and a bounded phase rotation; the replica component can
    /// additionally receive its own phase rotation before the two paths are summed.
    struct FadingModel
    {
        double amplitude_sigma_db = 0.35;
        double phase_jitter_rad = 0.1;
        double replica_phase_jitter_rad = 0.0;
        bool replica_enabled = true;

        void validate() const;
    };

    struct ReceiverChain
    {
        double chain_gain_db = 42.0;
        double am_pm_deg_per_db = 0.2;
        double reference_level_dbm = -62.5;
        bool noise_enabled = true;
        double per_element_snr_db = 33.0;

        void validate() const;
        double amplitude_gain() const { return db_to_amplitude_ratio(chain_gain_db); }
    };

    struct StreamKey
    {
        std::uint64_t seed = 0;
        std::uint64_t interval_id = 0;
        std::uint64_t snapshot_idx = 0;
    };

    /// Per-element complex baseband sample blocks, iq[element][sample].
    using IqBlock = std::vector<std::vector<cdouble>>;

    struct SnapshotRecord
    {
        std::size_t interval_id = 1; // 1-based
        std::size_t snapshot_idx = 0;
        double time_ms = 0.0;
        GainVector true_gains = GainVector::zeros(1);
        std::optional<IqBlock> iq;
        GainVector estimated_gains = GainVector::zeros(1);
    };

    /// Applies the per-snapshot block-fading factor 10^(a/20) e^{jφ}, a ~ N(0, σ_dB), φ ~ U(±jitter),
    /// drawn from the stream keyed by (key, element).
    GainVector realize_block(const GainVector &mean_gains, const FadingModel &fading, StreamKey key);

    /// LoS + replica sum for one snapshot, with the replica term rotated by its own keyed phase draw.
    GainVector compose_paths(const GainVector &los, const GainVector &replica, const FadingModel &fading,
                             StreamKey key);

    /// Known transmitted tone s[n] = A exp(j 2π f_off n / f_s).
    std::vector<cdouble> reference_tone(const SnapshotConfig &config);

    /// AM-to-PM phase rotation (rad) of an element whose pre-chain mean power is `input_power_dbm`.
    double am_pm_rotation_rad(double input_power_dbm, const ReceiverChain &chain);

    /// Complex noise power per IQ sample: mean per-element signal power at the chain output over the SNR.
    /// Zero when noise is disabled.
    double iq_noise_power(const GainVector &gains, const SnapshotConfig &config, const ReceiverChain &chain);

    IqBlock synthesize_iq(const GainVector &gains, const SnapshotConfig &config, const ReceiverChain &chain,
                          StreamKey key);

    /// Matched-filter estimate ĥ_i = Σ y_i[n] s*[n] / (g_chain Σ |s[n]|^2), referenced to the antenna port.
    GainVector estimate_gain(const IqBlock &iq, const SnapshotConfig &config, const ReceiverChain &chain);

    /// Same estimator against an arbitrary known reference. Throws ErrorKind::degenerate_reference
    /// when the reference has zero energy.
    GainVector estimate_gain(const IqBlock &iq, std::span<const cdouble> reference, double chain_amplitude_gain);

    /// Analytic E|ĥ_i - h_i|^2 of the matched filter for a given noise power.
    double estimator_error_variance(double noise_power, const SnapshotConfig &config, const ReceiverChain &chain);

    struct SimulationInputs
    {
        Scenario scenario;
        ArrayLayout layout;
        std::optional<RayPath> replica;
        FadingModel fading;
        ReceiverChain chain;
        SnapshotConfig config;
    };

    struct SimulateOptions
    {
        unsigned threads = 1;
        bool keep_iq = false;
    };

    /// intervals x snapshots_per_interval records, interval-major. Output is identical for any thread count.
    std::vector<SnapshotRecord> simulate(const SimulationInputs &inputs, const SimulateOptions &options = {});
}
