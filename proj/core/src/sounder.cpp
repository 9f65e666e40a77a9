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

#include "simo/sounder.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <string>
#include <thread>

#include "simo/keyed_rng.hpp"

namespace simo
{
    namespace
    {
        // Stream tags keep the independent draws of one snapshot apart.
        enum : std::uint64_t
        {
            tag_block_fading = 1,
            tag_replica_phase = 2,
            tag_noise = 3
        };

        KeyedStream stream_for(StreamKey key, std::size_t element, std::uint64_t tag)
        {
            return KeyedStream(key.seed, {key.interval_id, key.snapshot_idx, element, tag});
        }

        GainVector checked_gains(std::vector<cdouble> values, const char *what)
        {
            for (const auto &v : values)
                if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                    throw Error(ErrorKind::numeric_failure, std::string(what) + " produced a non-finite value");
            return GainVector(std::move(values));
        }

        bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }
    }

    void SnapshotConfig::validate() const
    {
        if (intervals < 1 || snapshots_per_interval < 1 || samples_per_snapshot < 1)
            throw Error(ErrorKind::invalid_input, "snapshot counts must be at least 1");
        if (!finite_positive(snapshot_dt_ms))
            throw Error(ErrorKind::invalid_input, "snapshot_dt_ms must be positive");
        if (!std::isfinite(tx_power_dbm))
            throw Error(ErrorKind::invalid_input, "tx_power_dbm must be finite");
        if (!finite_positive(sample_rate_hz) || !std::isfinite(tone_offset_hz) ||
            !(sample_rate_hz > 2.0 * std::abs(tone_offset_hz)))
            throw Error(ErrorKind::invalid_input, "sample_rate_hz must exceed twice the tone offset");
    }

    double SnapshotConfig::tone_amplitude() const { return std::sqrt(db_to_power_ratio(tx_power_dbm)); }

    void FadingModel::validate() const
    {
        if (!(amplitude_sigma_db >= 0.0) || !(phase_jitter_rad >= 0.0) || !(replica_phase_jitter_rad >= 0.0) ||
            !std::isfinite(amplitude_sigma_db) || !std::isfinite(phase_jitter_rad) ||
            !std::isfinite(replica_phase_jitter_rad))
            throw Error(ErrorKind::invalid_input, "fading spreads must be finite and non-negative");
    }

    void ReceiverChain::validate() const
    {
        if (!std::isfinite(chain_gain_db) || !std::isfinite(reference_level_dbm) || !std::isfinite(per_element_snr_db))
            throw Error(ErrorKind::invalid_input, "receiver chain levels must be finite");
        if (!(am_pm_deg_per_db >= 0.0) || !std::isfinite(am_pm_deg_per_db))
            throw Error(ErrorKind::invalid_input, "am_pm_deg_per_db must be finite and non-negative");
    }

    GainVector realize_block(const GainVector &mean_gains, const FadingModel &fading, StreamKey key)
    {
        fading.validate();
        std::vector<cdouble> out(mean_gains.begin(), mean_gains.end());
        if (fading.amplitude_sigma_db == 0.0 && fading.phase_jitter_rad == 0.0)
            return GainVector(std::move(out));
        for (std::size_t i = 0; i < out.size(); ++i)
        {
            auto rng = stream_for(key, i + 1, tag_block_fading);
            const double a_db = fading.amplitude_sigma_db * rng.normal_pair().first;
            const double phi = rng.uniform(-fading.phase_jitter_rad, fading.phase_jitter_rad);
            out[i] *= std::polar(db_to_amplitude_ratio(a_db), phi);
        }
        return checked_gains(std::move(out), "block fading");
    }

    GainVector compose_paths(const GainVector &los, const GainVector &replica, const FadingModel &fading,
                             StreamKey key)
    {
        if (los.size() != replica.size())
            throw Error(ErrorKind::invalid_input, "LoS and replica gain vectors differ in length");
        fading.validate();
        std::vector<cdouble> out(los.begin(), los.end());
        if (!fading.replica_enabled)
            return GainVector(std::move(out));
        for (std::size_t i = 0; i < out.size(); ++i)
        {
            cdouble r = replica[i];
            if (fading.replica_phase_jitter_rad > 0.0 && r != cdouble{})
            {
                auto rng = stream_for(key, i + 1, tag_replica_phase);
                r *= std::polar(1.0, rng.uniform(-fading.replica_phase_jitter_rad, fading.replica_phase_jitter_rad));
            }
            out[i] += r;
        }
        return GainVector(std::move(out));
    }

    std::vector<cdouble> reference_tone(const SnapshotConfig &config)
    {
        config.validate();
        const double amplitude = config.tone_amplitude();
        const double w = 2.0 * std::numbers::pi * config.tone_offset_hz / config.sample_rate_hz;
        std::vector<cdouble> s(config.samples_per_snapshot);
        for (std::size_t n = 0; n < s.size(); ++n)
            s[n] = std::polar(amplitude, w * static_cast<double>(n));
        return s;
    }

    double am_pm_rotation_rad(double input_power_dbm, const ReceiverChain &chain)
    {
        if (!std::isfinite(input_power_dbm))
            return 0.0; // zero gain
        return chain.am_pm_deg_per_db * (input_power_dbm - chain.reference_level_dbm) * std::numbers::pi / 180.0;
    }

    double iq_noise_power(const GainVector &gains, const SnapshotConfig &config, const ReceiverChain &chain)
    {
        if (!chain.noise_enabled)
            return 0.0;
        const double g = chain.amplitude_gain();
        const double mean_signal =
            g * g * db_to_power_ratio(config.tx_power_dbm) * gains.total_power() / static_cast<double>(gains.size());
        return mean_signal / db_to_power_ratio(chain.per_element_snr_db);
    }

    IqBlock synthesize_iq(const GainVector &gains, const SnapshotConfig &config, const ReceiverChain &chain,
                          StreamKey key)
    {
        chain.validate();
        const auto s = reference_tone(config);
        const double g = chain.amplitude_gain();

        const double noise_power = iq_noise_power(gains, config, chain);
        const double noise_sigma = std::sqrt(noise_power / 2.0);

        IqBlock iq(gains.size());
        for (std::size_t i = 0; i < gains.size(); ++i)
        {
            const double p_in = config.tx_power_dbm + amplitude_ratio_to_db(std::abs(gains[i]));
            const cdouble coefficient = g * gains[i] * std::polar(1.0, am_pm_rotation_rad(p_in, chain));
            auto &y = iq[i];
            y.resize(s.size());
            for (std::size_t n = 0; n < s.size(); ++n)
                y[n] = coefficient * s[n];
            if (noise_power > 0.0)
            {
                auto rng = stream_for(key, i + 1, tag_noise);
                for (auto &sample : y)
                {
                    const auto [wi, wq] = rng.normal_pair();
                    sample += cdouble(noise_sigma * wi, noise_sigma * wq);
                }
            }
        }
        return iq;
    }

    GainVector estimate_gain(const IqBlock &iq, std::span<const cdouble> reference, double chain_amplitude_gain)
    {
        double energy = 0.0;
        for (const auto &v : reference)
            energy += std::norm(v);
        if (energy == 0.0)
            throw Error(ErrorKind::degenerate_reference, "reference has zero energy");
        if (iq.empty())
            throw Error(ErrorKind::invalid_input, "no IQ channels to estimate");
        if (!(chain_amplitude_gain > 0.0) || !std::isfinite(chain_amplitude_gain))
            throw Error(ErrorKind::invalid_input, "chain gain must be positive and finite");

        const double scale = 1.0 / (chain_amplitude_gain * energy);
        std::vector<cdouble> h(iq.size());
        for (std::size_t i = 0; i < iq.size(); ++i)
        {
            if (iq[i].size() != reference.size())
                throw Error(ErrorKind::invalid_input, "element " + std::to_string(i + 1) + " has " +
                                                          std::to_string(iq[i].size()) + " samples, expected " +
                                                          std::to_string(reference.size()));
            cdouble acc{};
            for (std::size_t n = 0; n < reference.size(); ++n)
                acc += iq[i][n] * std::conj(reference[n]);
            h[i] = acc * scale;
        }
        return checked_gains(std::move(h), "gain estimation");
    }

    GainVector estimate_gain(const IqBlock &iq, const SnapshotConfig &config, const ReceiverChain &chain)
    {
        return estimate_gain(iq, reference_tone(config), chain.amplitude_gain());
    }

    double estimator_error_variance(double noise_power, const SnapshotConfig &config, const ReceiverChain &chain)
    {
        const double g = chain.amplitude_gain();
        const double a2 = db_to_power_ratio(config.tx_power_dbm);
        return noise_power / (a2 * g * g * static_cast<double>(config.samples_per_snapshot));
    }

    std::vector<SnapshotRecord> simulate(const SimulationInputs &inputs, const SimulateOptions &options)
    {
        const auto &cfg = inputs.config;
        cfg.validate();
        inputs.fading.validate();
        inputs.chain.validate();

        const GainVector los = los_gains(inputs.scenario, inputs.layout);
        const GainVector replica = (inputs.replica && inputs.fading.replica_enabled)
                                       ? replica_gains(inputs.scenario, inputs.layout, *inputs.replica)
                                       : GainVector::zeros(inputs.layout.size());

        const std::size_t total = cfg.intervals * cfg.snapshots_per_interval;
        std::vector<SnapshotRecord> records(total);

        auto produce = [&](std::size_t index) {
            SnapshotRecord &rec = records[index];
            rec.interval_id = index / cfg.snapshots_per_interval + 1;
            rec.snapshot_idx = index % cfg.snapshots_per_interval;
            rec.time_ms = static_cast<double>(rec.snapshot_idx) * cfg.snapshot_dt_ms;
            const StreamKey key{cfg.seed, rec.interval_id, rec.snapshot_idx};
            rec.true_gains = realize_block(compose_paths(los, replica, inputs.fading, key), inputs.fading, key);
            IqBlock iq = synthesize_iq(rec.true_gains, cfg, inputs.chain, key);
            rec.estimated_gains = estimate_gain(iq, cfg, inputs.chain);
            if (options.keep_iq)
                rec.iq = std::move(iq);
        };

        const std::size_t workers = std::clamp<std::size_t>(options.threads, 1, total);
        if (workers == 1)
        {
            for (std::size_t i = 0; i < total; ++i)
                produce(i);
            return records;
        }

        std::vector<std::exception_ptr> failures(workers);
        {
            std::vector<std::jthread> pool;
            pool.reserve(workers);
            for (std::size_t w = 0; w < workers; ++w)
                pool.emplace_back([&, w] {
                    try
                    {
                        for (std::size_t i = w; i < total; i += workers)
                            produce(i);
                    }
                    catch (...)
                    {
                        failures[w] = std::current_exception();
                    }
                });
        }
        for (auto &f : failures)
            if (f)
                std::rethrow_exception(f);
        return records;
    }
}
