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
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "simo/channel.hpp"

namespace simo
{
    /// One snapshot as seen by the analysis stage: timing plus antenna-port referenced gains.
    struct GainSnapshot
    {
        std::size_t interval_id = 1;
        std::size_t snapshot_idx = 0;
        double time_ms = 0.0;
        GainVector gains = GainVector::zeros(1);
    };

    struct AnalysisOptions
    {
        Snr rho = Snr::from_db(33.0);
        double tx_power_dbm = -8.0;
        /// Channel power gain (dB) treated as unity when evaluating capacity: the capacity stage
        /// sees h / 10^(ref/20). 0 dB uses the gains as they are.
        double capacity_ref_gain_db = 0.0;
        /// Added to every RSS value; set to the chain gain for a chain-referenced view.
        double rss_offset_db = 0.0;
    };

    struct MetricRecord
    {
        std::size_t interval_id = 1;
        std::size_t snapshot_idx = 0;
        double time_ms = 0.0;
        std::vector<std::optional<double>> rss_dbm;    // nullopt: below noise floor
        std::optional<std::vector<double>> k_linear;   // nullopt: |h_1| = 0
        std::vector<std::optional<double>> k_db;       // nullopt: no reference or K = 0
        double capacity = 0.0;                         // bps/Hz
        std::optional<double> normalized_capacity;     // nullopt: all-zero channel
        double mean_branch_capacity = 0.0;             // C_n denominator
    };

    struct MetricSeries
    {
        std::string geometry;
        Snr rho = Snr::from_db(33.0);
        double capacity_ref_gain_db = 0.0;
        double rss_offset_db = 0.0;
        std::size_t n_elements = 0;
        std::vector<MetricRecord> records;
    };

    /// Gains as seen by the capacity formulas under a given reference gain.
    GainVector capacity_view(const GainVector &h, double capacity_ref_gain_db);

    /// Throws ErrorKind::empty_input for an empty sequence and ErrorKind::invalid_input for rho == 0
    /// or inconsistent element counts.
    MetricSeries compute_metrics(std::span<const GainSnapshot> snapshots, const AnalysisOptions &options,
                                 std::string geometry = {});

    struct Stats
    {
        std::size_t count = 0;
        double mean = 0.0;
        double std = 0.0; // population standard deviation
        double median = 0.0;
        double min = 0.0;
        double max = 0.0;

        friend bool operator==(const Stats &, const Stats &) = default;
    };

    /// Throws ErrorKind::empty_input on an empty sample.
    Stats describe(std::span<const double> values);

    struct ElementSummary
    {
        std::optional<double> mean_rss_dbm; // nullopt when every snapshot is a marker
        std::optional<double> p2p_rss_db;
        std::size_t rss_markers = 0; // snapshots below the noise floor
        std::optional<double> mean_k_db;
        std::size_t k_markers = 0;

        friend bool operator==(const ElementSummary &, const ElementSummary &) = default;
    };

    struct SummaryReport
    {
        std::string tool_version;
        std::string geometry;
        double rho_db = 0.0;
        double rho_linear = 0.0;
        double capacity_ref_gain_db = 0.0;
        double rss_offset_db = 0.0;
        std::size_t n_elements = 0;
        std::size_t n_snapshots = 0;
        std::vector<std::size_t> interval_ids;
        std::vector<ElementSummary> elements;
        Stats capacity;
        std::optional<Stats> normalized_capacity;
        /// mean(C) / mean(mean branch capacity): the ratio-of-means reading of C_n.
        std::optional<double> normalized_capacity_ratio_of_means;
        std::size_t normalized_capacity_markers = 0;
        std::size_t k_reference_markers = 0;
        /// Run configuration echo, in the order it was written.
        std::vector<std::pair<std::string, std::string>> config;

        friend bool operator==(const SummaryReport &, const SummaryReport &) = default;
    };

    /// Aggregates a series. Markers are excluded from the statistics and counted instead.
    SummaryReport summarize(const MetricSeries &series);

    struct ComparisonRow
    {
        std::string metric;
        double a = 0.0;
        double b = 0.0;
        double delta = 0.0; // b - a
    };

    struct Comparison
    {
        std::string label_a;
        std::string label_b;
        std::vector<ComparisonRow> rows;
        std::string higher_capacity;            // label_a, label_b or "equal"
        std::string higher_normalized_capacity; // label_a, label_b or "equal"
    };

    /// Throws ErrorKind::incomparable_reports when rho or the element count differ.
    Comparison compare(const SummaryReport &a, const SummaryReport &b);
}
