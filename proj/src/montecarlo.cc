// Copyright 2026 The triqubit Authors
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

#include "triqubit/montecarlo.h"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <exception>
#include <numeric>

namespace triqubit {

namespace {

constexpr std::int64_t kChunk = 1024;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

bool passes(SweepFilter filter, const SweepRow &row) {
    switch (filter) {
        case SweepFilter::None: return true;
        case SweepFilter::SteeringNonneg: return row.record.steering_max >= 0.0;
    }
    return true;
}

// Single consumer fed in draw-index order by both sweep drivers.
class Aggregator {
   public:
    Aggregator(const SweepConfig &cfg, const RowSink &sink) : cfg_(cfg), sink_(sink) {
        for (std::string_view name : relation_names()) summary_.violations[std::string(name)] = 0;
    }

    void consume(const SweepRow &row) {
        ++summary_.total;
        for (const auto &e : row.report.entries) {
            if (!e.applicable) continue;
            if (!e.satisfied) ++summary_.violations[e.name];
            if (e.residual < summary_.max_negative_residual) {
                summary_.max_negative_residual = e.residual;
                summary_.worst_relation = e.name;
                summary_.worst_draw = row.draw_index;
            }
        }
        const int rank = row.record.provenance.rank.value_or(1);
        ++summary_.per_rank_count[rank];
        if (row.record.bell_violation_max > 0.0) ++bell_hits_[rank];
        if (passes(cfg_.filter, row)) {
            ++summary_.emitted;
            if (sink_) sink_(row);
        }
    }

    SweepSummary finish(double seconds) {
        for (const auto &[rank, n] : summary_.per_rank_count) {
            summary_.per_rank_bell_fraction[rank] = static_cast<double>(bell_hits_[rank]) / static_cast<double>(n);
        }
        summary_.wall_time_seconds = seconds;
        return summary_;
    }

   private:
    const SweepConfig &cfg_;
    const RowSink &sink_;
    SweepSummary summary_;
    std::map<int, std::int64_t> bell_hits_;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

void validate(const SweepConfig &cfg) {
    if (cfg.count < 1) throw Error(ErrorCode::BadConfig, "count must be >= 1");
    if (cfg.workers < 1) throw Error(ErrorCode::BadConfig, "workers must be >= 1");
    if (cfg.mode == SweepMode::Mixed) {
        if (cfg.ranks.empty()) throw Error(ErrorCode::BadConfig, "mixed mode needs a non-empty rank list");
        for (int r : cfg.ranks) {
            if (r < 1 || r > 8) throw Error(ErrorCode::BadConfig, "rank " + std::to_string(r) + " outside 1..8");
        }
    }
}

SeededRng draw_rng(std::uint64_t seed, std::int64_t index) {
    return SeededRng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(index))));
}

int rank_for_draw(const SweepConfig &cfg, std::int64_t index) {
    if (cfg.mode == SweepMode::Pure) return 1;
    return cfg.ranks[static_cast<std::size_t>(index % static_cast<std::int64_t>(cfg.ranks.size()))];
}

SweepRow replay_draw(StateKind kind, std::uint64_t seed, std::int64_t index, std::optional<int> rank) {
    SeededRng rng = draw_rng(seed, index);
    StateProvenance prov;
    prov.kind = kind;
    prov.seed = seed;
    prov.draw_index = index;

    SweepRow row;
    row.draw_index = index;
    switch (kind) {
        case StateKind::HaarPure:
            row.record = measure(sample_haar_pure(rng), prov);
            break;
        case StateKind::GinibreMixed:
            if (!rank) throw Error(ErrorCode::BadRank, "ginibre_mixed replay needs a rank");
            prov.rank = *rank;
            row.record = measure(sample_ginibre_mixed(*rank, rng), prov);
            break;
        default:
            throw Error(ErrorCode::UnknownName, "state kind '" + std::string(name_of(kind)) + "' is not sampled");
    }
    row.report = evaluate_relations(row.record);
    return row;
}

SweepRow evaluate_draw(const SweepConfig &cfg, std::int64_t index) {
    if (cfg.mode == SweepMode::Pure) return replay_draw(StateKind::HaarPure, cfg.seed, index);
    return replay_draw(StateKind::GinibreMixed, cfg.seed, index, rank_for_draw(cfg, index));
}

std::int64_t SweepSummary::total_violations() const {
    return std::accumulate(violations.begin(), violations.end(), std::int64_t{0},
                           [](std::int64_t acc, const auto &kv) { return acc + kv.second; });
}

SweepSummary run_sweep(const SweepConfig &cfg, const RowSink &sink) {
    validate(cfg);
    const auto start = std::chrono::steady_clock::now();
    Aggregator agg(cfg, sink);

    std::vector<SweepRow> rows;
    std::vector<std::exception_ptr> errors;
    for (std::int64_t base = 0; base < cfg.count; base += kChunk) {
        const std::int64_t n = std::min(kChunk, cfg.count - base);
        rows.assign(static_cast<std::size_t>(n), SweepRow{});
        errors.assign(static_cast<std::size_t>(n), nullptr);

#pragma omp parallel for num_threads(cfg.workers) schedule(dynamic, 16)
        for (std::int64_t i = 0; i < n; ++i) {
            try {
                rows[static_cast<std::size_t>(i)] = evaluate_draw(cfg, base + i);
            } catch (...) {
                errors[static_cast<std::size_t>(i)] = std::current_exception();
            }
        }

        for (std::int64_t i = 0; i < n; ++i) {
            if (const auto &err = errors[static_cast<std::size_t>(i)]) {
                try {
                    std::rethrow_exception(err);
                } catch (const Error &e) {
                    throw DrawError(e.code(), e.what(), base + i);
                }
            }
            agg.consume(rows[static_cast<std::size_t>(i)]);
        }
    }
    return agg.finish(seconds_since(start));
}

SweepSummary run_sweep_serial(const SweepConfig &cfg, const RowSink &sink) {
    validate(cfg);
    const auto start = std::chrono::steady_clock::now();
    Aggregator agg(cfg, sink);
    for (std::int64_t i = 0; i < cfg.count; ++i) {
        SweepRow row;
        try {
            row = evaluate_draw(cfg, i);
        } catch (const Error &e) {
            throw DrawError(e.code(), e.what(), i);
        }
        agg.consume(row);
    }
    return agg.finish(seconds_since(start));
}

std::vector<SweepRow> sweep_boundary_families(Family family, int grid) {
    const CurveId curve = family == Family::Alpha ? CurveId::AlphaND : CurveId::MND;
    const auto params = family_grid(curve, grid);
    std::vector<SweepRow> rows;
    rows.reserve(params.size());
    for (std::size_t k = 0; k < params.size(); ++k) {
        StateProvenance prov;
        prov.kind = family == Family::Alpha ? StateKind::FamilyAlpha : StateKind::FamilyM;
        prov.parameter = params[k];
        prov.draw_index = static_cast<std::int64_t>(k);
        SweepRow row;
        row.draw_index = prov.draw_index;
        row.record = measure(family == Family::Alpha ? psi_alpha(params[k]) : psi_m(params[k]), prov);
        row.report = evaluate_relations(row.record);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace triqubit
