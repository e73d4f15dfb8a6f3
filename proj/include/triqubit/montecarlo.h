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

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "triqubit/error.h"
#include "triqubit/measures.h"
#include "triqubit/relations.h"
#include "triqubit/states.h"

namespace triqubit {

enum class SweepMode { Pure, Mixed };
enum class SweepFilter { None, SteeringNonneg };
enum class Family { Alpha, M };

struct SweepConfig {
    SweepMode mode = SweepMode::Pure;
    std::int64_t count = 1;
    /// Mixed mode: draw i uses ranks[i % ranks.size()].
    std::vector<int> ranks;
    std::uint64_t seed = 0;
    int workers = 1;
    SweepFilter filter = SweepFilter::None;
};

/// Throws BadConfig.
void validate(const SweepConfig &cfg);

/// Independent generator for one draw: mt19937_64 seeded with
/// splitmix64(seed ^ splitmix64(index)), so row i never depends on how draws
/// are split across workers.
SeededRng draw_rng(std::uint64_t seed, std::int64_t index);

int rank_for_draw(const SweepConfig &cfg, std::int64_t index);

struct SweepRow {
    std::int64_t draw_index = 0;
    ResourceRecord record;
    RelationReport report;
};

/// Raised when a draw fails; carries the replay coordinate.
class DrawError : public Error {
   public:
    DrawError(ErrorCode code, const std::string &message, std::int64_t draw_index)
        : Error(code, "draw " + std::to_string(draw_index) + ": " + message), draw_index_(draw_index) {}
    std::int64_t draw_index() const noexcept { return draw_index_; }

   private:
    std::int64_t draw_index_;
};

/// Regenerates and measures one sampled state from its replay coordinates.
/// `rank` is required for ginibre_mixed and ignored for haar_pure.
SweepRow replay_draw(StateKind kind, std::uint64_t seed, std::int64_t index, std::optional<int> rank = std::nullopt);

SweepRow evaluate_draw(const SweepConfig &cfg, std::int64_t index);

struct SweepSummary {
    std::int64_t total = 0;
    /// Rows that passed the output filter and reached the sink.
    std::int64_t emitted = 0;
    std::map<std::string, std::int64_t> violations;
    /// Most negative residual seen over applicable relations, or 0.
    double max_negative_residual = 0.0;
    std::string worst_relation;
    std::int64_t worst_draw = -1;
    std::map<int, std::int64_t> per_rank_count;
    std::map<int, double> per_rank_bell_fraction;
    double wall_time_seconds = 0.0;

    std::int64_t total_violations() const;
};

using RowSink = std::function<void(const SweepRow &)>;

/// OpenMP sweep over draw indices. Rows reach `sink` in draw-index order and
/// the summary is identical for any worker count.
SweepSummary run_sweep(const SweepConfig &cfg, const RowSink &sink = {});

/// Single-threaded reference with the same contract as run_sweep.
SweepSummary run_sweep_serial(const SweepConfig &cfg, const RowSink &sink = {});

/// One row per grid point of the chosen boundary family.
std::vector<SweepRow> sweep_boundary_families(Family family, int grid);

}  // namespace triqubit
