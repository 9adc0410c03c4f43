#pragma once

#include "gridsched/core.hpp"
#include "gridsched/ids.hpp"
#include "gridsched/rng.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace gridsched::clds {

/// A scheduler's bookkeeping record for a submitted job. Lives from
/// submission until the step after its completion reward is produced.
struct ScheduledJobEntry {
    JobId job_id;
    double job_size = 0.0;
    ResourceId resource_id;
    Step starting_time = 0;
    std::optional<Step> completion_time;  // strictly > starting_time when set
};

using ScheduledJobList = std::vector<ScheduledJobEntry>;

/// Per-resource rewards produced by one scheduler in one time step.
struct RewardVector {
    SchedulerId sender;
    Step step = 0;
    std::vector<double> rewards;  // one slot per resource
};

/// Per-resource efficiency estimates maintained by the learner.
struct UtilityTable {
    std::vector<double> values;  // one slot per resource
    Step version = 0;            // step of the update that produced it
};

struct LearnerState {
    UtilityTable table;
    double alpha = 0.1;  // learning factor, in (0, 1]
    SchedulerId current_learner;
};

/// Positive reward for a finished job: job_size / (completion - starting).
/// Throws std::domain_error unless completion_time > starting_time and
/// job_size > 0.
double reward_finished(double job_size, Step starting_time, Step completion_time);

/// Negative reward for a still-pending job: -1 / job_size. Throws
/// std::domain_error on non-positive size.
double reward_unfinished(double job_size);

/// Sums this scheduler's per-resource rewards for the step into `out`
/// (resized to num_resources, zero where the scheduler has no entries).
/// Completed entries are consumed: their reward is produced once and the
/// record leaves the list. Pending entries are penalized and kept.
void generate_local_rewards(SchedulerId scheduler, ScheduledJobList& list,
                            Step current_step, std::size_t num_resources,
                            RewardVector& out);

/// Eq. 3 update: U(q) <- (1 - alpha) * U(q) + alpha * sum_i vectors[i](q).
/// All vectors must carry the table's slot count and a common step, which
/// becomes the table's version. Throws std::invalid_argument on a
/// mismatched vector (protocol error).
void update_utility_table(UtilityTable& table, std::span<const RewardVector> vectors,
                          double alpha);

/// Index of the greatest utility value; ties are broken uniformly at random
/// from the caller's stream. `tie_scratch` is reused across calls.
ResourceId select_resource(const UtilityTable& table, Rng& rng,
                           std::vector<std::uint32_t>& tie_scratch);

/// Greedy per-job selection for everything in the queue. Records one
/// ScheduledJobEntry per assignment with starting_time = current_step and
/// empties the queue; assignments land in `out` in queue order.
void schedule_queue(std::vector<Job>& job_queue, const UtilityTable& table,
                    Step current_step, Rng& rng, ScheduledJobList& list,
                    std::vector<std::uint32_t>& tie_scratch,
                    std::vector<Assignment>& out);

/// Failover: the lowest-index survivor becomes the learner and adopts the
/// last broadcast table snapshot. Throws std::runtime_error when no
/// scheduler survives.
LearnerState promote_learner(std::span<const SchedulerId> survivors,
                             SchedulerId failed, const UtilityTable& snapshot,
                             double alpha);

}  // namespace gridsched::clds
