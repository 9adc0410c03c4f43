#pragma once

#include "gridsched/ids.hpp"

#include <deque>
#include <optional>
#include <unordered_set>
#include <vector>

namespace gridsched {

/// Remaining-length comparisons treat anything at or below this as zero,
/// absorbing drift from repeated subtraction.
inline constexpr double kRemainingEps = 1e-9;

/// A unit of work. Owned by a scheduler until submitted to a resource.
struct Job {
    JobId id;
    double length = 0.0;  // job-length units, > 0
    SchedulerId origin_scheduler;
    Step created_step = 0;
};

/// Emitted exactly once per job, at the step its remaining length reaches zero.
struct CompletionNotice {
    JobId job_id;
    ResourceId resource_id;
    Step completion_step = 0;
    SchedulerId origin_scheduler;
};

/// One job-to-resource decision, in the order it was made.
struct Assignment {
    JobId job_id;
    ResourceId resource_id;
};

/// Pure processing time in steps, excluding queue wait. Throws
/// std::domain_error on non-positive inputs.
double job_processing_time(double length, double capacity);

/// A FIFO processor. Capacity is length units processed per time step,
/// fixed for the run; at most one job is in service at a time and leftover
/// per-step budget carries into the next queued job.
class Resource {
public:
    Resource(ResourceId id, double capacity);

    ResourceId id() const { return id_; }
    double capacity() const { return capacity_; }

    /// Appends at the queue tail. Throws std::logic_error if a job with the
    /// same id is already on this resource.
    void enqueue(const Job& job);

    /// Consumes one step of capacity; each job finished within the step is
    /// appended to `completions` stamped with `step`. Idle resources are a
    /// no-op.
    void advance(Step step, std::vector<CompletionNotice>& completions);

    /// Eq. 4 load term: (remaining length in service + queued lengths) / capacity.
    double load() const { return pending_length() / capacity_; }

    /// Remaining length in service plus queued lengths.
    double pending_length() const;

    bool idle() const { return !current_ && queue_.empty(); }
    std::size_t queue_size() const { return queue_.size(); }
    const std::deque<Job>& queue() const { return queue_; }
    const std::optional<Job>& current_job() const { return current_job_; }
    double current_remaining() const { return current_remaining_; }

private:
    ResourceId id_;
    double capacity_;
    std::deque<Job> queue_;
    std::optional<Job> current_job_;
    double current_remaining_ = 0.0;
    std::unordered_set<std::uint64_t> resident_ids_;
};

}  // namespace gridsched
