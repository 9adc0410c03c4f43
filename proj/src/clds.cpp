#include "gridsched/clds.hpp"

#include "gridsched/kernels.hpp"

#include <algorithm>
#include <stdexcept>

namespace gridsched::clds {

double reward_finished(double job_size, Step starting_time, Step completion_time) {
    if (!(job_size > 0.0))
        throw std::domain_error("reward_finished: job size must be positive");
    if (completion_time <= starting_time)
        throw std::domain_error(
            "reward_finished: completion time must exceed starting time");
    return job_size / static_cast<double>(completion_time - starting_time);
}

double reward_unfinished(double job_size) {
    if (!(job_size > 0.0))
        throw std::domain_error("reward_unfinished: job size must be positive");
    return -1.0 / job_size;
}

void generate_local_rewards(SchedulerId scheduler, ScheduledJobList& list,
                            Step current_step, std::size_t num_resources,
                            RewardVector& out) {
    out.sender = scheduler;
    out.step = current_step;
    out.rewards.assign(num_resources, 0.0);
    for (const ScheduledJobEntry& entry : list) {
        const std::size_t slot = entry.resource_id.value;
        if (entry.completion_time && *entry.completion_time <= current_step) {
            out.rewards[slot] +=
                reward_finished(entry.job_size, entry.starting_time,
                                *entry.completion_time);
        } else {
            out.rewards[slot] += reward_unfinished(entry.job_size);
        }
    }
    // completed entries produced their one reward above; drop them now
    std::erase_if(list, [current_step](const ScheduledJobEntry& e) {
        return e.completion_time && *e.completion_time <= current_step;
    });
}

void update_utility_table(UtilityTable& table, std::span<const RewardVector> vectors,
                          double alpha) {
    const std::size_t n = table.values.size();
    if (vectors.empty())
        throw std::invalid_argument("update_utility_table: no reward vectors");
    for (const RewardVector& v : vectors) {
        if (v.rewards.size() != n)
            throw std::invalid_argument(
                "update_utility_table: reward vector length mismatch");
        if (v.step != vectors.front().step)
            throw std::invalid_argument(
                "update_utility_table: reward vectors from different steps");
    }
    std::vector<double> sums(n, 0.0);
    for (const RewardVector& v : vectors)
        kern::add_inplace(sums.data(), v.rewards.data(), n);
    kern::ema_update(table.values.data(), sums.data(), alpha, n);
    table.version = vectors.front().step;
}

ResourceId select_resource(const UtilityTable& table, Rng& rng,
                           std::vector<std::uint32_t>& tie_scratch) {
    const std::size_t n = table.values.size();
    if (n == 0) throw std::invalid_argument("select_resource: empty utility table");
    tie_scratch.resize(n);
    const std::size_t ties = kern::collect_max(table.values.data(), n,
                                               tie_scratch.data());
    const std::size_t pick = ties == 1 ? 0 : rng.uniform_index(ties);
    return ResourceId{tie_scratch[pick]};
}

void schedule_queue(std::vector<Job>& job_queue, const UtilityTable& table,
                    Step current_step, Rng& rng, ScheduledJobList& list,
                    std::vector<std::uint32_t>& tie_scratch,
                    std::vector<Assignment>& out) {
    out.clear();
    for (const Job& job : job_queue) {
        const ResourceId target = select_resource(table, rng, tie_scratch);
        list.push_back({job.id, job.length, target, current_step, std::nullopt});
        out.push_back({job.id, target});
    }
    job_queue.clear();
}

LearnerState promote_learner(std::span<const SchedulerId> survivors,
                             SchedulerId failed, const UtilityTable& snapshot,
                             double alpha) {
    if (survivors.empty())
        throw std::runtime_error("promote_learner: no surviving schedulers");
    SchedulerId next = survivors.front();
    for (const SchedulerId s : survivors) {
        if (s == failed)
            throw std::invalid_argument("promote_learner: failed agent listed as survivor");
        next = std::min(next, s);
    }
    return LearnerState{snapshot, alpha, next};
}

}  // namespace gridsched::clds
