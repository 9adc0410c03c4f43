#include "gridsched/core.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gridsched {

double job_processing_time(double length, double capacity) {
    if (!(length > 0.0))
        throw std::domain_error("job_processing_time: length must be positive");
    if (!(capacity > 0.0))
        throw std::domain_error("job_processing_time: capacity must be positive");
    return length / capacity;
}

Resource::Resource(ResourceId id, double capacity) : id_(id), capacity_(capacity) {
    if (!(capacity > 0.0))
        throw std::domain_error("Resource: capacity must be positive");
}

void Resource::enqueue(const Job& job) {
    if (!resident_ids_.insert(job.id.value).second)
        throw std::logic_error("Resource::enqueue: job " +
                               std::to_string(job.id.value) +
                               " already on resource " + std::to_string(id_.value));
    queue_.push_back(job);
}

void Resource::advance(Step step, std::vector<CompletionNotice>& completions) {
    double budget = capacity_;
    while (budget > kRemainingEps) {
        if (!current_job_) {
            if (queue_.empty()) break;
            current_job_ = queue_.front();
            current_remaining_ = queue_.front().length;
            queue_.pop_front();
        }
        const double consumed = std::min(current_remaining_, budget);
        current_remaining_ -= consumed;
        budget -= consumed;
        if (current_remaining_ <= kRemainingEps) {
            completions.push_back({current_job_->id, id_, step,
                                   current_job_->origin_scheduler});
            resident_ids_.erase(current_job_->id.value);
            current_job_.reset();
            current_remaining_ = 0.0;
        }
    }
}

double Resource::pending_length() const {
    double total = current_remaining_;
    for (const Job& job : queue_) total += job.length;
    return total;
}

}  // namespace gridsched
