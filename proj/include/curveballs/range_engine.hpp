#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "curveballs/distances.hpp"
#include "curveballs/rng.hpp"

namespace curveballs {

// An immutable, id-indexed collection of curves of common dimension.
class Dataset {
public:
    Dataset() = default;

    void add(Curve curve) {
        curve.validate();
        if (index_.count(curve.id)) {
            throw std::invalid_argument("dataset: duplicate curve id '" + curve.id + "'");
        }
        if (!curves_.empty() && curve.dim() != dim()) {
            throw std::invalid_argument("dataset: curve '" + curve.id + "' has dimension " +
                                        std::to_string(curve.dim()) + ", expected " +
                                        std::to_string(dim()));
        }
        max_complexity_ = std::max(max_complexity_, curve.size());
        index_.emplace(curve.id, curves_.size());
        curves_.push_back(std::move(curve));
    }

    std::size_t size() const { return curves_.size(); }
    bool empty() const { return curves_.empty(); }
    std::size_t dim() const { return curves_.empty() ? 0 : curves_.front().dim(); }
    std::size_t max_complexity() const { return max_complexity_; }
    const Curve& at(std::size_t i) const { return curves_[i]; }
    const std::vector<Curve>& curves() const { return curves_; }

    const Curve* find(const std::string& id) const {
        auto it = index_.find(id);
        return it == index_.end() ? nullptr : &curves_[it->second];
    }

private:
    std::vector<Curve> curves_;
    std::unordered_map<std::string, std::size_t> index_;
    std::size_t max_complexity_ = 0;
};

// One metric ball: all curves within `radius` of `center` under `measure`.
struct RangeQuery {
    Measure measure = Measure::DiscreteFrechet;
    Curve center;
    double radius = 0;
};

// Parameters of the VC sampling bounds; nu is the VC dimension estimate.
struct SampleSpec {
    double epsilon = 0.1;
    double delta = 0.1;
    double nu = 1;
    double constant_C = 0.5;

    void validate() const {
        if (!(epsilon > 0 && epsilon <= 1)) throw std::invalid_argument("SampleSpec: epsilon must be in (0,1]");
        if (!(delta > 0 && delta < 1)) throw std::invalid_argument("SampleSpec: delta must be in (0,1)");
        if (!(nu > 0)) throw std::invalid_argument("SampleSpec: nu must be positive");
        if (!(constant_C > 0)) throw std::invalid_argument("SampleSpec: C must be positive");
    }
};

struct CountResult {
    std::size_t count = 0;
    std::vector<std::string> ids; // sorted
};

struct ApproxCountResult {
    double estimate = 0;
    std::size_t sample_size = 0;
    std::vector<std::string> sample_ids;
};

inline void require_query_dim(const Dataset& ds, const RangeQuery& q) {
    if (ds.empty()) throw std::invalid_argument("range query: empty dataset");
    if (q.center.dim() != ds.dim()) {
        throw std::invalid_argument("range query: center dimension " +
                                    std::to_string(q.center.dim()) + " does not match dataset dimension " +
                                    std::to_string(ds.dim()));
    }
    if (q.radius < 0) throw std::invalid_argument("range query: negative radius");
}

// Linear scan applying the measure decision to every curve.
inline CountResult exact_count(const Dataset& ds, const RangeQuery& q) {
    require_query_dim(ds, q);
    CountResult result;
    for (const Curve& c : ds.curves()) {
        if (decide(q.measure, q.center, c, q.radius)) result.ids.push_back(c.id);
    }
    std::sort(result.ids.begin(), result.ids.end());
    result.count = result.ids.size();
    return result;
}

// Epsilon-sample size ceil(C/eps^2 * (nu + ln(1/delta))).
inline std::size_t sample_size(const SampleSpec& spec) {
    spec.validate();
    const double n = spec.constant_C / (spec.epsilon * spec.epsilon) *
                     (spec.nu + std::log(1.0 / spec.delta));
    return static_cast<std::size_t>(std::ceil(n));
}

// Sample size for learning a perfect separator, ceil(C * nu/eps * ln(nu/(eps*delta))).
inline std::size_t separator_sample_size(const SampleSpec& spec) {
    spec.validate();
    const double n = spec.constant_C * (spec.nu / spec.epsilon) *
                     std::log(spec.nu / (spec.epsilon * spec.delta));
    return static_cast<std::size_t>(std::ceil(n));
}

// The KDE epsilon-sample size is governed by the same expression.
inline std::size_t kde_sample_bound(const SampleSpec& spec) { return sample_size(spec); }

// Seed-deterministic uniform sample without replacement (selection sampling
// in dataset order); requesting at least the whole dataset degrades to a
// full scan. Estimate is (fraction of sample in the ball) * |dataset|.
inline ApproxCountResult approx_count(const Dataset& ds, const RangeQuery& q,
                                      const SampleSpec& spec, std::uint64_t seed) {
    require_query_dim(ds, q);
    const std::size_t total = ds.size();
    const std::size_t want = std::min(sample_size(spec), total);

    ApproxCountResult result;
    result.sample_ids.reserve(want);
    Rng rng(seed);
    std::size_t chosen = 0;
    std::size_t hits = 0;
    for (std::size_t i = 0; i < total && chosen < want; ++i) {
        const std::size_t remaining = total - i;
        if (bounded(rng, remaining) < want - chosen) {
            const Curve& c = ds.at(i);
            result.sample_ids.push_back(c.id);
            if (decide(q.measure, q.center, c, q.radius)) ++hits;
            ++chosen;
        }
    }
    result.sample_size = chosen;
    result.estimate = static_cast<double>(hits) / static_cast<double>(chosen) *
                      static_cast<double>(total);
    return result;
}

// Kernel density estimate (1/n) sum exp(-d(x,p)^2); distances are exact for
// the discrete measures and bisected to tol for the continuous ones.
inline double kde(const Dataset& ds, const Curve& x, Measure measure, double tol = 1e-6) {
    if (ds.empty()) throw std::invalid_argument("kde: empty dataset");
    if (x.dim() != ds.dim()) throw std::invalid_argument("kde: probe dimension mismatch");
    double sum = 0;
    for (const Curve& p : ds.curves()) {
        const double d = distance_value(measure, x, p, tol);
        sum += std::exp(-d * d);
    }
    return sum / static_cast<double>(ds.size());
}

} // namespace curveballs
