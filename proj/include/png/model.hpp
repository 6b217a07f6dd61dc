#pragma once

#include "png/geometry.hpp"
#include "png/model_params.hpp"

#include <cstdint>
#include <vector>

namespace png {

// Surface heights h(r, t) on |r| <= t, stored densely.
class HeightField {
public:
    HeightField() = default;
    explicit HeightField(long t_capacity);

    long t() const { return t_; }
    long h(long r) const {
        return (r < -t_ || r > t_) ? 0 : data_[static_cast<size_t>(r + cap_)];
    }

    // One PNG step: h(r,t+1) = max of the three neighbours plus the
    // nucleation at (r, t+1).
    template <typename NucleationFn>
    void step(NucleationFn&& nucleation) {
        long tn = t_ + 1;
        if (tn > cap_) throw std::length_error("HeightField: capacity exceeded");
        scratch_.assign(data_.size(), 0);
        for (long r = -tn; r <= tn; ++r) {
            long m = h(r - 1);
            m = std::max(m, h(r));
            m = std::max(m, h(r + 1));
            long w = 0;
            if (((tn - r) & 1L) != 0 && r > -tn && r < tn) w = nucleation(r, tn);
            scratch_[static_cast<size_t>(r + cap_)] = m + w;
        }
        data_.swap(scratch_);
        t_ = tn;
    }

private:
    long t_ = 0;
    long cap_ = 0;
    std::vector<long> data_;
    std::vector<long> scratch_;
};

// Counter-based substreams: every (trial, i, j) triple maps to one uniform
// variate, so ensembles are independent of evaluation order and bit-for-bit
// reproducible from the master seed.
class NucleationStream {
public:
    NucleationStream(std::uint64_t master_seed, std::uint64_t trial = 0)
        : seed_(master_seed), trial_(trial) {}

    double uniform(std::uint64_t i, std::uint64_t j) const;

    std::uint64_t master_seed() const { return seed_; }
    std::uint64_t trial() const { return trial_; }

private:
    std::uint64_t seed_;
    std::uint64_t trial_;
};

// Geometric sample w(i,j), P[w = k] = (1 - q)q^k with q = a_i b_j.
// i = j = 1 combined with the modified flag returns 0.
long sample_nucleation(long i, long j, const ModelParams& params,
                       const NucleationStream& stream);

// Run the exact dynamics from the flat initial condition to time t_final.
HeightField simulate(const ModelParams& params, long t_final, std::uint64_t seed,
                     std::uint64_t trial = 0);

inline long even_time(long n) { return 2 * n; }
inline long odd_time(long n) { return 2 * n - 1; }

struct ProbeSpec {
    ScaledVariant variant = ScaledVariant::Bulk;
    double beta0 = 0.0;
    double tau = 0.0;   // bulk variant only; Gaussian probes sit at r = 2*beta0*N
};

struct EnsembleResult {
    std::vector<ProbeSpec> probes;
    std::vector<long> positions;              // lattice r per probe
    std::vector<double> tau_exact;            // realized tau per probe (bulk)
    std::vector<std::vector<double>> samples; // [probe][trial] scaled values
};

// trials independent runs to time t_final; per-trial substreams derive from
// the master seed so the result does not depend on scheduling order.
EnsembleResult ensemble(const ModelParams& params, long n, long t_final,
                        long trials, std::uint64_t seed,
                        const std::vector<ProbeSpec>& probes, int threads = 1);

} // namespace png
