#include "png/model.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

namespace png {

namespace {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline double site_param(long i, long j, const ModelParams& p) {
    double a = (i == 1) ? p.gamma_minus : p.alpha;
    double b = (j == 1) ? p.gamma_plus : p.alpha;
    return a * b;
}

} // namespace

HeightField::HeightField(long t_capacity)
    : t_(0), cap_(t_capacity + 1),
      data_(static_cast<size_t>(2 * cap_ + 1), 0),
      scratch_(static_cast<size_t>(2 * cap_ + 1), 0) {}

double NucleationStream::uniform(std::uint64_t i, std::uint64_t j) const {
    std::uint64_t h = splitmix64(seed_ ^ splitmix64(trial_ ^ splitmix64((i << 32) | j)));
    double u = static_cast<double>(h >> 11) * 0x1.0p-53;
    return u > 0.0 ? u : 0x1.0p-53;
}

long sample_nucleation(long i, long j, const ModelParams& params,
                       const NucleationStream& stream) {
    if (i < 1 || j < 1) throw std::invalid_argument("sample_nucleation: i,j >= 1");
    if (params.modified && i == 1 && j == 1) return 0;
    double q = site_param(i, j, params);
    if (q == 0.0) return 0;
    if (q >= 1.0)
        throw std::invalid_argument(
            "sample_nucleation: a_i b_j >= 1 (gamma_+*gamma_- >= 1 needs modified=true)");
    double u = stream.uniform(static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(j));
    return static_cast<long>(std::floor(std::log(u) / std::log(q)));
}

HeightField simulate(const ModelParams& params, long t_final, std::uint64_t seed,
                     std::uint64_t trial) {
    params.validate();
    if (t_final < 0) throw std::invalid_argument("simulate: t_final >= 0");
    NucleationStream stream(seed, trial);
    HeightField field(t_final);
    double log_qa = std::log(params.alpha * params.alpha);
    for (long t = 0; t < t_final; ++t) {
        field.step([&](long r, long tn) -> long {
            long i = (r + tn + 1) / 2;
            long j = (tn + 1 - r) / 2;
            if (i == 1 || j == 1)
                return sample_nucleation(i, j, params, stream);
            // bulk fast path: same q everywhere
            double u = stream.uniform(static_cast<std::uint64_t>(i),
                                      static_cast<std::uint64_t>(j));
            return static_cast<long>(std::floor(std::log(u) / log_qa));
        });
    }
    return field;
}

EnsembleResult ensemble(const ModelParams& params, long n, long t_final,
                        long trials, std::uint64_t seed,
                        const std::vector<ProbeSpec>& probes, int threads) {
    params.validate();
    EnsembleResult result;
    result.probes = probes;
    result.positions.resize(probes.size());
    result.tau_exact.assign(probes.size(), 0.0);
    result.samples.assign(probes.size(), std::vector<double>(static_cast<size_t>(trials)));

    std::vector<ScalingFrame> frames;
    frames.reserve(probes.size());
    for (size_t k = 0; k < probes.size(); ++k) {
        ScalingFrame f = make_frame(n, probes[k].beta0, params);
        long r;
        if (probes[k].variant == ScaledVariant::Bulk) {
            double residual;
            r = r_of_tau(probes[k].tau, f, &residual);
            result.tau_exact[k] = tau_of_r(r, f);
        } else {
            r = static_cast<long>(std::nearbyint(2.0 * probes[k].beta0 * n));
        }
        if (std::labs(r) > t_final)
            throw std::domain_error("ensemble: probe position outside |r| <= t");
        result.positions[k] = r;
        frames.push_back(f);
    }

    auto run_range = [&](long lo, long hi) {
        for (long tr = lo; tr < hi; ++tr) {
            HeightField field = simulate(params, t_final, seed, static_cast<std::uint64_t>(tr));
            for (size_t k = 0; k < probes.size(); ++k) {
                long h = field.h(result.positions[k]);
                result.samples[k][static_cast<size_t>(tr)] =
                    to_scaled(h, result.positions[k], frames[k], probes[k].variant);
            }
        }
    };

    if (threads <= 1) {
        run_range(0, trials);
    } else {
        std::vector<std::thread> pool;
        long chunk = (trials + threads - 1) / threads;
        for (int w = 0; w < threads; ++w) {
            long lo = w * chunk, hi = std::min<long>(trials, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(run_range, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    return result;
}

} // namespace png
