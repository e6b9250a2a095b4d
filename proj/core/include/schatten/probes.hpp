#pragma once

#include <cstdint>
#include <string>

#include "schatten/linops.hpp"

namespace schatten {

/// Probe distributions: mean zero, identity covariance.
enum class Distribution { gaussian, rademacher };

std::string to_string(Distribution d);
Distribution parse_distribution(const std::string& name);

/// Seeded source of probe vectors w_j with E[w] = 0 and E[w w^T] = I.
///
/// probe(j) is a pure function of (master_seed, j, dim, distribution): each
/// sample index owns a substream whose seed is split off the master seed, so
/// draws are independent of call order and of how many workers draw
/// concurrently, and parallel runs reproduce serial ones bit for bit.
///
/// Gaussian variates use the Box-Muller transform over xoshiro256++ uniform
/// bits (see rng.hpp); the transform is fixed so a seed reproduces identical
/// streams across builds of this implementation. Cross-implementation
/// bit-equality is not promised.
class ProbeStream {
public:
    ProbeStream(Distribution distribution, std::uint64_t master_seed,
                Eigen::Index dim);

    Distribution distribution() const { return distribution_; }
    std::uint64_t master_seed() const { return master_seed_; }
    Eigen::Index dim() const { return dim_; }

    /// The j-th probe vector. Deterministic; j >= 0.
    Vector probe(std::uint64_t j) const;

    /// Probes j0 .. j0+count-1 as the columns of a dim x count matrix.
    Matrix probe_block(std::uint64_t j0, Eigen::Index count) const;

private:
    void fill(std::uint64_t j, double* dst) const;

    Distribution distribution_;
    std::uint64_t master_seed_;
    Eigen::Index dim_;
};

}  // namespace schatten
