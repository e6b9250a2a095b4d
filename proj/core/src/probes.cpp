#include "schatten/probes.hpp"

#include "schatten/rng.hpp"

namespace schatten {

std::string to_string(Distribution d) {
    return d == Distribution::gaussian ? "gaussian" : "rademacher";
}

Distribution parse_distribution(const std::string& name) {
    if (name == "gaussian") return Distribution::gaussian;
    if (name == "rademacher") return Distribution::rademacher;
    throw InvalidArgument("unknown distribution '" + name +
                          "' (expected gaussian or rademacher)");
}

ProbeStream::ProbeStream(Distribution distribution, std::uint64_t master_seed,
                         Eigen::Index dim)
    : distribution_(distribution), master_seed_(master_seed), dim_(dim) {
    if (dim <= 0) throw InvalidArgument("probe dimension must be positive");
}

void ProbeStream::fill(std::uint64_t j, double* dst) const {
    const std::uint64_t tag = distribution_ == Distribution::gaussian ? 1 : 2;
    std::uint64_t key = rng::mix(master_seed_, j);
    key = rng::mix(key, static_cast<std::uint64_t>(dim_));
    key = rng::mix(key, tag);
    rng::Xoshiro256 gen(key);

    const Eigen::Index n = dim_;
    if (distribution_ == Distribution::rademacher) {
        for (Eigen::Index i = 0; i < n; ++i) dst[i] = gen.rademacher();
        return;
    }
    Eigen::Index i = 0;
    for (; i + 1 < n; i += 2) gen.normal_pair(dst[i], dst[i + 1]);
    if (i < n) {
        double z0, z1;
        gen.normal_pair(z0, z1);
        dst[i] = z0;
    }
}

Vector ProbeStream::probe(std::uint64_t j) const {
    Vector w(dim_);
    fill(j, w.data());
    return w;
}

Matrix ProbeStream::probe_block(std::uint64_t j0, Eigen::Index count) const {
    Matrix ws(dim_, count);
    for (Eigen::Index c = 0; c < count; ++c)
        fill(j0 + static_cast<std::uint64_t>(c), ws.col(c).data());
    return ws;
}

}  // namespace schatten
