#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "schatten/parallel.hpp"

namespace schatten::detail {

// Kahan compensated summation.
struct KahanSum {
    double sum = 0.0;
    double comp = 0.0;
    void add(double x) {
        const double y = x - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

// Samples are produced in fixed 32-wide blocks and reduced in fixed 256-wide
// chunks (Kahan within a chunk, then Kahan over chunk partials in index
// order). Both widths are constants, so the mean is bit-identical for any
// thread count and whether or not per-sample values are retained.
inline constexpr std::size_t kSampleBlock = 32;
inline constexpr std::size_t kReduceChunk = 256;

struct SampleRun {
    double mean = 0.0;
    std::vector<double> samples;  // empty unless store_samples
};

// block_fn(begin, end, out) must write the per-sample values for sample
// indices [begin, end) into out[0 .. end-begin); end - begin <= kSampleBlock.
inline SampleRun run_samples(
    std::size_t count, int threads, bool store_samples,
    const std::function<void(std::size_t, std::size_t, double*)>& block_fn) {
    SampleRun run;
    const std::size_t n_chunks = (count + kReduceChunk - 1) / kReduceChunk;
    std::vector<double> partials(n_chunks, 0.0);
    if (store_samples) run.samples.resize(count);

    parallel_chunks(count, kReduceChunk, threads,
                    [&](std::size_t begin, std::size_t end) {
        double local[kReduceChunk];
        for (std::size_t b = begin; b < end; b += kSampleBlock) {
            const std::size_t b_end = std::min(b + kSampleBlock, end);
            block_fn(b, b_end, local + (b - begin));
        }
        KahanSum acc;
        for (std::size_t i = 0; i < end - begin; ++i) acc.add(local[i]);
        partials[begin / kReduceChunk] = acc.sum;
        if (store_samples)
            std::copy(local, local + (end - begin), run.samples.begin() + begin);
    });

    KahanSum total;
    for (double p : partials) total.add(p);
    run.mean = total.sum / static_cast<double>(count);
    return run;
}

}  // namespace schatten::detail
