#pragma once

#include <algorithm>
#include <cstdint>
#include <future>
#include <thread>
#include <vector>

#include "idtrade/encoding.hpp"

namespace idt {

/// Number of independent random streams a sampling job is split into. Fixed,
/// so results depend only on the seed and not on the machine's core count.
inline constexpr std::size_t kSamplingStreams = 16;

/// Independent generator for stream `stream` of a job seeded with `seed`.
inline Rng stream_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), 0x9e3779b9u};
  return Rng(seq);
}

/// Splits `samples` across kSamplingStreams streams, runs
/// `work(rng, count, accumulator)` for each on a worker pool and merges the
/// accumulators in stream order.
template <class Acc, class Work, class Merge>
Acc parallel_reduce(std::uint64_t seed, std::size_t samples, Work work, Merge merge) {
  const std::size_t streams = kSamplingStreams;
  std::vector<Acc> partial(streams);
  auto run_stream = [&](std::size_t s) {
    const std::size_t begin = samples * s / streams;
    const std::size_t end = samples * (s + 1) / streams;
    Rng rng = stream_rng(seed, s);
    work(rng, end - begin, partial[s]);
  };

  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, streams);
  if (workers == 1) {
    for (std::size_t s = 0; s < streams; ++s) run_stream(s);
  } else {
    std::vector<std::future<void>> jobs;
    jobs.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      jobs.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t s = w; s < streams; s += workers) run_stream(s);
      }));
    }
    for (auto& j : jobs) j.get();
  }

  Acc total = std::move(partial[0]);
  for (std::size_t s = 1; s < streams; ++s) merge(total, partial[s]);
  return total;
}

}  // namespace idt
