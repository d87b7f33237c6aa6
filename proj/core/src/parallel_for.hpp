#pragma once

#include <atomic>
#include <thread>
#include <vector>

namespace threeqb::detail {

// Runs body(chunk_index, begin, end) over [0, total) split into fixed-size
// chunks. Chunk boundaries depend only on `total`, and callers merge the
// per-chunk results in chunk order, so outcomes never depend on the worker
// count or scheduling.
template <typename Body>
void parallel_chunks(long long total, int workers, long long chunk_size,
                     Body&& body) {
  if (total <= 0) return;
  const long long nchunks = (total + chunk_size - 1) / chunk_size;
  if (workers <= 1 || nchunks == 1) {
    for (long long c = 0; c < nchunks; ++c)
      body(c, c * chunk_size, std::min(total, (c + 1) * chunk_size));
    return;
  }
  std::atomic<long long> next{0};
  auto run = [&] {
    for (;;) {
      const long long c = next.fetch_add(1);
      if (c >= nchunks) return;
      body(c, c * chunk_size, std::min(total, (c + 1) * chunk_size));
    }
  };
  std::vector<std::thread> pool;
  const int nthreads = static_cast<int>(
      std::min<long long>(workers, nchunks));
  pool.reserve(nthreads - 1);
  for (int t = 1; t < nthreads; ++t) pool.emplace_back(run);
  run();
  for (std::thread& t : pool) t.join();
}

}  // namespace threeqb::detail
