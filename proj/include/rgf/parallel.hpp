#ifndef RGF_PARALLEL_HPP
#define RGF_PARALLEL_HPP

// Deterministic chunked execution. Work is split into fixed index ranges,
// workers pull chunks from an atomic counter, and results live in
// chunk-indexed slots, so merged output is identical for any thread count.

#include <atomic>
#include <stdexcept>
#include <thread>
#include <vector>

namespace rgf {

struct ChunkRange {
  std::size_t begin;
  std::size_t end;
};

inline std::vector<ChunkRange> make_chunks(std::size_t total, int threads) {
  if (threads < 1) throw std::invalid_argument("make_chunks: thread count must be positive");
  std::size_t want = static_cast<std::size_t>(threads) * 8;
  if (want > total) want = total ? total : 1;
  std::vector<ChunkRange> chunks;
  std::size_t base = total / want, extra = total % want;
  std::size_t pos = 0;
  for (std::size_t c = 0; c < want; ++c) {
    std::size_t len = base + (c < extra ? 1 : 0);
    chunks.push_back({pos, pos + len});
    pos += len;
  }
  return chunks;
}

// fn(chunk_index, begin, end) runs once per chunk; chunk indices are dense.
template <typename Fn>
void run_chunked(std::size_t total, int threads, Fn&& fn) {
  auto chunks = make_chunks(total, threads);
  if (threads == 1) {
    for (std::size_t c = 0; c < chunks.size(); ++c) fn(c, chunks[c].begin, chunks[c].end);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto worker = [&]() {
    for (;;) {
      std::size_t c = next.fetch_add(1);
      if (c >= chunks.size() || failed.load()) return;
      try {
        fn(c, chunks[c].begin, chunks[c].end);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  int nworkers = threads < static_cast<int>(chunks.size()) ? threads : static_cast<int>(chunks.size());
  if (nworkers < 1) nworkers = 1;
  for (int t = 0; t < nworkers; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failed.load()) std::rethrow_exception(error);
}

inline std::size_t chunk_count(std::size_t total, int threads) { return make_chunks(total, threads).size(); }

}  // namespace rgf

#endif
