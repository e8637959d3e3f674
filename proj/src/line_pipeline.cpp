// Copyright 2026 The Wubikit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wubi/line_pipeline.hpp"

#include <atomic>
#include <condition_variable>
#include <exception>
#include <istream>
#include <limits>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>
#include <vector>

namespace wubi {

namespace {

struct SharedState {
  SharedState(std::istream& in_stream, std::ostream& out_stream,
              const LineFn& line_fn, std::size_t window_size)
      : in(in_stream), out(out_stream), fn(line_fn), window(window_size) {}

  std::istream& in;
  std::ostream& out;
  const LineFn& fn;
  std::size_t window;

  std::mutex in_mutex;
  std::size_t next_read = 0;
  bool input_done = false;

  std::mutex out_mutex;
  std::condition_variable out_cv;
  std::size_t next_emit = 0;
  std::map<std::size_t, std::string> pending;

  // The earliest failing line wins; `stop` only blocks *new* reads, so every
  // line before a failure still gets processed and the winner is stable.
  std::atomic<bool> stop{false};
  std::mutex error_mutex;
  std::size_t error_index = std::numeric_limits<std::size_t>::max();
  std::exception_ptr error;

  bool pull(std::string& line, std::size_t& index) {
    std::lock_guard lock(in_mutex);
    if (input_done || stop.load()) return false;
    if (!std::getline(in, line)) {
      input_done = true;
      return false;
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    index = next_read++;
    return true;
  }

  void record_error(std::size_t index, std::exception_ptr err) {
    {
      std::lock_guard lock(error_mutex);
      if (index < error_index) {
        error_index = index;
        error = std::move(err);
      }
    }
    stop.store(true);
    out_cv.notify_all();
  }

  void emit(std::size_t index, std::string result) {
    std::unique_lock lock(out_mutex);
    out_cv.wait(lock, [&] {
      return stop.load() || index < next_emit + window;
    });
    pending.emplace(index, std::move(result));
    while (!pending.empty() && pending.begin()->first == next_emit) {
      // Failed lines never land in `pending`, so emission naturally stalls
      // right before the first error.
      {
        std::lock_guard error_lock(error_mutex);
        if (next_emit >= error_index) break;
      }
      out << pending.begin()->second << '\n';
      pending.erase(pending.begin());
      ++next_emit;
      out_cv.notify_all();
    }
  }
};

void worker(SharedState& state) {
  std::string line;
  std::size_t index = 0;
  while (state.pull(line, index)) {
    std::string result;
    try {
      result = state.fn(line, index + 1);
    } catch (...) {
      state.record_error(index, std::current_exception());
      continue;  // keep draining lines pulled before the failure
    }
    state.emit(index, std::move(result));
  }
}

}  // namespace

std::size_t for_each_line_ordered(std::istream& in, std::ostream& out,
                                  unsigned threads, const LineFn& fn) {
  if (threads <= 1) {
    std::string line;
    std::size_t count = 0;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      out << fn(line, count + 1) << '\n';
      ++count;
    }
    return count;
  }

  SharedState state{in, out, fn, static_cast<std::size_t>(threads) * 64};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back(worker, std::ref(state));
  }
  for (auto& thread : pool) thread.join();

  if (state.error) std::rethrow_exception(state.error);
  // Drain anything the emit stall left behind (all indices are contiguous
  // here because no line failed).
  for (auto& [index, result] : state.pending) {
    (void)index;
    state.out << result << '\n';
    ++state.next_emit;
  }
  return state.next_read;
}

}  // namespace wubi
