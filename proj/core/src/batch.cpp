#include "hermitian/batch.hpp"

#include <algorithm>
#include <atomic>
#include <istream>
#include <ostream>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "hermitian/error.hpp"
#include "hermitian/report.hpp"

namespace hermitian {

std::shared_ptr<const HighestWeightAnalyzer> AnalyzerCache::get(const HermitianType& type) {
  const auto key = type.key();
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  // Built outside the lock; a racing duplicate is discarded.
  auto built = std::make_shared<const HighestWeightAnalyzer>(type);
  std::lock_guard lock(mutex_);
  return cache_.try_emplace(key, std::move(built)).first->second;
}

namespace {

struct Outcome {
  std::string line;
  bool failed = false;
};

Outcome process(const std::string& text, std::size_t line_no, AnalyzerCache& cache, bool strict) {
  auto failure = [&](const std::string& message) {
    return Outcome{nlohmann::json{{"line", line_no}, {"error", message}}.dump(), true};
  };
  try {
    const auto record = nlohmann::json::parse(text);
    const auto spec = WeightSpec::from_json(record);
    const auto hw = cache.get(HermitianType::parse(spec.family));
    const auto lambda = spec.resolve(hw->roots());
    return Outcome{report_to_json(hw->analyze(lambda, !strict)).dump(), false};
  } catch (const nlohmann::json::exception& e) {
    return failure(std::string("parse error: ") + e.what());
  } catch (const Error& e) {
    return failure(e.what());
  }
}

}  // namespace

BatchSummary run_batch(std::istream& in, std::ostream& out, const BatchOptions& options) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(std::move(line));

  std::vector<Outcome> results(lines.size());
  AnalyzerCache cache;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < lines.size(); i = next++) {
      results[i] = process(lines[i], i + 1, cache, options.strict);
    }
  };

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(lines.size(), 1)));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  BatchSummary summary;
  for (const auto& r : results) {
    out << r.line << '\n';
    ++summary.records;
    if (r.failed) ++summary.failures;
  }
  return summary;
}

}  // namespace hermitian
