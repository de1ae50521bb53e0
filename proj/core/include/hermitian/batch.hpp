#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "hermitian/highest_weight.hpp"

namespace hermitian {

/// Thread-safe cache of analyzers keyed by canonical family name.
class AnalyzerCache {
 public:
  std::shared_ptr<const HighestWeightAnalyzer> get(const HermitianType& type);

 private:
  std::mutex mutex_;
  std::map<std::string, std::shared_ptr<const HighestWeightAnalyzer>> cache_;
};

struct BatchSummary {
  std::size_t records = 0;
  std::size_t failures = 0;
};

struct BatchOptions {
  unsigned threads = 0;  ///< 0 picks hardware concurrency
  bool strict = false;   ///< reject non-dominant weights
};

/// Reads JSON-lines WeightSpec records and writes one line per record, in
/// input order: the report document, or {"line": n, "error": ...}.
BatchSummary run_batch(std::istream& in, std::ostream& out, const BatchOptions& options = {});

}  // namespace hermitian
