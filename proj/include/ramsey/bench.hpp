#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "ramsey/evaluator.hpp"

namespace ramsey {

// One timed evaluation, serialized as CSV in this exact column order.
struct BenchRecord {
  std::string fn_source;
  std::size_t n = 0;
  std::uint64_t k = 0;
  StrategyKind strategy = StrategyKind::EnumerateSmall;
  Outcome outcome = Outcome::NoClique;
  std::uint64_t wall_us = 0;
  SearchStats stats;
  std::uint64_t seed = 0;
};

inline constexpr const char* kBenchCsvHeader =
    "fn,n,k,strategy,outcome,wall_us,subsets,nodes,branches,seed";

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const BenchRecord& r);

}  // namespace ramsey
