#include "ramsey/bench.hpp"

#include <ostream>

namespace ramsey {

namespace {

// The fn column is quoted: DSL text never contains quotes, but it does
// contain no commas today and might tomorrow.
std::string csv_quote(const std::string& s) { return '"' + s + '"'; }

}  // namespace

void write_csv_header(std::ostream& out) { out << kBenchCsvHeader << '\n'; }

void write_csv_row(std::ostream& out, const BenchRecord& r) {
  out << csv_quote(r.fn_source) << ',' << r.n << ',' << r.k << ',' << to_string(r.strategy) << ','
      << to_string(r.outcome) << ',' << r.wall_us << ',' << r.stats.subsets << ','
      << r.stats.nodes << ',' << r.stats.branches << ',' << r.seed << '\n';
}

}  // namespace ramsey
