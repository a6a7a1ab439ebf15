#ifndef PFN_REPORT_HPP
#define PFN_REPORT_HPP

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "pfn/bigreal.hpp"

namespace pfn {

// One CSV row: ordered key/value pairs, values already rendered as decimal
// strings. Keys must be unique within a row and stable across rows.
class ReportRow {
 public:
  void add(std::string key, std::string value);
  void add(std::string key, const mpz_class& value);
  void add(std::string key, std::uint64_t value);
  void add(std::string key, const BigReal& value, int digits);

  const std::vector<std::pair<std::string, std::string>>& cells() const {
    return cells_;
  }

 private:
  std::vector<std::pair<std::string, std::string>> cells_;
};

// Header from the first row's keys, then one line per row. Comma separated,
// LF endings, no quoting (values never contain commas).
void write_csv(std::ostream& os, const std::vector<ReportRow>& rows);

}  // namespace pfn

#endif  // PFN_REPORT_HPP
