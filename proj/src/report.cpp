#include "pfn/report.hpp"

#include <stdexcept>

namespace pfn {

void ReportRow::add(std::string key, std::string value) {
  for (const auto& [k, v] : cells_)
    if (k == key) throw std::logic_error("ReportRow: duplicate key " + key);
  cells_.emplace_back(std::move(key), std::move(value));
}

void ReportRow::add(std::string key, const mpz_class& value) {
  add(std::move(key), value.get_str());
}

void ReportRow::add(std::string key, std::uint64_t value) {
  add(std::move(key), std::to_string(value));
}

void ReportRow::add(std::string key, const BigReal& value, int digits) {
  add(std::move(key), value.str(digits));
}

void write_csv(std::ostream& os, const std::vector<ReportRow>& rows) {
  if (rows.empty()) return;
  const auto& head = rows.front().cells();
  for (std::size_t i = 0; i < head.size(); ++i)
    os << head[i].first << (i + 1 < head.size() ? "," : "\n");
  for (const ReportRow& row : rows) {
    const auto& cells = row.cells();
    if (cells.size() != head.size())
      throw std::logic_error("write_csv: ragged rows");
    for (std::size_t i = 0; i < cells.size(); ++i)
      os << cells[i].second << (i + 1 < cells.size() ? "," : "\n");
  }
}

}  // namespace pfn
