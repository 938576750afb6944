#pragma once

/*
 * Machine- and human-readable run reports.  Items carry a stable claim
 * label; reports are deterministic for fixed flags and seed (items are
 * sorted by label, wall-clock timing never enters the machine form).
 */

#include <cstdint>
#include <string>
#include <vector>

namespace fadlab {

enum class ItemStatus { Verified, Failed, Skipped };

std::string item_status_str(ItemStatus s);

struct ReportItem {
  std::string label;
  ItemStatus status = ItemStatus::Failed;
  std::string detail;
};

struct RunReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<ReportItem> items;

  void add(const std::string& label, bool verified, const std::string& detail = "");
  void skip(const std::string& label, const std::string& detail = "");
  void param(const std::string& key, const std::string& value);
  void sort_items();

  std::size_t verified_count() const;
  std::size_t failed_count() const;
  std::size_t skipped_count() const;
  bool ok() const { return failed_count() == 0; }

  std::string json() const;  // byte-stable for fixed inputs
  std::string text() const;
};

std::string reports_json(const std::vector<RunReport>& reports);

}  // namespace fadlab
