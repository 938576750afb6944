#include "fadlab/report.hpp"

#include <algorithm>

#include "json.hpp"

namespace fadlab {

std::string item_status_str(ItemStatus s) {
  switch (s) {
    case ItemStatus::Verified: return "verified";
    case ItemStatus::Failed: return "failed";
    case ItemStatus::Skipped: return "skipped";
  }
  return "?";
}

void RunReport::add(const std::string& label, bool verified, const std::string& detail) {
  items.push_back({label, verified ? ItemStatus::Verified : ItemStatus::Failed, detail});
}

void RunReport::skip(const std::string& label, const std::string& detail) {
  items.push_back({label, ItemStatus::Skipped, detail});
}

void RunReport::param(const std::string& key, const std::string& value) {
  parameters.emplace_back(key, value);
}

void RunReport::sort_items() {
  std::stable_sort(items.begin(), items.end(),
                   [](const ReportItem& a, const ReportItem& b) { return a.label < b.label; });
}

std::size_t RunReport::verified_count() const {
  return static_cast<std::size_t>(
      std::count_if(items.begin(), items.end(),
                    [](const ReportItem& i) { return i.status == ItemStatus::Verified; }));
}

std::size_t RunReport::failed_count() const {
  return static_cast<std::size_t>(
      std::count_if(items.begin(), items.end(),
                    [](const ReportItem& i) { return i.status == ItemStatus::Failed; }));
}

std::size_t RunReport::skipped_count() const {
  return static_cast<std::size_t>(
      std::count_if(items.begin(), items.end(),
                    [](const ReportItem& i) { return i.status == ItemStatus::Skipped; }));
}

namespace {

nlohmann::ordered_json report_to_json(const RunReport& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["seed"] = report.seed;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.parameters) params[key] = value;
  j["parameters"] = std::move(params);
  nlohmann::ordered_json items = nlohmann::ordered_json::array();
  for (const ReportItem& item : report.items) {
    nlohmann::ordered_json entry;
    entry["label"] = item.label;
    entry["status"] = item_status_str(item.status);
    if (!item.detail.empty()) entry["detail"] = item.detail;
    items.push_back(std::move(entry));
  }
  j["items"] = std::move(items);
  j["counts"] = {{"verified", report.verified_count()},
                 {"failed", report.failed_count()},
                 {"skipped", report.skipped_count()}};
  j["ok"] = report.ok();
  return j;
}

}  // namespace

std::string RunReport::json() const { return report_to_json(*this).dump(2) + "\n"; }

std::string RunReport::text() const {
  std::string out = "== " + suite + " (seed " + std::to_string(seed) + ")\n";
  for (const ReportItem& item : items) {
    std::string mark = item.status == ItemStatus::Verified
                           ? "ok "
                           : (item.status == ItemStatus::Failed ? "FAIL" : "skip");
    out += "[" + mark + "] " + item.label;
    if (!item.detail.empty()) out += " -- " + item.detail;
    out += '\n';
  }
  out += std::to_string(verified_count()) + " verified, " + std::to_string(failed_count()) +
         " failed, " + std::to_string(skipped_count()) + " skipped\n";
  return out;
}

std::string reports_json(const std::vector<RunReport>& reports) {
  nlohmann::ordered_json all = nlohmann::ordered_json::array();
  for (const RunReport& report : reports) all.push_back(report_to_json(report));
  return all.dump(2) + "\n";
}

}  // namespace fadlab
