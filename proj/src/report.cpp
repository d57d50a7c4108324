#include "idealops/report.hpp"

#include <algorithm>
#include <ostream>

namespace idealops {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::finding: return "finding";
    case CheckStatus::not_instantiable: return "not-instantiable";
  }
  return "?";
}

void Report::append(const Report& other) {
  records.insert(records.end(), other.records.begin(), other.records.end());
}

int Report::count(CheckStatus s) const {
  return static_cast<int>(
      std::count_if(records.begin(), records.end(),
                    [&](const CheckRecord& r) { return r.status == s; }));
}

bool Report::all_pass() const { return count(CheckStatus::fail) == 0; }

bool Report::has_findings() const { return count(CheckStatus::finding) > 0; }

int Report::exit_status() const { return all_pass() && !has_findings() ? 0 : 2; }

namespace {

std::string esc(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\/";
    else if (c == '\n') out += "; ";
    else out += c;
  }
  return out;
}

}  // namespace

void write_report(std::ostream& os, const Report& rep, const std::string& config) {
  os << "idealops-report v1\n";
  os << "config|" << config << "\n";
  for (const auto& r : rep.records) {
    os << "check|suite=" << esc(r.suite) << "|id=" << esc(r.id)
       << "|params=" << esc(r.params) << "|expected=" << esc(r.expected)
       << "|got=" << esc(r.got) << "|status=" << to_string(r.status)
       << "|witness=" << esc(r.witness) << "|checked=" << r.checked
       << "|skipped=" << r.skipped << "\n";
  }
  os << "summary|pass=" << rep.count(CheckStatus::pass)
     << "|fail=" << rep.count(CheckStatus::fail)
     << "|findings=" << rep.count(CheckStatus::finding)
     << "|not-instantiable=" << rep.count(CheckStatus::not_instantiable) << "\n";
}

void write_human(std::ostream& os, const Report& rep, const std::string& config) {
  os << "== idealops verification (" << config << ") ==\n";
  for (const auto& r : rep.records) {
    os << "[" << to_string(r.status) << "] " << r.suite << "/" << r.id;
    if (!r.params.empty()) os << " " << r.params;
    if (r.status != CheckStatus::pass || !r.witness.empty()) {
      if (!r.expected.empty() || !r.got.empty())
        os << "\n    expected: " << r.expected << "\n    got:      " << r.got;
      if (!r.witness.empty()) os << "\n    witness:  " << r.witness;
    }
    if (r.skipped > 0) os << " (skipped " << r.skipped << ")";
    os << "\n";
  }
  os << "summary: " << rep.count(CheckStatus::pass) << " pass, "
     << rep.count(CheckStatus::fail) << " fail, "
     << rep.count(CheckStatus::finding) << " findings, "
     << rep.count(CheckStatus::not_instantiable) << " not instantiable\n";
}

}  // namespace idealops
