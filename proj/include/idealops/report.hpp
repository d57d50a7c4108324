// Line-oriented structured verification report: a versioned header plus
// one record per check, deterministic byte-for-byte for a fixed config.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace idealops {

enum class CheckStatus {
  pass,
  fail,
  finding,          // documented deviation from the source text, confirmed
  not_instantiable  // no parameter tuple exists in this window
};

std::string to_string(CheckStatus s);

struct CheckRecord {
  std::string suite;     // oracle | axioms | tables | act | enumeration | ...
  std::string id;        // stable check identifier, e.g. "M3.written.2"
  std::string params;
  std::string expected;
  std::string got;
  CheckStatus status = CheckStatus::pass;
  std::string witness;
  int checked = 0;
  int skipped = 0;
};

struct Report {
  std::vector<CheckRecord> records;

  void add(CheckRecord rec) { records.push_back(std::move(rec)); }
  void append(const Report& other);
  int count(CheckStatus s) const;
  bool all_pass() const;      // no fail records
  bool has_findings() const;  // finding records present
  // 0: everything passed; 2: findings or failures present
  int exit_status() const;
};

void write_report(std::ostream& os, const Report& rep, const std::string& config);
void write_human(std::ostream& os, const Report& rep, const std::string& config);

}  // namespace idealops
