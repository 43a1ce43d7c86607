// Copyright 2026 The EPS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "eps/conformance/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "eps/io.hpp"

namespace eps::conformance {
namespace {

constexpr std::string_view kFamilies[] = {"BC", "SC", "EE"};

std::string_view family_title(std::string_view f) {
  if (f == "BC") return "Additional blockchain requirements (BC)";
  if (f == "SC") return "Additional sidechain requirements (SC)";
  return "Enterprise Ethereum requirements (EE)";
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

std::string ReportRow::mark_text() const {
  switch (mark) {
    case Mark::pass: return entry.status == Status::partial ? "✓ partially" : "✓";
    case Mark::fail: return "✗";
    case Mark::not_applicable: return "N/A";
  }
  return "?";
}

const ReportRow* Report::row(std::string_view id) const {
  auto it = std::find_if(rows.begin(), rows.end(), [&](const ReportRow& r) { return r.entry.id == id; });
  return it == rows.end() ? nullptr : &*it;
}

std::string Report::text() const {
  std::size_t id_width = 0;
  for (const auto& r : rows) id_width = std::max(id_width, r.entry.id.size());
  id_width += 2;

  std::ostringstream out;
  for (auto f : kFamilies) {
    std::size_t pass = 0, failed = 0, na = 0;
    out << family_title(f) << "\n";
    for (const auto& r : rows) {
      if (family(r.entry.id) != f) continue;
      // The mark column holds one multibyte glyph, so pad by hand.
      auto mark = r.mark_text();
      std::size_t cols = r.mark == Mark::not_applicable ? 3 : 1;
      if (r.mark == Mark::pass && r.entry.status == Status::partial) cols += 10;
      out << "  " << mark << std::string(13 - cols, ' ');
      out << pad(r.entry.id, id_width) << pad(std::string(to_string(r.entry.level)), 12);
      if (r.entry.status == Status::out_of_scope) {
        out << "out-of-scope: " << r.entry.rationale;
      } else {
        std::string tests;
        for (const auto& [name, ok] : r.tests) {
          if (!tests.empty()) tests += ", ";
          tests += name + (ok ? (*ok ? " ok" : " FAILED") : " not run");
        }
        out << tests;
        if (r.entry.status == Status::partial) out << " (partial: " << r.entry.rationale << ")";
      }
      out << "\n";
      (r.mark == Mark::pass ? pass : r.mark == Mark::fail ? failed : na)++;
    }
    out << "  -- " << pass << " ✓, " << failed << " ✗, " << na << " N/A\n\n";
  }
  return out.str();
}

std::string Report::json() const {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json rec;
    rec["id"] = r.entry.id;
    rec["family"] = family(r.entry.id);
    rec["level"] = to_string(r.entry.level);
    rec["status"] = to_string(r.entry.status);
    rec["mark"] = r.mark_text();
    auto tests = nlohmann::ordered_json::array();
    for (const auto& [name, ok] : r.tests) {
      nlohmann::ordered_json t;
      t["id"] = name;
      t["result"] = ok ? (*ok ? "pass" : "fail") : "not-run";
      tests.push_back(std::move(t));
    }
    rec["tests"] = std::move(tests);
    if (!r.entry.rationale.empty()) rec["rationale"] = r.entry.rationale;
    doc.push_back(std::move(rec));
  }
  return doc.dump(2) + "\n";
}

Report emit_conformance_report(const Registry& registry, const TestResults& results) {
  validate_registry(registry);
  Report report;
  for (const auto& c : catalogue_ids()) {
    auto it = std::find_if(registry.begin(), registry.end(), [&](const RequirementEntry& e) { return e.id == c.id; });
    ReportRow row;
    row.entry = *it;
    bool all_ok = true;
    for (const auto& t : row.entry.test_ids) {
      auto r = results.find(t);
      std::optional<bool> ok;
      if (r != results.end()) ok = r->second;
      all_ok = all_ok && ok.value_or(false);
      row.tests.emplace_back(t, ok);
    }
    if (row.entry.status == Status::out_of_scope) {
      row.mark = Mark::not_applicable;
    } else {
      row.mark = all_ok ? Mark::pass : Mark::fail;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

void write_report(const Report& report, const std::filesystem::path& dir) {
  write_text(dir / "report.txt", report.text());
  write_text(dir / "report.json", report.json());
}

}  // namespace eps::conformance
