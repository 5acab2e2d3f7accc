#include "zinbiel/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace zinbiel {

ReportFormat parse_report_format(std::string_view name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "markdown" || name == "md") return ReportFormat::Markdown;
  throw std::invalid_argument("unknown report format '" + std::string(name) + "' (expected json, csv or markdown)");
}

std::string emit_report(const Report& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json:
      return emit_json(report);
    case ReportFormat::Csv:
      return emit_csv(report);
    case ReportFormat::Markdown:
      return emit_markdown(report);
  }
  throw std::invalid_argument("unknown report format");
}

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string> parameter_texts(const Report& r) {
  std::vector<std::string> out;
  for (const auto& q : r.options.parameter_samples) out.push_back(q.to_string());
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string ratio(size_t k, size_t n) { return std::to_string(k) + "/" + std::to_string(n); }

}  // namespace

std::string emit_json(const Report& report) {
  ordered_json doc;
  doc["section"] = report.section;
  doc["seed"] = report.options.seed;
  doc["samples"] = report.options.samples;
  doc["parameters"] = parameter_texts(report);
  doc["pass"] = report.pass();
  doc["summary"] = {{"rows", report.rows.size()},
                    {"failed_rows", report.failed_rows()},
                    {"families", report.families.size()}};
  ordered_json rows = ordered_json::array();
  for (const auto& r : report.rows) {
    ordered_json row;
    row["entryId"] = r.id;
    row["section"] = r.section;
    row["pass"] = r.pass();
    ordered_json fields = ordered_json::object();
    for (const auto& [k, v] : r.fields) fields[k] = v;
    row["fields"] = fields;
    ordered_json checks = ordered_json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
    row["checks"] = checks;
    if (!r.notes.empty()) row["notes"] = r.notes;
    rows.push_back(std::move(row));
  }
  doc["rows"] = rows;
  ordered_json fams = ordered_json::array();
  for (const auto& f : report.families) {
    ordered_json unsep = ordered_json::array();
    for (const auto& [a, b] : f.unseparated) unsep.push_back({a, b});
    fams.push_back({{"family", f.family},
                    {"members", f.members},
                    {"pairs", f.pairs},
                    {"separated", f.separated},
                    {"pass", f.pass()},
                    {"unseparated", unsep}});
  }
  doc["fingerprints"] = fams;
  return doc.dump(2) + "\n";
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string emit_csv(const Report& report) {
  std::ostringstream out;
  out << "section,entry,pass,checks,failed,witness\n";
  for (const auto& r : report.rows) {
    std::vector<std::string> failed, witnesses;
    for (const auto& c : r.checks)
      if (!c.pass) {
        failed.push_back(c.name);
        if (!c.witness.empty()) witnesses.push_back(c.name + ": " + c.witness);
      }
    out << csv_field(r.section) << ',' << csv_field(r.id) << ',' << (r.pass() ? "pass" : "fail") << ','
        << r.checks.size() << ',' << csv_field(join(failed, ";")) << ',' << csv_field(join(witnesses, " | ")) << '\n';
  }
  return out.str();
}

namespace {

const std::map<std::string, std::string>& section_titles() {
  static const std::map<std::string, std::string> t{
      {"base", "Base algebras"},
      {"n1c", "Central extensions of N1C"},
      {"n1", "Central extensions of N1"},
      {"orbits", "Orbit recipes"},
      {"properties", "Randomized properties"}};
  return t;
}

std::string cell(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else if (c == '\n') out += ' ';
    else out += c;
  }
  return out;
}

struct Group {
  std::string label;
  std::vector<const ReportRow*> rows;
};

// Parametric instances share a group; one markdown line per group.
std::vector<Group> group_rows(const std::vector<const ReportRow*>& rows) {
  std::vector<Group> out;
  std::map<std::string, size_t> index;
  for (const ReportRow* r : rows) {
    const std::string key = r->group.empty() ? r->id : r->group;
    auto it = index.find(key);
    if (it == index.end()) {
      index[key] = out.size();
      out.push_back({key, {r}});
    } else {
      out[it->second].rows.push_back(r);
    }
  }
  return out;
}

std::string group_status(const Group& g) {
  std::vector<std::string> bad;
  for (const ReportRow* r : g.rows)
    if (!r->pass()) bad.push_back(r->id);
  if (bad.empty()) return g.rows.size() > 1 ? "pass (" + std::to_string(g.rows.size()) + " samples)" : "pass";
  return g.rows.size() > 1 ? "FAIL: " + join(bad, ", ") : "FAIL";
}

}  // namespace

std::string emit_markdown(const Report& report) {
  std::ostringstream out;
  out << "# Verification report\n\n";
  out << "- section: " << report.section << "\n";
  out << "- seed: " << report.options.seed << "\n";
  out << "- samples per recipe: " << report.options.samples << "\n";
  out << "- parameter samples: " << join(parameter_texts(report), ", ") << "\n";
  out << "- result: " << (report.pass() ? "pass" : "FAIL") << " (" << report.failed_rows() << " of "
      << report.rows.size() << " rows failing)\n";

  for (const auto& sec : report_sections()) {
    std::vector<const ReportRow*> rows;
    for (const auto& r : report.rows)
      if (r.section == sec) rows.push_back(&r);
    if (rows.empty()) continue;
    out << "\n## " << section_titles().at(sec) << "\n\n";

    // Rows with the same field names share a table.
    std::vector<std::pair<std::vector<std::string>, std::vector<const ReportRow*>>> tables;
    for (const ReportRow* r : rows) {
      std::vector<std::string> columns;
      for (const auto& [k, v] : r->fields) columns.push_back(k);
      auto it = std::find_if(tables.begin(), tables.end(), [&](const auto& t) { return t.first == columns; });
      if (it == tables.end()) tables.push_back({columns, {r}});
      else it->second.push_back(r);
    }
    for (size_t t = 0; t < tables.size(); ++t) {
      const auto& [columns, members] = tables[t];
      if (t) out << "\n";
      out << "| Entry |";
      for (const auto& c : columns) out << ' ' << cell(c) << " |";
      out << " Status |\n|---|";
      for (size_t i = 0; i < columns.size(); ++i) out << "---|";
      out << "---|\n";
      for (const auto& g : group_rows(members)) {
        out << "| " << cell(g.rows.size() > 1 ? g.label : g.rows.front()->id) << " |";
        for (size_t c = 0; c < columns.size(); ++c) {
          const std::string& value = g.rows.front()->fields[c].second;
          bool varies = false;
          for (const ReportRow* r : g.rows)
            if (r->fields[c].second != value) varies = true;
          out << ' ' << cell(varies ? "(varies)" : value) << " |";
        }
        out << ' ' << group_status(g) << " |\n";
      }
    }

    std::vector<std::string> failures;
    for (const ReportRow* r : rows)
      for (const auto& c : r->checks)
        if (!c.pass) failures.push_back("- `" + r->id + "` " + c.name + (c.witness.empty() ? "" : ": " + c.witness));
    if (!failures.empty()) {
      out << "\nFailing checks:\n\n";
      for (const auto& f : failures) out << cell(f) << "\n";
    }
    std::vector<std::string> notes;
    for (const ReportRow* r : rows)
      for (const auto& n : r->notes) notes.push_back("- `" + r->id + "`: " + n);
    if (!notes.empty()) {
      out << "\nNotes:\n\n";
      for (const auto& n : notes) out << n << "\n";
    }
  }

  if (!report.families.empty()) {
    out << "\n## Fingerprint separation\n\n| Family | Members | Pairs | Separated | Status |\n|---|---|---|---|---|\n";
    for (const auto& f : report.families)
      out << "| " << cell(f.family) << " | " << f.members.size() << " | " << f.pairs << " | "
          << ratio(f.separated, f.pairs) << " | " << (f.pass() ? "pass" : "FAIL") << " |\n";
    for (const auto& f : report.families) {
      if (f.unseparated.empty()) continue;
      out << "\nUnseparated in " << f.family << ":\n\n";
      for (const auto& [a, b] : f.unseparated) out << "- " << a << " / " << b << "\n";
    }
  }
  return out.str();
}

}  // namespace zinbiel
