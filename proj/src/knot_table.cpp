#include "nugatory/knot_table.hpp"

#include "nugatory/branched_cover.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace nugatory {

namespace {

enum Column { kName, kPd, kDeterminant, kGenus, kFibered, kBridge, kThin, kLSpace, kSlice, kH1, kColumns };

constexpr const char* kColumnNames[kColumns] = {"name", "pd", "determinant", "genus", "fibered",
                                                 "bridge_index", "thin", "lspace_cover", "algebraically_slice", "h1"};

struct Located : TableError {
  Located(const std::string& source, std::size_t line, int column, const std::string& what)
      : TableError(source + ":" + std::to_string(line) + (column >= 0 ? std::string(": column ") + kColumnNames[column] : "") +
                   ": " + what) {}
};

// RFC 4180 fields on a single line.
std::vector<std::string> split_csv(const std::string& line, const std::string& source, std::size_t lineno) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur.push_back(c);
      }
    } else if (c == '"') {
      if (!cur.empty() || was_quoted) throw Located(source, lineno, -1, "stray quote in field " + std::to_string(out.size() + 1));
      quoted = was_quoted = true;
    } else if (c == ',') {
      out.push_back(std::move(cur));
      cur.clear();
      was_quoted = false;
    } else {
      if (was_quoted) throw Located(source, lineno, -1, "text after closing quote in field " + std::to_string(out.size() + 1));
      cur.push_back(c);
    }
  }
  if (quoted) throw Located(source, lineno, -1, "unterminated quote");
  out.push_back(std::move(cur));
  return out;
}

std::string quote(const std::string& field) {
  if (field.find_first_of(",\"") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  return out + "\"";
}

bool parse_flag(const std::string& v, const std::string& source, std::size_t line, Column col) {
  if (v == "Y") return true;
  if (v == "N") return false;
  throw Located(source, line, col, "expected Y or N, got '" + v + "'");
}

int parse_small(const std::string& v, const std::string& source, std::size_t line, Column col) {
  try {
    const Integer x = parse_integer(v);
    if (x < -1'000'000'000 || x > 1'000'000'000) throw std::invalid_argument("out of range");
    return static_cast<int>(x.to_int64());
  } catch (const std::exception&) {
    throw Located(source, line, col, "expected an integer, got '" + v + "'");
  }
}

char flag(bool b) { return b ? 'Y' : 'N'; }

std::string tri(TriState t) {
  switch (t) {
    case TriState::Yes:
      return "Y";
    case TriState::No:
      return "N";
    case TriState::Unknown:
      return "?";
  }
  return "?";
}

std::string lspace(LSpaceCover c) {
  switch (c) {
    case LSpaceCover::Yes:
      return "Y";
    case LSpaceCover::No:
      return "N";
    case LSpaceCover::Auto:
      return "?";
  }
  return "?";
}

bool nonfibered_bridge3(const KnotRecord& k) { return !k.fibered && k.bridge_index >= 3; }

}  // namespace

const KnotRecord* KnotTable::find(const std::string& name) const {
  for (const auto& r : records) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

KnotTable read_table(std::istream& in, const std::string& source) {
  KnotTable t;
  t.source_path = source;
  std::string line;
  std::size_t lineno = 0;
  bool header_seen = false;
  std::set<std::string> names;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!header_seen && lineno == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (!line.empty() && line[0] == '#') {
      if (!header_seen) t.provenance.push_back(line.substr(1));
      continue;
    }
    if (!header_seen) {
      if (line != kKnotTableHeader) throw Located(source, lineno, -1, "expected header '" + std::string(kKnotTableHeader) + "'");
      header_seen = true;
      continue;
    }
    if (line.empty()) continue;

    const auto f = split_csv(line, source, lineno);
    if (f.size() != kColumns) {
      throw Located(source, lineno, -1, "expected " + std::to_string(kColumns) + " fields, got " + std::to_string(f.size()));
    }
    KnotRecord k;
    k.name = f[kName];
    if (k.name.empty()) throw Located(source, lineno, kName, "empty name");
    if (!names.insert(k.name).second) throw Located(source, lineno, kName, "duplicate knot " + k.name);
    if (!f[kPd].empty()) {
      try {
        k.pd = parse_pd(f[kPd]);
      } catch (const DiagramError& e) {
        throw Located(source, lineno, kPd, k.name + ": " + e.what());
      }
    }
    try {
      k.determinant = parse_integer(f[kDeterminant]);
    } catch (const std::exception&) {
      throw Located(source, lineno, kDeterminant, "expected an integer, got '" + f[kDeterminant] + "'");
    }
    k.genus = parse_small(f[kGenus], source, lineno, kGenus);
    k.fibered = parse_flag(f[kFibered], source, lineno, kFibered);
    k.bridge_index = parse_small(f[kBridge], source, lineno, kBridge);
    k.thin = parse_flag(f[kThin], source, lineno, kThin);
    const auto& ls = f[kLSpace];
    if (ls == "Y") k.lspace_cover = LSpaceCover::Yes;
    else if (ls == "N") k.lspace_cover = LSpaceCover::No;
    else if (ls == "?") k.lspace_cover = LSpaceCover::Auto;
    else throw Located(source, lineno, kLSpace, "expected Y, N or ?, got '" + ls + "'");
    const auto& sl = f[kSlice];
    if (sl == "Y") k.algebraically_slice = TriState::Yes;
    else if (sl == "N") k.algebraically_slice = TriState::No;
    else if (sl == "?") k.algebraically_slice = TriState::Unknown;
    else throw Located(source, lineno, kSlice, "expected Y, N or ?, got '" + sl + "'");
    if (!f[kH1].empty()) {
      try {
        k.homology = AbelianGroup::parse(f[kH1]);
      } catch (const std::exception& e) {
        throw Located(source, lineno, kH1, e.what());
      }
    }
    try {
      validate(k);
    } catch (const RecordError& e) {
      throw Located(source, lineno, -1, e.what());
    }
    t.records.push_back(std::move(k));
  }
  if (!header_seen) throw TableError(source + ": missing header");
  return t;
}

KnotTable ingest_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw TableError("cannot open knot table " + path.string());
  return read_table(in, path.string());
}

void write_table(std::ostream& out, const KnotTable& t) {
  for (const auto& p : t.provenance) out << '#' << p << '\n';
  out << kKnotTableHeader << '\n';
  for (const auto& k : t.records) {
    out << quote(k.name) << ',' << (k.pd ? quote(k.pd->to_string()) : "") << ',' << k.determinant << ',' << k.genus << ','
        << flag(k.fibered) << ',' << k.bridge_index << ',' << flag(k.thin) << ',' << lspace(k.lspace_cover) << ','
        << tri(k.algebraically_slice) << ',' << (k.homology ? k.homology->to_pipe_string() : "") << '\n';
  }
}

std::vector<std::string> read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw TableError("cannot open manifest " + path.string());
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    out.push_back(line);
  }
  return out;
}

TablesReport reproduce_tables(const KnotTable& t, const ReportOptions& options) {
  std::vector<KnotRecord> rows;
  for (const auto& k : t.records) {
    if (crossing_number(k) <= options.max_crossings) rows.push_back(k);
  }
  if (options.required) {
    std::vector<std::string> missing;
    for (const auto& name : *options.required) {
      const bool wanted = [&] {
        KnotRecord probe;
        probe.name = name;
        return crossing_number(probe) <= options.max_crossings;
      }();
      if (!wanted) continue;
      if (std::none_of(rows.begin(), rows.end(), [&](const KnotRecord& k) { return k.name == name; })) missing.push_back(name);
    }
    if (!missing.empty()) {
      std::string msg = "knot table is missing required rows:";
      for (const auto& m : missing) msg += " " + m;
      throw TableError(msg);
    }
  }
  std::sort(rows.begin(), rows.end(), [](const KnotRecord& a, const KnotRecord& b) { return knot_name_less(a.name, b.name); });

  TablesReport report;
  report.classification = classify_table(rows);
  report.open = report.classification.open;
  std::map<std::string, const Verdict*> verdict_of;
  for (const auto& [name, v] : report.classification.verdicts) verdict_of[name] = &v;

  auto verdict_cell = [&](const std::string& name) -> std::string {
    const auto it = verdict_of.find(name);
    if (it == verdict_of.end()) return "error";
    const Verdict& v = *it->second;
    return v.reason ? to_string(*v.reason) : "**open**";
  };
  auto h1_cell = [&](const KnotRecord& k) -> std::string {
    if (is_square_free(k.determinant)) return "";
    try {
      return resolve_homology(k).to_string();
    } catch (const std::exception&) {
      return "?";
    }
  };

  std::ostringstream os;
  os << "# Cosmetic crossing obstructions, knots with at most " << options.max_crossings << " crossings\n\n";
  os << "Rows: " << rows.size() << "\n\n";

  os << "## Non-fibered knots with bridge index at least 3, nine or fewer crossings\n\n";
  os << "| Knot | Determinant | Genus | H1 | Verdict |\n";
  os << "|---|---|---|---|---|\n";
  for (const auto& k : rows) {
    if (crossing_number(k) > 9 || !nonfibered_bridge3(k)) continue;
    os << "| " << k.name << " | " << k.determinant << " | " << k.genus << " | " << h1_cell(k) << " | "
       << verdict_cell(k.name) << " |\n";
  }
  os << '\n';

  if (options.max_crossings >= 10) {
    os << "## Ten-crossing non-fibered knots with bridge index at least 3\n\n";
    os << "| Knot | Determinant | H1 | Verdict |\n";
    os << "|---|---|---|---|\n";
    for (const auto& k : rows) {
      if (crossing_number(k) != 10 || !nonfibered_bridge3(k)) continue;
      const bool open = std::find(report.open.begin(), report.open.end(), k.name) != report.open.end();
      const std::string name = open ? "**" + k.name + "**" : k.name;
      os << "| " << name << " | " << k.determinant << " | " << h1_cell(k) << " | " << verdict_cell(k.name) << " |\n";
    }
    os << '\n';
  }

  os << "## Verdicts by reason\n\n";
  os << "| Reason | Knots |\n|---|---|\n";
  std::map<std::string, int> tally;
  for (const auto& [name, v] : report.classification.verdicts) tally[v.reason ? to_string(*v.reason) : "open"]++;
  for (const auto& [reason, n] : tally) os << "| " << reason << " | " << n << " |\n";
  os << '\n';

  if (!report.classification.errors.empty()) {
    os << "## Errors\n\n";
    for (const auto& [name, what] : report.classification.errors) os << "- " << name << ": " << what << '\n';
    os << '\n';
  }

  os << "## Open\n\n";
  os << "open list:";
  if (report.open.empty()) os << " none";
  for (std::size_t i = 0; i < report.open.size(); ++i) os << (i ? ", " : " ") << report.open[i];
  os << '\n';

  report.text = os.str();
  return report;
}

}  // namespace nugatory
