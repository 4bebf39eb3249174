#pragma once

#include "nugatory/obstructions.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nugatory {

/// Header of the knot table CSV. `pd` fields contain commas and are quoted.
inline constexpr const char* kKnotTableHeader =
    "name,pd,determinant,genus,fibered,bridge_index,thin,lspace_cover,algebraically_slice,h1";

class TableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct KnotTable {
  std::vector<KnotRecord> records;
  std::string source_path;
  std::vector<std::string> provenance;  // leading '#' comment lines, without '#'

  const KnotRecord* find(const std::string& name) const;
};

/// Reads and validates a table; errors carry line and column or the knot name.
KnotTable ingest_table(const std::filesystem::path& path);
KnotTable read_table(std::istream& in, const std::string& source);

/// Writes the table back in the same format (provenance first).
void write_table(std::ostream& out, const KnotTable& t);

/// One name per line; blank lines and '#' comments ignored.
std::vector<std::string> read_manifest(const std::filesystem::path& path);

struct ReportOptions {
  int max_crossings = 10;
  /// Names that must be present (after the crossing filter); a gap is an error.
  std::optional<std::vector<std::string>> required;
};

struct TablesReport {
  std::string text;  // Markdown
  std::vector<std::string> open;
  ClassificationReport classification;
};

/// Classifies every row with at most `max_crossings` crossings and renders
/// facsimiles of the non-fibered bridge >= 3 tables (nine or fewer, and ten
/// crossings), the open list, and a tally of reasons.
TablesReport reproduce_tables(const KnotTable& t, const ReportOptions& options = {});

}  // namespace nugatory
