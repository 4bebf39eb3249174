#pragma once

#include "nugatory/abelian_group.hpp"
#include "nugatory/diagram.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nugatory {

enum class TriState { Yes, No, Unknown };

/// L-space status of the branched double cover. Auto defers to `thin`.
enum class LSpaceCover { Yes, No, Auto };

/// One knot-table row. Genus, fiberedness, bridge index, thinness and
/// sliceness are ingested facts, not computed here.
struct KnotRecord {
  std::string name;
  std::optional<PlanarDiagram> pd;
  Integer determinant = 1;
  int genus = 0;
  bool fibered = false;
  int bridge_index = 1;
  bool thin = false;
  LSpaceCover lspace_cover = LSpaceCover::Auto;
  TriState algebraically_slice = TriState::Unknown;
  std::optional<AbelianGroup> homology;

  friend bool operator==(const KnotRecord&, const KnotRecord&) = default;
};

class RecordError : public std::invalid_argument {
 public:
  RecordError(const std::string& knot, const std::string& what)
      : std::invalid_argument(knot + ": " + what), knot_(knot) {}
  const std::string& knot() const { return knot_; }

 private:
  std::string knot_;
};

/// Checks parity, ranges, and agreement of pd with determinant and homology.
/// Throws RecordError.
void validate(const KnotRecord& k);

/// The recorded homology, or the one computed from the diagram. Throws
/// RecordError when neither is available.
AbelianGroup resolve_homology(const KnotRecord& k);

/// Crossing number taken from a Rolfsen-style name ("10_65" -> 10), falling
/// back to the diagram's crossing count; 0 when neither is known.
int crossing_number(const KnotRecord& k);

/// Orders "9_46" before "10_1"; other names sort after, lexicographically.
bool knot_name_less(const std::string& a, const std::string& b);

enum class Status { Holds, Open };

enum class Reason { TwoBridge, Fibered, GenusOneHomology, GenusOneNotAlgSlice, LSpaceSquareFree };

std::string to_string(Status s);
std::string to_string(Reason r);

struct TraceEntry {
  std::string obstruction;
  bool fired = false;
  std::string detail;
};

struct Verdict {
  Status status = Status::Open;
  std::optional<Reason> reason;  // set iff status == Holds
  std::vector<TraceEntry> trace;  // every obstruction, in evaluation order
};

/// Runs the known obstructions to cosmetic crossing changes in order:
/// two-bridge, fibered, L-space cover with square-free summands, genus one.
/// The first that fires is the reason; all are recorded in the trace.
Verdict verdict(const KnotRecord& k);

struct ClassificationReport {
  std::vector<std::pair<std::string, Verdict>> verdicts;  // sorted by name
  std::vector<std::string> open;                          // sorted by name
  std::vector<std::pair<std::string, std::string>> errors;
};

ClassificationReport classify_table(const std::vector<KnotRecord>& records);

}  // namespace nugatory
