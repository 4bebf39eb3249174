#include "nugatory/obstructions.hpp"

#include "nugatory/branched_cover.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace nugatory {

namespace {

std::optional<std::pair<int, int>> rolfsen_index(const std::string& name) {
  const auto us = name.find('_');
  if (us == std::string::npos || us == 0 || us + 1 == name.size()) return std::nullopt;
  int a = 0, b = 0;
  const char* s = name.data();
  auto r1 = std::from_chars(s, s + us, a);
  auto r2 = std::from_chars(s + us + 1, s + name.size(), b);
  if (r1.ec != std::errc{} || r1.ptr != s + us || r2.ec != std::errc{} || r2.ptr != s + name.size()) return std::nullopt;
  return std::make_pair(a, b);
}

bool lspace_resolved(const KnotRecord& k) {
  switch (k.lspace_cover) {
    case LSpaceCover::Yes:
      return true;
    case LSpaceCover::No:
      return false;
    case LSpaceCover::Auto:
      return k.thin;
  }
  return false;
}

}  // namespace

void validate(const KnotRecord& k) {
  if (k.name.empty()) throw RecordError("<unnamed>", "empty knot name");
  if (k.determinant < 1 || k.determinant % 2 == 0) {
    throw RecordError(k.name, "determinant " + to_string(k.determinant) + " is not a positive odd integer");
  }
  if (k.genus < 0) throw RecordError(k.name, "negative genus");
  if (k.bridge_index < 1) throw RecordError(k.name, "bridge index below 1");
  if (k.thin && k.lspace_cover == LSpaceCover::No) {
    throw RecordError(k.name, "thin knots have L-space branched double covers; lspace_cover=N contradicts thin=Y");
  }
  if (k.homology && k.homology->order() != k.determinant) {
    throw RecordError(k.name, "homology " + k.homology->to_string() + " has order " + to_string(k.homology->order()) +
                                  ", determinant is " + to_string(k.determinant));
  }
  if (k.pd) {
    const auto g = goeritz_matrix(*k.pd);
    Integer det;
    try {
      det = knot_determinant(g);
    } catch (const NotAKnotError& e) {
      throw RecordError(k.name, e.what());
    }
    if (det != k.determinant) {
      throw RecordError(k.name, "diagram determinant " + to_string(det) + " differs from recorded " +
                                    to_string(k.determinant));
    }
    if (k.homology) {
      const auto computed = branched_homology(g);
      if (computed != *k.homology) {
        throw RecordError(k.name, "diagram gives H1 = " + computed.to_string() + ", recorded " + k.homology->to_string());
      }
    }
  }
}

AbelianGroup resolve_homology(const KnotRecord& k) {
  if (k.homology) return *k.homology;
  if (k.pd) return branched_homology(goeritz_matrix(*k.pd));
  throw RecordError(k.name, "no homology and no diagram to compute it from");
}

int crossing_number(const KnotRecord& k) {
  if (auto idx = rolfsen_index(k.name)) return idx->first;
  if (k.pd) return static_cast<int>(k.pd->crossing_count());
  return 0;
}

bool knot_name_less(const std::string& a, const std::string& b) {
  const auto ia = rolfsen_index(a);
  const auto ib = rolfsen_index(b);
  if (ia && ib) return *ia < *ib;
  if (ia || ib) return ia.has_value();
  return a < b;
}

std::string to_string(Status s) { return s == Status::Holds ? "holds" : "open"; }

std::string to_string(Reason r) {
  switch (r) {
    case Reason::TwoBridge:
      return "two_bridge";
    case Reason::Fibered:
      return "fibered";
    case Reason::GenusOneHomology:
      return "genus_one_homology";
    case Reason::GenusOneNotAlgSlice:
      return "genus_one_not_alg_slice";
    case Reason::LSpaceSquareFree:
      return "lspace_square_free";
  }
  return "?";
}

Verdict verdict(const KnotRecord& k) {
  const AbelianGroup h = resolve_homology(k);
  Verdict v;
  auto record = [&](const std::string& name, std::optional<Reason> fired, std::string detail) {
    v.trace.push_back({name, fired.has_value(), std::move(detail)});
    if (fired && !v.reason) {
      v.reason = fired;
      v.status = Status::Holds;
    }
  };

  record("two_bridge", k.bridge_index <= 2 ? std::optional(Reason::TwoBridge) : std::nullopt,
         "bridge index " + std::to_string(k.bridge_index));

  record("fibered", k.fibered ? std::optional(Reason::Fibered) : std::nullopt, k.fibered ? "fibered" : "not fibered");

  {
    const bool lspace = lspace_resolved(k);
    const auto sf = square_free_summands(h);
    std::string detail = "H1 = " + h.to_string();
    detail += lspace ? (k.lspace_cover == LSpaceCover::Yes ? "; L-space cover (recorded)" : "; L-space cover (thin)")
                     : "; L-space cover not established";
    if (sf.witness) {
      detail += "; summand Z/" + to_string(sf.witness->factor) + " divisible by " + to_string(sf.witness->prime) + "^2";
    } else {
      detail += "; summands square-free";
    }
    record("lspace_square_free", lspace && sf.all_square_free ? std::optional(Reason::LSpaceSquareFree) : std::nullopt,
           detail);
  }

  {
    std::optional<Reason> fired;
    std::string detail = "genus " + std::to_string(k.genus);
    if (k.genus == 1) {
      if (!h.is_cyclic()) {
        fired = Reason::GenusOneHomology;
        detail += "; H1 = " + h.to_string() + " is not cyclic";
      } else {
        detail += "; H1 cyclic";
      }
      switch (k.algebraically_slice) {
        case TriState::No:
          if (!fired) fired = Reason::GenusOneNotAlgSlice;
          detail += "; not algebraically slice";
          break;
        case TriState::Yes:
          detail += "; algebraically slice";
          break;
        case TriState::Unknown:
          detail += "; algebraic sliceness unknown (not used)";
          break;
      }
    }
    record("genus_one", fired, detail);
  }
  return v;
}

ClassificationReport classify_table(const std::vector<KnotRecord>& records) {
  ClassificationReport out;
  for (const auto& k : records) {
    try {
      auto v = verdict(k);
      if (v.status == Status::Open) out.open.push_back(k.name);
      out.verdicts.emplace_back(k.name, std::move(v));
    } catch (const std::exception& e) {
      out.errors.emplace_back(k.name, e.what());
    }
  }
  auto by_name = [](const auto& x, const auto& y) { return knot_name_less(x.first, y.first); };
  std::sort(out.verdicts.begin(), out.verdicts.end(), by_name);
  std::sort(out.errors.begin(), out.errors.end(), by_name);
  std::sort(out.open.begin(), out.open.end(), knot_name_less);
  return out;
}

}  // namespace nugatory
