#include <doctest.h>

#include "nugatory/knot_table.hpp"

using namespace nugatory;

namespace {

const KnotTable& bundled() {
  static const KnotTable t = ingest_table(NUGATORY_TEST_DATA "/knots.csv");
  return t;
}

KnotRecord row(const std::string& name) {
  const auto* k = bundled().find(name);
  REQUIRE(k);
  return *k;
}

KnotRecord bare(std::string name, long long det, int genus, bool fibered, int bridge, bool thin) {
  KnotRecord k;
  k.name = std::move(name);
  k.determinant = det;
  k.genus = genus;
  k.fibered = fibered;
  k.bridge_index = bridge;
  k.thin = thin;
  return k;
}

}  // namespace

TEST_CASE("verdicts on table knots") {
  auto v = verdict(row("9_35"));
  CHECK(v.status == Status::Holds);
  REQUIRE(v.reason);
  CHECK(*v.reason == Reason::GenusOneHomology);

  v = verdict(row("10_65"));
  CHECK(v.status == Status::Open);
  CHECK_FALSE(v.reason);
  CHECK(v.trace.size() == 4);

  v = verdict(row("9_46"));
  REQUIRE(v.reason);
  CHECK(*v.reason == Reason::LSpaceSquareFree);

  CHECK(*verdict(row("3_1")).reason == Reason::TwoBridge);
  CHECK(*verdict(row("8_19")).reason == Reason::Fibered);
  CHECK(*verdict(row("10_128")).reason == Reason::LSpaceSquareFree);
  CHECK(*verdict(row("9_41")).reason == Reason::LSpaceSquareFree);
}

TEST_CASE("trace records every obstruction in order") {
  const auto v = verdict(row("9_46"));
  REQUIRE(v.trace.size() == 4);
  CHECK(v.trace[0].obstruction == "two_bridge");
  CHECK(v.trace[1].obstruction == "fibered");
  CHECK(v.trace[2].obstruction == "lspace_square_free");
  CHECK(v.trace[3].obstruction == "genus_one");
  CHECK(v.trace[2].fired);
  CHECK(v.trace[3].fired);
}

TEST_CASE("synthetic records") {
  auto k = bare("K", 45, 2, false, 3, true);
  k.homology = AbelianGroup::parse("3|15");
  CHECK(*verdict(k).reason == Reason::LSpaceSquareFree);

  k.thin = false;
  CHECK(verdict(k).status == Status::Open);
  k.lspace_cover = LSpaceCover::Yes;
  CHECK(*verdict(k).reason == Reason::LSpaceSquareFree);

  auto g1 = bare("G", 21, 1, false, 3, false);
  g1.homology = AbelianGroup::parse("21");
  g1.algebraically_slice = TriState::Unknown;
  CHECK(verdict(g1).status == Status::Open);
  g1.algebraically_slice = TriState::No;
  CHECK(*verdict(g1).reason == Reason::GenusOneNotAlgSlice);
  g1.algebraically_slice = TriState::Yes;
  CHECK(verdict(g1).status == Status::Open);

  auto nohom = bare("N", 9, 2, false, 3, false);
  CHECK_THROWS_AS(verdict(nohom), RecordError);
}

TEST_CASE("record validation") {
  auto k = row("9_35");
  k.determinant = 28;
  CHECK_THROWS_AS(validate(k), RecordError);
  k = row("9_35");
  k.homology = AbelianGroup::parse("27");
  CHECK_THROWS_WITH_AS(validate(k), doctest::Contains("9_35"), RecordError);
  k = row("9_35");
  k.determinant = 25;
  k.homology.reset();
  CHECK_THROWS_WITH_AS(validate(k), doctest::Contains("diagram determinant"), RecordError);
  auto t = bare("T", 3, 1, true, 2, true);
  t.lspace_cover = LSpaceCover::No;
  CHECK_THROWS_AS(validate(t), RecordError);
  CHECK_NOTHROW(validate(bare("T", 3, 1, true, 2, true)));
}

TEST_CASE("names") {
  CHECK(knot_name_less("9_35", "10_1"));
  CHECK(knot_name_less("10_9", "10_10"));
  CHECK_FALSE(knot_name_less("10_10", "10_9"));
  CHECK(knot_name_less("10_165", "custom"));
  CHECK(crossing_number(row("10_128")) == 10);
}
