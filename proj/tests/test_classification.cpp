#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mmk/classification.hpp"
#include "mmk/errors.hpp"
#include "mmk/fusion.hpp"
#include "oracles.hpp"

using mmk::DynkinDiagram;

namespace {

const double golden_index =
    std::sqrt(30 - 6 * std::sqrt(5.0)) / (2 * std::sin(std::numbers::pi / 30));

std::vector<std::string> labels(const std::vector<mmk::ClassificationEntry>& entries) {
  std::vector<std::string> out;
  for (const auto& e : entries) out.push_back(e.label.to_string());
  return out;
}

const mmk::ClassificationEntry& find(const std::vector<mmk::ClassificationEntry>& entries, const std::string& label) {
  for (const auto& e : entries)
    if (e.label.to_string() == label) return e;
  FAIL("missing entry " << label);
  return entries.front();
}

}  // namespace

TEST_CASE("SU(2) extensions") {
  const auto k10 = mmk::classify_su2(10);
  CHECK(labels(k10) == std::vector<std::string>{"A11", "E6"});
  CHECK(find(k10, "E6").index == doctest::Approx(3 + std::sqrt(3.0)).epsilon(1e-12));
  CHECK(find(k10, "E6").index_symbolic == "3+sqrt(3)");

  CHECK(labels(mmk::classify_su2(5)) == std::vector<std::string>{"A6"});

  const auto k4 = mmk::classify_su2(4);
  CHECK(labels(k4) == std::vector<std::string>{"A5", "D4"});
  CHECK(find(k4, "D4").index == doctest::Approx(2.0).epsilon(1e-12));

  const auto k28 = mmk::classify_su2(28);
  CHECK(labels(k28) == std::vector<std::string>{"A29", "D16", "E8"});
  CHECK(find(k28, "E8").index == doctest::Approx(golden_index).epsilon(1e-12));

  CHECK(labels(mmk::classify_su2(16)) == std::vector<std::string>{"A17", "D10"});
  for (const auto& e : k28) CHECK(e.subnets == 0);
}

TEST_CASE("minimal model extensions") {
  const auto m5 = mmk::classify_minimal(5);
  REQUIRE(m5.size() == 2);
  CHECK(find(m5, "(A4,D4)").counts.ambichiral == 6);
  CHECK(find(m5, "(A4,A5)").counts.ambichiral == 10);

  const auto m11 = mmk::classify_minimal(11);
  CHECK(m11.size() == 2);
  CHECK(find(m11, "(A10,E6)").counts == mmk::SectorCounts{30, 60, 30, 15});

  const auto m3 = mmk::classify_minimal(3);
  REQUIRE(m3.size() == 1);
  CHECK(m3.front().label.to_string() == "(A2,A3)");
  CHECK(m3.front().counts == mmk::SectorCounts{3, 3, 3, 3});
}

TEST_CASE("type II invariants") {
  CHECK(find(mmk::classify_minimal_type_II(17), "(A16,E7)").counts == mmk::SectorCounts{56, 136, 80, 48});
  CHECK(find(mmk::classify_minimal_type_II(18), "(E7,A18)").counts == mmk::SectorCounts{63, 153, 90, 54});
  CHECK(find(mmk::classify_minimal_type_II(8), "(D5,A8)").counts == mmk::SectorCounts{20, 28, 28, 28});
  CHECK(mmk::classify_minimal_type_II(5).empty());
  for (const auto& e : mmk::classify_minimal_type_II(17)) CHECK_FALSE(e.type_I);
}

TEST_CASE("classification agrees with the closed-form tables up to m = 30") {
  for (int m = 3; m <= 30; ++m) {
    const auto entries = mmk::classify_minimal(m);
    const auto rows = oracle::type_I_rows(m);
    REQUIRE_MESSAGE(entries.size() == rows.size(), "m = " << m);
    for (const auto& row : rows) {
      const auto& e = find(entries, row.label);
      CHECK(e.type_I);
      CHECK(e.counts == mmk::SectorCounts{row.counts.ab, row.counts.full, row.counts.chiral, row.counts.ambichiral});
      CHECK(static_cast<int>(e.blocks.size()) == row.counts.ambichiral);
      CHECK(e.subnets == row.subnets);
      CHECK(mmk::subnet_count(e) == row.subnets);
    }

    const auto type_II = mmk::classify_minimal_type_II(m);
    const auto rows_II = oracle::type_II_rows(m);
    REQUIRE_MESSAGE(type_II.size() == rows_II.size(), "m = " << m);
    for (const auto& row : rows_II) {
      const auto& e = find(type_II, row.label);
      CHECK(e.counts == mmk::SectorCounts{row.counts.ab, row.counts.full, row.counts.chiral, row.counts.ambichiral});
    }
  }
}

TEST_CASE("extension indices and global indices") {
  const auto d11 = mmk::minimal_data(11);
  const auto m11 = mmk::classify_minimal(11);
  const auto& e6 = find(m11, "(A10,E6)");
  CHECK(mmk::extension_index(e6, d11) == doctest::Approx(3 + std::sqrt(3.0)).epsilon(1e-12));
  CHECK(mmk::mu_of_extension(e6, d11) ==
        doctest::Approx(mmk::mu_index(d11) / std::pow(3 + std::sqrt(3.0), 2)).epsilon(1e-12));

  const auto d29 = mmk::minimal_data(29);
  const auto m29 = mmk::classify_minimal(29);
  const auto& e8 = find(m29, "(A28,E8)");
  CHECK(mmk::extension_index(e8, d29) == doctest::Approx(19.4794).epsilon(1e-5));
  CHECK(e8.index_symbolic == "sqrt(30-6*sqrt(5))/(2*sin(pi/30))");

  const auto d5 = mmk::minimal_data(5);
  const auto m5 = mmk::classify_minimal(5);
  CHECK(mmk::mu_of_extension(find(m5, "(A4,D4)"), d5) == doctest::Approx(mmk::mu_index(d5) / 4).epsilon(1e-12));
  CHECK(mmk::mu_of_extension(find(m5, "(A4,A5)"), d5) == doctest::Approx(mmk::mu_index(d5)).epsilon(1e-12));
  CHECK(find(m5, "(A4,A5)").index_symbolic == "1");

  // theta lists the vacuum row.
  const auto& d4 = find(m5, "(A4,D4)");
  CHECK(d4.theta.size() == 2);
  CHECK(d4.theta.front() == std::pair<std::size_t, int>{0, 1});
}

TEST_CASE("simple current locality") {
  CHECK(mmk::simple_current_locality(5).phase == 1);
  CHECK(mmk::simple_current_locality(5).local);
  CHECK(mmk::simple_current_locality(4).phase == -1);
  CHECK_FALSE(mmk::simple_current_locality(4).local);
  CHECK(mmk::simple_current_locality(6).phase == 1);
  for (int m = 3; m <= 100; ++m) {
    const int expected = (m % 4 == 1 || m % 4 == 2) ? 1 : -1;
    CHECK(mmk::simple_current_locality(m).phase == expected);
    CHECK(mmk::simple_current_locality(m).local == (expected == 1));
  }
}

TEST_CASE("sector counts validate the entry") {
  auto e = find(mmk::classify_minimal(5), "(A4,D4)");
  CHECK(mmk::sector_counts(e) == mmk::SectorCounts{8, 16, 8, 6});
  e.label.second = DynkinDiagram::A(5);
  CHECK_THROWS_AS(mmk::sector_counts(e), mmk::ClassificationError);

  CHECK(mmk::sector_counts(find(mmk::classify_minimal(29), "(A28,E8)")) == mmk::SectorCounts{112, 448, 112, 28});
  CHECK(mmk::sector_counts(find(mmk::classify_minimal_type_II(18), "(E7,A18)")) ==
        mmk::SectorCounts{63, 153, 90, 54});
}

TEST_CASE("subnet counts") {
  CHECK(mmk::subnet_count(find(mmk::classify_minimal(5), "(A4,A5)")) == 1);
  CHECK(mmk::subnet_count(find(mmk::classify_minimal(11), "(A10,E6)")) == 2);
  CHECK(mmk::subnet_count(find(mmk::classify_minimal(30), "(E8,A30)")) == 3);
  CHECK_THROWS_AS(mmk::subnet_count(mmk::classify_su2(4).front()), mmk::DomainError);
  CHECK_THROWS_AS(mmk::subnet_count(mmk::classify_minimal_type_II(8).front()), mmk::DomainError);
}
