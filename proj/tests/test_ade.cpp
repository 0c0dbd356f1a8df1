#include <doctest.h>

#include <algorithm>
#include <map>

#include "mmk/ade.hpp"
#include "mmk/errors.hpp"
#include "oracles.hpp"

using mmk::DynkinDiagram;

namespace {

std::vector<std::string> names(const std::vector<DynkinDiagram>& ds) {
  std::vector<std::string> out;
  for (const auto& d : ds) out.push_back(d.name());
  return out;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("Coxeter numbers and exponents") {
  CHECK(DynkinDiagram::A(5).coxeter() == 6);
  CHECK(DynkinDiagram::D(7).coxeter() == 12);
  CHECK(DynkinDiagram::E(6).coxeter() == 12);
  CHECK(DynkinDiagram::E(7).coxeter() == 18);
  CHECK(DynkinDiagram::E(8).coxeter() == 30);

  CHECK(DynkinDiagram::E(6).exponents() == std::vector<int>{1, 4, 5, 7, 8, 11});
  CHECK(DynkinDiagram::E(7).exponents() == std::vector<int>{1, 5, 7, 9, 11, 13, 17});
  CHECK(DynkinDiagram::E(8).exponents() == std::vector<int>{1, 7, 11, 13, 17, 19, 23, 29});
  CHECK(DynkinDiagram::D(4).exponents() == std::vector<int>{1, 3, 3, 5});
  CHECK(DynkinDiagram::D(5).exponents() == std::vector<int>{1, 3, 4, 5, 7});
  CHECK(DynkinDiagram::A(3).exponents() == std::vector<int>{1, 2, 3});

  for (int n = 1; n <= 20; ++n) {
    for (const auto& G : {DynkinDiagram::A(n), n >= 3 ? DynkinDiagram::D(n) : DynkinDiagram::A(n)}) {
      const auto e = G.exponents();
      CHECK(static_cast<int>(e.size()) == G.rank());
      // Exponents are symmetric about h/2.
      for (std::size_t i = 0; i < e.size(); ++i) CHECK(e[i] + e[e.size() - 1 - i] == G.coxeter());
    }
  }
}

TEST_CASE("diagram validation and names") {
  CHECK_THROWS_AS(DynkinDiagram::A(0), mmk::DomainError);
  CHECK_THROWS_AS(DynkinDiagram::D(2), mmk::DomainError);
  CHECK_THROWS_AS(DynkinDiagram::E(9), mmk::DomainError);
  CHECK(DynkinDiagram::A(11).name() == "A11");
  CHECK(mmk::parse_diagram("E6") == DynkinDiagram::E(6));
  CHECK(mmk::parse_diagram("D16") == DynkinDiagram::D(16));
  CHECK_THROWS_AS(mmk::parse_diagram("F4"), mmk::DomainError);
  CHECK_THROWS_AS(mmk::parse_diagram("A"), mmk::DomainError);
  CHECK_THROWS_AS(mmk::parse_diagram("E5"), mmk::DomainError);
}

TEST_CASE("diagrams by Coxeter number") {
  CHECK(sorted(names(mmk::diagrams_with_coxeter(12))) == std::vector<std::string>{"A11", "D7", "E6"});
  CHECK(names(mmk::diagrams_with_coxeter(3)) == std::vector<std::string>{"A2"});
  CHECK(sorted(names(mmk::diagrams_with_coxeter(30))) == std::vector<std::string>{"A29", "D16", "E8"});
  for (int h = 2; h <= 60; ++h)
    CHECK(sorted(names(mmk::diagrams_with_coxeter(h))) == sorted(oracle::diagrams_with_coxeter(h)));
}

TEST_CASE("SU(2) invariants from diagrams") {
  const auto vacuum_support = [](const mmk::ModularInvariant& inv) {
    std::vector<int> out;
    for (int b = 0; b < inv.Z.cols(); ++b)
      if (inv.Z(0, b) != 0) out.push_back(b);
    return out;
  };
  CHECK(vacuum_support(mmk::su2_invariant(DynkinDiagram::E(6), 10)) == std::vector<int>{0, 6});
  CHECK(vacuum_support(mmk::su2_invariant(DynkinDiagram::E(8), 28)) == std::vector<int>{0, 10, 18, 28});
  CHECK(mmk::su2_invariant(DynkinDiagram::A(5), 4).Z == Eigen::MatrixXi::Identity(5, 5));
  CHECK_THROWS_AS(mmk::su2_invariant(DynkinDiagram::E(6), 11), mmk::DomainError);
  CHECK_FALSE(mmk::su2_constructible(DynkinDiagram::D(3), 2));

  for (int k = 1; k <= 32; ++k) {
    const auto d = mmk::su2_data(k);
    for (const auto& G : mmk::diagrams_with_coxeter(k + 2)) {
      if (!mmk::su2_constructible(G, k)) continue;
      const auto inv = mmk::su2_invariant(G, k);
      CHECK_MESSAGE(mmk::is_modular_invariant(d, inv.Z).ok, G.name());
      // The diagonal lists the exponents with multiplicity.
      std::map<int, int> diag, exps;
      for (int a = 0; a <= k; ++a)
        if (inv.Z(a, a) != 0) diag[a + 1] = inv.Z(a, a);
      for (int e : G.exponents()) ++exps[e];
      CHECK(diag == exps);
      CHECK(mmk::label_invariant(inv).to_string() == G.name());
    }
  }
}

TEST_CASE("minimal invariants match the character expansions") {
  CHECK(mmk::minimal_invariant(DynkinDiagram::A(2), DynkinDiagram::A(3), 3).Z == Eigen::MatrixXi::Identity(3, 3));
  for (int m = 3; m <= 30; ++m) {
    for (const auto& row : oracle::type_I_rows(m)) {
      const auto label = row.label;
      const auto comma = label.find(',');
      const auto G = mmk::parse_diagram(label.substr(1, comma - 1));
      const auto Gp = mmk::parse_diagram(label.substr(comma + 1, label.size() - comma - 2));
      const auto inv = mmk::minimal_invariant(G, Gp, m);
      CHECK_MESSAGE(inv.Z == oracle::table1_invariant(label, m), label);
      CHECK(mmk::label_invariant(inv).to_string() == label);
    }
  }
}

TEST_CASE("labels of every minimal invariant round-trip") {
  for (int m = 3; m <= 30; ++m) {
    const auto d = mmk::minimal_data(m);
    for (const auto& G : mmk::diagrams_with_coxeter(m))
      for (const auto& Gp : mmk::diagrams_with_coxeter(m + 1)) {
        const auto inv = mmk::minimal_invariant(G, Gp, m);
        CHECK(mmk::is_modular_invariant(d, inv.Z).ok);
        const auto label = mmk::label_invariant(inv);
        CHECK(label.first == G);
        CHECK(label.second == Gp);
      }
  }
}

TEST_CASE("labeling examples and failures") {
  CHECK(mmk::label_invariant(mmk::su2_invariant(DynkinDiagram::E(6), 10)).to_string() == "E6");
  const int n5 = 10;
  CHECK(mmk::label_invariant({mmk::Algebra::minimal(5), Eigen::MatrixXi::Identity(n5, n5)}).to_string() == "(A4,A5)");
  CHECK(mmk::label_invariant(mmk::minimal_invariant(DynkinDiagram::A(4), DynkinDiagram::D(4), 5)).to_string() ==
        "(A4,D4)");

  Eigen::MatrixXi Z = Eigen::MatrixXi::Identity(5, 5);
  Z(2, 2) = 0;
  CHECK_THROWS_AS(mmk::label_invariant({mmk::Algebra::su2(4), Z}), mmk::LabelingError);
}

TEST_CASE("type I decisions") {
  const auto e6pair = mmk::minimal_invariant(DynkinDiagram::A(10), DynkinDiagram::E(6), 11);
  const auto r = mmk::is_type_I(e6pair);
  CHECK(r.type_I);
  CHECK(r.blocks.size() == 15);

  CHECK_FALSE(mmk::is_type_I(mmk::su2_invariant(DynkinDiagram::E(7), 16)).type_I);
  CHECK_FALSE(mmk::is_type_I(mmk::su2_invariant(DynkinDiagram::D(5), 6)).type_I);
  CHECK(mmk::is_type_I(mmk::su2_invariant(DynkinDiagram::D(6), 8)).type_I);

  const auto id = mmk::is_type_I({mmk::Algebra::su2(3), Eigen::MatrixXi::Identity(4, 4)});
  CHECK(id.type_I);
  CHECK(id.blocks.size() == 4);
  for (const auto& b : id.blocks) CHECK(std::count(b.begin(), b.end(), 1) == 1);

  Eigen::MatrixXi asym = Eigen::MatrixXi::Identity(3, 3);
  asym(0, 1) = 1;
  CHECK_FALSE(mmk::is_type_I({mmk::Algebra::minimal(3), asym}).type_I);

  CHECK_THROWS_AS(mmk::is_type_I(mmk::su2_invariant(DynkinDiagram::E(6), 10), 0), mmk::UndecidedError);
}

TEST_CASE("blocks reproduce the matrix") {
  for (int m : {5, 6, 11, 12, 29, 30}) {
    for (const auto& row : oracle::type_I_rows(m)) {
      const Eigen::MatrixXi Z = oracle::table1_invariant(row.label, m);
      const auto r = mmk::is_type_I({mmk::Algebra::minimal(m), Z});
      REQUIRE(r.type_I);
      Eigen::MatrixXi sum = Eigen::MatrixXi::Zero(Z.rows(), Z.cols());
      for (const auto& b : r.blocks) {
        const Eigen::VectorXi v = Eigen::Map<const Eigen::VectorXi>(b.data(), static_cast<Eigen::Index>(b.size()));
        sum += v * v.transpose();
      }
      CHECK(sum == Z);
      CHECK(static_cast<int>(r.blocks.size()) == row.counts.ambichiral);
    }
  }
}
