#include <doctest.h>

#include <set>
#include <stdexcept>
#include <vector>

#include "hecke/root_system.hpp"

using namespace hecke;

TEST_CASE("A2 positive roots") {
  const RootSystem rs(Family::A, 2);
  REQUIRE(rs.positive_count() == 3);
  CHECK(rs.cartan() == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
  CHECK(rs.root_name(0) == "a1");
  CHECK(rs.root_name(1) == "a2");
  CHECK(rs.root_name(2) == "a1+a2");
  CHECK(rs.root(2).height == 2);
  CHECK(rs.root(2).omega == std::vector<int>{1, 1});
  CHECK(rs.weyl_order() == 6);
  CHECK(rs.braid_order(0, 1) == 3);
  CHECK(rs.symmetrizer() == std::vector<int>{1, 1});
}

TEST_CASE("C2 conventions: last simple root long") {
  const RootSystem rs(Family::C, 2);
  REQUIRE(rs.positive_count() == 4);
  CHECK(rs.cartan() == std::vector<std::vector<int>>{{2, -2}, {-1, 2}});
  CHECK(rs.symmetrizer() == std::vector<int>{1, 2});
  CHECK_FALSE(rs.root(rs.simple_root_index(0)).long_root);
  CHECK(rs.root(rs.simple_root_index(1)).long_root);
  CHECK(rs.braid_order(0, 1) == 4);
  CHECK(rs.weyl_order() == 8);
  int long_count = 0;
  for (std::size_t r = 0; r < rs.positive_count(); ++r)
    long_count += rs.root(static_cast<int>(r)).long_root ? 1 : 0;
  CHECK(long_count == 2);
}

TEST_CASE("B3 conventions: last simple root short") {
  const RootSystem rs(Family::B, 3);
  REQUIRE(rs.positive_count() == 9);
  CHECK(rs.cartan_entry(2, 1) == -2);
  CHECK(rs.cartan_entry(1, 2) == -1);
  CHECK(rs.symmetrizer() == std::vector<int>{2, 2, 1});
  CHECK_FALSE(rs.root(rs.simple_root_index(2)).long_root);
  CHECK(rs.weyl_order() == 48);
  CHECK(rs.braid_order(0, 1) == 3);
  CHECK(rs.braid_order(1, 2) == 4);
  CHECK(rs.braid_order(0, 2) == 2);
}

TEST_CASE("G2 root list") {
  const RootSystem rs(Family::G, 2);
  REQUIRE(rs.positive_count() == 6);
  CHECK(rs.cartan() == std::vector<std::vector<int>>{{2, -3}, {-1, 2}});
  CHECK(rs.symmetrizer() == std::vector<int>{1, 3});
  CHECK(rs.braid_order(0, 1) == 6);
  CHECK(rs.weyl_order() == 12);
  std::set<std::vector<int>> simple_coords;
  for (std::size_t r = 0; r < rs.positive_count(); ++r)
    simple_coords.insert(rs.root(static_cast<int>(r)).simple);
  const std::set<std::vector<int>> expected{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
  CHECK(simple_coords == expected);
  std::set<std::string> long_names;
  for (std::size_t r = 0; r < rs.positive_count(); ++r)
    if (rs.root(static_cast<int>(r)).long_root) long_names.insert(rs.root_name(static_cast<int>(r)));
  CHECK(long_names == std::set<std::string>{"a2", "3a1+a2", "3a1+2a2"});
}

TEST_CASE("larger systems have the right sizes") {
  CHECK(RootSystem(Family::A, 3).positive_count() == 6);
  CHECK(RootSystem(Family::A, 3).weyl_order() == 24);
  CHECK(RootSystem(Family::D, 4).positive_count() == 12);
  CHECK(RootSystem(Family::D, 4).weyl_order() == 192);
  CHECK(RootSystem(Family::F, 4).positive_count() == 24);
  CHECK(RootSystem(Family::F, 4).weyl_order() == 1152);
  CHECK(RootSystem(Family::E, 6).positive_count() == 36);
  CHECK(RootSystem(Family::E, 6).weyl_order() == 51840);
  CHECK(RootSystem(Family::B, 2).positive_count() == 4);
}

TEST_CASE("classify_root looks up both signs") {
  const RootSystem rs(Family::A, 2);
  const auto pos = rs.classify_root(std::vector<int>{1, 1});
  REQUIRE(pos.has_value());
  CHECK(pos->first == 2);
  CHECK(pos->second == 1);
  const auto neg = rs.classify_root(std::vector<int>{-1, -1});
  REQUIRE(neg.has_value());
  CHECK(neg->second == -1);
  CHECK_FALSE(rs.classify_root(std::vector<int>{2, 0}).has_value());
}

TEST_CASE("rank-2 subsystems") {
  CHECK(RootSystem(Family::A, 2).rank2_subsystem(0, 1).size() == 3);
  CHECK(RootSystem(Family::C, 2).rank2_subsystem(0, 1).size() == 4);
  CHECK(RootSystem(Family::G, 2).rank2_subsystem(0, 1).size() == 6);
  const RootSystem b3(Family::B, 3);
  CHECK(b3.rank2_subsystem(0, 1).size() == 3);
  CHECK(b3.rank2_subsystem(1, 2).size() == 4);
  CHECK(b3.rank2_subsystem(0, 2).size() == 2);
}

TEST_CASE("reflection acts on weights in omega coordinates") {
  const RootSystem rs(Family::A, 2);
  CHECK(rs.reflect_weight(0, {1, 0}) == std::vector<int>{-1, 1});
  CHECK(rs.reflect_weight(1, {1, 0}) == std::vector<int>{1, 0});
  CHECK(rs.simple_root_omega(0) == std::vector<int>{2, -1});
}

TEST_CASE("invalid families and ranks are rejected") {
  CHECK_THROWS_AS(RootSystem(Family::A, 0), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem(Family::G, 3), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem(Family::F, 5), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem(Family::D, 2), std::invalid_argument);
  CHECK_THROWS_AS(family_from_char('Z'), std::invalid_argument);
}
