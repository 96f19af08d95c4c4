#include <gtest/gtest.h>

#include "ivhf/soft_set.hpp"
#include "support.hpp"

namespace ivhf {
namespace {

using testing::compare_tables;
using testing::elem;
using testing::load_data;

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no ivhf::Error thrown";
  return ErrorKind::ParseError;
}

class Worked : public ::testing::Test {
 protected:
  SoftSet f = load_data("FA.json");
  SoftSet g = load_data("GB.json");
  SoftSet h = load_data("HC.json");
};

TEST_F(Worked, UnionTable) {
  const SoftSet u = soft_union(f, g);
  EXPECT_EQ(u.parameters(), (std::vector<std::string>{"e1", "e2", "e3"}));
  EXPECT_EQ(compare_tables(u, load_data("expected_union.json")), "");
}

TEST_F(Worked, IntersectionTable) {
  const SoftSet n = soft_intersection(f, g);
  EXPECT_EQ(n.parameters(), (std::vector<std::string>{"e1", "e2"}));
  EXPECT_EQ(compare_tables(n, load_data("expected_intersection.json")), "");
}

TEST_F(Worked, FamilyTables) {
  const std::vector<SoftSet> family{f, g, h};
  EXPECT_EQ(compare_tables(family_union(family), load_data("expected_family_union.json")), "");
  EXPECT_EQ(compare_tables(family_intersection(family), load_data("expected_family_intersection.json")), "");
}

TEST_F(Worked, ComplementTables) {
  EXPECT_EQ(compare_tables(soft_complement(f), load_data("expected_FA_complement.json")), "");
  // The printed e1/h2 cell complements G's element after padding against F's
  // three-interval cell; the distinct intervals agree.
  EXPECT_EQ(compare_tables(soft_complement(g), load_data("expected_GB_complement.json"), 1e-9, {{"e1", "h2"}}), "");
  EXPECT_EQ(compare_tables(soft_union(soft_complement(f), soft_complement(g)),
                           load_data("expected_complements_union.json")),
            "");
  EXPECT_EQ(compare_tables(soft_complement(soft_union(f, g)), load_data("expected_union_complement.json")), "");
  EXPECT_EQ(compare_tables(soft_complement(soft_intersection(f, g)),
                           load_data("expected_intersection_complement.json")),
            "");
}

TEST_F(Worked, SubsetInclusions) {
  EXPECT_TRUE(is_subset(soft_intersection(soft_complement(f), soft_complement(g)), soft_complement(soft_union(f, g))));
  EXPECT_TRUE(is_subset(soft_complement(soft_intersection(f, g)), soft_union(soft_complement(f), soft_complement(g))));
  EXPECT_FALSE(is_subset(f, g));
  EXPECT_TRUE(is_subset(f, f));
  EXPECT_FALSE(is_subset(full_like(f), f));
  EXPECT_TRUE(is_subset(empty_like(f), f));
}

TEST_F(Worked, UnionWithItselfIsIdentity) {
  EXPECT_TRUE(strict_equal(soft_union(f, f), f));
  EXPECT_TRUE(strict_equal(soft_intersection(g, g), g));
}

TEST_F(Worked, IntersectionNeedsSharedParameter) {
  const SoftSet only_e3 = SoftSet::make({"h1", "h2"}, {"e3"}, {elem({{0.1, 0.2}}), elem({{0.3, 0.4}})});
  EXPECT_EQ(kind_of([&] { soft_intersection(f, only_e3); }), ErrorKind::EmptyParameterIntersection);
  EXPECT_EQ(kind_of([&] { soft_apply_operator(OperatorKind::O1, f, only_e3); }),
            ErrorKind::EmptyParameterIntersection);
}

TEST_F(Worked, RingOperationsNeedEqualParameterSets) {
  EXPECT_EQ(kind_of([&] { soft_ring_sum(f, g); }), ErrorKind::ParameterMismatch);
  EXPECT_EQ(kind_of([&] { soft_ring_product(f, g); }), ErrorKind::ParameterMismatch);
  const SoftSet s = soft_ring_sum(f, f);
  EXPECT_EQ(s.parameters(), f.parameters());
}

TEST_F(Worked, UniverseMismatchIsRejected) {
  const SoftSet other = SoftSet::make({"h1", "h3"}, {"e1"}, {elem({{0.1, 0.2}}), elem({{0.3, 0.4}})});
  EXPECT_EQ(kind_of([&] { soft_union(f, other); }), ErrorKind::UniverseMismatch);
}

TEST_F(Worked, OperatorOnSharedParameters) {
  const SoftSet r = soft_apply_operator(OperatorKind::O3, f, g);
  EXPECT_EQ(r.parameters(), (std::vector<std::string>{"e1", "e2"}));
  // e2/h1: O3 over {[.2,.9],[.7,1]} x {[.6,.8]} = {[.05,.2],[.05,.1]}
  EXPECT_TRUE(testing::same_multiset(r.at("e2", "h1"), elem({{0.05, 0.1}, {0.05, 0.2}}), 1e-12));
}

TEST(SoftSet, Validation) {
  EXPECT_EQ(kind_of([] { SoftSet::make(std::vector<std::string>{}, {"e1"}, {}); }), ErrorKind::EmptyUniverse);
  EXPECT_EQ(kind_of([] { SoftSet::make({"h1"}, std::vector<std::string>{}, {}); }), ErrorKind::InvalidSoftSet);
  EXPECT_EQ(kind_of([] { SoftSet::make({"h1", "h1"}, {"e1"}, {elem({{0, 0}}), elem({{0, 0}})}); }),
            ErrorKind::InvalidSoftSet);
  EXPECT_EQ(kind_of([] { SoftSet::make({"h1"}, {"e1"}, {}); }), ErrorKind::InvalidSoftSet);
  EXPECT_EQ(kind_of([] { empty_of({"e1"}, {}); }), ErrorKind::EmptyUniverse);
  EXPECT_EQ(kind_of([] { family_union({}); }), ErrorKind::EmptyFamily);
  EXPECT_EQ(kind_of([] { family_intersection({}); }), ErrorKind::EmptyFamily);
}

TEST(SoftSet, Accessors) {
  const SoftSet s = SoftSet::make({"h1", "h2"}, {"e1"}, {elem({{0.1, 0.2}}), elem({{0.3, 0.4}})});
  EXPECT_EQ(s.at("e1", "h2"), elem({{0.3, 0.4}}));
  EXPECT_EQ(s.value("e1").size(), 2u);
  EXPECT_EQ(kind_of([&] { s.at("e9", "h1"); }), ErrorKind::InvalidSoftSet);
  EXPECT_EQ(s.parameter_index("e1"), 0u);
  EXPECT_FALSE(s.object_index("h9").has_value());
}

TEST(SoftSet, UniverseOrderDoesNotMatter) {
  const SoftSet a = SoftSet::make({"h1", "h2"}, {"e1"}, {elem({{0.1, 0.2}}), elem({{0.3, 0.4}})});
  const SoftSet b = SoftSet::make({"h2", "h1"}, {"e1"}, {elem({{0.3, 0.4}}), elem({{0.1, 0.2}})});
  EXPECT_TRUE(strict_equal(a, b));
  EXPECT_TRUE(strict_equal(soft_union(a, b), a));
}

TEST(SoftSet, ConstantSets) {
  const SoftSet e = empty_of({"e1", "e2"}, {"h1"});
  const SoftSet u = full_of({"e1", "e2"}, {"h1"});
  for (const auto& c : e.cells()) EXPECT_EQ(c, Ivhfe::empty_membership());
  for (const auto& c : u.cells()) EXPECT_EQ(c, Ivhfe::full_membership());
  EXPECT_TRUE(strict_equal(soft_complement(e), u));
}

}  // namespace
}  // namespace ivhf
