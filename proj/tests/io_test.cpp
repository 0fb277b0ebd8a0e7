#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "circlab/dimacs.hpp"
#include "circlab/families.hpp"
#include "circlab/serialize.hpp"

namespace circlab {
namespace {

namespace fs = std::filesystem;

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "circlab_io_test";
  fs::create_directories(dir);
  return dir;
}

TEST(Dimacs, ParsesPlainFile) {
  std::istringstream in("c five cycle\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n");
  const Graph g = read_dimacs(in);
  EXPECT_TRUE(g.same_adjacency(cycle_graph(5)));
  EXPECT_FALSE(g.provenance().has_value());
}

TEST(Dimacs, AcceptsColProblemLine) {
  std::istringstream in("p col 3 1\ne 1 3\n");
  const Graph g = read_dimacs(in);
  EXPECT_TRUE(g.adjacent(0, 2));
}

TEST(Dimacs, RejectsMalformedInput) {
  std::istringstream no_header("e 1 2\n");
  EXPECT_THROW(read_dimacs(no_header), std::runtime_error);
  std::istringstream zero_index("p edge 3 1\ne 0 1\n");
  EXPECT_THROW(read_dimacs(zero_index), std::exception);
  std::istringstream junk("p edge 3 1\nx 1 2\n");
  EXPECT_THROW(read_dimacs(junk), std::runtime_error);
}

TEST(Dimacs, StreamRoundTripKeepsMetadata) {
  for (const char* name : {"KG(5,2)", "SG(6,2)", "M^2(K2)", "K2xK3", "K(7,3)"}) {
    const Graph g = build_family(std::string_view(name));
    std::stringstream buf;
    write_dimacs(buf, g);
    const Graph back = read_dimacs(buf);
    EXPECT_TRUE(back.same_adjacency(g)) << name;
    EXPECT_EQ(back.labels(), g.labels()) << name;
    ASSERT_TRUE(back.provenance().has_value());
    EXPECT_EQ(back.provenance()->name(), name);
  }
}

TEST(Dimacs, OutputIsOneIndexedAndDeterministic) {
  std::ostringstream a;
  std::ostringstream b;
  write_dimacs(a, path_graph(3), false);
  write_dimacs(b, path_graph(3), false);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_NE(a.str().find("p edge 3 2"), std::string::npos);
  EXPECT_NE(a.str().find("e 1 2"), std::string::npos);
  EXPECT_NE(a.str().find("e 2 3"), std::string::npos);
}

TEST(Dimacs, FileRoundTripWithSidecar) {
  const fs::path file = scratch_dir() / "petersen.col";
  const Graph g = kneser(5, 2);
  save_graph(g, file.string());
  EXPECT_EQ(labels_sidecar_path(file.string()), (scratch_dir() / "petersen.labels.json").string());
  EXPECT_TRUE(fs::exists(labels_sidecar_path(file.string())));
  const Graph back = load_graph(file.string());
  EXPECT_TRUE(back.same_adjacency(g));
  EXPECT_EQ(back.label(0), "{1,2}");
  EXPECT_THROW(load_graph((scratch_dir() / "missing.col").string()), std::runtime_error);
}

TEST(Json, RationalAndInfinity) {
  EXPECT_EQ(to_json(Rational(5, 2)).dump(), R"({"num":5,"den":2})");
  EXPECT_EQ(rational_from_json(to_json(Rational(7, 3))), Rational(7, 3));
  EXPECT_EQ(to_json(NatOrInf::infinity()).dump(), R"("inf")");
  EXPECT_EQ(to_json(NatOrInf(4)).dump(), "4");
}

TEST(Json, FreeColoringRoundTrip) {
  FreeColoring fc;
  fc.classes = {VertexSet(5, {0}), VertexSet(5, {1, 3}), VertexSet(5, {2, 4})};
  fc.support_edges = {{2, 3}};
  fc.a = 2;
  fc.b = kUnboundedCap;
  const Json j = to_json(fc);
  EXPECT_TRUE(j["b"].is_null());
  const FreeColoring back = free_coloring_from_json(j, 5);
  EXPECT_EQ(back.classes, fc.classes);
  EXPECT_EQ(back.support_edges, fc.support_edges);
  EXPECT_EQ(back.a, 2u);
  EXPECT_EQ(back.b, kUnboundedCap);
  EXPECT_THROW(free_coloring_from_json(j, 3), std::out_of_range);
}

TEST(Json, FamilySpecRoundTrip) {
  const FamilySpec spec = parse_family_name("M^2(K2xC5)");
  EXPECT_EQ(family_spec_from_json(to_json(spec)), spec);
}

}  // namespace
}  // namespace circlab
