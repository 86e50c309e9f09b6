#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "posetdim/dimension.hpp"
#include "posetdim/errors.hpp"
#include "posetdim/generators.hpp"
#include "posetdim/io.hpp"
#include "posetdim/reversibility.hpp"

namespace posetdim {
namespace {

PosetFile parse(const std::string& text) {
  std::istringstream in(text);
  return parse_poset(in);
}

std::size_t error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.line;
  }
  return 0;
}

TEST(PosetFormat, ParsesGeneratingRelation) {
  const auto f = parse("# comment\nposet tiny\nelements 3\n\nrel 0 1\nrel 1 2\n");
  EXPECT_EQ(f.name, "tiny");
  EXPECT_EQ(f.poset.size(), 3);
  EXPECT_TRUE(f.poset.less(0, 2));
  EXPECT_FALSE(f.bipartite.has_value());
}

TEST(PosetFormat, ParsesBipartiteLine) {
  const auto f = parse("poset s2\nelements 4\nrel 0 3\nrel 1 2\nbipartite A: 0 1 B: 2 3\n");
  ASSERT_TRUE(f.bipartite.has_value());
  EXPECT_EQ(f.bipartite->a_side(), (ElementSet{0, 1}));
  EXPECT_EQ(f.bipartite->b_side(), (ElementSet{2, 3}));
}

TEST(PosetFormat, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("poset x\nelements 3\nrel 0 1\nrel 0 nine\n"), 4u);
  EXPECT_EQ(error_line("poset x\nelements 3\nrel 0 3\n"), 3u);
  EXPECT_EQ(error_line("poset x\nrel 0 1\nelements 2\n"), 2u);
  EXPECT_EQ(error_line("poset x\nelements 2\nedge 0 1\n"), 3u);
  EXPECT_EQ(error_line("poset x\nelements 2\nbipartite A: 0 1\n"), 3u);
  EXPECT_EQ(error_line("poset x\nelements 2\nrel 0 1\nbipartite A: 1 B: 0\n"), 4u);
  EXPECT_THROW(parse("poset x\nelements 2\nrel 0 1\nrel 1 0\n"), CycleError);
}

TEST(PosetFormat, RoundTripKeepsIndicesForEveryGenerator) {
  const std::vector<Poset> plain{gen_subsets12(4), gen_canonical_interval(5), gen_stacked(2, 2), gen_chain(4),
                                 gen_antichain(3), Poset{}};
  for (const auto& p : plain) {
    const auto back = parse(to_text("p", p));
    EXPECT_EQ(back.poset, p);
    EXPECT_EQ(to_text("p", back.poset), to_text("p", p));
  }
  const std::vector<BipartitePoset> bips{gen_standard_example(4), gen_projective_plane(3).poset,
                                         gen_random_bipartite(5, 0.5, 9)};
  for (const auto& bp : bips) {
    const auto back = parse(to_text("b", bp));
    ASSERT_TRUE(back.bipartite.has_value());
    EXPECT_EQ(back.poset, bp.poset());
    EXPECT_EQ(back.bipartite->a_side(), bp.a_side());
    EXPECT_EQ(back.bipartite->b_side(), bp.b_side());
  }
}

TEST(RealizerFormat, RoundTripPreservesVerdict) {
  const auto p = gen_standard_example(3).poset();
  const auto cert = dim_exact(p);
  const auto dir = std::filesystem::temp_directory_path();
  const auto path = (dir / "posetdim_io_test_realizer.txt").string();
  save_realizer(path, cert.realizer);
  const auto back = load_realizer(path);
  EXPECT_EQ(verify_realizer(p, back), verify_realizer(p, cert.realizer));
  EXPECT_TRUE(verify_realizer(p, back));
  std::filesystem::remove(path);

  std::istringstream bad("0 1 2\n0 0 1\n");
  try {
    parse_realizer(bad);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line, 2u);
  }
}

TEST(Files, MissingFileIsIoError) {
  EXPECT_THROW(load_poset("/nonexistent/posetdim/file.txt"), IoError);
  EXPECT_THROW(load_realizer("/nonexistent/posetdim/file.txt"), IoError);
}

}  // namespace
}  // namespace posetdim
