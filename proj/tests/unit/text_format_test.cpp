#include "holecert/text_format.hpp"

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "holecert/error.hpp"

namespace holecert {
namespace {

using testing::id;

TEST(ParseGraphTest, CommentsAndBlankLines) {
  Graph g = parse_graph("# a path\n\ne a b\n  e b c  \n# done\n");
  EXPECT_EQ(g.size(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
}

TEST(ParseGraphTest, ErrorsCarryLineNumbers) {
  try {
    parse_graph("e a b\ne b\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_graph("e a a\n"), ParseError);
  EXPECT_THROW(parse_graph("x a b\n"), ParseError);
  EXPECT_THROW(parse_graph("e a b-c\n"), ParseError);
  EXPECT_THROW(parse_graph("v a b\n"), ParseError);
}

TEST(ParseDigraphTest, Arcs) {
  Digraph d = parse_digraph("a u > w\na v > w\n");
  EXPECT_EQ(d.size(), 3u);
  EXPECT_EQ(d.arc_count(), 2u);
  EXPECT_EQ(parse_digraph("").size(), 0u);
}

TEST(ParseDigraphTest, Errors) {
  EXPECT_THROW(parse_digraph("a u > u\n"), ParseError);
  EXPECT_THROW(parse_digraph("a u w\n"), ParseError);
  EXPECT_THROW(parse_digraph("e u w\n"), ParseError);
}

TEST(SerializeTest, IsolatedFirstThenSortedLines) {
  Graph g = parse_graph("e c d\nv z\ne b a\n");
  EXPECT_EQ(serialize_graph(g), "v z\ne a b\ne c d\n");
  Digraph d = parse_digraph("a v > w\nv q\na u > w\n");
  EXPECT_EQ(serialize_digraph(d), "v q\na u > w\na v > w\n");
}

TEST(SerializeTest, RoundTrips) {
  for (const char* name : {"c4", "c5", "domino", "housex", "wheel5"}) {
    Graph g = testing::fixture(name);
    EXPECT_EQ(parse_graph(serialize_graph(g)), g) << name;
  }
  Digraph d = parse_digraph("a x > y\na y > z\nv q\n");
  EXPECT_EQ(parse_digraph(serialize_digraph(d)), d);
}

TEST(ReadTextFileTest, MissingFileIsParseError) {
  EXPECT_THROW(read_text_file(testing::data_path("no_such_file.graph")), ParseError);
}

}  // namespace
}  // namespace holecert
