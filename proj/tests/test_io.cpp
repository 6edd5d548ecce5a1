#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "error_kind.hpp"
#include "relgraph/error.hpp"
#include "relgraph/io.hpp"
#include "relgraph/isomorphism.hpp"
#include "testkit.hpp"

using namespace relgraph;
using Catch::Matchers::ContainsSubstring;

namespace {

Graph graph_from(const std::string& text)
{
    std::istringstream in(text);
    return parse_graph(in, "g.graph");
}

Relation relation_from(const std::string& text)
{
    std::istringstream in(text);
    return parse_relation(in, "r.rel");
}

std::string parse_error(const std::string& text, bool graph = true)
{
    try {
        graph ? (void)graph_from(text) : (void)relation_from(text);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::parse)
            return e.what();
    }
    return {};
}

} // namespace

TEST_CASE("graph file basics")
{
    auto g = graph_from("# triangle\ngraph 3\n0 1\n1 2\n\n2 0\n1 0\n");
    CHECK(g == cycle(3));
    CHECK(g.labels().empty());
    CHECK(graph_from("graph 2\n1 1\n").has_loop(1));
    CHECK(graph_from("graph 0\n").order() == 0);
    CHECK(graph_from("  graph 2 \r\n 0   1\r\n") == complete(2));
}

TEST_CASE("format is sorted and stable")
{
    auto g = Graph::from_edges(4, {{3, 2}, {1, 0}, {2, 2}});
    CHECK(format_graph(g) == "graph 4\n0 1\n2 2\n2 3\n");
    auto r = Relation::from_pairs(3, 2, {{2, 1}, {0, 1}, {0, 0}});
    CHECK(format_relation(r) == "relation 3 2\n0 0\n0 1\n2 1\n");
}

TEST_CASE("labels survive a round trip")
{
    auto g = induced_subgraph(cycle(5), make_set(5, {1, 3, 4}));
    auto text = format_graph(g);
    CHECK_THAT(text, ContainsSubstring("# vertex 0 = 1"));
    CHECK_THAT(text, ContainsSubstring("# vertex 2 = 4"));
    auto back = graph_from(text);
    CHECK(back == g);
    CHECK(back.labels() == g.labels());

    auto named = graph_from("graph 2\n0 1\n# vertex 1 = hub b\n");
    CHECK(named.labels() == std::vector<std::string>{"0", "hub b"});
    CHECK(format_graph(cycle(4)).find('#') == std::string::npos);
}

TEST_CASE("round trip on random graphs and relations")
{
    testkit::Rng rng(81);
    for (int i = 0; i < 200; ++i) {
        auto g = testkit::random_graph(rng, rng() % 9, 0.4, true);
        REQUIRE(graph_from(format_graph(g)) == g);
        auto r = testkit::random_relation(rng, rng() % 7, rng() % 7, 0.4);
        REQUIRE(relation_from(format_relation(r)) == r);
    }
    for (const auto& g : graphs_up_to(4, true))
        REQUIRE(graph_from(format_graph(g)) == g);
}

TEST_CASE("parse errors carry line numbers")
{
    CHECK_THAT(parse_error(""), ContainsSubstring("g.graph:1: missing 'graph' header"));
    CHECK_THAT(parse_error("# only\n\ngrph 3\n"), ContainsSubstring("g.graph:3: expected header"));
    CHECK_THAT(parse_error("graph 3\n0 1\n\n1 3\n"), ContainsSubstring("g.graph:4: 3 is out of range"));
    CHECK_THAT(parse_error("graph 3\n0 1 2\n"), ContainsSubstring("g.graph:2: expected two integers"));
    CHECK_THAT(parse_error("graph 3\n0 -1\n"), ContainsSubstring("g.graph:2: expected a non-negative integer"));
    CHECK_THAT(parse_error("graph x\n"), ContainsSubstring("g.graph:1:"));
    CHECK_THAT(parse_error("graph 2\n# vertex 5 = e\n"), ContainsSubstring("g.graph:2: label for vertex 5"));
    CHECK_THAT(parse_error("relation 2\n", false), ContainsSubstring("r.rel:1: expected header"));
    CHECK_THAT(parse_error("relation 2 1\n1 1\n", false), ContainsSubstring("r.rel:2: 1 is out of range"));
    CHECK_THAT(parse_error("graph 2\n", false), ContainsSubstring("r.rel:1:"));
}

TEST_CASE("files on disk")
{
    auto dir = std::filesystem::temp_directory_path() / "relgraph_test_io";
    std::filesystem::create_directories(dir);
    auto gp = (dir / "c5.graph").string();
    auto rp = (dir / "id.rel").string();
    {
        std::ofstream(gp) << format_graph(cycle(5));
        std::ofstream(rp) << format_relation(Relation::identity(5));
    }
    CHECK(read_graph_file(gp) == cycle(5));
    CHECK(read_relation_file(rp) == Relation::identity(5));
    CHECK(thrown_kind([&] { read_graph_file((dir / "missing.graph").string()); }) == ErrorKind::parse);
    std::filesystem::remove_all(dir);
}
