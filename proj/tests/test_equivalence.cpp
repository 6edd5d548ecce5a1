#include <catch2/catch_amalgamated.hpp>

#include "error_kind.hpp"
#include "fixtures.hpp"
#include "relgraph/composition.hpp"
#include "relgraph/equivalence.hpp"
#include "relgraph/isomorphism.hpp"
#include "testkit.hpp"

using namespace relgraph;

namespace {

void check_core_witnesses(const Graph& g, const CoreResult& c)
{
    REQUIRE(c.core == induced_subgraph(g, c.kept));
    REQUIRE(c.to_core);
    REQUIRE(apply_strong(g, *c.to_core) == c.core);
    REQUIRE(apply_strong(c.core, c.from_core) == g);
}

} // namespace

TEST_CASE("thin quotient of C4")
{
    auto q = thin_quotient(cycle(4));
    CHECK(q.partition.classes() == std::vector<std::vector<Vertex>>{{0, 2}, {1, 3}});
    CHECK(q.thin == complete(2));
    CHECK(q.thin.labels() == std::vector<std::string>{"{0,2}", "{1,3}"});
    CHECK(apply_strong(q.thin, transpose(q.collapse)) == cycle(4));
    CHECK(!is_thin(cycle(4)));
}

TEST_CASE("thin graphs quotient to themselves")
{
    auto q = thin_quotient(cycle(5));
    CHECK(q.partition.is_discrete());
    CHECK(q.thin == cycle(5));
    CHECK(is_thin(cycle(5)));
}

TEST_CASE("thin quotient invariants on random graphs")
{
    testkit::Rng rng(51);
    for (int i = 0; i < 300; ++i) {
        auto g = testkit::random_graph(rng, 1 + rng() % 7, 0.4, i % 4 == 0);
        auto q = thin_quotient(g);
        REQUIRE(is_thin(q.thin));
        REQUIRE(apply_strong(q.thin, transpose(q.collapse)) == g);
        for (const auto& cls : q.partition.classes())
            for (auto v : cls)
                REQUIRE(g.neighbors(v) == g.neighbors(cls.front()));
        REQUIRE(is_isomorphic(thin_quotient(q.thin).thin, q.thin));
    }
}

TEST_CASE("strong equivalence examples")
{
    auto w = strongly_equivalent(cycle(4), complete_bipartite(2, 3));
    REQUIRE(w);
    CHECK(w->kind == EquivalenceKind::strong);
    CHECK(witness_holds(*w, cycle(4), complete_bipartite(2, 3)));
    CHECK(!strongly_equivalent(cycle(4), cycle(5)));
    auto self = strongly_equivalent(path(3), path(3));
    REQUIRE(self);
    CHECK(self->forward == Relation::identity(4));
}

TEST_CASE("weakly equivalent pair with different thin graphs")
{
    const auto g = fixtures::weak_pair_g();
    const auto h = fixtures::weak_pair_h();
    CHECK(apply_strong(g, fixtures::weak_pair_r()) == h);
    CHECK(apply_strong(h, fixtures::weak_pair_s()) == g);
    CHECK(!strongly_equivalent(g, h));
    auto w = weakly_equivalent(g, h);
    REQUIRE(w);
    CHECK(w->kind == EquivalenceKind::weak);
    CHECK(witness_holds(*w, g, h));
}

TEST_CASE("C4 is weakly equivalent to K2")
{
    auto w = weakly_equivalent(cycle(4), complete(2));
    REQUIRE(w);
    CHECK(apply_strong(cycle(4), w->forward) == complete(2));
    CHECK(apply_strong(complete(2), w->backward) == cycle(4));
}

TEST_CASE("R-core examples")
{
    auto c4 = rcore(cycle(4));
    CHECK(c4.core == complete(2));
    CHECK(c4.kept == std::vector<Vertex>{2, 3});
    check_core_witnesses(cycle(4), c4);

    auto with_isolated = disjoint_union(complete(2), Graph(1));
    auto c = rcore(with_isolated);
    CHECK(c.core == with_isolated);
    check_core_witnesses(with_isolated, c);

    auto two_isolated = Graph(2);
    auto ci = rcore(two_isolated);
    CHECK(ci.core.order() == 1);
    check_core_witnesses(two_isolated, ci);

    CHECK(rcore(cycle(5)).core == cycle(5));
    CHECK(rcore(Graph(1)).core == Graph(1));
}

TEST_CASE("R-core oracle examples")
{
    CHECK(rcore_oracle(cycle(4)) == complete(2));
    CHECK(rcore_oracle(complete(3)) == complete(3));
    CHECK(rcore_oracle(Graph(1)) == Graph(1));
    CHECK(thrown_kind([] { rcore_oracle(empty_graph(oracle_cap + 1)); }) == ErrorKind::cap_exceeded);
}

TEST_CASE("R-cores match the oracle on graphs up to five vertices")
{
    for (auto mode : {DeletionMode::fixpoint, DeletionMode::literal})
        for (const auto& g : graphs_up_to(5)) {
            auto c = rcore(g, mode);
            check_core_witnesses(g, c);
            REQUIRE(is_isomorphic(c.core, rcore_oracle(g)));
            REQUIRE(is_thin(c.core));
            REQUIRE(is_isomorphic(rcore(c.core, mode).core, c.core));
        }
}

TEST_CASE("R-cores of looped graphs keep their witnesses")
{
    for (const auto& g : graphs_up_to(4, true)) {
        auto c = rcore(g);
        check_core_witnesses(g, c);
        REQUIRE(is_isomorphic(c.core, rcore_oracle(g)));
    }
}

TEST_CASE("both equivalences are equivalence relations")
{
    const auto pool = graphs_up_to(4);
    const auto n = pool.size();
    std::vector<std::vector<bool>> strong(n, std::vector<bool>(n)), weak(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto s = strongly_equivalent(pool[i], pool[j]);
            auto w = weakly_equivalent(pool[i], pool[j]);
            if (s)
                REQUIRE(witness_holds(*s, pool[i], pool[j]));
            if (w)
                REQUIRE(witness_holds(*w, pool[i], pool[j]));
            strong[i][j] = s.has_value();
            weak[i][j] = w.has_value();
            // strong implies weak
            REQUIRE((!strong[i][j] || weak[i][j]));
        }
    for (auto* rel : {&strong, &weak})
        for (std::size_t i = 0; i < n; ++i) {
            REQUIRE((*rel)[i][i]);
            for (std::size_t j = 0; j < n; ++j) {
                REQUIRE((*rel)[i][j] == (*rel)[j][i]);
                for (std::size_t k = 0; k < n; ++k)
                    if ((*rel)[i][j] && (*rel)[j][k])
                        REQUIRE((*rel)[i][k]);
            }
        }
}
