#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "error_kind.hpp"
#include "relgraph/composition.hpp"
#include "relgraph/equivalence.hpp"
#include "relgraph/isomorphism.hpp"
#include "relgraph/solver.hpp"
#include "testkit.hpp"

using namespace relgraph;

namespace {

SolveQuery query(const Graph& g, const Graph& h, Mode mode = Mode::strong,
                 DomainConstraint domain = DomainConstraint::any, Enumeration e = Enumeration::all)
{
    SolveQuery q;
    q.g = g;
    q.h = h;
    q.mode = mode;
    q.domain = domain;
    q.enumeration = e;
    return q;
}

Relation sub_relation(const Relation& r, const std::vector<Vertex>& rows, const std::vector<Vertex>& cols)
{
    std::vector<VertexSet> out(rows.size(), VertexSet(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (r.contains(rows[i], cols[j]))
                out[i].set(j);
    return Relation::from_rows(cols.size(), std::move(out));
}

Graph k2_plus_k2_plus_k2_complement()
{
    return complement(disjoint_union(disjoint_union(complete(2), complete(2)), complete(2)));
}

bool solves(const Graph& g, const Graph& h, const Relation& r, Mode mode)
{
    auto out = testkit::compose_by_definition(g, r, mode == Mode::weak);
    return out && *out == h;
}

} // namespace

TEST_CASE("C3 onto K2 has six solutions")
{
    auto res = solve(query(cycle(3), complete(2)));
    CHECK(res.set.complete);
    CHECK(!res.certificate);
    REQUIRE(res.set.solutions.size() == 6);
    CHECK(std::binary_search(res.set.solutions.begin(), res.set.solutions.end(),
                             Relation::from_pairs(3, 2, {{0, 0}, {1, 1}})));
    CHECK(res.set.solutions == testkit::naive_solutions(cycle(3), complete(2), Mode::strong, DomainConstraint::any));
}

TEST_CASE("K2 never produces C3")
{
    auto res = solve(query(complete(2), cycle(3), Mode::strong, DomainConstraint::any, Enumeration::exists));
    CHECK(res.set.complete);
    CHECK(res.set.solutions.empty());
    REQUIRE(res.certificate);
    CHECK(recheck(*res.certificate, complete(2), cycle(3), Mode::strong, DomainConstraint::any));
    CHECK(testkit::naive_solutions(complete(2), cycle(3), Mode::strong, DomainConstraint::any).empty());
}

TEST_CASE("P3 onto P1: minimal and maximal solutions")
{
    auto q = query(path(3), path(1), Mode::strong, DomainConstraint::any, Enumeration::minimal);
    auto res = solve(q);
    REQUIRE(res.set.complete);
    const auto& sols = res.set.solutions;
    auto has = [&](const std::vector<std::size_t>& idx, const Relation& r) {
        return std::any_of(idx.begin(), idx.end(), [&](std::size_t i) { return sols[i] == r; });
    };
    CHECK(has(res.set.minimal, Relation::from_pairs(4, 2, {{0, 0}, {1, 1}})));
    CHECK(res.set.minimal == testkit::minimal_indices(sols));

    q.enumeration = Enumeration::maximal;
    res = solve(q);
    CHECK(has(res.set.maximal, Relation::from_pairs(4, 2, {{0, 0}, {2, 0}, {1, 1}, {3, 1}})));
    CHECK(res.set.maximal == testkit::maximal_indices(res.set.solutions));

    q.domain = DomainConstraint::full;
    res = solve(q);
    REQUIRE(res.set.solutions.size() == 2);
    CHECK(res.set.maximal == std::vector<std::size_t>{0, 1});
    CHECK(testkit::minimal_indices(res.set.solutions) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("certificate examples")
{
    // chi(K2) <= chi(C3), so only the complete-source characterisation applies.
    auto c = certify(complete(2), cycle(3), Mode::strong, DomainConstraint::full);
    REQUIRE(c);
    CHECK(c->kind == CertificateKind::complete_char);
    CHECK(c->lhs == 3);
    CHECK(c->rhs == 2);

    c = certify(cycle(3), complete(2), Mode::strong, DomainConstraint::full);
    REQUIRE(c);
    CHECK(c->kind == CertificateKind::chromatic);
    CHECK(c->lhs == 3);
    CHECK(c->rhs == 2);
    CHECK(testkit::naive_solutions(cycle(3), complete(2), Mode::strong, DomainConstraint::full).empty());

    c = certify(path(2), path(5), Mode::strong, DomainConstraint::full);
    REQUIRE(c);
    CHECK(c->kind == CertificateKind::path_char);
    CHECK(recheck(*c, path(2), path(5), Mode::strong, DomainConstraint::full));

    auto multipartite = k2_plus_k2_plus_k2_complement();
    CHECK(!certify(complete(4), multipartite, Mode::strong, DomainConstraint::any));
    auto res = solve(query(complete(4), multipartite, Mode::strong, DomainConstraint::any, Enumeration::exists));
    REQUIRE(res.set.solutions.size() == 1);
    CHECK(apply_strong(complete(4), res.set.solutions[0]) == multipartite);
    // Exactly three parts: a full-domain K4 source has one vertex too many.
    CHECK(certify(complete(4), multipartite, Mode::strong, DomainConstraint::full));
}

TEST_CASE("K5 reaches K3 weakly but not strongly")
{
    auto weak = solve(query(complete(5), complete(3), Mode::weak, DomainConstraint::any, Enumeration::exists));
    REQUIRE(weak.set.solutions.size() == 1);
    CHECK(apply_weak(complete(5), weak.set.solutions[0]) == complete(3));

    auto strong = solve(query(complete(5), complete(3), Mode::strong, DomainConstraint::full, Enumeration::exists));
    CHECK(strong.set.solutions.empty());
    REQUIRE(strong.certificate);
    CHECK(strong.certificate->kind == CertificateKind::chromatic);
}

TEST_CASE("solver matches naive enumeration up to three vertices")
{
    for (auto mode : {Mode::strong, Mode::weak})
        for (const auto& g : graphs_up_to(3, mode == Mode::strong))
            for (std::size_t m = 1; m <= 3; ++m) {
                testkit::NaiveTable table(g, m, mode);
                for (const auto& h : graphs_of_order(m, mode == Mode::strong))
                    for (auto domain : {DomainConstraint::any, DomainConstraint::full}) {
                        auto expected = table.solutions(h, domain);
                        auto res = solve(query(g, h, mode, domain, Enumeration::minimal));
                        REQUIRE(res.set.complete);
                        REQUIRE(res.set.solutions == expected);
                        REQUIRE(res.set.minimal == testkit::minimal_indices(expected));
                        REQUIRE(res.certificate.has_value() == expected.empty());

                        auto ex = solve(query(g, h, mode, domain, Enumeration::exists));
                        REQUIRE(ex.set.solutions.size() == (expected.empty() ? 0U : 1U));
                        if (!expected.empty())
                            REQUIRE(solves(g, h, ex.set.solutions[0], mode));
                    }
            }
}

TEST_CASE("search options do not change the solution set")
{
    testkit::Rng rng(71);
    for (int i = 0; i < 150; ++i) {
        auto g = testkit::random_graph(rng, 1 + rng() % 4, 0.5);
        auto h = testkit::random_graph(rng, 1 + rng() % 4, 0.5);
        auto mode = rng() % 2 ? Mode::strong : Mode::weak;
        auto domain = rng() % 2 ? DomainConstraint::any : DomainConstraint::full;
        auto base = solve(query(g, h, mode, domain)).set.solutions;
        auto q = query(g, h, mode, domain);
        q.split_components = false;
        q.use_certificates = false;
        REQUIRE(solve(q).set.solutions == base);
        q.limits.workers = 3;
        REQUIRE(solve(q).set.solutions == base);
        for (const auto& r : base)
            REQUIRE(solves(g, h, r, mode));
    }
}

TEST_CASE("workers give identical output")
{
    auto q = query(cycle(6), complete(2));
    auto one = solve(q);
    q.limits.workers = 3;
    auto three = solve(q);
    CHECK(one.set.solutions.size() == 170);
    CHECK(one.set.solutions == three.set.solutions);
    CHECK(one.set.solutions == testkit::naive_solutions(cycle(6), complete(2), Mode::strong, DomainConstraint::any));
}

TEST_CASE("certificates are sound")
{
    std::size_t issued = 0;
    for (const auto& g : graphs_up_to(3))
        for (const auto& h : graphs_up_to(4))
            for (auto mode : {Mode::strong, Mode::weak})
                for (auto domain : {DomainConstraint::any, DomainConstraint::full})
                    if (auto c = certify(g, h, mode, domain)) {
                        ++issued;
                        REQUIRE(recheck(*c, g, h, mode, domain));
                        REQUIRE(testkit::naive_solutions(g, h, mode, domain).empty());
                    }
    CHECK(issued > 100);
}

TEST_CASE("exhausted search is reported as such")
{
    // Weakly K2 does reach C3: a shared middle vertex only makes a loop.
    auto res = solve(query(complete(2), cycle(3), Mode::weak, DomainConstraint::any));
    CHECK(!res.set.solutions.empty());
    CHECK(!res.certificate);

    // Two edges onto a triangle: nothing structural rules it out.
    auto g = Graph::from_edges(3, {{0, 1}, {1, 2}});
    auto q = query(g, cycle(3), Mode::strong, DomainConstraint::any);
    q.use_certificates = false;
    auto bare = solve(q);
    REQUIRE(bare.certificate);
    CHECK(bare.certificate->kind == CertificateKind::exhausted);
}

TEST_CASE("budget exhaustion leaves the set incomplete")
{
    auto q = query(path(7), path(3));
    q.limits.node_budget = 5;
    auto res = solve(q);
    CHECK(!res.set.complete);
    CHECK(!res.certificate);
    for (const auto& r : res.set.solutions)
        CHECK(apply_strong(path(7), r) == path(3));

    q.enumeration = Enumeration::minimal;
    res = solve(q);
    CHECK(!res.set.complete);
}

TEST_CASE("required pairs filter the solutions")
{
    auto q = query(cycle(4), complete(2));
    q.required = {{0, 0}, {2, 0}};
    auto res = solve(q);
    auto all = testkit::naive_solutions(cycle(4), complete(2), Mode::strong, DomainConstraint::any);
    std::vector<Relation> expected;
    std::copy_if(all.begin(), all.end(), std::back_inserter(expected),
                 [](const Relation& r) { return r.contains(0, 0) && r.contains(2, 0); });
    CHECK(res.set.solutions == expected);

    q.required = {{0, 5}};
    CHECK(thrown_kind([&] { solve(q); }) == ErrorKind::universe_mismatch);
}

TEST_CASE("solver errors")
{
    auto looped = Graph::from_edges(2, {{0, 0}, {0, 1}});
    CHECK(thrown_kind([&] { solve(query(looped, complete(2), Mode::weak)); }) == ErrorKind::has_loops);
    CHECK(thrown_kind([&] { for_each_solution(query(looped, complete(2), Mode::weak), [](const Relation&) {
              return true;
          }); }) == ErrorKind::has_loops);
    CHECK(thrown_kind([] { solve(query(empty_graph(solver_vertex_limit + 1), complete(1))); }) ==
          ErrorKind::cap_exceeded);
}

TEST_CASE("raw search stops on request")
{
    std::size_t seen = 0;
    auto st = for_each_solution(query(cycle(6), complete(2)), [&](const Relation&) { return ++seen < 4; });
    CHECK(st.stopped);
    CHECK(seen == 4);
}

TEST_CASE("complete sources are decided without search")
{
    CHECK(!decide_complete_source(path(2), complete(2), Mode::strong, DomainConstraint::any));
    for (std::size_t k = 1; k <= 3; ++k)
        for (std::size_t m = 1; m <= 4; ++m) {
            testkit::NaiveTable strong(complete(k), m, Mode::strong);
            testkit::NaiveTable weak(complete(k), m, Mode::weak);
            for (const auto& h : graphs_of_order(m))
                for (auto domain : {DomainConstraint::any, DomainConstraint::full}) {
                    for (auto mode : {Mode::strong, Mode::weak}) {
                        auto d = decide_complete_source(complete(k), h, mode, domain);
                        REQUIRE(d);
                        auto naive = (mode == Mode::strong ? strong : weak).solutions(h, domain);
                        REQUIRE(d->solvable == !naive.empty());
                        if (d->solvable) {
                            REQUIRE(d->witness);
                            REQUIRE(std::binary_search(naive.begin(), naive.end(), *d->witness));
                        }
                    }
                }
        }
}

TEST_CASE("weak composition from K1 yields only edgeless graphs")
{
    for (auto domain : {DomainConstraint::any, DomainConstraint::full}) {
        auto d = decide_complete_source(complete(1), complete(2), Mode::weak, domain);
        REQUIRE(d);
        CHECK(!d->solvable);
        CHECK(testkit::naive_solutions(complete(1), complete(2), Mode::weak, domain).empty());
    }
    auto d = decide_complete_source(complete(1), empty_graph(3), Mode::weak, DomainConstraint::full);
    REQUIRE(d);
    CHECK(d->solvable);
}

TEST_CASE("solution sets are closed under sandwiching")
{
    for (const auto& [g, h] : {std::pair{cycle(3), complete(2)}, std::pair{path(3), path(1)},
                               std::pair{cycle(4), complete(2)}, std::pair{cycle(5), cycle(5)}}) {
        auto sols = solve(query(g, h)).set.solutions;
        for (const auto& lo : sols)
            for (const auto& hi : sols) {
                if (!lo.is_subset_of(hi) || lo == hi)
                    continue;
                // Walk every R with lo <= R <= hi.
                std::vector<Pair> extra;
                for (auto p : hi.pairs())
                    if (!lo.contains(p.first, p.second))
                        extra.push_back(p);
                REQUIRE(extra.size() < 16);
                for (std::uint32_t mask = 0; mask < (1U << extra.size()); ++mask) {
                    auto pairs = lo.pairs();
                    for (std::size_t i = 0; i < extra.size(); ++i)
                        if (mask >> i & 1U)
                            pairs.push_back(extra[i]);
                    auto mid = Relation::from_pairs(lo.domain_size(), lo.image_size(), pairs);
                    REQUIRE(std::binary_search(sols.begin(), sols.end(), mid));
                }
            }
    }
}

TEST_CASE("subgraph reduction examples")
{
    auto c4 = cycle(4);
    auto k2 = complete(2);
    auto id = subgraph_reduce(c4, k2, VertexSet(4), VertexSet(2), Relation(4, 2));
    CHECK(id.g == c4);
    CHECK(id.h == k2);
    CHECK(id.g_vertices == std::vector<Vertex>{0, 1, 2, 3});

    // Wheel hub onto the apex of a cone over P2: both residuals vanish.
    auto wheel = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {4, 1}});
    auto cone = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}});
    auto hub = subgraph_reduce(wheel, cone, make_set(5, {0}), make_set(4, {0}), Relation::from_pairs(5, 4, {{0, 0}}));
    CHECK(hub.g.order() == 0);
    CHECK(hub.h.order() == 0);

    CHECK(thrown_kind([&] {
              subgraph_reduce(c4, k2, make_set(4, {0}), make_set(2, {0}), Relation::from_pairs(4, 2, {{1, 0}}));
          }) == ErrorKind::precondition);
    // Middle of P2 onto an end of P2: the other end is left isolated in H.
    CHECK(thrown_kind([] {
              subgraph_reduce(path(2), path(2), make_set(3, {1}), make_set(3, {0}),
                              Relation::from_pairs(3, 3, {{1, 0}}));
          }) == ErrorKind::precondition);
}

TEST_CASE("subgraph reduction: extending a residual solution can fail")
{
    auto k2 = complete(2);
    auto res = subgraph_reduce(k2, k2, make_set(2, {1}), make_set(2, {1}), Relation::from_pairs(2, 2, {{1, 1}}));
    CHECK(res.g.order() == 0);
    CHECK(res.h.order() == 0);
    CHECK(!testkit::compose_by_definition(k2, Relation::from_pairs(2, 2, {{1, 1}})));
}

TEST_CASE("subgraph reduction: solutions restrict to the residual")
{
    testkit::Rng rng(72);
    std::size_t checked = 0;
    for (int i = 0; i < 400; ++i) {
        auto g = testkit::random_graph(rng, 2 + rng() % 4, 0.5);
        auto r = testkit::random_onto_relation(rng, g.order(), 1 + rng() % 4, 0.35);
        auto h = apply_strong(g, r);
        VertexSet s(g.order());
        for (Vertex x = 0; x < g.order(); ++x)
            if (rng() % 3 == 0 && r.image_of(x).any())
                s.set(x);
        const auto d = r.image_of(s);
        std::vector<VertexSet> rows(g.order(), VertexSet(h.order()));
        for (auto x = s.find_first(); x != VertexSet::npos; x = s.find_next(x))
            rows[x] = r.image_of(x);
        auto partial = Relation::from_rows(h.order(), rows);
        Residual res;
        try {
            res = subgraph_reduce(g, h, s, d, partial);
        } catch (const Error& e) {
            REQUIRE(e.kind() == ErrorKind::precondition);
            continue;
        }
        ++checked;
        REQUIRE(apply_strong(res.g, sub_relation(r, res.g_vertices, res.h_vertices)) == res.h);
    }
    CHECK(checked > 50);
}

TEST_CASE("homomorphism reduction")
{
    auto u = reduce_hom_to_fulrel(complete(2), complete(3));
    CHECK(u.order() == 5);
    auto q = query(u, complete(3), Mode::strong, DomainConstraint::full, Enumeration::exists);
    CHECK(solve(q).set.solutions.size() == 1);

    auto v = reduce_hom_to_fulrel(complete(3), complete(2));
    auto res = solve(query(v, complete(2), Mode::strong, DomainConstraint::full, Enumeration::exists));
    CHECK(res.set.solutions.empty());
    REQUIRE(res.certificate);
    CHECK(res.certificate->kind == CertificateKind::chromatic);

    CHECK(reduce_hom_to_fulrel(Graph(0), cycle(5)) == cycle(5));

    for (const auto& g : graphs_up_to(3))
        for (const auto& h : graphs_up_to(3)) {
            auto w = solve(query(reduce_hom_to_fulrel(g, h), h, Mode::strong, DomainConstraint::full,
                                 Enumeration::exists));
            REQUIRE(w.set.complete);
            REQUIRE(w.set.solutions.empty() != testkit::hom_exists(g, h));
        }
}

TEST_CASE("surjective homomorphism reduction")
{
    CHECK(reduce_fulrel_to_shom(complete(2), Graph(3)).order() == 6);
    for (const auto& g : graphs_up_to(3))
        for (const auto& h : graphs_up_to(3)) {
            auto blown = reduce_fulrel_to_shom(g, h);
            REQUIRE(blown.order() == g.order() * h.order());
            REQUIRE(is_isomorphic(thin_quotient(blown).thin, thin_quotient(g).thin));
            auto w = solve(query(g, h, Mode::strong, DomainConstraint::full, Enumeration::exists));
            REQUIRE(w.set.solutions.empty() != testkit::onto_hom_exists(blown, h));
        }
}

TEST_CASE("enum names")
{
    CHECK(std::string(to_string(Mode::weak)) == "weak");
    CHECK(std::string(to_string(DomainConstraint::full)) == "full");
    CHECK(std::string(to_string(Enumeration::maximal)) == "maximal");
    CHECK(std::string(to_string(CertificateKind::complete_char)) == "complete-char");
}
