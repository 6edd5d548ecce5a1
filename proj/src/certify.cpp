#include <algorithm>
#include <string>

#include "relgraph/composition.hpp"
#include "relgraph/error.hpp"
#include "relgraph/solver.hpp"

namespace relgraph {

const char* to_string(CertificateKind kind) noexcept
{
    switch (kind) {
    case CertificateKind::components: return "components";
    case CertificateKind::chromatic: return "chromatic";
    case CertificateKind::complete_char: return "complete-char";
    case CertificateKind::path_char: return "path-char";
    case CertificateKind::distance: return "distance";
    case CertificateKind::radius: return "radius";
    case CertificateKind::exhausted: return "exhausted";
    }
    return "?";
}

namespace {

bool is_complete_graph(const Graph& g)
{
    if (g.order() == 0 || g.has_loops())
        return false;
    return g.edge_count() == g.order() * (g.order() - 1) / 2;
}

// Length of the path when g is one.
std::optional<std::size_t> path_length(const Graph& g)
{
    if (g.order() == 0 || g.has_loops() || !is_connected(g) || g.edge_count() != g.order() - 1)
        return std::nullopt;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) > 2)
            return std::nullopt;
    return g.order() - 1;
}

std::string num(std::size_t v)
{
    return v == unreachable ? std::string("inf") : std::to_string(v);
}

long long as_ll(std::size_t v)
{
    return v == unreachable ? -1 : static_cast<long long>(v);
}

struct CliqueCover {
    bool all_cliques = true;
    std::size_t large = 0; // components of the complement with >= 2 vertices
    std::size_t single = 0;
    std::vector<std::vector<Vertex>> parts;
};

CliqueCover complement_cliques(const Graph& h)
{
    CliqueCover out;
    const auto comp = complement(h);
    out.parts = components(comp);
    for (const auto& part : out.parts) {
        for (auto u : part)
            for (auto v : part)
                if (u != v && !comp.adjacent(u, v))
                    out.all_cliques = false;
        (part.size() >= 2 ? out.large : out.single) += 1;
    }
    return out;
}

std::optional<Certificate> check(CertificateKind kind, const Graph& g, const Graph& h, Mode mode,
                                 DomainConstraint domain)
{
    const bool strong = mode == Mode::strong;
    const bool full = domain == DomainConstraint::full;
    switch (kind) {
    case CertificateKind::components: {
        if (!full || !isolated_vertices(g).empty())
            return std::nullopt;
        const auto bg = components(g).size();
        const auto bh = components(h).size();
        if (bg >= bh)
            return std::nullopt;
        return Certificate{kind, as_ll(bg), as_ll(bh),
                           "b0(G) = " + num(bg) + " < b0(H) = " + num(bh) +
                               "; every component of G without isolated vertices covers a connected part of H"};
    }
    case CertificateKind::chromatic: {
        if (!strong || !full || g.has_loops() || h.has_loops())
            return std::nullopt;
        const auto cg = chromatic_number(g);
        const auto ch = chromatic_number(h);
        if (cg <= ch)
            return std::nullopt;
        return Certificate{kind, as_ll(cg), as_ll(ch),
                           "chi(G) = " + num(cg) + " > chi(H) = " + num(ch) +
                               "; a full-domain solution contains a homomorphism G -> H"};
    }
    case CertificateKind::complete_char: {
        auto decision = decide_complete_source(g, h, mode, domain);
        if (!decision || decision->solvable)
            return std::nullopt;
        if (h.has_loops())
            return Certificate{kind, 0, 1, "weak composition never produces loops, H has one"};
        const auto cover = complement_cliques(h);
        const auto k = g.order();
        std::string why;
        long long lhs = 0;
        if (!cover.all_cliques) {
            why = "a component of the complement of H is not complete";
            lhs = -1;
        } else if (!strong && k == 1) {
            why = "K1 has no edge, H has " + std::to_string(h.edge_count());
            lhs = static_cast<long long>(h.edge_count());
        } else if (strong) {
            lhs = static_cast<long long>(cover.parts.size());
            why = "complement of H has " + std::to_string(cover.parts.size()) + " cliques, " +
                  (full ? "need exactly " : "need at most ") + std::to_string(k);
        } else {
            lhs = static_cast<long long>(cover.large);
            why = "complement of H has " + std::to_string(cover.large) + " cliques of order >= 2 and " +
                  std::to_string(cover.single) + " single vertices; K" + std::to_string(k) + (full ? " (full domain)" : "") +
                  " cannot produce that";
        }
        return Certificate{kind, lhs, static_cast<long long>(k), why};
    }
    case CertificateKind::path_char: {
        if (!strong || !full)
            return std::nullopt;
        auto k = path_length(g);
        auto l = path_length(h);
        if (!k || !l || *k >= *l || (*k == 1 && *l == 2))
            return std::nullopt;
        return Certificate{kind, as_ll(*k), as_ll(*l),
                           "P" + num(*k) + " reaches P" + num(*l) + " only if k >= l or (k, l) = (1, 2)"};
    }
    case CertificateKind::distance: {
        if (!strong || !full || g.order() < 2 || !is_connected(g))
            return std::nullopt;
        const auto bound = std::max<std::size_t>(diameter(g), 2);
        const auto dh = h.order() == 0 ? 0 : diameter(h);
        if (dh <= bound)
            return std::nullopt;
        return Certificate{kind, as_ll(dh), as_ll(bound),
                           "diam(H) = " + num(dh) + " > max(diam(G), 2) = " + num(bound)};
    }
    case CertificateKind::radius: {
        if (!strong || !full || g.order() == 0 || h.order() == 0 || !is_connected(g) || !is_connected(h))
            return std::nullopt;
        const auto bound = std::max<std::size_t>(radius(g), 2);
        const auto rh = radius(h);
        if (rh <= bound)
            return std::nullopt;
        return Certificate{kind, as_ll(rh), as_ll(bound),
                           "rad(H) = " + num(rh) + " > max(rad(G), 2) = " + num(bound)};
    }
    case CertificateKind::exhausted:
        return std::nullopt;
    }
    return std::nullopt;
}

constexpr CertificateKind certificate_order[] = {
    CertificateKind::components, CertificateKind::chromatic, CertificateKind::complete_char,
    CertificateKind::path_char,  CertificateKind::distance,  CertificateKind::radius,
};

} // namespace

std::optional<Certificate> certify(const Graph& g, const Graph& h, Mode mode, DomainConstraint domain)
{
    if (mode == Mode::weak && g.has_loops())
        throw Error(ErrorKind::has_loops, "weak composition needs a simple source graph");
    for (auto kind : certificate_order)
        if (auto c = check(kind, g, h, mode, domain))
            return c;
    return std::nullopt;
}

bool recheck(const Certificate& c, const Graph& g, const Graph& h, Mode mode, DomainConstraint domain)
{
    if (c.kind == CertificateKind::exhausted)
        return false;
    return check(c.kind, g, h, mode, domain).has_value();
}

std::optional<CompleteDecision> decide_complete_source(const Graph& g, const Graph& h, Mode mode,
                                                       DomainConstraint domain)
{
    if (!is_complete_graph(g))
        return std::nullopt;
    const auto k = g.order();
    const auto m = h.order();
    const bool full = domain == DomainConstraint::full;
    CompleteDecision out;
    std::vector<Pair> pairs;

    if (mode == Mode::strong) {
        if (h.has_loops())
            return std::nullopt;
        // Each target has exactly one preimage; targets sharing it are the
        // independent parts of a complete multipartite H.
        const auto cover = complement_cliques(h);
        const auto c = cover.parts.size();
        out.solvable = cover.all_cliques && (full ? c == k : c <= k);
        if (out.solvable) {
            for (std::size_t i = 0; i < c; ++i)
                for (auto u : cover.parts[i])
                    pairs.emplace_back(i, u);
            out.witness = Relation::from_pairs(k, m, pairs);
        }
        return out;
    }

    if (h.has_loops())
        return out;
    if (k == 1) {
        out.solvable = h.edge_count() == 0 && (!full || m >= 1);
        if (out.solvable) {
            for (Vertex u = 0; u < m; ++u)
                pairs.emplace_back(0, u);
            out.witness = Relation::from_pairs(k, m, pairs);
        }
        return out;
    }
    // Targets with a single preimage i form an independent set adjacent to
    // everything else; targets with two or more preimages are universal.
    const auto cover = complement_cliques(h);
    out.solvable = cover.all_cliques && cover.large <= k && (!full || cover.large == k || cover.single >= 1);
    if (out.solvable) {
        std::size_t next = 0;
        for (const auto& part : cover.parts) {
            if (part.size() >= 2) {
                for (auto u : part)
                    pairs.emplace_back(next, u);
                ++next;
            } else {
                for (Vertex i = 0; i < k; ++i)
                    pairs.emplace_back(i, part[0]);
            }
        }
        std::sort(pairs.begin(), pairs.end());
        out.witness = Relation::from_pairs(k, m, pairs);
    }
    return out;
}

} // namespace relgraph
