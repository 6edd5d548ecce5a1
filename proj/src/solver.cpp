#include "relgraph/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <thread>

#include "relgraph/composition.hpp"
#include "relgraph/error.hpp"

namespace relgraph {

const char* to_string(Mode mode) noexcept
{
    return mode == Mode::strong ? "strong" : "weak";
}

const char* to_string(DomainConstraint domain) noexcept
{
    return domain == DomainConstraint::full ? "full" : "any";
}

const char* to_string(Enumeration enumeration) noexcept
{
    switch (enumeration) {
    case Enumeration::exists: return "exists";
    case Enumeration::all: return "all";
    case Enumeration::minimal: return "minimal";
    case Enumeration::maximal: return "maximal";
    }
    return "?";
}

Limits default_limits()
{
    Limits limits;
    auto read = [](const char* name) -> std::uint64_t {
        const char* raw = std::getenv(name);
        if (!raw || !*raw)
            return 0;
        char* end = nullptr;
        auto v = std::strtoull(raw, &end, 10);
        return (end && *end == '\0') ? v : 0;
    };
    if (auto v = read("RELGRAPH_NODE_BUDGET"))
        limits.node_budget = v;
    if (auto v = read("RELGRAPH_TIME_BUDGET_MS"))
        limits.time_budget = std::chrono::milliseconds(v);
    return limits;
}

namespace {

using Mask = std::uint64_t;
using Columns = std::vector<Mask>;
using Clock = std::chrono::steady_clock;

struct Budget {
    std::atomic<std::uint64_t> nodes{0};
    std::uint64_t limit;
    Clock::time_point deadline;
    std::atomic<bool> exhausted{false};

    explicit Budget(const Limits& l) : limit(l.node_budget), deadline(Clock::now() + l.time_budget) {}

    bool charge()
    {
        if (exhausted.load(std::memory_order_relaxed))
            return false;
        auto k = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (k > limit || ((k & 1023) == 0 && Clock::now() > deadline)) {
            exhausted.store(true, std::memory_order_relaxed);
            return false;
        }
        return true;
    }
};

struct Problem {
    std::size_t n = 0;
    std::size_t m = 0;
    Mask full = 0;
    Mask looped = 0;
    std::vector<Mask> nbr;
    std::vector<std::vector<char>> hadj;
    std::vector<Mask> required;
    Mode mode = Mode::strong;

    Mask nbr_of(Mask s) const
    {
        Mask out = 0;
        while (s) {
            out |= nbr[std::countr_zero(s)];
            s &= s - 1;
        }
        return out;
    }

    bool strong() const { return mode == Mode::strong; }
};

Problem compile(const SolveQuery& q)
{
    Problem p;
    p.n = q.g.order();
    p.m = q.h.order();
    p.mode = q.mode;
    p.full = p.n == 64 ? ~Mask{0} : ((Mask{1} << p.n) - 1);
    p.nbr.resize(p.n);
    for (Vertex x = 0; x < p.n; ++x) {
        const auto& row = q.g.neighbors(x);
        for (auto y = row.find_first(); y != VertexSet::npos; y = row.find_next(y))
            p.nbr[x] |= Mask{1} << y;
        if (q.g.has_loop(x))
            p.looped |= Mask{1} << x;
    }
    p.hadj.assign(p.m, std::vector<char>(p.m, 0));
    for (Vertex b = 0; b < p.m; ++b)
        for (Vertex c = 0; c < p.m; ++c)
            p.hadj[b][c] = q.h.adjacent(b, c);
    p.required.assign(p.m, 0);
    for (auto [x, b] : q.required)
        p.required[b] |= Mask{1} << x;
    return p;
}

// Most constrained first: descending degree in H, ties by index.
std::vector<Vertex> column_order(const Graph& h, std::vector<Vertex> cols)
{
    std::stable_sort(cols.begin(), cols.end(), [&](Vertex a, Vertex b) { return h.degree(a) > h.degree(b); });
    return cols;
}

// Depth-first search over the columns C_b = R^{-1}(b) listed in `order`.
// allowed_[d][k] is the set of sources still admissible for order[k] once the
// first d columns are placed.
class Search {
public:
    using Leaf = std::function<bool(const Columns&)>;

    Search(const Problem& p, const std::vector<Vertex>& order, bool enforce_full, Budget& budget, Leaf leaf)
        : p_(p), order_(order), enforce_full_(enforce_full), budget_(budget), leaf_(std::move(leaf)),
          assign_(p.m, 0), nbr_(p.m, 0), allowed_(order.size() + 1, std::vector<Mask>(order.size(), 0)),
          covered_(order.size() + 1, 0)
    {
        Mask cover = 0;
        for (std::size_t k = 0; k < order_.size(); ++k) {
            const auto b = order_[k];
            Mask a = p_.full;
            if (p_.strong() && !p_.hadj[b][b])
                a &= ~p_.looped;
            allowed_[0][k] = a;
            cover |= a;
            if (p_.required[b] & ~a)
                feasible_ = false;
        }
        if (enforce_full_ && cover != p_.full)
            feasible_ = false;
    }

    // Values the first column may take, in search order.
    std::vector<Mask> first_candidates() const
    {
        std::vector<Mask> out;
        if (!feasible_ || order_.empty())
            return out;
        const auto b = order_[0];
        const Mask req = p_.required[b];
        const Mask free = allowed_[0][0] & ~req;
        Mask s = 0;
        do {
            if (Mask c = s | req)
                out.push_back(c);
            s = (s - free) & free;
        } while (s != 0);
        return out;
    }

    void run()
    {
        if (feasible_)
            descend(0);
    }

    void run_first(Mask c)
    {
        if (feasible_ && budget_.charge())
            try_value(0, c);
        else if (feasible_)
            stop_ = true;
    }

    bool stopped() const { return stop_; }

private:
    void descend(std::size_t d)
    {
        if (d == order_.size()) {
            if (enforce_full_ && covered_[d] != p_.full)
                return;
            if (!leaf_(assign_))
                stop_ = true;
            return;
        }
        const auto b = order_[d];
        const Mask req = p_.required[b];
        const Mask allow = allowed_[d][d];
        if (req & ~allow)
            return;
        const Mask free = allow & ~req;
        Mask s = 0;
        do {
            if (Mask c = s | req) {
                if (!budget_.charge()) {
                    stop_ = true;
                    return;
                }
                try_value(d, c);
                if (stop_)
                    return;
            }
            s = (s - free) & free;
        } while (s != 0);
    }

    void try_value(std::size_t d, Mask c)
    {
        const auto b = order_[d];
        const Mask nc = p_.nbr_of(c);
        if (p_.strong() && (((nc & c) != 0) != (p_.hadj[b][b] != 0)))
            return;
        // Non-edges to placed columns are excluded through allowed_.
        for (std::size_t e = 0; e < d; ++e) {
            const auto other = order_[e];
            if (p_.hadj[b][other] && !(nc & assign_[other]))
                return;
        }
        Mask cover = covered_[d] | c;
        auto& next = allowed_[d + 1];
        for (std::size_t f = d + 1; f < order_.size(); ++f) {
            const auto col = order_[f];
            Mask a = allowed_[d][f];
            if (!p_.hadj[b][col])
                a &= ~nc;
            if (a == 0 || (p_.required[col] & ~a))
                return;
            if (p_.hadj[b][col] && !(nc & a))
                return;
            if (a != allowed_[d][f]) {
                for (std::size_t e = 0; e < d; ++e) {
                    const auto other = order_[e];
                    if (p_.hadj[other][col] && !(nbr_[other] & a))
                        return;
                }
                if (p_.strong() && p_.hadj[col][col] && !(p_.nbr_of(a) & a))
                    return;
            }
            next[f] = a;
            cover |= a;
        }
        if (enforce_full_ && cover != p_.full)
            return;
        assign_[b] = c;
        nbr_[b] = nc;
        covered_[d + 1] = covered_[d] | c;
        descend(d + 1);
        assign_[b] = 0;
        nbr_[b] = 0;
    }

    const Problem& p_;
    const std::vector<Vertex>& order_;
    bool enforce_full_;
    Budget& budget_;
    Leaf leaf_;
    Columns assign_;
    std::vector<Mask> nbr_;
    std::vector<std::vector<Mask>> allowed_;
    std::vector<Mask> covered_;
    bool feasible_ = true;
    bool stop_ = false;
};

// Solutions over `order` in search order. With several workers the first
// column's candidates are dealt round-robin and results are merged in
// candidate order, which reproduces the single-worker sequence.
std::vector<Columns> collect(const Problem& p, const std::vector<Vertex>& order, bool enforce_full,
                             bool first_only, unsigned workers, Budget& budget)
{
    std::vector<Columns> out;
    auto single = [&](std::vector<Columns>& sink) {
        return [&sink, first_only](const Columns& cols) {
            sink.push_back(cols);
            return !first_only;
        };
    };
    if (workers <= 1 || order.empty()) {
        Search s(p, order, enforce_full, budget, single(out));
        s.run();
        return out;
    }
    const auto candidates = Search(p, order, enforce_full, budget, nullptr).first_candidates();
    std::vector<std::vector<Columns>> parts(candidates.size());
    std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
    auto work = [&](unsigned w) {
        for (std::size_t i = w; i < candidates.size(); i += workers) {
            if (first_only && i > best.load())
                continue;
            if (budget.exhausted.load())
                return;
            Search s(p, order, enforce_full, budget, single(parts[i]));
            s.run_first(candidates[i]);
            if (first_only && !parts[i].empty()) {
                auto cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back(work, w);
    for (auto& t : pool)
        t.join();
    for (auto& part : parts) {
        for (auto& cols : part) {
            out.push_back(std::move(cols));
            if (first_only)
                return out;
        }
    }
    return out;
}

struct Piece {
    Columns cols; // only this component's columns are set
    Mask used = 0;
    Mask nbr = 0;
};

// Cross-component pairs are non-edges of H, so pieces from different
// components must keep their source sets out of each other's neighbourhoods.
class Combiner {
public:
    Combiner(const Problem& p, const std::vector<std::vector<Piece>>& pieces, bool enforce_full, Budget& budget,
             Search::Leaf leaf)
        : p_(p), pieces_(pieces), enforce_full_(enforce_full), budget_(budget), leaf_(std::move(leaf)),
          chosen_(pieces.size(), nullptr)
    {
    }

    void run() { step(0, 0, 0); }
    bool stopped() const { return stop_; }

private:
    void step(std::size_t i, Mask used, Mask nbr)
    {
        if (i == pieces_.size()) {
            if (enforce_full_ && used != p_.full)
                return;
            Columns cols(p_.m, 0);
            for (const auto* piece : chosen_)
                for (Vertex b = 0; b < p_.m; ++b)
                    cols[b] |= piece->cols[b];
            if (!leaf_(cols))
                stop_ = true;
            return;
        }
        for (const auto& piece : pieces_[i]) {
            if (!budget_.charge()) {
                stop_ = true;
                return;
            }
            if ((piece.used & nbr) || (piece.nbr & used))
                continue;
            chosen_[i] = &piece;
            step(i + 1, used | piece.used, nbr | piece.nbr);
            if (stop_)
                return;
        }
    }

    const Problem& p_;
    const std::vector<std::vector<Piece>>& pieces_;
    bool enforce_full_;
    Budget& budget_;
    Search::Leaf leaf_;
    std::vector<const Piece*> chosen_;
    bool stop_ = false;
};

void validate_query(const SolveQuery& q)
{
    if (q.g.order() > solver_vertex_limit)
        throw Error(ErrorKind::cap_exceeded, "solver handles at most " + std::to_string(solver_vertex_limit) +
                                                 " source vertices");
    if (q.mode == Mode::weak && q.g.has_loops())
        throw Error(ErrorKind::has_loops, "weak composition needs a simple source graph");
    for (auto [x, b] : q.required)
        if (x >= q.g.order() || b >= q.h.order())
            throw Error(ErrorKind::universe_mismatch, "required pair outside the instance universes");
    if (q.limits.node_budget == 0 || q.limits.time_budget.count() <= 0)
        throw Error(ErrorKind::precondition, "budgets must be positive");
}

// Runs the search and feeds every solution to `leaf` (search order).
// Returns false if the budget ran out.
bool search(const SolveQuery& q, bool first_only, unsigned workers, Budget& budget, const Search::Leaf& leaf,
            bool& stopped)
{
    stopped = false;
    if (q.mode == Mode::weak && q.h.has_loops())
        return true;
    const auto p = compile(q);
    const bool full = q.domain == DomainConstraint::full;
    auto comps = components(q.h);
    if (!q.split_components || comps.size() <= 1) {
        std::vector<Vertex> all(p.m);
        for (Vertex b = 0; b < p.m; ++b)
            all[b] = b;
        const auto order = column_order(q.h, all);
        if (workers <= 1) {
            Search s(p, order, full, budget, leaf);
            s.run();
            stopped = s.stopped() && !budget.exhausted.load();
        } else {
            for (const auto& cols : collect(p, order, full, first_only, workers, budget)) {
                if (!leaf(cols)) {
                    stopped = true;
                    break;
                }
            }
        }
        return !budget.exhausted.load();
    }
    std::vector<std::vector<Piece>> pieces;
    for (const auto& comp : comps) {
        const auto order = column_order(q.h, comp);
        auto sols = collect(p, order, false, false, workers, budget);
        if (budget.exhausted.load())
            return false;
        std::vector<Piece> list;
        list.reserve(sols.size());
        for (auto& cols : sols) {
            Piece piece{std::move(cols)};
            for (auto b : comp)
                piece.used |= piece.cols[b];
            piece.nbr = p.nbr_of(piece.used);
            list.push_back(std::move(piece));
        }
        if (list.empty())
            return true;
        pieces.push_back(std::move(list));
    }
    Combiner c(p, pieces, full, budget, leaf);
    c.run();
    stopped = c.stopped() && !budget.exhausted.load();
    return !budget.exhausted.load();
}

Relation to_relation(const Columns& cols, std::size_t n)
{
    std::vector<VertexSet> rows(n, VertexSet(cols.size()));
    for (Vertex b = 0; b < cols.size(); ++b) {
        Mask s = cols[b];
        while (s) {
            rows[std::countr_zero(s)].set(b);
            s &= s - 1;
        }
    }
    return Relation::from_rows(cols.size(), std::move(rows));
}

bool satisfies(const SolveQuery& q, const Relation& r)
{
    if (!r.has_full_image())
        return false;
    if (q.domain == DomainConstraint::full && !r.has_full_domain())
        return false;
    for (auto [x, b] : q.required)
        if (!r.contains(x, b))
            return false;
    const auto image = q.mode == Mode::strong ? apply_strong(q.g, r) : apply_weak(q.g, r);
    return image == q.h;
}

} // namespace

SearchStatus for_each_solution(const SolveQuery& q, const std::function<bool(const Relation&)>& visit)
{
    validate_query(q);
    Budget budget(q.limits);
    const auto n = q.g.order();
    bool stopped = false;
    bool complete = search(q, false, 1, budget, [&](const Columns& cols) { return visit(to_relation(cols, n)); },
                           stopped);
    return {complete, stopped, budget.nodes.load()};
}

SolveResult solve(const SolveQuery& q)
{
    validate_query(q);
    SolveResult result;
    auto& set = result.set;
    const bool first_only = q.enumeration == Enumeration::exists;

    if (q.use_certificates) {
        if (auto cert = certify(q.g, q.h, q.mode, q.domain)) {
            result.certificate = std::move(cert);
            return result;
        }
        if (first_only && q.required.empty()) {
            if (auto decision = decide_complete_source(q.g, q.h, q.mode, q.domain);
                decision && decision->solvable && decision->witness) {
                if (!satisfies(q, *decision->witness))
                    throw std::logic_error("complete-graph witness does not solve the instance");
                set.solutions.push_back(*decision->witness);
                return result;
            }
        }
    }

    Budget budget(q.limits);
    const auto n = q.g.order();
    std::vector<Relation> found;
    bool stopped = false;
    set.complete = search(
        q, first_only, std::max(1u, q.limits.workers), budget,
        [&](const Columns& cols) {
            found.push_back(to_relation(cols, n));
            return !first_only;
        },
        stopped);
    set.nodes = budget.nodes.load();
    if (first_only && !found.empty())
        set.complete = true;

    for (const auto& r : found)
        if (!satisfies(q, r))
            throw std::logic_error("solver produced a relation that does not solve the instance");

    std::vector<std::pair<std::vector<Pair>, std::size_t>> keys;
    keys.reserve(found.size());
    for (std::size_t i = 0; i < found.size(); ++i)
        keys.emplace_back(found[i].pairs(), i);
    std::sort(keys.begin(), keys.end());
    for (auto& [key, i] : keys)
        set.solutions.push_back(std::move(found[i]));

    if (q.enumeration == Enumeration::minimal || q.enumeration == Enumeration::maximal) {
        const auto& sols = set.solutions;
        for (std::size_t i = 0; i < sols.size(); ++i) {
            bool is_min = true;
            bool is_max = true;
            for (std::size_t j = 0; j < sols.size() && (is_min || is_max); ++j) {
                if (i == j)
                    continue;
                if (is_min && sols[j].is_subset_of(sols[i]))
                    is_min = false;
                if (is_max && sols[i].is_subset_of(sols[j]))
                    is_max = false;
            }
            if (is_min)
                set.minimal.push_back(i);
            if (is_max)
                set.maximal.push_back(i);
        }
    }

    if (set.complete && set.solutions.empty()) {
        auto cert = certify(q.g, q.h, q.mode, q.domain);
        if (!cert) {
            cert = Certificate{CertificateKind::exhausted, 0, 0,
                               "search exhausted after " + std::to_string(set.nodes) + " nodes"};
        }
        result.certificate = std::move(cert);
    }
    return result;
}

} // namespace relgraph
