#include "cvd/exact.hpp"

#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>

namespace cvd {

Validation validate(const Graph& g, const CostFn& c, const VertexList& x) {
    Validation out;
    out.cost = c.total(x);
    Bitset keep = g.all_vertices();
    for (Vertex v : x) keep.reset(v);
    out.is_hitting = is_cluster(g, keep);
    if (!out.is_hitting) return out;
    out.is_minimal = true;
    for (Vertex v : x) {
        keep.set(v);
        bool still = is_cluster(g, keep);
        keep.reset(v);
        if (still) {
            out.is_minimal = false;
            break;
        }
    }
    return out;
}

namespace {

using Mask = std::uint32_t;

std::vector<Mask> closed_masks(const Graph& g) {
    std::vector<Mask> closed(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        Mask m = Mask{1} << v;
        const auto& nb = g.neighbors(v);
        for (auto u = nb.find_first(); u != Bitset::npos; u = nb.find_next(u)) m |= Mask{1} << u;
        closed[v] = m;
    }
    return closed;
}

bool cluster_mask(const std::vector<Mask>& closed, Mask keep) {
    Mask unseen = keep;
    while (unseen) {
        int v = std::countr_zero(unseen);
        Mask block = closed[v] & keep;
        for (Mask rest = block; rest; rest &= rest - 1)
            if ((closed[std::countr_zero(rest)] & keep) != block) return false;
        unseen &= ~block;
    }
    return true;
}

// Some induced P3 inside `keep`, as three vertex indices.
std::optional<std::array<int, 3>> p3_mask(const std::vector<Mask>& closed, Mask keep) {
    for (Mask unseen = keep; unseen; unseen &= unseen - 1) {
        int v = std::countr_zero(unseen);
        Mask block = closed[v] & keep;
        for (Mask rest = block & ~(Mask{1} << v); rest; rest &= rest - 1) {
            int u = std::countr_zero(rest);
            Mask other = closed[u] & keep;
            if (other == block) continue;
            if (Mask only_v = block & ~other) return std::array<int, 3>{u, v, std::countr_zero(only_v)};
            return std::array<int, 3>{v, u, std::countr_zero(other & ~block)};
        }
    }
    return std::nullopt;
}

// Costs rescaled to a common denominator: integer weights when they fit in 64 bits.
struct Scaled {
    mpz_class denominator = 1;
    std::optional<std::vector<std::int64_t>> small;
};

Scaled scale(const CostFn& c) {
    Scaled s;
    for (const auto& q : c.values()) mpz_lcm(s.denominator.get_mpz_t(), s.denominator.get_mpz_t(), q.get_den_mpz_t());
    std::vector<std::int64_t> w;
    mpz_class sum = 0;
    const mpz_class limit = mpz_class(std::numeric_limits<std::int64_t>::max() / 4);
    for (const auto& q : c.values()) {
        mpz_class x = q.get_num() * (s.denominator / q.get_den());
        sum += x;
        if (sum > limit) return s;
        w.push_back(x.get_si());
    }
    s.small = std::move(w);
    return s;
}

bool better_tie(Mask a, Mask b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    Mask d = a ^ b;
    return d && (a & (d & (~d + 1)));
}

template <class W>
Mask exhaustive(const std::vector<Mask>& closed, const std::vector<W>& w) {
    const std::size_t n = closed.size();
    const Mask full = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
    bool have = false;
    W best{};
    Mask best_mask = 0;
    for (std::uint64_t x = 0; x <= full; ++x) {
        Mask mask = static_cast<Mask>(x);
        W cost{};
        for (Mask m = mask; m; m &= m - 1) cost += w[std::countr_zero(m)];
        if (have && cost > best) continue;
        if (!cluster_mask(closed, full & ~mask)) continue;
        if (!have || cost < best || better_tie(mask, best_mask)) {
            have = true;
            best = cost;
            best_mask = mask;
        }
    }
    return best_mask;
}

template <class W>
void branch(const std::vector<Mask>& closed, const std::vector<W>& w, Mask keep, const W& spent, W& best) {
    if (spent >= best) return;
    auto p3 = p3_mask(closed, keep);
    if (!p3) {
        best = spent;
        return;
    }
    for (int x : *p3) branch(closed, w, keep & ~(Mask{1} << x), W(spent + w[x]), best);
}

template <class W>
W branching(const std::vector<Mask>& closed, const std::vector<W>& w) {
    const std::size_t n = closed.size();
    W total{};
    for (const auto& x : w) total += x;
    W best = total + 1;
    branch(closed, w, n == 32 ? ~Mask{0} : (Mask{1} << n) - 1, W{}, best);
    return best;
}

void require_small(const Graph& g, const char* who) {
    if (g.order() > kOracleMaxOrder)
        throw OracleRefusal(std::string(who) + ": refusing instance with " + std::to_string(g.order()) + " vertices (limit " +
                            std::to_string(kOracleMaxOrder) + ")");
}

} // namespace

HittingSet cluster_vd_exact(const Graph& g, const CostFn& c) {
    require_small(g, "exact oracle");
    if (c.size() != g.order()) throw ContractViolation("exact oracle: cost vector has wrong length");
    auto closed = closed_masks(g);
    auto scaled = scale(c);
    Mask best = 0;
    if (scaled.small) {
        best = exhaustive(closed, *scaled.small);
    } else {
        std::vector<Rational> w(c.values().begin(), c.values().end());
        best = exhaustive(closed, w);
    }
    HittingSet hs;
    for (Mask m = best; m; m &= m - 1) hs.vertices.push_back(static_cast<Vertex>(std::countr_zero(m)));
    hs.cost = c.total(hs.vertices);
    hs.minimal = validate(g, c, hs.vertices).is_minimal;
    return hs;
}

Rational cluster_vd_branching(const Graph& g, const CostFn& c) {
    if (g.order() > 32) throw OracleRefusal("branching solver: more than 32 vertices");
    if (c.size() != g.order()) throw ContractViolation("branching solver: cost vector has wrong length");
    auto closed = closed_masks(g);
    auto scaled = scale(c);
    if (scaled.small) {
        Rational opt(mpz_class(static_cast<long>(branching(closed, *scaled.small))), scaled.denominator);
        opt.canonicalize();
        return opt;
    }
    std::vector<Rational> w(c.values().begin(), c.values().end());
    return branching(closed, w);
}

Rational exact_opt(const Graph& g, const CostFn& c) { return cluster_vd_exact(g, c).cost; }

} // namespace cvd
