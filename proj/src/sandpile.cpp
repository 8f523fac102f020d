#include "critgrp/sandpile.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "critgrp/exact_linalg.hpp"

namespace critgrp {

Divisor::Divisor(std::initializer_list<long> v) {
    for (long x : v) values.emplace_back(x);
}

Divisor& Divisor::operator+=(const Divisor& o) {
    if (o.size() != size()) throw PreconditionError("divisor length mismatch");
    for (std::size_t i = 0; i < size(); ++i) values[i] += o.values[i];
    return *this;
}

Divisor& Divisor::operator-=(const Divisor& o) {
    if (o.size() != size()) throw PreconditionError("divisor length mismatch");
    for (std::size_t i = 0; i < size(); ++i) values[i] -= o.values[i];
    return *this;
}

Divisor operator*(const Integer& k, Divisor d) {
    for (auto& x : d.values) x *= k;
    return d;
}

Integer degree(const Divisor& d) {
    Integer s = 0;
    for (const auto& x : d.values) s += x;
    return s;
}

namespace {

void check_divisor(const Multigraph& g, const Divisor& d) {
    if (d.size() != g.vertex_count()) {
        throw PreconditionError("divisor length " + std::to_string(d.size()) + " does not match vertex count " +
                                std::to_string(g.vertex_count()));
    }
}

void check_vertex(const Multigraph& g, Vertex q) {
    if (q >= g.vertex_count()) {
        throw PreconditionError("vertex " + std::to_string(q) + " out of range");
    }
}

void require_connected(const Multigraph& g) {
    if (!is_connected(g)) throw PreconditionError("graph is disconnected");
}

// Fire every vertex of `in_set` k times at once.
void fire_set(const Multigraph& g, Divisor& d, const std::vector<bool>& in_set, const Integer& k) {
    for (const auto& e : g.edges()) {
        if (in_set[e.u] == in_set[e.v]) continue;
        Vertex inside = in_set[e.u] ? e.u : e.v;
        Vertex outside = in_set[e.u] ? e.v : e.u;
        d.values[inside] -= k;
        d.values[outside] += k;
    }
}

Integer ceil_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

} // namespace

Divisor principal_divisor(const Multigraph& g, const FiringScript& f) {
    if (f.counts.size() != g.vertex_count()) {
        throw PreconditionError("firing script length does not match vertex count");
    }
    Divisor d(g.vertex_count());
    for (const auto& e : g.edges()) {
        Integer diff = f.counts[e.u] - f.counts[e.v];
        d.values[e.u] += diff;
        d.values[e.v] -= diff;
    }
    return d;
}

BurnResult dhar_burn(const Multigraph& g, const Divisor& d, Vertex q) {
    check_divisor(g, d);
    check_vertex(g, q);
    const std::size_t n = g.vertex_count();
    for (Vertex v = 0; v < n; ++v) {
        if (v != q && d[v] < 0) {
            throw PreconditionError("dhar_burn: divisor is negative at vertex " + std::to_string(v));
        }
    }
    const auto mult = g.multiplicities();
    BurnResult r;
    r.burnt.assign(n, false);
    std::vector<std::size_t> fire_edges(n, 0); // edges to burnt vertices
    std::deque<Vertex> queue{q};
    r.burnt[q] = true;
    while (!queue.empty()) {
        Vertex b = queue.front();
        queue.pop_front();
        r.order.push_back(b);
        for (Vertex w = 0; w < n; ++w) {
            if (r.burnt[w] || mult[b][w] == 0) continue;
            fire_edges[w] += mult[b][w];
            if (d[w] < static_cast<unsigned long>(fire_edges[w])) {
                r.burnt[w] = true;
                queue.push_back(w);
            }
        }
    }
    r.all_burnt = r.order.size() == n;
    return r;
}

bool is_q_reduced(const Multigraph& g, const Divisor& d, Vertex q) {
    check_divisor(g, d);
    check_vertex(g, q);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (v != q && d[v] < 0) return false;
    }
    return dhar_burn(g, d, q).all_burnt;
}

bool is_q_reduced_by_subsets(const Multigraph& g, const Divisor& d, Vertex q, std::size_t vertex_cap) {
    check_divisor(g, d);
    check_vertex(g, q);
    const std::size_t n = g.vertex_count();
    if (n > vertex_cap) throw CapExceeded("subset reducedness check: too many vertices");
    for (Vertex v = 0; v < n; ++v) {
        if (v != q && d[v] < 0) return false;
    }
    std::vector<Vertex> others;
    for (Vertex v = 0; v < n; ++v) {
        if (v != q) others.push_back(v);
    }
    const auto mult = g.multiplicities();
    const std::uint64_t subsets = std::uint64_t{1} << others.size();
    std::vector<bool> in_a(n);
    for (std::uint64_t mask = 1; mask < subsets; ++mask) {
        std::fill(in_a.begin(), in_a.end(), false);
        for (std::size_t i = 0; i < others.size(); ++i) {
            if (mask >> i & 1) in_a[others[i]] = true;
        }
        bool has_escape = false;
        for (Vertex v = 0; v < n && !has_escape; ++v) {
            if (!in_a[v]) continue;
            std::size_t outdeg = 0;
            for (Vertex w = 0; w < n; ++w) {
                if (!in_a[w]) outdeg += mult[v][w];
            }
            if (d[v] < static_cast<unsigned long>(outdeg)) has_escape = true;
        }
        if (!has_escape) return false;
    }
    return true;
}

Divisor q_reduce(const Multigraph& g, const Divisor& d, Vertex q) {
    check_divisor(g, d);
    check_vertex(g, q);
    require_connected(g);
    const std::size_t n = g.vertex_count();
    Divisor out = d;

    // Phase 1: make every v != q nonnegative. Fire the balls
    // S_r = {dist(q, .) <= r} from the outside in; firing S_r only feeds
    // layer r+1 and only drains layer r.
    std::vector<std::size_t> dist(n, n);
    std::deque<Vertex> bfs{q};
    dist[q] = 0;
    const auto mult = g.multiplicities();
    std::size_t depth = 0;
    while (!bfs.empty()) {
        Vertex v = bfs.front();
        bfs.pop_front();
        for (Vertex w = 0; w < n; ++w) {
            if (mult[v][w] && dist[w] == n) {
                dist[w] = dist[v] + 1;
                depth = std::max(depth, dist[w]);
                bfs.push_back(w);
            }
        }
    }
    for (std::size_t r = depth; r-- > 0;) {
        Integer times = 0;
        for (Vertex w = 0; w < n; ++w) {
            if (dist[w] != r + 1 || out[w] >= 0) continue;
            std::size_t inward = 0;
            for (Vertex u = 0; u < n; ++u) {
                if (dist[u] == r) inward += mult[w][u];
            }
            times = std::max(times, ceil_div(-out[w], Integer(static_cast<unsigned long>(inward))));
        }
        if (times == 0) continue;
        std::vector<bool> ball(n);
        for (Vertex v = 0; v < n; ++v) ball[v] = dist[v] <= r;
        fire_set(g, out, ball, times);
    }

    // Phase 2: fire the unburnt set until everything burns. Repeating the
    // same firing k times is allowed while every fired vertex stays >= 0.
    for (;;) {
        BurnResult burn = dhar_burn(g, out, q);
        if (burn.all_burnt) return out;
        std::vector<bool> unburnt(n);
        for (Vertex v = 0; v < n; ++v) unburnt[v] = !burn.burnt[v];
        Integer times = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (!unburnt[v]) continue;
            std::size_t outdeg = 0;
            for (Vertex w = 0; w < n; ++w) {
                if (!unburnt[w]) outdeg += mult[v][w];
            }
            if (outdeg == 0) continue;
            Integer k = floor_div(out[v], Integer(static_cast<unsigned long>(outdeg)));
            if (times < 0 || k < times) times = k;
        }
        if (times < 1) throw InternalError("q_reduce: unburnt set cannot fire");
        fire_set(g, out, unburnt, times);
    }
}

bool are_equivalent(const Multigraph& g, const Divisor& d1, const Divisor& d2) {
    check_divisor(g, d1);
    check_divisor(g, d2);
    if (degree(d1) != degree(d2)) return false;
    return q_reduce(g, d1, 0) == q_reduce(g, d2, 0);
}

std::vector<Divisor> reduced_divisors_of_degree_zero(const Multigraph& g, Vertex q) {
    check_vertex(g, q);
    require_connected(g);
    const std::size_t n = g.vertex_count();
    const auto deg = g.degrees();
    std::vector<Vertex> free;
    for (Vertex v = 0; v < n; ++v) {
        if (v != q) free.push_back(v);
    }
    // Candidates satisfy 0 <= d(v) <= deg(v) - 1 off q.
    constexpr std::uint64_t kCandidateCap = 50'000'000;
    std::uint64_t candidates = 1;
    for (Vertex v : free) {
        candidates *= deg[v];
        if (candidates > kCandidateCap) throw CapExceeded("too many candidate reduced divisors");
    }
    std::vector<Divisor> out;
    std::vector<std::size_t> digits(free.size(), 0);
    Divisor d(n);
    for (;;) {
        long total = 0;
        for (std::size_t i = 0; i < free.size(); ++i) {
            d.values[free[i]] = static_cast<long>(digits[i]);
            total += static_cast<long>(digits[i]);
        }
        d.values[q] = -total;
        if (dhar_burn(g, d, q).all_burnt) out.push_back(d);
        std::size_t i = 0;
        for (; i < free.size(); ++i) {
            if (++digits[i] < deg[free[i]]) break;
            digits[i] = 0;
        }
        if (i == free.size()) break;
    }
    return out;
}

AbelianGroup jacobian_by_reduced_divisors(const Multigraph& g, Vertex q, std::size_t group_cap) {
    check_vertex(g, q);
    require_connected(g);
    if (spanning_tree_count(g) > static_cast<unsigned long>(group_cap)) {
        throw CapExceeded("jacobian_by_reduced_divisors: group order exceeds cap " + std::to_string(group_cap));
    }
    const auto elements = reduced_divisors_of_degree_zero(g, q);
    const std::size_t size = elements.size();
    std::map<std::vector<Integer>, std::size_t> index;
    for (std::size_t i = 0; i < size; ++i) index.emplace(elements[i].values, i);

    auto lookup = [&](const Divisor& d) {
        auto it = index.find(d.values);
        if (it == index.end()) throw InternalError("reduced sum is not a listed reduced divisor");
        return it->second;
    };
    std::vector<std::vector<std::size_t>> table(size, std::vector<std::size_t>(size));
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = i; j < size; ++j) {
            table[i][j] = table[j][i] = lookup(q_reduce(g, elements[i] + elements[j], q));
        }
    }
    const std::size_t zero = lookup(Divisor(g.vertex_count()));
    std::vector<std::uint64_t> orders(size);
    for (std::size_t i = 0; i < size; ++i) {
        std::size_t acc = i;
        std::uint64_t k = 1;
        while (acc != zero) {
            acc = table[acc][i];
            if (++k > size) throw InternalError("element order exceeds group size");
        }
        orders[i] = k;
    }
    return AbelianGroup::from_element_orders(orders);
}

Integer divisor_class_order(const Multigraph& g, const Divisor& d) {
    check_divisor(g, d);
    if (degree(d) != 0) throw PreconditionError("class order needs a degree-0 divisor");
    const Integer bound = spanning_tree_count(g);
    const Divisor zero(g.vertex_count());
    Divisor acc = q_reduce(g, d, 0);
    Integer k = 1;
    while (acc != zero) {
        acc = q_reduce(g, acc + d, 0);
        ++k;
        if (k > bound) throw InternalError("class order exceeds group order");
    }
    return k;
}

LowerBoundWitness exponent_lower_bound_witness(const Multigraph& g) {
    const std::size_t n = g.vertex_count();
    if (n < 2) throw PreconditionError("lower bound witness needs at least two vertices");
    require_connected(g);
    const auto deg = g.degrees();
    LowerBoundWitness w;
    w.bound = *std::max_element(deg.begin(), deg.end());
    w.v = static_cast<Vertex>(std::max_element(deg.begin(), deg.end()) - deg.begin());

    auto build = [&](Vertex q) {
        std::vector<Divisor> ds;
        for (std::size_t i = 0; i < w.bound; ++i) {
            Divisor d(n);
            d[w.v] = static_cast<unsigned long>(i);
            d[q] -= static_cast<unsigned long>(i);
            ds.push_back(std::move(d));
        }
        return ds;
    };
    bool first = true;
    for (Vertex q = 0; q < n; ++q) {
        if (q == w.v) continue;
        auto ds = build(q);
        bool ok = std::all_of(ds.begin(), ds.end(), [&](const Divisor& d) { return is_q_reduced(g, d, q); });
        if (ok || first) {
            w.q = q;
            w.witnesses = std::move(ds);
            w.verified = ok;
            first = false;
        }
        if (ok) break;
    }
    Divisor d1(n);
    d1[w.v] = 1;
    d1[w.q] = -1;
    w.generator_order = divisor_class_order(g, d1);
    return w;
}

} // namespace critgrp
