#pragma once

#include <cstddef>
#include <vector>

#include "critgrp/abelian_group.hpp"
#include "critgrp/graph.hpp"

namespace critgrp {

/// Integer chip count per vertex of a fixed graph.
struct Divisor {
    std::vector<Integer> values;

    Divisor() = default;
    explicit Divisor(std::size_t n) : values(n, Integer(0)) {}
    explicit Divisor(std::vector<Integer> v) : values(std::move(v)) {}
    Divisor(std::initializer_list<long> v);

    std::size_t size() const { return values.size(); }
    Integer& operator[](Vertex v) { return values.at(v); }
    const Integer& operator[](Vertex v) const { return values.at(v); }

    Divisor& operator+=(const Divisor& o);
    Divisor& operator-=(const Divisor& o);
    friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
    friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
    friend Divisor operator*(const Integer& k, Divisor d);
    friend bool operator==(const Divisor&, const Divisor&) = default;
};

/// How many times each vertex topples; negative means reverse toppling.
struct FiringScript {
    std::vector<Integer> counts;
};

Integer degree(const Divisor& d);

/// div f, equal to L * f.
Divisor principal_divisor(const Multigraph& g, const FiringScript& f);

struct BurnResult {
    std::vector<bool> burnt;
    std::vector<Vertex> order; // burning order, starting with q
    bool all_burnt = false;
};

/// Dhar's burning process from q. Requires d(v) >= 0 for v != q.
BurnResult dhar_burn(const Multigraph& g, const Divisor& d, Vertex q);

/// Both reducedness conditions, with condition (2) decided by burning.
bool is_q_reduced(const Multigraph& g, const Divisor& d, Vertex q);

/// Condition (2) checked literally over every nonempty A subset of V\{q}.
/// Exponential; refuses graphs with more than `vertex_cap` vertices.
bool is_q_reduced_by_subsets(const Multigraph& g, const Divisor& d, Vertex q, std::size_t vertex_cap = 16);

/// The unique q-reduced divisor linearly equivalent to d. G must be connected.
Divisor q_reduce(const Multigraph& g, const Divisor& d, Vertex q);

/// d1 ~ d2, decided by comparing 0-reduced forms.
bool are_equivalent(const Multigraph& g, const Divisor& d1, const Divisor& d2);

/// Every q-reduced divisor of degree 0.
std::vector<Divisor> reduced_divisors_of_degree_zero(const Multigraph& g, Vertex q);

inline constexpr std::size_t kDefaultGroupCap = 512;

/// Jac(G) from the group of degree-0 q-reduced divisors under reduced
/// addition. Refuses groups larger than `group_cap`.
AbelianGroup jacobian_by_reduced_divisors(const Multigraph& g, Vertex q = 0,
                                          std::size_t group_cap = kDefaultGroupCap);

/// Order of the class of d in Jac(G); d must have degree 0.
Integer divisor_class_order(const Multigraph& g, const Divisor& d);

/// Witnesses D_i = i(v) - i(q), 0 <= i < deg(v), for a maximum-degree
/// vertex v. `verified` is true when some q != v makes every D_i q-reduced,
/// in which case the class of D_1 has order >= bound.
struct LowerBoundWitness {
    std::size_t bound = 0;
    Vertex v = 0;
    Vertex q = 0;
    std::vector<Divisor> witnesses;
    bool verified = false;
    Integer generator_order = 0; // order of [D_1]
};

LowerBoundWitness exponent_lower_bound_witness(const Multigraph& g);

} // namespace critgrp
