#pragma once

#include <map>
#include <vector>

#include "sv/element.hpp"

namespace sv {

// Highest weight: eigenvalues of L_0, M_0, c on the highest weight vector.
struct Weight {
    Rat h;
    Rat m;
    Rat z;
};

// PBW-ordered product of negative-degree generators applied to the highest
// weight vector. Canonical order: ascending doubled degree, ties broken by
// family rank L < M < Y. The empty monomial is the highest weight vector.
struct Monomial {
    std::vector<BasisIndex> factors;

    // Doubled level: minus the sum of the factors' doubled degrees.
    long long level() const {
        long long d = 0;
        for (const auto& f : factors) d -= grade(f);
        return d;
    }
    bool is_canonical() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Deterministic ordering of monomials: by factor count, then lexicographic in
// the canonical factor key. Used for map keys and per-level basis order.
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

std::string to_string(const Monomial& m);

// Module element at (mixed) levels: sparse map over canonical monomials.
using ModuleElement = std::map<Monomial, GaussRat, MonomialLess>;

// All canonical monomials per doubled level 0..depth, deterministic order.
std::vector<std::vector<Monomial>> verma_basis(long long depth);

// Left action of a basis generator, fully straightened into the canonical
// basis. Positive-degree generators annihilate the highest weight vector;
// L_0, M_0, c act there by h, m, z. Throws depth_exceeded when the
// straightened result would sit above `depth`.
ModuleElement verma_act(const Weight& wt, long long depth, const BasisIndex& g,
                        const Monomial& u);

ModuleElement verma_act(const Weight& wt, long long depth, const BasisIndex& g,
                        const ModuleElement& v);

// Action of a sparse algebra element.
ModuleElement verma_act(const Weight& wt, long long depth, const Element& x,
                        const ModuleElement& v);

// Depth-truncated module with per-level bases and index lookup.
struct VermaModule {
    Weight wt;
    long long depth = 0;
    std::vector<std::vector<Monomial>> levels;

    static VermaModule make(const Weight& wt, long long depth) {
        return {wt, depth, verma_basis(depth)};
    }
};

} // namespace sv
