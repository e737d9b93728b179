#include "sv/verma.hpp"

#include <algorithm>
#include <optional>
#include <tuple>

namespace sv {

namespace {

int family_rank(Family f) {
    switch (f) {
        case Family::L: return 0;
        case Family::M: return 1;
        case Family::Y: return 2;
        case Family::C: return 3;
    }
    return 3;
}

// Canonical factor key: ascending doubled degree, then L < M < Y.
std::pair<long long, int> factor_key(const BasisIndex& b) {
    return {grade(b), family_rank(b.fam)};
}

bool factor_le(const BasisIndex& a, const BasisIndex& b) {
    return factor_key(a) <= factor_key(b);
}

} // namespace

bool Monomial::is_canonical() const {
    for (const auto& f : factors)
        if (grade(f) >= 0) return false;
    for (std::size_t i = 0; i + 1 < factors.size(); ++i)
        if (!factor_le(factors[i], factors[i + 1])) return false;
    return true;
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
    if (a.factors.size() != b.factors.size()) return a.factors.size() < b.factors.size();
    for (std::size_t i = 0; i < a.factors.size(); ++i) {
        auto ka = factor_key(a.factors[i]);
        auto kb = factor_key(b.factors[i]);
        if (ka != kb) return ka < kb;
    }
    return false;
}

std::string to_string(const Monomial& m) {
    if (m.factors.empty()) return "v";
    std::string out;
    for (const auto& f : m.factors) {
        out += to_string(f);
        out += ".";
    }
    out += "v";
    return out;
}

namespace {

// Negative-degree generators with doubled degree -d, in factor-key order.
std::vector<BasisIndex> generators_of_degree(long long d) {
    std::vector<BasisIndex> out;
    if (d <= 0) return out;
    if (d % 2 == 0) {
        out.push_back(BasisIndex::L(-d / 2));
        out.push_back(BasisIndex::M(-d / 2));
    } else {
        out.push_back(BasisIndex::Y(-d));
    }
    return out;
}

void enumerate(long long remaining, std::optional<BasisIndex> min_factor,
               std::vector<BasisIndex>& stack, std::vector<Monomial>& out) {
    if (remaining == 0) {
        out.push_back(Monomial{stack});
        return;
    }
    for (long long d = 1; d <= remaining; ++d) {
        for (const auto& g : generators_of_degree(d)) {
            if (min_factor && !factor_le(*min_factor, g)) continue;
            stack.push_back(g);
            enumerate(remaining - d, g, stack, out);
            stack.pop_back();
        }
    }
}

} // namespace

std::vector<std::vector<Monomial>> verma_basis(long long depth) {
    if (depth < 0) throw invalid_parameters("depth must be >= 0");
    std::vector<std::vector<Monomial>> levels(static_cast<std::size_t>(depth) + 1);
    for (long long d = 0; d <= depth; ++d) {
        std::vector<BasisIndex> stack;
        enumerate(d, std::nullopt, stack, levels[static_cast<std::size_t>(d)]);
        auto& lv = levels[static_cast<std::size_t>(d)];
        std::sort(lv.begin(), lv.end(), [](const Monomial& a, const Monomial& b) {
            return MonomialLess{}(a, b);
        });
    }
    return levels;
}

namespace {

// Straightens g * (u | highest-weight vector) into canonical monomials.
// Classic PBW rewriting: either prepend in order, or commute past the head
// factor; bracket terms strictly shorten the word, so this terminates.
void act_basis(const Weight& wt, const BasisIndex& g, const Monomial& u, const GaussRat& scale,
               ModuleElement& out) {
    if (scale.is_zero()) return;
    if (u.factors.empty()) {
        long long d = grade(g);
        if (d < 0) {
            Monomial m{{g}};
            auto [it, inserted] = out.try_emplace(m, scale);
            if (!inserted) it->second += scale;
        } else if (d == 0) {
            GaussRat ev;
            switch (g.fam) {
                case Family::L: ev = GaussRat(wt.h); break;
                case Family::M: ev = GaussRat(wt.m); break;
                case Family::C: ev = GaussRat(wt.z); break;
                case Family::Y: break; // no Y of degree 0
            }
            auto [it, inserted] = out.try_emplace(u, scale * ev);
            if (!inserted) it->second += scale * ev;
        }
        // positive degree annihilates the highest weight vector
        return;
    }
    const BasisIndex head = u.factors.front();
    if (grade(g) < 0 && factor_le(g, head)) {
        Monomial m;
        m.factors.reserve(u.factors.size() + 1);
        m.factors.push_back(g);
        m.factors.insert(m.factors.end(), u.factors.begin(), u.factors.end());
        auto [it, inserted] = out.try_emplace(std::move(m), scale);
        if (!inserted) it->second += scale;
        return;
    }
    Monomial rest{{u.factors.begin() + 1, u.factors.end()}};
    // g u = head (g rest) + [g, head] rest
    ModuleElement inner;
    act_basis(wt, g, rest, GaussRat(1), inner);
    for (const auto& [w, c] : inner) act_basis(wt, head, w, scale * c, out);
    Element br = bracket(g, head);
    for (const auto& [b, c] : br.terms()) act_basis(wt, b, rest, scale * c, out);
}

void prune(ModuleElement& v) {
    for (auto it = v.begin(); it != v.end();) {
        if (it->second.is_zero())
            it = v.erase(it);
        else
            ++it;
    }
}

} // namespace

ModuleElement verma_act(const Weight& wt, long long depth, const BasisIndex& g,
                        const Monomial& u) {
    long long target = u.level() - grade(g);
    if (target > depth)
        throw depth_exceeded("action of " + to_string(g) + " on level " +
                             std::to_string(u.level()) + " exceeds depth " +
                             std::to_string(depth));
    ModuleElement out;
    act_basis(wt, g, u, GaussRat(1), out);
    prune(out);
    return out;
}

ModuleElement verma_act(const Weight& wt, long long depth, const BasisIndex& g,
                        const ModuleElement& v) {
    ModuleElement out;
    for (const auto& [mono, c] : v) {
        ModuleElement t = verma_act(wt, depth, g, mono);
        for (const auto& [w, cc] : t) {
            auto [it, inserted] = out.try_emplace(w, c * cc);
            if (!inserted) it->second += c * cc;
        }
    }
    prune(out);
    return out;
}

ModuleElement verma_act(const Weight& wt, long long depth, const Element& x,
                        const ModuleElement& v) {
    ModuleElement out;
    for (const auto& [b, c] : x.terms()) {
        ModuleElement t = verma_act(wt, depth, b, v);
        for (const auto& [w, cc] : t) {
            auto [it, inserted] = out.try_emplace(w, c * cc);
            if (!inserted) it->second += c * cc;
        }
    }
    prune(out);
    return out;
}

} // namespace sv
