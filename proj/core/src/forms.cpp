#include "sv/forms.hpp"

#include <algorithm>

namespace sv {

std::string to_string(PositivityVerdict::Tag t) {
    switch (t) {
        case PositivityVerdict::Tag::PositiveDefinite: return "PositiveDefinite";
        case PositivityVerdict::Tag::PositiveSemidefinite: return "PositiveSemidefinite";
        case PositivityVerdict::Tag::Indefinite: return "Indefinite";
        case PositivityVerdict::Tag::NonHermitian: return "NonHermitian";
    }
    return "?";
}

namespace {

GaussRat form_on_monomials(const Weight& wt, const InvolutionParams& p, long long depth,
                           const Monomial& pm, const Monomial& qm) {
    if (pm.level() != qm.level()) return {};
    // <g1...gk v, Q v> = <v, theta(gk)...theta(g1) Q v>: apply theta(g1) first.
    ModuleElement x{{qm, GaussRat(1)}};
    for (const auto& g : pm.factors) {
        x = verma_act(wt, depth, apply_basis(p, g), x);
        if (x.empty()) return {};
    }
    auto it = x.find(Monomial{});
    return it == x.end() ? GaussRat() : it->second;
}

} // namespace

GaussRat contravariant_form(const Weight& wt, const InvolutionParams& p, long long depth,
                            const ModuleElement& u, const ModuleElement& v) {
    if (!p.is_plus())
        throw invalid_parameters(
            "contravariant forms exist only for the plus family (no unitary module admits a "
            "minus-type anti-involution)");
    GaussRat total;
    for (const auto& [pm, cp] : u)
        for (const auto& [qm, cq] : v) {
            if (pm.level() != qm.level()) continue;
            total += conj(cp) * cq * form_on_monomials(wt, p, depth, pm, qm);
        }
    return total;
}

Mat gram(const Weight& wt, const InvolutionParams& p, long long level, long long depth) {
    if (level > depth) throw invalid_parameters("gram level exceeds depth");
    if (!p.is_plus())
        throw invalid_parameters(
            "contravariant forms exist only for the plus family (no unitary module admits a "
            "minus-type anti-involution)");
    auto levels = verma_basis(depth);
    const auto& basis = levels[static_cast<std::size_t>(level)];
    const std::size_t n = basis.size();
    Mat g(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            g[i][j] = form_on_monomials(wt, p, depth, basis[i], basis[j]);
    return g;
}

PositivityVerdict positivity(const Mat& g) {
    PositivityVerdict out;
    const std::size_t n = g.size();
    if (auto cell = hermitian_violation(g)) {
        out.tag = PositivityVerdict::Tag::NonHermitian;
        out.cell = *cell;
        return out;
    }
    // Hermitian congruence elimination with diagonal pivoting. T tracks the
    // change of basis so witnesses live in original coordinates.
    Mat b = g;
    Mat t = identity_matrix(n);
    std::vector<bool> active(n, true);
    std::size_t positive_pivots = 0;

    auto t_column = [&](std::size_t j) {
        Vec col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = t[i][j];
        return col;
    };

    while (true) {
        std::size_t p = n;
        for (std::size_t i = 0; i < n; ++i)
            if (active[i] && !b[i][i].is_zero()) {
                p = i;
                break;
            }
        if (p == n) {
            // No usable diagonal; any surviving off-diagonal entry certifies a
            // negative direction (hyperbolic 2x2 block).
            for (std::size_t i = 0; i < n; ++i) {
                if (!active[i]) continue;
                for (std::size_t j = i + 1; j < n; ++j) {
                    if (!active[j] || b[i][j].is_zero()) continue;
                    GaussRat gij = b[i][j];
                    Vec wi = t_column(i), wj = t_column(j);
                    out.tag = PositivityVerdict::Tag::Indefinite;
                    out.witness.assign(n, GaussRat());
                    for (std::size_t k = 0; k < n; ++k)
                        out.witness[k] = -gij * wi[k] + wj[k];
                    return out;
                }
            }
            long long radical = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (active[i]) ++radical;
            out.radical_dim = radical;
            out.tag = radical == 0 ? PositivityVerdict::Tag::PositiveDefinite
                                   : PositivityVerdict::Tag::PositiveSemidefinite;
            return out;
        }
        // Hermitian matrix => diagonal entries are real.
        Rat delta = b[p][p].re;
        if (delta < 0) {
            out.tag = PositivityVerdict::Tag::Indefinite;
            out.witness = t_column(p);
            return out;
        }
        ++positive_pivots;
        GaussRat d(delta);
        for (std::size_t j = 0; j < n; ++j) {
            if (!active[j] || j == p || b[p][j].is_zero()) continue;
            GaussRat cj = b[p][j] / d;
            for (std::size_t i = 0; i < n; ++i) t[i][j] -= cj * t[i][p];
        }
        Mat bn = b;
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i] || i == p) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (!active[j] || j == p) continue;
                bn[i][j] = b[i][j] - b[i][p] * b[p][j] / d;
            }
        }
        b = std::move(bn);
        for (std::size_t i = 0; i < n; ++i) {
            b[p][i] = GaussRat();
            b[i][p] = GaussRat();
        }
        active[p] = false;
    }
}

std::vector<Vec> radical_basis(const Mat& g) {
    if (auto cell = hermitian_violation(g))
        throw invalid_parameters("radical_basis requires a Hermitian matrix (cell " +
                                 std::to_string(cell->first) + "," + std::to_string(cell->second) +
                                 ")");
    return nullspace(g);
}

GradedForm gram_all(const Weight& wt, const InvolutionParams& p, long long depth) {
    GradedForm f;
    f.depth = depth;
    for (long long d = 0; d <= depth; ++d) f.blocks.push_back(gram(wt, p, d, depth));
    return f;
}

namespace {

std::optional<std::size_t> index_of(const std::vector<Monomial>& level, const Monomial& m) {
    for (std::size_t i = 0; i < level.size(); ++i)
        if (level[i] == m) return i;
    return std::nullopt;
}

// Coefficient vectors of a module element per doubled level.
std::map<long long, Vec> split_levels(const std::vector<std::vector<Monomial>>& levels,
                                      const ModuleElement& u) {
    std::map<long long, Vec> out;
    for (const auto& [m, c] : u) {
        long long d = m.level();
        auto& vec = out[d];
        const auto& basis = levels[static_cast<std::size_t>(d)];
        if (vec.empty()) vec.assign(basis.size(), GaussRat());
        auto idx = index_of(basis, m);
        if (!idx) throw invalid_parameters("module element outside the canonical basis");
        vec[*idx] = c;
    }
    return out;
}

} // namespace

GaussRat form_eval(const GradedForm& f, const std::vector<std::vector<Monomial>>& levels,
                   const ModuleElement& u, const ModuleElement& v) {
    auto ul = split_levels(levels, u);
    auto vl = split_levels(levels, v);
    GaussRat total;
    for (const auto& [d, uvec] : ul) {
        auto it = vl.find(d);
        if (it == vl.end()) continue;
        total += sesquilinear(uvec, f.blocks[static_cast<std::size_t>(d)], it->second);
    }
    return total;
}

GradedForm rescale_form(const InvolutionParams& p_from, const GradedForm& f) {
    if (!p_from.is_plus()) throw invalid_parameters("rescale_form requires the plus family");
    GaussRat alpha = p_from.alpha();
    if (!alpha.is_real() || !(alpha.re > 0))
        throw invalid_parameters("rescale_form requires alpha > 0");
    const GaussRat rho = p_from.plus_params().rho;
    GradedForm out;
    out.depth = f.depth;
    out.blocks.reserve(f.blocks.size());
    for (long long d = 0; d < static_cast<long long>(f.blocks.size()); ++d) {
        GaussRat scale = pow_int(rho, d);
        Mat block = f.blocks[static_cast<std::size_t>(d)];
        for (auto& row : block)
            for (auto& x : row) x *= scale;
        out.blocks.push_back(std::move(block));
    }
    return out;
}

CheckReport form_contravariance_check(const GradedForm& f, const Weight& wt,
                                      const InvolutionParams& p, long long depth,
                                      long long maxgrade) {
    CheckReport rep;
    auto levels = verma_basis(depth);
    std::vector<BasisIndex> gens;
    for (long long d = 1; d <= maxgrade; ++d) {
        if (d % 2 == 0) {
            gens.push_back(BasisIndex::L(d / 2));
            gens.push_back(BasisIndex::L(-d / 2));
            gens.push_back(BasisIndex::M(d / 2));
            gens.push_back(BasisIndex::M(-d / 2));
        } else {
            gens.push_back(BasisIndex::Y(d));
            gens.push_back(BasisIndex::Y(-d));
        }
    }
    gens.push_back(BasisIndex::L(0));
    gens.push_back(BasisIndex::M(0));
    gens.push_back(BasisIndex::C());

    for (const auto& x : gens) {
        Element theta_x = apply_basis(p, x);
        for (long long du = 0; du <= depth; ++du) {
            long long dv = du - grade(x);
            if (dv < 0 || dv > depth) continue;
            for (const auto& um : levels[static_cast<std::size_t>(du)])
                for (const auto& vm : levels[static_cast<std::size_t>(dv)]) {
                    rep.count();
                    ModuleElement u{{um, GaussRat(1)}};
                    ModuleElement v{{vm, GaussRat(1)}};
                    GaussRat lhs = form_eval(f, levels, verma_act(wt, depth, x, u), v);
                    GaussRat rhs = form_eval(f, levels, u, verma_act(wt, depth, theta_x, v));
                    if (lhs != rhs)
                        rep.fail("<x u, v> != <u, theta(x) v> at x=" + to_string(x) +
                                 ", u=" + to_string(um) + ", v=" + to_string(vm));
                }
        }
    }
    return rep;
}

FeasibilityResult series_unitarity_feasibility(const Rat& a, const GaussRat& b, const Window& w) {
    const long long bound = w.l_bound();
    auto ab = [&](long long k) { return GaussRat(a + k) + b; };          // a + k + b
    auto ab1 = [&](long long k) { return GaussRat(a + k + 1) - b; };     // a + k + 1 - b

    for (long long k = -bound - 1; k <= bound + 1; ++k) {
        if (ab(k).is_zero())
            throw reducible_parameters("a+k+b = 0 at k=" + std::to_string(k));
        if (ab1(k).is_zero())
            throw reducible_parameters("a+k+1-b = 0 at k=" + std::to_string(k));
    }

    FeasibilityResult res;
    std::map<long long, Rat> p;
    p[0] = Rat(1);
    auto ratio = [&](long long k) { return ab(k) / conj(ab1(k)); };
    for (long long k = 0; k < bound; ++k) {
        GaussRat r = ratio(k);
        if (!r.is_real() || !(r.re > 0)) {
            res.tag = FeasibilityResult::Tag::Infeasible;
            res.bad_n = 1;
            res.bad_k = k;
            return res;
        }
        p[k + 1] = p[k] * r.re;
    }
    for (long long k = 0; k > -bound; --k) {
        GaussRat r = ratio(k - 1);
        if (!r.is_real() || !(r.re > 0)) {
            res.tag = FeasibilityResult::Tag::Infeasible;
            res.bad_n = 1;
            res.bad_k = k - 1;
            return res;
        }
        p[k - 1] = p[k] / r.re;
    }
    // Full constraint sweep: conj(a+k+n b) p_{n+k} = (a+k+n - n b) p_k.
    for (long long n = -bound; n <= bound; ++n)
        for (long long k = -bound; k <= bound; ++k) {
            if (n + k < -bound || n + k > bound) continue;
            GaussRat lhs = conj(GaussRat(a + k) + GaussRat(Rat(n)) * b) * GaussRat(p[n + k]);
            GaussRat rhs = (GaussRat(a + k + n) - GaussRat(Rat(n)) * b) * GaussRat(p[k]);
            if (lhs != rhs) {
                res.tag = FeasibilityResult::Tag::Infeasible;
                res.bad_n = n;
                res.bad_k = k;
                return res;
            }
        }
    res.tag = FeasibilityResult::Tag::Feasible;
    res.weights = std::move(p);
    return res;
}

} // namespace sv
