#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sv/forms.hpp"

using namespace sv;

namespace {

Mat from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    Mat m;
    for (auto& r : rows) {
        Vec v;
        for (int x : r) v.push_back(GaussRat(x));
        m.push_back(std::move(v));
    }
    return m;
}

GaussRat det(const Mat& m) {
    const std::size_t n = m.size();
    if (n == 0) return GaussRat(1);
    if (n == 1) return m[0][0];
    GaussRat total;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        Mat minor(n - 1, Vec(n - 1));
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor[r - 1][cc++] = m[r][c];
            }
        }
        GaussRat term = m[0][j] * det(minor);
        if (j % 2 == 1) term = -term;
        total += term;
    }
    return total;
}

Mat principal_submatrix(const Mat& m, const std::vector<std::size_t>& idx) {
    Mat s(idx.size(), Vec(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) s[i][j] = m[idx[i]][idx[j]];
    return s;
}

// Brute-force verdict via principal minors (Sylvester for PD; all principal
// minors >= 0 for PSD). Hermitian input assumed.
struct OracleVerdict {
    bool pd = false;
    bool psd = false;
    long long radical_dim = 0;
};

OracleVerdict minors_oracle(const Mat& m) {
    const std::size_t n = m.size();
    OracleVerdict v;
    v.pd = true;
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::size_t> lead(k);
        for (std::size_t i = 0; i < k; ++i) lead[i] = i;
        GaussRat d = det(principal_submatrix(m, lead));
        if (!(d.is_real() && d.re > 0)) v.pd = false;
    }
    v.psd = true;
    for (std::size_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        GaussRat d = det(principal_submatrix(m, idx));
        if (!(d.is_real() && d.re >= 0)) v.psd = false;
    }
    // Hermitian matrices are diagonalizable: radical = nullspace.
    v.radical_dim = static_cast<long long>(nullspace(m).size());
    return v;
}

const InvolutionParams theta101 =
    InvolutionParams::plus(GaussRat(1), GaussRat(0), GaussRat(1));

} // namespace

TEST_CASE("contravariant form basics") {
    Weight wt{Rat(-1), Rat(1, 2), Rat(2)};
    const long long D = 4;
    Monomial vac;
    ModuleElement v{{vac, GaussRat(1)}};
    CHECK(contravariant_form(wt, theta101, D, v, v) == GaussRat(1));

    ModuleElement ym{{Monomial{{BasisIndex::Y(-1)}}, GaussRat(1)}};
    CHECK(contravariant_form(wt, theta101, D, ym, ym) == GaussRat(-wt.m));

    ModuleElement lm{{Monomial{{BasisIndex::L(-1)}}, GaussRat(1)}};
    CHECK(contravariant_form(wt, theta101, D, lm, lm) == GaussRat(Rat(-2) * wt.h));

    // distinct levels pair to zero
    CHECK(contravariant_form(wt, theta101, D, lm, ym).is_zero());

    // conjugate-linear in the first slot
    GaussRat s{Rat(1), Rat(2)};
    CHECK(contravariant_form(wt, theta101, D, ModuleElement{{vac, s}}, v) == conj(s));
    CHECK(contravariant_form(wt, theta101, D, v, ModuleElement{{vac, s}}) == s);
}

TEST_CASE("level-2 gram matrix") {
    Weight wt{Rat(-1), Rat(1, 2), Rat(2)};
    Mat g = gram(wt, theta101, 2, 4);
    // basis (L_-1, M_-1, Y^2): [[-2h, -m, m], [-m, 0, 0], [m, 0, 2m^2]]
    REQUIRE(g.size() == 3);
    CHECK(g[0][0] == GaussRat(Rat(-2) * wt.h));
    CHECK(g[0][1] == GaussRat(-wt.m));
    CHECK(g[0][2] == GaussRat(wt.m));
    CHECK(g[1][0] == GaussRat(-wt.m));
    CHECK(g[1][1].is_zero());
    CHECK(g[1][2].is_zero());
    CHECK(g[2][0] == GaussRat(wt.m));
    CHECK(g[2][1].is_zero());
    CHECK(g[2][2] == GaussRat(Rat(2) * wt.m * wt.m));

    Weight wt0{Rat(-1), Rat(0), Rat(2)};
    Mat g0 = gram(wt0, theta101, 2, 4);
    CHECK(g0[0][0] == GaussRat(2));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (i > 0 || j > 0) CHECK(g0[i][j].is_zero());
}

TEST_CASE("positivity verdicts on small matrices") {
    CHECK(positivity(from_rows({{2, 1}, {1, 2}})).tag == PositivityVerdict::Tag::PositiveDefinite);
    {
        auto v = positivity(from_rows({{0, 1}, {1, 0}}));
        CHECK(v.tag == PositivityVerdict::Tag::Indefinite);
        Mat g = from_rows({{0, 1}, {1, 0}});
        GaussRat val = sesquilinear(v.witness, g, v.witness);
        CHECK(val.is_real());
        CHECK(val.re < 0);
    }
    {
        auto v = positivity(from_rows({{1, 0}, {0, 0}}));
        CHECK(v.tag == PositivityVerdict::Tag::PositiveSemidefinite);
        CHECK(v.radical_dim == 1);
    }
    {
        // [[-2h, -m], [-m, 0]] with h=-1, m=1: indefinite (det = -1)
        auto v = positivity(from_rows({{2, -1}, {-1, 0}}));
        CHECK(v.tag == PositivityVerdict::Tag::Indefinite);
    }
    {
        Mat nh = from_rows({{1, 1}, {2, 1}});
        auto v = positivity(nh);
        CHECK(v.tag == PositivityVerdict::Tag::NonHermitian);
        CHECK(v.cell == std::make_pair(std::size_t(0), std::size_t(1)));
    }
}

TEST_CASE("positivity agrees with the minors oracle exhaustively") {
    // All Hermitian 2x2 with real/imag parts in {-1,0,1}.
    std::vector<GaussRat> offdiag;
    for (int re = -1; re <= 1; ++re)
        for (int im = -1; im <= 1; ++im) offdiag.push_back(GaussRat(Rat(re), Rat(im)));
    std::uint64_t checked = 0;
    for (int d0 = -1; d0 <= 1; ++d0)
        for (int d1 = -1; d1 <= 1; ++d1)
            for (const auto& g01 : offdiag) {
                Mat m{{GaussRat(d0), g01}, {conj(g01), GaussRat(d1)}};
                auto fast = positivity(m);
                auto slow = minors_oracle(m);
                CHECK(fast.is_psd() == slow.psd);
                CHECK((fast.tag == PositivityVerdict::Tag::PositiveDefinite) == slow.pd);
                if (fast.tag == PositivityVerdict::Tag::PositiveSemidefinite)
                    CHECK(fast.radical_dim == slow.radical_dim);
                if (fast.tag == PositivityVerdict::Tag::Indefinite) {
                    GaussRat val = sesquilinear(fast.witness, m, fast.witness);
                    CHECK(val.is_real());
                    CHECK(val.re < 0);
                }
                ++checked;
            }
    CHECK(checked == 3 * 3 * 9); // 3x3 diagonal values x 9 off-diagonal values
}

TEST_CASE("positivity agrees with the minors oracle on sampled complex 3x3 and 4x4") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> entry(-2, 2);
    for (int trial = 0; trial < 400; ++trial) {
        std::size_t n = trial % 2 == 0 ? 3 : 4;
        Mat m(n, Vec(n));
        for (std::size_t i = 0; i < n; ++i) {
            m[i][i] = GaussRat(entry(rng));
            for (std::size_t j = i + 1; j < n; ++j) {
                GaussRat v{Rat(entry(rng)), Rat(entry(rng))};
                m[i][j] = v;
                m[j][i] = conj(v);
            }
        }
        auto fast = positivity(m);
        auto slow = minors_oracle(m);
        CHECK(fast.is_psd() == slow.psd);
        CHECK((fast.tag == PositivityVerdict::Tag::PositiveDefinite) == slow.pd);
        if (!fast.is_psd()) {
            GaussRat val = sesquilinear(fast.witness, m, fast.witness);
            CHECK(val.is_real());
            CHECK(val.re < 0);
        } else {
            CHECK(fast.radical_dim == slow.radical_dim);
        }
    }
}

TEST_CASE("radical basis") {
    {
        Mat g = from_rows({{2, 0, 0}, {0, 0, 0}, {0, 0, 0}});
        auto basis = radical_basis(g);
        REQUIRE(basis.size() == 2);
        CHECK(basis[0][0].is_zero());
        CHECK(basis[0][1] == GaussRat(1));
        CHECK(basis[1][2] == GaussRat(1));
    }
    CHECK(radical_basis(from_rows({{2, 1}, {1, 2}})).empty());
    {
        auto basis = radical_basis(from_rows({{0, 0}, {0, 0}}));
        REQUIRE(basis.size() == 2);
    }
    CHECK_THROWS_AS((void)radical_basis(from_rows({{0, 1}, {2, 0}})), invalid_parameters);
}

TEST_CASE("non-hermitian weight/parameter combinations are surfaced") {
    // beta = i, mu = 1, m != 0: theta(L_0) = L_0 + i M_0 makes the diagonal
    // entry -2h - i m non-real.
    auto p = InvolutionParams::plus(GaussRat(1), GaussRat::i(), GaussRat(1));
    Weight wt{Rat(-1), Rat(1), Rat(0)};
    Mat g = gram(wt, p, 2, 2);
    auto v = positivity(g);
    CHECK(v.tag == PositivityVerdict::Tag::NonHermitian);
    CHECK(v.cell == std::make_pair(std::size_t(0), std::size_t(0)));
}

TEST_CASE("rescaling converts alpha=4 contravariance to alpha=1") {
    const long long D = 4;
    // With m = 0 the M-correction terms pair to zero, so the rescaled form is
    // contravariant for theta+_{1,beta,mu} with the same beta.
    {
        auto p4 = InvolutionParams::plus(GaussRat(2), GaussRat(1), GaussRat(1));
        auto p1 = InvolutionParams::plus(GaussRat(1), GaussRat(1), GaussRat(1));
        Weight wt{Rat(-1), Rat(0), Rat(2)};
        GradedForm f4 = gram_all(wt, p4, D);
        CHECK(form_contravariance_check(f4, wt, p4, D, 4).passed);
        CHECK_FALSE(form_contravariance_check(f4, wt, p1, D, 4).passed);
        GradedForm f1 = rescale_form(p4, f4);
        CHECK(form_contravariance_check(f1, wt, p1, D, 4).passed);
        // block at doubled level d is scaled by rho^d
        for (long long d = 0; d <= D; ++d) {
            const Mat& b4 = f4.blocks[static_cast<std::size_t>(d)];
            const Mat& b1 = f1.blocks[static_cast<std::size_t>(d)];
            GaussRat scale = pow_int(GaussRat(2), d);
            for (std::size_t i = 0; i < b4.size(); ++i)
                for (std::size_t j = 0; j < b4.size(); ++j) CHECK(b1[i][j] == b4[i][j] * scale);
        }
        // rho = 1 rescales trivially
        GradedForm f1b = rescale_form(p1, f1);
        for (long long d = 0; d <= D; ++d)
            CHECK(f1b.blocks[static_cast<std::size_t>(d)] ==
                  f1.blocks[static_cast<std::size_t>(d)]);
    }
    // For m != 0 the correction terms are visible and the exact adjoint
    // target is theta+_{1, beta/alpha, mu}: rescaling the L'-eigenspaces
    // normalizes alpha and divides the beta deformation by alpha.
    {
        auto p4 = InvolutionParams::plus(GaussRat(2), GaussRat(1), GaussRat(1));
        auto p1_same = InvolutionParams::plus(GaussRat(1), GaussRat(1), GaussRat(1));
        auto p1_scaled = InvolutionParams::plus(GaussRat(1), GaussRat(Rat(1, 4)), GaussRat(1));
        Weight wt{Rat(-1), Rat(1, 2), Rat(2)};
        GradedForm f4 = gram_all(wt, p4, D);
        CHECK(form_contravariance_check(f4, wt, p4, D, 4).passed);
        GradedForm f1 = rescale_form(p4, f4);
        CHECK(form_contravariance_check(f1, wt, p1_scaled, D, 4).passed);
        CHECK_FALSE(form_contravariance_check(f1, wt, p1_same, D, 4).passed);
    }
    // alpha < 0 rejected
    {
        Weight wt{Rat(-1), Rat(0), Rat(2)};
        auto p4 = InvolutionParams::plus(GaussRat(2), GaussRat(1), GaussRat(1));
        GradedForm f4 = gram_all(wt, p4, D);
        auto pneg = InvolutionParams::plus(GaussRat::i(), GaussRat(0), GaussRat(1));
        CHECK_THROWS_AS((void)rescale_form(pneg, f4), invalid_parameters);
        // minus-family forms rejected outright
        auto pm = InvolutionParams::minus(GaussRat(1), Rat(0), Rat(0), GaussRat::i());
        Monomial vac;
        ModuleElement v{{vac, GaussRat(1)}};
        CHECK_THROWS_AS((void)contravariant_form(wt, pm, D, v, v), invalid_parameters);
    }
}

TEST_CASE("gram level above depth is rejected") {
    Weight wt{Rat(-1), Rat(0), Rat(0)};
    CHECK_THROWS_AS((void)gram(wt, theta101, 5, 4), invalid_parameters);
}

TEST_CASE("series unitarity feasibility") {
    // Feasible on the line Re(b) = 1/2, weights identically 1.
    {
        auto r = series_unitarity_feasibility(Rat(1, 4), GaussRat(Rat(1, 2)), Window(8));
        REQUIRE(r.tag == FeasibilityResult::Tag::Feasible);
        for (const auto& [k, p] : r.weights) CHECK(p == 1);
    }
    {
        auto r = series_unitarity_feasibility(Rat(0), GaussRat(Rat(1, 2), Rat(1)), Window(8));
        REQUIRE(r.tag == FeasibilityResult::Tag::Feasible);
        for (const auto& [k, p] : r.weights) CHECK(p == 1);
    }
    // b = 1: sign obstruction at k = -1 (ratio (1/4)/(-3/4) < 0).
    {
        auto r = series_unitarity_feasibility(Rat(1, 4), GaussRat(1), Window(8));
        REQUIRE(r.tag == FeasibilityResult::Tag::Infeasible);
        CHECK(r.bad_n == 1);
        CHECK(r.bad_k == -1);
    }
    // off the line: b = 3/2
    {
        auto r = series_unitarity_feasibility(Rat(1, 4), GaussRat(Rat(3, 2)), Window(8));
        CHECK(r.tag == FeasibilityResult::Tag::Infeasible);
    }
    // reducible parameters abort
    CHECK_THROWS_AS(
        (void)series_unitarity_feasibility(Rat(0), GaussRat(1), Window(8)),
        reducible_parameters);
}
