#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sv/series.hpp"
#include "sv/verma.hpp"

using namespace sv;

namespace {

// Independent dimension oracle: colored partitions of d where every even part
// has two colors (L and M) and every odd part one (Y).
long long partition_dim(long long d) {
    std::vector<long long> dp(static_cast<std::size_t>(d) + 1, 0);
    dp[0] = 1;
    for (long long part = 1; part <= d; ++part) {
        int colors = part % 2 == 0 ? 2 : 1;
        for (int c = 0; c < colors; ++c)
            for (long long v = part; v <= d; ++v)
                dp[static_cast<std::size_t>(v)] += dp[static_cast<std::size_t>(v - part)];
    }
    return dp[static_cast<std::size_t>(d)];
}

BasisIndex random_generator(std::mt19937& rng, long long maxdeg) {
    std::uniform_int_distribution<int> fam(0, 3);
    std::uniform_int_distribution<long long> deg(1, maxdeg);
    std::uniform_int_distribution<int> sgn(0, 1);
    long long d = deg(rng) * (sgn(rng) ? 1 : -1);
    switch (fam(rng)) {
        case 0: return BasisIndex::L(d);
        case 1: return BasisIndex::M(d);
        case 2: return BasisIndex::Y(2 * d - 1);
        default: return fam(rng) % 2 ? BasisIndex::L(0) : BasisIndex::M(0);
    }
}

} // namespace

TEST_CASE("series actions match the displayed formulas") {
    SeriesVector v0{{0, GaussRat(1)}};
    // Aab(a=0, b=2): L_1 v_0 = 2 v_1
    {
        auto s = SeriesSpec::aab(GaussRat(0), GaussRat(2));
        SeriesVector want{{1, GaussRat(2)}};
        CHECK(series_action(s, 1, v0) == want);
    }
    // Aab: L_0 v_k = (a+k) v_k
    {
        auto s = SeriesSpec::aab(GaussRat(Rat(1, 4)), GaussRat(Rat(1, 2)));
        SeriesVector vk{{3, GaussRat(1)}};
        SeriesVector want{{3, GaussRat(Rat(13, 4))}};
        CHECK(series_action(s, 0, vk) == want);
    }
    // Aalpha(aux=3): L_2 v_0 = 2*(2+3) v_2 = 10 v_2
    {
        auto s = SeriesSpec::aalpha(GaussRat(3));
        SeriesVector want{{2, GaussRat(10)}};
        CHECK(series_action(s, 2, v0) == want);
    }
    // Bbeta(aux=1): L_3 v_-3 = -3*(3+1) v_0 = -12 v_0
    {
        auto s = SeriesSpec::bbeta(GaussRat(1));
        SeriesVector vm3{{-3, GaussRat(1)}};
        SeriesVector want{{0, GaussRat(-12)}};
        CHECK(series_action(s, 3, vm3) == want);
    }
}

TEST_CASE("sv lift kills M, Y and c") {
    auto s = SeriesSpec::aab(GaussRat(0), GaussRat(2));
    SeriesVector v0{{0, GaussRat(1)}};
    CHECK(sv_lift_action(s, BasisIndex::M(3), v0).empty());
    CHECK(sv_lift_action(s, BasisIndex::Y(1), v0).empty());
    CHECK(sv_lift_action(s, BasisIndex::C(), v0).empty());
    SeriesVector want{{1, GaussRat(2)}};
    CHECK(sv_lift_action(s, BasisIndex::L(1), v0) == want);
}

TEST_CASE("lifted action satisfies every bracket on the window") {
    CHECK(sv_lift_bracket_check(SeriesSpec::aab(GaussRat(0), GaussRat(Rat(1, 2), Rat(1))),
                                Window(8))
              .passed);
    CHECK(sv_lift_bracket_check(SeriesSpec::aab(GaussRat(Rat(1, 4)), GaussRat(Rat(1, 2))),
                                Window(6))
              .passed);
    CHECK(sv_lift_bracket_check(SeriesSpec::aalpha(GaussRat(3)), Window(6)).passed);
    CHECK(sv_lift_bracket_check(SeriesSpec::bbeta(GaussRat(Rat(-1, 3))), Window(6)).passed);
}

TEST_CASE("shift isomorphism") {
    CHECK(series_shift_iso_check(GaussRat(0), GaussRat(Rat(1, 2), Rat(1)), Window(8)).passed);
    CHECK(series_shift_iso_check(GaussRat(Rat(1, 4)), GaussRat(Rat(1, 2)), Window(8)).passed);
    // negative control: shifting b as well breaks the intertwiner
    CHECK_FALSE(
        series_shift_iso_check(GaussRat(Rat(1, 4)), GaussRat(Rat(1, 2)), Window(8), GaussRat(1))
            .passed);
}

TEST_CASE("verma basis per level") {
    auto levels = verma_basis(4);
    CHECK(levels[0].size() == 1);
    CHECK(levels[0][0].factors.empty());
    // d=1: {Y_{-1/2}}
    REQUIRE(levels[1].size() == 1);
    CHECK(levels[1][0] == Monomial{{BasisIndex::Y(-1)}});
    // d=2: {L_-1, M_-1, Y_{-1/2}^2}
    REQUIRE(levels[2].size() == 3);
    CHECK(levels[2][0] == Monomial{{BasisIndex::L(-1)}});
    CHECK(levels[2][1] == Monomial{{BasisIndex::M(-1)}});
    CHECK(levels[2][2] == Monomial{{BasisIndex::Y(-1), BasisIndex::Y(-1)}});
    // d=3: {Y_{-3/2}, L_-1 Y_{-1/2}, M_-1 Y_{-1/2}, Y_{-1/2}^3}
    REQUIRE(levels[3].size() == 4);
    CHECK(levels[3][0] == Monomial{{BasisIndex::Y(-3)}});
    CHECK(levels[3][1] == Monomial{{BasisIndex::L(-1), BasisIndex::Y(-1)}});
    CHECK(levels[3][2] == Monomial{{BasisIndex::M(-1), BasisIndex::Y(-1)}});
    CHECK(levels[3][3] == Monomial{{BasisIndex::Y(-1), BasisIndex::Y(-1), BasisIndex::Y(-1)}});
    for (const auto& lv : levels)
        for (const auto& m : lv) CHECK(m.is_canonical());
}

TEST_CASE("weight space dimensions match the partition oracle") {
    auto levels = verma_basis(10);
    for (long long d = 0; d <= 10; ++d)
        CHECK(static_cast<long long>(levels[static_cast<std::size_t>(d)].size()) ==
              partition_dim(d));
    CHECK(partition_dim(2) == 3);
    CHECK(partition_dim(3) == 4);
    CHECK(partition_dim(4) == 9);

    VermaModule mod = VermaModule::make(Weight{Rat(-1), Rat(0), Rat(2)}, 6);
    CHECK(mod.depth == 6);
    REQUIRE(mod.levels.size() == 7);
    for (long long d = 0; d <= 6; ++d)
        CHECK(static_cast<long long>(mod.levels[static_cast<std::size_t>(d)].size()) ==
              partition_dim(d));
}

TEST_CASE("generator actions on the highest weight vector") {
    Weight wt{Rat(-2), Rat(3), Rat(5)}; // h, m, z
    const long long D = 8;
    Monomial vac;
    // L_1 (L_-1 v) = -2h v
    {
        auto lm1 = verma_act(wt, D, BasisIndex::L(-1), vac);
        auto r = verma_act(wt, D, BasisIndex::L(1), lm1);
        REQUIRE(r.size() == 1);
        CHECK(r.at(vac) == GaussRat(Rat(-2) * wt.h));
    }
    // Y_{1/2} (Y_{-1/2} v) = -m v
    {
        auto ym = verma_act(wt, D, BasisIndex::Y(-1), vac);
        auto r = verma_act(wt, D, BasisIndex::Y(1), ym);
        REQUIRE(r.size() == 1);
        CHECK(r.at(vac) == GaussRat(-wt.m));
    }
    // M_1 (L_-1 v) = -m v
    {
        auto lm1 = verma_act(wt, D, BasisIndex::L(-1), vac);
        auto r = verma_act(wt, D, BasisIndex::M(1), lm1);
        REQUIRE(r.size() == 1);
        CHECK(r.at(vac) == GaussRat(-wt.m));
    }
    // L_2 (L_-2 v) = (-4h + z/2) v
    {
        auto lm2 = verma_act(wt, D, BasisIndex::L(-2), vac);
        auto r = verma_act(wt, D, BasisIndex::L(2), lm2);
        REQUIRE(r.size() == 1);
        CHECK(r.at(vac) == GaussRat(Rat(-4) * wt.h + wt.z / 2));
    }
    // positive generators annihilate v
    CHECK(verma_act(wt, D, BasisIndex::L(3), vac).empty());
    CHECK(verma_act(wt, D, BasisIndex::Y(5), vac).empty());
    // L_0, M_0, c act by the weight
    CHECK(verma_act(wt, D, BasisIndex::L(0), vac).at(vac) == GaussRat(wt.h));
    CHECK(verma_act(wt, D, BasisIndex::M(0), vac).at(vac) == GaussRat(wt.m));
    CHECK(verma_act(wt, D, BasisIndex::C(), vac).at(vac) == GaussRat(wt.z));
}

TEST_CASE("L_0 acts diagonally with eigenvalue h - d/2") {
    Weight wt{Rat(-1), Rat(1, 2), Rat(2)};
    const long long D = 6;
    auto levels = verma_basis(D);
    for (long long d = 0; d <= D; ++d)
        for (const auto& mono : levels[static_cast<std::size_t>(d)]) {
            auto r = verma_act(wt, D, BasisIndex::L(0), mono);
            REQUIRE(r.size() <= 1);
            GaussRat ev = r.empty() ? GaussRat() : r.at(mono);
            CHECK(ev == GaussRat(wt.h - Rat(d, 2)));
        }
}

TEST_CASE("representation property fuzz") {
    std::mt19937 rng(20250101);
    Weight wt{Rat(-3, 4), Rat(2, 3), Rat(1)};
    auto levels = verma_basis(5);
    std::vector<Monomial> pool;
    for (const auto& lv : levels) pool.insert(pool.end(), lv.begin(), lv.end());
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    const long long D = 24; // slack so intermediate levels never overflow
    for (int t = 0; t < 300; ++t) {
        BasisIndex g1 = random_generator(rng, 3);
        BasisIndex g2 = random_generator(rng, 3);
        const Monomial& u = pool[pick(rng)];
        ModuleElement uu{{u, GaussRat(1)}};
        ModuleElement lhs = verma_act(wt, D, g1, verma_act(wt, D, g2, uu));
        {
            ModuleElement t2 = verma_act(wt, D, g2, verma_act(wt, D, g1, uu));
            for (const auto& [w, c] : t2) {
                auto [it, inserted] = lhs.try_emplace(w, -c);
                if (!inserted) {
                    it->second -= c;
                    if (it->second.is_zero()) lhs.erase(it);
                }
            }
        }
        ModuleElement rhs = verma_act(wt, D, bracket(g1, g2), uu);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("depth cap raises instead of truncating") {
    Weight wt{Rat(0), Rat(0), Rat(0)};
    Monomial y{{BasisIndex::Y(-1)}};
    CHECK_THROWS_AS((void)verma_act(wt, 2, BasisIndex::L(-2), y), depth_exceeded);
    CHECK_NOTHROW((void)verma_act(wt, 5, BasisIndex::L(-2), y));
}
