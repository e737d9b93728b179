#include "sv/extension.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "sv/series.hpp"

namespace sv {

std::string Unknown::name() const {
    switch (kind) {
        case Kind::Mu:
            return "mu[k=" + std::to_string(k) + ",l=" + std::to_string(l + 1) +
                   ",l'=" + std::to_string(lp + 1) + "]";
        case Kind::Lambda:
            return "lambda[k=" + std::to_string(k) + ",l'=" + std::to_string(lp + 1) +
                   ",l=" + std::to_string(l + 1) + "]";
        case Kind::WL:
            return "w[k=" + std::to_string(k) + ",l=" + std::to_string(l + 1) +
                   ",t=" + std::to_string(t + 1) + "]";
        case Kind::WLp:
            return "w[k=" + std::to_string(k) + ",l'=" + std::to_string(lp + 1) +
                   ",t=" + std::to_string(t + 1) + "]";
    }
    return "?";
}

Mat ExtensionSystem::matrix() const {
    Mat m(rows.size(), Vec(unknowns.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, v] : rows[r].coeffs) m[r][c] = v;
    return m;
}

bool RowFilter::admits(const std::string& tag) const {
    if (tag == "first-order.mu") return first_order_mu;
    if (tag == "second-order.mu") return second_order_mu;
    if (tag == "first-order.lambda") return first_order_lambda;
    if (tag == "second-order.lambda") return second_order_lambda;
    if (tag == "closure.mu" || tag == "closure.lambda") return closure;
    return w_rows; // w.first / w.second / w.closure
}

namespace {

// ----- symbolic machinery ----------------------------------------------
//
// Module basis ids: sector 0 = v_{k,l}, sector 1 = v_{1/2+k,l'},
// sector 2 = W component e_t. The Y_{1/2} action carries symbolic
// coefficients (linear forms over the unknowns); L'_m acts numerically.

struct BKey {
    int sector;
    long long k;
    int comp;

    auto operator<=>(const BKey&) const = default;
};

struct LinForm {
    std::map<std::size_t, GaussRat> coeffs;
    bool poisoned = false; // references an unknown outside the window

    void add(std::size_t idx, const GaussRat& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = coeffs.try_emplace(idx, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) coeffs.erase(it);
        }
    }
    void add_scaled(const LinForm& o, const GaussRat& s) {
        poisoned = poisoned || o.poisoned;
        if (s.is_zero()) return;
        for (const auto& [i, c] : o.coeffs) add(i, c * s);
    }
    bool trivial() const { return coeffs.empty() && !poisoned; }
};

using SymElem = std::map<BKey, LinForm>;

struct Assembler {
    const ExtensionConfig& cfg;
    int R, S, T;
    std::vector<Unknown> unknowns;
    std::map<std::tuple<int, long long, int, int, int>, std::size_t> index;

    explicit Assembler(const ExtensionConfig& c)
        : cfg(c),
          R(static_cast<int>(c.b_list.size())),
          S(static_cast<int>(c.d_list.size())),
          T(static_cast<int>(c.trivial_dim)) {
        // Unknown order: family, then k, then summand indices (deterministic
        // elimination order).
        for (long long k = -cfg.window; k <= cfg.window; ++k)
            for (int l = 0; l < R; ++l)
                for (int lp = 0; lp < S; ++lp)
                    push({Unknown::Kind::Mu, k, l, lp, 0});
        for (long long k = -cfg.window; k <= cfg.window; ++k)
            for (int lp = 0; lp < S; ++lp)
                for (int l = 0; l < R; ++l)
                    push({Unknown::Kind::Lambda, k, l, lp, 0});
        for (long long k = -cfg.window; k <= cfg.window; ++k)
            for (int l = 0; l < R; ++l)
                for (int t = 0; t < T; ++t)
                    push({Unknown::Kind::WL, k, l, 0, t});
        for (long long k = -cfg.window; k <= cfg.window; ++k)
            for (int lp = 0; lp < S; ++lp)
                for (int t = 0; t < T; ++t)
                    push({Unknown::Kind::WLp, k, 0, lp, t});
    }

    void push(Unknown u) {
        index.emplace(key(u), unknowns.size());
        unknowns.push_back(u);
    }
    static std::tuple<int, long long, int, int, int> key(const Unknown& u) {
        return {static_cast<int>(u.kind), u.k, u.l, u.lp, u.t};
    }

    std::optional<std::size_t> find(Unknown::Kind kind, long long k, int l, int lp, int t) const {
        if (k < -cfg.window || k > cfg.window) return std::nullopt;
        auto it = index.find(std::tuple<int, long long, int, int, int>{static_cast<int>(kind), k,
                                                                       l, lp, t});
        if (it == index.end()) return std::nullopt;
        return it->second;
    }

    // a + k + m b_l etc.
    GaussRat coeff0(long long k, int l, long long m) const {
        return GaussRat(cfg.a + k) + GaussRat(Rat(m)) * cfg.b_list[static_cast<std::size_t>(l)];
    }
    GaussRat coeff1(long long k, int lp, long long m) const {
        return GaussRat(cfg.a + Rat(1, 2) + k) +
               GaussRat(Rat(m)) * cfg.d_list[static_cast<std::size_t>(lp)];
    }

    // L'_m acting on a symbolic element (kills W).
    SymElem act_lp(long long m, const SymElem& x) const {
        SymElem out;
        for (const auto& [b, lf] : x) {
            if (b.sector == 2) continue;
            GaussRat c = b.sector == 0 ? coeff0(b.k, b.comp, m) : coeff1(b.k, b.comp, m);
            if (c.is_zero() && !lf.poisoned) continue;
            BKey nb{b.sector, b.k + m, b.comp};
            out[nb].add_scaled(lf, c);
        }
        return out;
    }

    // Y_{1/2} applied to a single basis vector, scaled. Out-of-window unknown
    // references poison the receiving component; poisoned rows are dropped.
    void add_y_of_basis(const BKey& b, const GaussRat& scale, SymElem& out) const {
        if (scale.is_zero()) return;
        if (b.sector == 0) {
            for (int lp = 0; lp < S; ++lp) {
                auto idx = find(Unknown::Kind::Mu, b.k, b.comp, lp, 0);
                auto& lf = out[BKey{1, b.k, lp}];
                if (idx)
                    lf.add(*idx, scale);
                else
                    lf.poisoned = true;
            }
            for (int t = 0; t < T; ++t) {
                auto idx = find(Unknown::Kind::WL, b.k, b.comp, 0, t);
                auto& lf = out[BKey{2, 0, t}];
                if (idx)
                    lf.add(*idx, scale);
                else
                    lf.poisoned = true;
            }
        } else if (b.sector == 1) {
            for (int l = 0; l < R; ++l) {
                auto idx = find(Unknown::Kind::Lambda, b.k, l, b.comp, 0);
                auto& lf = out[BKey{0, b.k + 1, l}];
                if (idx)
                    lf.add(*idx, scale);
                else
                    lf.poisoned = true;
            }
            for (int t = 0; t < T; ++t) {
                auto idx = find(Unknown::Kind::WLp, b.k, 0, b.comp, t);
                auto& lf = out[BKey{2, 0, t}];
                if (idx)
                    lf.add(*idx, scale);
                else
                    lf.poisoned = true;
            }
        } else {
            throw error("internal: Y applied to a trivial-summand component");
        }
    }
};

// Numeric element: basis vector -> scalar (used to feed Y symbolically).
using NumElem = std::map<BKey, GaussRat>;

SymElem y_of(const Assembler& as, const NumElem& x) {
    SymElem out;
    for (const auto& [b, c] : x) as.add_y_of_basis(b, c, out);
    return out;
}

NumElem lp_of(const Assembler& as, long long m, const NumElem& x) {
    NumElem out;
    for (const auto& [b, c] : x) {
        if (b.sector == 2) continue;
        GaussRat f = b.sector == 0 ? as.coeff0(b.k, b.comp, m) : as.coeff1(b.k, b.comp, m);
        if (f.is_zero()) continue;
        BKey nb{b.sector, b.k + m, b.comp};
        auto [it, inserted] = out.try_emplace(nb, c * f);
        if (!inserted) it->second += c * f;
    }
    return out;
}

void sym_add(SymElem& acc, const SymElem& x, const GaussRat& scale) {
    for (const auto& [b, lf] : x) acc[b].add_scaled(lf, scale);
}

// Ym := [L'_-1, Y] applied to a numeric element.
SymElem ym_of(const Assembler& as, const NumElem& x) {
    SymElem out = as.act_lp(-1, y_of(as, x));
    sym_add(out, y_of(as, lp_of(as, -1, x)), GaussRat(-1));
    return out;
}

std::string bkey_name(const BKey& b) {
    if (b.sector == 0) return "v[k=" + std::to_string(b.k) + ",l=" + std::to_string(b.comp + 1) + "]";
    if (b.sector == 1)
        return "v[1/2+k=" + std::to_string(b.k) + ",l'=" + std::to_string(b.comp + 1) + "]";
    return "e[t=" + std::to_string(b.comp + 1) + "]";
}

void emit_rows(const SymElem& residual, const std::string& tag_sector0,
               const std::string& tag_sector1, const std::string& tag_w,
               const std::string& source, const RowFilter& filter,
               std::vector<ConstraintRow>& rows) {
    for (const auto& [b, lf] : residual) {
        if (lf.poisoned || lf.coeffs.empty()) continue;
        std::string tag = b.sector == 0 ? tag_sector0 : b.sector == 1 ? tag_sector1 : tag_w;
        if (!filter.admits(tag)) continue;
        rows.push_back(ConstraintRow{lf.coeffs, tag, source + " -> " + bkey_name(b)});
    }
}

void validate(const ExtensionConfig& cfg) {
    if (cfg.window < 1) throw invalid_parameters("extension window must be >= 1");
    if (cfg.b_list.empty() || cfg.d_list.empty())
        throw invalid_parameters("extension config needs at least one b and one d");
    if (!(cfg.a >= 0 && cfg.a < Rat(1, 2)))
        throw invalid_parameters("extension offset must satisfy 0 <= a < 1/2");
    if (cfg.trivial_dim < 0) throw invalid_parameters("trivial_dim must be >= 0");
}

} // namespace

std::vector<std::string> off_line_parameters(const ExtensionConfig& cfg) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < cfg.b_list.size(); ++i)
        if (cfg.b_list[i].re != Rat(1, 2))
            out.push_back("b[" + std::to_string(i + 1) + "]=" + to_string(cfg.b_list[i]));
    for (std::size_t i = 0; i < cfg.d_list.size(); ++i)
        if (cfg.d_list[i].re != Rat(1, 2))
            out.push_back("d[" + std::to_string(i + 1) + "]=" + to_string(cfg.d_list[i]));
    return out;
}

ExtensionSystem assemble_constraints(const ExtensionConfig& cfg, const RowFilter& filter) {
    validate(cfg);
    Assembler as(cfg);
    ExtensionSystem sys;
    sys.cfg = cfg;
    sys.unknowns = as.unknowns;

    auto run_identities = [&](const BKey& v) {
        NumElem x{{v, GaussRat(1)}};
        std::string vs = bkey_name(v);
        bool sector0 = v.sector == 0;

        // [L'_1, Y] v = 0
        {
            SymElem r = as.act_lp(1, y_of(as, x));
            sym_add(r, y_of(as, lp_of(as, 1, x)), GaussRat(-1));
            emit_rows(r, sector0 ? "first-order.mu" : "first-order.lambda", sector0 ? "first-order.mu" : "first-order.lambda", "w.first",
                      "[L'1,Y]" + vs, filter, sys.rows);
        }
        // [L'_1, Ym] v + Y v = 0
        {
            SymElem r = as.act_lp(1, ym_of(as, x));
            sym_add(r, ym_of(as, lp_of(as, 1, x)), GaussRat(-1));
            sym_add(r, y_of(as, x), GaussRat(1));
            emit_rows(r, sector0 ? "second-order.mu" : "second-order.lambda", sector0 ? "second-order.mu" : "second-order.lambda", "w.second",
                      "[L'1,Ym]" + vs, filter, sys.rows);
        }
        // [L'_-1, Ym] v = 0
        {
            SymElem r = as.act_lp(-1, ym_of(as, x));
            sym_add(r, ym_of(as, lp_of(as, -1, x)), GaussRat(-1));
            emit_rows(r, sector0 ? "closure.mu" : "closure.lambda", sector0 ? "closure.mu" : "closure.lambda",
                      "w.closure", "[L'-1,Ym]" + vs, filter, sys.rows);
        }
    };

    for (long long k = -cfg.window - 2; k <= cfg.window + 2; ++k) {
        for (int l = 0; l < as.R; ++l) run_identities(BKey{0, k, l});
        for (int lp = 0; lp < as.S; ++lp) run_identities(BKey{1, k, lp});
    }
    return sys;
}

std::vector<Vec> nullspace(const ExtensionSystem& sys) {
    if (sys.rows.empty()) {
        // No constraints: the full space.
        std::vector<Vec> basis;
        for (std::size_t i = 0; i < sys.unknowns.size(); ++i) {
            Vec v(sys.unknowns.size());
            v[i] = GaussRat(1);
            basis.push_back(std::move(v));
        }
        return basis;
    }
    return nullspace(sys.matrix());
}

namespace {

// Finds a row (by tag) that, after substituting known zeros, pins a single
// remaining unknown to zero. Returns its index.
struct Derivation {
    const ExtensionSystem& sys;
    std::set<std::size_t> zero;

    std::optional<std::size_t> pin_from_row(const ConstraintRow& row) {
        std::optional<std::size_t> pending;
        for (const auto& [idx, c] : row.coeffs) {
            if (zero.count(idx)) continue;
            if (pending) return std::nullopt; // more than one live unknown
            pending = idx;
        }
        return pending;
    }
};

} // namespace

ReplayReport special_case_replay(const ExtensionConfig& cfg) {
    validate(cfg);
    if (cfg.a != 0) throw invalid_parameters("special-case replay requires a = 0");
    const GaussRat half(Rat(1, 2));
    std::vector<int> degenerate;
    for (std::size_t i = 0; i < cfg.d_list.size(); ++i)
        if (cfg.d_list[i] == half) degenerate.push_back(static_cast<int>(i));
    if (degenerate.empty())
        throw invalid_parameters("special-case replay requires some d_{l'} = 1/2");

    ExtensionSystem sys = assemble_constraints(cfg);
    Derivation der{sys, {}};
    ReplayReport rep;

    auto find_unknown = [&](Unknown::Kind kind, long long k, int l, int lp) {
        for (std::size_t i = 0; i < sys.unknowns.size(); ++i) {
            const Unknown& u = sys.unknowns[i];
            if (u.kind == kind && u.k == k && u.l == l && u.lp == lp) return i;
        }
        throw error("internal: unknown not found");
    };
    auto row_with = [&](const std::string& tag, std::size_t unknown) {
        // Deterministic: the first row of that tag whose support includes the
        // unknown and which pins it once the known zeros are substituted.
        for (const auto& row : sys.rows) {
            if (row.tag != tag) continue;
            if (!row.coeffs.count(unknown)) continue;
            auto pinned = der.pin_from_row(row);
            if (pinned && *pinned == unknown) return true;
        }
        return false;
    };

    const int R = static_cast<int>(cfg.b_list.size());
    const long long K = cfg.window;

    for (int lp : degenerate) {
        for (int l = 0; l < R; ++l) {
            // mu_k = 0 for k >= 0 via the degenerate first-order row.
            ReplayStage s1{"mu(k>=0)=0[l=" + std::to_string(l + 1) +
                           ",l'=" + std::to_string(lp + 1) + "]",
                           {},
                           true,
                           "first-order recurrence degenerates at k=-1"};
            for (long long k = 0; k <= K; ++k) {
                std::size_t u = find_unknown(Unknown::Kind::Mu, k, l, lp);
                if (row_with("first-order.mu", u)) {
                    der.zero.insert(u);
                    s1.zeroed.push_back(sys.unknowns[u].name());
                } else {
                    s1.ok = false;
                    s1.note = "could not pin " + sys.unknowns[u].name();
                    break;
                }
            }
            rep.stages.push_back(s1);

            // Stage mu_{-1} = 0: the closure row at k = 1 pins it directly.
            ReplayStage s2{"mu(-1)=0[l=" + std::to_string(l + 1) + ",l'=" + std::to_string(lp + 1) +
                           "]",
                           {},
                           true,
                           "closure family row ([L'-1,Ym] = 0 at k=1)"};
            {
                std::size_t u = find_unknown(Unknown::Kind::Mu, -1, l, lp);
                if (row_with("closure.mu", u)) {
                    der.zero.insert(u);
                    s2.zeroed.push_back(sys.unknowns[u].name());
                } else {
                    s2.ok = false;
                    s2.note = "could not pin " + sys.unknowns[u].name();
                }
            }
            rep.stages.push_back(s2);

            // chain downward for k < -1.
            ReplayStage s3{"mu(k<0)=0[l=" + std::to_string(l + 1) +
                           ",l'=" + std::to_string(lp + 1) + "]",
                           {},
                           true,
                           "first-order chain downward"};
            for (long long k = -2; k >= -K; --k) {
                std::size_t u = find_unknown(Unknown::Kind::Mu, k, l, lp);
                if (row_with("first-order.mu", u)) {
                    der.zero.insert(u);
                    s3.zeroed.push_back(sys.unknowns[u].name());
                } else {
                    s3.ok = false;
                    s3.note = "could not pin " + sys.unknowns[u].name();
                    break;
                }
            }
            rep.stages.push_back(s3);

            // lambda_k = 0 for k <= 0 (k <= -1 by the degenerate
            // first-order row, lambda_0 by the closure row at k = 0).
            ReplayStage s4{"lambda(k<=0)=0[l'=" + std::to_string(lp + 1) +
                           ",l=" + std::to_string(l + 1) + "]",
                           {},
                           true,
                           "first-order degeneracy + closure row at k=0"};
            for (long long k = -1; k >= -K; --k) {
                std::size_t u = find_unknown(Unknown::Kind::Lambda, k, l, lp);
                if (row_with("first-order.lambda", u)) {
                    der.zero.insert(u);
                    s4.zeroed.push_back(sys.unknowns[u].name());
                } else {
                    s4.ok = false;
                    s4.note = "could not pin " + sys.unknowns[u].name();
                    break;
                }
            }
            if (s4.ok) {
                std::size_t u = find_unknown(Unknown::Kind::Lambda, 0, l, lp);
                if (row_with("closure.lambda", u)) {
                    der.zero.insert(u);
                    s4.zeroed.push_back(sys.unknowns[u].name());
                } else {
                    s4.ok = false;
                    s4.note = "could not pin " + sys.unknowns[u].name();
                }
            }
            rep.stages.push_back(s4);

            // lambda_k = 0 for k > 0 upward.
            ReplayStage s5{"lambda(k>0)=0[l'=" + std::to_string(lp + 1) +
                           ",l=" + std::to_string(l + 1) + "]",
                           {},
                           true,
                           "first-order chain upward"};
            for (long long k = 1; k <= K; ++k) {
                std::size_t u = find_unknown(Unknown::Kind::Lambda, k, l, lp);
                if (row_with("first-order.lambda", u)) {
                    der.zero.insert(u);
                    s5.zeroed.push_back(sys.unknowns[u].name());
                } else {
                    s5.ok = false;
                    s5.note = "could not pin " + sys.unknowns[u].name();
                    break;
                }
            }
            rep.stages.push_back(s5);
        }
    }

    if (cfg.trivial_dim > 0) {
        // Every W component is pinned by its own second-order row, whose
        // coefficient is a sum of a nonneg square and 1 on the line Re = 1/2.
        ReplayStage sw{"w=0", {}, true, "second-order w rows have nonzero scalar coefficients"};
        for (std::size_t i = 0; i < sys.unknowns.size(); ++i) {
            const Unknown& u = sys.unknowns[i];
            if (u.kind != Unknown::Kind::WL && u.kind != Unknown::Kind::WLp) continue;
            if (row_with("w.second", i)) {
                der.zero.insert(i);
                sw.zeroed.push_back(u.name());
            } else {
                sw.ok = false;
                sw.note = "could not pin " + u.name();
                break;
            }
        }
        rep.stages.push_back(sw);
    }

    auto basis = nullspace(sys);
    rep.final_nullity = static_cast<long long>(basis.size());
    rep.passed = rep.final_nullity == 0;
    for (const auto& s : rep.stages) rep.passed = rep.passed && s.ok;
    return rep;
}

CheckReport verify_solution_against_identities(const ExtensionConfig& cfg, const Vec& solution,
                                               bool include_closure) {
    validate(cfg);
    CheckReport rep;
    Assembler as(cfg);
    if (solution.size() != as.unknowns.size())
        throw invalid_parameters("solution vector has the wrong dimension");

    const int R = as.R, S = as.S, T = as.T;

    // Per-summand series specs drive the L' action through the
    // representations machinery.
    std::vector<SeriesSpec> spec0, spec1;
    for (int l = 0; l < R; ++l)
        spec0.push_back(SeriesSpec::aab(GaussRat(cfg.a), cfg.b_list[static_cast<std::size_t>(l)]));
    for (int lp = 0; lp < S; ++lp)
        spec1.push_back(
            SeriesSpec::aab(GaussRat(cfg.a + Rat(1, 2)), cfg.d_list[static_cast<std::size_t>(lp)]));

    // A module vector: one SeriesVector per summand plus a W block.
    struct MVec {
        std::vector<SeriesVector> s0, s1;
        Vec w;
    };
    auto zero_vec = [&] {
        MVec v;
        v.s0.resize(static_cast<std::size_t>(R));
        v.s1.resize(static_cast<std::size_t>(S));
        v.w.assign(static_cast<std::size_t>(T), GaussRat());
        return v;
    };
    auto is_zero = [&](const MVec& v) {
        for (const auto& s : v.s0)
            if (!s.empty()) return false;
        for (const auto& s : v.s1)
            if (!s.empty()) return false;
        for (const auto& c : v.w)
            if (!c.is_zero()) return false;
        return true;
    };
    auto axpy = [&](MVec& acc, const MVec& x, const GaussRat& scale) {
        auto merge = [&](SeriesVector& dst, const SeriesVector& src) {
            for (const auto& [k, c] : src) {
                auto [it, inserted] = dst.try_emplace(k, c * scale);
                if (!inserted) {
                    it->second += c * scale;
                    if (it->second.is_zero()) dst.erase(it);
                }
            }
        };
        for (int l = 0; l < R; ++l) merge(acc.s0[static_cast<std::size_t>(l)], x.s0[static_cast<std::size_t>(l)]);
        for (int lp = 0; lp < S; ++lp) merge(acc.s1[static_cast<std::size_t>(lp)], x.s1[static_cast<std::size_t>(lp)]);
        for (int t = 0; t < T; ++t) acc.w[static_cast<std::size_t>(t)] += x.w[static_cast<std::size_t>(t)] * scale;
    };
    auto act_lp = [&](long long m, const MVec& x) {
        MVec out = zero_vec();
        for (int l = 0; l < R; ++l)
            out.s0[static_cast<std::size_t>(l)] =
                series_action(spec0[static_cast<std::size_t>(l)], m, x.s0[static_cast<std::size_t>(l)]);
        for (int lp = 0; lp < S; ++lp)
            out.s1[static_cast<std::size_t>(lp)] =
                series_action(spec1[static_cast<std::size_t>(lp)], m, x.s1[static_cast<std::size_t>(lp)]);
        return out; // W killed
    };
    auto sol = [&](Unknown::Kind kind, long long k, int l, int lp, int t) {
        auto idx = as.find(kind, k, l, lp, t);
        if (!idx) throw error("internal: solution reference outside window");
        return solution[*idx];
    };
    auto act_y = [&](const MVec& x) {
        MVec out = zero_vec();
        for (int l = 0; l < R; ++l)
            for (const auto& [k, c] : x.s0[static_cast<std::size_t>(l)]) {
                for (int lp = 0; lp < S; ++lp) {
                    GaussRat mu = sol(Unknown::Kind::Mu, k, l, lp, 0);
                    if (mu.is_zero()) continue;
                    auto& dst = out.s1[static_cast<std::size_t>(lp)];
                    auto [it, inserted] = dst.try_emplace(k, c * mu);
                    if (!inserted) {
                        it->second += c * mu;
                        if (it->second.is_zero()) dst.erase(it);
                    }
                }
                for (int t = 0; t < T; ++t)
                    out.w[static_cast<std::size_t>(t)] += c * sol(Unknown::Kind::WL, k, l, 0, t);
            }
        for (int lp = 0; lp < S; ++lp)
            for (const auto& [k, c] : x.s1[static_cast<std::size_t>(lp)]) {
                for (int l = 0; l < R; ++l) {
                    GaussRat la = sol(Unknown::Kind::Lambda, k, l, lp, 0);
                    if (la.is_zero()) continue;
                    auto& dst = out.s0[static_cast<std::size_t>(l)];
                    auto [it, inserted] = dst.try_emplace(k + 1, c * la);
                    if (!inserted) {
                        it->second += c * la;
                        if (it->second.is_zero()) dst.erase(it);
                    }
                }
                for (int t = 0; t < T; ++t)
                    out.w[static_cast<std::size_t>(t)] += c * sol(Unknown::Kind::WLp, k, 0, lp, t);
            }
        return out;
    };
    auto act_ym = [&](const MVec& x) {
        MVec out = act_lp(-1, act_y(x));
        axpy(out, act_y(act_lp(-1, x)), GaussRat(-1));
        return out;
    };

    // Evaluate the raw identities on basis vectors whose orbit stays inside
    // the window.
    auto basis_vec = [&](int sector, long long k, int comp) {
        MVec v = zero_vec();
        if (sector == 0)
            v.s0[static_cast<std::size_t>(comp)].emplace(k, GaussRat(1));
        else
            v.s1[static_cast<std::size_t>(comp)].emplace(k, GaussRat(1));
        return v;
    };

    for (long long k = -cfg.window + 2; k <= cfg.window - 2; ++k) {
        for (int sector = 0; sector <= 1; ++sector) {
            int count = sector == 0 ? R : S;
            for (int comp = 0; comp < count; ++comp) {
                MVec v = basis_vec(sector, k, comp);
                {
                    rep.count();
                    MVec r = act_lp(1, act_y(v));
                    axpy(r, act_y(act_lp(1, v)), GaussRat(-1));
                    if (!is_zero(r))
                        rep.fail("[L'1,Y] != 0 at " +
                                 bkey_name(BKey{sector, k, comp}));
                }
                {
                    rep.count();
                    MVec r = act_lp(1, act_ym(v));
                    axpy(r, act_ym(act_lp(1, v)), GaussRat(-1));
                    axpy(r, act_y(v), GaussRat(1));
                    if (!is_zero(r))
                        rep.fail("[L'1,[L'-1,Y]] != -Y at " +
                                 bkey_name(BKey{sector, k, comp}));
                }
                if (include_closure) {
                    rep.count();
                    MVec r = act_lp(-1, act_ym(v));
                    axpy(r, act_ym(act_lp(-1, v)), GaussRat(-1));
                    if (!is_zero(r))
                        rep.fail("[L'-1,[L'-1,Y]] != 0 at " +
                                 bkey_name(BKey{sector, k, comp}));
                }
            }
        }
    }
    return rep;
}

} // namespace sv
