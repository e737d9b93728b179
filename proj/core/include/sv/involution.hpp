#pragma once

#include <functional>
#include <optional>
#include <variant>

#include "sv/element.hpp"
#include "sv/report.hpp"

namespace sv {

// Parameters of the conjugate-linear anti-involution theta+_{alpha,beta,mu}.
// Square roots are carried, never computed: rho^2 = alpha (real, nonzero;
// rho is rational for alpha > 0 and purely imaginary for alpha < 0) and
// nu^2 = mu with |nu| = 1.
struct PlusParams {
    GaussRat rho;
    GaussRat beta;
    GaussRat nu;
};

// Parameters of theta-_{alpha,r1,r2,mu}: tau^2 = alpha with |tau| = 1,
// sigma^2 = -mu with |sigma| = 1, and real r1, r2.
struct MinusParams {
    GaussRat tau;
    Rat r1;
    Rat r2;
    GaussRat sigma;
};

class InvolutionParams {
  public:
    explicit InvolutionParams(PlusParams p);
    explicit InvolutionParams(MinusParams p);

    static InvolutionParams plus(GaussRat rho, GaussRat beta, GaussRat nu) {
        return InvolutionParams(PlusParams{std::move(rho), std::move(beta), std::move(nu)});
    }
    static InvolutionParams minus(GaussRat tau, Rat r1, Rat r2, GaussRat sigma) {
        return InvolutionParams(MinusParams{std::move(tau), std::move(r1), std::move(r2), std::move(sigma)});
    }

    bool is_plus() const { return std::holds_alternative<PlusParams>(v_); }
    const PlusParams& plus_params() const { return std::get<PlusParams>(v_); }
    const MinusParams& minus_params() const { return std::get<MinusParams>(v_); }

    // alpha = rho^2 (plus) or tau^2 (minus); real in both families.
    GaussRat alpha() const;
    // mu = nu^2 (plus) or -sigma^2 (minus); unit modulus.
    GaussRat mu() const;
    // The carried square root of mu: nu for plus, -i*sigma for minus.
    GaussRat root_mu() const;

    std::string describe() const;

  private:
    std::variant<PlusParams, MinusParams> v_;
};

// theta on a single basis symbol.
//   plus:  L_n -> a^n L_{-n} + ((n+1)/2 a^{n-1} b + (n-1)/2 a^{n-1} mu conj(b)) M_{-n}
//          M_n -> mu a^n M_{-n},  Y_y -> nu rho^y Y_{-y},  c -> c
//   minus: L_n -> -a^n L_n + a^n mu^{1/2} ((n+1)/2 r1 - (n-1)/2 r2) M_n
//          M_n -> mu a^n M_n,   Y_y -> sigma tau^y Y_y,    c -> -c
Element apply_basis(const InvolutionParams& p, const BasisIndex& b);

// Conjugate-linear extension to sparse elements.
Element apply(const InvolutionParams& p, const Element& x);

using InvolutionFn = std::function<Element(const Element&)>;

// The plus family with the sign of the conj(beta) correction term flipped;
// breaks anti-multiplicativity (negative control for the axiom checker).
Element apply_basis_beta_flipped(const InvolutionParams& p, const BasisIndex& b);
Element apply_beta_flipped(const InvolutionParams& p, const Element& x);

// Checks additivity, theta(q x) = conj(q) theta(x) on sampled scalars,
// theta([x,y]) = [theta(y), theta(x)] on all basis pairs in the window,
// theta^2 = id, plus the structural consequences theta(M+Y) <= M+Y,
// theta(h) = h and theta(c) = +-c.
CheckReport axioms_check(const InvolutionParams& p, const Window& w);
CheckReport axioms_check_fn(const InvolutionFn& theta, const Window& w);

// Deformed Virasoro generator L'_n:
//   plus:  L'_n = L_n - (n-1)/2 alpha^{-1} beta M_n
//   minus: L'_n = L_n + x_n M_n with the canonical
//          x_n = mu^{1/2} ((n-1)/2 r2 - (n+1)/2 r1) / 2,
//          which satisfies conj(x_n) mu^{1/2} + x_n mu^{-1/2}
//                          = (n-1)/2 r2 - (n+1)/2 r1.
Element vir_prime_generator(long long n, const InvolutionParams& p);

// [L'_m, L'_n] = (n-m) L'_{m+n} + delta_{m+n,0} (m^3-m)/12 c over the window.
CheckReport vir_prime_bracket_check(const Window& w, const InvolutionParams& p);

// theta(L'_n) = alpha^n L'_{-n} (plus) or -alpha^n L'_n (minus) over the window.
CheckReport restrict_check_vir_prime(const InvolutionParams& p, const Window& w);

// Defines beta_{m,-m} = (m+1)/2 alpha^{m-1} beta1 - (m-1)/2 alpha^{m+1} betam1
// and replays (n-m) beta_{m+n,-(m+n)} = n beta_{n,-n} alpha^m - m alpha^n beta_{m,-m}
// for all covered m, n; when mu is supplied also checks
// betam1 = -alpha^{-2} mu conj(beta1).
CheckReport replay_coefficient_recurrence(const Rat& alpha, const GaussRat& beta1,
                                          const GaussRat& betam1, const Window& w,
                                          const std::optional<GaussRat>& mu = std::nullopt);

// With a_{1/2} = nu rho and a_{1/2+n} = alpha^n a_{1/2}: checks
// a_{1/2+m} a_{-1/2-m} = mu over the window and that apply() realizes these
// coefficients on the Y basis. Plus family only.
CheckReport replay_y_coefficients(const InvolutionParams& p, const Window& w);

} // namespace sv
