#pragma once

#include <map>
#include <optional>

#include "sv/involution.hpp"
#include "sv/linalg.hpp"
#include "sv/verma.hpp"

namespace sv {

// Exact verdict on a would-be Gram matrix. `witness` satisfies
// conj-transpose(witness) * G * witness < 0 when Indefinite; `cell` names the
// first conjugate-symmetry violation when NonHermitian.
struct PositivityVerdict {
    enum class Tag { PositiveDefinite, PositiveSemidefinite, Indefinite, NonHermitian };

    Tag tag = Tag::PositiveDefinite;
    long long radical_dim = 0;
    Vec witness;
    std::pair<std::size_t, std::size_t> cell{0, 0};

    bool is_psd() const {
        return tag == Tag::PositiveDefinite || tag == Tag::PositiveSemidefinite;
    }
};

std::string to_string(PositivityVerdict::Tag t);

// Contravariant Hermitian form on the depth-truncated module, conjugate
// linear in the FIRST argument, with <v, v> = 1 on the highest weight vector:
// <x u, w> = <u, theta(x) w>. Computed by anti-multiplicative unwinding of the
// left factors through theta and straightening; distinct levels pair to zero.
GaussRat contravariant_form(const Weight& wt, const InvolutionParams& p, long long depth,
                            const ModuleElement& u, const ModuleElement& v);

// Gram matrix of the level-d canonical basis (doubled level d <= depth).
Mat gram(const Weight& wt, const InvolutionParams& p, long long level, long long depth);

// Exact verdict by Hermitian congruence elimination with diagonal pivoting.
PositivityVerdict positivity(const Mat& g);

// Exact nullspace basis of a Hermitian Gram matrix (the form radical).
std::vector<Vec> radical_basis(const Mat& g);

// Per-level Gram blocks for doubled levels 0..depth.
struct GradedForm {
    long long depth = 0;
    std::vector<Mat> blocks;
};

GradedForm gram_all(const Weight& wt, const InvolutionParams& p, long long depth);

// Evaluates the graded form on module elements (distinct levels orthogonal).
GaussRat form_eval(const GradedForm& f, const std::vector<std::vector<Monomial>>& levels,
                   const ModuleElement& u, const ModuleElement& v);

// Scales the doubled-level-d block by rho^d, converting a form contravariant
// for theta+_{alpha,beta,mu} (alpha = rho^2 > 0) into one contravariant for
// theta+_{1,beta,mu}. Throws on alpha <= 0.
GradedForm rescale_form(const InvolutionParams& p_from, const GradedForm& f);

// Exhaustively checks <x u, w> = <u, theta(x) w> for all basis generators x
// with |grade| <= maxgrade and all canonical basis monomials within depth.
CheckReport form_contravariance_check(const GradedForm& f, const Weight& wt,
                                      const InvolutionParams& p, long long depth,
                                      long long maxgrade);

// Diagonal-form feasibility for the lift A_{a,b,0,0} under theta+_{1,beta,mu}
// (the M-terms of theta act as zero on the lift). Indices range over
// |n|, |k| <= w.bound/2. Throws reducible_parameters when a+k+b or a+k+1-b
// vanishes in range.
struct FeasibilityResult {
    enum class Tag { Feasible, Infeasible };
    Tag tag = Tag::Feasible;
    std::map<long long, Rat> weights; // k -> p_k > 0 when Feasible
    long long bad_n = 0;
    long long bad_k = 0;
};

FeasibilityResult series_unitarity_feasibility(const Rat& a, const GaussRat& b, const Window& w);

} // namespace sv
