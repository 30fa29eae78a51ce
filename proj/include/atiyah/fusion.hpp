#pragma once

#include "atiyah/lifting.hpp"

namespace atiyah {

using PairFn = std::function<Vec(const Mat& g2, const Mat& g1)>;
using PairProfile = std::function<Vec(const Mat& g2, const Mat& g1, double t)>;

// A section of A x A over G x G: (xi'', xi') at (g'', g'). Component 2
// lives in the g''-slot, component 1 in the g'-slot.
struct PairSection {
    PairProfile xi2, dxi2, xi1, dxi1;
    PairFn v2, v1;
};

// (xi'' * xi')_t = xi'_{2t} on [0, 1/2], xi''_{2t-1} on [1/2, 1], with anchor
// Ad_{g''} v' + v''. The result is evaluated pointwise: its profile ignores
// the base point and is meant to be read at g'' g'.
Section concat(const Group& G, const Section& second, const Section& first, const Mat& g2, const Mat& g1);
Section concat(const Group& G, const PairSection& p, const Mat& g2, const Mat& g1);

// Component of a pair section frozen at (g'', g').
Section slice(const PairSection& p, int which, const Mat& g2, const Mat& g1);

// |xi'_1 - xi''_0| and the two seam residuals of the components.
double composability_residual(const PairSection& p, const Mat& g2, const Mat& g1);
double pair_seam_residual(const Group& G, const PairSection& p, const Mat& g2, const Mat& g1);

// A composable pair: xi' from the section template in g', and
// xi''_t = c + f(t)(Ad_{g''} c + v'' - c) + f(t)(1 - f(t)) w with c = xi'_1.
PairSection sample_composable(const Group& G, Sampler& s, BumpFunction f = BumpFunction{0.1});

// Pointwise section at g starting at xi_0 = start, flat near the ends.
Section continue_from(const Group& G, const Vec& start, const Mat& g, const Vec& v, const Vec& w,
                      BumpFunction f = BumpFunction{0.1});

// Bracket of A x A over G x G.
PairSection bracket_pair(const Group& G, const PairSection& a, const PairSection& b, const FdConfig& fd = {});

// lambda = 1/2 pr_1^* theta^L . pr_2^* theta^R on G x G
DeRham fusion_lambda(const Group& G);

// varpi(xi''*xi', zeta''*zeta') - varpi(xi'', zeta'') - varpi(xi', zeta')
// + lambda(a(xi), a(zeta)) at (g'', g')
double fusion_residual(const Group& G, const PairSection& a, const PairSection& b, const Mat& g2, const Mat& g1,
                       const Numerics& num = {});

// (xi, alpha) in A + A*
struct CourantElement {
    Section section;
    AlgebroidForm coform;
};

// ([v1, v2]_A, L_{v1} alpha2 - iota_{v2} d alpha1)
CourantElement courant_bracket(const AlgebroidCalc& calc, const CourantElement& a, const CourantElement& b);
// alpha1(v2) + alpha2(v1)
double courant_pairing(const CourantElement& a, const CourantElement& b, const Mat& g);
// f(xi) = (xi, iota_xi varpi)
CourantElement isotropic_action(const AlgebroidForm& varpi, const Section& xi);

// Coform part of [[f(v1) + alpha1, f(v2) + alpha2]] minus
// f([v1, v2]_A) + iota_{v2} iota_{v1} a^* eta + L_{v1} alpha2 - iota_{v2} d alpha1,
// evaluated on zeta at g.
double reduced_bracket_residual(const AlgebroidCalc& calc, const AlgebroidForm& varpi, const AlgebroidForm& eta,
                                const Section& v1, const Section& v2, const AlgebroidForm& alpha1,
                                const AlgebroidForm& alpha2, const Section& zeta, const Mat& g);

}  // namespace atiyah
