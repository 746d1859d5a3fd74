#pragma once

#include <vector>

#include "latpoly/linalg.hpp"
#include "latpoly/lp.hpp"
#include "latpoly/types.hpp"

namespace latpoly {

/**
 * Successive minima lambda_1 <= ... <= lambda_k with one witness per
 * minimum: the witnesses are linearly independent lattice vectors and the
 * gauge of witness j is exactly lambda_j.
 */
struct MinimaResult
{
    std::vector<Rational> lambdas;
    std::vector<IntVector> witnesses;

    Rational product() const;
};

/**
 * Minkowski successive minima of a full-dimensional 0-symmetric body with
 * respect to Z^n.
 *
 * Every lattice point z with gauge(z) <= max_i gauge(e_i) is enumerated
 * (the unit vectors are n independent lattice points, so this bound is
 * always large enough). Candidates are sorted by gauge, then by l1 norm,
 * then lexicographically; the greedy choice of independent candidates in
 * that order attains the minima. Only one of each pair +-z is evaluated.
 */
MinimaResult successive_minima(const GaugeBody& body, const EnumerationLimits& limits = {});

/**
 * Minima of the section K ∩ span(L) with respect to the section lattice
 * Z^n ∩ span(L), which the saturated basis L generates. Witnesses are
 * returned in ambient coordinates. Throws if L is not saturated.
 */
MinimaResult successive_minima_section(const GaugeBody& body, const LatticeBasis& section,
                                       const EnumerationLimits& limits = {});

struct SandwichReport
{
    Rational product;       ///< lambda_1 ... lambda_n vol(K)
    Rational lower_bound;   ///< 2^n / n!
    Rational upper_bound;   ///< 2^n
    bool lower_ok = false;
    bool upper_ok = false;
};

/// Both Minkowski volume bounds for minima `minima` of a body of volume `vol`.
SandwichReport minkowski_sandwich(const MinimaResult& minima, const Rational& vol);
SandwichReport minkowski_sandwich(const GaugeBody& body, const Rational& vol,
                                  const EnumerationLimits& limits = {});

struct SectionLemmaReport
{
    MinimaResult section_minima;
    Rational section_product;   ///< prod_j lambda_j(K ∩ L, Z^n ∩ L)
    Rational minima_product;    ///< prod over k not excluded of lambda_k(K)
    bool holds = false;
};

/**
 * Compares the section minima of an i-dimensional saturated sublattice L
 * against the minima of K whose indices are not in `excluded` (0-based,
 * n - i of them). The excluded witnesses must span a complement of
 * span(L); otherwise PreconditionError("subspaces intersect").
 */
SectionLemmaReport check_section_lemma(const GaugeBody& body, const MinimaResult& minima,
                                       const LatticeBasis& section, const std::vector<Index>& excluded,
                                       const EnumerationLimits& limits = {});

}  // namespace latpoly
