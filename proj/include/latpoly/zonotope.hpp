#pragma once

#include <map>
#include <vector>

#include "latpoly/lp.hpp"
#include "latpoly/polytope.hpp"
#include "latpoly/types.hpp"

namespace latpoly {

/// Lattice zonotope sum_i [0, v_i]; generators are the columns of an n x m matrix.
class Zonotope
{
    public:
        explicit Zonotope(IntMatrix generators);

        Index ambient_dim() const { return generators_.rows(); }
        Index generator_count() const { return generators_.cols(); }
        const IntMatrix& generators() const { return generators_; }
        IntVector generator(Index j) const { return generators_.col(j); }

        /// Zero generators are allowed; they contribute nothing to g_i, i >= 1.
        Index zero_generator_count() const;
        Index dimension() const;

        /// Z = sum conv{0, v_i}, as a HullSum with one two-column block per generator.
        HullSum body() const;
        /// DZ = sum conv{-v_i, v_i}; full-dimensional Z required.
        GaugeBody difference_body() const;

    private:
        IntMatrix generators_;
};

/// Default cap on the number of generators expanded into 2^m vertex candidates.
inline constexpr Index kDefaultGeneratorCap = 16;

/// All subset sums of the generators (2^m candidates, redundancy kept).
VPolytope as_vpolytope(const Zonotope& z, Index generator_cap = kDefaultGeneratorCap);

/// sum over n-subsets of |det|; zero unless Z is full-dimensional.
Integer zonotope_volume(const Zonotope& z);

/**
 * Ehrhart coefficients as the sum, over linearly independent i-subsets X
 * of generators, of gcd(i-minors of X). Coefficients run up to dim Z.
 */
EhrhartPoly ehrhart_stanley(const Zonotope& z);

/**
 * Ehrhart coefficients as sum_J vol_i(P_J) / det(lin P_J ∩ Z^n); each
 * summand is the index of the lattice generated by the subset in its
 * saturation, computed from an explicit saturated basis.
 */
EhrhartPoly ehrhart_geometric(const Zonotope& z);

/// Every n-subset of generators is linearly independent. Requires m >= n.
bool is_general_position(const Zonotope& z);

/// gcd of the entries equals 1. Throws for the zero vector.
bool is_primitive(const IntVector& v);

/// i-subset of [n] -> (n-i)-subset of [n], both as sorted 0-based index lists.
using SubsetBijection = std::map<std::vector<Index>, std::vector<Index>>;

/**
 * For bases b and a of Q^n (columns) and 1 <= i <= n-1, a bijection phi on
 * index subsets such that {b_k : k in I} ∪ {a_j : j in phi(I)} is a basis
 * for every I. Found as a perfect matching on the nonzero entries of the
 * matrix det[b_I | a_J] by augmenting paths.
 */
SubsetBijection basis_exchange_bijection(const IntMatrix& b, const IntMatrix& a, Index i);

}  // namespace latpoly
