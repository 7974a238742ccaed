#pragma once

// Seeded generators for the randomized verification corpora. Every generator
// draws only from the engine it is given.

#include "alextor/complexes.hpp"
#include "alextor/foxcalc.hpp"

#include <random>

namespace alextor {

using Rng = std::mt19937_64;

struct ComplexGenOptions {
    int max_length = 4;            // number of degrees
    std::size_t max_rank = 5;
    int max_poly_degree = 2;
    unsigned cyclotomic_order = 1; // coefficient field of the generated entries
    double t_minus_one_rate = 0.25; // chance an elementary factor carries t - 1
    double unit_rate = 0.2;         // chance an elementary factor is a unit
};

/// Direct sum of elementary complexes 0 -> L -(f)-> L -> 0, followed by random
/// unimodular base changes in every degree. Homology is always torsion.
BasedComplex random_complex(Rng& rng, const ComplexGenOptions& opt = {});

/// Random nonzero sparse polynomial in K[t] of degree <= max_degree.
LaurentPoly random_poly(Rng& rng, int max_degree, unsigned order);

/// Random nonzero element of Q(zeta_order) with small coordinates.
CycloNumber random_scalar(Rng& rng, unsigned order);

struct MonodromyGenOptions {
    std::size_t max_dim = 4;
    unsigned cyclotomic_order = 4;
    double eigenvalue_one_rate = 0.35;
};

/// P D P^-1 with D diagonal and invertible; eigenvalue 1 appears with the given rate.
CycloMatrix random_semisimple_monodromy(Rng& rng, const MonodromyGenOptions& opt = {});

/// As above but with a J_2(1) block in D, so F is not semisimple at 1.
CycloMatrix random_jordan_monodromy(Rng& rng, const MonodromyGenOptions& opt = {});

/// Two-bridge knot b(p, q) (p odd, q odd, 0 < q < p, coprime) as
/// <x, y | w x w^-1 y^-1> with w = x^e1 y^e2 x^e3 ..., e_i = (-1)^floor(i q / p).
Presentation two_bridge_presentation(int p, int q);

/// Two-generator rep x -> s_0, y -> s_1 with s_k = [[0, z^k], [z^-k, 0]] over
/// z = zeta_p, each scaled by the character zeta_{2p} when twisted.
Representation dihedral_representation(unsigned p, bool twisted);

struct KnotCase {
    std::string label;
    Presentation presentation;
    Representation representation;
};

/// Random two-bridge knot with p <= max_p, a random cyclic rotation or
/// inversion of the relator, and one of the trivial, dihedral or twisted
/// dihedral representations.
KnotCase random_knot_case(Rng& rng, int max_p = 13);

} // namespace alextor
