#pragma once

#include <string>
#include <vector>

#include "sclab/collection.hpp"

namespace sclab {

// A finite category with explicit composition. Identities are listed with
// the morphisms. Validation checks the identity and associativity laws on
// every composable pair/triple.
struct FiniteCat {
    struct Mor {
        int src = 0, dst = 0;
    };
    int nobj = 0;
    std::vector<Mor> mors;
    std::vector<int> id_of;                      // object -> identity morphism
    std::vector<std::vector<std::vector<int>>> hom;  // hom[x][y]
    std::vector<int> comp;                       // comp[g * nmor + f] = g o f, -1 if not composable
    std::vector<std::string> obj_label;

    int nmor() const { return int(mors.size()); }
    int compose(int g, int f) const { return comp[size_t(g) * mors.size() + f]; }
    void finalize();   // fills hom and identities from mors/comp
    void validate() const;
    FiniteCat opposite() const;
};

// Orbit category on the members of C: objects G/H, morphisms the G-maps
// G/H -> G/K as cosets aK with a^{-1} H a <= K.
struct OrbitCategory {
    FiniteCat cat;
    const Collection* C = nullptr;
    std::vector<int> coset_rep;  // per morphism: canonical coset representative a
};
OrbitCategory build_orbit_category(const Collection& C);

// Conjugacy category: objects the members, morphisms the distinct
// homomorphisms H -> K of the form x -> g x g^{-1}.
struct ConjugacyCategory {
    FiniteCat cat;
    const Collection* C = nullptr;
    std::vector<int> witness;  // per morphism: one g inducing it
};
ConjugacyCategory build_conjugation_category(const Collection& C);

// Orbit simplex category: objects the G-classes of strict chains in C;
// a morphism [tau] -> [sigma] whenever tau has a subchain conjugate to
// sigma (unique, since the member orders along a strict chain are
// distinct). Composition is by faces of faces; well-definedness is
// verified exhaustively at build time.
struct OrbitSimplexCategory {
    FiniteCat cat;
    const Collection* C = nullptr;
    std::vector<std::vector<int>> chain_rep;  // object -> representative chain (member indices)
    std::vector<Subgroup> stabilizer;          // object -> pointwise chain stabilizer
    std::vector<int> conjugator;  // per morphism [tau]->[sigma]: g with g sigma_rep g^{-1} = subchain of tau_rep
    std::vector<int> obj_dim;     // chain length - 1
};
OrbitSimplexCategory build_orbit_simplex_category(const Collection& C);

// Equivariant chain data of |C|: all strict chains with orbit bookkeeping.
struct GChainComplex {
    const Collection* C = nullptr;
    std::vector<std::vector<std::vector<int>>> chains;  // per dim
    std::vector<std::vector<int>> orbit_of;             // per dim, per chain -> orbit id
    std::vector<std::vector<int>> rep_chain;            // per dim, per orbit -> chain index
    std::vector<std::vector<int>> to_rep;               // per dim, per chain: g with chain = g . rep
    std::vector<std::vector<Subgroup>> stab;            // per dim, per orbit: stabilizer of the rep
};
// seed < 0: canonical (lex-min) orbit representatives; otherwise a seeded
// random choice of representatives and conjugators, used to verify that
// reported dimensions do not depend on these choices.
GChainComplex build_g_chain_complex(const Collection& C, long long seed = -1);

Subgroup chain_stabilizer(const Collection& C, const std::vector<int>& chain);

}  // namespace sclab
