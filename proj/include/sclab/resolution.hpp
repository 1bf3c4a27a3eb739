#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "sclab/fp.hpp"
#include "sclab/group.hpp"

namespace sclab {

// Free resolution of the trivial module over F_p[H], built degree by
// degree with deterministic kernel bases. For p-groups the generator
// choice is minimal (a basis of ker d modulo its radical multiple), so
// differentials augment to zero; in general small generating sets are
// chosen greedily and cohomology is read off the augmented complex.
struct GroupResolution {
    LocalGroup L;
    int p = 2;
    std::vector<int> ranks;                 // rank of R_n
    std::vector<std::vector<FpVec>> gens;   // gens[n][j]: image of generator j in R_{n-1} coords
    std::vector<FpMat> aug;                 // aug[n]: augmented d_n (ranks[n-1] x ranks[n])
    std::vector<std::unique_ptr<FpSolver>> solver;  // for d_n as a full F_p matrix

    // cohomology layer, one entry per degree
    struct Cohom {
        std::vector<FpVec> basis;     // cocycle representatives (length ranks[n])
        FpMat coord_solve_cols;       // [coboundary basis | representatives] as columns
        std::unique_ptr<FpSolver> coordizer;
        int dim = 0;
    };
    std::vector<Cohom> cohom;

    int group_order() const { return L.table.n; }
};

class ResolutionCache {
public:
    ResolutionCache(const GroupTable& G, int p, int degree_cap = 5);

    const GroupTable& group() const { return G_; }
    int prime() const { return p_; }
    int degree_cap() const { return cap_; }

    int cohomology_dim(const Subgroup& H, int n);
    // H^n(H) -> H^n(K) for K <= H
    FpMat restriction_map(const Subgroup& K, const Subgroup& H, int n);
    // H^n(H) -> H^n(gHg^{-1}), pullback along y -> g^{-1} y g
    FpMat conjugation_map(int g, const Subgroup& H, int n);

    const GroupResolution& resolution(const Subgroup& H);

    // matrices as row-major F_p entries for external auditing
    std::string dump_json(const Subgroup& H);

private:
    struct MapKey {
        DynBitset a, b;
        int n;
        bool operator==(const MapKey& o) const { return n == o.n && a == o.a && b == o.b; }
    };
    struct MapKeyHash {
        size_t operator()(const MapKey& k) const {
            return k.a.hash() * 31 + k.b.hash() * 7 + std::hash<int>()(k.n);
        }
    };
    struct ConjKey {
        DynBitset h;
        int g, n;
        bool operator==(const ConjKey& o) const { return g == o.g && n == o.n && h == o.h; }
    };
    struct ConjKeyHash {
        size_t operator()(const ConjKey& k) const {
            return k.h.hash() * 131 + std::hash<int>()(k.g * 8191 + k.n);
        }
    };

    const GroupTable& G_;
    int p_, cap_;
    std::unordered_map<DynBitset, std::unique_ptr<GroupResolution>, DynBitsetHash> res_;
    std::unordered_map<MapKey, FpMat, MapKeyHash> res_maps_;
    std::unordered_map<ConjKey, FpMat, ConjKeyHash> conj_maps_;

    // Lifts the identity coefficient map through the two resolutions along a
    // group homomorphism src -> dst given on ambient elements, and returns
    // the induced H^n(dst group) -> H^n(src group).
    FpMat cohomology_map(const GroupResolution& src, const GroupResolution& dst,
                         const std::vector<int>& twist_ambient, int n);
};

}  // namespace sclab
