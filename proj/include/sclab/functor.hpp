#pragma once

#include <string>
#include <vector>

#include "sclab/category.hpp"
#include "sclab/equivalence.hpp"
#include "sclab/fp.hpp"
#include "sclab/resolution.hpp"

namespace sclab {

enum class Variance { Covariant, Contravariant };

// F_p-valued functor on a finite category: a dimension per object and a
// matrix per morphism. Contravariant functors carry, for f: x -> y, the
// matrix V_y -> V_x. Functoriality is verified exhaustively.
struct CoefficientFunctor {
    const FiniteCat* cat = nullptr;
    int p = 2;
    Variance variance = Variance::Covariant;
    std::vector<int> dims;
    std::vector<FpMat> mats;

    void validate() const;
};

// the three standard functors in cohomological degree n
CoefficientFunctor beta_functor(const OrbitCategory& O, ResolutionCache& R, int n);
CoefficientFunctor alpha_functor(const ConjugacyCategory& A, ResolutionCache& R, int n);
CoefficientFunctor delta_functor(const OrbitSimplexCategory& S, ResolutionCache& R, int n);

// M^H on any of the three categories, for a G-module given by generator
// matrices over F_p (H runs over the member/stabilizer attached to each
// object). Cheap cohomological test functor.
struct GModule {
    int p = 2;
    int dim = 0;
    std::vector<FpMat> gen_mats;  // one invertible matrix per G generator
};
CoefficientFunctor fixed_points_functor(const OrbitCategory& O, const GModule& M);

struct Lim0Result {
    int dim = 0;
    FpMat basis;  // rows: compatible families in the product over objects
    std::vector<int> offsets;
};
// Compatible-families model of the inverse limit; independent of the
// projective-resolution route below.
Lim0Result lim0(const CoefficientFunctor& F);

struct HigherLimitReport {
    std::vector<int> dims;        // lim^i for i = 0..i_max
    int comparison_rank = -1;     // rank of H^n(G) -> lim^0 when applicable
    bool comparison_injective = false;
    bool comparison_surjective = false;
    int restriction_image_rank = -1;  // rank of the same map into the plain product
    int target_dim = 0;               // dim H^n(G)
};
// lim^i as Ext over the category algebra: a projective resolution of the
// constant module by sums of representables, by exact linear algebra.
std::vector<int> higher_limits(const CoefficientFunctor& F, int i_max);

// comparison map H^n(G) -> lim^0 by restriction to the value groups
struct ComparisonData {
    std::vector<Subgroup> value_groups;  // per object: the group whose cohomology is the value
    std::vector<int> twists;             // per object: conjugator applied before restriction (-1: none)
};
HigherLimitReport sharpness_slice(const CoefficientFunctor& F, ResolutionCache& R, int n,
                                  const ComparisonData& cmp, int i_max);

// Bredon cochain complex on |C| from orbit representatives with
// conjugation-twisted face restrictions; dims per degree 0..deg_max.
std::vector<int> bredon_cohomology(const GChainComplex& X, ResolutionCache& R, int n,
                                   int deg_max);

enum class SharpState { SHARP_UP_TO_BOUNDS, FAILS, VACUOUS };

struct SharpnessReport {
    SharpState state = SharpState::VACUOUS;
    Kind kind = Kind::S;
    Row type = Row::Subgroup;
    int n_max = 3, i_max = 3;
    int fail_n = -1, fail_i = -1;  // first failing (n, i); i = 0 marks a comparison failure
    std::string detail;
    // per n: [target dim, lim^0, comparison rank, lim^1..lim^imax]
    std::vector<std::vector<int>> table;
    std::vector<std::vector<int>> bredon_dims;  // normalizer case cross-check, per n
};

SharpnessReport sharpness_check(const GroupTable& G, int p, Kind kind, Row type, int n_max,
                                int i_max, ResolutionCache& R);

std::string to_string(SharpState s);

}  // namespace sclab
