#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sclab/collection.hpp"
#include "sclab/group.hpp"

namespace sclab {

// A finite poset; leq is reflexive, antisymmetric, transitive.
struct Poset {
    int n = 0;
    std::vector<DynBitset> leq;  // leq[i].test(j) <=> i <= j

    Poset() = default;
    explicit Poset(int n_) : n(n_), leq(n_, DynBitset(n_)) {
        for (int i = 0; i < n_; ++i) leq[i].set(i);
    }
    bool le(int i, int j) const { return leq[i].test(j); }
    void validate() const;
};

Poset poset_of(const Collection& C);
Poset sub_poset(const Poset& P, const std::vector<int>& keep);
Poset join(const Poset& X, const Poset& Y);  // all of X below all of Y
std::vector<int> below(const Poset& P, int x);   // strictly below
std::vector<int> above(const Poset& P, int x);   // strictly above
std::vector<int> link_elements(const Poset& P, int x);
std::vector<int> star_elements(const Poset& P, int x);

// (dagger)-style subposets of a collection for a test subgroup H.
struct FixedSubposets {
    std::vector<int> fixed;              // C^H = members with H <= N_G(member)
    std::vector<int> above;              // C_{>=H}
    std::vector<int> below_centralizer;  // C_{<= C_G(H)}
};
FixedSubposets sub_posets(const Collection& C, const Subgroup& H);

// Strict chains of a poset grouped by dimension (chain of k+1 elements has
// dimension k). The empty complex has no chains at all.
struct OrderComplex {
    int dim = -1;
    std::vector<std::vector<std::vector<int>>> chains;  // chains[d] = list of chains
};
OrderComplex order_complex(const Poset& P);

struct HomologyReport {
    int prime = 2;
    // index 0 corresponds to degree -1 (reduced homology)
    std::vector<long long> betti_int;
    std::vector<std::vector<long long>> torsion;  // invariant factors > 1
    std::vector<long long> betti_p;
    long long euler_reduced = 0;
    int pi0 = 0;

    bool operator==(const HomologyReport& o) const {
        return prime == o.prime && betti_int == o.betti_int && torsion == o.torsion &&
               betti_p == o.betti_p && pi0 == o.pi0;
    }
    bool trivial() const;  // reduced homology of a point
    std::string summary() const;
};
HomologyReport reduced_homology(const OrderComplex& X, int p);
HomologyReport reduced_homology_of_poset(const Poset& P, int p);

enum class ContractStatus { CERTIFIED, NOT_CONTRACTIBLE, UNKNOWN };
std::string to_string(ContractStatus s);

struct ContractionStep {
    std::vector<int> image_of;  // -1 where undefined
    Direction direction = Direction::GE;
};
struct ContractionCertificate {
    std::vector<ContractionStep> steps;
    int terminal = -1;
};

struct ContractReport {
    ContractStatus status = ContractStatus::UNKNOWN;
    std::optional<ContractionCertificate> certificate;
    HomologyReport homology;  // of the reduced core (when computed)
};

// Core reduction: repeatedly delete x when P_{>x} has a unique minimum or
// P_{<x} has a unique maximum. Sound but incomplete; UNKNOWN is a possible
// honest outcome.
ContractReport contractibility(const Poset& P, int p = 2);

bool verify_certificate(const Poset& P, const ContractionCertificate& cert,
                        std::string* why = nullptr);

}  // namespace sclab
