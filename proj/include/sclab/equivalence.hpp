#pragma once

#include <string>
#include <vector>

#include "sclab/collection.hpp"
#include "sclab/poset.hpp"

namespace sclab {

enum class Row { Subgroup, Normalizer, Centralizer };
enum class Scope { Plain, Sylow, Full };

Row row_from_string(const std::string& s);
std::string row_to_string(Row r);
Scope scope_from_string(const std::string& s);
std::string scope_to_string(Scope s);

struct EvidenceRow {
    int h_class_id = 0;
    int h_order = 0;
    HomologyReport left;
    HomologyReport right;
    bool match = false;
};

struct EvidenceReport {
    Row row = Row::Normalizer;
    Scope scope = Scope::Plain;
    bool evidence_pass = true;
    std::vector<EvidenceRow> rows;
    int mismatch_class = -1;
};

// Fixed-point homology comparison of two collections along one row of the
// equivalence table. A mismatch with witness H refutes the corresponding
// equivalence; a pass is evidence, not proof.
EvidenceReport equivalence_evidence(const Collection& C1, const Collection& C2, Row row,
                                    Scope scope);

// Test subgroups for a scope: {1} / class reps of subgroups of a fixed
// Sylow (lex-min bitmap) / all conjugacy classes of subgroups.
std::vector<Subgroup> scope_subgroups(const GroupTable& G, int p, Scope scope);

enum class RemovalVariant { AboveContractible = 1, BelowContractible = 2, EquivariantLink = 3 };

struct RemovalClassReport {
    int member = -1;  // class representative (index into C)
    std::string detail;
    ContractStatus status = ContractStatus::UNKNOWN;
};

struct RemovalReport {
    bool pass = false;
    std::string conclusion;
    std::vector<RemovalClassReport> removed;
};

// Checks the hypotheses for removing C \ C' one conjugacy class at a time
// while preserving the equivariant homotopy type of the row named by the
// variant: 1 checks C_{>P} contractible, 2 checks C_{<P}, 3 checks the
// fixed subposets (C_{>P})^K or (C_{<P})^K over all K <= N_G(P).
RemovalReport removal_check(const Collection& C, const Collection& Csub, RemovalVariant variant);

// Zig-zag certificates on subposets of the full p-subgroup collection:
//   on C_{>P} for non-radical P:  Q >= N_Q(P) <= N_Q(P) O_p(N_G(P)) >= O_p(N_G(P))
//   on C_{<P} for non-elementary P:  Q <= Phi(P) Q >= Phi(P)
// Returned as step sequences on the given element subset of C.
ContractionCertificate radical_zigzag(const Collection& C, int member_P,
                                      const std::vector<int>& elems, Poset* out_poset);
ContractionCertificate frattini_zigzag(const Collection& C, int member_P,
                                       const std::vector<int>& elems, Poset* out_poset);

}  // namespace sclab
