#pragma once

// Decision procedures: graded Q-criterion, rank-1, type A_1^theta (graded
// and lifted), rank-2 Cartan types, twist counting, small quantum group
// obstructions.

#include "hopfgal/relations.hpp"

namespace hopfgal {

enum class Status { GT, NotGT, OutOfScope };

std::string status_str(Status s);

struct Verdict {
	Status status = Status::OutOfScope;
	std::vector<std::string> decomposition; // factors of the minimal core
	std::vector<QResult> witnesses;
	std::vector<std::string> notes;
};

// graded criterion: GT iff Q vanishes for every defining relation
// (Serre relations, simple powers, and for connected rank 2 the
// root-vector powers)
Verdict check_graded(const HopfDatum &d);

Verdict classify_rank1(const HopfDatum &d);

// type A_1 x ... x A_1; throws NotTypeA1 if some q_ij q_ji != 1
Verdict classify_A1theta(const HopfDatum &d, bool lifted);

// connected rank 2 (A2/B2/G2) or A1 x A1, coradically graded
Verdict classify_rank2(const HopfDatum &d);

// rank-2 datum carrying lifting scalars
Verdict check_lifted_rank2(const HopfDatum &d);

// dispatcher over rank / type / lifting
Verdict classify(const HopfDatum &d);

// number of Galois-theoretical twists of u_q^{>=0}(g) (part=borel) or
// u_q(g) (part=full) of the given connected Dynkin type
long count_twists(char letter, int rank, bool full);

// Q-obstruction for gr(u_q(g)): the closed-form nonzero witness
// d=1: q^-1 (q-1)^2 (k_i^2 k_j - 1)
// d=2: q^-2 (q-1)^2 (q+1)^2 (k_i^2 k_j - 1)
// d=3: q^-3 (q-1)^2 (q^2+q+1)^2 (k_i^2 k_j - 1)
// (rank 1: (q^2-1)(1-k^2))
Verdict check_uqg_obstruction(char letter, int rank, long m);

} // namespace hopfgal
