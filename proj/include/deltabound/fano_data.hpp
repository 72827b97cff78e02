#pragma once

// Embedded Mori-Mukai table rows (Picard rank 2..5) for smooth Fano threefolds
// with a conic bundle structure admitting a rational section. Rank >= 6 rows are
// generated in fano_db.hpp. The text below is the canonical serialization: it is
// what fano_table_json() reproduces, byte for byte.

namespace deltabound::data {

inline constexpr const char* kFanoTableJson = R"json([
  {
    "anticanonical_degree": 30,
    "description": "a divisor on P^2 x P^2 of bidegree (1, 2)",
    "flags": [],
    "mm_number": 24,
    "picard_rank": 2,
    "six_delta": "≤ 6",
    "two_alpha": "≤ 5"
  },
  {
    "anticanonical_degree": 38,
    "description": "the blow-up of P^3 with center a twisted cubic",
    "flags": [],
    "mm_number": 27,
    "picard_rank": 2,
    "six_delta": "3",
    "two_alpha": "2"
  },
  {
    "anticanonical_degree": 46,
    "certificates": "conic-2-31",
    "description": "the blow-up of Q in P^4 with center a line on it (Q a smooth quadric threefold)",
    "flags": [],
    "mm_number": 31,
    "picard_rank": 2,
    "six_delta": "3",
    "two_alpha": "5/3"
  },
  {
    "anticanonical_degree": 48,
    "certificates": "conic-2-32",
    "description": "a divisor on P^2 x P^2 of bidegree (1, 1)",
    "flags": [],
    "mm_number": 32,
    "picard_rank": 2,
    "six_delta": "3",
    "two_alpha": "5/2"
  },
  {
    "anticanonical_degree": 54,
    "description": "P^1 x P^2",
    "flags": [
      "TORIC",
      "MANIN_KNOWN"
    ],
    "mm_number": 34,
    "picard_rank": 2,
    "six_delta": "3",
    "two_alpha": "5/3"
  },
  {
    "anticanonical_degree": 56,
    "description": "V_7 = P(O + O(1)) over P^2",
    "flags": [
      "TORIC",
      "MANIN_KNOWN"
    ],
    "mm_number": 35,
    "picard_rank": 2,
    "six_delta": "3",
    "two_alpha": "5/4"
  },
  {
    "anticanonical_degree": 62,
    "description": "P(O + O(2)) over P^2",
    "flags": [
      "TORIC",
      "MANIN_KNOWN"
    ],
    "mm_number": 36,
    "picard_rank": 2,
    "six_delta": "3",
    "two_alpha": "5/3"
  },
  {
    "description": "a divisor on P^1 x P^1 x P^2 of tridegree (1, 1, 2)",
    "flags": [],
    "mm_number": 3,
    "picard_rank": 3,
    "six_delta": "≤ 6",
    "two_alpha": "≤ 5"
  },
  {
    "description": "the blow-up of P^1 x P^2 with center a curve C of bidegree (5, 2) such that the projection C -> P^2 is an embedding",
    "flags": [],
    "mm_number": 5,
    "picard_rank": 3,
    "six_delta": "≤ 6",
    "two_alpha": "≤ 5"
  },
  {
    "description": "the blow-up of W (rank 2 no 32) with center an intersection of two members of |-1/2 K_W|",
    "flags": [],
    "mm_number": 7,
    "picard_rank": 3,
    "six_delta": "≤ 4",
    "two_alpha": "≤ 3"
  },
  {
    "description": "a member of the linear system |p_1^* g^* O(1) (x) p_2^* O(2)| on F_1 x P^2, where p_i are the projections and g: F_1 -> P^2 is the blow-up",
    "flags": [],
    "mm_number": 8,
    "picard_rank": 3,
    "six_delta": "≤ 6",
    "two_alpha": "≤ 5"
  },
  {
    "description": "the blow-up of the cone W_4 in P^6 over the Veronese surface R_4 in P^5 with center a disjoint union of the vertex and a quartic in R_4 = P^2",
    "flags": [],
    "mm_number": 9,
    "picard_rank": 3,
    "six_delta": "3",
    "two_alpha": "≤ 7/5"
  },
  {
    "description": "the blow-up of V_7 (rank 2 no 35) with center an intersection of two members of |-1/2 K_{V_7}|",
    "flags": [],
    "mm_number": 11,
    "picard_rank": 3,
    "six_delta": "3",
    "two_alpha": "5/2"
  },
  {
    "certificates": "conic-3-12",
    "description": "the blow-up of P^3 with center a disjoint union of a line and a twisted cubic",
    "flags": [],
    "mm_number": 12,
    "picard_rank": 3,
    "six_delta": "3",
    "two_alpha": "8/3"
  },
  {
    "description": "the blow-up of W in P^2 x P^2 with center a curve C of bidegree (2, 2) on it such that each projection from C to P^2 is an embedding",
    "flags": [],
    "mm_number": 13,
    "picard_rank": 3,
    "six_delta": "3",
    "two_alpha": "≤ 5/2"
  },
  {
    "description": "the blow-up of P^3 with center a disjoint union of a point and a plane cubic",
    "flags": [],
    "mm_number": 14,
    "picard_rank": 3,
    "six_delta": "≤ 6",
    "two_alpha": "≤ 9/5"
  },
  {
    "description": "the blow-up of Q in P^4 with center a disjoint union of a line and a conic",
    "flags": [],
    "mm_number": 15,
    "picard_rank": 3,
    "six_delta": "3",
    "two_alpha": "5/2"
  },
  {
    "description": "the blow-up of V_7 with center the strict transform of a twisted cubic passing through the center of the blow-up V_7 -> P^3",
    "flags": [],
    "mm_number": 16,
    "picard_rank": 3,
    "six_delta": "3",
    "two_alpha": "5/2"
  },
  {
    "description": "a smooth divisor on P^1 x P^1 x P^2 of tridegree (1, 1, 1)",
    "flags": [],
    "mm_number": 17,
    "picard_rank": 3,
    "six_delta": "3",
    "two_alpha": "5/2"
  },
  {
    "description": "the blow-up of Q in P^4 with center two points which are not collinear",
    "flags": [],
    "mm_number": 19,
    "picard_rank": 3,
    "six_delta": "3",
    "two_alpha": "5/3"
  },
  {
    "description": "the blow-up of Q in P^4 with center a disjoint union of two lines",
    "flags": [],
    "mm_number": 20,
    "picard_rank": 3,
    "six_delta": "3",
    "two_alpha": "5/2"
  },
  {
    "description": "the blow-up of P^1 x P^2 with center a curve of bidegree (2, 1)",
    "flags": [],
    "mm_number": 21,
    "picard_rank": 3,
    "six_delta": "3",
    "two_alpha": "5/2"
  },
  {
    "description": "the blow-up of P^1 x P^2 with center a conic in {t} x P^2",
    "flags": [],
    "mm_number": 22,
    "picard_rank": 3,
    "six_delta": "3",
    "two_alpha": "5/3"
  },
  {
    "certificates": "conic-3-23",
    "description": "the blow-up of V_7 with center the strict transform of a conic passing through the center of the blow-up V_7 -> P^3",
    "flags": [],
    "mm_number": 23,
    "picard_rank": 3,
    "six_delta": "3",
    "two_alpha": "5/3"
  },
  {
    "description": "the fiber product W x_{P^2} F_1, where W is rank 2 no 32, W -> P^2 is the P^1-bundle and F_1 -> P^2 is the blow-up",
    "flags": [
      "TORIC",
      "MANIN_KNOWN"
    ],
    "mm_number": 24,
    "picard_rank": 3,
    "six_delta": "3",
    "two_alpha": "5/2"
  },
  {
    "description": "P(O(1, 0) + O(0, 1)) over P^1 x P^1",
    "flags": [
      "TORIC",
      "MANIN_KNOWN"
    ],
    "mm_number": 25,
    "picard_rank": 3,
    "six_delta": "3",
    "two_alpha": "3/2"
  },
  {
    "description": "the blow-up of P^3 with center a disjoint union of a point and a line",
    "flags": [
      "TORIC",
      "MANIN_KNOWN"
    ],
    "mm_number": 26,
    "picard_rank": 3,
    "six_delta": "3",
    "two_alpha": "5/3"
  },
  {
    "description": "P^1 x P^1 x P^1",
    "flags": [
      "TORIC",
      "MANIN_KNOWN"
    ],
    "mm_number": 27,
    "picard_rank": 3,
    "six_delta": "3",
    "two_alpha": "2"
  },
  {
    "description": "P^1 x F_1",
    "flags": [
      "TORIC",
      "MANIN_KNOWN"
    ],
    "mm_number": 28,
    "picard_rank": 3,
    "six_delta": "3",
    "two_alpha": "2"
  },
  {
    "description": "the blow-up of V_7 with center a line on the exceptional set D = P^2 of the blow-up V_7 -> P^3",
    "flags": [
      "TORIC",
      "MANIN_KNOWN"
    ],
    "mm_number": 29,
    "picard_rank": 3,
    "six_delta": "3",
    "two_alpha": "≤ 7/5"
  },
  {
    "description": "the blow-up of V_7 with center the strict transform of a line passing through the center of the blow-up V_7 -> P^3",
    "flags": [
      "TORIC",
      "MANIN_KNOWN"
    ],
    "mm_number": 30,
    "picard_rank": 3,
    "six_delta": "3",
    "two_alpha": "4/3"
  },
  {
    "description": "P(O + O(1, 1)) over P^1 x P^1",
    "flags": [
      "TORIC",
      "MANIN_KNOWN"
    ],
    "mm_number": 31,
    "picard_rank": 3,
    "six_delta": "3",
    "two_alpha": "≤ 4/3"
  },
  {
    "description": "a smooth divisor on (P^1)^4 of multidegree (1, 1, 1, 1)",
    "flags": [],
    "mm_number": 1,
    "picard_rank": 4,
    "six_delta": "3",
    "two_alpha": "3"
  },
  {
    "description": "the blow-up of the cone over a quadric surface S in P^3 with center a disjoint union of the vertex and an elliptic curve on S",
    "flags": [],
    "mm_number": 2,
    "picard_rank": 4,
    "six_delta": "≤ 6",
    "two_alpha": "≤ 2"
  },
  {
    "description": "the blow-up of P^1 x P^1 x P^1 with center a curve of tridegree (1, 1, 2)",
    "flags": [],
    "mm_number": 3,
    "picard_rank": 4,
    "six_delta": "3",
    "two_alpha": "≤ 2"
  },
  {
    "description": "the blow-up of Y (rank 3 no 19) with center the strict transform of a conic passing through p and q",
    "flags": [],
    "mm_number": 4,
    "picard_rank": 4,
    "six_delta": "≤ 6",
    "two_alpha": "≤ 2"
  },
  {
    "description": "the blow-up of P^1 x P^2 with center two disjoint curves of bidegree (2, 1) and (1, 0)",
    "flags": [],
    "mm_number": 5,
    "picard_rank": 4,
    "six_delta": "≤ 6",
    "two_alpha": "2"
  },
  {
    "certificates": "conic-4-6",
    "description": "the blow-up of P^3 with center three disjoint lines",
    "flags": [],
    "mm_number": 6,
    "picard_rank": 4,
    "six_delta": "3",
    "two_alpha": "2"
  },
  {
    "description": "the blow-up of W in P^2 x P^2 with center two disjoint curves of bidegree (0, 1) and (1, 0)",
    "flags": [],
    "mm_number": 7,
    "picard_rank": 4,
    "six_delta": "3",
    "two_alpha": "5/2"
  },
  {
    "description": "the blow-up of P^1 x P^1 x P^1 with center a curve of tridegree (0, 1, 1)",
    "flags": [],
    "mm_number": 8,
    "picard_rank": 4,
    "six_delta": "3",
    "two_alpha": "2"
  },
  {
    "description": "the blow-up of Y (rank 3 no 25) with center an exceptional line of the blow-up Y -> P^3",
    "flags": [
      "TORIC",
      "MANIN_KNOWN"
    ],
    "mm_number": 9,
    "picard_rank": 4,
    "six_delta": "3",
    "two_alpha": "2"
  },
  {
    "description": "P^1 x S_7",
    "flags": [
      "TORIC",
      "MANIN_KNOWN"
    ],
    "mm_number": 10,
    "picard_rank": 4,
    "six_delta": "3",
    "two_alpha": "2"
  },
  {
    "description": "the blow-up of P^1 x F_1 with center t x e, where t is a point of P^1 and e is an exceptional curve on F_1",
    "flags": [
      "TORIC",
      "MANIN_KNOWN"
    ],
    "mm_number": 11,
    "picard_rank": 4,
    "six_delta": "3",
    "two_alpha": "2"
  },
  {
    "description": "the blow-up of Y (rank 2 no 33) with center two exceptional lines of the blow-up Y -> P^3",
    "flags": [
      "TORIC",
      "MANIN_KNOWN"
    ],
    "mm_number": 12,
    "picard_rank": 4,
    "six_delta": "3",
    "two_alpha": "2"
  },
  {
    "description": "the blow-up of P^1 x P^1 x P^1 with center a curve of tridegree (1, 1, 3)",
    "flags": [],
    "mm_number": 13,
    "picard_rank": 4,
    "six_delta": "≤ 6",
    "two_alpha": "≤ 3"
  },
  {
    "description": "the blow-up of Y (rank 2 no 29) with center three exceptional lines of the blow-up Y -> Q",
    "flags": [],
    "mm_number": 1,
    "picard_rank": 5,
    "six_delta": "3",
    "two_alpha": "≤ 2"
  },
  {
    "description": "the blow-up of Y (rank 3 no 25) with center two exceptional lines l and l' of the blow-up Y -> P^3 lying on the same irreducible component of its exceptional set",
    "flags": [
      "TORIC",
      "MANIN_KNOWN"
    ],
    "mm_number": 2,
    "picard_rank": 5,
    "six_delta": "3",
    "two_alpha": "≤ 2"
  },
  {
    "description": "P^1 x S_6",
    "flags": [
      "TORIC",
      "MANIN_KNOWN"
    ],
    "mm_number": 3,
    "picard_rank": 5,
    "six_delta": "3",
    "two_alpha": "2"
  }
])json";

}  // namespace deltabound::data
