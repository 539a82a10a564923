#pragma once

#include <string>
#include <vector>

#include "artifact/algebra.hpp"

namespace artifact {

// Structured parameters of a relation instance.
//   K: gens = the two letters of the commutation relation; EpEm / EE / EH: gens = {first, second};
//   HK: i; Serre: i, j, b, ms, n, sign.
struct RelationKey {
  std::vector<GenSym> gens;
  int i = 0, j = 0, b = 0, n = 0, sign = 0;
  std::vector<int> ms;
};

// One defining relation of A(g, q, P), written as lhs - rhs, truncated mod F_N.
struct RelationInstance {
  std::string family;  // "K", "EpEm", "EE", "EH", "HK", "Serre"
  std::string params;
  Element expr;
  RelationKey key;
};

// (a - bQ) X_{m,n} + a X_{m+1,n} - bQ X_{m,n+1} - (aQ - b) Y_{n,m} - aQ Y_{n,m+1} + b Y_{n+1,m}
// with X = L_m R_n, Y = R_n L_m, Q = q^{sign B_ij}; L is E^sign_i or H_i, R is E^sign_j.
Element exchange_relation(const CartanData& cd, int N, const GenSym& L, const GenSym& R);

Element epem_relation(int N, const GenSym& ep, const GenSym& em);
Element hk_relation(const CartanData& cd, const PointSet& P, int N, int i);

// Cyclic Serre relation for E^sign: sum_r (-1)^r binom(s,r)_{q_i} E_{p_{r+1}}..E_{p_s} E_j E_{p_1}..E_{p_r}.
// Throws std::invalid_argument when a required point is missing from P_i.
Element serre_instance(const CartanData& cd, const PointSet& P, int N, int i, int j, int b,
                       const std::vector<int>& ms, int n, int sign);

struct CatalogOptions {
  bool k_rels = true, epem = true, ee = true, eh = true, hk = true, serre = true;
  int max_index = -1;  // bound on each m-index; -1 means N - 1
};

std::vector<RelationInstance> relation_catalog(const CartanData& cd, const PointSet& P, int N,
                                               const CatalogOptions& opt = {});

}  // namespace artifact
