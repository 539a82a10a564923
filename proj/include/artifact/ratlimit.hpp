#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "artifact/algebra.hpp"
#include "artifact/relations.hpp"

namespace artifact {

// Element of the rational algebra: words in E^+-, H (the checked generators) and HH_i, with
// HH_i written as the letter K[i]; coefficients in Q.
using RatElement = std::map<Word, mpq_class>;

void rat_add(RatElement& x, const Word& w, const mpq_class& c);
std::string rat_str(const RatElement& x);

struct RatRelation {
  std::string id;  // HH-E, HH-HH, HH-H, H-H, EpEm, EE, HE, sum-H, rat-Serre
  std::string params;
  RatElement expr;  // lhs - rhs
};

// (k - l - sign B_ij) X_{mn} + X_{m+1,n} - X_{m,n+1} - (k + sign B_ij - l) Y_{nm} - Y_{n,m+1} + Y_{n+1,m}
RatRelation rat_exchange(const CartanData& cd, const GenSym& L, const GenSym& R);
RatRelation rat_epem(const GenSym& ep, const GenSym& em);
RatRelation rat_sum_h(const PointSet& P, int i);
// [HH_i, E^sign_j] - sign C_ij E^sign_j
RatRelation rat_hh_e(const CartanData& cd, int i, const GenSym& e);
RatRelation rat_commutator(const std::string& id, const GenSym& x, const GenSym& y);
// Cyclic rational Serre combination with binomial coefficients; throws if a point lies outside P.
RatRelation rat_serre_instance(const CartanData& cd, const PointSet& P, int i, int j, int k,
                               const std::vector<int>& ms, int n, int sign);
std::vector<RatRelation> rat_serre_instances(const CartanData& cd, const PointSet& P, int max_index);

// The rational relation an instance of the catalog should degenerate to; nullopt for K K^-1 = 1,
// whose scaled form vanishes identically.
std::optional<RatRelation> rat_counterpart(const CartanData& cd, const PointSet& P, const RelationInstance& inst);

// q = e^h, E_{i,k,m} = h^m E'_{i,k,m}, H likewise, K_i = exp(h r_i HH_i): the h^t layers of x for
// t < lowest + order, where lowest is the smallest power any term can reach.
std::map<int, RatElement> h_layers(const CartanData& cd, const Element& x, int order);

struct Degeneration {
  bool ok = false;
  bool identically_zero = false;  // no nonzero layer up to the largest order tried
  int power = 0;                  // h-power of the leading layer
  int order_used = 0;
  mpq_class factor;               // leading = factor * expected
  RatElement leading;
  std::optional<RatRelation> expected;
};

// Leading h-layer of the scaled instance compared with rat_counterpart up to a nonzero factor.
// The order starts at K (>= 2) and doubles while every computed layer vanishes, up to 16.
Degeneration degeneration_check(const CartanData& cd, const PointSet& P, const RelationInstance& inst, int K);

}  // namespace artifact
