#pragma once

#include <string>
#include <vector>

#include "artifact/scalar.hpp"

namespace artifact {

// Nodes are numbered 1..n (Bourbaki labels). C(i,j) = 2(a_i,a_j)/(a_i,a_i).
//   B_n: node n short;  C_n: node n long;  F_4: nodes 1,2 long;  G_2: node 1 short.
struct CartanData {
  std::string label;
  int n = 0;
  std::vector<std::vector<int>> cm;  // Cartan matrix
  std::vector<int> sym;              // r_i
  int lacing = 1;                    // r^vee

  int C(int i, int j) const { return cm[i - 1][j - 1]; }
  int B(int i, int j) const { return sym[i - 1] * cm[i - 1][j - 1]; }
  int r(int i) const { return sym[i - 1]; }
  Scalar qi(int i) const { return Scalar::q(r(i)); }
  bool valid_node(int i) const { return i >= 1 && i <= n; }
};

CartanData cartan(char type, int rank);
CartanData cartan(const std::string& label);  // "A2", "G2", ...
CartanData cartan_from_matrix(std::string label, std::vector<std::vector<int>> cm);

int serre_order(const CartanData& cd, int i, int j);

// Leading principal minors of B, for positive-definiteness checks.
std::vector<long> leading_minors_B(const CartanData& cd);

}  // namespace artifact
