#include "artifact/cartan.hpp"

#include <numeric>
#include <stdexcept>

namespace artifact {

namespace {

using Mat = std::vector<std::vector<int>>;

Mat chain(int n) {
  Mat c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    c[i][i] = 2;
    if (i + 1 < n) c[i][i + 1] = c[i + 1][i] = -1;
  }
  return c;
}

Mat build(char type, int n) {
  switch (type) {
    case 'A':
      if (n < 1) break;
      return chain(n);
    case 'B': {
      if (n < 2) break;
      Mat c = chain(n);
      c[n - 1][n - 2] = -2;
      return c;
    }
    case 'C': {
      if (n < 2) break;
      Mat c = chain(n);
      c[n - 2][n - 1] = -2;
      return c;
    }
    case 'D': {
      if (n < 4) break;
      Mat c = chain(n);
      c[n - 2][n - 1] = c[n - 1][n - 2] = 0;
      c[n - 3][n - 1] = c[n - 1][n - 3] = -1;
      return c;
    }
    case 'E': {
      if (n < 6 || n > 8) break;
      // 1-3-4-5-6(-7-8) with 2 attached to 4
      Mat c(n, std::vector<int>(n, 0));
      for (int i = 0; i < n; ++i) c[i][i] = 2;
      auto edge = [&](int a, int b) { c[a - 1][b - 1] = c[b - 1][a - 1] = -1; };
      edge(1, 3);
      edge(3, 4);
      edge(2, 4);
      for (int i = 4; i < n; ++i) edge(i, i + 1);
      return c;
    }
    case 'F': {
      if (n != 4) break;
      Mat c = chain(4);
      c[2][1] = -2;
      return c;
    }
    case 'G': {
      if (n != 2) break;
      return {{2, -3}, {-1, 2}};
    }
    default:
      break;
  }
  throw std::invalid_argument(std::string("unknown Dynkin type ") + type + std::to_string(n));
}

}  // namespace

CartanData cartan_from_matrix(std::string label, std::vector<std::vector<int>> cm) {
  const int n = static_cast<int>(cm.size());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(cm[i].size()) != n || cm[i][i] != 2)
      throw std::invalid_argument("malformed Cartan matrix");
    for (int j = 0; j < n; ++j)
      if (i != j && (cm[i][j] > 0 || ((cm[i][j] == 0) != (cm[j][i] == 0))))
        throw std::invalid_argument("malformed Cartan matrix");
  }
  // Symmetrizers: propagate r_j = r_i C_ij / C_ji along edges using rationals.
  std::vector<long> num(n, 0), den(n, 1);
  for (int root = 0; root < n; ++root) {
    if (num[root] != 0) continue;
    num[root] = 1;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (i == j || cm[i][j] == 0 || num[j] != 0) continue;
        num[j] = num[i] * cm[i][j];
        den[j] = den[i] * cm[j][i];
        long g = std::gcd(num[j], den[j]);
        num[j] /= g;
        den[j] /= g;
        if (den[j] < 0) {
          num[j] = -num[j];
          den[j] = -den[j];
        }
        stack.push_back(j);
      }
    }
  }
  long l = 1;
  for (int i = 0; i < n; ++i) l = std::lcm(l, den[i]);
  std::vector<int> sym(n);
  long g = 0;
  for (int i = 0; i < n; ++i) g = std::gcd(g, num[i] * (l / den[i]));
  for (int i = 0; i < n; ++i) sym[i] = static_cast<int>(num[i] * (l / den[i]) / g);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (sym[i] * cm[i][j] != sym[j] * cm[j][i]) throw std::invalid_argument("Cartan matrix not symmetrizable");
  CartanData cd;
  cd.label = std::move(label);
  cd.n = n;
  cd.cm = std::move(cm);
  cd.sym = sym;
  cd.lacing = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) cd.lacing = std::max(cd.lacing, -cd.cm[i][j]);
  for (auto& x : leading_minors_B(cd))
    if (x <= 0) throw std::invalid_argument("Cartan matrix not of finite type");
  return cd;
}

CartanData cartan(char type, int rank) {
  return cartan_from_matrix(std::string(1, type) + std::to_string(rank), build(type, rank));
}

CartanData cartan(const std::string& label) {
  if (label.size() < 2) throw std::invalid_argument("unknown Dynkin label " + label);
  int rank = 0;
  try {
    std::size_t used = 0;
    rank = std::stoi(label.substr(1), &used);
    if (used != label.size() - 1) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("unknown Dynkin label " + label);
  }
  return cartan(label[0], rank);
}

int serre_order(const CartanData& cd, int i, int j) {
  if (i == j) throw std::invalid_argument("serre_order requires i != j");
  return 1 - cd.C(i, j);
}

std::vector<long> leading_minors_B(const CartanData& cd) {
  std::vector<long> out;
  for (int k = 1; k <= cd.n; ++k) {
    // Fraction-free Bareiss elimination on the leading k x k block of B.
    std::vector<std::vector<mpz_class>> a(k, std::vector<mpz_class>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) a[i][j] = cd.B(i + 1, j + 1);
    mpz_class prev = 1;
    bool singular = false;
    for (int p = 0; p < k - 1 && !singular; ++p) {
      if (a[p][p] == 0) {
        singular = true;
        break;
      }
      for (int i = p + 1; i < k; ++i)
        for (int j = p + 1; j < k; ++j) a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) / prev;
      prev = a[p][p];
    }
    out.push_back(singular ? 0 : a[k - 1][k - 1].get_si());
  }
  return out;
}

}  // namespace artifact
