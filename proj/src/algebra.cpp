#include "artifact/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace artifact {

std::string GenSym::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Eminus: os << "E-[" << node << "," << k << "," << m << "]"; break;
    case Kind::Eplus: os << "E+[" << node << "," << k << "," << m << "]"; break;
    case Kind::H: os << "H[" << node << "," << k << "," << m << "]"; break;
    case Kind::K: os << "K[" << node << "]"; break;
    case Kind::Kinv: os << "Kinv[" << node << "]"; break;
  }
  return os.str();
}

int filtration_degree(const Word& w) {
  int d = 0;
  for (const auto& g : w) d += g.m;
  return d;
}

std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (t) s += " ";
    s += w[t].str();
  }
  return s;
}

Word parse_word(const std::string& s) {
  Word w;
  std::size_t p = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("word parse: " + what + " in \"" + s + "\"");
  };
  auto ints = [&](std::size_t count) {
    std::vector<int> v;
    if (p >= s.size() || s[p] != '[') fail("expected '['");
    ++p;
    while (true) {
      std::size_t start = p;
      if (p < s.size() && s[p] == '-') ++p;
      while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
      if (start == p) fail("expected integer");
      v.push_back(std::stoi(s.substr(start, p - start)));
      if (p < s.size() && s[p] == ',') {
        ++p;
        continue;
      }
      if (p < s.size() && s[p] == ']') {
        ++p;
        break;
      }
      fail("expected ',' or ']'");
    }
    if (v.size() != count) fail("wrong number of indices");
    return v;
  };
  while (true) {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
    if (p >= s.size()) break;
    auto starts = [&](const char* t) { return s.compare(p, std::char_traits<char>::length(t), t) == 0; };
    if (starts("1") && w.empty() && s.find_first_not_of(" 1") == std::string::npos) return w;
    if (starts("E-") || starts("E+")) {
      Kind kd = s[p + 1] == '-' ? Kind::Eminus : Kind::Eplus;
      p += 2;
      auto v = ints(3);
      if (v[2] < 0) fail("negative m");
      w.push_back({kd, v[0], v[1], v[2]});
    } else if (starts("Kinv")) {
      p += 4;
      w.push_back(GenSym::Kinvs(ints(1)[0]));
    } else if (starts("K")) {
      p += 1;
      w.push_back(GenSym::Ks(ints(1)[0]));
    } else if (starts("H")) {
      p += 1;
      auto v = ints(3);
      if (v[2] < 0) fail("negative m");
      w.push_back(GenSym::Hs(v[0], v[1], v[2]));
    } else {
      fail("unknown generator");
    }
  }
  return w;
}

// ---------------------------------------------------------------- Element

Element Element::word(int N, Word w, const Scalar& c) {
  Element e(N);
  e.add(w, c);
  return e;
}

Scalar Element::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Element::add(const Word& w, const Scalar& c) {
  if (c.is_zero() || filtration_degree(w) >= N_) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Element& Element::operator+=(const Element& o) {
  if (o.N_ != N_) throw std::invalid_argument("truncation level mismatch");
  for (auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  if (o.N_ != N_) throw std::invalid_argument("truncation level mismatch");
  for (auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

Element& Element::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

Element operator*(const Element& a, const Element& b) {
  if (a.N_ != b.N_) throw std::invalid_argument("truncation level mismatch");
  Element r(a.N_);
  for (auto& [u, x] : a.terms_)
    for (auto& [v, y] : b.terms_) {
      if (filtration_degree(u) + filtration_degree(v) >= a.N_) continue;
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      r.add(w, x * y);
    }
  return r;
}

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto& [w, c] : terms_) {
    std::string ws = word_str(w);
    bool neg = false;
    std::string cs;
    if (c.is_one()) cs = "";
    else if ((-c).is_one()) neg = true;
    else {
      cs = c.str();
      if (cs.find_first_of(" */") != std::string::npos || cs[0] == '-') cs = "(" + cs + ")";
    }
    std::string term;
    if (w.empty()) term = cs.empty() ? "1" : cs;
    else term = cs.empty() ? ws : cs + " " + ws;
    if (first) s += neg ? "-" + term : term;
    else s += (neg ? " - " : " + ") + term;
    first = false;
  }
  return s;
}

// ---------------------------------------------------------------- sticking graphs

StickingGraph sticking_graph(const CartanData& cd, const std::vector<std::pair<int, int>>& verts) {
  StickingGraph g;
  g.verts = verts;
  for (std::size_t s = 0; s < verts.size(); ++s)
    for (std::size_t t = 0; t < verts.size(); ++t) {
      if (s == t) continue;
      auto [i, k] = verts[s];
      auto [j, l] = verts[t];
      int b = cd.B(i, j);
      if (b != 0 && k == l - b) g.edges.emplace_back(static_cast<int>(s), static_cast<int>(t));
    }
  return g;
}

bool has_directed_cycle(const StickingGraph& g) {
  const int n = static_cast<int>(g.verts.size());
  std::vector<std::vector<int>> adj(n);
  for (auto [s, t] : g.edges) adj[s].push_back(t);
  std::vector<int> state(n, 0);
  std::function<bool(int)> dfs = [&](int v) {
    state[v] = 1;
    for (int w : adj[v]) {
      if (state[w] == 1) return true;
      if (state[w] == 0 && dfs(w)) return true;
    }
    state[v] = 2;
    return false;
  };
  for (int v = 0; v < n; ++v)
    if (state[v] == 0 && dfs(v)) return true;
  return false;
}

bool serre_progression(const CartanData& cd, int i, const std::vector<int>& a, int j, int b) {
  std::vector<int> want(a.size());
  for (std::size_t t = 0; t < a.size(); ++t)
    want[t] = b + cd.B(i, j) + static_cast<int>(t) * cd.B(i, i);
  std::vector<int> have = a;
  std::sort(have.begin(), have.end());
  std::sort(want.begin(), want.end());
  return have == want;
}

std::vector<int> serre_points(const CartanData& cd, int i, int j, int b, int sign) {
  int s = serre_order(cd, i, j);
  std::vector<int> p(s);
  for (int t = 1; t <= s; ++t) p[t - 1] = b - sign * (cd.B(i, j) + (t - 1) * cd.B(i, i));
  return p;
}

}  // namespace artifact
