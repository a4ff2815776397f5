#include "hecke/root_system.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hecke {

Family family_from_char(char c) {
  switch (c) {
    case 'A': case 'a': return Family::A;
    case 'B': case 'b': return Family::B;
    case 'C': case 'c': return Family::C;
    case 'D': case 'd': return Family::D;
    case 'E': case 'e': return Family::E;
    case 'F': case 'f': return Family::F;
    case 'G': case 'g': return Family::G;
  }
  throw std::invalid_argument(std::string("unknown family letter '") + c + "'");
}

RootSystem::RootSystem(Family family, int rank) : family_(family), rank_(rank) {
  bool ok = false;
  switch (family_) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 4; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok)
    throw std::invalid_argument("invalid rank " + std::to_string(rank) + " for family " +
                                std::string(1, static_cast<char>(family_)));
  build_cartan();
  build_roots();
  check_counts();
}

std::string RootSystem::type_name() const {
  return std::string(1, static_cast<char>(family_)) + std::to_string(rank_);
}

void RootSystem::build_cartan() {
  const int n = rank_;
  cartan_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) cartan_[i][i] = 2;
  auto bond = [&](int a, int b) { cartan_[a][b] = -1; cartan_[b][a] = -1; };
  switch (family_) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case Family::B:
      // Last simple root short.
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      cartan_[n - 1][n - 2] = -2;
      break;
    case Family::C:
      // Last simple root long.
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      cartan_[n - 2][n - 1] = -2;
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      bond(n - 3, n - 1);
      break;
    case Family::E:
      // Branch node is index 1, attached to the chain at index 3.
      bond(0, 2);
      bond(2, 3);
      bond(3, 4);
      bond(4, 5);
      bond(1, 3);
      if (n >= 7) bond(5, 6);
      if (n >= 8) bond(6, 7);
      break;
    case Family::F:
      bond(0, 1);
      bond(1, 2);
      bond(2, 3);
      cartan_[2][1] = -2;  // alpha_3 short against long alpha_2
      break;
    case Family::G:
      bond(0, 1);
      cartan_[0][1] = -3;  // alpha_1 short against long alpha_2
      break;
  }

  // Symmetrizer: propagate d along bonds, then rescale to minimal integers.
  std::vector<Rational> d(n, 0);
  d[0] = 1;
  std::vector<int> todo = {0};
  while (!todo.empty()) {
    int i = todo.back();
    todo.pop_back();
    for (int j = 0; j < n; ++j) {
      if (i == j || cartan_[i][j] == 0 || d[j] != 0) continue;
      d[j] = d[i] * cartan_[i][j] / cartan_[j][i];
      todo.push_back(j);
    }
  }
  BigInt l = 1;
  for (auto& x : d) l = boost::multiprecision::lcm(l, den(x));
  BigInt g = 0;
  std::vector<BigInt> di(n);
  for (int i = 0; i < n; ++i) {
    di[i] = num(d[i] * Rational(l));
    g = boost::multiprecision::gcd(g, di[i]);
  }
  symmetrizer_.resize(n);
  for (int i = 0; i < n; ++i) symmetrizer_[i] = static_cast<int>(to_int64(BigInt(di[i] / g)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (std::int64_t(symmetrizer_[i]) * cartan_[i][j] != std::int64_t(symmetrizer_[j]) * cartan_[j][i])
        throw std::logic_error("symmetrizer construction failed");
}

void RootSystem::build_roots() {
  const int n = rank_;
  auto omega_of = [&](const std::vector<int>& simple) {
    std::vector<int> om(n, 0);
    for (int j = 0; j < n; ++j)
      if (simple[j] != 0)
        for (int i = 0; i < n; ++i) om[i] += simple[j] * cartan_[i][j];
    return om;
  };

  std::map<std::vector<int>, bool> seen;  // by simple coordinates
  std::vector<std::vector<int>> work;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    seen[e] = true;
    work.push_back(e);
  }
  while (!work.empty()) {
    std::vector<int> s = std::move(work.back());
    work.pop_back();
    std::vector<int> om = omega_of(s);
    for (int i = 0; i < n; ++i) {
      if (om[i] == 0) continue;
      std::vector<int> s2 = s;
      s2[i] -= om[i];
      bool pos = true;
      for (int v : s2)
        if (v < 0) { pos = false; break; }
      if (!pos) continue;
      if (seen.emplace(s2, true).second) work.push_back(s2);
    }
  }

  positive_.clear();
  positive_.reserve(seen.size());
  for (const auto& [s, _] : seen) {
    Root r;
    r.simple = s;
    r.omega = omega_of(s);
    for (int v : s) r.height += v;
    positive_.push_back(std::move(r));
  }
  // Within a height class the root supported on earlier simples comes first,
  // so indices 0..n-1 are a1..an in order.
  std::sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.simple > b.simple;
  });

  // Length classes and coroot pairings from the symmetrized form
  // (alpha_i, alpha_j) = d_i * cartan[i][j], so (alpha_i, alpha_i) = 2 d_i.
  std::int64_t max_norm = 0;
  std::vector<std::int64_t> norms(positive_.size());
  for (std::size_t k = 0; k < positive_.size(); ++k) {
    const auto& s = positive_[k].simple;
    std::int64_t norm = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        norm += std::int64_t(s[i]) * s[j] * symmetrizer_[i] * cartan_[i][j];
    norms[k] = norm;
    max_norm = std::max(max_norm, norm);
  }
  for (std::size_t k = 0; k < positive_.size(); ++k) {
    Root& r = positive_[k];
    r.long_root = norms[k] == max_norm;
    r.coroot_pairing.resize(n);
    for (int j = 0; j < n; ++j) {
      std::int64_t p = 2 * std::int64_t(r.simple[j]) * symmetrizer_[j];
      if (p % norms[k] != 0) throw std::logic_error("non-integral coroot pairing");
      r.coroot_pairing[j] = static_cast<int>(p / norms[k]);
    }
  }
  for (std::size_t k = 0; k < positive_.size(); ++k) by_omega_[positive_[k].omega] = static_cast<int>(k);
}

void RootSystem::check_counts() const {
  const std::size_t n = rank_;
  std::size_t expect = 0;
  switch (family_) {
    case Family::A: expect = n * (n + 1) / 2; break;
    case Family::B:
    case Family::C: expect = n * n; break;
    case Family::D: expect = n * (n - 1); break;
    case Family::E: expect = n == 6 ? 36 : (n == 7 ? 63 : 120); break;
    case Family::F: expect = 24; break;
    case Family::G: expect = 6; break;
  }
  if (positive_.size() != expect)
    throw std::logic_error("positive root closure produced " + std::to_string(positive_.size()) +
                           " roots for " + type_name() + ", expected " + std::to_string(expect));
}

int RootSystem::braid_order(int i, int j) const {
  if (i == j) throw std::invalid_argument("braid order needs two distinct simple roots");
  switch (cartan_[i][j] * cartan_[j][i]) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
  }
  throw std::logic_error("Cartan product outside {0,1,2,3}");
}

std::vector<int> RootSystem::reflect_weight(int i, const std::vector<int>& lambda) const {
  std::vector<int> r = lambda;
  int c = lambda[i];
  if (c != 0)
    for (int k = 0; k < rank_; ++k) r[k] -= c * cartan_[k][i];
  return r;
}

std::vector<int> RootSystem::simple_root_omega(int i) const {
  std::vector<int> v(rank_);
  for (int k = 0; k < rank_; ++k) v[k] = cartan_[k][i];
  return v;
}

int RootSystem::simple_root_index(int i) const {
  for (std::size_t k = 0; k < positive_.size(); ++k) {
    if (positive_[k].height != 1) break;
    if (positive_[k].simple[i] == 1) return static_cast<int>(k);
  }
  throw std::logic_error("simple root not found");
}

std::optional<std::pair<int, int>> RootSystem::classify_root(const std::vector<int>& omega) const {
  if (auto it = by_omega_.find(omega); it != by_omega_.end()) return std::make_pair(it->second, 1);
  std::vector<int> neg(omega.size());
  for (std::size_t i = 0; i < omega.size(); ++i) neg[i] = -omega[i];
  if (auto it = by_omega_.find(neg); it != by_omega_.end()) return std::make_pair(it->second, -1);
  return std::nullopt;
}

std::vector<int> RootSystem::rank2_subsystem(int i, int j) const {
  std::vector<int> out;
  for (std::size_t k = 0; k < positive_.size(); ++k) {
    bool in_span = true;
    for (int m = 0; m < rank_; ++m)
      if (m != i && m != j && positive_[k].simple[m] != 0) { in_span = false; break; }
    if (in_span) out.push_back(static_cast<int>(k));
  }
  return out;
}

std::string RootSystem::root_name(int index) const {
  const Root& r = root(index);
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < rank_; ++i) {
    if (r.simple[i] == 0) continue;
    if (!first) os << "+";
    if (r.simple[i] != 1) os << r.simple[i];
    os << "a" << (i + 1);
    first = false;
  }
  return os.str();
}

std::size_t RootSystem::weyl_order() const {
  const std::size_t n = rank_;
  auto fact = [](std::size_t m) {
    std::size_t f = 1;
    for (std::size_t i = 2; i <= m; ++i) f *= i;
    return f;
  };
  switch (family_) {
    case Family::A: return fact(n + 1);
    case Family::B:
    case Family::C: return (std::size_t(1) << n) * fact(n);
    case Family::D: return (std::size_t(1) << (n - 1)) * fact(n);
    case Family::E: return n == 6 ? 51840u : (n == 7 ? 2903040u : 696729600u);
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  throw std::logic_error("unreachable");
}

}  // namespace hecke
