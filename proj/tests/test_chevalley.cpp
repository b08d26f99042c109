#include <map>
#include <memory>
#include <random>

#include "catch2/catch_amalgamated.hpp"
#include "monodromy/chevalley.hpp"
#include "monodromy/rational.hpp"

using namespace monodromy;

namespace {

const Chevalley& chev(Family f, int n) {
  static std::map<std::pair<int, int>, std::unique_ptr<Chevalley>> cache;
  auto key = std::make_pair(static_cast<int>(f), n);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<Chevalley>(RootSystem::build(f, n))).first;
  return *it->second;
}

template <class F>
void check_jacobi_triple(const Chevalley& ch, const Vec<F>& a, const Vec<F>& b, const Vec<F>& c) {
  Vec<F> s = ch.bracket(ch.bracket(a, b), c);
  Vec<F> t = ch.bracket(ch.bracket(b, c), a);
  Vec<F> u = ch.bracket(ch.bracket(c, a), b);
  for (int i = 0; i < ch.dim(); ++i) CHECK((s[i] + t[i] + u[i]).is_zero());
}

template <class F>
void exhaustive_jacobi(const Chevalley& ch, const F& proto) {
  for (int a = 0; a < ch.dim(); ++a)
    for (int b = a + 1; b < ch.dim(); ++b)
      for (int c = b + 1; c < ch.dim(); ++c)
        check_jacobi_triple(ch, ch.basis_vector(a, proto), ch.basis_vector(b, proto),
                            ch.basis_vector(c, proto));
}

}  // namespace

TEST_CASE("Jacobi identity holds exhaustively on small systems over Q") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{
           {Family::A, 1}, {Family::A, 2}, {Family::B, 2}, {Family::C, 2}, {Family::G, 2}}) {
    INFO(std::string(1, family_letter(f)) << n);
    exhaustive_jacobi(chev(f, n), Rat());
  }
}

TEST_CASE("Jacobi identity holds exhaustively on mid systems over F_73") {
  Fp proto = Fp::make(0, 73);
  for (auto [f, n] : std::vector<std::pair<Family, int>>{
           {Family::A, 3}, {Family::B, 3}, {Family::C, 3}, {Family::D, 4}, {Family::F, 4}}) {
    INFO(std::string(1, family_letter(f)) << n);
    exhaustive_jacobi(chev(f, n), proto);
  }
}

TEST_CASE("Jacobi identity holds on sampled triples for E6 and E7", "[property]") {
  std::mt19937_64 rng(4242);
  Fp proto = Fp::make(0, 73);
  for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::E, 6}, {Family::E, 7}}) {
    const Chevalley& ch = chev(f, n);
    for (int trial = 0; trial < 400; ++trial) {
      int a = static_cast<int>(rng() % ch.dim());
      int b = static_cast<int>(rng() % ch.dim());
      int c = static_cast<int>(rng() % ch.dim());
      check_jacobi_triple(ch, ch.basis_vector(a, proto), ch.basis_vector(b, proto),
                          ch.basis_vector(c, proto));
    }
    // random dense vectors exercise bilinearity of the same identity
    for (int trial = 0; trial < 5; ++trial)
      check_jacobi_triple(ch, random_vec(ch.dim(), proto, rng), random_vec(ch.dim(), proto, rng),
                          random_vec(ch.dim(), proto, rng));
  }
}

TEST_CASE("structure constants: hand checked values") {
  // sl3: the extraspecial pair for a1+a2 is the earlier simple root first, and
  // its constant is +1; (0,1) sorts before (1,0) so that is alpha_2
  const Chevalley& a2 = chev(Family::A, 2);
  int i1 = a2.rs.simple_index[0], i2 = a2.rs.simple_index[1];
  CHECK(a2.structure_n(i2, i1) == 1);
  CHECK(a2.structure_n(i1, i2) == -1);
  // G2 has root strings of length up to 4, so constants reach magnitude 3
  const Chevalley& g2 = chev(Family::G, 2);
  int mx = 0;
  for (int i = 0; i < g2.rs.size(); ++i)
    for (int j = 0; j < g2.rs.size(); ++j) mx = std::max(mx, std::abs(g2.structure_n(i, j)));
  CHECK(mx == 3);
  // simply laced systems only see +-1
  const Chevalley& a3 = chev(Family::A, 3);
  for (int i = 0; i < a3.rs.size(); ++i)
    for (int j = 0; j < a3.rs.size(); ++j) CHECK(std::abs(a3.structure_n(i, j)) <= 1);
  // B3 and C3 reach 2
  for (auto fam : {Family::B, Family::C}) {
    const Chevalley& ch = chev(fam, 3);
    int m = 0;
    for (int i = 0; i < ch.rs.size(); ++i)
      for (int j = 0; j < ch.rs.size(); ++j) m = std::max(m, std::abs(ch.structure_n(i, j)));
    CHECK(m == 2);
  }
}

TEST_CASE("structure constant antisymmetry and extraspecial positivity") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{
           {Family::A, 3}, {Family::B, 3}, {Family::G, 2}, {Family::D, 4}}) {
    const Chevalley& ch = chev(f, n);
    const auto& rs = ch.rs;
    for (int i = 0; i < rs.size(); ++i)
      for (int j = 0; j < rs.size(); ++j) {
        if (ch.sum_index(i, j) < 0) {
          CHECK(ch.structure_n(i, j) == 0);
          continue;
        }
        CHECK(ch.structure_n(i, j) == -ch.structure_n(j, i));
        // N(-x,-y) = -N(x,y)
        CHECK(ch.structure_n(rs.negative_of(i), rs.negative_of(j)) == -ch.structure_n(i, j));
      }
  }
}

TEST_CASE("ad is a Lie algebra representation", "[property]") {
  std::mt19937_64 rng(99);
  Fp proto = Fp::make(0, 73);
  for (auto [f, n] :
       std::vector<std::pair<Family, int>>{{Family::A, 2}, {Family::B, 3}, {Family::G, 2}}) {
    const Chevalley& ch = chev(f, n);
    for (int trial = 0; trial < 4; ++trial) {
      auto x = random_vec(ch.dim(), proto, rng);
      auto y = random_vec(ch.dim(), proto, rng);
      auto ax = ch.ad(x), ay = ch.ad(y);
      CHECK((ax * ay - ay * ax) == ch.ad(ch.bracket(x, y)));
      // ad x kills x
      for (const Fp& c : ax.apply(x)) CHECK(c.is_zero());
    }
  }
}

TEST_CASE("Cartan subalgebra acts diagonally with root values") {
  const Chevalley& ch = chev(Family::B, 3);
  Fp proto = Fp::make(0, 73);
  for (int a = 0; a < ch.rs.rank; ++a) {
    auto h = ch.ad_basis(ch.h_index(a), proto);
    for (int r = 0; r < ch.rs.size(); ++r) {
      // [H_a, X_r] = <r, alpha_a^vee> X_r
      for (int k = 0; k < ch.dim(); ++k) {
        Fp want = k == r ? proto.from(ch.rs.pairing(ch.rs.roots[r], a)) : proto.zero();
        CHECK(h(k, ch.x_index(r)) == want);
      }
    }
    for (int b = 0; b < ch.rs.rank; ++b)
      for (int k = 0; k < ch.dim(); ++k) CHECK(h(k, ch.h_index(b)).is_zero());
  }
}

TEST_CASE("weight_on computes twice the height on the half sum coweight") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{
           {Family::A, 4}, {Family::C, 3}, {Family::F, 4}, {Family::E, 7}}) {
    const Chevalley& ch = chev(f, n);
    auto hs = half_sum_positive_coroots(ch.rs);
    for (int r = 0; r < ch.rs.size(); ++r)
      CHECK(ch.weight_on(r, hs.doubled) == 2 * ch.rs.height(r));
  }
}

TEST_CASE("exp of nilpotent matrices") {
  Matrix<Rat> n(2, 2, Rat());
  n(0, 1) = Rat::make(1);
  auto e = exp_nilpotent(n);
  CHECK(e(0, 0) == Rat::make(1));
  CHECK(e(0, 1) == Rat::make(1));
  CHECK(e(1, 0) == Rat());
  CHECK(e(1, 1) == Rat::make(1));
  CHECK_THROWS_AS(exp_nilpotent(Matrix<Rat>::identity(2, Rat())), error);
  // exp(ad X) for a root vector is unipotent of small degree
  const Chevalley& ch = chev(Family::G, 2);
  auto ax = ch.ad_basis(0, Rat());
  auto ex = exp_nilpotent(ax);
  CHECK(ex.det() == Rat::make(1));
}

TEST_CASE("Weyl lifts permute root lines with signs and induce the reflection") {
  Fp proto = Fp::make(0, 73);
  for (auto [f, n] : std::vector<std::pair<Family, int>>{
           {Family::A, 2}, {Family::B, 2}, {Family::C, 3}, {Family::G, 2}, {Family::D, 4}}) {
    const Chevalley& ch = chev(f, n);
    const auto& rs = ch.rs;
    for (int a = 0; a < rs.rank; ++a) {
      int si = rs.simple_index[a];
      auto w = ch.weyl_lift(si, proto);
      Perm refl = rs.reflection_perm(si);
      for (int r = 0; r < rs.size(); ++r) {
        // column of X_r is +-X_{s(r)}
        int target = refl[r];
        for (int k = 0; k < ch.dim(); ++k) {
          if (k == target) CHECK(w(k, r).lifted() * w(k, r).lifted() == 1);
          else CHECK(w(k, r).is_zero());
        }
      }
      // torus part maps H-span to itself
      for (int b = 0; b < rs.rank; ++b)
        for (int k = 0; k < rs.size(); ++k) CHECK(w(k, ch.h_index(b)).is_zero());
      // the lift squares to an order <= 2 torus element, so w^4 = 1
      auto w2 = w * w;
      CHECK(w2 * w2 == Matrix<Fp>::identity(ch.dim(), proto));
    }
  }
}

TEST_CASE("torus action is a one parameter family of automorphisms", "[property]") {
  std::mt19937_64 rng(2025);
  Fp proto = Fp::make(0, 73);
  const Chevalley& ch = chev(Family::C, 3);
  auto rand_torus = [&] {
    std::vector<Fp> t(ch.rs.rank, proto);
    for (auto& x : t) x = Fp::make(1 + static_cast<long long>(rng() % 72), 73);
    return t;
  };
  for (int trial = 0; trial < 5; ++trial) {
    auto s = rand_torus(), t = rand_torus();
    auto as = ch.ad_torus(s), at = ch.ad_torus(t);
    std::vector<Fp> st(ch.rs.rank, proto);
    for (int i = 0; i < ch.rs.rank; ++i) st[i] = s[i] * t[i];
    CHECK(as * at == ch.ad_torus(st));
    // automorphism: Ad(t)[x, y] = [Ad(t)x, Ad(t)y]
    auto x = random_vec(ch.dim(), proto, rng);
    auto y = random_vec(ch.dim(), proto, rng);
    CHECK(at.apply(ch.bracket(x, y)) == ch.bracket(at.apply(x), at.apply(y)));
  }
  CHECK_THROWS_AS(ch.ad_torus(std::vector<Fp>{proto.one()}), error);
}

TEST_CASE("Killing form: sl2 values, invariance, nondegeneracy") {
  const Chevalley& a1 = chev(Family::A, 1);
  auto k1 = a1.killing_gram();
  // basis X, -X  "X_a, X_{-a}", H; K(e,f) = 4, K(h,h) = 8
  CHECK(k1[0][1] == 4);
  CHECK(k1[1][0] == 4);
  CHECK(k1[2][2] == 8);
  CHECK(k1[0][0] == 0);
  CHECK(k1[0][2] == 0);

  for (auto [f, n] : std::vector<std::pair<Family, int>>{
           {Family::A, 2}, {Family::B, 2}, {Family::G, 2}, {Family::C, 3}}) {
    const Chevalley& ch = chev(f, n);
    auto k = ch.killing_gram();
    // X_r pairs only with X_{-r}
    for (int i = 0; i < ch.rs.size(); ++i) {
      for (int j = 0; j < ch.rs.size(); ++j)
        if (j != ch.rs.negative_of(i)) CHECK(k[i][j] == 0);
      CHECK(k[i][ch.rs.negative_of(i)] != 0);
    }
    // symmetric, nondegenerate over Q
    Matrix<Rat> km(ch.dim(), ch.dim(), Rat());
    for (int i = 0; i < ch.dim(); ++i)
      for (int j = 0; j < ch.dim(); ++j) {
        CHECK(k[i][j] == k[j][i]);
        km(i, j) = Rat::make(k[i][j]);
      }
    CHECK(km.rank() == ch.dim());
    // invariance K([x,y],z) = K(x,[y,z]) on random rational vectors
    std::mt19937_64 rng(7);
    auto rv = [&] {
      Vec<Rat> v(ch.dim(), Rat());
      for (auto& c : v) c = Rat::make(static_cast<long long>(rng() % 7) - 3);
      return v;
    };
    auto pair_k = [&](const Vec<Rat>& u, const Vec<Rat>& w) {
      Rat s;
      for (int i = 0; i < ch.dim(); ++i)
        for (int j = 0; j < ch.dim(); ++j) s += u[i] * w[j] * Rat::make(k[i][j]);
      return s;
    };
    for (int trial = 0; trial < 3; ++trial) {
      auto x = rv(), y = rv(), z = rv();
      CHECK(pair_k(ch.bracket(x, y), z) == pair_k(x, ch.bracket(y, z)));
    }
  }
}

TEST_CASE("E8 algebra builds with consistent structure constants") {
  // construction validates |N(x,y)| = p+1 on every root pair internally
  const Chevalley& e8 = chev(Family::E, 8);
  CHECK(e8.dim() == 248);
  std::mt19937_64 rng(31337);
  Fp proto = Fp::make(0, 97);  // 97 = 1 mod 24, comfortably above 3 * 30
  for (int trial = 0; trial < 60; ++trial) {
    int a = static_cast<int>(rng() % e8.dim());
    int b = static_cast<int>(rng() % e8.dim());
    int c = static_cast<int>(rng() % e8.dim());
    check_jacobi_triple(e8, e8.basis_vector(a, proto), e8.basis_vector(b, proto),
                        e8.basis_vector(c, proto));
  }
}
