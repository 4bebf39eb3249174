#include <doctest.h>

#include "nugatory/branched_cover.hpp"
#include "nugatory/filling.hpp"
#include "oracles.hpp"

#include <functional>
#include <random>
#include <set>

using namespace nugatory;

namespace {

std::vector<Integer> ints(std::initializer_list<long long> xs) { return {xs.begin(), xs.end()}; }

MData md(long long ell, std::initializer_list<long long> r, std::initializer_list<long long> u, std::initializer_list<long long> h) {
  return {Integer(ell), ints(r), ints(u), ints(h)};
}

IntMatrix mat2(long long a, long long b, long long c, long long d) {
  IntMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

oracle::Mat presentation(std::int64_t ell, const std::vector<std::int64_t>& r, const std::vector<std::int64_t>& u,
                         const std::vector<std::int64_t>& h, std::int64_t a, std::int64_t b) {
  const std::size_t k = r.size();
  oracle::Mat m(k + 1, std::vector<std::int64_t>(k + 1, 0));
  m[0][0] = a * ell;
  for (std::size_t i = 0; i < k; ++i) {
    m[i + 1][0] = a * u[i] + b * h[i];
    m[i + 1][i + 1] = r[i];
  }
  return m;
}

std::string label(std::int64_t ell, const std::vector<std::int64_t>& r, const std::vector<std::int64_t>& u,
                  const std::vector<std::int64_t>& h) {
  auto j = [](const std::vector<std::int64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return "[" + s + "]";
  };
  return "ell=" + std::to_string(ell) + " r=" + j(r) + " u=" + j(u) + " h=" + j(h);
}

// Naive enumeration of the counterexample search.
std::set<std::string> naive_search(std::int64_t max_order, bool require_sf, std::uint64_t& instances) {
  std::set<std::string> out;
  instances = 0;
  std::vector<std::vector<std::int64_t>> chains{{}};
  for (std::size_t i = 0; i < chains.size(); ++i) {
    std::int64_t prod = 1;
    for (auto x : chains[i]) prod *= x;
    const std::int64_t last = chains[i].empty() ? 1 : chains[i].back();
    for (std::int64_t next = std::max<std::int64_t>(2, last); prod * next <= max_order; ++next) {
      if (next % last) continue;
      auto c = chains[i];
      c.push_back(next);
      chains.push_back(c);
    }
  }
  for (const auto& r : chains) {
    std::int64_t prod = 1;
    for (auto x : r) prod *= x;
    for (std::int64_t ell = 1; ell * prod <= max_order; ++ell) {
      if ((ell * prod) % 2 == 0) continue;
      const std::size_t k = r.size();
      std::vector<std::int64_t> h(k, 0), u(k, 0);
      std::function<void(std::size_t)> over_h = [&](std::size_t i) {
        if (i < k) {
          for (h[i] = 0; h[i] < r[i]; ++h[i]) over_h(i + 1);
          return;
        }
        std::int64_t ord = 1;
        for (;; ++ord) {
          bool zero = true;
          for (std::size_t j = 0; j < k; ++j) zero = zero && (ord * h[j]) % r[j] == 0;
          if (zero) break;
        }
        if (ord != ell) return;
        std::function<void(std::size_t)> over_u = [&](std::size_t i2) {
          if (i2 < k) {
            for (u[i2] = 0; u[i2] < r[i2]; ++u[i2]) over_u(i2 + 1);
            return;
          }
          ++instances;
          bool h_zero = std::all_of(h.begin(), h.end(), [](auto x) { return x == 0; });
          if (h_zero) return;
          const auto fa = oracle::torsion_factors(presentation(ell, r, u, h, 1, 0));
          if (require_sf && !std::all_of(fa.begin(), fa.end(), oracle::square_free)) return;
          for (int s : {1, -1})
            if (oracle::torsion_factors(presentation(ell, r, u, h, 1, 2 * s)) == fa) {
              out.insert(label(ell, r, u, h));
              return;
            }
        };
        over_u(0);
      };
      over_h(0);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("square-free summands") {
  auto r = square_free_summands(AbelianGroup::parse("3|9"));
  CHECK_FALSE(r.all_square_free);
  REQUIRE(r.witness);
  CHECK(r.witness->index == 2);
  CHECK(r.witness->factor == 9);
  CHECK(r.witness->prime == 3);
  CHECK(square_free_summands(AbelianGroup::parse("7|7")).all_square_free);
  CHECK_FALSE(square_free_summands(AbelianGroup::parse("7|7")).witness);
  CHECK(square_free_summands(AbelianGroup()).all_square_free);
  for (long long n = 1; n < 3000; ++n) CHECK(is_square_free(n) == oracle::square_free(n));
  CHECK(factorize(360) == std::vector<std::pair<Integer, int>>{{2, 3}, {3, 2}, {5, 1}});
}

TEST_CASE("slopes") {
  CHECK(Slope(-1, 2) == Slope(1, -2));
  CHECK(Slope(0, -1) == Slope::longitude());
  CHECK_THROWS(Slope(2, 4));
  CHECK_THROWS(Slope(0, 0));
  CHECK(Slope::parse("3/-2") == Slope(3, -2));
  CHECK(Slope::parse("-3/2").to_string() == "3/-2");
  CHECK_THROWS(Slope::parse("3"));
  CHECK(slope_distance(Slope::meridian(), Slope::longitude()) == 1);
  CHECK(slope_distance(Slope(1, 0), Slope(1, 2)) == 2);
  CHECK(slope_distance(Slope(5, 3), Slope(5, 3)) == 0);
  CHECK(common_distance_one_slopes(Slope(1, 0), Slope(1, 2)) == std::vector<Slope>{Slope(0, 1), Slope(1, 1)});
  CHECK(common_distance_one_slopes(Slope(1, 0), Slope(1, -2)) == std::vector<Slope>{Slope(0, 1), Slope(1, -1)});
  CHECK_THROWS(common_distance_one_slopes(Slope(1, 0), Slope(1, 1)));

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> e(-7, 7);
  int tried = 0;
  while (tried < 40) {
    const int p = e(rng), q = e(rng), s = e(rng), t = e(rng);
    if (std::gcd(p, q) != 1 || std::gcd(s, t) != 1 || std::abs(p * t - q * s) != 2) continue;
    ++tried;
    const auto got = common_distance_one_slopes(Slope(p, q), Slope(s, t));
    const auto want = oracle::distance_one_both(p, q, s, t, 50);
    REQUIRE(got.size() == 2);
    REQUIRE(want.size() == 2);
    std::set<std::pair<long long, long long>> g, w(want.begin(), want.end());
    for (const auto& x : got) g.emplace(x.a().to_int64(), x.b().to_int64());
    CHECK(g == w);
  }
}

TEST_CASE("filling presentations") {
  const MData m = md(3, {9}, {0}, {3});
  CHECK(rational_longitude_constant(m) == 27);
  CHECK(rational_longitude_constant(md(1, {}, {}, {})) == 1);
  CHECK(rational_longitude_constant(md(7, {7}, {0}, {1})) == 49);
  CHECK(filling_presentation(m, Slope(1, 0)) == mat2(3, 0, 0, 9));
  CHECK(filling_presentation(m, Slope(1, 2)) == mat2(3, 0, 6, 9));
  CHECK(filling_presentation(m, Slope(0, 1)) == mat2(0, 0, 3, 9));
  CHECK(filling_order(m, Slope(1, 0)) == 27);
  CHECK(filling_order(m, Slope(2, 1)) == 54);
  CHECK_THROWS_AS(filling_order(m, Slope(0, 1)), InfiniteGroupError);

  CHECK(cosmetic_pair(m, 1) == std::pair{mat2(3, 0, 0, 9), mat2(3, 0, 6, 9)});
  CHECK(cosmetic_pair(md(1, {15}, {4}, {0}), -1) == std::pair{mat2(1, 0, 4, 15), mat2(1, 0, 4, 15)});
  CHECK(cosmetic_pair(md(3, {15}, {0}, {5}), 1) == std::pair{mat2(3, 0, 0, 15), mat2(3, 0, 10, 15)});

  CHECK_THROWS(validate(md(3, {9}, {0}, {1})));   // ord(h) = 9
  CHECK_THROWS(validate(md(1, {3, 5}, {0, 0}, {0, 0})));
  CHECK_THROWS(validate(md(1, {9}, {9}, {0})));
  CHECK_NOTHROW(validate(md(3, {3, 3}, {1, 2}, {0, 1})));
  CHECK(element_order(ints({0, 2}), ints({3, 6})) == 3);
  CHECK(element_order({}, {}) == 1);
}

TEST_CASE("order identity against Leibniz") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto chains = invariant_factor_chains(1 + 2 * static_cast<long long>(rng() % 40));
    const auto& r = chains[rng() % chains.size()];
    MData m;
    std::vector<std::int64_t> r64, u64, h64;
    for (auto x : r) {
      r64.push_back(x.to_int64());
      const auto ui = static_cast<long long>(rng() % static_cast<unsigned long long>(x.to_int64()));
      const auto hi = static_cast<long long>(rng() % static_cast<unsigned long long>(x.to_int64()));
      m.u.push_back(ui);
      m.h.push_back(hi);
      u64.push_back(ui);
      h64.push_back(hi);
    }
    m.r = r;
    m.ell = element_order(m.h, m.r);
    const long long a = static_cast<long long>(rng() % 9), b = static_cast<long long>(rng() % 19) - 9;
    if (std::gcd(a, b) != 1 || a == 0) continue;
    const auto det = oracle::leibniz(presentation(m.ell.to_int64(), r64, u64, h64, a, b));
    CHECK(filling_order(m, Slope(a, b)) == Integer(std::llabs(det)));
  }
}

TEST_CASE("invariant factor chains") {
  CHECK(invariant_factor_chains(1) == std::vector<std::vector<Integer>>{{}});
  CHECK(invariant_factor_chains(27) == std::vector<std::vector<Integer>>{ints({3, 3, 3}), ints({3, 9}), ints({27})});
  CHECK(invariant_factor_chains(45) == std::vector<std::vector<Integer>>{ints({3, 15}), ints({45})});
}

TEST_CASE("theorem check") {
  auto c = verify_squarefree_theorem(md(3, {15}, {0}, {5}));
  CHECK_FALSE(c.hypotheses_hold);
  CHECK(c.snf_a == ints({3, 15}));
  CHECK(c.snf_b_plus == ints({1, 45}));

  c = verify_squarefree_theorem(md(1, {3, 3}, {1, 2}, {0, 0}));
  CHECK(c.h_trivial);
  CHECK(c.span_check);

  c = verify_squarefree_theorem(md(3, {9}, {0}, {3}));
  CHECK(c.order_odd);
  CHECK(c.snf_a == ints({3, 9}));
  CHECK(c.snf_b_plus == ints({3, 9}));
  CHECK_FALSE(c.square_free);
  CHECK_FALSE(c.hypotheses_hold);
  CHECK_FALSE(c.h_trivial);
  CHECK_FALSE(c.span_check);
  REQUIRE(c.chain_steps.size() == 1);
  CHECK(c.chain_steps[0].g == 3);
  CHECK(c.chain_steps[0].g_divides_u);
  CHECK_FALSE(c.chain_steps[0].r_divides_h);
}

TEST_CASE("counterexample search matches naive enumeration") {
  for (bool sf : {false, true}) {
    std::uint64_t n = 0;
    const auto want = naive_search(99, sf, n);
    const auto got = search_counterexamples(99, sf, 1);
    CHECK(got.instances == n);
    std::set<std::string> g;
    for (const auto& m : got.counterexamples) g.insert(to_string(m));
    CHECK(g.size() == got.counterexamples.size());
    CHECK(g == want);
    if (sf) CHECK(want.empty());
  }
  const auto with = search_counterexamples(27, false);
  CHECK(std::find(with.counterexamples.begin(), with.counterexamples.end(), md(3, {9}, {0}, {3})) != with.counterexamples.end());
  CHECK(search_counterexamples(1, true).counterexamples.empty());
}

TEST_CASE("search result does not depend on workers") {
  const auto one = search_counterexamples(243, false, 1);
  const auto four = search_counterexamples(243, false, 4);
  CHECK(one.instances == four.instances);
  CHECK(one.counterexamples == four.counterexamples);
  for (const auto& m : one.counterexamples) {
    const auto c = verify_squarefree_theorem(m);
    CHECK_FALSE(c.h_trivial);
    CHECK(c.order_odd);
    CHECK((c.snf_match_plus || c.snf_match_minus));
  }
}
