#include "nugatory/filling.hpp"

#include "nugatory/branched_cover.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace nugatory {

namespace {

Integer cross(Integer xa, Integer xb, Integer ya, Integer yb) { return xa * yb - xb * ya; }

std::string join(const std::vector<Integer>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += to_string(v[i]);
  }
  return out + "]";
}

// Advances `v` through 0 <= v_i < bound_i, last coordinate fastest.
bool next_vector(std::vector<Integer>& v, const std::vector<Integer>& bound) {
  for (std::size_t i = v.size(); i-- > 0;) {
    v[i] += 1;
    if (v[i] < bound[i]) return true;
    v[i] = 0;
  }
  return false;
}

bool all_square_free(const std::vector<Integer>& d) {
  return std::all_of(d.begin(), d.end(), [](Integer x) { return x == 0 || is_square_free(x); });
}

void chains_from(Integer n, Integer base, std::vector<Integer>& prefix, std::vector<std::vector<Integer>>& out) {
  if (n == 1) {
    if (!prefix.empty()) out.push_back(prefix);
    return;
  }
  for (Integer r = base; r <= n; r += base) {
    if (r < 2 || n % r != 0) continue;
    const Integer rest = n / r;
    // Later factors are multiples of r, so rest must be 1 or divisible by r.
    if (rest != 1 && rest % r != 0) continue;
    prefix.push_back(r);
    chains_from(rest, r, prefix, out);
    prefix.pop_back();
  }
}

struct OrderResult {
  std::vector<MData> hits;
  std::uint64_t instances = 0;
};

OrderResult search_order(Integer order, bool require_square_free) {
  OrderResult res;
  struct Shape {
    std::vector<Integer> r;
    Integer ell;
  };
  std::vector<Shape> shapes;
  for (Integer size = 1; size <= order; size += 1) {
    if (order % size != 0) continue;
    const Integer ell = order / size;
    for (auto& r : invariant_factor_chains(size)) shapes.push_back({std::move(r), ell});
  }
  std::sort(shapes.begin(), shapes.end(), [](const Shape& x, const Shape& y) {
    if (x.r.size() != y.r.size()) return x.r.size() < y.r.size();
    return x.r < y.r;
  });

  for (const auto& shape : shapes) {
    const auto& r = shape.r;
    const Integer ell = shape.ell;
    const std::size_t k = r.size();
    if (k == 0) {
      if (ell == 1) res.instances += 1;
      continue;
    }
    if (r.back() % ell != 0) continue;  // no element of order ell

    std::vector<std::vector<Integer>> hs;
    {
      std::vector<Integer> h(k, 0);
      do {
        if (element_order(h, r) == ell) hs.push_back(h);
      } while (next_vector(h, r));
    }
    std::uint64_t group_size = 1;
    for (auto x : r) group_size *= static_cast<std::uint64_t>(x.to_int64());
    res.instances += hs.size() * group_size;
    if (ell == 1) continue;  // only h = 0, never a counterexample

    std::vector<std::vector<Integer>> us;
    std::vector<std::vector<Integer>> snf_a;
    std::vector<bool> sf;
    {
      std::vector<Integer> u(k, 0);
      do {
        MData m{ell, r, u, std::vector<Integer>(k, 0)};
        auto d = smith_normal_form(filling_presentation(m, Slope::meridian())).d;
        sf.push_back(all_square_free(d));
        snf_a.push_back(std::move(d));
        us.push_back(u);
      } while (next_vector(u, r));
    }

    for (const auto& h : hs) {
      for (std::size_t ui = 0; ui < us.size(); ++ui) {
        if (require_square_free && !sf[ui]) continue;
        MData m{ell, r, us[ui], h};
        bool match = false;
        for (int sign : {1, -1}) {
          const auto d = smith_normal_form(filling_presentation(m, Slope(1, 2 * sign))).d;
          if (d == snf_a[ui]) {
            match = true;
            break;
          }
        }
        if (match) res.hits.push_back(std::move(m));
      }
    }
  }
  return res;
}

}  // namespace

Slope::Slope(Integer a, Integer b) : a_(a), b_(b) {
  if (gcd(a, b) != 1) {
    throw std::invalid_argument("slope (" + nugatory::to_string(a) + "," + nugatory::to_string(b) +
                                ") is not a primitive class");
  }
  if (a_ < 0 || (a_ == 0 && b_ < 0)) {
    a_ = -a_;
    b_ = -b_;
  }
}

Slope Slope::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) throw std::invalid_argument("slope must be written a/b: '" + std::string(text) + "'");
  return Slope(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

std::string Slope::to_string() const { return nugatory::to_string(a_) + "/" + nugatory::to_string(b_); }

Integer slope_distance(const Slope& x, const Slope& y) { return magnitude(cross(x.a(), x.b(), y.a(), y.b())); }

Integer element_order(const std::vector<Integer>& h, const std::vector<Integer>& r) {
  Integer order = 1;
  for (std::size_t i = 0; i < h.size(); ++i) order = lcm(order, Integer(r[i] / gcd(h[i], r[i])));
  return order;
}

void validate(const MData& m) {
  if (m.ell < 1) throw std::invalid_argument("MData: ell must be positive");
  const auto k = m.r.size();
  if (m.u.size() != k || m.h.size() != k) throw std::invalid_argument("MData: u, h and r differ in length");
  for (std::size_t i = 0; i < k; ++i) {
    if (m.r[i] < 2) throw std::invalid_argument("MData: invariant factor below 2");
    if (i > 0 && m.r[i] % m.r[i - 1] != 0) throw std::invalid_argument("MData: r is not a divisibility chain");
    if (m.u[i] < 0 || m.u[i] >= m.r[i]) throw std::invalid_argument("MData: u out of range");
    if (m.h[i] < 0 || m.h[i] >= m.r[i]) throw std::invalid_argument("MData: h out of range");
  }
  if (element_order(m.h, m.r) != m.ell) {
    throw std::invalid_argument("MData: ord(h) = " + to_string(element_order(m.h, m.r)) + " differs from ell = " +
                                to_string(m.ell));
  }
}

std::string to_string(const MData& m) {
  return "ell=" + to_string(m.ell) + " r=" + join(m.r) + " u=" + join(m.u) + " h=" + join(m.h);
}

Integer rational_longitude_constant(const MData& m) {
  Integer c = m.ell;
  for (auto x : m.r) c *= x;
  return c;
}

IntMatrix filling_presentation(const MData& m, const Slope& eta) {
  const auto k = static_cast<Eigen::Index>(m.r.size());
  IntMatrix p = IntMatrix::Zero(k + 1, k + 1);
  p(0, 0) = eta.a() * m.ell;
  for (Eigen::Index i = 0; i < k; ++i) {
    const auto si = static_cast<std::size_t>(i);
    p(i + 1, 0) = eta.a() * m.u[si] + eta.b() * m.h[si];
    p(i + 1, i + 1) = m.r[si];
  }
  return p;
}

Integer filling_order(const MData& m, const Slope& eta) {
  if (eta == Slope::longitude()) throw InfiniteGroupError("infinite first homology: filling along the rational longitude");
  const Integer expected = rational_longitude_constant(m) * slope_distance(eta, Slope::longitude());
  const Integer det = magnitude(determinant(filling_presentation(m, eta)));
  if (det != expected) {
    throw std::logic_error("filling_order: |det| = " + to_string(det) + " but c_M * Delta = " + to_string(expected));
  }
  return expected;
}

std::pair<IntMatrix, IntMatrix> cosmetic_pair(const MData& m, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("cosmetic_pair: sign must be +1 or -1");
  return {filling_presentation(m, Slope::meridian()), filling_presentation(m, Slope(1, 2 * sign))};
}

TheoremCheck verify_squarefree_theorem(const MData& m) {
  validate(m);
  TheoremCheck out;
  const auto [a, b_plus] = cosmetic_pair(m, 1);
  const auto b_minus = cosmetic_pair(m, -1).second;
  out.snf_a = smith_normal_form(a).d;
  out.snf_b_plus = smith_normal_form(b_plus).d;
  out.snf_b_minus = smith_normal_form(b_minus).d;
  out.order_odd = rational_longitude_constant(m) % 2 != 0;
  out.square_free = all_square_free(out.snf_a);
  out.snf_match_plus = out.snf_a == out.snf_b_plus;
  out.snf_match_minus = out.snf_a == out.snf_b_minus;
  out.hypotheses_hold = out.order_odd && out.square_free && (out.snf_match_plus || out.snf_match_minus);

  for (std::size_t i = 0; i < m.r.size(); ++i) {
    ChainStep s;
    s.index = i + 1;
    s.g = gcd(m.ell, m.r[i]);
    s.g_divides_u = m.u[i] % s.g == 0;
    s.g_divides_u_plus_2h = (m.u[i] + 2 * m.h[i]) % s.g == 0;
    s.g_divides_u_minus_2h = (m.u[i] - 2 * m.h[i]) % s.g == 0;
    s.g_divides_h = m.h[i] % s.g == 0;
    s.r_divides_h = m.h[i] % m.r[i] == 0;
    out.chain_steps.push_back(s);
  }
  out.h_trivial = std::all_of(out.chain_steps.begin(), out.chain_steps.end(), [](const ChainStep& s) { return s.r_divides_h; });

  const auto k = static_cast<Eigen::Index>(m.r.size());
  IntMatrix torsion = IntMatrix::Zero(k, k);
  IntVector h(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    torsion(i, i) = m.r[static_cast<std::size_t>(i)];
    h(i) = m.h[static_cast<std::size_t>(i)];
  }
  out.span_check = k == 0 || solve_integer(torsion, h).has_value();
  return out;
}

std::vector<std::vector<Integer>> invariant_factor_chains(Integer n) {
  std::vector<std::vector<Integer>> out;
  if (n < 1) throw std::invalid_argument("invariant_factor_chains: n must be positive");
  if (n == 1) return {{}};
  std::vector<Integer> prefix;
  chains_from(n, 1, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

SearchReport search_counterexamples(std::int64_t max_order, bool require_square_free, unsigned workers) {
  if (max_order < 1) throw std::invalid_argument("search_counterexamples: max_order must be at least 1");
  std::vector<Integer> orders;
  for (std::int64_t n = 1; n <= max_order; n += 2) orders.emplace_back(n);

  std::vector<OrderResult> results(orders.size());
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(orders.size()));

  // Larger orders dominate the cost; hand them out first.
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= orders.size()) return;
      const std::size_t slot = orders.size() - 1 - i;
      results[slot] = search_order(orders[slot], require_square_free);
    }
  };
  if (workers <= 1) {
    run();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
  }

  SearchReport out;
  for (auto& r : results) {
    out.instances += r.instances;
    for (auto& m : r.hits) out.counterexamples.push_back(std::move(m));
  }
  return out;
}

std::vector<Slope> common_distance_one_slopes(const Slope& alpha, const Slope& beta) {
  if (slope_distance(alpha, beta) != 2) {
    throw std::invalid_argument("common_distance_one_slopes: Delta(" + alpha.to_string() + ", " + beta.to_string() +
                                ") = " + to_string(slope_distance(alpha, beta)) + ", expected 2");
  }
  // Complete alpha to a basis (alpha, gamma) with det(alpha, gamma) = 1 and
  // write beta = x*alpha + y*gamma, y = +-2, x odd. A slope at distance one
  // from alpha is s*alpha + gamma up to sign; its distance from beta is
  // |x - y*s|, which is 1 exactly for s = (x - 1)/y and s = (x + 1)/y.
  Integer s, t;
  extended_gcd(alpha.a(), alpha.b(), s, t);
  const Integer ga = -t, gb = s;
  const Integer y = cross(alpha.a(), alpha.b(), beta.a(), beta.b());
  const Integer x = cross(beta.a(), beta.b(), ga, gb);
  std::vector<Slope> out;
  for (Integer num : {x - 1, x + 1}) {
    const Integer k = num / y;
    out.emplace_back(k * alpha.a() + ga, k * alpha.b() + gb);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace nugatory
