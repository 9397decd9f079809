#pragma once

// Independent reference computations used to check the library.  Nothing
// here calls the algorithm under test.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace oracles {

using Rational = mpq_class;
using Mat2 = std::array<long, 4>;  // a, b, c, d

inline Rational ratio(long num, long den) {
  Rational r{mpz_class(num), mpz_class(den)};
  r.canonicalize();
  return r;
}

inline Mat2 mul(const Mat2& x, const Mat2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

inline Mat2 inv(const Mat2& x) { return {x[3], -x[1], -x[2], x[0]}; }

/// Least k <= 12 with m^k = I by repeated multiplication, or nullopt.
inline std::optional<unsigned> power_order(const Mat2& m) {
  Mat2 p = m;
  for (unsigned k = 1; k <= 12; ++k) {
    if (p == Mat2{1, 0, 0, 1}) return k;
    p = mul(p, m);
  }
  return std::nullopt;
}

/// Some u in SL(2,Z) with entries bounded by `bound` and u x u^-1 = y.
inline std::optional<Mat2> brute_conjugator(const Mat2& x, const Mat2& y, long bound) {
  for (long a = -bound; a <= bound; ++a) {
    for (long b = -bound; b <= bound; ++b) {
      for (long c = -bound; c <= bound; ++c) {
        for (long d = -bound; d <= bound; ++d) {
          if (a * d - b * c != 1) continue;
          const Mat2 u{a, b, c, d};
          if (mul(mul(u, x), inv(u)) == y) return u;
        }
      }
    }
  }
  return std::nullopt;
}

/// Number of partitions of n into parts of size at most max_part.
inline std::uint64_t partition_count(unsigned n, unsigned max_part) {
  std::vector<std::uint64_t> ways(n + 1, 0);
  ways[0] = 1;
  for (unsigned part = 1; part <= max_part; ++part) {
    for (unsigned total = part; total <= n; ++total) ways[total] += ways[total - part];
  }
  return ways[n];
}

/// Multisets of parts from `parts` summing to n, each sorted decreasingly.
inline std::set<std::vector<unsigned>> partitions_into(unsigned n, const std::vector<unsigned>& parts) {
  std::set<std::vector<unsigned>> out;
  std::vector<unsigned> current;
  auto rec = [&](auto&& self, unsigned remaining) -> void {
    if (remaining == 0) {
      auto sorted = current;
      std::sort(sorted.rbegin(), sorted.rend());
      out.insert(sorted);
      return;
    }
    for (unsigned p : parts) {
      if (p <= remaining) {
        current.push_back(p);
        self(self, remaining - p);
        current.pop_back();
      }
    }
  };
  rec(rec, n);
  return out;
}

/// Determinant by rational Gaussian elimination.
inline Rational determinant(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

/// Coefficients (constant first) of prod (t - r)^m.
inline std::vector<Rational> expand_roots(const std::vector<std::pair<long, unsigned>>& roots) {
  std::vector<Rational> p{1};
  for (const auto& [r, m] : roots) {
    for (unsigned k = 0; k < m; ++k) {
      std::vector<Rational> q(p.size() + 1, 0);
      for (std::size_t i = 0; i < p.size(); ++i) {
        q[i + 1] += p[i];
        q[i] -= Rational(r) * p[i];
      }
      p = q;
    }
  }
  return p;
}

inline Rational evaluate(const std::vector<Rational>& p, const Rational& t) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
  return acc;
}

inline std::vector<Rational> derivative(const std::vector<Rational>& p) {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
  return d;
}

/// Multiplicity of t = r as a root: the number of derivatives vanishing at r.
inline unsigned root_multiplicity(std::vector<Rational> p, const Rational& r) {
  unsigned m = 0;
  while (!p.empty() && evaluate(p, r) == 0) {
    ++m;
    p = derivative(p);
  }
  return m;
}

/// j(t) = 1728 * 4a^3 / (4a^3 + 27b^2) at a point; nullopt at a pole.
inline std::optional<Rational> j_value(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                       const Rational& t) {
  const Rational av = evaluate(a, t), bv = evaluate(b, t);
  const Rational num = 4 * av * av * av;
  const Rational den = num + 27 * bv * bv;
  if (den == 0) return std::nullopt;
  return Rational(1728) * num / den;
}

/// Points x in ((1/N)Z / Z)^n with M x + t == x mod 1, by exhaustive search.
inline std::size_t grid_fixed_points(const std::vector<std::vector<long>>& m, const std::vector<Rational>& t,
                                     long N) {
  const std::size_t n = m.size();
  std::vector<long> x(n, 0);
  std::size_t count = 0;
  while (true) {
    bool fixed = true;
    for (std::size_t i = 0; i < n && fixed; ++i) {
      Rational y = t[i];
      for (std::size_t j = 0; j < n; ++j) y += ratio(m[i][j] * x[j], N);
      y -= ratio(x[i], N);
      fixed = y.get_den() == 1;
    }
    if (fixed) ++count;
    std::size_t p = 0;
    while (p < n && ++x[p] == N) x[p++] = 0;
    if (p == n) return count;
  }
}

}  // namespace oracles
