#include "isotriv/torus_analysis.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace isotriv::torus {

namespace {

using i64 = std::int64_t;
__extension__ using i128 = __int128;

i64 narrow(i128 v) {
  if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min()) {
    throw std::overflow_error("64-bit overflow in the torus fast path");
  }
  return static_cast<i64>(v);
}

i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

i64 to_i64(const Integer& x) {
  if (!x.fits_slong_p()) throw std::overflow_error("integer too large for the torus fast path");
  return x.get_si();
}

struct Mat64 {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<i64> a;

  Mat64() = default;
  Mat64(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  i64& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  i64 operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

Mat64 to_mat64(const IntMatrix& m) {
  Mat64 out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = to_i64(m(i, j));
  }
  return out;
}

Mat64 multiply(const Mat64& x, const Mat64& y) {
  Mat64 out(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i) {
    for (std::size_t j = 0; j < y.cols; ++j) {
      i128 acc = 0;
      for (std::size_t k = 0; k < x.cols; ++k) acc += static_cast<i128>(x(i, k)) * y(k, j);
      out(i, j) = narrow(acc);
    }
  }
  return out;
}

// Row Hermite normal form of a full-row-rank matrix.
Mat64 hermite(Mat64 h) {
  std::size_t row = 0;
  auto sub_row = [&](std::size_t dst, std::size_t src, i64 q) {
    for (std::size_t j = 0; j < h.cols; ++j) h(dst, j) = narrow(static_cast<i128>(h(dst, j)) - static_cast<i128>(q) * h(src, j));
  };
  for (std::size_t col = 0; col < h.cols && row < h.rows; ++col) {
    while (true) {
      std::size_t p = h.rows;
      for (std::size_t i = row; i < h.rows; ++i) {
        if (h(i, col) != 0 && (p == h.rows || std::abs(h(i, col)) < std::abs(h(p, col)))) p = i;
      }
      if (p == h.rows) break;
      if (p != row) {
        for (std::size_t j = 0; j < h.cols; ++j) std::swap(h(row, j), h(p, j));
      }
      bool clean = true;
      for (std::size_t i = row + 1; i < h.rows; ++i) {
        if (h(i, col) == 0) continue;
        sub_row(i, row, h(i, col) / h(row, col));
        if (h(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) {
      for (std::size_t j = 0; j < h.cols; ++j) h(row, j) = -h(row, j);
    }
    for (std::size_t i = 0; i < row; ++i) {
      i64 q = h(i, col) / h(row, col);
      if (mod(h(i, col), h(row, col)) != h(i, col) - q * h(row, col)) --q;
      if (q != 0) sub_row(i, row, q);
    }
    ++row;
  }
  if (row != h.rows) throw std::logic_error("annihilator lattice is not of full rank");
  return h;
}

void append(std::string& key, i64 v, int width) {
  for (int b = 0; b < width; ++b) key.push_back(static_cast<char>((static_cast<std::uint64_t>(v) >> (8 * b)) & 0xffU));
}

std::string matrix_key(const Mat64& m) {
  std::string key;
  append(key, static_cast<i64>(m.rows), 2);
  for (i64 v : m.a) append(key, v, 8);
  return key;
}

// The group with linear parts in int64 and translations scaled by a common
// denominator D that also clears every fixed-component sample point.
class FastGroup {
 public:
  FastGroup(const FiniteActionGroup& g, const std::vector<std::optional<CongruenceSolution>>& solutions) {
    const std::size_t count = g.order();
    n_ = 2 * g.complex_dimension();
    Integer D = 1;
    for (std::size_t i = 0; i < count; ++i) {
      D = lcm(D, g.element(i).translation().denominator());
      if (!solutions[i] || !solutions[i]->solvable()) continue;
      const auto& s = solutions[i]->shifts();
      const auto& d = solutions[i]->invariants();
      for (std::size_t j = 0; j < s.size(); ++j) D = lcm(D, s[j].get_den() * d[j]);
    }
    if (D > Integer(1) << 30) throw std::overflow_error("common denominator " + D.get_str() + " is too large");
    D_ = to_i64(D);
    width_ = D_ < 256 ? 1 : (D_ < 65536 ? 2 : 4);

    M_.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      const auto& e = g.element(i);
      M_.push_back(to_mat64(e.linear()));
      std::vector<i64> t(n_);
      for (std::size_t j = 0; j < n_; ++j) {
        const Rational& x = e.translation()[j];
        t[j] = to_i64(x.get_num() * (D / x.get_den()));
      }
      t_.push_back(std::move(t));
      index_.emplace(element_key(M_.back(), t_.back()), i);
      rank_minus_identity_.push_back(i == 0 ? 0 : solutions[i]->rank());
    }
    order_.assign(count, 1);
    inverse_.assign(count, 0);
    for (std::size_t i = 1; i < count; ++i) {
      std::size_t x = i, prev = 0;
      unsigned k = 1;
      while (x != 0) {
        prev = x;
        x = multiply(x, i);
        ++k;
      }
      order_[i] = k;
      inverse_[i] = prev;
    }
  }

  std::size_t size() const { return M_.size(); }
  std::size_t lattice_dimension() const { return n_; }
  i64 denominator() const { return D_; }
  int width() const { return width_; }
  const Mat64& linear(std::size_t i) const { return M_[i]; }
  std::size_t inverse(std::size_t i) const { return inverse_[i]; }
  unsigned order(std::size_t i) const { return order_[i]; }
  std::size_t rank_minus_identity(std::size_t i) const { return rank_minus_identity_[i]; }

  std::vector<i64> apply(std::size_t h, const std::vector<i64>& x) const {
    const Mat64& m = M_[h];
    std::vector<i64> y(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      i128 acc = t_[h][i];
      for (std::size_t j = 0; j < n_; ++j) acc += static_cast<i128>(m(i, j)) * x[j];
      y[i] = mod(narrow(acc % D_), D_);
    }
    return y;
  }

  std::size_t multiply(std::size_t i, std::size_t j) const {
    const std::uint64_t memo_key = static_cast<std::uint64_t>(i) * M_.size() + j;
    if (auto it = products_.find(memo_key); it != products_.end()) return it->second;
    Mat64 m = ::isotriv::torus::multiply(M_[i], M_[j]);
    std::vector<i64> t = apply(i, t_[j]);
    auto it = index_.find(element_key(m, t));
    if (it == index_.end()) throw std::logic_error("group is not closed under composition");
    products_.emplace(memo_key, it->second);
    return it->second;
  }

 private:
  std::string element_key(const Mat64& m, const std::vector<i64>& t) const {
    std::string key = matrix_key(m);
    for (i64 v : t) append(key, mod(v, D_), 8);
    return key;
  }

  std::size_t n_ = 0;
  i64 D_ = 1;
  int width_ = 8;
  std::vector<Mat64> M_;
  std::vector<std::vector<i64>> t_;
  std::vector<std::size_t> inverse_;
  std::vector<unsigned> order_;
  std::vector<std::size_t> rank_minus_identity_;
  std::unordered_map<std::string, std::size_t> index_;
  mutable std::unordered_map<std::uint64_t, std::size_t> products_;
};

class Analyzer {
 public:
  Analyzer(const FiniteActionGroup& g, const FastGroup& fg) : g_(g), fg_(fg) {}

  int intern(const Mat64& h) {
    auto [it, inserted] = lattice_ids_.emplace(matrix_key(h), static_cast<int>(lattices_.size()));
    if (inserted) lattices_.push_back(h);
    return it->second;
  }

  // Annihilator lattice of h(C) given that of C.
  int image_lattice(int lattice, std::size_t h) {
    const std::uint64_t key = static_cast<std::uint64_t>(lattice) * fg_.size() + h;
    if (auto it = image_cache_.find(key); it != image_cache_.end()) return it->second;
    const int id = intern(hermite(multiply(lattices_[static_cast<std::size_t>(lattice)], fg_.linear(fg_.inverse(h)))));
    image_cache_.emplace(key, id);
    return id;
  }

  std::string component_key(int lattice, const std::vector<i64>& x) const {
    std::string key;
    append(key, lattice, 4);
    if (lattice < 0) {
      for (i64 v : x) append(key, v, fg_.width());
      return key;
    }
    const Mat64& h = lattices_[static_cast<std::size_t>(lattice)];
    const i64 D = fg_.denominator();
    for (std::size_t i = 0; i < h.rows; ++i) {
      i128 acc = 0;
      for (std::size_t j = 0; j < h.cols; ++j) acc += static_cast<i128>(h(i, j)) * x[j];
      append(key, mod(narrow(acc % D), D), fg_.width());
    }
    return key;
  }

  bool seen(const std::string& key) const { return seen_.count(key) != 0; }

  Stratum make_stratum(std::size_t source, const std::vector<i64>& x, int lattice, const Mat64& directions,
                       const IntMatrix& exact_directions) {
    const std::size_t n = fg_.lattice_dimension();
    const std::size_t k = directions.cols;
    Stratum s;
    s.dimension = k / 2;
    s.transverse_dimension = (n - k) / 2;
    std::vector<Rational> coords(n);
    for (std::size_t i = 0; i < n; ++i) {
      coords[i] = Rational(Integer(x[i]), Integer(fg_.denominator()));
      coords[i].canonicalize();
    }
    s.sample = TorusPoint(std::move(coords));
    s.directions = exact_directions;
    s.source_element = source;

    for (std::size_t h = 0; h < fg_.size(); ++h) {
      const std::vector<i64> hx = fg_.apply(h, x);
      const int image = lattice < 0 ? -1 : image_lattice(lattice, h);
      if (seen_.insert(component_key(image, hx)).second) ++s.orbit_size;
    }

    for (std::size_t h = 0; h < fg_.size(); ++h) {
      if (n - fg_.rank_minus_identity(h) < k) continue;
      if (!fixes_directions(h, directions)) continue;
      if (fg_.apply(h, x) != x) continue;
      s.stabilizer.push_back(h);
    }

    const std::size_t order = s.stabilizer.size();
    std::size_t generator = 0;
    for (std::size_t h : s.stabilizer) {
      if (fg_.order(h) == order) {
        s.cyclic = true;
        generator = h;
        break;
      }
    }
    for (std::size_t h : s.stabilizer) {
      if (h == 0) continue;
      if (fg_.rank_minus_identity(h) == 4) s.symplectic_reflections.push_back(h);
      if (fg_.order(h) == 2 && fg_.rank_minus_identity(h) == n - k) s.transverse_minus_one = true;
    }
    s.generated_by_reflections = generated_subgroup_order(s.symplectic_reflections) == order;

    if (s.transverse_dimension == 2 && s.cyclic && order > 1) {
      const CMNumber det = g_.element(generator).holomorphic_matrix().determinant();
      if (det == CMNumber(g_.field(), 1)) s.label = "A" + std::to_string(order - 1);
    }
    return s;
  }

 private:
  bool fixes_directions(std::size_t h, const Mat64& directions) const {
    const Mat64& m = fg_.linear(h);
    const std::size_t n = m.rows;
    for (std::size_t c = 0; c < directions.cols; ++c) {
      for (std::size_t i = 0; i < n; ++i) {
        i128 acc = -static_cast<i128>(directions(i, c));
        for (std::size_t j = 0; j < n; ++j) acc += static_cast<i128>(m(i, j)) * directions(j, c);
        if (acc != 0) return false;
      }
    }
    return true;
  }

  std::size_t generated_subgroup_order(const std::vector<std::size_t>& gens) const {
    std::vector<std::size_t> elements{0};
    std::unordered_set<std::size_t> members{0};
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (std::size_t s : gens) {
        const std::size_t e = fg_.multiply(elements[i], s);
        if (members.insert(e).second) elements.push_back(e);
      }
    }
    return elements.size();
  }

  const FiniteActionGroup& g_;
  const FastGroup& fg_;
  std::vector<Mat64> lattices_;
  std::unordered_map<std::string, int> lattice_ids_;
  std::unordered_map<std::uint64_t, int> image_cache_;
  std::unordered_set<std::string> seen_;
};

std::vector<std::optional<CongruenceSolution>> fixed_point_solutions(const FiniteActionGroup& g) {
  std::vector<std::optional<CongruenceSolution>> out(g.order());
  for (std::size_t i = 1; i < g.order(); ++i) out[i] = fixed_locus(g.element(i)).solution();
  return out;
}

// Calls f(x) with the scaled sample point of every component of the
// solution, in odometer order.
template <typename F>
void for_each_scaled_component(const CongruenceSolution& sol, i64 D, std::size_t n, F&& f) {
  const std::size_t r = sol.rank();
  const IntMatrix& V = sol.V();
  std::vector<i64> x(n, 0);
  std::vector<std::vector<i64>> steps(r, std::vector<i64>(n));
  std::vector<Integer> base(n, 0);
  const Integer bigD = D;
  for (std::size_t j = 0; j < r; ++j) {
    const Integer step = bigD / sol.invariants()[j];
    const Rational shift = sol.shifts()[j] * Rational(step);
    const Integer shift_num = shift.get_num();
    for (std::size_t i = 0; i < n; ++i) {
      base[i] += V(i, j) * shift_num;
      Integer c = V(i, j) * step;
      mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), bigD.get_mpz_t());
      steps[j][i] = to_i64(c);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    mpz_fdiv_r(base[i].get_mpz_t(), base[i].get_mpz_t(), bigD.get_mpz_t());
    x[i] = to_i64(base[i]);
  }
  std::vector<i64> digits(r, 0);
  while (true) {
    f(x);
    std::size_t p = 0;
    for (; p < r; ++p) {
      for (std::size_t i = 0; i < n; ++i) x[i] = mod(x[i] + steps[p][i], D);
      if (++digits[p] < to_i64(sol.invariants()[p])) break;
      digits[p] = 0;
    }
    if (p == r) return;
  }
}

std::string join_words(const FiniteActionGroup& g, const std::vector<std::size_t>& ids) {
  std::string out;
  for (std::size_t i : ids) out += (out.empty() ? "" : ", ") + g.word(i);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

nlohmann::json Stratum::to_json(const FiniteActionGroup& g) const {
  nlohmann::json out;
  out["dimension"] = dimension;
  out["transverse_dimension"] = transverse_dimension;
  nlohmann::json pt = nlohmann::json::array();
  for (const auto& c : sample.coords()) pt.push_back(to_string(c));
  out["sample"] = pt;
  out["directions"] = directions.to_string();
  out["source_element"] = g.word(source_element);
  out["stabilizer_order"] = stabilizer.size();
  nlohmann::json stab = nlohmann::json::array();
  for (std::size_t i : stabilizer) stab.push_back(g.word(i));
  out["stabilizer"] = stab;
  out["cyclic"] = cyclic;
  out["symplectic_reflections"] = symplectic_reflections.size();
  out["generated_by_reflections"] = generated_by_reflections;
  out["transverse_minus_one"] = transverse_minus_one;
  out["label"] = label ? nlohmann::json(*label) : nlohmann::json(nullptr);
  out["orbit_size"] = orbit_size;
  return out;
}

nlohmann::json SingularityInventory::to_json(const FiniteActionGroup& g) const {
  nlohmann::json out;
  out["action"] = g.name();
  out["group_order"] = g.order();
  nlohmann::json points = nlohmann::json::array();
  for (const auto& [order, count] : points_by_stabilizer_order) {
    points.push_back({{"stabilizer_order", order},
                      {"points", count},
                      {"orbits", point_orbits_by_stabilizer_order.at(order)}});
  }
  out["isolated_points"] = points;
  nlohmann::json labels = nlohmann::json::array();
  for (const auto& [label, count] : orbits_by_label) labels.push_back({{"label", label}, {"orbits", count}});
  out["labels"] = labels;
  nlohmann::json strata_json = nlohmann::json::array();
  for (const auto& s : strata) strata_json.push_back(s.to_json(g));
  out["strata"] = strata_json;
  out["notes"] = notes;
  return out;
}

SingularityInventory singularity_inventory(const FiniteActionGroup& g) {
  const auto solutions = fixed_point_solutions(g);
  const FastGroup fg(g, solutions);
  Analyzer analyzer(g, fg);
  const std::size_t n = fg.lattice_dimension();

  SingularityInventory inv;
  for (std::size_t i = 1; i < g.order(); ++i) {
    const auto& sol = *solutions[i];
    if (!sol.solvable()) continue;
    const IntMatrix exact_dirs = sol.directions();
    const Mat64 dirs = to_mat64(exact_dirs);
    const int lattice = dirs.cols == 0 ? -1 : analyzer.intern(hermite(to_mat64(sol.annihilator())));
    for_each_scaled_component(sol, fg.denominator(), n, [&](const std::vector<i64>& x) {
      if (analyzer.seen(analyzer.component_key(lattice, x))) return;
      inv.strata.push_back(analyzer.make_stratum(i, x, lattice, dirs, exact_dirs));
    });
  }

  bool order_three_label = false;
  for (const auto& s : inv.strata) {
    if (s.dimension == 0) {
      inv.points_by_stabilizer_order[s.stabilizer.size()] += s.orbit_size;
      inv.point_orbits_by_stabilizer_order[s.stabilizer.size()] += 1;
    }
    if (s.label) {
      inv.orbits_by_label[*s.label] += 1;
      if (*s.label == "A2") order_three_label = true;
    }
  }
  if (!inv.orbits_by_label.empty()) {
    inv.notes.push_back("labels are A_{j-1} for a cyclic stabilizer of order j acting as diag(a, a^-1)");
  }
  if (order_three_label) {
    inv.notes.push_back("order-3 stabilizers give A2 points (resolved by chains of two curves), not A3");
  }
  return inv;
}

std::vector<std::size_t> generic_stabilizer(const FiniteActionGroup& g, const TorusPoint& p,
                                            const IntMatrix& directions) {
  std::vector<std::size_t> out;
  const IntMatrix id = IntMatrix::identity(2 * g.complex_dimension());
  for (std::size_t h = 0; h < g.order(); ++h) {
    const auto& e = g.element(h);
    if (directions.cols() > 0 && !((e.linear() - id) * directions).is_zero()) continue;
    if (e.apply(p) != p) continue;
    out.push_back(h);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::size_t invariant_form_dimension(const FiniteActionGroup& g, std::size_t p) {
  if (p > g.complex_dimension()) {
    throw std::invalid_argument("form degree " + std::to_string(p) + " exceeds the complex dimension " +
                                std::to_string(g.complex_dimension()));
  }
  CMNumber total(g.field(), 0);
  for (const auto& e : g.elements()) total += e.holomorphic_matrix().exterior_power_trace(p);
  const CMNumber average = total / Rational(static_cast<long>(g.order()));
  if (!average.is_rational() || !is_integral(average.real_part()) || average.real_part() < 0) {
    throw std::logic_error("group average of exterior-power traces is " + average.to_string() +
                           ", not a nonnegative integer");
  }
  return static_cast<std::size_t>(average.real_part().get_num().get_ui());
}

bool is_symplectic(const CMMatrix& a) {
  const std::size_t d = a.size();
  if (d % 2 != 0) throw std::invalid_argument("symplectic check needs an even complex dimension");
  CMMatrix j(a.field(), d);
  for (std::size_t i = 0; i < d; i += 2) {
    j(i, i + 1) = CMNumber(a.field(), 1);
    j(i + 1, i) = CMNumber(a.field(), -1);
  }
  return a.transpose() * j * a == j;
}

bool preserves_symplectic(const FiniteActionGroup& g) {
  if (g.complex_dimension() % 2 != 0) {
    throw std::invalid_argument("symplectic check needs an even complex dimension");
  }
  for (const auto& gen : g.generators()) {
    if (!is_symplectic(gen.map.holomorphic_matrix())) return false;
  }
  return true;
}

std::string verdict_name(DesingularizationVerdict v) {
  switch (v) {
    case DesingularizationVerdict::Obstructed: return "OBSTRUCTED";
    case DesingularizationVerdict::Resolvable: return "RESOLVABLE";
    case DesingularizationVerdict::Undecided: return "UNDECIDED-BY-THIS-TOOL";
  }
  return "?";
}

nlohmann::json ObstructionReport::to_json(const FiniteActionGroup& g) const {
  nlohmann::json out;
  out["action"] = g.name();
  out["verdict"] = verdict_name(verdict);
  out["reason"] = reason;
  out["witness"] = witness ? witness->to_json(g) : nlohmann::json(nullptr);
  return out;
}

namespace {

struct ExactComponent {
  IntMatrix annihilator;
  std::vector<Rational> value;

  friend bool operator<(const ExactComponent& a, const ExactComponent& b) {
    if (a.annihilator != b.annihilator) return a.annihilator < b.annihilator;
    return a.value < b.value;
  }
};

// nullopt when there are too many components to compare pairwise.
std::optional<bool> fixed_components_meet(const FiniteActionGroup& g, std::size_t limit) {
  std::set<ExactComponent> comps;
  for (std::size_t i = 1; i < g.order(); ++i) {
    const CongruenceSolution sol = fixed_locus(g.element(i)).solution();
    if (!sol.solvable()) continue;
    const IntMatrix h = hermite_normal_form(sol.annihilator()).H;
    if (sol.component_count() > Integer(static_cast<unsigned long>(limit))) return std::nullopt;
    bool overflow = false;
    sol.for_each_component([&](const TorusPoint& p) {
      std::vector<Rational> v = h * p.coords();
      for (auto& x : v) x = frac(x);
      comps.insert({h, std::move(v)});
      if (comps.size() > limit) overflow = true;
    });
    if (overflow) return std::nullopt;
  }
  const std::vector<ExactComponent> list(comps.begin(), comps.end());
  for (std::size_t a = 0; a < list.size(); ++a) {
    for (std::size_t b = a + 1; b < list.size(); ++b) {
      const std::size_t ra = list[a].annihilator.rows(), rb = list[b].annihilator.rows();
      IntMatrix stacked(ra + rb, list[a].annihilator.cols());
      std::vector<Rational> rhs;
      for (std::size_t i = 0; i < ra; ++i) {
        for (std::size_t j = 0; j < stacked.cols(); ++j) stacked(i, j) = list[a].annihilator(i, j);
        rhs.push_back(list[a].value[i]);
      }
      for (std::size_t i = 0; i < rb; ++i) {
        for (std::size_t j = 0; j < stacked.cols(); ++j) stacked(ra + i, j) = list[b].annihilator(i, j);
        rhs.push_back(list[b].value[i]);
      }
      if (CongruenceSolution(stacked, rhs).solvable()) return true;
    }
  }
  return false;
}

}  // namespace

ObstructionReport desingularization_obstruction(const FiniteActionGroup& g) {
  if (!preserves_symplectic(g)) {
    throw std::invalid_argument("action '" + g.name() + "' does not preserve the holomorphic symplectic form");
  }
  return desingularization_obstruction(g, singularity_inventory(g));
}

ObstructionReport desingularization_obstruction(const FiniteActionGroup& g, const SingularityInventory& inv) {
  if (!preserves_symplectic(g)) {
    throw std::invalid_argument("action '" + g.name() + "' does not preserve the holomorphic symplectic form");
  }
  ObstructionReport report;
  const Stratum* witness = nullptr;
  for (const auto& s : inv.strata) {
    if (s.generated_by_reflections) continue;
    if (witness == nullptr || s.dimension > witness->dimension) witness = &s;
  }
  if (witness != nullptr) {
    report.verdict = DesingularizationVerdict::Obstructed;
    report.witness = *witness;
    report.reason = "stratum of dimension " + std::to_string(witness->dimension) + " through " +
                    witness->sample.to_string() + " has stabilizer {" + join_words(g, witness->stabilizer) +
                    "} on a " + std::to_string(witness->transverse_dimension) +
                    "-dimensional slice, not generated by symplectic reflections";
    if (witness->transverse_minus_one && witness->stabilizer.size() == 2) {
      report.reason += "; local model (C^" + std::to_string(witness->transverse_dimension) + "/+-1) x C^" +
                       std::to_string(witness->dimension);
    }
    return report;
  }

  const auto not_surface = std::find_if(inv.strata.begin(), inv.strata.end(), [](const Stratum& s) {
    return s.transverse_dimension != 2 || !s.cyclic;
  });
  if (not_surface != inv.strata.end()) {
    report.verdict = DesingularizationVerdict::Undecided;
    report.witness = *not_surface;
    report.reason = "stratum with a " + std::to_string(not_surface->transverse_dimension) +
                    "-dimensional slice and stabilizer of order " + std::to_string(not_surface->stabilizer.size()) +
                    " generated by symplectic reflections";
    return report;
  }
  if (g.complex_dimension() > 2 && !inv.strata.empty()) {
    const auto meet = fixed_components_meet(g, 256);
    if (!meet || *meet) {
      report.verdict = DesingularizationVerdict::Undecided;
      report.reason = meet ? "fixed components of different elements meet"
                           : "too many fixed components to check that they are disjoint";
      return report;
    }
  }
  report.verdict = DesingularizationVerdict::Resolvable;
  report.reason = inv.strata.empty() ? "the action is free"
                                     : "every stratum is a cyclic A_n surface singularity times a smooth factor";
  return report;
}

// ---------------------------------------------------------------------------

FiniteActionGroup base_projection(const FiniteActionGroup& g) {
  const std::size_t d = g.complex_dimension();
  if (d % 2 != 0) throw std::invalid_argument("base projection needs coordinate pairs");
  std::vector<std::size_t> even;
  for (std::size_t i = 1; i < d; i += 2) even.push_back(i);
  std::vector<NamedGenerator> gens;
  for (const auto& gen : g.generators()) {
    const CMMatrix a = gen.map.holomorphic_matrix();
    for (std::size_t i : even) {
      for (std::size_t j = 0; j < d; j += 2) {
        if (!a(i, j).is_zero()) {
          throw std::invalid_argument("generator '" + gen.name + "' mixes odd factors into even ones");
        }
      }
    }
    std::vector<Rational> t;
    for (std::size_t i : even) {
      t.push_back(gen.map.translation()[2 * i]);
      t.push_back(gen.map.translation()[2 * i + 1]);
    }
    gens.push_back({gen.name, TorusAutomorphism::from_holomorphic(a.restrict_to(even), TorusPoint(std::move(t)))});
  }
  return FiniteActionGroup(g.field(), even.size(), std::move(gens), g.name() + " base");
}

}  // namespace isotriv::torus
