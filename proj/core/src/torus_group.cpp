#include "isotriv/torus_group.hpp"

#include <algorithm>
#include <sstream>

namespace isotriv::torus {

FiniteActionGroup::FiniteActionGroup(CMField field, std::size_t complex_dimension,
                                     std::vector<NamedGenerator> generators, std::string name,
                                     std::size_t order_cap)
    : field_(field), dimension_(complex_dimension), name_(std::move(name)), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.map.field() != field_ || g.map.complex_dimension() != dimension_) {
      throw std::invalid_argument("generator '" + g.name + "' acts on a different torus");
    }
  }
  auto add = [&](TorusAutomorphism e, std::string w) {
    if (index_.count(e)) return;
    if (elements_.size() >= order_cap) {
      throw OrderCapExceeded("group closure exceeds the order cap of " + std::to_string(order_cap));
    }
    index_.emplace(e, elements_.size());
    elements_.push_back(std::move(e));
    words_.push_back(std::move(w));
  };
  add(TorusAutomorphism::identity(field_, dimension_), "id");
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    for (const auto& g : generators_) {
      std::string w = words_[i] == "id" ? g.name : words_[i] + "*" + g.name;
      add(elements_[i].compose(g.map), std::move(w));
    }
  }
}

std::optional<std::size_t> FiniteActionGroup::index_of(const TorusAutomorphism& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteActionGroup::multiply(std::size_t i, std::size_t j) const {
  auto k = index_of(elements_.at(i).compose(elements_.at(j)));
  if (!k) throw std::logic_error("group is not closed under composition");
  return *k;
}

std::size_t FiniteActionGroup::inverse_index(std::size_t i) const {
  auto k = index_of(elements_.at(i).inverse());
  if (!k) throw std::logic_error("group is not closed under inverses");
  return *k;
}

unsigned FiniteActionGroup::element_order(std::size_t i) const {
  unsigned order = 1;
  for (std::size_t x = i; x != 0; x = multiply(x, i)) ++order;
  return order;
}

TorusAutomorphism FiniteActionGroup::evaluate_word(std::string_view word) const {
  TorusAutomorphism result = TorusAutomorphism::identity(field_, dimension_);
  std::string text(word);
  std::stringstream ss(text);
  std::string letter;
  while (std::getline(ss, letter, '*')) {
    while (!letter.empty() && letter.front() == ' ') letter.erase(letter.begin());
    while (!letter.empty() && letter.back() == ' ') letter.pop_back();
    if (letter == "id") continue;
    auto it = std::find_if(generators_.begin(), generators_.end(),
                           [&](const NamedGenerator& g) { return g.name == letter; });
    if (it == generators_.end()) {
      throw std::invalid_argument("unknown generator '" + letter + "' in word '" + text + "'");
    }
    result = result.compose(it->map);
  }
  return result;
}

nlohmann::json FiniteActionGroup::to_json() const {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : generators_) {
    nlohmann::json rows = nlohmann::json::array();
    const IntMatrix& m = g.map.linear();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_long(m(i, j)));
      rows.push_back(row);
    }
    nlohmann::json t = nlohmann::json::array();
    for (const auto& x : g.map.translation().coords()) t.push_back(to_string(x));
    gens.push_back({{"name", g.name}, {"linear", rows}, {"translation", t}});
  }
  nlohmann::json out;
  out["name"] = name_;
  out["field"] = field_name(field_);
  out["complex_dimension"] = dimension_;
  out["generators"] = gens;
  return out;
}

FiniteActionGroup FiniteActionGroup::from_json(const nlohmann::json& j, std::size_t order_cap) {
  const CMField field = parse_field(j.at("field").get<std::string>());
  const std::size_t d = j.at("complex_dimension").get<std::size_t>();
  std::vector<NamedGenerator> gens;
  for (const auto& g : j.at("generators")) {
    std::vector<std::vector<long>> rows;
    for (const auto& row : g.at("linear")) rows.push_back(row.get<std::vector<long>>());
    std::vector<Rational> t;
    for (const auto& x : g.at("translation")) t.push_back(parse_rational(x.get<std::string>()));
    gens.push_back({g.at("name").get<std::string>(),
                    TorusAutomorphism(field, IntMatrix::from_rows(rows), TorusPoint(std::move(t)))});
  }
  return FiniteActionGroup(field, d, std::move(gens), j.value("name", std::string()), order_cap);
}

// ---------------------------------------------------------------------------

namespace {

CMField field_for_order(unsigned k, std::optional<CMField> requested) {
  CMField forced;
  switch (k) {
    case 2: return requested.value_or(CMField::Gauss);
    case 3:
    case 6: forced = CMField::Eisenstein; break;
    case 4: forced = CMField::Gauss; break;
    default: throw std::invalid_argument("cyclic order must be 2, 3, 4 or 6, not " + std::to_string(k));
  }
  if (requested && *requested != forced) {
    throw std::invalid_argument("order " + std::to_string(k) + " requires the " + field_name(forced) +
                                " field, not " + field_name(*requested));
  }
  return forced;
}

// Generator of the cyclic group: -1, zeta^2, i, zeta.
CMNumber cyclic_generator(CMField field, unsigned k) {
  if (k == 3) return root_of_unity(field, 6).pow(2);
  return root_of_unity(field, k);
}

// diag(..., a, a^-1, ...) on the complex pair `pair`, identity elsewhere.
CMMatrix pair_diagonal(CMField field, std::size_t d, std::size_t pair, const CMNumber& a) {
  CMMatrix m = CMMatrix::identity(field, d);
  m(2 * pair, 2 * pair) = a;
  m(2 * pair + 1, 2 * pair + 1) = a.inverse();
  return m;
}

// Moves pair j to pair perm[j].
CMMatrix pair_permutation(CMField field, const std::vector<std::size_t>& perm) {
  CMMatrix m(field, 2 * perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) {
    for (std::size_t c = 0; c < 2; ++c) m(2 * perm[j] + c, 2 * j + c) = CMNumber(field, 1);
  }
  return m;
}

std::vector<NamedGenerator> adjacent_transpositions(CMField field, unsigned n) {
  std::vector<NamedGenerator> out;
  for (unsigned i = 0; i + 1 < n; ++i) {
    std::vector<std::size_t> perm(n);
    for (unsigned j = 0; j < n; ++j) perm[j] = j;
    std::swap(perm[i], perm[i + 1]);
    out.push_back({"s" + std::to_string(i + 1),
                   TorusAutomorphism::from_holomorphic(pair_permutation(field, perm),
                                                       TorusPoint::zero(4 * n))});
  }
  return out;
}

void require_pairs(unsigned n, unsigned minimum) {
  if (n < minimum) {
    throw std::invalid_argument("need at least " + std::to_string(minimum) + " coordinate pairs, got " +
                                std::to_string(n));
  }
}

std::string parameters(std::initializer_list<unsigned> values) {
  std::string out;
  for (unsigned v : values) out += (out.empty() ? "" : ",") + std::to_string(v);
  return out;
}

}  // namespace

FiniteActionGroup cyclic_surface(unsigned k, std::optional<CMField> field, std::size_t order_cap) {
  const CMField f = field_for_order(k, field);
  const CMNumber a = cyclic_generator(f, k);
  std::vector<NamedGenerator> gens{
      {"g", TorusAutomorphism::from_holomorphic(pair_diagonal(f, 2, 0, a), TorusPoint::zero(4))}};
  return FiniteActionGroup(f, 2, std::move(gens), "cyclic-surface:" + parameters({k}), order_cap);
}

FiniteActionGroup hilbert_action(unsigned k, unsigned n, std::optional<CMField> field, std::size_t order_cap) {
  require_pairs(n, 1);
  const CMField f = field_for_order(k, field);
  const CMNumber a = cyclic_generator(f, k);
  std::vector<NamedGenerator> gens;
  for (unsigned i = 0; i < n; ++i) {
    gens.push_back({"a" + std::to_string(i + 1),
                    TorusAutomorphism::from_holomorphic(pair_diagonal(f, 2 * n, i, a), TorusPoint::zero(4 * n))});
  }
  for (auto& s : adjacent_transpositions(f, n)) gens.push_back(std::move(s));
  return FiniteActionGroup(f, 2 * n, std::move(gens), "hilbert:" + parameters({k, n}), order_cap);
}

FiniteActionGroup translated_action(unsigned n, const std::vector<Rational>& torsion,
                                    std::optional<CMField> field, std::size_t order_cap) {
  require_pairs(n, 1);
  if (torsion.size() != 2) throw std::invalid_argument("torsion point needs two lattice coordinates");
  const bool two_torsion = is_integral(torsion[0] * 2) && is_integral(torsion[1] * 2);
  if (!two_torsion || (is_integral(torsion[0]) && is_integral(torsion[1]))) {
    throw std::invalid_argument("torsion must be a nonzero 2-torsion point, got (" + to_string(torsion[0]) +
                                ", " + to_string(torsion[1]) + ")");
  }
  const CMField f = field.value_or(CMField::Gauss);
  std::vector<NamedGenerator> gens;
  for (unsigned i = 0; i < n; ++i) {
    std::vector<Rational> t(4 * n);
    for (unsigned j = 0; j < n; ++j) {
      if (j == i) continue;
      t[4 * j] = torsion[0];
      t[4 * j + 1] = torsion[1];
    }
    gens.push_back({"gamma" + std::to_string(i + 1),
                    TorusAutomorphism::from_holomorphic(pair_diagonal(f, 2 * n, i, CMNumber(f, -1)),
                                                        TorusPoint(std::move(t)))});
  }
  for (auto& s : adjacent_transpositions(f, n)) gens.push_back(std::move(s));
  std::string name = "translated:" + parameters({n});
  if (torsion != std::vector<Rational>{Rational(1, 2), 0}) {
    name += " torsion=" + to_string(torsion[0]) + "," + to_string(torsion[1]);
  }
  return FiniteActionGroup(f, 2 * n, std::move(gens), std::move(name), order_cap);
}

FiniteActionGroup matsushita_action(unsigned k, unsigned n, std::optional<CMField> field, std::size_t order_cap) {
  require_pairs(n, 2);
  const CMField f = field_for_order(k, field);
  const CMNumber a = cyclic_generator(f, k);
  std::vector<NamedGenerator> gens;
  for (unsigned i = 0; i + 1 < n; ++i) {
    CMMatrix m = pair_diagonal(f, 2 * n, i, a) * pair_diagonal(f, 2 * n, i + 1, a.inverse());
    gens.push_back({"b" + std::to_string(i + 1), TorusAutomorphism::from_holomorphic(m, TorusPoint::zero(4 * n))});
  }
  for (unsigned i = 2; i < n; ++i) {
    std::vector<std::size_t> perm(n);
    for (unsigned j = 0; j < n; ++j) perm[j] = j;
    perm[0] = 1;
    perm[1] = i;
    perm[i] = 0;
    gens.push_back({"c" + std::to_string(i + 1),
                    TorusAutomorphism::from_holomorphic(pair_permutation(f, perm), TorusPoint::zero(4 * n))});
  }
  return FiniteActionGroup(f, 2 * n, std::move(gens), "matsushita:" + parameters({k, n}), order_cap);
}

std::vector<std::string> builtin_action_families() {
  return {"cyclic-surface:K", "hilbert:K,N", "translated:N", "matsushita:K,N"};
}

FiniteActionGroup builtin_action(std::string_view spec, const BuiltinOptions& options) {
  const auto colon = spec.find(':');
  const std::string family(spec.substr(0, colon));
  std::vector<unsigned> args;
  if (colon != std::string_view::npos) {
    std::stringstream ss{std::string(spec.substr(colon + 1))};
    std::string field;
    while (std::getline(ss, field, ',')) {
      const Integer v = parse_integer(field);
      if (v <= 0 || v > 64) throw std::invalid_argument("action parameter out of range: " + field);
      args.push_back(static_cast<unsigned>(v.get_ui()));
    }
  }
  auto expect = [&](std::size_t count, const char* usage) {
    if (args.size() != count) throw std::invalid_argument("expected " + std::string(usage));
  };
  if (family == "cyclic-surface") {
    expect(1, "cyclic-surface:K");
    return cyclic_surface(args[0], options.field, options.order_cap);
  }
  if (family == "hilbert") {
    expect(2, "hilbert:K,N");
    return hilbert_action(args[0], args[1], options.field, options.order_cap);
  }
  if (family == "translated") {
    expect(1, "translated:N");
    return translated_action(args[0], options.torsion, options.field, options.order_cap);
  }
  if (family == "matsushita") {
    expect(2, "matsushita:K,N");
    return matsushita_action(args[0], args[1], options.field, options.order_cap);
  }
  throw std::invalid_argument("unknown action '" + std::string(spec) + "'");
}

}  // namespace isotriv::torus
