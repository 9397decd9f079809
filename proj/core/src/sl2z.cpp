#include "isotriv/sl2z.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

namespace isotriv::sl2z {

// ---------------------------------------------------------------------------
// UnimodularMatrix

UnimodularMatrix::UnimodularMatrix() : a_(1), b_(0), c_(0), d_(1) {}

UnimodularMatrix::UnimodularMatrix(Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (a_ * d_ - b_ * c_ != 1) {
    throw std::invalid_argument("matrix " + to_string() + " does not have determinant 1");
  }
}

UnimodularMatrix::UnimodularMatrix(Unchecked, Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

UnimodularMatrix UnimodularMatrix::minus_identity() { return {Unchecked{}, -1, 0, 0, -1}; }

bool UnimodularMatrix::is_identity() const { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1; }

bool UnimodularMatrix::is_minus_identity() const {
  return a_ == -1 && b_ == 0 && c_ == 0 && d_ == -1;
}

UnimodularMatrix UnimodularMatrix::inverse() const { return {Unchecked{}, d_, -b_, -c_, a_}; }

UnimodularMatrix UnimodularMatrix::operator-() const { return {Unchecked{}, -a_, -b_, -c_, -d_}; }

UnimodularMatrix UnimodularMatrix::operator*(const UnimodularMatrix& rhs) const {
  return {Unchecked{}, a_ * rhs.a_ + b_ * rhs.c_, a_ * rhs.b_ + b_ * rhs.d_,
          c_ * rhs.a_ + d_ * rhs.c_, c_ * rhs.b_ + d_ * rhs.d_};
}

UnimodularMatrix& UnimodularMatrix::operator*=(const UnimodularMatrix& rhs) {
  *this = *this * rhs;
  return *this;
}

UnimodularMatrix UnimodularMatrix::pow(long exponent) const {
  UnimodularMatrix base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? 0UL - static_cast<unsigned long>(exponent)
                                 : static_cast<unsigned long>(exponent);
  UnimodularMatrix result;
  while (e != 0) {
    if (e & 1UL) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool operator==(const UnimodularMatrix& lhs, const UnimodularMatrix& rhs) {
  return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_ && lhs.c_ == rhs.c_ && lhs.d_ == rhs.d_;
}

std::strong_ordering operator<=>(const UnimodularMatrix& lhs, const UnimodularMatrix& rhs) {
  for (auto [x, y] : {std::pair{&lhs.a_, &rhs.a_}, std::pair{&lhs.b_, &rhs.b_},
                      std::pair{&lhs.c_, &rhs.c_}, std::pair{&lhs.d_, &rhs.d_}}) {
    int c = cmp(*x, *y);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string UnimodularMatrix::to_string() const {
  return "[[" + a_.get_str() + "," + b_.get_str() + "],[" + c_.get_str() + "," + d_.get_str() +
         "]]";
}

UnimodularMatrix UnimodularMatrix::parse(std::string_view text) {
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
  }
  // Expect [[a,b],[c,d]].
  std::vector<std::string> fields;
  std::string current;
  int depth = 0;
  bool shape_ok = true;
  for (char ch : compact) {
    if (ch == '[') {
      ++depth;
      if (depth > 2) shape_ok = false;
    } else if (ch == ']') {
      if (depth == 2) {
        fields.push_back(current);
        current.clear();
      }
      --depth;
      if (depth < 0) shape_ok = false;
    } else if (ch == ',') {
      if (depth == 2) {
        fields.push_back(current);
        current.clear();
      } else if (depth != 1) {
        shape_ok = false;
      }
    } else {
      if (depth != 2) shape_ok = false;
      current.push_back(ch);
    }
  }
  if (!shape_ok || depth != 0 || fields.size() != 4 || compact.size() < 2 ||
      compact.substr(0, 2) != "[[") {
    throw std::invalid_argument("expected a matrix of the form [[a,b],[c,d]], got '" +
                                std::string(text) + "'");
  }
  return {parse_integer(fields[0]), parse_integer(fields[1]), parse_integer(fields[2]),
          parse_integer(fields[3])};
}

const UnimodularMatrix& alpha() {
  static const UnimodularMatrix m(1, 1, -1, 0);
  return m;
}

const UnimodularMatrix& beta() {
  static const UnimodularMatrix m(0, 1, -1, 0);
  return m;
}

Order order(const UnimodularMatrix& m) {
  if (m.is_identity()) return 1U;
  if (m.is_minus_identity()) return 2U;
  const Integer t = m.trace();
  if (t == 0) return 4U;
  if (t == 1) return 6U;
  if (t == -1) return 3U;
  return std::nullopt;
}

std::string order_to_string(const Order& order) {
  return order ? std::to_string(*order) : std::string("infinite");
}

// ---------------------------------------------------------------------------
// ModularWord

namespace {

bool is_a_power(Letter l) { return l != Letter::B; }
int a_exponent(Letter l) { return l == Letter::A ? 1 : 2; }

Letter psl_inverse(Letter l) {
  switch (l) {
    case Letter::A: return Letter::A2;
    case Letter::A2: return Letter::A;
    case Letter::B: return Letter::B;
  }
  return l;
}

const UnimodularMatrix& letter_matrix(Letter l) {
  static const UnimodularMatrix alpha_sq = alpha() * alpha();
  switch (l) {
    case Letter::A: return alpha();
    case Letter::A2: return alpha_sq;
    case Letter::B: return beta();
  }
  return alpha();
}

int letter_rank(Letter l) { return static_cast<int>(l); }

}  // namespace

ModularWord::ModularWord(int sign, std::vector<Letter> letters)
    : sign_(sign), letters_(std::move(letters)) {
  if (sign_ != 1 && sign_ != -1) throw std::invalid_argument("word sign must be +1 or -1");
  for (std::size_t i = 1; i < letters_.size(); ++i) {
    if (is_a_power(letters_[i]) == is_a_power(letters_[i - 1])) {
      throw std::invalid_argument("word is not reduced: " + to_string());
    }
  }
}

ModularWord ModularWord::reduce(int sign, const std::vector<Letter>& letters) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("word sign must be +1 or -1");
  std::vector<Letter> stack;
  for (Letter x : letters) {
    if (stack.empty() || is_a_power(stack.back()) != is_a_power(x)) {
      stack.push_back(x);
      continue;
    }
    if (x == Letter::B) {  // beta^2 = -I
      stack.pop_back();
      sign = -sign;
      continue;
    }
    switch (a_exponent(stack.back()) + a_exponent(x)) {
      case 2: stack.back() = Letter::A2; break;
      case 3: stack.pop_back(); sign = -sign; break;               // alpha^3 = -I
      case 4: stack.back() = Letter::A; sign = -sign; break;       // alpha^4 = -alpha
    }
  }
  return ModularWord(sign, std::move(stack));
}

UnimodularMatrix ModularWord::evaluate() const {
  UnimodularMatrix result;
  for (Letter l : letters_) result *= letter_matrix(l);
  return sign_ == 1 ? result : -result;
}

ModularWord ModularWord::inverse() const {
  // alpha^-1 = -alpha^2, alpha^-2 = -alpha, beta^-1 = -beta.
  std::vector<Letter> inv(letters_.rbegin(), letters_.rend());
  for (auto& l : inv) l = psl_inverse(l);
  int s = (letters_.size() % 2 == 0) ? sign_ : -sign_;
  return ModularWord(s, std::move(inv));
}

ModularWord ModularWord::operator*(const ModularWord& rhs) const {
  std::vector<Letter> all = letters_;
  all.insert(all.end(), rhs.letters_.begin(), rhs.letters_.end());
  return reduce(sign_ * rhs.sign_, all);
}

std::strong_ordering operator<=>(const ModularWord& lhs, const ModularWord& rhs) {
  if (lhs.letters_.size() != rhs.letters_.size()) {
    return lhs.letters_.size() <=> rhs.letters_.size();
  }
  for (std::size_t i = 0; i < lhs.letters_.size(); ++i) {
    auto c = letter_rank(lhs.letters_[i]) <=> letter_rank(rhs.letters_[i]);
    if (c != 0) return c;
  }
  return rhs.sign_ <=> lhs.sign_;  // + before -
}

std::string ModularWord::to_string() const {
  std::string out = sign_ < 0 ? "-" : "";
  for (Letter l : letters_) {
    switch (l) {
      case Letter::A: out += "a"; break;
      case Letter::A2: out += "a2"; break;
      case Letter::B: out += "b"; break;
    }
  }
  return out;
}

std::string ModularWord::display() const {
  std::string body = to_string();
  if (sign_ < 0) body.erase(0, 1);
  return (sign_ < 0 ? "-" : "+") + (body.empty() ? std::string("(empty)") : body);
}

ModularWord ModularWord::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '.') s.push_back(ch);
  }
  int sign = 1;
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    sign = s[i] == '-' ? -1 : 1;
    ++i;
  }
  std::vector<Letter> letters;
  if (s.substr(i) == "(empty)") return ModularWord(sign, {});
  while (i < s.size()) {
    char ch = static_cast<char>(std::tolower(static_cast<unsigned char>(s[i])));
    if (ch == 'a') {
      if (i + 1 < s.size() && s[i + 1] == '2') {
        letters.push_back(Letter::A2);
        i += 2;
      } else {
        letters.push_back(Letter::A);
        ++i;
      }
    } else if (ch == 'b') {
      letters.push_back(Letter::B);
      ++i;
    } else {
      throw std::invalid_argument("unexpected character '" + std::string(1, s[i]) +
                                  "' in word '" + std::string(text) + "'");
    }
  }
  return reduce(sign, letters);
}

// ---------------------------------------------------------------------------
// Normal form

ModularWord normal_form(const UnimodularMatrix& m) {
  // Euclid on the first column with T = [[1,1],[0,1]] and S = [[0,-1],[1,0]].
  // In PSL(2,Z), T = B A^2 and S = B, so the recorded factorization becomes a
  // word that reduce() normalizes; the sign is fixed at the end.
  std::vector<Letter> letters;
  auto push_t_power = [&letters](const Integer& q) {
    Integer n = abs(q);
    for (Integer k = 0; k < n; ++k) {
      if (q > 0) {
        letters.push_back(Letter::B);
        letters.push_back(Letter::A2);
      } else {
        letters.push_back(Letter::A);
        letters.push_back(Letter::B);
      }
    }
  };

  Integer a = m.a(), b = m.b(), c = m.c(), d = m.d();
  while (c != 0) {
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
    a -= q * c;
    b -= q * d;
    push_t_power(q);
    // Multiply by S^-1 on the left: [[a,b],[c,d]] -> [[c,d],[-a,-b]].
    Integer na = c, nb = d;
    c = -a;
    d = -b;
    a = na;
    b = nb;
    letters.push_back(Letter::B);
  }
  // Now [[a,b],[0,a]] with a = +-1, i.e. +-T^(a*b).
  push_t_power(a * b);

  ModularWord w = ModularWord::reduce(1, letters);
  if (w.evaluate() == m) return w;
  ModularWord neg = w.negated();
  if (neg.evaluate() != m) throw std::logic_error("normal_form failed to reproduce " + m.to_string());
  return neg;
}

std::vector<ModularWord> enumerate_reduced_words(std::size_t max_length) {
  std::vector<ModularWord> out;
  out.emplace_back();
  std::vector<std::vector<Letter>> layer{{}};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<std::vector<Letter>> next;
    for (const auto& w : layer) {
      auto extend = [&](Letter l) {
        auto copy = w;
        copy.push_back(l);
        next.push_back(std::move(copy));
      };
      if (w.empty()) {
        extend(Letter::A);
        extend(Letter::A2);
        extend(Letter::B);
      } else if (w.back() == Letter::B) {
        extend(Letter::A);
        extend(Letter::A2);
      } else {
        extend(Letter::B);
      }
    }
    for (const auto& w : next) out.emplace_back(1, w);
    layer = std::move(next);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Conjugacy of elliptic elements

EllipticDecomposition elliptic_decomposition(const UnimodularMatrix& m) {
  if (!order(m)) {
    throw std::invalid_argument("conjugacy is only decided for finite-order elements; " +
                                m.to_string() + " has infinite order");
  }
  if (m.is_central()) return {m, ModularWord()};

  // A non-central elliptic element is p x p^-1 in PSL(2,Z) for a single
  // letter x; peel matching outer letters of the normal form.
  const auto nf = normal_form(m);
  const auto& letters = nf.letters();
  std::size_t i = 0, j = letters.size() - 1;
  while (j >= i + 2 && letters[j] == psl_inverse(letters[i])) {
    ++i;
    --j;
  }
  if (i != j) throw std::logic_error("normal form of elliptic element is not a conjugate of a letter");

  ModularWord p(1, std::vector<Letter>(letters.begin(), letters.begin() + static_cast<long>(i)));
  UnimodularMatrix pm = p.evaluate();
  UnimodularMatrix rep = pm.inverse() * m * pm;
  return {rep, p};
}

ConjugacyResult is_conjugate(const UnimodularMatrix& first, const UnimodularMatrix& second,
                             std::size_t search_bound) {
  auto d1 = elliptic_decomposition(first);
  auto d2 = elliptic_decomposition(second);
  ConjugacyResult result;
  if (d1.representative != d2.representative) return result;

  // All witnesses are p2 * z * p1^-1 with z in the centralizer of the
  // representative: <A> for alpha-powers, <B> for beta-powers, everything
  // for central elements (where p1 = p2 = 1 and z = 1 is shortest).
  std::vector<ModularWord> centralizer{ModularWord()};
  if (!d1.representative.is_central()) {
    const auto& rep = d1.representative;
    if (rep.trace() == 0) {
      centralizer.push_back(ModularWord::letter(Letter::B));
    } else {
      centralizer.push_back(ModularWord::letter(Letter::A));
      centralizer.push_back(ModularWord::letter(Letter::A2));
    }
  }
  std::optional<ModularWord> best;
  for (const auto& z : centralizer) {
    ModularWord u = d2.conjugator * z * d1.conjugator.inverse();
    if (u.sign() < 0) u = u.negated();
    if (!best || u < *best) best = u;
  }
  UnimodularMatrix um = best->evaluate();
  if (um * first * um.inverse() != second) throw std::logic_error("conjugacy witness check failed");

  result.minimal_witness_length = best->length();
  if (best->length() <= search_bound) {
    result.conjugate = true;
    result.witness = best;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Rigidity search

namespace {

struct ConjugateEntry {
  ModularWord minimal;
  Integer count;
};

using ConjugateSet = std::map<UnimodularMatrix, ConjugateEntry>;

ConjugateSet conjugates_of(const UnimodularMatrix& m, const std::vector<ModularWord>& words) {
  ConjugateSet out;
  for (const auto& w : words) {
    UnimodularMatrix u = w.evaluate();
    UnimodularMatrix conj = u * m * u.inverse();
    auto [it, inserted] = out.try_emplace(conj, ConjugateEntry{w, 1});
    if (!inserted) it->second.count += 1;
  }
  return out;
}

}  // namespace

std::vector<RigiditySolution> rigidity_search(const std::vector<UnimodularMatrix>& classes,
                                              std::size_t max_word_length) {
  if (classes.empty()) throw std::invalid_argument("rigidity_search needs at least one class");
  for (const auto& c : classes) {
    if (!order(c)) throw std::invalid_argument("class " + c.to_string() + " has infinite order");
  }
  const std::size_t k = classes.size();
  std::vector<RigiditySolution> solutions;

  if (k == 1) {
    if (classes[0].is_identity()) {
      solutions.push_back({{ModularWord()}, {classes[0]}, Integer(1)});
    }
    return solutions;
  }

  const auto words = enumerate_reduced_words(max_word_length);
  std::vector<ConjugateSet> sets(k);
  for (std::size_t i = 1; i < k; ++i) sets[i] = conjugates_of(classes[i], words);

  // Positions 1..k-2 range over their conjugate sets; the last conjugate is
  // then forced and only needs a membership test.
  std::vector<ConjugateSet::const_iterator> chosen(k);
  auto record = [&](const UnimodularMatrix& last_needed) {
    auto hit = sets[k - 1].find(last_needed);
    if (hit == sets[k - 1].end()) return;
    RigiditySolution s;
    s.conjugators.emplace_back();
    s.conjugates.push_back(classes[0]);
    s.raw_tuple_count = 1;
    for (std::size_t i = 1; i + 1 < k; ++i) {
      s.conjugators.push_back(chosen[i]->second.minimal);
      s.conjugates.push_back(chosen[i]->first);
      s.raw_tuple_count *= chosen[i]->second.count;
    }
    s.conjugators.push_back(hit->second.minimal);
    s.conjugates.push_back(hit->first);
    s.raw_tuple_count *= hit->second.count;
    solutions.push_back(std::move(s));
  };

  auto recurse = [&](auto&& self, std::size_t pos, const UnimodularMatrix& prefix) -> void {
    if (pos == k - 1) {
      record(prefix.inverse());
      return;
    }
    for (auto it = sets[pos].cbegin(); it != sets[pos].cend(); ++it) {
      chosen[pos] = it;
      self(self, pos + 1, prefix * it->first);
    }
  };
  recurse(recurse, 1, classes[0]);
  return solutions;
}

std::size_t generated_group_order(const std::vector<UnimodularMatrix>& generators, std::size_t cap) {
  std::set<UnimodularMatrix> seen{UnimodularMatrix()};
  std::vector<UnimodularMatrix> frontier{UnimodularMatrix()};
  while (!frontier.empty()) {
    std::vector<UnimodularMatrix> next;
    for (const auto& e : frontier) {
      for (const auto& g : generators) {
        auto p = e * g;
        if (seen.insert(p).second) {
          if (seen.size() > cap) throw std::length_error("generated subgroup exceeds the order cap");
          next.push_back(std::move(p));
        }
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace isotriv::sl2z
