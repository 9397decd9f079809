#pragma once

// Exact arithmetic in SL(2,Z) and its quotient PSL(2,Z) = Z/3 * Z/2.
//
// Elements are 2x2 integer matrices of determinant one.  The generators
//
//   alpha = [[1,1],[-1,0]]  (order 6)      beta = [[0,1],[-1,0]]  (order 4)
//
// satisfy alpha^3 = beta^2 = -I, so every element is +-1 times a unique
// reduced word alternating between a power of A (the image of alpha) and B
// (the image of beta).

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isotriv/numeric.hpp"

namespace isotriv::sl2z {

class UnimodularMatrix {
 public:
  /// The identity.
  UnimodularMatrix();

  /// Throws std::invalid_argument unless a*d - b*c == 1.
  UnimodularMatrix(Integer a, Integer b, Integer c, Integer d);

  static UnimodularMatrix identity() { return {}; }
  static UnimodularMatrix minus_identity();

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  const Integer& d() const { return d_; }

  Integer trace() const { return a_ + d_; }
  bool is_identity() const;
  bool is_minus_identity() const;
  bool is_central() const { return is_identity() || is_minus_identity(); }

  UnimodularMatrix inverse() const;
  UnimodularMatrix operator-() const;
  UnimodularMatrix operator*(const UnimodularMatrix& rhs) const;
  UnimodularMatrix& operator*=(const UnimodularMatrix& rhs);

  /// Integer power; negative exponents use the inverse.
  UnimodularMatrix pow(long exponent) const;

  friend bool operator==(const UnimodularMatrix& lhs, const UnimodularMatrix& rhs);
  /// Lexicographic on (a, b, c, d); used for ordered containers.
  friend std::strong_ordering operator<=>(const UnimodularMatrix& lhs, const UnimodularMatrix& rhs);

  /// "[[a,b],[c,d]]".
  std::string to_string() const;
  /// Inverse of to_string; whitespace is ignored.
  static UnimodularMatrix parse(std::string_view text);

 private:
  struct Unchecked {};
  UnimodularMatrix(Unchecked, Integer a, Integer b, Integer c, Integer d);

  Integer a_, b_, c_, d_;
};

const UnimodularMatrix& alpha();
const UnimodularMatrix& beta();

/// std::nullopt stands for infinite order.
using Order = std::optional<unsigned>;

/// Least k >= 1 with m^k = I.  Finite orders lie in {1, 2, 3, 4, 6};
/// |trace| > 2, or |trace| = 2 with m != +-I, gives infinite order.
Order order(const UnimodularMatrix& m);

std::string order_to_string(const Order& order);

enum class Letter : std::uint8_t { A, A2, B };

/// Sign times a reduced word in A, A^2, B.  Reducedness (no two adjacent
/// A-powers, no two adjacent Bs) is checked on construction.
class ModularWord {
 public:
  ModularWord() = default;
  ModularWord(int sign, std::vector<Letter> letters);

  /// Reduces an arbitrary letter sequence using A^3 = B^2 = -I, keeping the
  /// exact sign in SL(2,Z).
  static ModularWord reduce(int sign, const std::vector<Letter>& letters);
  static ModularWord letter(Letter l) { return ModularWord(1, {l}); }

  int sign() const { return sign_; }
  const std::vector<Letter>& letters() const { return letters_; }
  /// Token count; A^2 counts once.
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  UnimodularMatrix evaluate() const;
  ModularWord inverse() const;
  ModularWord operator*(const ModularWord& rhs) const;
  /// Same letters with the opposite sign.
  ModularWord negated() const { return ModularWord(-sign_, letters_); }

  friend bool operator==(const ModularWord&, const ModularWord&) = default;
  /// Shortlex on letters (A < A2 < B), then sign.
  friend std::strong_ordering operator<=>(const ModularWord& lhs, const ModularWord& rhs);

  /// Serialized form: optional leading "-", then tokens "a", "a2", "b".
  /// The identity is "" and -I is "-".
  std::string to_string() const;
  /// Always carries the sign; the empty word prints as "+(empty)".
  std::string display() const;
  /// Accepts an optional sign, tokens a, a2, b (whitespace and '.' ignored),
  /// or "(empty)".  The result is reduced.
  static ModularWord parse(std::string_view text);

 private:
  int sign_ = 1;
  std::vector<Letter> letters_;
};

/// Unique signed reduced word evaluating to m.
ModularWord normal_form(const UnimodularMatrix& m);

/// Every positive-sign reduced word of length <= max_length, in shortlex order.
std::vector<ModularWord> enumerate_reduced_words(std::size_t max_length);

/// A finite-order element written as conj * representative * conj^-1 with a
/// canonical representative drawn from {I, -I, alpha, alpha^2, alpha^4,
/// alpha^5, beta, beta^3}.
struct EllipticDecomposition {
  UnimodularMatrix representative;
  ModularWord conjugator;
};

/// Throws std::invalid_argument for infinite-order input.
EllipticDecomposition elliptic_decomposition(const UnimodularMatrix& m);

struct ConjugacyResult {
  bool conjugate = false;
  /// u with u * first * u^-1 == second, of minimal length, when conjugate.
  std::optional<ModularWord> witness;
  /// Shortest witness length over all of SL(2,Z), even when it exceeds the
  /// search bound; empty when the elements are not conjugate at all.
  std::optional<std::size_t> minimal_witness_length;
};

/// Decides whether some reduced word u of length <= search_bound satisfies
/// u * first * u^-1 == second.  Exact for finite-order inputs: the answer
/// agrees with exhaustive search up to the bound.  Throws
/// std::invalid_argument for infinite-order inputs.
ConjugacyResult is_conjugate(const UnimodularMatrix& first, const UnimodularMatrix& second,
                             std::size_t search_bound);

struct RigiditySolution {
  /// conjugators[0] is always the empty word (choice of basis).
  std::vector<ModularWord> conjugators;
  /// conjugates[i] = conjugators[i] * classes[i] * conjugators[i]^-1.
  std::vector<UnimodularMatrix> conjugates;
  /// Number of raw conjugator tuples (positive sign, length bounded) that
  /// produce exactly these conjugates.
  Integer raw_tuple_count;
};

/// Finds all tuples of conjugates of the given classes, conjugators of
/// length <= max_word_length, whose ordered product is the identity.  The
/// first class is taken literally (its conjugator is fixed to the identity).
/// Solutions are grouped by their conjugate tuple, each reported with the
/// shortlex-minimal conjugators; output is sorted by conjugate tuple.
/// This is bounded evidence only: longer conjugators are not searched.
/// Throws std::invalid_argument for empty input or infinite-order classes.
std::vector<RigiditySolution> rigidity_search(const std::vector<UnimodularMatrix>& classes,
                                              std::size_t max_word_length);

/// Order of the subgroup generated by finitely many finite-order elements;
/// throws std::length_error if the closure exceeds `cap`.
std::size_t generated_group_order(const std::vector<UnimodularMatrix>& generators,
                                  std::size_t cap = 1000);

}  // namespace isotriv::sl2z
