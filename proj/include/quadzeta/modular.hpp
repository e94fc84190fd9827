#pragma once

// Orders of lattices Z + Z*alpha, their totally positive units, the
// j-homomorphism into integer matrices, transfer matrices for the generalized
// eta-function evaluation, and words in the free generators of Gamma(2).

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "quadzeta/quad_field.hpp"
#include "quadzeta/rational.hpp"

namespace quadzeta {

/// 2x2 integer matrix (a b; c d).
struct Mat2Z {
  Integer a = 1;
  Integer b = 0;
  Integer c = 0;
  Integer d = 1;

  static Mat2Z identity() { return {}; }

  Integer det() const { return a * d - b * c; }
  /// Inverse of a determinant +-1 matrix; throws DomainError otherwise.
  Mat2Z inverse() const;
  /// Entrywise reduction into [0, n).
  Mat2Z mod(const Integer& n) const;
  Mat2Z pow(long e) const;
  bool is_identity_mod(const Integer& n) const;

  friend bool operator==(const Mat2Z&, const Mat2Z&) = default;
};

Mat2Z operator*(const Mat2Z& l, const Mat2Z& r);
Mat2Z operator-(const Mat2Z& m);
std::ostream& operator<<(std::ostream& os, const Mat2Z& m);
std::string to_string(const Mat2Z& m);

/// (a*alpha + b) / (c*alpha + d).
QuadElem mobius(const Mat2Z& m, const QuadElem& alpha);

/// Generators of Gamma(2): A = (1 2; 0 1), B = (1 0; 2 1), and inverses.
enum class Letter : std::uint8_t { A, A_inv, B, B_inv };

Mat2Z letter_matrix(Letter l);
Letter inverse(Letter l);
char letter_char(Letter l);  // 'A', 'a', 'B', 'b'

struct Gamma2Word {
  std::vector<Letter> letters;
  int sign = 1;
};

/// Ordered product of the letters (without the sign).
Mat2Z word_product(const std::vector<Letter>& letters);

/// e.g. "A.B^-1.A (sign -1)".
std::string to_string(const Gamma2Word& w);

struct OrderData {
  QuadElem alpha;
  /// Discriminant of the order of Z + Z*alpha.
  Integer disc;
  /// Fundamental unit of the order, > 1 in the fixed embedding.
  QuadElem epsilon;
  /// Generator > 1 of the totally positive units: epsilon or epsilon^2.
  QuadElem gamma;
};

/// Primitive integer minimal polynomial a x^2 + b x + c of an irrational
/// alpha, with a > 0.
struct MinimalPolynomial {
  Integer a;
  Integer b;
  Integer c;
  Integer discriminant() const { return b * b - 4 * a * c; }
};

MinimalPolynomial minimal_polynomial(const QuadElem& alpha);

/// Multiplier ring of Z + Z*alpha and its units. The fundamental unit comes
/// from the period of the continued fraction of alpha.
OrderData lattice_order(const QuadElem& alpha);

/// Matrix of multiplication by u on the basis (alpha, 1):
/// u*alpha = a*alpha + b, u*1 = c*alpha + d. Throws DomainError if u is not
/// in the order of Z + Z*alpha.
Mat2Z j_matrix(const QuadElem& u, const QuadElem& alpha);

struct TransferData {
  Mat2Z V;
  QuadElem beta;
  long m = 0;  // beta = gamma^m or gamma^-m
  Rational pprime;
  Rational qprime;
  Rational rho;  // {q'} c - {p'} d
};

/// V = j(gamma)^{+-m} with V == I mod lcm(den p, den q) and V.c > 0, for the
/// least such m >= 1, multiplied by `power_multiple`. Throws DomainError for
/// rational alpha or integral p.
TransferData find_transfer_matrix(const QuadElem& alpha, const Rational& p, const Rational& q,
                                  unsigned power_multiple = 1);

/// M == +-I mod 2 (for det M = 1).
bool gamma2_membership(const Mat2Z& m);

/// Reduced word in A, B with product == sign * M. Throws DomainError if M is
/// not in Gamma(2).
Gamma2Word gamma2_word(const Mat2Z& m);

struct FixingMatrix {
  Mat2Z C;
  long m = 0;
};

/// C = j(gamma^m) for the least m in 1..6 with C in Gamma(2); C fixes alpha.
FixingMatrix gamma2_fixing_matrix(const QuadElem& alpha);

}  // namespace quadzeta
