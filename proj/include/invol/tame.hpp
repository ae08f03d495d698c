#pragma once

#include <array>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "invol/endo.hpp"
#include "invol/error.hpp"

namespace invol {

// Up to this product of degrees, identities between maps are checked by
// direct composition; above it they are compared as factor words.
inline constexpr int kDirectCheckDegree = 64;

using Matrix2 = std::array<std::array<Rat, 2>, 2>;
using Vector2 = std::array<Rat, 2>;

/// x -> M[0][0] x + M[0][1] y + t[0],  y -> M[1][0] x + M[1][1] y + t[1].
struct Affine {
  Matrix2 M{};
  Vector2 t{};

  Rat det() const { return M[0][0] * M[1][1] - M[0][1] * M[1][0]; }
  /// In the intersection with the triangular group.
  bool is_triangular() const { return is_zero(M[1][0]); }
  Endo to_endo() const;
  friend bool operator==(const Affine&, const Affine&) = default;
};

/// x -> a x + p(y),  y -> c y + d, with p univariate in y.
struct Triangular {
  Rat a = 1;
  Rat c = 1;
  Rat d = 0;
  Poly p;

  Endo to_endo() const;
  friend bool operator==(const Triangular&, const Triangular&) = default;
};

using Elementary = std::variant<Affine, Triangular>;

inline bool is_affine(const Elementary& e) { return std::holds_alternative<Affine>(e); }
Endo to_endo(const Elementary& e);
Elementary inverse(const Elementary& e);

/// Recognisers; nullopt when f is not of that shape or not invertible.
std::optional<Affine> as_affine(const Endo& f);
std::optional<Triangular> as_triangular(const Endo& f);

struct Factorization {
  /// f = factors[0] o factors[1] o ... o factors[n-1].
  std::vector<Elementary> factors;
  /// (deg P, deg Q) before each degree-reduction step of decompose.
  std::vector<std::pair<int, int>> degree_trace;

  Endo compose_all() const;
};

/// Raised when degree reduction stalls. The code is NotAnAutomorphism, or
/// JCCandidate when the input has a nonzero constant Jacobian.
class DecompositionStall : public Error {
 public:
  DecompositionStall(ErrorCode code, Endo input, Endo stalled);
  const Endo& input() const { return input_; }
  const Endo& stalled() const { return stalled_; }

 private:
  Endo input_;
  Endo stalled_;
};

/// Tame factorization by leading-form degree reduction, returned as a
/// reduced word alternating affine and non-affine triangular factors.
Factorization decompose(const Endo& f);

/// Merges adjacent factors of the same group and absorbs factors lying in
/// both groups, keeping the composition unchanged.
std::vector<Elementary> reduced_word(std::vector<Elementary> word);

/// Inverse word: reversed, each factor inverted.
std::vector<Elementary> inverse_word(const std::vector<Elementary>& word);

/// Product of a word in composition order. Adjacent factors are merged and
/// cancelled before any polynomial composition, so words that mostly cancel
/// stay cheap.
Endo compose_word(std::vector<Elementary> word);

/// True iff both words have the same product.
bool same_product(const std::vector<Elementary>& lhs, const std::vector<Elementary>& rhs);

/// f^-1 from the tame factorization. Each factor inverse is checked both
/// ways; small inputs also check both one-sided identities directly.
Endo invert(const Endo& f);

/// True iff decompose succeeds. A JCCandidate stall propagates.
bool is_automorphism(const Endo& f);

enum class InvolutionTag { Identity, MinusIdentity, AlphaConjugate };

/// Conjugacy class of an involution gamma. For MinusIdentity and
/// AlphaConjugate the conjugator g satisfies
///   gamma == compose(compose(invert(g), normal_form(tag)), g).
struct InvolutionClass {
  InvolutionTag tag = InvolutionTag::Identity;
  std::optional<Endo> conjugator;
};

/// identity, (-x, -y) or alpha.
Endo normal_form(InvolutionTag tag);

InvolutionClass classify_involution(const Endo& gamma);

/// g with gamma == g^-1 alpha g. Throws NotConjugateToAlpha for identity
/// and minus-identity classes.
Endo conjugate_to_alpha(const Endo& gamma);

/// g^-1 base g.
Endo conjugate_by(const Endo& g, const Endo& base);

}  // namespace invol
