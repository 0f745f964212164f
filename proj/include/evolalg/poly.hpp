#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "evolalg/exactla.hpp"

namespace evolalg {

class EvolutionAlgebra;

/// Raised when a polynomial computation would exceed its configured caps
/// (variable count or S-pair iterations).
class EngineLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Hard storage limit for exponent vectors; the configurable caps in
/// GroebnerOptions sit well below it.
inline constexpr std::size_t kMaxPolyVars = 16;

struct Monomial {
  std::array<std::uint16_t, kMaxPolyVars> exp{};
  std::uint32_t degree = 0;

  static Monomial one() { return {}; }
  static Monomial variable(std::size_t k, std::uint16_t power = 1);

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded reverse lexicographic comparison: negative when a < b.
int grevlex_compare(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);
Monomial operator*(const Monomial& a, const Monomial& b);
/// b / a, requires divides(a, b).
Monomial quotient(const Monomial& b, const Monomial& a);
Monomial lcm(const Monomial& a, const Monomial& b);

struct Term {
  Monomial mono;
  Rat coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over Q in a fixed number of variables. Terms are kept
/// in strictly decreasing grevlex order with no zero coefficients, so the
/// representation is canonical.
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(std::size_t vars);

  static MPoly constant(std::size_t vars, const Rat& c);
  static MPoly variable(std::size_t vars, std::size_t k);
  /// Sorts, merges equal monomials and drops zero coefficients.
  static MPoly from_terms(std::size_t vars, std::vector<Term> terms);

  std::size_t vars() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.degree == 0); }
  /// Requires a nonzero polynomial.
  const Term& leading() const;
  std::size_t total_degree() const;
  Rat evaluate(std::span<const Rat> point) const;
  /// Divided by its leading coefficient (zero stays zero).
  MPoly monic() const;
  /// Same polynomial viewed in a ring with more variables.
  MPoly with_vars(std::size_t vars) const;

  std::string to_string(std::span<const std::string> names = {}) const;

  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const Rat& c, const MPoly& a);
  friend bool operator==(const MPoly&, const MPoly&) = default;

 private:
  std::size_t vars_ = 0;
  std::vector<Term> terms_;
};

/// Ideal of Q[x_1..x_vars] given by generators; the order is always grevlex.
struct PolyIdeal {
  std::size_t vars = 0;
  std::vector<MPoly> generators;

  /// True when the generators are exactly {1}.
  bool is_unit() const;

  friend bool operator==(const PolyIdeal&, const PolyIdeal&) = default;
};

struct GroebnerOptions {
  /// Maximum number of variables of a caller-supplied ideal.
  std::size_t var_bound = 8;
  /// Maximum number of S-pairs taken from the queue.
  std::size_t pair_cap = 100000;
};

/// Reduced Groebner basis under grevlex, monic, sorted by increasing leading
/// monomial. Buchberger with the product and chain criteria and the normal
/// selection strategy. Throws EngineLimit when a cap is exceeded.
PolyIdeal groebner(const PolyIdeal& ideal, const GroebnerOptions& options = {});

/// Fully reduced remainder of p modulo the polynomials of g. When g is a
/// Groebner basis the result is zero exactly for members of the ideal.
MPoly normal_form(const MPoly& p, const PolyIdeal& g);

/// f lies in the radical of the ideal (Rabinowitsch: 1 in I + (1 - y f)).
bool in_radical(const PolyIdeal& ideal, const MPoly& f, const GroebnerOptions& options = {});

/// Indices k with x_k in the radical, i.e. coordinates vanishing on the
/// whole variety over the algebraic closure.
std::vector<std::size_t> radical_variables(const PolyIdeal& ideal, const GroebnerOptions& options = {});

/// The only common zero over the algebraic closure is the origin, decided
/// by radical membership of every variable. Stops at the first variable
/// outside the radical.
bool variety_is_only_origin(const PolyIdeal& ideal, const GroebnerOptions& options = {});

/// The n*n entries of N(x)^2 with N(x) = M diag(x), row-major:
/// entry k*n + l is sum_i w_ki w_il x_i x_l.
std::vector<MPoly> n2_entries(const EvolutionAlgebra& a);
/// Ideal generated by the nonzero entries of N(x)^2.
PolyIdeal n2_ideal(const EvolutionAlgebra& a);

}  // namespace evolalg
