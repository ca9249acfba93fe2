#pragma once

// Weight polynomials P(X, Y) whose level sets are counted.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pasfrac/digits.hpp"

namespace pasfrac {

/// Integer-coefficient bivariate polynomial, kept as a sorted list of
/// non-zero monomials c * X^i * Y^j.
class Polynomial {
 public:
  struct Term {
    unsigned x_exp = 0;
    unsigned y_exp = 0;
    std::int64_t coeff = 0;

    [[nodiscard]] unsigned degree() const noexcept { return x_exp + y_exp; }
    friend bool operator==(const Term&, const Term&) = default;
  };

  Polynomial() = default;
  explicit Polynomial(std::vector<Term> terms);

  /// Parses expressions such as "x^2+y^2", "x*y+x", "2x+3y", "x-1".
  static Polynomial parse(std::string_view text);

  [[nodiscard]] const std::vector<Term>& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  /// Total degree; 0 for constants (including the zero polynomial).
  [[nodiscard]] unsigned degree() const noexcept;
  /// Homogeneous part of top degree.
  [[nodiscard]] Polynomial top_part() const;
  /// Everything below the top degree.
  [[nodiscard]] Polynomial lower_part() const;
  [[nodiscard]] bool has_nonnegative_coefficients() const noexcept;
  /// Sum of |c|.
  [[nodiscard]] Integer coefficient_norm() const;

  [[nodiscard]] Integer evaluate(const Integer& x, const Integer& y) const;
  [[nodiscard]] long double evaluate(long double x, long double y) const;

  [[nodiscard]] Polynomial shifted(std::int64_t constant) const;

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Term> terms_;
};

enum class FormKind { Column, Diagonal, Skew, Linear, General };

struct LinearCoeffs {
  std::uint64_t a = 1;
  std::uint64_t b = 0;
};

/// The weight P whose level sets are counted: X, X+Y, X+pY, aX+bY, or a
/// general polynomial. The skew form X+pY resolves its coefficient against
/// the prime it is used with.
class FormSpec {
 public:
  static FormSpec column();
  static FormSpec diagonal();
  static FormSpec skew();
  static FormSpec linear(std::uint64_t a, std::uint64_t b);
  static FormSpec general(Polynomial poly);

  /// "x", "xy", "xpy", "linear:a,b" or "poly:<expr>".
  static FormSpec parse(std::string_view text);

  [[nodiscard]] FormKind kind() const noexcept { return kind_; }
  [[nodiscard]] unsigned degree() const noexcept;
  [[nodiscard]] bool is_builtin() const noexcept { return kind_ != FormKind::General; }

  /// (a, b) with P = aX + bY, for every kind except General.
  [[nodiscard]] std::optional<LinearCoeffs> linear_coeffs(Prime p) const;
  [[nodiscard]] Polynomial as_polynomial(Prime p) const;
  [[nodiscard]] const Polynomial& polynomial() const noexcept { return poly_; }

  /// Human-readable label, e.g. "X+Y", "X+pY", "2X+3Y".
  [[nodiscard]] std::string name() const;

  friend bool operator==(const FormSpec&, const FormSpec&) = default;

 private:
  FormSpec(FormKind kind, LinearCoeffs coeffs, Polynomial poly)
      : kind_(kind), coeffs_(coeffs), poly_(std::move(poly)) {}

  FormKind kind_;
  LinearCoeffs coeffs_;
  Polynomial poly_;
};

}  // namespace pasfrac
