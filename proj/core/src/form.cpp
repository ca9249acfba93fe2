#include "pasfrac/form.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <utility>

#include "pasfrac/error.hpp"

namespace pasfrac {

Polynomial::Polynomial(std::vector<Term> terms) {
  std::map<std::pair<unsigned, unsigned>, std::int64_t> merged;
  for (const auto& t : terms) merged[{t.x_exp, t.y_exp}] += t.coeff;
  for (const auto& [exps, coeff] : merged) {
    if (coeff != 0) terms_.push_back({exps.first, exps.second, coeff});
  }
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    std::vector<Polynomial::Term> terms;
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      std::int64_t sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto term = parse_term();
      term.coeff *= sign;
      terms.push_back(term);
      first = false;
      skip_space();
    }
    return Polynomial(std::move(terms));
  }

 private:
  Polynomial::Term parse_term() {
    Polynomial::Term term{0, 0, 1};
    bool any = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      term.coeff = parse_uint();
      any = true;
      skip_space();
      if (peek() == '*') {
        ++pos_;
        skip_space();
        if (!is_var(peek())) fail("expected variable after '*'");
      }
    }
    while (is_var(peek())) {
      const char var = static_cast<char>(std::tolower(static_cast<unsigned char>(peek())));
      ++pos_;
      skip_space();
      unsigned exp = 1;
      if (peek() == '^') {
        ++pos_;
        skip_space();
        exp = static_cast<unsigned>(parse_uint());
        skip_space();
      }
      (var == 'x' ? term.x_exp : term.y_exp) += exp;
      any = true;
      if (peek() == '*') {
        ++pos_;
        skip_space();
        if (!is_var(peek())) fail("expected variable after '*'");
      }
    }
    if (!any) fail("expected a term");
    return term;
  }

  std::int64_t parse_uint() {
    std::int64_t value = 0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr == begin) fail("expected a number");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  static bool is_var(char c) { return c == 'x' || c == 'X' || c == 'y' || c == 'Y'; }
  [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
  [[nodiscard]] char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("cannot parse polynomial '" + std::string(text_) + "' at offset " +
                      std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) { return PolyParser(text).parse(); }

unsigned Polynomial::degree() const noexcept {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.degree());
  return d;
}

Polynomial Polynomial::top_part() const {
  const unsigned d = degree();
  std::vector<Term> out;
  std::copy_if(terms_.begin(), terms_.end(), std::back_inserter(out),
               [d](const Term& t) { return t.degree() == d; });
  return Polynomial(std::move(out));
}

Polynomial Polynomial::lower_part() const {
  const unsigned d = degree();
  std::vector<Term> out;
  std::copy_if(terms_.begin(), terms_.end(), std::back_inserter(out),
               [d](const Term& t) { return t.degree() < d; });
  return Polynomial(std::move(out));
}

bool Polynomial::has_nonnegative_coefficients() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff >= 0; });
}

Integer Polynomial::coefficient_norm() const {
  Integer sum = 0;
  for (const auto& t : terms_) sum += std::abs(t.coeff);
  return sum;
}

Integer Polynomial::evaluate(const Integer& x, const Integer& y) const {
  Integer total = 0;
  Integer xp;
  Integer yp;
  for (const auto& t : terms_) {
    mpz_pow_ui(xp.get_mpz_t(), x.get_mpz_t(), t.x_exp);
    mpz_pow_ui(yp.get_mpz_t(), y.get_mpz_t(), t.y_exp);
    total += Integer(static_cast<long>(t.coeff)) * xp * yp;
  }
  return total;
}

long double Polynomial::evaluate(long double x, long double y) const {
  long double total = 0;
  for (const auto& t : terms_) {
    total += static_cast<long double>(t.coeff) * std::pow(x, static_cast<int>(t.x_exp)) *
             std::pow(y, static_cast<int>(t.y_exp));
  }
  return total;
}

Polynomial Polynomial::shifted(std::int64_t constant) const {
  auto terms = terms_;
  terms.push_back({0, 0, constant});
  return Polynomial(std::move(terms));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  // Highest degree first, X-heavy first within a degree.
  auto ordered = terms_;
  std::sort(ordered.begin(), ordered.end(), [](const Term& l, const Term& r) {
    if (l.degree() != r.degree()) return l.degree() > r.degree();
    return l.x_exp > r.x_exp;
  });
  std::string out;
  for (const auto& t : ordered) {
    const std::int64_t mag = std::abs(t.coeff);
    if (out.empty()) {
      if (t.coeff < 0) out += "-";
    } else {
      out += t.coeff < 0 ? "-" : "+";
    }
    std::string mono;
    if (t.x_exp > 0) mono += t.x_exp == 1 ? "X" : "X^" + std::to_string(t.x_exp);
    if (t.y_exp > 0) mono += t.y_exp == 1 ? "Y" : "Y^" + std::to_string(t.y_exp);
    if (mono.empty()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag);
      out += mono;
    }
  }
  return out;
}

FormSpec FormSpec::column() { return {FormKind::Column, {1, 0}, {}}; }
FormSpec FormSpec::diagonal() { return {FormKind::Diagonal, {1, 1}, {}}; }
FormSpec FormSpec::skew() { return {FormKind::Skew, {1, 0}, {}}; }

FormSpec FormSpec::linear(std::uint64_t a, std::uint64_t b) {
  if (a == 0) throw DomainError("linear form aX+bY requires a >= 1");
  return {FormKind::Linear, {a, b}, {}};
}

FormSpec FormSpec::general(Polynomial poly) {
  if (poly.degree() == 0) throw DomainError("weight polynomial must be non-constant");
  return {FormKind::General, {1, 0}, std::move(poly)};
}

FormSpec FormSpec::parse(std::string_view text) {
  if (text == "x" || text == "X") return column();
  if (text == "xy" || text == "x+y" || text == "X+Y") return diagonal();
  if (text == "xpy" || text == "x+py" || text == "X+pY") return skew();
  if (text.starts_with("linear:")) {
    const auto body = text.substr(7);
    const auto comma = body.find(',');
    if (comma == std::string_view::npos) throw DomainError("linear form expects 'linear:a,b'");
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    const auto ra = std::from_chars(body.data(), body.data() + comma, a);
    const auto rb = std::from_chars(body.data() + comma + 1, body.data() + body.size(), b);
    if (ra.ec != std::errc{} || ra.ptr != body.data() + comma || rb.ec != std::errc{} ||
        rb.ptr != body.data() + body.size()) {
      throw DomainError("linear form expects 'linear:a,b' with non-negative integers");
    }
    return linear(a, b);
  }
  if (text.starts_with("poly:")) return general(Polynomial::parse(text.substr(5)));
  throw DomainError("unknown form '" + std::string(text) + "'");
}

unsigned FormSpec::degree() const noexcept {
  return kind_ == FormKind::General ? poly_.degree() : 1;
}

std::optional<LinearCoeffs> FormSpec::linear_coeffs(Prime p) const {
  switch (kind_) {
    case FormKind::Column:
    case FormKind::Diagonal:
    case FormKind::Linear:
      return coeffs_;
    case FormKind::Skew:
      return LinearCoeffs{1, p.value()};
    case FormKind::General:
      return std::nullopt;
  }
  return std::nullopt;
}

Polynomial FormSpec::as_polynomial(Prime p) const {
  if (kind_ == FormKind::General) return poly_;
  const auto c = *linear_coeffs(p);
  return Polynomial({{1, 0, static_cast<std::int64_t>(c.a)}, {0, 1, static_cast<std::int64_t>(c.b)}});
}

std::string FormSpec::name() const {
  switch (kind_) {
    case FormKind::Column:
      return "X";
    case FormKind::Diagonal:
      return "X+Y";
    case FormKind::Skew:
      return "X+pY";
    case FormKind::Linear:
      return Polynomial({{1, 0, static_cast<std::int64_t>(coeffs_.a)},
                         {0, 1, static_cast<std::int64_t>(coeffs_.b)}})
          .to_string();
    case FormKind::General:
      return poly_.to_string();
  }
  return "?";
}

}  // namespace pasfrac
