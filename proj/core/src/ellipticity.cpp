#include "pasfrac/ellipticity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <vector>

#include "pasfrac/error.hpp"

namespace pasfrac {

std::string_view verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::Yes:
      return "yes";
    case Verdict::No:
      return "no";
    case Verdict::Indeterminate:
      return "indeterminate";
  }
  return "?";
}

namespace {

constexpr unsigned kGridLog2 = 12;
constexpr std::size_t kCertifyBudget = 200000;
constexpr unsigned kMaxRefineDepth = 48;

// Lipschitz constant of g(t) = P_d(1, t) on [0, 1]: sum |c| * (power of t).
Integer top_lipschitz(const Polynomial& top) {
  Integer sum = 0;
  for (const auto& t : top.terms()) sum += Integer(std::abs(t.coeff)) * t.y_exp;
  return sum;
}

struct TopCheck {
  Verdict verdict = Verdict::Indeterminate;
  std::optional<PlanePoint> witness;
};

// Certifies g(t) > 0 on [0, 1] using exact values G(N, i) = P_d(N, i) = N^d g(i/N).
// On [i/N, (i+1)/N] the Lipschitz bound gives g >= (g(a) + g(b) - L/N) / 2,
// i.e. positivity follows from G(N, i) + G(N, i+1) > L N^(d-1).
TopCheck certify_top(const Polynomial& top) {
  const unsigned d = top.degree();
  const Integer lip = top_lipschitz(top);

  struct Cell {
    Integer n;      // grid resolution N
    Integer index;  // left endpoint i
    Integer left;   // G(N, i)
    Integer right;  // G(N, i + 1)
    unsigned depth;
  };

  auto power = [](const Integer& base, unsigned e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
  };
  auto witness_at = [](const Integer& i, const Integer& n) {
    return PlanePoint{1.0L, static_cast<long double>(mpq_class(i, n).get_d())};
  };

  const Integer grid = Integer(1) << kGridLog2;
  std::vector<Integer> values;
  values.reserve((1U << kGridLog2) + 1);
  for (unsigned i = 0; i <= (1U << kGridLog2); ++i) {
    values.push_back(top.evaluate(grid, Integer(i)));
    if (values.back() <= 0) return {Verdict::No, witness_at(Integer(i), grid)};
  }

  std::vector<Cell> stack;
  for (unsigned i = 0; i < (1U << kGridLog2); ++i) {
    stack.push_back({grid, Integer(i), values[i], values[i + 1], 0});
  }

  std::size_t budget = kCertifyBudget;
  bool unresolved = false;
  while (!stack.empty()) {
    Cell cell = std::move(stack.back());
    stack.pop_back();
    if (cell.left + cell.right > lip * power(cell.n, d - 1)) continue;
    if (cell.depth >= kMaxRefineDepth || budget == 0) {
      unresolved = true;
      continue;
    }
    --budget;
    const Integer n2 = cell.n * 2;
    const Integer mid_index = cell.index * 2 + 1;
    const Integer mid = top.evaluate(n2, mid_index);
    if (mid <= 0) return {Verdict::No, witness_at(mid_index, n2)};
    const Integer scale = Integer(1) << d;
    stack.push_back({n2, cell.index * 2, cell.left * scale, mid, cell.depth + 1});
    stack.push_back({n2, mid_index, mid, cell.right * scale, cell.depth + 1});
  }
  return {unresolved ? Verdict::Indeterminate : Verdict::Yes, std::nullopt};
}

struct Extremum {
  long double certified;  // rigorous bound (lower for min)
  long double value;      // best sampled value
  long double location;
};

// Branch and bound minimization on [a, b]. A cell of radius r around c is
// bounded below by f(c) - |f'(c)| r - m2 r^2 / 2, where m2 bounds |f''|.
template <typename F, typename DF>
Extremum taylor_minimize(F f, DF df, long double m2, long double a, long double b, long double tol) {
  struct Cell {
    long double mid, radius, bound;
    bool operator>(const Cell& other) const { return bound > other.bound; }
  };
  auto make = [&](long double mid, long double radius, Extremum& best) {
    const long double fm = f(mid);
    if (fm < best.value) best = {0, fm, mid};
    return Cell{mid, radius, fm - std::abs(df(mid)) * radius - m2 * radius * radius / 2};
  };
  Extremum best{0, f(a), a};
  if (const long double fb = f(b); fb < best.value) best = {0, fb, b};
  std::priority_queue<Cell, std::vector<Cell>, std::greater<>> queue;
  constexpr int kInitial = 1 << kGridLog2;
  const long double r0 = (b - a) / (2 * kInitial);
  for (int i = 0; i < kInitial; ++i) queue.push(make(a + (2 * i + 1) * r0, r0, best));
  for (int iter = 0; iter < 2000000 && !queue.empty(); ++iter) {
    const Cell cell = queue.top();
    if (best.value - cell.bound <= tol) break;
    queue.pop();
    const long double r = cell.radius / 2;
    queue.push(make(cell.mid - r, r, best));
    queue.push(make(cell.mid + r, r, best));
  }
  best.certified = std::min(best.value, queue.empty() ? best.value : queue.top().bound);
  return best;
}

NormBounds norm_bounds(const Polynomial& poly, long double* min_angle) {
  const Polynomial top = poly.top_part();
  const unsigned d = top.degree();
  long double g1 = 0;
  long double g2 = 0;
  for (const auto& t : top.terms()) {
    const long double c = std::abs(static_cast<long double>(t.coeff));
    g1 += c * t.y_exp;
    g2 += c * t.y_exp * (t.y_exp > 0 ? t.y_exp - 1 : 0);
  }
  const long double norm = top.coefficient_norm().get_d();
  const long double half_d = d / 2.0L;
  // h = g q with q = (1+t^2)^(-d/2); on [0, 1] |q| <= 1, |q'| <= d, |q''| <= d(d+2).
  const long double m2 = g2 + 2 * d * g1 + d * (d + 2.0L) * norm;
  auto g_prime = [&](long double t) {
    long double sum = 0;
    for (const auto& term : top.terms()) {
      if (term.y_exp == 0) continue;
      sum += static_cast<long double>(term.coeff) * term.y_exp * std::pow(t, static_cast<int>(term.y_exp - 1));
    }
    return sum;
  };
  auto h = [&](long double t) { return top.evaluate(1.0L, t) / std::pow(1.0L + t * t, half_d); };
  auto dh = [&](long double t) {
    const long double q = std::pow(1.0L + t * t, -half_d);
    return g_prime(t) * q - d * t * top.evaluate(1.0L, t) * q / (1.0L + t * t);
  };
  const long double tol = 1e-11L * std::max(1.0L, norm);

  const Extremum low = taylor_minimize(h, dh, m2, 0.0L, 1.0L, tol);
  const Extremum high = taylor_minimize([&](long double t) { return -h(t); }, [&](long double t) { return -dh(t); },
                                        m2, 0.0L, 1.0L, tol);
  if (min_angle != nullptr) *min_angle = std::atan(low.location);

  NormBounds out{low.certified, -high.certified, 1.0L};
  const long double lower_norm = poly.lower_part().coefficient_norm().get_d();
  if (lower_norm > 0) {
    // For |(x,y)| = rho >= 1 each lower monomial is at most rho^(d-1) in size.
    out.R = std::max(1.0L, 2.0L * lower_norm / out.c1);
    out.c2 += out.c1 / 2;
    out.c1 /= 2;
  }
  return out;
}

std::optional<PlanePoint> search_negative_lattice(const Polynomial& poly, std::uint64_t radius) {
  const std::uint64_t limit = std::min<std::uint64_t>(radius, 2000);
  for (std::uint64_t x = 0; x <= limit; ++x) {
    for (std::uint64_t y = 0; y <= x; ++y) {
      if (poly.evaluate(Integer(x), Integer(y)) < 0) {
        return PlanePoint{static_cast<long double>(x), static_cast<long double>(y)};
      }
    }
  }
  return std::nullopt;
}

// Quadtree certification of P > 0 on T intersected with [0, R]^2.
PositivityResult certify_box(const Polynomial& poly, long double radius) {
  const long double rmax = std::max(1.0L, radius);
  long double grad = 0;
  for (const auto& t : poly.terms()) {
    const unsigned deg = t.degree();
    if (deg == 0) continue;
    grad += std::abs(static_cast<long double>(t.coeff)) * deg * std::pow(rmax, static_cast<int>(deg - 1));
  }
  struct Box {
    long double x0, y0, w;
  };
  std::vector<Box> stack{{0, 0, radius}};
  std::size_t budget = 2000000;
  const long double min_width = radius * 1e-9L;
  bool unresolved = false;
  while (!stack.empty()) {
    const Box box = stack.back();
    stack.pop_back();
    if (box.y0 > box.x0 + box.w) continue;  // entirely above the diagonal
    const long double cx = box.x0 + box.w / 2;
    const long double cy = box.y0 + box.w / 2;
    const long double value = poly.evaluate(cx, cy);
    if (cy <= cx && value < 0) return {Verdict::No, PlanePoint{cx, cy}};
    if (value - grad * box.w * std::numbers::sqrt2_v<long double> / 2 > 0) continue;
    if (budget == 0 || box.w < min_width) {
      unresolved = true;
      continue;
    }
    --budget;
    const long double hw = box.w / 2;
    stack.push_back({box.x0, box.y0, hw});
    stack.push_back({box.x0 + hw, box.y0, hw});
    stack.push_back({box.x0, box.y0 + hw, hw});
    stack.push_back({box.x0 + hw, box.y0 + hw, hw});
  }
  return {unresolved ? Verdict::Indeterminate : Verdict::Yes, std::nullopt};
}

}  // namespace

EllipticityCertificate check_t_elliptic(const Polynomial& poly) {
  if (poly.degree() == 0) throw DomainError("T-ellipticity needs a non-constant polynomial");
  EllipticityCertificate cert;
  cert.poly = poly;
  const TopCheck top = certify_top(poly.top_part());
  cert.elliptic = top.verdict;
  cert.witness = top.witness;
  if (cert.elliptic == Verdict::Yes) {
    long double angle = 0;
    cert.bounds = norm_bounds(poly, &angle);
    cert.min_location = angle;
  }
  cert.positive = check_t_positive(poly).positive;
  return cert;
}

EllipticityCertificate check_t_elliptic(const FormSpec& form, Prime p) {
  return check_t_elliptic(form.as_polynomial(p));
}

PositivityResult check_t_positive(const Polynomial& poly, std::uint64_t region_bound) {
  if (poly.degree() == 0) {
    const Integer c = poly.evaluate(Integer(0), Integer(0));
    return c >= 0 ? PositivityResult{Verdict::Yes, std::nullopt}
                  : PositivityResult{Verdict::No, PlanePoint{0, 0}};
  }
  // x, y >= 0 on T, so non-negative coefficients settle it.
  if (poly.has_nonnegative_coefficients()) return {Verdict::Yes, std::nullopt};
  if (poly.evaluate(Integer(0), Integer(0)) < 0) return {Verdict::No, PlanePoint{0, 0}};

  if (certify_top(poly.top_part()).verdict == Verdict::Yes) {
    // Beyond R, P >= c1 |(x,y)|^d > 0; only the compact part needs work.
    const NormBounds bounds = norm_bounds(poly, nullptr);
    if (bounds.R <= static_cast<long double>(region_bound)) {
      auto result = certify_box(poly, bounds.R);
      if (result.positive != Verdict::Indeterminate) return result;
    }
  }
  if (auto witness = search_negative_lattice(poly, region_bound)) return {Verdict::No, witness};
  return {Verdict::Indeterminate, std::nullopt};
}

NormBounds ellipticity_constants(const Polynomial& poly) {
  if (poly.degree() == 0 || certify_top(poly.top_part()).verdict != Verdict::Yes) {
    throw DomainError("polynomial " + poly.to_string() + " is not certified T-elliptic");
  }
  return norm_bounds(poly, nullptr);
}

NormBounds ellipticity_constants(const FormSpec& form, Prime p) {
  return ellipticity_constants(form.as_polynomial(p));
}

}  // namespace pasfrac
