#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <string>
#include <vector>

namespace hs {

// Uniform grid on the unit circle R/Z with nodes x_j = j/n.
class Grid {
 public:
  explicit Grid(int n);

  int size() const { return n_; }
  double spacing() const { return 1.0 / n_; }
  double node(int j) const { return static_cast<double>(j) / n_; }

  bool operator==(const Grid&) const = default;

 private:
  int n_;
};

// Samples of a real function at the nodes of a Grid. Values are immutable
// after construction; arithmetic returns new objects and requires both
// operands to live on the same grid.
class GridFunction {
 public:
  GridFunction(Grid grid, std::vector<double> values);

  static GridFunction constant(Grid grid, double value);
  static GridFunction zeros(Grid grid) { return constant(grid, 0.0); }
  static GridFunction identity(Grid grid);

  template <class F>
  static GridFunction sample(Grid grid, F&& f) {
    std::vector<double> v(grid.size());
    for (int j = 0; j < grid.size(); ++j) v[j] = f(grid.node(j));
    return GridFunction(grid, std::move(v));
  }

  const Grid& grid() const { return grid_; }
  int size() const { return grid_.size(); }
  std::span<const double> values() const { return values_; }
  double operator[](int j) const { return values_[j]; }

  double min() const;
  double max() const;
  double max_abs() const;

  template <class F>
  GridFunction map(F&& f) const {
    std::vector<double> v(values_.size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = f(values_[j]);
    return GridFunction(grid_, std::move(v));
  }

  GridFunction operator-() const;
  GridFunction& operator+=(const GridFunction& o);
  GridFunction& operator-=(const GridFunction& o);
  GridFunction& operator*=(const GridFunction& o);
  GridFunction& operator/=(const GridFunction& o);
  GridFunction& operator+=(double s);
  GridFunction& operator*=(double s);

 private:
  void require_same_grid(const GridFunction& o) const;

  Grid grid_;
  std::vector<double> values_;
};

GridFunction operator+(GridFunction a, const GridFunction& b);
GridFunction operator-(GridFunction a, const GridFunction& b);
GridFunction operator*(GridFunction a, const GridFunction& b);
GridFunction operator/(GridFunction a, const GridFunction& b);
GridFunction operator+(GridFunction a, double s);
GridFunction operator+(double s, GridFunction a);
GridFunction operator-(GridFunction a, double s);
GridFunction operator-(double s, GridFunction a);
GridFunction operator*(GridFunction a, double s);
GridFunction operator*(double s, GridFunction a);
GridFunction operator/(GridFunction a, double s);

// Rectangle rule (1/n) sum f(x_j); exact for trigonometric polynomials of
// degree below n.
double integrate(const GridFunction& f);

double l2_norm(const GridFunction& f);
double sup_norm(const GridFunction& f);

// Spectral derivative. The Nyquist mode is discarded.
GridFunction derivative(const GridFunction& f);
GridFunction second_derivative(const GridFunction& f);

// F with F(0) = 0 and F' = f. The mean of f contributes the linear term
// mean(f) * x, so F is periodic only when f has zero mean.
GridFunction antiderivative_from_zero(const GridFunction& f);

enum class MeanPolicy {
  kRequire,   // throw NonZeroMean unless |mean(f)| <= 1e-10
  kSubtract,  // invert the mean-zero part of f
  kLiteral,   // evaluate the double-integral formula as written for any f
};

// Inverse of A = -d^2/dx^2 normalized by g(0) = 0:
//   g(x) = -int_0^x int_0^y f dz dy + x int_S int_0^y f dz dy.
// For mean-zero f, g is the periodic solution of -g'' = f. kLiteral keeps the
// mean m of f, which adds m * x(1 - x) / 2: g stays continuous and periodic
// with a derivative jump of -m at x = 0.
GridFunction a_inverse(const GridFunction& f,
                       MeanPolicy policy = MeanPolicy::kRequire);

GridFunction mean_zero_project(const GridFunction& f);

// Trigonometric interpolant of a periodic GridFunction, evaluable anywhere.
class TrigInterpolant {
 public:
  explicit TrigInterpolant(const GridFunction& f);

  double operator()(double x) const;
  double derivative(double x) const;

 private:
  int n_;
  std::vector<std::complex<double>> coeffs_;
};

// CSV with header `x,value`, 17 significant digits.
std::string to_csv(const GridFunction& f);
GridFunction from_csv(const std::string& text);

namespace detail {
// Normalized real DFT: c_k = (1/n) sum_j f_j e^{-2 pi i k j / n}, k = 0..n/2.
std::vector<std::complex<double>> forward_dft(std::span<const double> f);
std::vector<double> inverse_dft(std::span<const std::complex<double>> c,
                                int n);
}  // namespace detail

}  // namespace hs
