#include "hs/periodic_field.hpp"

#include <fftw3.h>

#include <algorithm>
#include <iomanip>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "hs/errors.hpp"

namespace hs {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// FFTW planning is not thread-safe; execution with the new-array interface
// is. Plans are created once per size under a lock and executed on caller
// buffers (hence FFTW_UNALIGNED).
struct Plans {
  fftw_plan r2c = nullptr;
  fftw_plan c2r = nullptr;
  ~Plans() {
    if (r2c) fftw_destroy_plan(r2c);
    if (c2r) fftw_destroy_plan(c2r);
  }
};

const Plans& plans_for(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<Plans>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) {
    slot = std::make_unique<Plans>();
    std::vector<double> re(n);
    std::vector<std::complex<double>> co(n / 2 + 1);
    auto* cp = reinterpret_cast<fftw_complex*>(co.data());
    slot->r2c = fftw_plan_dft_r2c_1d(n, re.data(), cp,
                                     FFTW_ESTIMATE | FFTW_UNALIGNED);
    slot->c2r = fftw_plan_dft_c2r_1d(n, cp, re.data(),
                                     FFTW_ESTIMATE | FFTW_UNALIGNED);
  }
  return *slot;
}

// Applies a multiplier to each Fourier mode k = 0..n/2.
template <class M>
GridFunction spectral_map(const GridFunction& f, M&& multiplier) {
  const int n = f.size();
  auto c = detail::forward_dft(f.values());
  for (int k = 0; k <= n / 2; ++k) c[k] *= multiplier(k, n);
  return GridFunction(f.grid(), detail::inverse_dft(c, n));
}

}  // namespace

namespace detail {

std::vector<std::complex<double>> forward_dft(std::span<const double> f) {
  const int n = static_cast<int>(f.size());
  std::vector<double> in(f.begin(), f.end());
  std::vector<std::complex<double>> out(n / 2 + 1);
  fftw_execute_dft_r2c(plans_for(n).r2c, in.data(),
                       reinterpret_cast<fftw_complex*>(out.data()));
  const double inv = 1.0 / n;
  for (auto& c : out) c *= inv;
  return out;
}

std::vector<double> inverse_dft(std::span<const std::complex<double>> c,
                                int n) {
  std::vector<std::complex<double>> in(c.begin(), c.end());
  std::vector<double> out(n);
  fftw_execute_dft_c2r(plans_for(n).c2r,
                       reinterpret_cast<fftw_complex*>(in.data()), out.data());
  return out;
}

}  // namespace detail

Grid::Grid(int n) : n_(n) {
  if (n < 8 || n % 2 != 0) {
    throw std::invalid_argument("grid size must be even and at least 8, got " +
                                std::to_string(n));
  }
}

GridFunction::GridFunction(Grid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != grid_.size()) {
    throw GridMismatch("value count " + std::to_string(values_.size()) +
                       " does not match grid size " +
                       std::to_string(grid_.size()));
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite sample");
  }
}

GridFunction GridFunction::constant(Grid grid, double value) {
  return GridFunction(grid, std::vector<double>(grid.size(), value));
}

GridFunction GridFunction::identity(Grid grid) {
  return sample(grid, [](double x) { return x; });
}

double GridFunction::min() const {
  return *std::min_element(values_.begin(), values_.end());
}

double GridFunction::max() const {
  return *std::max_element(values_.begin(), values_.end());
}

double GridFunction::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

void GridFunction::require_same_grid(const GridFunction& o) const {
  if (!(grid_ == o.grid_)) {
    throw GridMismatch("grid functions live on different grids (" +
                       std::to_string(grid_.size()) + " vs " +
                       std::to_string(o.grid_.size()) + ")");
  }
}

GridFunction GridFunction::operator-() const {
  return map([](double v) { return -v; });
}

GridFunction& GridFunction::operator+=(const GridFunction& o) {
  require_same_grid(o);
  for (std::size_t j = 0; j < values_.size(); ++j) values_[j] += o.values_[j];
  return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& o) {
  require_same_grid(o);
  for (std::size_t j = 0; j < values_.size(); ++j) values_[j] -= o.values_[j];
  return *this;
}

GridFunction& GridFunction::operator*=(const GridFunction& o) {
  require_same_grid(o);
  for (std::size_t j = 0; j < values_.size(); ++j) values_[j] *= o.values_[j];
  return *this;
}

GridFunction& GridFunction::operator/=(const GridFunction& o) {
  require_same_grid(o);
  for (std::size_t j = 0; j < values_.size(); ++j) values_[j] /= o.values_[j];
  return *this;
}

GridFunction& GridFunction::operator+=(double s) {
  for (double& v : values_) v += s;
  return *this;
}

GridFunction& GridFunction::operator*=(double s) {
  for (double& v : values_) v *= s;
  return *this;
}

GridFunction operator+(GridFunction a, const GridFunction& b) { return a += b; }
GridFunction operator-(GridFunction a, const GridFunction& b) { return a -= b; }
GridFunction operator*(GridFunction a, const GridFunction& b) { return a *= b; }
GridFunction operator/(GridFunction a, const GridFunction& b) { return a /= b; }
GridFunction operator+(GridFunction a, double s) { return a += s; }
GridFunction operator+(double s, GridFunction a) { return a += s; }
GridFunction operator-(GridFunction a, double s) { return a += -s; }
GridFunction operator-(double s, GridFunction a) { return (-a) += s; }
GridFunction operator*(GridFunction a, double s) { return a *= s; }
GridFunction operator*(double s, GridFunction a) { return a *= s; }
GridFunction operator/(GridFunction a, double s) { return a *= 1.0 / s; }

double integrate(const GridFunction& f) {
  // Compensated (Kahan) summation.
  double sum = 0.0, comp = 0.0;
  for (double v : f.values()) {
    const double y = v - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum / f.size();
}

double l2_norm(const GridFunction& f) { return std::sqrt(integrate(f * f)); }

double sup_norm(const GridFunction& f) { return f.max_abs(); }

GridFunction derivative(const GridFunction& f) {
  return spectral_map(f, [](int k, int n) -> std::complex<double> {
    if (2 * k == n) return 0.0;
    return {0.0, kTwoPi * k};
  });
}

GridFunction second_derivative(const GridFunction& f) {
  return spectral_map(f, [](int k, int) -> std::complex<double> {
    const double w = kTwoPi * k;
    return -w * w;
  });
}

GridFunction antiderivative_from_zero(const GridFunction& f) {
  const double mean = integrate(f);
  auto periodic = spectral_map(f, [](int k, int n) -> std::complex<double> {
    if (k == 0 || 2 * k == n) return 0.0;
    return 1.0 / std::complex<double>(0.0, kTwoPi * k);
  });
  const double at_zero = periodic[0];
  std::vector<double> v(f.size());
  for (int j = 0; j < f.size(); ++j) {
    v[j] = periodic[j] - at_zero + mean * f.grid().node(j);
  }
  return GridFunction(f.grid(), std::move(v));
}

GridFunction a_inverse(const GridFunction& f, MeanPolicy policy) {
  const double mean = integrate(f);
  if (policy == MeanPolicy::kRequire && std::abs(mean) > 1e-10) {
    std::ostringstream msg;
    msg << "inverse Laplacian needs a mean-zero argument, mean = " << mean;
    throw NonZeroMean(msg.str());
  }
  auto periodic = spectral_map(f, [](int k, int) -> std::complex<double> {
    if (k == 0) return 0.0;
    const double w = kTwoPi * k;
    return 1.0 / (w * w);
  });
  const double at_zero = periodic[0];
  const double kink = policy == MeanPolicy::kLiteral ? mean : 0.0;
  std::vector<double> v(f.size());
  for (int j = 0; j < f.size(); ++j) {
    const double x = f.grid().node(j);
    v[j] = periodic[j] - at_zero + kink * 0.5 * x * (1.0 - x);
  }
  return GridFunction(f.grid(), std::move(v));
}

GridFunction mean_zero_project(const GridFunction& f) {
  return f - integrate(f);
}

TrigInterpolant::TrigInterpolant(const GridFunction& f)
    : n_(f.size()), coeffs_(detail::forward_dft(f.values())) {}

double TrigInterpolant::operator()(double x) const {
  const std::complex<double> step = std::polar(1.0, kTwoPi * x);
  std::complex<double> phase = step;
  double sum = coeffs_[0].real();
  const int half = n_ / 2;
  for (int k = 1; k < half; ++k) {
    sum += 2.0 * (coeffs_[k] * phase).real();
    phase *= step;
  }
  // Nyquist mode: real-valued cosine at the nodes.
  sum += coeffs_[half].real() * std::cos(kTwoPi * half * x);
  return sum;
}

double TrigInterpolant::derivative(double x) const {
  const std::complex<double> step = std::polar(1.0, kTwoPi * x);
  std::complex<double> phase = step;
  double sum = 0.0;
  for (int k = 1; k < n_ / 2; ++k) {
    sum += 2.0 * (coeffs_[k] * std::complex<double>(0.0, kTwoPi * k) * phase)
                     .real();
    phase *= step;
  }
  return sum;
}

std::string to_csv(const GridFunction& f) {
  std::ostringstream out;
  out << "x,value\n" << std::setprecision(17);
  for (int j = 0; j < f.size(); ++j) {
    out << f.grid().node(j) << ',' << f[j] << '\n';
  }
  return out.str();
}

GridFunction from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "x,value") {
    throw std::invalid_argument("expected CSV header `x,value`");
  }
  std::vector<double> values;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument("malformed CSV row: " + line);
    }
    values.push_back(std::stod(line.substr(comma + 1)));
  }
  const int n = static_cast<int>(values.size());
  return GridFunction(Grid(n), std::move(values));
}

}  // namespace hs
