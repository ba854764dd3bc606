#pragma once

#include <cmath>
#include <complex>
#include <concepts>

namespace normgeom {

// The library works over K = R (double) or K = C (std::complex<double>).
template <typename T>
concept Scalar =
    std::same_as<T, double> || std::same_as<T, std::complex<double>>;

template <typename T>
inline constexpr bool is_complex_v = false;
template <>
inline constexpr bool is_complex_v<std::complex<double>> = true;

inline double conj_of(double x) { return x; }
inline std::complex<double> conj_of(const std::complex<double>& x) {
  return std::conj(x);
}

inline double real_of(double x) { return x; }
inline double real_of(const std::complex<double>& x) { return x.real(); }

inline double imag_of(double) { return 0.0; }
inline double imag_of(const std::complex<double>& x) { return x.imag(); }

inline double abs_of(double x) { return std::abs(x); }
inline double abs_of(const std::complex<double>& x) { return std::abs(x); }

inline double abs2_of(double x) { return x * x; }
inline double abs2_of(const std::complex<double>& x) { return std::norm(x); }

// Unit-modulus factor of x; returns 1 for x = 0 so that dividing by it is
// always safe.
inline double phase_of(double x) { return x < 0.0 ? -1.0 : 1.0; }
inline std::complex<double> phase_of(const std::complex<double>& x) {
  const double m = std::abs(x);
  if (m == 0.0) return {1.0, 0.0};
  return x / m;
}

template <Scalar T>
T scalar_from_real(double x) {
  return T(x);
}

}  // namespace normgeom
