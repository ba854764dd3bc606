#include "normgeom/rng.hpp"

#include <cmath>

namespace normgeom {

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // Box-Muller on explicit uniforms; u1 kept away from zero.
  double u1 = uniform();
  if (u1 < 0x1.0p-53) u1 = 0x1.0p-53;
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 6.283185307179586476925286766559 * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

template <Scalar T>
T gaussian_scalar(Rng& rng) {
  if constexpr (is_complex_v<T>) {
    const double re = rng.gaussian();
    const double im = rng.gaussian();
    return T(re * 0.7071067811865475244, im * 0.7071067811865475244);
  } else {
    return rng.gaussian();
  }
}

template <Scalar T>
Vec<T> gaussian_vector(int n, Rng& rng) {
  Vec<T> v(n);
  for (auto& x : v) x = gaussian_scalar<T>(rng);
  return v;
}

template <Scalar T>
Matrix<T> haar_orthogonal(int n, std::uint64_t seed) {
  if (n < 1) throw DimensionMismatch("haar_orthogonal: n must be >= 1");
  Rng rng(mix_seed(seed, 0x48AA52));
  Matrix<T> g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = gaussian_scalar<T>(rng);

  // Modified Gram-Schmidt with a second orthogonalization pass. The diagonal
  // of the triangular factor is a column norm, hence real positive, which is
  // exactly the sign/phase convention that makes Q Haar.
  std::vector<Vec<T>> q;
  q.reserve(n);
  for (int j = 0; j < n; ++j) {
    Vec<T> col = g.column(j);
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& prev : q) {
        const T proj = dot<T>(col, prev);
        col = add_scaled<T>(col, -proj, prev);
      }
    const double nn = norm2<T>(col);
    if (nn < 1e-12) throw Error("haar_orthogonal: degenerate Gaussian draw");
    for (auto& x : col) x *= T(1.0 / nn);
    q.push_back(std::move(col));
  }
  return Matrix<T>::from_columns(q);
}

template double gaussian_scalar<double>(Rng&);
template std::complex<double> gaussian_scalar<std::complex<double>>(Rng&);
template Vec<double> gaussian_vector<double>(int, Rng&);
template Vec<std::complex<double>> gaussian_vector<std::complex<double>>(int, Rng&);
template Matrix<double> haar_orthogonal<double>(int, std::uint64_t);
template Matrix<std::complex<double>> haar_orthogonal<std::complex<double>>(int, std::uint64_t);

}  // namespace normgeom
