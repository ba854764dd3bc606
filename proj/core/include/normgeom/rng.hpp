#pragma once

#include <cstdint>
#include <random>

#include "normgeom/matrix.hpp"

namespace normgeom {

// Deterministic random source. mt19937_64 is bit-exact across platforms and
// the Gaussian transform is an explicit Box-Muller, so streams never depend
// on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double gaussian();

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// splitmix64 of (seed, stream); used to derive independent substreams.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

template <Scalar T>
T gaussian_scalar(Rng& rng);

template <Scalar T>
Vec<T> gaussian_vector(int n, Rng& rng);

// Haar-distributed orthogonal (unitary over C) matrix: orthonormalization of
// a Gaussian matrix with the triangular factor's diagonal forced real
// positive, which gives the correct Haar measure. Deterministic per seed.
template <Scalar T>
Matrix<T> haar_orthogonal(int n, std::uint64_t seed);

extern template double gaussian_scalar<double>(Rng&);
extern template std::complex<double> gaussian_scalar<std::complex<double>>(Rng&);
extern template Vec<double> gaussian_vector<double>(int, Rng&);
extern template Vec<std::complex<double>> gaussian_vector<std::complex<double>>(int, Rng&);
extern template Matrix<double> haar_orthogonal<double>(int, std::uint64_t);
extern template Matrix<std::complex<double>> haar_orthogonal<std::complex<double>>(int, std::uint64_t);

}  // namespace normgeom
