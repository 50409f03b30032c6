// Copyright 2026 The qenc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <cmath>
#include <string>
#include <utility>

#include "qenc/bits.hpp"
#include "qenc/errors.hpp"
#include "qenc/quantum/density_matrix.hpp"

namespace qenc {

/// Key of length 2n selecting P_r = X_1^{r_1} Z_1^{r_2} ... X_n^{r_{2n-1}} Z_n^{r_{2n}}.
using PauliKey = BitString;

/// Square matrix with U U^† = 1, checked at construction.
class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(Matrix m, double tol = kTolPsd) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw DimensionMismatch("unitary must be square");
    const Matrix id = Matrix::Identity(m_.rows(), m_.cols());
    if ((m_ * m_.adjoint() - id).cwiseAbs().maxCoeff() > tol) {
      throw InvalidState("matrix is not unitary");
    }
  }

  const Matrix& matrix() const { return m_; }
  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }

 private:
  Matrix m_;
};

inline void check_pauli_key(const PauliKey& key) {
  if (key.empty() || key.size() % 2 != 0) {
    throw MalformedKey("Pauli key length must be even and positive, got " +
                       std::to_string(key.size()));
  }
}

/// Dense operator for `key`. Qubit 1 is the most significant tensor factor.
/// XZ is kept as the literal product [[0,-1],[1,0]].
inline UnitaryMatrix pauli_from_key(const PauliKey& key) {
  check_pauli_key(key);
  Matrix x(2, 2);
  x << 0, 1, 1, 0;
  Matrix z(2, 2);
  z << 1, 0, 0, -1;
  Matrix out = Matrix::Identity(1, 1);
  for (std::size_t j = 0; j < key.size() / 2; ++j) {
    Matrix p = Matrix::Identity(2, 2);
    if (key[2 * j]) p = p * x;
    if (key[2 * j + 1]) p = p * z;
    Matrix next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index r = 0; r < out.rows(); ++r) {
      for (Eigen::Index c = 0; c < out.cols(); ++c) next.block(r * 2, c * 2, 2, 2) = out(r, c) * p;
    }
    out = std::move(next);
  }
  return UnitaryMatrix(std::move(out));
}

/// U ρ U^† with U acting on register `target`.
inline DensityMatrix apply_unitary(const UnitaryMatrix& u, const DensityMatrix& state,
                                   const std::string& target) {
  const auto shifts = detail::register_shifts(state, target);
  if (u.dim() != (std::size_t{1} << shifts.size())) {
    throw DimensionMismatch("unitary size does not match register '" + target + "'");
  }
  // Index pieces: the target bits and everything else.
  std::size_t target_mask = 0;
  for (int s : shifts) target_mask |= std::size_t{1} << s;
  const std::size_t dim = state.dim();
  const std::size_t dt = u.dim();
  std::vector<std::size_t> spread(dt);
  for (std::size_t a = 0; a < dt; ++a) spread[a] = detail::scatter(a, shifts);

  const Matrix& m = state.matrix();
  const Matrix& um = u.matrix();
  // Left multiply: (U ⊗ 1) m.
  Matrix left = Matrix::Zero(m.rows(), m.cols());
  for (std::size_t i = 0; i < dim; ++i) {
    const std::size_t rest = i & ~target_mask;
    const std::size_t a = detail::gather(i, shifts);
    for (std::size_t b = 0; b < dt; ++b) {
      const Complex coeff = um(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
      if (coeff == Complex(0.0, 0.0)) continue;
      left.row(static_cast<Eigen::Index>(i)) +=
          coeff * m.row(static_cast<Eigen::Index>(rest | spread[b]));
    }
  }
  // Right multiply by (U ⊗ 1)^†.
  Matrix out = Matrix::Zero(m.rows(), m.cols());
  for (std::size_t j = 0; j < dim; ++j) {
    const std::size_t rest = j & ~target_mask;
    const std::size_t a = detail::gather(j, shifts);
    for (std::size_t b = 0; b < dt; ++b) {
      const Complex coeff =
          std::conj(um(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)));
      if (coeff == Complex(0.0, 0.0)) continue;
      out.col(static_cast<Eigen::Index>(j)) +=
          coeff * left.col(static_cast<Eigen::Index>(rest | spread[b]));
    }
  }
  return DensityMatrix::unchecked(std::move(out), state.layout());
}

/// P_r ρ P_r^† on register `target`, by permuting and sign-flipping entries.
inline DensityMatrix apply_pauli(const PauliKey& key, const DensityMatrix& state,
                                 const std::string& target) {
  check_pauli_key(key);
  const auto shifts = detail::register_shifts(state, target);
  if (key.size() != 2 * shifts.size()) {
    throw MalformedKey("Pauli key of length " + std::to_string(key.size()) +
                       " does not fit register '" + target + "' of " +
                       std::to_string(shifts.size()) + " qubits");
  }
  std::size_t xmask = 0;
  std::size_t zmask = 0;
  for (std::size_t j = 0; j < shifts.size(); ++j) {
    if (key[2 * j]) xmask |= std::size_t{1} << shifts[j];
    if (key[2 * j + 1]) zmask |= std::size_t{1} << shifts[j];
  }
  // P|k⟩ = (-1)^{b·k} |k ⊕ a|, so (PρP†)_{ij} = s(i⊕a) s(j⊕a) ρ_{i⊕a, j⊕a}.
  const auto sign = [zmask](std::size_t k) {
    return (std::popcount(k & zmask) & 1U) ? -1.0 : 1.0;
  };
  const Matrix& m = state.matrix();
  const std::size_t dim = state.dim();
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < dim; ++i) {
    const std::size_t si = i ^ xmask;
    const double sgn_i = sign(si);
    for (std::size_t j = 0; j < dim; ++j) {
      const std::size_t sj = j ^ xmask;
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          sgn_i * sign(sj) * m(static_cast<Eigen::Index>(si), static_cast<Eigen::Index>(sj));
    }
  }
  return DensityMatrix::unchecked(std::move(out), state.layout());
}

/// Largest register size qotp_average will enumerate all 4^n keys for.
inline constexpr int kQotpMaxQubits = 3;

/// 4^{-n} Σ_r P_r ρ P_r on register `target`.
inline DensityMatrix qotp_average(const DensityMatrix& state, const std::string& target,
                                  int max_qubits = kQotpMaxQubits) {
  const int n = state.reg(target).qubits;
  if (n > max_qubits) {
    throw DimensionMismatch("qotp_average enumerates keys only up to " +
                            std::to_string(max_qubits) + " qubits");
  }
  const std::uint64_t keys = std::uint64_t{1} << (2 * n);
  Matrix acc = Matrix::Zero(static_cast<Eigen::Index>(state.dim()),
                            static_cast<Eigen::Index>(state.dim()));
  for (std::uint64_t r = 0; r < keys; ++r) {
    acc += apply_pauli(BitString::from_uint(r, static_cast<std::size_t>(2 * n)), state, target)
               .matrix();
  }
  acc /= static_cast<double>(keys);
  return DensityMatrix::unchecked(std::move(acc), state.layout());
}

/// Whole-state version; the state must consist of a single register.
inline DensityMatrix qotp_average(const DensityMatrix& state, int max_qubits = kQotpMaxQubits) {
  if (state.layout().size() != 1) {
    throw UnknownRegister("qotp_average without a target needs a single-register state");
  }
  return qotp_average(state, state.layout().front().name, max_qubits);
}

}  // namespace qenc
