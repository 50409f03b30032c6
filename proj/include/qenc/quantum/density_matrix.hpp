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

#include <Eigen/Dense>
#include <algorithm>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qenc/bits.hpp"
#include "qenc/errors.hpp"

namespace qenc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Tolerance for state invariants (hermiticity, trace, positivity).
inline constexpr double kTolPsd = 1e-9;
/// Tolerance for algebraic identities between states.
inline constexpr double kTolAlgebra = 1e-10;

/// A named group of qubits.
struct Register {
  std::string name;
  int qubits = 0;

  bool operator==(const Register&) const = default;
};

/// Ordered registers; the first register holds the most significant qubits
/// of the computational-basis index.
using Layout = std::vector<Register>;

inline int total_qubits(const Layout& layout) {
  int n = 0;
  for (const auto& r : layout) n += r.qubits;
  return n;
}

inline void check_layout(const Layout& layout) {
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i].qubits < 1) throw InvalidState("register '" + layout[i].name + "' has no qubits");
    if (layout[i].name.empty()) throw InvalidState("register names must be non-empty");
    for (std::size_t j = i + 1; j < layout.size(); ++j) {
      if (layout[i].name == layout[j].name) {
        throw InvalidState("duplicate register '" + layout[i].name + "'");
      }
    }
  }
  if (total_qubits(layout) > 16) throw InvalidState("layout exceeds 16 qubits");
}

/// Positive-semidefinite, unit-trace matrix over a named register layout.
///
/// Factories that take caller-supplied matrices validate the invariants.
/// Operations in this library preserve them and use the unchecked path.
class DensityMatrix {
 public:
  static DensityMatrix from_matrix(Matrix m, Layout layout, double tol = kTolPsd) {
    DensityMatrix out(std::move(m), std::move(layout));
    out.validate(tol);
    return out;
  }

  /// Trusted constructor for results of operations known to preserve the
  /// invariants. Only the layout is checked.
  static DensityMatrix unchecked(Matrix m, Layout layout) {
    return DensityMatrix(std::move(m), std::move(layout));
  }

  static DensityMatrix basis(const BitString& value, std::string name) {
    if (value.empty()) throw InvalidState("basis state needs at least one qubit");
    const std::size_t dim = std::size_t{1} << value.size();
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    const auto idx = static_cast<Eigen::Index>(value.to_uint());
    m(idx, idx) = 1.0;
    return DensityMatrix(std::move(m), Layout{{std::move(name), static_cast<int>(value.size())}});
  }

  /// |ψ⟩⟨ψ| for a normalized ket.
  static DensityMatrix pure(const Vector& ket, Layout layout) {
    if (std::abs(ket.norm() - 1.0) > kTolPsd) throw InvalidState("ket is not normalized");
    return from_matrix(ket * ket.adjoint(), std::move(layout));
  }

  static DensityMatrix maximally_mixed(int qubits, std::string name) {
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << qubits);
    Matrix m = Matrix::Identity(dim, dim) / static_cast<double>(dim);
    return DensityMatrix(std::move(m), Layout{{std::move(name), qubits}});
  }

  const Matrix& matrix() const { return m_; }
  const Layout& layout() const { return layout_; }
  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  int qubits() const { return total_qubits(layout_); }

  bool has(std::string_view name) const {
    return std::any_of(layout_.begin(), layout_.end(),
                       [&](const Register& r) { return r.name == name; });
  }

  const Register& reg(std::string_view name) const {
    for (const auto& r : layout_) {
      if (r.name == name) return r;
    }
    throw UnknownRegister("no register named '" + std::string(name) + "'");
  }

  /// Qubit position (0 = most significant) of the first qubit of `name`.
  int offset(std::string_view name) const {
    int off = 0;
    for (const auto& r : layout_) {
      if (r.name == name) return off;
      off += r.qubits;
    }
    throw UnknownRegister("no register named '" + std::string(name) + "'");
  }

  Complex trace() const { return m_.trace(); }

  bool is_valid(double tol = kTolPsd) const {
    if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
    if (std::abs(m_.trace() - Complex(1.0, 0.0)) > tol) return false;
    const Matrix herm = (m_ + m_.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(herm, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff() >= -tol;
  }

  void validate(double tol = kTolPsd) const {
    if (!is_valid(tol)) throw InvalidState("matrix is not a density matrix");
  }

  /// Same state with register `from` renamed to `to`.
  DensityMatrix relabel(std::string_view from, std::string to) const {
    Layout l = layout_;
    bool found = false;
    for (auto& r : l) {
      if (r.name == from) {
        r.name = to;
        found = true;
      }
    }
    if (!found) throw UnknownRegister("no register named '" + std::string(from) + "'");
    return DensityMatrix(m_, std::move(l));
  }

 private:
  DensityMatrix(Matrix m, Layout layout) : m_(std::move(m)), layout_(std::move(layout)) {
    check_layout(layout_);
    if (m_.rows() != m_.cols()) throw DimensionMismatch("density matrix must be square");
    if (static_cast<std::size_t>(m_.rows()) != (std::size_t{1} << total_qubits(layout_))) {
      throw DimensionMismatch("matrix dimension does not match the register layout");
    }
  }

  Matrix m_;
  Layout layout_;
};

/// Kronecker product; the layout of `b` is appended to that of `a`.
inline DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  const Matrix& x = a.matrix();
  const Matrix& y = b.matrix();
  Matrix out(x.rows() * y.rows(), x.cols() * y.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
    }
  }
  Layout layout = a.layout();
  layout.insert(layout.end(), b.layout().begin(), b.layout().end());
  return DensityMatrix::unchecked(std::move(out), std::move(layout));
}

namespace detail {

// Bit shift (from the least significant end) of each qubit of `reg`.
inline std::vector<int> register_shifts(const DensityMatrix& state, std::string_view reg) {
  const int n = state.qubits();
  const int off = state.offset(reg);
  const int q = state.reg(reg).qubits;
  std::vector<int> shifts(static_cast<std::size_t>(q));
  for (int j = 0; j < q; ++j) shifts[static_cast<std::size_t>(j)] = n - 1 - (off + j);
  return shifts;
}

// Spreads the bits of `value` (most significant first) onto `shifts`.
inline std::size_t scatter(std::size_t value, std::span<const int> shifts) {
  std::size_t out = 0;
  const std::size_t k = shifts.size();
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t bit = (value >> (k - 1 - j)) & 1U;
    out |= bit << shifts[j];
  }
  return out;
}

inline std::size_t gather(std::size_t index, std::span<const int> shifts) {
  std::size_t out = 0;
  for (int s : shifts) out = (out << 1) | ((index >> s) & 1U);
  return out;
}

}  // namespace detail

/// Traces out the registers in `drop`.
inline DensityMatrix partial_trace(const DensityMatrix& state,
                                   std::span<const std::string> drop) {
  if (drop.empty()) return state;
  std::vector<int> kept_shifts;
  std::vector<int> traced_shifts;
  Layout kept;
  for (const auto& name : drop) (void)state.reg(name);  // throws on unknown names
  for (const auto& r : state.layout()) {
    const bool dropped = std::find(drop.begin(), drop.end(), r.name) != drop.end();
    auto shifts = detail::register_shifts(state, r.name);
    auto& dest = dropped ? traced_shifts : kept_shifts;
    dest.insert(dest.end(), shifts.begin(), shifts.end());
    if (!dropped) kept.push_back(r);
  }
  if (kept.empty()) throw InvalidState("cannot trace out every register");
  const std::size_t dk = std::size_t{1} << kept_shifts.size();
  const std::size_t dt = std::size_t{1} << traced_shifts.size();
  std::vector<std::size_t> kept_index(dk);
  std::vector<std::size_t> traced_index(dt);
  for (std::size_t i = 0; i < dk; ++i) kept_index[i] = detail::scatter(i, kept_shifts);
  for (std::size_t t = 0; t < dt; ++t) traced_index[t] = detail::scatter(t, traced_shifts);

  const Matrix& m = state.matrix();
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dk));
  for (std::size_t i = 0; i < dk; ++i) {
    for (std::size_t j = 0; j < dk; ++j) {
      Complex acc = 0.0;
      for (std::size_t t = 0; t < dt; ++t) {
        acc += m(static_cast<Eigen::Index>(kept_index[i] | traced_index[t]),
                 static_cast<Eigen::Index>(kept_index[j] | traced_index[t]));
      }
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = acc;
    }
  }
  return DensityMatrix::unchecked(std::move(out), std::move(kept));
}

inline DensityMatrix partial_trace(const DensityMatrix& state, const std::string& drop) {
  return partial_trace(state, std::span<const std::string>(&drop, 1));
}

/// Reorders registers; `order` must name every register exactly once.
inline DensityMatrix permute_registers(const DensityMatrix& state,
                                       std::span<const std::string> order) {
  if (order.size() != state.layout().size()) {
    throw UnknownRegister("register permutation must name every register once");
  }
  Layout layout;
  std::vector<int> source_shifts;  // for each new qubit (msb first), its old shift
  for (const auto& name : order) {
    const Register& r = state.reg(name);
    if (std::find(layout.begin(), layout.end(), r) != layout.end()) {
      throw UnknownRegister("register '" + name + "' named twice in permutation");
    }
    layout.push_back(r);
    auto shifts = detail::register_shifts(state, name);
    source_shifts.insert(source_shifts.end(), shifts.begin(), shifts.end());
  }
  const std::size_t dim = state.dim();
  std::vector<std::size_t> source(dim);
  for (std::size_t i = 0; i < dim; ++i) source[i] = detail::scatter(i, source_shifts);
  const Matrix& m = state.matrix();
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          m(static_cast<Eigen::Index>(source[i]), static_cast<Eigen::Index>(source[j]));
    }
  }
  return DensityMatrix::unchecked(std::move(out), std::move(layout));
}

/// Reduced state on `keep`, in the order given.
inline DensityMatrix reduce_to(const DensityMatrix& state, std::span<const std::string> keep) {
  std::vector<std::string> drop;
  for (const auto& r : state.layout()) {
    if (std::find(keep.begin(), keep.end(), r.name) == keep.end()) drop.push_back(r.name);
  }
  return permute_registers(partial_trace(state, drop), keep);
}

inline std::vector<std::string> register_names(const DensityMatrix& state) {
  std::vector<std::string> names;
  for (const auto& r : state.layout()) names.push_back(r.name);
  return names;
}

/// |0…0⟩⟨0…0| on `reg` tensored with the rest of `state`, keeping the
/// original register order.
inline DensityMatrix replace_with_zero(const DensityMatrix& state, const std::string& reg) {
  const int q = state.reg(reg).qubits;
  const auto zero = DensityMatrix::basis(BitString::zeros(static_cast<std::size_t>(q)), reg);
  if (state.layout().size() == 1) return zero;
  const auto names = register_names(state);
  return permute_registers(tensor(zero, partial_trace(state, reg)), names);
}

/// True if `reg` is block diagonal in its computational basis, i.e. it holds
/// classical information that may be correlated with the rest only classically.
inline bool is_classical_register(const DensityMatrix& state, std::string_view reg,
                                  double tol = kTolPsd) {
  const auto shifts = detail::register_shifts(state, reg);
  const Matrix& m = state.matrix();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (detail::gather(static_cast<std::size_t>(i), shifts) !=
              detail::gather(static_cast<std::size_t>(j), shifts) &&
          std::abs(m(i, j)) > tol) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace qenc
