#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "curvforge/rational.hpp"

namespace curvforge {

/// Coordinates of a vector in the fixed ambient basis.
class Vector {
 public:
  Vector() = default;
  Vector(std::initializer_list<Rational> coords) : coords_(coords) {}
  explicit Vector(std::vector<Rational> coords) : coords_(std::move(coords)) {}

  static Vector zero(std::size_t n) { return Vector(std::vector<Rational>(n)); }
  static Vector basis(std::size_t n, std::size_t i);

  std::size_t size() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Rational> coords() const { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_zero() const;

  Vector& operator+=(const Vector& other);
  Vector& operator-=(const Vector& other);
  Vector& operator*=(const Rational& s);

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<Rational> coords_;
};

Vector operator+(Vector a, const Vector& b);
Vector operator-(Vector a, const Vector& b);
Vector operator-(Vector a);
Vector operator*(const Rational& s, Vector v);

/// Euclidean coordinate dot product (no metric).
Rational dot(const Vector& a, const Vector& b);

/// Dense row-major rational matrix. Endomorphisms act on column vectors.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix diagonal(std::span<const Rational> entries);
  static Matrix from_columns(std::span<const Vector> columns);
  /// a·bᵀ
  static Matrix outer(const Vector& a, const Vector& b);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  Vector column(std::size_t j) const;
  Vector row(std::size_t i) const;
  Matrix transpose() const;
  Rational trace() const;
  bool is_zero() const;
  bool is_symmetric() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Rational& s);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Rational& s, Matrix m);
Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& v);

/// An n×n matrix is an endomorphism of the coordinate space.
using Endomorphism = Matrix;

Rational determinant(const Matrix& a);
std::size_t rank(const Matrix& a);

/// Exact inverse; throws PreconditionError if singular.
Matrix inverse(const Matrix& a);

/// Basis of ker(a), one vector per free column of the reduced row echelon
/// form, free variable set to 1. Deterministic.
std::vector<Vector> nullspace(const Matrix& a);

/// Solves a·x = b; nullopt if inconsistent. Free variables are set to 0.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// Scales v by a positive rational so that its coordinates are coprime
/// integers. Zero stays zero.
Vector primitive(const Vector& v);

}  // namespace curvforge
