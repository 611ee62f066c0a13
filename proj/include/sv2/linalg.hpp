#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sv2/field.hpp"

namespace sv2 {

/// Coordinate vector. All entries share one field.
using Vec = std::vector<FieldElem>;

Vec zero_vec(const Field &f, std::size_t n);
Vec unit_vec(const Field &f, std::size_t n, std::size_t i);
bool is_zero(const Vec &v);

Vec operator+(const Vec &a, const Vec &b);
Vec &operator+=(Vec &a, const Vec &b);
Vec operator*(const FieldElem &s, const Vec &v);
/// a += s * b
void axpy(Vec &a, const FieldElem &s, const Vec &b);

std::string to_hex(const Vec &v);

class Matrix {
public:
	Matrix(const Field &f, std::size_t rows, std::size_t cols);

	static Matrix identity(const Field &f, std::size_t n);
	static Matrix from_rows(const Field &f, std::size_t cols,
	                        const std::vector<Vec> &rows);
	static Matrix from_columns(const Field &f, std::size_t rows,
	                           const std::vector<Vec> &cols);

	const Field &field() const { return *f_; }
	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }

	FieldElem &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
	const FieldElem &operator()(std::size_t r, std::size_t c) const
	{
		return data_[r * cols_ + c];
	}

	Vec row(std::size_t r) const;
	Vec column(std::size_t c) const;
	std::vector<Vec> row_list() const;
	std::vector<Vec> column_list() const;

	Matrix transpose() const;
	Vec apply(const Vec &v) const;
	Matrix operator*(const Matrix &o) const;
	Matrix operator+(const Matrix &o) const;
	bool operator==(const Matrix &o) const;
	bool is_zero() const;

	/// Entrywise image under a field embedding.
	Matrix base_change(const Embedding &e) const;

private:
	const Field *f_;
	std::size_t rows_;
	std::size_t cols_;
	std::vector<FieldElem> data_;
};

struct Echelon {
	Matrix reduced;
	std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form by Gauss-Jordan elimination.
Echelon rref(const Matrix &m);
std::size_t rank(const Matrix &m);
/// Basis of {x : m x = 0}, one vector per free column.
std::vector<Vec> nullspace(const Matrix &m);
/// Some x with m x = b (free variables zero), or nothing.
std::optional<Vec> try_solve(const Matrix &m, const Vec &b);
/// As try_solve; throws Inconsistent.
Vec solve(const Matrix &m, const Vec &b);
/// Throws Inconsistent when singular.
Matrix inverse(const Matrix &m);

/// A subspace of F^n held as a reduced row-echelon basis.
class Subspace {
public:
	Subspace(const Field &f, std::size_t ambient);
	Subspace(const Field &f, std::size_t ambient, const std::vector<Vec> &spanning);

	static Subspace whole(const Field &f, std::size_t ambient);

	const Field &field() const { return *f_; }
	std::size_t ambient_dim() const { return ambient_; }
	std::size_t dim() const { return basis_.size(); }
	const std::vector<Vec> &basis() const { return basis_; }
	const std::vector<std::size_t> &pivots() const { return pivots_; }
	Matrix basis_matrix() const;

	bool contains(const Vec &v) const;
	bool contains(const Subspace &o) const;
	bool operator==(const Subspace &o) const;

	/// Coordinates of v in basis(); nothing when v is outside.
	std::optional<Vec> coords(const Vec &v) const;
	/// v minus its component along the basis, zero exactly when v is inside.
	Vec reduce(const Vec &v) const;

	Subspace sum(const Subspace &o) const;
	/// Zassenhaus construction.
	Subspace intersect(const Subspace &o) const;
	Subspace with(const Vec &v) const;

	/// Standard basis vectors, in index order, that complete basis() to the
	/// whole ambient space; representatives of a quotient basis.
	std::vector<Vec> quotient_basis() const;
	/// Greedily appends to `seed` (assumed independent modulo this space) the
	/// vectors of `candidates` that keep the family independent modulo this
	/// space.
	std::vector<Vec> extend_basis(std::vector<Vec> seed,
	                              const std::vector<Vec> &candidates) const;

private:
	const Field *f_;
	std::size_t ambient_;
	std::vector<Vec> basis_;
	std::vector<std::size_t> pivots_;
};

/// Coordinates with respect to a chosen basis of a subspace, modulo a smaller
/// subspace: v = sum_i c_i reps_i + w with w in `modulo`.
class QuotientCoords {
public:
	QuotientCoords(std::vector<Vec> reps, const Subspace &modulo);

	std::size_t dim() const { return reps_.size(); }
	const std::vector<Vec> &reps() const { return reps_; }
	/// Throws Inconsistent when v is outside span(reps) + modulo.
	Vec operator()(const Vec &v) const;
	std::optional<Vec> try_coords(const Vec &v) const;

private:
	std::vector<Vec> reps_;
	std::size_t modulo_dim_;
	Matrix system_;
};

} // namespace sv2
