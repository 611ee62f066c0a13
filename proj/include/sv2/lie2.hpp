#pragma once

#include "sv2/algebra.hpp"

namespace sv2 {

/// Bracket tensor ([e_i, e_j] = sum_l B[i][j][l] e_l, flat index
/// (i * n + j) * n + l) and a differential.
class LieAlgebra {
public:
	LieAlgebra(const Field &f, std::size_t n, std::vector<FieldElem> bracket, Matrix dmat,
	           std::vector<std::string> labels = {});

	const Field &field() const { return *f_; }
	std::size_t dim() const { return n_; }
	const Matrix &dmat() const { return d_; }
	const std::vector<std::string> &labels() const { return labels_; }
	const std::string &label(std::size_t i) const { return labels_.at(i); }
	const std::vector<FieldElem> &tensor() const { return b_; }
	const FieldElem &coeff(std::size_t i, std::size_t j, std::size_t l) const
	{
		return b_[(i * n_ + j) * n_ + l];
	}

	Vec basis(std::size_t i) const { return unit_vec(*f_, n_, i); }
	Vec zero() const { return zero_vec(*f_, n_); }
	Vec bracket_basis(std::size_t i, std::size_t j) const;
	Vec bracket(const Vec &x, const Vec &y) const;
	Vec d(const Vec &x) const;
	/// column j is [x, e_j]
	Matrix ad_matrix(const Vec &x) const;

	bool operator==(const LieAlgebra &o) const;

private:
	const Field *f_;
	std::size_t n_;
	std::vector<FieldElem> b_;
	Matrix d_;
	std::vector<std::string> labels_;
};

/// The four axioms: d a derivation of the bracket and twisted antisymmetry
/// on basis pairs, the Jacobi identity on basis triples, [x,x] = 0 on a
/// basis of Ker(d); plus d^2 = 0.
AxiomReport verify_lie(const LieAlgebra &l);

/// The expanded seven-term Jacobi identity on basis triples.
AxiomReport jacobi_seven_term_check(const LieAlgebra &l);

/// ad_x ad_y + ad_y ad_x + ad_dy ad_dx = ad_[x,y] as matrices.
bool ad_identity_holds(const LieAlgebra &l, const Vec &x, const Vec &y);

/// [x,y] = xy + yx + d(y)d(x) on an associative algebra.
LieAlgebra commutator_lie(const Algebra &a);

/// End(V) for V of dimension m with differential dV, d(X) = dV X + X dV.
/// Basis: the identity, then E_ij for (i,j) != (0,0). BadDifferential
/// unless dV^2 = 0.
Algebra gl_object(std::size_t m, const Matrix &dv);

/// Two dimensions, d = 0, [x,x] = y and every other bracket zero: passes
/// the first three axioms but not [x,x] = 0 on Ker(d).
LieAlgebra axiom4_counterexample(const Field &f);

} // namespace sv2
