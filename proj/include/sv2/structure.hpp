#pragma once

#include <vector>

#include "sv2/ideal.hpp"

namespace sv2 {

/// Ker(d) as an algebra in its own right, on a basis with 1 first; `basis`
/// holds those vectors in ambient coordinates.
struct KernelAlgebra {
	Algebra algebra;
	std::vector<Vec> basis;
};
KernelAlgebra kernel_algebra(const Algebra &a);

/// Nilpotent elements of a commutative algebra. The squaring map is
/// additive but only Frobenius-semilinear, so ker(x -> x^(2^t)) is the
/// inverse Frobenius twist of the kernel of the matrix whose columns are
/// the e_i^(2^t).
Subspace nilradical_commutative(const Algebra &k);

/// Complete orthogonal primitive idempotents of a commutative algebra.
/// NonSplit when some minimal polynomial has no full set of roots.
std::vector<Vec> primitive_idempotents(const Algebra &k);

struct Character {
	AlgebraPtr ambient;
	/// lambda(e_i) for each basis vector
	Vec functional;

	FieldElem operator()(const Vec &x) const;
};

/// One character per maximal ideal, lambda(x) = sqrt(lambda_K(x^2)), each
/// checked to be unital, multiplicative and to kill Im(d).
std::vector<Character> characters(const AlgebraPtr &a);

std::vector<DIdeal> maximal_ideals(const AlgebraPtr &a);
DIdeal jacobson_radical(const AlgebraPtr &a);
bool is_local(const AlgebraPtr &a);

struct Factor {
	AlgebraPtr algebra;
	/// x -> e x
	Morphism projection;
};

struct Decomposition {
	std::vector<Vec> idempotents;
	std::vector<Factor> factors;
	/// A -> product of the factors, verified bijective
	Morphism iso;
};

Decomposition decompose(const AlgebraPtr &a);

struct DefectOneBasis {
	std::vector<Vec> v;
	std::vector<Vec> w;
};

/// For defect 1: v spans Im(d), d(w_i) = v_i, v_i^2 = w_i^4 = 0. WrongDefect
/// otherwise.
DefectOneBasis defect_one_basis(const Algebra &a);

} // namespace sv2
