#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sv2/linalg.hpp"

namespace sv2 {

/// A finite-dimensional algebra object in sVec2: a structure tensor
/// (e_i e_j = sum_l T[i][j][l] e_l) together with a differential d.
///
/// The same representation serves associative algebras and d-algebras; which
/// one a value is depends on the axiom set it was verified against. By
/// convention basis index 0 is the unit.
class Algebra {
public:
	/// `tensor` is flat with index (i * n + j) * n + l. `dmat` acts on
	/// column coordinate vectors, so column j is d(e_j).
	Algebra(const Field &f, std::size_t n, std::vector<FieldElem> tensor, Matrix dmat,
	        std::vector<std::string> labels = {});

	const Field &field() const { return *f_; }
	std::size_t dim() const { return n_; }
	const Matrix &dmat() const { return d_; }
	const std::vector<std::string> &labels() const { return labels_; }
	const std::string &label(std::size_t i) const { return labels_.at(i); }
	/// Index of a basis label; nothing when absent.
	std::optional<std::size_t> index_of(const std::string &label) const;

	const FieldElem &coeff(std::size_t i, std::size_t j, std::size_t l) const
	{
		return t_[(i * n_ + j) * n_ + l];
	}
	const std::vector<FieldElem> &tensor() const { return t_; }

	Vec basis(std::size_t i) const { return unit_vec(*f_, n_, i); }
	Vec one() const { return basis(0); }
	Vec zero() const { return zero_vec(*f_, n_); }

	/// e_i e_j
	Vec product(std::size_t i, std::size_t j) const;
	Vec mul(const Vec &a, const Vec &b) const;
	Vec d(const Vec &a) const { return d_.apply(check(a)); }
	Vec d_basis(std::size_t j) const { return d_.column(j); }
	Vec power(const Vec &a, std::size_t e) const;

	/// Left multiplication by a as a matrix.
	Matrix left_mul(const Vec &a) const;

	Algebra with_labels(std::vector<std::string> labels) const;
	Algebra base_change(const Embedding &e) const;

	bool operator==(const Algebra &o) const;

private:
	const Vec &check(const Vec &a) const;

	const Field *f_;
	std::size_t n_;
	std::vector<FieldElem> t_;
	Matrix d_;
	std::vector<std::string> labels_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

inline AlgebraPtr share(Algebra a) { return std::make_shared<const Algebra>(std::move(a)); }

/// The algebra restricted to the span of `basis`, expressed in that basis.
/// The span must be closed under multiplication and d (Inconsistent
/// otherwise). A full basis gives a change of coordinates; a partial one
/// gives a subalgebra, whose unit should be listed first.
Algebra on_basis(const Algebra &a, const std::vector<Vec> &basis,
                 std::vector<std::string> labels = {});

struct AxiomFailure {
	std::string axiom;
	std::vector<std::size_t> witness;
	Vec lhs;
	Vec rhs;
};

struct AxiomReport {
	std::vector<AxiomFailure> failures;
	std::vector<std::string> notes;
	std::size_t checks = 0;

	bool passed() const { return failures.empty(); }
	void fail(std::string axiom, std::vector<std::size_t> witness, Vec lhs, Vec rhs)
	{
		failures.push_back({std::move(axiom), std::move(witness), std::move(lhs),
		                    std::move(rhs)});
	}
	/// Records one comparison; files a failure when the sides differ.
	bool expect(const std::string &axiom, std::vector<std::size_t> witness,
	            const Vec &lhs, const Vec &rhs);
	void merge(const AxiomReport &o);
	std::string summary() const;
};

enum class AxiomSet { associative, dalgebra };

/// Unit laws, associativity on basis triples, d^2 = 0, Leibniz on basis
/// pairs, and for d-algebras ab = ba + d(b)d(a) on basis pairs.
AxiomReport verify_axioms(const Algebra &a, AxiomSet set = AxiomSet::dalgebra);

/// A basis pair (i, j) with e_i e_j != e_j e_i.
std::optional<std::pair<std::size_t, std::size_t>> noncommuting_pair(const Algebra &a);
inline bool is_commutative(const Algebra &a) { return !noncommuting_pair(a); }

Subspace ker_d(const Algebra &a);
Subspace im_d(const Algebra &a);
Subspace center(const Algebra &a);

/// d(e_i)^2 = 0 for every i, and independence of {d(a), d(b), d(a)d(b)} for
/// a noncommuting basis pair when one exists.
AxiomReport lemma_suite(const Algebra &a);

/// The implications dim Im(d) <= 2 => commutative and dim A <= 6 =>
/// commutative, plus dim Im(d) < dim Ker(d); violations are reported.
AxiomReport small_dim_commutativity_check(const Algebra &a);

struct Homology {
	Algebra algebra;
	Subspace ker;
	Subspace im;
	QuotientCoords coords;

	/// Class in H of an element of Ker(d).
	Vec project(const Vec &v) const { return coords(v); }
};

/// H = Ker(d)/Im(d) with the induced multiplication and zero differential.
Homology homology(const Algebra &a);
/// dim A - 2 dim Im(d)
std::size_t defect(const Algebra &a);

struct Morphism {
	AlgebraPtr source;
	AlgebraPtr target;
	/// Column j is the image of source basis vector j.
	Matrix mat;

	Vec operator()(const Vec &v) const { return mat.apply(v); }
};

/// g after f
Morphism compose(const Morphism &g, const Morphism &f);
/// Throws Inconsistent when the matrix is singular.
Morphism invert(const Morphism &m);
Morphism identity_morphism(const AlgebraPtr &a);

/// Unitality, multiplicativity on basis pairs, d-equivariance, and when
/// requested bijectivity.
AxiomReport verify_morphism(const Morphism &m, bool require_bijective = true);

/// Basis (1,1), then (e_i, 0) for i >= 1, then (0, f_j) for all j.
Algebra direct_product(const Algebra &a, const Algebra &b);

struct QuotientAlgebra {
	AlgebraPtr algebra;
	Morphism projection;
	/// Coset representatives in the ambient algebra, unit first.
	std::vector<Vec> reps;
};

/// A/I for a two-sided d-ideal I (NotDIdeal otherwise).
QuotientAlgebra quotient(const AlgebraPtr &a, const Subspace &ideal);

} // namespace sv2
