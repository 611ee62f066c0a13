#include "doctest.h"

#include "corpus.hpp"
#include "sv2/dim7.hpp"
#include "sv2/io.hpp"

using namespace sv2;

namespace {

const char *d0_text = "P(2,0)/[x1^2, x2^2, x1*x2, xi1*x1, xi2*x2, xi1*x2 + xi2*x1] @ deg 4";

Vec lab(const Algebra &a, const std::string &l) { return a.basis(*a.index_of(l)); }

} // namespace

TEST_CASE("D(0,0,0) from its presentation")
{
	const Field &f = Field::gf(1);
	const Algebra a = corpus::presented(f, d0_text);
	REQUIRE(a.dim() == 7);
	CHECK(a.labels() ==
	      std::vector<std::string>{"1", "xi1", "xi2", "xi1*xi2", "x1", "x2", "xi1*x2"});
	CHECK(verify_axioms(a).passed());

	const auto w = noncommuting_pair(a);
	REQUIRE(w);
	CHECK(a.label(w->first) == "x1");
	CHECK(a.label(w->second) == "x2");
	const Vec x1 = lab(a, "x1"), x2 = lab(a, "x2");
	CHECK(is_zero(a.mul(x1, x2)));
	CHECK(a.mul(x2, x1) == lab(a, "xi1*xi2"));

	CHECK(im_d(a).dim() == 3);
	CHECK(ker_d(a).dim() == 4);
	CHECK(defect(a) == 1);
	CHECK(homology(a).algebra.dim() == 1);
	CHECK(lemma_suite(a).passed());
	CHECK(small_dim_commutativity_check(a).passed());
}

TEST_CASE("the small corpus is commutative")
{
	const auto all = corpus::small_corpus();
	CHECK(all.size() >= 50);
	for (const Algebra &a : all) {
		CAPTURE(a.dim());
		CHECK(a.dim() <= 6);
		CHECK(verify_axioms(a).passed());
		CHECK(is_commutative(a));
		CHECK(small_dim_commutativity_check(a).passed());
		CHECK(lemma_suite(a).passed());
		// Ker contains Im, the unit is never a boundary
		CHECK(ker_d(a).contains(im_d(a)));
		CHECK_FALSE(im_d(a).contains(a.one()));
		CHECK(homology(a).algebra.dim() == defect(a));
	}
}

TEST_CASE("noncommutative examples carry the independent triple")
{
	for (const Algebra &a : corpus::noncommutative_corpus()) {
		CHECK(verify_axioms(a).passed());
		const auto w = noncommuting_pair(a);
		REQUIRE(w);
		CHECK(im_d(a).dim() >= 3);
		const Vec da = a.d_basis(w->first), db = a.d_basis(w->second);
		const Subspace tri(a.field(), a.dim(), {da, db, a.mul(da, db)});
		CHECK(tri.dim() == 3);
		CHECK(lemma_suite(a).passed());
	}
}

TEST_CASE("broken structure constants are caught")
{
	const Field &f = Field::gf(1);
	const Algebra a = corpus::presented(f, d0_text);
	// drop x2 x1 = xi1 xi2
	std::vector<FieldElem> t = a.tensor();
	const std::size_t n = a.dim(), i = *a.index_of("x2"), j = *a.index_of("x1");
	t[(i * n + j) * n + *a.index_of("xi1*xi2")] = f.zero();
	const Algebra bad(f, n, t, a.dmat(), a.labels());
	const AxiomReport r = verify_axioms(bad);
	CHECK_FALSE(r.passed());
	CHECK(verify_axioms(a, AxiomSet::associative).passed());

	// d with d^2 != 0
	Matrix d(f, 2, 2);
	d(1, 1) = f.one();
	const Algebra dual = corpus::presented(f, "P(0,1)/[y1^2] @ deg 2");
	CHECK_FALSE(verify_axioms(Algebra(f, 2, dual.tensor(), d)).passed());
}

TEST_CASE("products and quotients")
{
	const Field &f = Field::gf(2);
	const Algebra d0 = *make_D(f.zero(), f.zero(), f.zero()).algebra;
	const Algebra t3 = corpus::truncated(f, 3);
	const Algebra p = direct_product(d0, t3);
	CHECK(p.dim() == 10);
	CHECK(verify_axioms(p).passed());
	CHECK(defect(p) == defect(d0) + defect(t3));
	CHECK(p.label(1) == "a.xi1");

	const AlgebraPtr dp = share(d0);
	// the ideal generated by x2 kills x2, xi2 and everything above
	const DIdeal i = close(dp, {lab(d0, "x2")});
	const QuotientAlgebra q = quotient(dp, i.space());
	CHECK(q.algebra->dim() == d0.dim() - i.dim());
	CHECK(verify_axioms(*q.algebra).passed());
	CHECK(verify_morphism(q.projection, false).passed());
	CHECK(is_commutative(*q.algebra));
	CHECK_THROWS_AS(quotient(dp, Subspace::whole(f, 7)), NotDIdeal);
	CHECK_THROWS_AS(quotient(dp, Subspace(f, 7, {lab(d0, "x1")})), NotDIdeal);
}

TEST_CASE("morphisms compose and invert")
{
	const Field &f = Field::gf(3);
	std::mt19937_64 rng(5);
	const AlgebraPtr a = make_D(corpus::random_elem(f, rng), corpus::random_elem(f, rng),
	                            corpus::random_elem(f, rng))
	                         .algebra;
	const Morphism id = identity_morphism(a);
	CHECK(verify_morphism(id).passed());
	CHECK(verify_morphism(compose(id, id)).passed());
	CHECK(invert(id).mat == id.mat);
	// a linear map that is not multiplicative
	Morphism bad = id;
	bad.mat(4, 4) = f.elem(2);
	bad.mat(1, 1) = f.elem(2);
	CHECK_FALSE(verify_morphism(bad).passed());
}

TEST_CASE("change of basis keeps the invariants")
{
	std::mt19937_64 rng(11);
	for (const Algebra &a : corpus::noncommutative_corpus()) {
		const Field &f = a.field();
		const std::size_t n = a.dim();
		std::vector<Vec> basis{a.one()};
		Subspace s(f, n, basis);
		while (basis.size() < n) {
			const Vec v = corpus::random_vec(f, n, rng);
			if (!s.contains(v)) {
				basis.push_back(v);
				s = s.with(v);
			}
		}
		const Algebra b = on_basis(a, basis);
		CHECK(verify_axioms(b).passed());
		CHECK(defect(b) == defect(a));
		CHECK(center(b).dim() == center(a).dim());
		CHECK_FALSE(is_commutative(b));
	}
}

TEST_CASE("homology of a truncated polynomial with d = 0")
{
	const Algebra t = corpus::truncated(Field::gf(1), 4);
	const Homology h = homology(t);
	CHECK(h.algebra.dim() == 4);
	CHECK(verify_axioms(h.algebra).passed());
	CHECK(h.project(t.basis(2)) == h.algebra.basis(2));
}
