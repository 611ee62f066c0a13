#include "doctest.h"

#include "corpus.hpp"
#include "sv2/dim7.hpp"

using namespace sv2;

namespace {

// random basis change keeping the unit first
Algebra scramble(const Algebra &a, std::mt19937_64 &rng)
{
	const Field &f = a.field();
	std::vector<Vec> basis{a.one()};
	Subspace s(f, a.dim(), basis);
	while (basis.size() < a.dim()) {
		const Vec v = corpus::random_vec(f, a.dim(), rng);
		if (!s.contains(v)) {
			basis.push_back(v);
			s = s.with(v);
		}
	}
	return on_basis(a, basis);
}

} // namespace

TEST_CASE("D(h,k,p) is a 7-dimensional d-algebra")
{
	const Field &f = Field::gf(8);
	std::mt19937_64 rng(1);
	for (int t = 0; t < 20; ++t) {
		const PresentedAlgebra d =
		    make_D(corpus::random_elem(f, rng), corpus::random_elem(f, rng),
		           corpus::random_elem(f, rng));
		CHECK(d.algebra->dim() == 7);
		CHECK(verify_axioms(*d.algebra).passed());
		CHECK_FALSE(is_commutative(*d.algebra));
		CHECK(defect(*d.algebra) == 1);
	}
}

TEST_CASE("classify7 on scrambled copies")
{
	const Field &f = Field::gf(4);
	std::mt19937_64 rng(2);
	for (int t = 0; t < 10; ++t) {
		const AlgebraPtr a = share(scramble(
		    *make_D(corpus::random_elem(f, rng), corpus::random_elem(f, rng),
		            corpus::random_elem(f, rng))
		         .algebra,
		    rng));
		const CanonicalForm7 c = classify7(a);
		CHECK(c.dim_im == 3);
		CHECK(c.dim_ker == 4);
		CHECK(c.iso.target == a);
		CHECK(verify_morphism(c.iso).passed());
	}
}

TEST_CASE("normalize7 reaches D(0,0,0) with at most one doubling")
{
	const Field &f = Field::gf(3);
	std::mt19937_64 rng(3);
	int extended = 0;
	for (int t = 0; t < 15; ++t) {
		const AlgebraPtr a = share(scramble(
		    *make_D(corpus::random_elem(f, rng), corpus::random_elem(f, rng),
		            corpus::random_elem(f, rng))
		         .algebra,
		    rng));
		const Normalization n = normalize7(a);
		CHECK(verify_morphism(n.iso).passed());
		const Field &g = n.iso.target->field();
		CHECK(*n.iso.target == *make_D(g.zero(), g.zero(), g.zero()).algebra);
		if (n.extension) {
			++extended;
			CHECK(g.degree() == 2 * f.degree());
		} else {
			CHECK(n.iso.source == a);
		}
	}
	CHECK(extended > 0);
}

TEST_CASE("the individual reduction steps")
{
	const Field &f = Field::gf(8);
	std::mt19937_64 rng(4);
	for (int t = 0; t < 10; ++t) {
		const FieldElem q = corpus::random_elem(f, rng);
		CHECK(verify_morphism(kill_q(q)).passed());
	}
	// h = k = 0 leaves p alone
	const FieldElem p = f.elem(0x5b);
	const QReduction r0 = reduce_to_q(f.zero(), f.zero(), p);
	CHECK(r0.q == p);
	// k = 0, h != 0 goes through the swap D(h,0,p) ~ D(0,h,p+1)
	int reached = 0;
	for (int t = 0; t < 20; ++t) {
		try {
			const QReduction r =
			    reduce_to_q(corpus::random_nonzero(f, rng), f.zero(), corpus::random_elem(f, rng));
			CHECK(verify_morphism(r.iso).passed());
			++reached;
		} catch (const NeedsExtension &) {
		}
	}
	CHECK(reached > 0);
}

TEST_CASE("NeedsExtension exactly when the quadratic has no root")
{
	const Field &f = Field::gf(2);
	for (const FieldElem &h : f.elements())
		for (const FieldElem &k : f.elements()) {
			if (k.is_zero())
				continue;
			bool has_root = false;
			for (const FieldElem &a : f.elements())
				if ((k * a.square() + a + h).is_zero())
					has_root = true;
			if (has_root)
				CHECK_NOTHROW(reduce_to_q(h, k, f.zero()));
			else
				CHECK_THROWS_AS(reduce_to_q(h, k, f.zero()), NeedsExtension);
		}
}

TEST_CASE("classify7 rejects other inputs")
{
	const Field &f = Field::gf(1);
	CHECK_THROWS_AS(classify7(share(corpus::truncated(f, 7))), NotApplicable);
	CHECK_THROWS_AS(classify7(share(corpus::truncated(f, 3))), NotApplicable);
	const Algebra d0 = *make_D(f.zero(), f.zero(), f.zero()).algebra;
	CHECK_THROWS_AS(classify7(share(direct_product(d0, corpus::truncated(f, 2)))),
	                NotApplicable);
}
