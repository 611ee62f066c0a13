#include "doctest.h"

#include "corpus.hpp"
#include "sv2/dim7.hpp"
#include "sv2/structure.hpp"

using namespace sv2;

TEST_CASE("D(0,0,0) x F[t]/(t^3) splits into two local factors")
{
	const Field &f = Field::gf(1);
	const Algebra d0 = *make_D(f.zero(), f.zero(), f.zero()).algebra;
	const AlgebraPtr a = share(direct_product(d0, corpus::truncated(f, 3)));
	CHECK(defect(*a) == 4);
	const Decomposition dec = decompose(a);
	REQUIRE(dec.factors.size() == 2);

	std::vector<std::size_t> defects;
	Vec sum = a->zero();
	for (std::size_t i = 0; i < 2; ++i) {
		const Vec &e = dec.idempotents[i];
		sum += e;
		CHECK(a->mul(e, e) == e);
		CHECK(is_zero(a->d(e)));
		for (std::size_t j = 0; j < a->dim(); ++j)
			CHECK(a->mul(e, a->basis(j)) == a->mul(a->basis(j), e));
		for (std::size_t j = 0; j < 2; ++j)
			if (j != i)
				CHECK(is_zero(a->mul(e, dec.idempotents[j])));
		const AlgebraPtr &fa = dec.factors[i].algebra;
		CHECK(verify_axioms(*fa).passed());
		CHECK(is_local(fa));
		defects.push_back(defect(*fa));
		const auto m = nilpotency_index(jacobson_radical(fa));
		REQUIRE(m);
		CHECK(*m <= 7);
		CHECK(verify_morphism(dec.factors[i].projection, false).passed());
	}
	CHECK(sum == a->one());
	std::sort(defects.begin(), defects.end());
	CHECK(defects == std::vector<std::size_t>{1, 3});
	CHECK(verify_morphism(dec.iso).passed());
}

TEST_CASE("split algebras: idempotents, characters, maximal ideals")
{
	for (int k : {1, 3}) {
		const Field &f = Field::gf(k);
		for (std::size_t m = 1; m <= 4; ++m) {
			const AlgebraPtr a = share(corpus::split(f, m));
			CHECK(primitive_idempotents(*a).size() == m);
			const auto chars = characters(a);
			CHECK(chars.size() == m);
			for (const Character &c : chars)
				CHECK(c(a->one()) == f.one());
			CHECK(maximal_ideals(a).size() == m);
			CHECK(is_local(a) == (m == 1));
			CHECK(decompose(a).factors.size() == m);
		}
	}
}

TEST_CASE("nilradical and kernel algebra")
{
	const Field &f = Field::gf(4);
	for (std::size_t n = 1; n <= 6; ++n)
		CHECK(nilradical_commutative(corpus::truncated(f, n)).dim() == n - 1);
	CHECK(nilradical_commutative(corpus::split(f, 3)).dim() == 0);
	CHECK_THROWS_AS(nilradical_commutative(*make_D(f.zero(), f.zero(), f.zero()).algebra),
	                NotCommutative);

	const Algebra d0 = *make_D(f.zero(), f.zero(), f.zero()).algebra;
	const KernelAlgebra k = kernel_algebra(d0);
	CHECK(k.algebra.dim() == 4);
	CHECK(is_commutative(k.algebra));
	CHECK(k.basis[0] == d0.one());
}

TEST_CASE("characters are checked against the defining properties")
{
	std::mt19937_64 rng(6);
	for (const Algebra &a : corpus::small_corpus()) {
		const AlgebraPtr ap = share(a);
		std::vector<Character> chars;
		try {
			chars = characters(ap);
		} catch (const NonSplit &) {
			continue;
		}
		CHECK(maximal_ideals(ap).size() == chars.size());
		for (const Character &c : chars) {
			CHECK(c(a.one()) == a.field().one());
			for (int t = 0; t < 5; ++t) {
				const Vec x = corpus::random_vec(a.field(), a.dim(), rng),
				          y = corpus::random_vec(a.field(), a.dim(), rng);
				CHECK(c(a.mul(x, y)) == c(x) * c(y));
				CHECK(c(a.d(x)).is_zero());
			}
		}
	}
}

TEST_CASE("non-split residue fields are reported")
{
	const Algebra a = corpus::presented(Field::gf(1), "P(0,1)/[y1^2 + y1 + 1] @ deg 2");
	CHECK_THROWS_AS(maximal_ideals(share(a)), NonSplit);
	const Algebra b = corpus::presented(Field::gf(2), "P(0,1)/[y1^2 + y1 + 1] @ deg 2");
	CHECK(decompose(share(b)).factors.size() == 2);
}

TEST_CASE("defect one bases")
{
	const auto all = corpus::defect_one_corpus();
	CHECK(all.size() == 20);
	for (const Algebra &a : all) {
		REQUIRE(defect(a) == 1);
		const DefectOneBasis b = defect_one_basis(a);
		CHECK(b.v.size() == im_d(a).dim());
		CHECK(b.w.size() == b.v.size());
		std::vector<Vec> all_vecs{a.one()};
		for (std::size_t i = 0; i < b.v.size(); ++i) {
			CHECK(a.d(b.w[i]) == b.v[i]);
			CHECK(is_zero(a.mul(b.v[i], b.v[i])));
			CHECK(is_zero(a.power(b.w[i], 4)));
			all_vecs.push_back(b.v[i]);
			all_vecs.push_back(b.w[i]);
		}
		CHECK(Subspace(a.field(), a.dim(), all_vecs).dim() == 1 + 2 * b.v.size());
	}
	CHECK_THROWS_AS(defect_one_basis(corpus::truncated(Field::gf(1), 3)), WrongDefect);
}
