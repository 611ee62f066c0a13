#include "doctest.h"

#include "corpus.hpp"
#include "sv2/dim7.hpp"
#include "sv2/structure.hpp"

using namespace sv2;

namespace {

// two-sided and d-closed, checked directly on bases
bool is_two_sided_d_ideal(const DIdeal &i)
{
	const Algebra &a = *i.ambient();
	for (const Vec &v : i.space().basis()) {
		if (!i.contains(a.d(v)))
			return false;
		for (std::size_t j = 0; j < a.dim(); ++j)
			if (!i.contains(a.mul(a.basis(j), v)) || !i.contains(a.mul(v, a.basis(j))))
				return false;
	}
	return true;
}

std::vector<AlgebraPtr> ambients()
{
	std::vector<AlgebraPtr> out;
	for (const Algebra &a : corpus::small_corpus())
		out.push_back(share(a));
	for (const Algebra &a : corpus::noncommutative_corpus())
		out.push_back(share(a));
	return out;
}

} // namespace

TEST_CASE("ideal laws on random pairs")
{
	const auto all = ambients();
	std::mt19937_64 rng(404);
	std::size_t coprime = 0;
	for (int t = 0; t < 200; ++t) {
		const AlgebraPtr &a = all[rng() % all.size()];
		const DIdeal i = corpus::random_ideal(a, rng), j = corpus::random_ideal(a, rng);
		CHECK(is_two_sided_d_ideal(i));
		CHECK(is_two_sided_d_ideal(j));
		const DIdeal ij = ideal_product(i, j), ji = ideal_product(j, i);
		CHECK(ij == ji);
		CHECK(is_two_sided_d_ideal(ij));
		const DIdeal cap = ideal_intersect(i, j), sum = ideal_sum(i, j);
		CHECK(cap.space().contains(ij.space()));
		CHECK(sum.dim() + cap.dim() == i.dim() + j.dim());
		if (is_coprime(i, j)) {
			++coprime;
			CHECK(ij == cap);
		}
	}
	CHECK(coprime > 0);
}

TEST_CASE("coprime pairs in a split algebra")
{
	const AlgebraPtr a = share(corpus::split(Field::gf(1), 4));
	const auto maxes = maximal_ideals(a);
	REQUIRE(maxes.size() == 4);
	for (std::size_t i = 0; i < 4; ++i)
		for (std::size_t j = i + 1; j < 4; ++j) {
			CHECK(is_coprime(maxes[i], maxes[j]));
			CHECK(ideal_product(maxes[i], maxes[j]) == ideal_intersect(maxes[i], maxes[j]));
		}
}

TEST_CASE("powers and nilpotency")
{
	const AlgebraPtr t = share(corpus::truncated(Field::gf(2), 5));
	const DIdeal m = close(t, {t->basis(1)});
	CHECK(m.dim() == 4);
	CHECK(ideal_power(m, 0) == DIdeal::whole(t));
	CHECK(ideal_power(m, 2).dim() == 3);
	CHECK(nilpotency_index(m) == 5u);
	CHECK(nilpotency_index(DIdeal::whole(t)) == std::nullopt);
	CHECK(nilpotency_index(DIdeal::zero(t)) == 1u);

	const Field &f = Field::gf(1);
	const AlgebraPtr d = make_D(f.zero(), f.zero(), f.zero()).algebra;
	const DIdeal j = jacobson_radical(d);
	CHECK(j.dim() == 6);
	const auto m7 = nilpotency_index(j);
	REQUIRE(m7);
	CHECK(*m7 <= 7);
}

TEST_CASE("closure and its errors")
{
	const Field &f = Field::gf(1);
	const AlgebraPtr d = make_D(f.zero(), f.zero(), f.zero()).algebra;
	// x1 generates x1, xi1, xi1*x2, xi1*xi2 (x2 x1 = xi1 xi2)
	const DIdeal i = close(d, {d->basis(*d->index_of("x1"))});
	CHECK(is_two_sided_d_ideal(i));
	CHECK(i.dim() == 4);
	CHECK_THROWS_AS(DIdeal(d, Subspace(f, 7, {d->basis(*d->index_of("x1"))})), NotDIdeal);
	CHECK(d_ideal_defect(*d, Subspace(f, 7, {d->basis(*d->index_of("x1"))})));
	CHECK_FALSE(d_ideal_defect(*d, i.space()));

	const AlgebraPtr other = share(corpus::truncated(f, 7));
	CHECK_THROWS_AS(ideal_sum(i, DIdeal::zero(other)), AmbientMismatch);
	CHECK(close(d, {d->one()}) == DIdeal::whole(d));
}
