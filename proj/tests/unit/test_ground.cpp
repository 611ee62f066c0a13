#include "doctest.h"

#include "corpus.hpp"
#include "sv2/poly.hpp"

using namespace sv2;

namespace {

// schoolbook carry-less product and long-division reduction
uint32_t slow_mul(uint32_t a, uint32_t b, uint32_t mod, int k)
{
	uint64_t p = 0;
	for (int i = 0; i < k; ++i)
		if (b >> i & 1)
			p ^= uint64_t{a} << i;
	for (int i = 2 * k - 2; i >= k; --i)
		if (p >> i & 1)
			p ^= uint64_t{mod} << (i - k);
	return static_cast<uint32_t>(p);
}

} // namespace

TEST_CASE("moduli are irreducible of the right degree")
{
	for (int k = 1; k <= 16; ++k) {
		const uint32_t m = Field::modulus_for(k);
		CHECK((m >> k) == 1);
		CHECK(is_irreducible_gf2(m));
	}
	CHECK_FALSE(is_irreducible_gf2(0x5)); // (t+1)^2
}

TEST_CASE("multiplication matches the schoolbook oracle")
{
	std::mt19937_64 rng(7);
	for (int k = 1; k <= 16; ++k) {
		const Field &f = Field::gf(k);
		for (int s = 0; s < 300; ++s) {
			const auto a = corpus::random_elem(f, rng), b = corpus::random_elem(f, rng);
			CHECK((a * b).bits() == slow_mul(a.bits(), b.bits(), f.modulus(), k));
			CHECK((a + a).is_zero());
			if (!b.is_zero())
				CHECK((a / b) * b == a);
		}
	}
	const Field &f4 = Field::gf(2);
	CHECK(f4.elem(2) * f4.elem(2) == f4.elem(3));
	CHECK(f4.one().inverse() == f4.one());
	CHECK_THROWS_AS(f4.zero().inverse(), DivideByZero);
	CHECK_THROWS_AS(f4.elem(4), DimensionMismatch);
	CHECK_THROWS_AS(f4.one() + Field::gf(3).one(), FieldMismatch);
}

TEST_CASE("square roots")
{
	for (int k = 1; k <= 4; ++k)
		for (const auto &a : Field::gf(k).elements())
			CHECK(a.sqrt().square() == a);
	const Field &f4 = Field::gf(2);
	CHECK(f4.elem(3).sqrt() == f4.elem(2));
	CHECK(f4.zero().sqrt().is_zero());
	CHECK(f4.one().sqrt().is_one());
}

TEST_CASE("quadratic roots")
{
	const Field &f2 = Field::gf(1);
	auto r = quad_roots(f2.one(), f2.one(), f2.zero());
	REQUIRE(r.size() == 2);
	CHECK(r[0].is_zero());
	CHECK(r[1].is_one());
	CHECK_THROWS_AS(quad_roots(f2.one(), f2.one(), f2.one()), NeedsExtension);
	const Field &f = Field::gf(4);
	CHECK(quad_roots(f.zero(), f.one(), f.elem(9)) == std::vector<FieldElem>{f.elem(9)});
	CHECK_THROWS_AS(quad_roots(f.zero(), f.zero(), f.one()), std::invalid_argument);
}

TEST_CASE("hex literals")
{
	CHECK(parse_hex("0x1f") == 0x1f);
	CHECK(parse_hex("A") == 10);
	CHECK_THROWS(parse_hex("0xg"));
	CHECK(to_hex(0x3) == "0x3");
	CHECK(Field::gf(2).elem(3).hex() == "0x3");
}

TEST_CASE("field extension is an injective ring map")
{
	std::mt19937_64 rng(11);
	for (int k = 1; k <= 8; ++k) {
		const Embedding e = field_extend(Field::gf(k));
		CHECK(e.target().degree() == 2 * k);
		CHECK(e(Field::gf(k).zero()).is_zero());
		CHECK(e(Field::gf(k).one()).is_one());
		for (int s = 0; s < 100; ++s) {
			const auto a = corpus::random_elem(Field::gf(k), rng);
			const auto b = corpus::random_elem(Field::gf(k), rng);
			CHECK(e(a + b) == e(a) + e(b));
			CHECK(e(a * b) == e(a) * e(b));
			if (a != b)
				CHECK(e(a) != e(b));
		}
	}
	const Embedding e = field_extend(Field::gf(2));
	const auto g = Field::gf(2).elem(2);
	CHECK(e(g) * e(g) == e(g + Field::gf(2).one()));
	CHECK_THROWS_AS(field_extend(Field::gf(9)), DegreeLimit);
}

TEST_CASE("polynomials")
{
	const Field &f = Field::gf(3);
	const UniPoly t2t(f, {f.zero(), f.one(), f.one()});
	const auto roots = poly_roots(t2t);
	REQUIRE(roots.size() == 2);
	CHECK(roots[0].is_zero());
	CHECK(roots[1].is_one());

	CHECK(min_poly(Matrix::identity(f, 3)) == UniPoly(f, {f.one(), f.one()}));
	Matrix j(f, 2, 2);
	j(0, 1) = f.one();
	CHECK(min_poly(j) == UniPoly::monomial(f, 2, f.one()));
	CHECK(min_poly(j).eval(j).is_zero());

	// (t+1)^3 (t^2+t+1): radical is (t+1)(t^2+t+1)
	const UniPoly a = UniPoly::linear(f.one());
	const UniPoly q(f, {f.one(), f.one(), f.one()});
	CHECK(squarefree_part(a * a * a * q) == (a * q).monic());
	CHECK(squarefree_part(q * q) == q);
	CHECK(poly_gcd(a * q, a * a) == a);
	auto [quo, rem] = (a * q + UniPoly(f, {f.one()})).divmod(q);
	CHECK(quo == a);
	CHECK(rem == UniPoly(f, {f.one()}));
}

TEST_CASE("linear algebra laws on random data")
{
	std::mt19937_64 rng(3);
	const Field &f = Field::gf(2);
	for (int s = 0; s < 200; ++s) {
		const std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
		Matrix m(f, r, c);
		for (std::size_t i = 0; i < r; ++i)
			for (std::size_t j = 0; j < c; ++j)
				m(i, j) = f.elem(rng() % 4 == 0 ? static_cast<uint32_t>(rng() % 4) : 0);
		const auto ns = nullspace(m);
		CHECK(rank(m) + ns.size() == c);
		for (const auto &v : ns)
			CHECK(is_zero(m.apply(v)));
		const Echelon e = rref(m);
		CHECK(rref(e.reduced).reduced == e.reduced);
		const Vec x = corpus::random_vec(f, c, rng);
		const Vec b = m.apply(x);
		CHECK(m.apply(solve(m, b)) == b);
	}
	for (int s = 0; s < 200; ++s) {
		const std::size_t n = 2 + rng() % 6;
		std::vector<Vec> us, ws;
		for (std::size_t i = rng() % n; i > 0; --i)
			us.push_back(corpus::random_vec(f, n, rng));
		for (std::size_t i = rng() % n; i > 0; --i)
			ws.push_back(corpus::random_vec(f, n, rng));
		const Subspace u(f, n, us), w(f, n, ws);
		const Subspace sum = u.sum(w), cap = u.intersect(w);
		CHECK(sum.dim() + cap.dim() == u.dim() + w.dim());
		CHECK(u.contains(cap));
		CHECK(w.contains(cap));
		CHECK(sum.contains(u));
		const auto q = u.quotient_basis();
		CHECK(u.dim() + q.size() == n);
		CHECK(Subspace(f, n, q).sum(u).dim() == n);
	}
	CHECK(nullspace(Matrix::identity(f, 4)).empty());
	Matrix sing(f, 2, 2);
	sing(0, 0) = f.one();
	CHECK_THROWS_AS(solve(sing, Vec{f.zero(), f.one()}), Inconsistent);
	CHECK_THROWS_AS(inverse(sing), Inconsistent);
}

TEST_CASE("quotient coordinates")
{
	const Field &f = Field::gf(1);
	const Subspace mod(f, 3, {unit_vec(f, 3, 2)});
	const QuotientCoords qc({unit_vec(f, 3, 0), unit_vec(f, 3, 1)}, mod);
	const Vec v{f.one(), f.one(), f.one()};
	CHECK(qc(v) == Vec{f.one(), f.one()});
	const QuotientCoords part({unit_vec(f, 3, 0)}, mod);
	CHECK_FALSE(part.try_coords(v));
	CHECK_THROWS_AS(part(v), Inconsistent);
}
