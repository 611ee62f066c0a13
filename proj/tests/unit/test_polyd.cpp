#include "doctest.h"

#include "corpus.hpp"
#include "sv2/io.hpp"

using namespace sv2;

namespace {

PMono random_mono(std::size_t r, std::size_t s, std::size_t maxdeg, std::mt19937_64 &rng)
{
	const auto all = monomials_upto(r, s, maxdeg);
	return all[rng() % all.size()];
}

PElem random_elem(const Field &f, std::size_t r, std::size_t s, std::size_t maxdeg,
                  std::mt19937_64 &rng)
{
	PElem e(f, r, s);
	const std::size_t terms = 1 + rng() % 3;
	for (std::size_t i = 0; i < terms; ++i)
		e.add_term(random_mono(r, s, maxdeg, rng), corpus::random_nonzero(f, rng));
	return e;
}

} // namespace

TEST_CASE("normal_mul agrees with the free-word oracle in P^2_2")
{
	const Field &f = Field::gf(1);
	corpus::FreeWordOracle oracle(2, 2);
	std::mt19937_64 rng(99);
	int agreed = 0;
	for (int t = 0; t < 500; ++t) {
		const PMono u = random_mono(2, 2, 4, rng), v = random_mono(2, 2, 4, rng);
		const PElem prod = normal_mul(PElem::mono(f, 2, 2, u), PElem::mono(f, 2, 2, v));
		const bool ok = oracle.product_agrees(u, v, prod);
		CHECK_MESSAGE(ok, mono_str(u) << " * " << mono_str(v));
		agreed += ok;
	}
	CHECK(agreed == 500);
}

TEST_CASE("normal monomials are a basis of each weight component")
{
	corpus::FreeWordOracle oracle(2, 1);
	// count normal monomials per weight and compare with the quotient dimension
	std::map<std::vector<uint32_t>, std::pair<std::size_t, PMono>> count;
	for (const PMono &m : monomials_upto(2, 1, 5)) {
		std::vector<uint32_t> w{m.y[0], (m.xi & 1) + m.x[0], (m.xi >> 1 & 1) + m.x[1]};
		auto &c = count[w];
		++c.first;
		c.second = m;
	}
	for (const auto &[w, c] : count) {
		if (w[0] + w[1] + w[2] > 5)
			continue;
		CAPTURE(mono_str(c.second));
		CHECK(oracle.component_dim(c.second) == c.first);
	}
}

TEST_CASE("associativity, d-commutativity and Leibniz in P^2_1")
{
	const Field &f = Field::gf(4);
	std::mt19937_64 rng(3);
	for (int t = 0; t < 200; ++t) {
		const PElem a = random_elem(f, 2, 1, 2, rng), b = random_elem(f, 2, 1, 2, rng),
		            c = random_elem(f, 2, 1, 2, rng);
		CHECK(normal_mul(normal_mul(a, b), c) == normal_mul(a, normal_mul(b, c)));
		CHECK(normal_mul(a, b) == normal_mul(b, a) + normal_mul(p_d(b), p_d(a)));
		CHECK(p_d(normal_mul(a, b)) == normal_mul(p_d(a), b) + normal_mul(a, p_d(b)));
		CHECK(p_d(p_d(a)).is_zero());
	}
}

TEST_CASE("leftmost and rightmost rewriting agree")
{
	const Field &f = Field::gf(1);
	std::mt19937_64 rng(8);
	for (int t = 0; t < 200; ++t) {
		std::vector<Letter> w;
		const std::size_t len = rng() % 7;
		for (std::size_t i = 0; i < len; ++i)
			w.push_back({static_cast<int>(rng() % 3), rng() % 2});
		CHECK(word_normal_form(f, 2, 2, w, true) == word_normal_form(f, 2, 2, w, false));
	}
	const PElem x1 = PElem::x(f, 2, 0, 0), x2 = PElem::x(f, 2, 0, 1);
	CHECK(normal_mul(x2, x1) == normal_mul(x1, x2) +
	                                normal_mul(PElem::xi(f, 2, 0, 0), PElem::xi(f, 2, 0, 1)));
	CHECK(normal_mul(PElem::xi(f, 2, 0, 0), PElem::xi(f, 2, 0, 0)).is_zero());
	CHECK_THROWS_AS(PElem::x(f, 2, 0, 2), IndexOutOfRange);
	CHECK_THROWS_AS(normal_mul(x1, PElem::x(f, 3, 0, 0)), ShapeMismatch);
}

TEST_CASE("presentation text round trip")
{
	const Field &f = Field::gf(8);
	const Presentation d0 = parse_presentation(
	    "P(2,0)/[x1^2, x2^2, x1*x2, xi1*x1, xi2*x2, xi1*x2 + xi2*x1] @ deg 4", f);
	CHECK(d0.r == 2);
	CHECK(d0.relations.size() == 6);
	CHECK(parse_presentation(d0.str(), f).str() == d0.str());
	// juxtaposition, minus, newlines, hex coefficients
	const Presentation p =
	    parse_presentation("P(2, 1) / [0x3 xi1x2 - x2 x1,\n  y1^2 + 0xa5*y1] @ deg 3", f);
	CHECK(p.relations[0] == normal_mul(PElem::xi(f, 2, 1, 0), PElem::x(f, 2, 1, 1)).scale(f.elem(3)) +
	                            normal_mul(PElem::x(f, 2, 1, 1), PElem::x(f, 2, 1, 0)));
	CHECK(parse_presentation(p.str(), f).str() == p.str());

	const Presentation dual = parse_presentation("P(0,1)/[y1^2] @ deg 2", f);
	CHECK(quotient_to_dalgebra(dual).algebra->dim() == 2);

	try {
		parse_presentation("P(2/", f);
		FAIL("no error");
	} catch (const SyntaxError &e) {
		CHECK(e.line() == 1);
		CHECK(e.column() == 4);
	}
	try {
		parse_presentation("P(1,0)/[x1^2,\n xi1*y1] @ deg 2", f);
		FAIL("no error");
	} catch (const IndexOutOfRange &) {
	}
	CHECK_THROWS_AS(parse_presentation("P(1,0)/[0x1ff*x1] @ deg 2", f), SyntaxError);
	CHECK_THROWS_AS(parse_presentation("P(1,0)/[x1 +] @ deg 2", f), SyntaxError);
	CHECK_THROWS_AS(parse_presentation("P(1,0)/[x1^2] @ deg", f), SyntaxError);
}

TEST_CASE("quotients: closure and failures")
{
	const Field &f = Field::gf(1);
	CHECK_THROWS_AS(quotient_to_dalgebra(parse_presentation("P(0,1)/[y1^3] @ deg 3", f)),
	                NotClosedAtBound);
	CHECK_THROWS_AS(quotient_to_dalgebra(parse_presentation("P(1,0)/[x1] @ deg 2", f)),
	                RelationsNotDClosed);
	CHECK_THROWS_AS(quotient_to_dalgebra(parse_presentation("P(1,0)/[1] @ deg 2", f)),
	                Inconsistent);
	const PresentedAlgebra a =
	    quotient_to_dalgebra(parse_presentation("P(1,0)/[x1^3, xi1*x1^2] @ deg 4", f));
	CHECK(a.algebra->dim() == 5);
	CHECK(verify_axioms(*a.algebra).passed());
}

TEST_CASE("present recovers the algebra")
{
	for (const Algebra &a : corpus::defect_one_corpus()) {
		const std::size_t n = a.dim();
		std::vector<Vec> gens;
		for (std::size_t i = 0; i < n; ++i)
			if (a.label(i) == "x1" || a.label(i) == "x2")
				gens.push_back(a.basis(i));
		const Presentation p = present(a, gens, 4);
		const PresentedAlgebra back = quotient_to_dalgebra(p);
		CHECK(back.algebra->dim() == n);
		const Morphism m = morphism_from_generators(back, share(a), gens, {});
		CHECK(verify_morphism(m).passed());
	}
	const Algebra t = corpus::truncated(Field::gf(1), 3);
	CHECK_THROWS_AS(present(t, {}, 3), NotGenerating);
}
