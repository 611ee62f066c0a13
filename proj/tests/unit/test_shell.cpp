#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "corpus.hpp"
#include "sv2/cli.hpp"
#include "sv2/dim7.hpp"
#include "sv2/io.hpp"

using namespace sv2;

namespace {

struct Run {
	int rc;
	std::string out;
	std::string err;
};

Run run(std::vector<std::string> args, const std::string &input = "")
{
	std::istringstream in(input);
	std::ostringstream out, err;
	const int rc = cli::run(args, in, out, err);
	return {rc, out.str(), err.str()};
}

bool has(const std::string &out, const std::string &line)
{
	return out.find(line + "\n") != std::string::npos;
}

const char *d0_text = "P(2,0)/[x1^2, x2^2, x1*x2, xi1*x1, xi2*x2, xi1*x2 + xi2*x1] @ deg 4";

} // namespace

TEST_CASE("algebra files round trip")
{
	std::vector<Algebra> all = corpus::small_corpus();
	for (const Algebra &a : corpus::noncommutative_corpus())
		all.push_back(a);
	for (const Algebra &a : corpus::defect_one_corpus())
		all.push_back(a);
	// dense coefficients: random changes of basis with the unit kept first
	std::mt19937_64 rng(17);
	for (const Algebra &a : corpus::noncommutative_corpus()) {
		std::vector<Vec> basis{a.one()};
		Subspace s(a.field(), a.dim(), basis);
		while (basis.size() < a.dim()) {
			const Vec v = corpus::random_vec(a.field(), a.dim(), rng);
			if (!s.contains(v)) {
				basis.push_back(v);
				s = s.with(v);
			}
		}
		all.push_back(on_basis(a, basis));
	}
	std::size_t n = 0;
	for (const Algebra &a : all) {
		const std::string text = print_algebra_file(a);
		const AlgebraFile back = parse_algebra_file(text);
		REQUIRE(back.algebra);
		CHECK(*back.algebra == a);
		CHECK(back.algebra->labels() == a.labels());
		CHECK(print_algebra_file(*back.algebra) == text);
		++n;
	}
	CHECK(n >= 100);

	const LieAlgebra l = corpus::abelian_rank1(Field::gf(5));
	const AlgebraFile lb = parse_algebra_file(print_lie_file(l));
	REQUIRE(lb.lie);
	CHECK(*lb.lie == l);
	CHECK(lb.kind == Kind::lie2);
}

TEST_CASE("algebra file details")
{
	// F^2 written with the unit second
	const std::string text = "# split\nfield gf2_1\nkind dalgebra\nn 2\nunit 1\nlabels e 1\n"
	                         "tensor\n1 0\n1 0\n1 0\n0 1\ndmat\n0 0\n0 0\n";
	const AlgebraFile f = parse_algebra_file(text);
	REQUIRE(f.algebra);
	CHECK(f.algebra->label(0) == "1");
	CHECK(verify_axioms(*f.algebra).passed());

	try {
		parse_algebra_file("field gf2_1\nkind dalgebra\nn 1\ntensor\n2\ndmat\n0\n");
		FAIL("no error");
	} catch (const SyntaxError &e) {
		CHECK(e.line() == 5);
		CHECK(e.column() == 1);
	}
	CHECK_THROWS_AS(parse_algebra_file("field gf2_1\nkind other\n"), SyntaxError);
	CHECK_THROWS_AS(parse_algebra_file("field gf2_1\nkind dalgebra\nn 1\ntensor\n1\n"),
	                SyntaxError);
	CHECK(looks_like_presentation("# c\n  P(1,0)/[] @ deg 1"));
	CHECK_FALSE(looks_like_presentation("field gf2_1"));
}

TEST_CASE("check and invariants on D(0,0,0)")
{
	const Run c = run({"check"}, d0_text);
	CHECK(c.rc == 0);
	CHECK(has(c.out, "axioms: pass"));

	const Run i = run({"invariants", "--format", "kv"}, d0_text);
	CHECK(i.rc == 0);
	CHECK(has(i.out, "defect=1"));
	CHECK(has(i.out, "local=yes"));
	CHECK(has(i.out, "dim_im=3"));
	CHECK(has(i.out, "noncommuting=x1,x2"));

	// the same through a file
	const Field &f = Field::gf(1);
	const std::string path = "shell_test_d0.alg";
	{
		std::ofstream o(path);
		o << print_algebra_file(*make_D(f.zero(), f.zero(), f.zero()).algebra);
	}
	CHECK(run({"check", path}).rc == 0);
	CHECK(run({"decompose", path}).rc == 0);
	std::remove(path.c_str());
}

TEST_CASE("exit codes")
{
	CHECK(run({"check"}, "P(2/").rc == cli::parse);
	CHECK(run({"check"}, "P(1,0)/[x2] @ deg 2").rc == cli::parse);
	CHECK(run({"frobnicate"}).rc == cli::parse);
	CHECK(run({"check", "/nonexistent/file"}).rc == cli::other);

	// an associative but not d-commutative algebra as a dalgebra: d(x) = 1
	const std::string bad = "field gf2_1\nkind dalgebra\nn 2\ntensor\n1 0\n0 1\n0 1\n0 0\n"
	                        "dmat\n0 1\n0 0\n";
	CHECK(run({"check"}, bad).rc == cli::axiom);

	const Run ns = run({"invariants"}, "P(0,1)/[y1^2 + y1 + 1] @ deg 2");
	CHECK(ns.rc == cli::needs_extension);
	CHECK(has(ns.out, "suggestion: retry with --field 2"));
	CHECK(run({"invariants", "--field", "2"}, "P(0,1)/[y1^2 + y1 + 1] @ deg 2").rc == 0);
	CHECK(run({"classify7"}, "P(0,1)/[y1^2] @ deg 2").rc == cli::other);
}

TEST_CASE("classify7 and present")
{
	std::mt19937_64 rng(21);
	const Field &f = Field::gf(8);
	for (int t = 0; t < 5; ++t) {
		const std::string text =
		    d7_presentation(corpus::random_elem(f, rng), corpus::random_elem(f, rng),
		                    corpus::random_elem(f, rng))
		        .str();
		const Run r = run({"classify7", "--field", "8"}, text);
		CHECK_MESSAGE(r.rc == 0, r.out);
		CHECK(has(r.out, "iso: pass"));
		CHECK(r.out.find("iso.matrix: ") != std::string::npos);
	}
	const Run p = run({"present", "--gens", "x1,x2"}, d0_text);
	CHECK(p.rc == 0);
	CHECK(has(p.out, "roundtrip_dim: 7"));
	CHECK(run({"present", "--gens", "nope"}, d0_text).rc == cli::parse);
}

TEST_CASE("pbw-verify and confluence")
{
	const Field &f = Field::gf(1);
	Matrix dv(f, 2, 2);
	dv(0, 1) = f.one();
	const std::string gl = print_lie_file(commutator_lie(gl_object(2, dv)));
	const Run p = run({"pbw-verify", "--bound", "3", "--trials", "50"}, gl);
	CHECK(p.rc == 0);
	CHECK(has(p.out, "pbw: pass"));

	const Run c1 = run({"confluence", "--trials", "200", "--seed", "5", "--format", "kv"}, gl);
	const Run c2 = run({"confluence", "--trials", "200", "--seed", "5", "--format", "kv"}, gl);
	CHECK(c1.rc == 0);
	CHECK(c1.out == c2.out);
	CHECK(has(c1.out, "discrepancies=0"));

	const std::string bad = print_lie_file(axiom4_counterexample(f));
	CHECK(run({"pbw-verify"}, bad).rc == cli::axiom);
	CHECK(run({"check"}, bad).rc == cli::axiom);
	CHECK(run({"check"}, gl).rc == 0);
}
