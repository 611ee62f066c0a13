#include "sv2/dim7.hpp"

namespace sv2 {

namespace {

PElem mono(const Field &f, std::vector<uint32_t> x, uint32_t xi)
{
	return PElem::mono(f, 2, 0, PMono{{}, xi, std::move(x)});
}

void require(const AxiomReport &rep, const std::string &what)
{
	if (!rep.passed())
		throw TheoremViolation(what + ": " + rep.summary());
}

} // namespace

Presentation d7_presentation(const FieldElem &h, const FieldElem &k, const FieldElem &p)
{
	const Field &f = h.field();
	const PElem xi12 = mono(f, {0, 0}, 3);
	Presentation pr{&f, 2, 0, {}, 4};
	pr.relations.push_back(mono(f, {2, 0}, 0) + xi12.scale(h));
	pr.relations.push_back(mono(f, {0, 2}, 0) + xi12.scale(k));
	pr.relations.push_back(mono(f, {1, 1}, 0) + xi12.scale(p));
	pr.relations.push_back(mono(f, {1, 0}, 1));
	pr.relations.push_back(mono(f, {0, 1}, 2));
	pr.relations.push_back(mono(f, {0, 1}, 1) + mono(f, {1, 0}, 2));
	return pr;
}

PresentedAlgebra make_D(const FieldElem &h, const FieldElem &k, const FieldElem &p)
{
	PresentedAlgebra d = quotient_to_dalgebra(d7_presentation(h, k, p));
	if (d.algebra->dim() != 7)
		throw TheoremViolation("D(h,k,p) has dimension " + std::to_string(d.algebra->dim()));
	return d;
}

CanonicalForm7 classify7(const AlgebraPtr &ap)
{
	const Algebra &a = *ap;
	const Field &f = a.field();
	if (a.dim() != 7)
		throw NotApplicable("dimension is " + std::to_string(a.dim()) + ", not 7");
	if (!verify_axioms(a).passed())
		throw NotApplicable("input is not a d-algebra");
	const auto pair = noncommuting_pair(a);
	if (!pair)
		throw NotApplicable("input is commutative");

	CanonicalForm7 out{f.zero(), f.zero(), f.zero(), identity_morphism(ap),
	                   ProductTable{f.zero(), f.zero(), f.zero(), f.zero(), f.zero(), f.zero()}};
	out.dim_im = im_d(a).dim();
	out.dim_ker = ker_d(a).dim();
	if (out.dim_im != 3 || out.dim_ker != 4)
		throw TheoremViolation("noncommutative dimension-7 algebra with dim Im(d) = " +
		                       std::to_string(out.dim_im) + ", dim Ker(d) = " +
		                       std::to_string(out.dim_ker));

	const Vec z1 = a.basis(pair->first), z2 = a.basis(pair->second);
	const Vec v1 = a.d(z1), v2 = a.d(z2), v3 = a.mul(v1, v2);
	const QuotientCoords kc({a.one(), v1, v2, v3}, Subspace(f, 7));
	auto shift = [&](Vec z) {
		const FieldElem a0 = kc(a.mul(z, z))[0];
		axpy(z, a0.sqrt(), a.one());
		return z;
	};
	const Vec w1 = shift(z1), w2 = shift(z2);
	const Vec w3 = a.mul(v1, w2);
	if (!is_zero(a.power(w1, 4)) || !is_zero(a.power(w2, 4)))
		throw TheoremViolation("w^4 != 0 after the square-root shift");
	const std::vector<Vec> basis{a.one(), v1, v2, v3, w1, w2, w3};
	if (rank(Matrix::from_columns(f, 7, basis)) != 7)
		throw TheoremViolation("{1, v, w} is not a basis");
	for (std::size_t i = 0; i < 7; ++i)
		if (a.mul(w3, a.basis(i)) != a.mul(a.basis(i), w3))
			throw TheoremViolation("w3 is not central");

	const QuotientCoords bc(basis, Subspace(f, 7));
	ProductTable &t = out.table;
	t.a3 = bc(a.mul(v1, w1))[3];
	t.b3 = bc(a.mul(v2, w2))[3];
	t.g3 = bc(a.mul(v2, w1))[3];
	t.h3 = bc(a.mul(w1, w1))[3];
	t.k3 = bc(a.mul(w2, w2))[3];
	t.p3 = bc(a.mul(w1, w2))[3];

	// the whole table, row by row over (v1, v2, v3, w1, w2, w3)
	const Vec zero = a.zero();
	const FieldElem one = f.one();
	auto lin = [&](const FieldElem &cv3, const FieldElem &cw3) {
		Vec r = zero;
		axpy(r, cv3, v3);
		axpy(r, cw3, w3);
		return r;
	};
	const FieldElem o = f.zero();
	const std::vector<std::vector<Vec>> table{
	    {zero, v3, zero, lin(t.a3, o), w3, zero},
	    {v3, zero, zero, lin(t.g3, one), lin(t.b3, o), zero},
	    {zero, zero, zero, zero, zero, zero},
	    {lin(t.a3, o), lin(t.g3, one), zero, lin(t.h3, o), lin(t.p3, t.g3), zero},
	    {w3, lin(t.b3, o), zero, lin(t.p3 + one, t.g3), lin(t.k3, o), zero},
	    {zero, zero, zero, zero, zero, zero}};
	AxiomReport rep;
	for (std::size_t i = 0; i < 6; ++i)
		for (std::size_t j = 0; j < 6; ++j)
			rep.expect("multiplication table", {i, j}, a.mul(basis[i + 1], basis[j + 1]),
			           table[i][j]);
	require(rep, "structure table");

	Vec n1 = w1, n2 = w2;
	axpy(n1, t.g3, v1);
	axpy(n1, t.a3, v2);
	axpy(n2, t.b3, v1);
	out.h = t.h3;
	out.k = t.k3;
	out.p = t.p3 + t.a3 * t.b3;
	const PresentedAlgebra d = make_D(out.h, out.k, out.p);
	out.iso = morphism_from_generators(d, ap, {n1, n2}, {});
	require(verify_morphism(out.iso), "D(h,k,p) -> A");
	return out;
}

QReduction reduce_to_q(const FieldElem &h, const FieldElem &k, const FieldElem &p)
{
	const Field &f = h.field();
	if (h.is_zero() && k.is_zero()) {
		const PresentedAlgebra d = make_D(h, k, p);
		return QReduction{p, identity_morphism(d.algebra)};
	}
	if (k.is_zero()) {
		// D(h,0,p) ~ D(0,h,p+1) by exchanging x1 and x2
		const QReduction inner = reduce_to_q(k, h, p + f.one());
		const PresentedAlgebra from = make_D(k, h, p + f.one());
		const PresentedAlgebra to = make_D(h, k, p);
		const Morphism swap = morphism_from_generators(
		    from, to.algebra, {to.algebra->basis(5), to.algebra->basis(4)}, {});
		require(verify_morphism(swap), "swap of x1 and x2");
		return QReduction{inner.q, compose(swap, inner.iso)};
	}
	const auto roots = quad_roots(k, f.one(), h);
	const FieldElem alpha = roots.front();
	// the other root: alpha + beta = 1/k
	const FieldElem beta = alpha + k.inverse();
	const FieldElem q = alpha * k;
	const PresentedAlgebra target = make_D(h, k, p);
	const Algebra &t = *target.algebra;
	const Vec x1 = t.basis(4), x2 = t.basis(5);
	auto image = [&](const FieldElem &c) {
		Vec u = x1;
		axpy(u, c, x2);
		Vec r = u;
		axpy(r, p.sqrt(), t.d(u));
		return r;
	};
	const PresentedAlgebra src = make_D(f.zero(), f.zero(), q);
	QReduction out{q, morphism_from_generators(src, target.algebra, {image(alpha), image(beta)}, {})};
	require(verify_morphism(out.iso), "D(0,0,q) -> D(h,k,p)");
	return out;
}

Morphism kill_q(const FieldElem &q)
{
	const Field &f = q.field();
	const PresentedAlgebra target = make_D(f.zero(), f.zero(), q);
	const Algebra &t = *target.algebra;
	std::vector<Vec> xs;
	for (std::size_t i : {4, 5}) {
		Vec x = t.basis(i);
		axpy(x, q.sqrt(), t.d(x));
		xs.push_back(std::move(x));
	}
	const PresentedAlgebra src = make_D(f.zero(), f.zero(), f.zero());
	Morphism m = morphism_from_generators(src, target.algebra, xs, {});
	require(verify_morphism(m), "D(0,0,0) -> D(0,0,q)");
	return m;
}

Normalization normalize7(const AlgebraPtr &ap)
{
	CanonicalForm7 form = classify7(ap);
	AlgebraPtr a = ap;
	std::optional<Embedding> ext;
	QReduction red = [&] {
		try {
			return reduce_to_q(form.h, form.k, form.p);
		} catch (const NeedsExtension &) {
			ext = field_extend(ap->field());
			const Embedding &e = *ext;
			a = share(ap->base_change(e));
			form.h = e(form.h);
			form.k = e(form.k);
			form.p = e(form.p);
			form.iso = Morphism{make_D(form.h, form.k, form.p).algebra, a,
			                    form.iso.mat.base_change(e)};
			require(verify_morphism(form.iso), "extended D(h,k,p) -> A");
			return reduce_to_q(form.h, form.k, form.p);
		}
	}();
	const Morphism chain = compose(form.iso, compose(red.iso, kill_q(red.q)));
	Normalization out{std::move(form), red.q, invert(chain), ext};
	require(verify_morphism(out.iso), "A -> D(0,0,0)");
	return out;
}

} // namespace sv2
