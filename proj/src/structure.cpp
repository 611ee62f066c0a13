#include "sv2/structure.hpp"

#include "sv2/poly.hpp"

namespace sv2 {

KernelAlgebra kernel_algebra(const Algebra &a)
{
	const Subspace ker = ker_d(a);
	std::vector<Vec> basis = Subspace(a.field(), a.dim()).extend_basis({a.one()}, ker.basis());
	std::vector<std::string> labels{"1"};
	for (std::size_t i = 1; i < basis.size(); ++i)
		labels.push_back("k" + std::to_string(i));
	Algebra k = on_basis(a, basis, labels);
	return KernelAlgebra{std::move(k), std::move(basis)};
}

namespace {

Vec inverse_frobenius(const Vec &v, int times)
{
	Vec r = v;
	for (auto &x : r)
		for (int i = 0; i < times; ++i)
			x = x.sqrt();
	return r;
}

// p(x) with x^0 taken to be `unit`
Vec eval_at(const Algebra &k, const UniPoly &p, const Vec &x, const Vec &unit)
{
	Vec r = k.zero();
	for (int i = p.degree(); i >= 0; --i) {
		r = k.mul(r, x);
		axpy(r, p.coeff(static_cast<std::size_t>(i)), unit);
	}
	return r;
}

Vec lift_idempotent(const Algebra &k, Vec u)
{
	for (;;) {
		Vec s = k.mul(u, u);
		if (s == u)
			return u;
		u = std::move(s);
	}
}

// multiplication by x on span(basis), in that basis
Matrix restricted_mul(const Algebra &k, const Vec &x, const std::vector<Vec> &basis)
{
	const QuotientCoords coords(basis, Subspace(k.field(), k.dim()));
	std::vector<Vec> cols;
	for (const Vec &b : basis)
		cols.push_back(coords(k.mul(x, b)));
	return Matrix::from_columns(k.field(), basis.size(), cols);
}

std::vector<Vec> ideal_basis(const Algebra &k, const Vec &e)
{
	return Subspace(k.field(), k.dim(), k.left_mul(e).column_list()).basis();
}

// roots of the radical of the minimal polynomial of x on eK
std::vector<FieldElem> spectrum(const Algebra &k, const Vec &x, const std::vector<Vec> &ek)
{
	const UniPoly rad = squarefree_part(min_poly(restricted_mul(k, x, ek)));
	std::vector<FieldElem> roots = poly_roots(rad);
	if (static_cast<int>(roots.size()) < rad.degree())
		throw NonSplit("minimal polynomial factor " + rad.str() + " does not split over " +
		               k.field().name() + "; try gf2_" +
		               std::to_string(2 * k.field().degree()));
	return roots;
}

void require_commutative(const Algebra &k)
{
	if (auto w = noncommuting_pair(k))
		throw NotCommutative("e" + std::to_string(w->first) + " and e" +
		                     std::to_string(w->second) + " do not commute");
}

} // namespace

Subspace nilradical_commutative(const Algebra &k)
{
	require_commutative(k);
	const Field &f = k.field();
	const std::size_t n = k.dim();
	int t = 0;
	while ((std::size_t{1} << t) < n)
		++t;
	std::vector<Vec> cols;
	for (std::size_t i = 0; i < n; ++i) {
		Vec p = k.basis(i);
		for (int s = 0; s < t; ++s)
			p = k.mul(p, p);
		cols.push_back(std::move(p));
	}
	std::vector<Vec> ker;
	for (const Vec &v : nullspace(Matrix::from_columns(f, n, cols)))
		ker.push_back(inverse_frobenius(v, t));
	Subspace nil(f, n, ker);
	for (const Vec &v : nil.basis())
		if (!is_zero(k.power(v, n)))
			throw TheoremViolation("non-nilpotent vector in the computed radical");
	return nil;
}

std::vector<Vec> primitive_idempotents(const Algebra &k)
{
	require_commutative(k);
	std::vector<Vec> idem{k.one()};
	bool changed = true;
	while (changed) {
		changed = false;
		std::vector<Vec> next;
		for (const Vec &e : idem) {
			const std::vector<Vec> ek = ideal_basis(k, e);
			bool split = false;
			for (std::size_t b = 1; b < k.dim() && !split; ++b) {
				const Vec x = k.mul(e, k.basis(b));
				const auto roots = spectrum(k, x, ek);
				if (roots.size() < 2)
					continue;
				for (std::size_t i = 0; i < roots.size(); ++i) {
					UniPoly lag(k.field(), {k.field().one()});
					FieldElem denom = k.field().one();
					for (std::size_t j = 0; j < roots.size(); ++j)
						if (j != i) {
							lag = lag * UniPoly::linear(roots[j]);
							denom *= roots[i] + roots[j];
						}
					next.push_back(lift_idempotent(k, eval_at(k, lag.scale(denom.inverse()), x, e)));
				}
				split = true;
			}
			if (split)
				changed = true;
			else
				next.push_back(e);
		}
		idem = std::move(next);
	}
	return idem;
}

FieldElem Character::operator()(const Vec &x) const
{
	FieldElem r = ambient->field().zero();
	for (std::size_t i = 0; i < x.size(); ++i)
		r += functional[i] * x[i];
	return r;
}

std::vector<Character> characters(const AlgebraPtr &ap)
{
	const Algebra &a = *ap;
	const KernelAlgebra ka = kernel_algebra(a);
	const Algebra &k = ka.algebra;
	const QuotientCoords kcoords(ka.basis, Subspace(a.field(), a.dim()));
	std::vector<Character> out;
	for (const Vec &e : primitive_idempotents(k)) {
		const std::vector<Vec> ek = ideal_basis(k, e);
		Vec lk;
		for (std::size_t b = 0; b < k.dim(); ++b) {
			const auto roots = spectrum(k, k.mul(e, k.basis(b)), ek);
			if (roots.size() != 1)
				throw TheoremViolation("primitive idempotent with a split factor");
			lk.push_back(roots[0]);
		}
		Vec fn;
		for (std::size_t i = 0; i < a.dim(); ++i) {
			const Vec sq = kcoords(a.mul(a.basis(i), a.basis(i)));
			FieldElem v = a.field().zero();
			for (std::size_t j = 0; j < sq.size(); ++j)
				v += sq[j] * lk[j];
			fn.push_back(v.sqrt());
		}
		Character c{ap, std::move(fn)};
		if (!c(a.one()).is_one())
			throw TheoremViolation("character is not unital");
		for (std::size_t i = 0; i < a.dim(); ++i) {
			if (!c(a.d_basis(i)).is_zero())
				throw TheoremViolation("character does not kill Im(d)");
			for (std::size_t j = 0; j < a.dim(); ++j)
				if (c(a.product(i, j)) != c.functional[i] * c.functional[j])
					throw TheoremViolation("character is not multiplicative");
		}
		out.push_back(std::move(c));
	}
	return out;
}

std::vector<DIdeal> maximal_ideals(const AlgebraPtr &ap)
{
	const Algebra &a = *ap;
	const Subspace im = im_d(a), ker = ker_d(a);
	std::vector<DIdeal> out;
	for (const Character &c : characters(ap)) {
		const Matrix row = Matrix::from_rows(a.field(), a.dim(), {c.functional});
		DIdeal m(ap, Subspace(a.field(), a.dim(), nullspace(row)));
		if (m.dim() + 1 != a.dim())
			throw TheoremViolation("maximal ideal of codimension other than 1");
		if (!m.space().contains(im))
			throw TheoremViolation("Im(d) not inside a maximal ideal");
		if (m.space().intersect(ker).dim() + 1 != ker.dim())
			throw TheoremViolation("M intersect Ker(d) is not maximal in Ker(d)");
		for (const DIdeal &o : out)
			if (o.space().intersect(ker) == m.space().intersect(ker))
				throw TheoremViolation("two maximal ideals restrict to the same ideal of Ker(d)");
		out.push_back(std::move(m));
	}
	return out;
}

DIdeal jacobson_radical(const AlgebraPtr &a)
{
	DIdeal r = DIdeal::whole(a);
	for (const DIdeal &m : maximal_ideals(a))
		r = ideal_intersect(r, m);
	return r;
}

bool is_local(const AlgebraPtr &a) { return characters(a).size() == 1; }

Decomposition decompose(const AlgebraPtr &ap)
{
	const Algebra &a = *ap;
	const Field &f = a.field();
	const KernelAlgebra ka = kernel_algebra(a);
	const Matrix to_ambient = Matrix::from_columns(f, a.dim(), ka.basis);

	Decomposition dec{{}, {}, identity_morphism(ap)};
	for (const Vec &ek : primitive_idempotents(ka.algebra))
		dec.idempotents.push_back(to_ambient.apply(ek));

	Vec sum = a.zero();
	for (std::size_t i = 0; i < dec.idempotents.size(); ++i) {
		const Vec &e = dec.idempotents[i];
		sum += e;
		if (a.mul(e, e) != e || !is_zero(a.d(e)))
			throw TheoremViolation("idempotent check failed");
		for (std::size_t j = 0; j < dec.idempotents.size(); ++j)
			if (j != i && !is_zero(a.mul(e, dec.idempotents[j])))
				throw TheoremViolation("idempotents are not orthogonal");
	}
	if (sum != a.one())
		throw TheoremViolation("idempotents do not sum to 1");

	for (const Vec &e : dec.idempotents) {
		const Matrix le = a.left_mul(e);
		std::vector<Vec> basis =
		    Subspace(f, a.dim()).extend_basis({e}, le.column_list());
		std::vector<std::string> labels{"1"};
		for (std::size_t i = 1; i < basis.size(); ++i)
			labels.push_back("f" + std::to_string(i));
		auto factor = share(on_basis(a, basis, labels));
		const QuotientCoords coords(basis, Subspace(f, a.dim()));
		std::vector<Vec> cols;
		for (const Vec &c : le.column_list())
			cols.push_back(coords(c));
		Morphism proj{ap, factor, Matrix::from_columns(f, basis.size(), cols)};
		if (!verify_morphism(proj, false).passed())
			throw TheoremViolation("projection onto a factor is not a morphism");
		if (!is_local(factor))
			throw TheoremViolation("factor is not local");
		dec.factors.push_back(Factor{std::move(factor), std::move(proj)});
	}

	// fold the factors into one product and send x to its components
	Algebra prod = *dec.factors[0].algebra;
	Matrix mat = dec.factors[0].projection.mat;
	for (std::size_t i = 1; i < dec.factors.size(); ++i) {
		const Matrix &pm = dec.factors[i].projection.mat;
		Matrix next(f, mat.rows() + pm.rows(), a.dim());
		for (std::size_t c = 0; c < a.dim(); ++c) {
			for (std::size_t r = 0; r < mat.rows(); ++r)
				next(r, c) = mat(r, c);
			for (std::size_t r = 0; r < pm.rows(); ++r)
				next(mat.rows() + r, c) = pm(r, c);
			next(mat.rows(), c) += mat(0, c);
		}
		prod = direct_product(prod, *dec.factors[i].algebra);
		mat = std::move(next);
	}
	dec.iso = Morphism{ap, share(std::move(prod)), std::move(mat)};
	const AxiomReport rep = verify_morphism(dec.iso);
	if (!rep.passed())
		throw TheoremViolation("A is not the product of its factors: " + rep.summary());
	if (dec.factors.size() > defect(a))
		throw TheoremViolation("more local factors than the defect");
	return dec;
}

DefectOneBasis defect_one_basis(const Algebra &a)
{
	if (defect(a) != 1)
		throw WrongDefect("defect is " + std::to_string(defect(a)) + ", expected 1");
	const Field &f = a.field();
	const Subspace im = im_d(a);
	std::vector<Vec> kb{a.one()};
	for (const Vec &v : im.basis())
		kb.push_back(v);
	const QuotientCoords kcoords(kb, Subspace(f, a.dim()));
	DefectOneBasis out;
	for (const Vec &v : im.basis()) {
		Vec w = solve(a.dmat(), v);
		const FieldElem a0 = kcoords(a.mul(w, w))[0];
		axpy(w, a0.sqrt(), a.one());
		if (a.d(w) != v || !is_zero(a.mul(v, v)) || !is_zero(a.power(w, 4)))
			throw TheoremViolation("defect-one basis postcondition failed");
		out.v.push_back(v);
		out.w.push_back(std::move(w));
	}
	return out;
}

} // namespace sv2
