#include "sv2/algebra.hpp"

#include <sstream>

namespace sv2 {

Algebra::Algebra(const Field &f, std::size_t n, std::vector<FieldElem> tensor,
                 Matrix dmat, std::vector<std::string> labels)
    : f_(&f), n_(n), t_(std::move(tensor)), d_(std::move(dmat)), labels_(std::move(labels))
{
	if (t_.size() != n * n * n)
		throw DimensionMismatch("structure tensor needs n^3 = " +
		                        std::to_string(n * n * n) + " entries, got " +
		                        std::to_string(t_.size()));
	if (d_.rows() != n || d_.cols() != n)
		throw DimensionMismatch("differential must be " + std::to_string(n) + "x" +
		                        std::to_string(n));
	if (&d_.field() != f_)
		throw FieldMismatch("differential over a different field");
	for (const auto &x : t_)
		if (&x.field() != f_)
			throw FieldMismatch("structure constant over a different field");
	if (labels_.empty())
		for (std::size_t i = 0; i < n; ++i)
			labels_.push_back("e" + std::to_string(i));
	if (labels_.size() != n)
		throw DimensionMismatch("one label per basis vector required");
}

std::optional<std::size_t> Algebra::index_of(const std::string &label) const
{
	for (std::size_t i = 0; i < n_; ++i)
		if (labels_[i] == label)
			return i;
	return std::nullopt;
}

const Vec &Algebra::check(const Vec &a) const
{
	if (a.size() != n_)
		throw DimensionMismatch("element has " + std::to_string(a.size()) +
		                        " coordinates, algebra has dimension " +
		                        std::to_string(n_));
	return a;
}

Vec Algebra::product(std::size_t i, std::size_t j) const
{
	const auto base = static_cast<std::ptrdiff_t>((i * n_ + j) * n_);
	return Vec(t_.begin() + base, t_.begin() + base + static_cast<std::ptrdiff_t>(n_));
}

Vec Algebra::mul(const Vec &a, const Vec &b) const
{
	check(a);
	check(b);
	Vec out = zero();
	for (std::size_t i = 0; i < n_; ++i) {
		if (a[i].is_zero())
			continue;
		for (std::size_t j = 0; j < n_; ++j) {
			if (b[j].is_zero())
				continue;
			const FieldElem s = a[i] * b[j];
			const std::size_t base = (i * n_ + j) * n_;
			for (std::size_t l = 0; l < n_; ++l)
				if (!t_[base + l].is_zero())
					out[l] += s * t_[base + l];
		}
	}
	return out;
}

Vec Algebra::power(const Vec &a, std::size_t e) const
{
	Vec r = one();
	for (std::size_t i = 0; i < e; ++i)
		r = mul(r, a);
	return r;
}

Matrix Algebra::left_mul(const Vec &a) const
{
	std::vector<Vec> cols;
	for (std::size_t j = 0; j < n_; ++j)
		cols.push_back(mul(a, basis(j)));
	return Matrix::from_columns(*f_, n_, cols);
}

Algebra Algebra::with_labels(std::vector<std::string> labels) const
{
	return Algebra(*f_, n_, t_, d_, std::move(labels));
}

Algebra Algebra::base_change(const Embedding &e) const
{
	std::vector<FieldElem> t;
	t.reserve(t_.size());
	for (const auto &x : t_)
		t.push_back(e(x));
	return Algebra(e.target(), n_, std::move(t), d_.base_change(e), labels_);
}

bool Algebra::operator==(const Algebra &o) const
{
	return f_ == o.f_ && n_ == o.n_ && t_ == o.t_ && d_ == o.d_;
}

Algebra on_basis(const Algebra &a, const std::vector<Vec> &basis,
                 std::vector<std::string> labels)
{
	const Field &f = a.field();
	const std::size_t m = basis.size();
	const QuotientCoords coords(basis, Subspace(f, a.dim()));
	std::vector<FieldElem> t;
	t.reserve(m * m * m);
	for (std::size_t i = 0; i < m; ++i)
		for (std::size_t j = 0; j < m; ++j) {
			auto c = coords.try_coords(a.mul(basis[i], basis[j]));
			if (!c)
				throw Inconsistent("span is not closed under multiplication");
			t.insert(t.end(), c->begin(), c->end());
		}
	std::vector<Vec> dcols;
	for (std::size_t j = 0; j < m; ++j) {
		auto c = coords.try_coords(a.d(basis[j]));
		if (!c)
			throw Inconsistent("span is not closed under d");
		dcols.push_back(*c);
	}
	return Algebra(f, m, std::move(t), Matrix::from_columns(f, m, dcols), std::move(labels));
}

// ---------------------------------------------------------------- reports

bool AxiomReport::expect(const std::string &axiom, std::vector<std::size_t> witness,
                         const Vec &lhs, const Vec &rhs)
{
	++checks;
	if (lhs == rhs)
		return true;
	fail(axiom, std::move(witness), lhs, rhs);
	return false;
}

void AxiomReport::merge(const AxiomReport &o)
{
	failures.insert(failures.end(), o.failures.begin(), o.failures.end());
	notes.insert(notes.end(), o.notes.begin(), o.notes.end());
	checks += o.checks;
}

std::string AxiomReport::summary() const
{
	std::ostringstream os;
	os << (passed() ? "passed" : "FAILED") << " (" << checks << " checks, "
	   << failures.size() << " failures)";
	for (const auto &f : failures) {
		os << "\n  " << f.axiom << " at (";
		for (std::size_t i = 0; i < f.witness.size(); ++i)
			os << (i ? "," : "") << f.witness[i];
		os << "): " << to_hex(f.lhs) << " != " << to_hex(f.rhs);
	}
	return os.str();
}

// ---------------------------------------------------------------- axioms

AxiomReport verify_axioms(const Algebra &a, AxiomSet set)
{
	AxiomReport rep;
	const std::size_t n = a.dim();
	if (n == 0) {
		rep.fail("nonzero algebra", {}, {}, {});
		return rep;
	}
	for (std::size_t j = 0; j < n; ++j) {
		rep.expect("left unit", {0, j}, a.product(0, j), a.basis(j));
		rep.expect("right unit", {j, 0}, a.product(j, 0), a.basis(j));
	}
	std::vector<Vec> prods(n * n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			prods[i * n + j] = a.product(i, j);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				rep.expect("associativity", {i, j, k}, a.mul(prods[i * n + j], a.basis(k)),
				           a.mul(a.basis(i), prods[j * n + k]));
	const Matrix dd = a.dmat() * a.dmat();
	for (std::size_t j = 0; j < n; ++j)
		rep.expect("d^2 = 0", {j}, dd.column(j), a.zero());
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			rep.expect("Leibniz", {i, j}, a.d(prods[i * n + j]),
			           a.mul(a.d_basis(i), a.basis(j)) + a.mul(a.basis(i), a.d_basis(j)));
	if (set == AxiomSet::dalgebra)
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j)
				rep.expect("d-commutativity", {i, j}, prods[i * n + j],
				           prods[j * n + i] + a.mul(a.d_basis(j), a.d_basis(i)));
	return rep;
}

std::optional<std::pair<std::size_t, std::size_t>> noncommuting_pair(const Algebra &a)
{
	for (std::size_t i = 0; i < a.dim(); ++i)
		for (std::size_t j = i + 1; j < a.dim(); ++j)
			if (a.product(i, j) != a.product(j, i))
				return std::make_pair(i, j);
	return std::nullopt;
}

Subspace ker_d(const Algebra &a)
{
	return Subspace(a.field(), a.dim(), nullspace(a.dmat()));
}

Subspace im_d(const Algebra &a)
{
	return Subspace(a.field(), a.dim(), a.dmat().column_list());
}

Subspace center(const Algebra &a)
{
	const std::size_t n = a.dim();
	// rows: for every i, the coordinates of e_i x + x e_i as a linear map of x
	Matrix sys(a.field(), n * n, n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			const Vec c = a.product(i, j) + a.product(j, i);
			for (std::size_t l = 0; l < n; ++l)
				sys(i * n + l, j) = c[l];
		}
	return Subspace(a.field(), n, nullspace(sys));
}

AxiomReport lemma_suite(const Algebra &a)
{
	AxiomReport rep;
	for (std::size_t i = 0; i < a.dim(); ++i) {
		const Vec v = a.d_basis(i);
		rep.expect("d(a)^2 = 0", {i}, a.mul(v, v), a.zero());
	}
	if (auto w = noncommuting_pair(a)) {
		const auto [i, j] = *w;
		const Vec da = a.d_basis(i), db = a.d_basis(j);
		const Vec dadb = a.mul(da, db);
		rep.expect("commutator = d(a)d(b)", {i, j},
		           a.product(i, j) + a.product(j, i), dadb);
		++rep.checks;
		const Matrix triple = Matrix::from_rows(a.field(), a.dim(), {da, db, dadb});
		if (rank(triple) != 3)
			rep.fail("independence of {d(a), d(b), d(a)d(b)}", {i, j}, dadb, a.zero());
		else
			rep.notes.push_back("independent triple from noncommuting pair (" +
			                    a.label(i) + ", " + a.label(j) + ")");
	} else {
		rep.notes.push_back("commutative: independence check vacuous");
	}
	return rep;
}

AxiomReport small_dim_commutativity_check(const Algebra &a)
{
	AxiomReport rep;
	const Subspace ker = ker_d(a), im = im_d(a), z = center(a);
	rep.checks += 3;
	if (!ker.contains(im))
		rep.fail("Im(d) within Ker(d)", {}, {}, {});
	if (!z.contains(ker))
		rep.fail("Ker(d) within Z(A)", {}, {}, {});
	if (!(im.dim() < ker.dim()))
		rep.fail("theorem: dim Im(d) < dim Ker(d)", {im.dim(), ker.dim()}, {}, {});
	const auto w = noncommuting_pair(a);
	rep.checks += 2;
	if (im.dim() <= 2) {
		if (w)
			rep.fail("theorem: dim Im(d) <= 2 implies commutative", {w->first, w->second},
			         a.product(w->first, w->second), a.product(w->second, w->first));
	} else {
		rep.notes.push_back("dim Im(d) = " + std::to_string(im.dim()) +
		                    ": commutativity implication vacuous");
	}
	if (a.dim() <= 6) {
		if (w)
			rep.fail("theorem: dim A <= 6 implies commutative", {w->first, w->second},
			         a.product(w->first, w->second), a.product(w->second, w->first));
	} else {
		rep.notes.push_back("dim A = " + std::to_string(a.dim()) +
		                    ": small-dimension implication vacuous");
	}
	return rep;
}

// ---------------------------------------------------------------- homology

Homology homology(const Algebra &a)
{
	const Field &f = a.field();
	Subspace ker = ker_d(a), im = im_d(a);
	if (im.contains(a.one()))
		throw TheoremViolation("unit lies in Im(d)");
	std::vector<Vec> reps = im.extend_basis({a.one()}, ker.basis());
	QuotientCoords coords(reps, im);
	const std::size_t h = reps.size();
	std::vector<FieldElem> t;
	t.reserve(h * h * h);
	for (std::size_t i = 0; i < h; ++i)
		for (std::size_t j = 0; j < h; ++j) {
			const Vec c = coords(a.mul(reps[i], reps[j]));
			t.insert(t.end(), c.begin(), c.end());
		}
	std::vector<std::string> labels;
	for (std::size_t i = 0; i < h; ++i)
		labels.push_back("[" + std::to_string(i) + "]");
	Algebra alg(f, h, std::move(t), Matrix(f, h, h), std::move(labels));
	return Homology{std::move(alg), std::move(ker), std::move(im), std::move(coords)};
}

std::size_t defect(const Algebra &a) { return a.dim() - 2 * im_d(a).dim(); }

// ---------------------------------------------------------------- morphisms

Morphism compose(const Morphism &g, const Morphism &f)
{
	if (!(f.target == g.source || *f.target == *g.source))
		throw AmbientMismatch("composing morphisms with mismatched middle algebra");
	return Morphism{f.source, g.target, g.mat * f.mat};
}

Morphism invert(const Morphism &m)
{
	return Morphism{m.target, m.source, inverse(m.mat)};
}

Morphism identity_morphism(const AlgebraPtr &a)
{
	return Morphism{a, a, Matrix::identity(a->field(), a->dim())};
}

AxiomReport verify_morphism(const Morphism &m, bool require_bijective)
{
	AxiomReport rep;
	const Algebra &s = *m.source, &t = *m.target;
	if (&s.field() != &t.field() || &m.mat.field() != &s.field()) {
		rep.fail("common base field", {}, {}, {});
		return rep;
	}
	if (m.mat.rows() != t.dim() || m.mat.cols() != s.dim()) {
		rep.fail("matrix shape", {m.mat.rows(), m.mat.cols()}, {}, {});
		return rep;
	}
	const auto images = m.mat.column_list();
	rep.expect("unital", {0}, images[0], t.one());
	for (std::size_t i = 0; i < s.dim(); ++i)
		for (std::size_t j = 0; j < s.dim(); ++j)
			rep.expect("multiplicative", {i, j}, m.mat.apply(s.product(i, j)),
			           t.mul(images[i], images[j]));
	for (std::size_t j = 0; j < s.dim(); ++j)
		rep.expect("commutes with d", {j}, m.mat.apply(s.d_basis(j)), t.d(images[j]));
	if (require_bijective) {
		++rep.checks;
		if (s.dim() != t.dim() || rank(m.mat) != s.dim())
			rep.fail("bijective", {rank(m.mat), s.dim(), t.dim()}, {}, {});
	}
	return rep;
}

// ---------------------------------------------------------------- constructions

Algebra direct_product(const Algebra &a, const Algebra &b)
{
	if (&a.field() != &b.field())
		throw FieldMismatch("direct product of algebras over different fields");
	const Field &f = a.field();
	const std::size_t na = a.dim(), nb = b.dim(), n = na + nb;
	std::vector<FieldElem> raw(n * n * n, f.zero());
	Matrix d(f, n, n);
	for (std::size_t i = 0; i < na; ++i)
		for (std::size_t j = 0; j < na; ++j)
			for (std::size_t l = 0; l < na; ++l)
				raw[(i * n + j) * n + l] = a.coeff(i, j, l);
	for (std::size_t i = 0; i < nb; ++i)
		for (std::size_t j = 0; j < nb; ++j)
			for (std::size_t l = 0; l < nb; ++l)
				raw[((na + i) * n + na + j) * n + na + l] = b.coeff(i, j, l);
	for (std::size_t r = 0; r < na; ++r)
		for (std::size_t c = 0; c < na; ++c)
			d(r, c) = a.dmat()(r, c);
	for (std::size_t r = 0; r < nb; ++r)
		for (std::size_t c = 0; c < nb; ++c)
			d(na + r, na + c) = b.dmat()(r, c);
	const Algebra block(f, n, std::move(raw), std::move(d));

	std::vector<Vec> basis{unit_vec(f, n, 0) + unit_vec(f, n, na)};
	std::vector<std::string> labels{"1"};
	for (std::size_t i = 1; i < na; ++i) {
		basis.push_back(unit_vec(f, n, i));
		labels.push_back("a." + a.label(i));
	}
	for (std::size_t j = 0; j < nb; ++j) {
		basis.push_back(unit_vec(f, n, na + j));
		labels.push_back("b." + b.label(j));
	}
	return on_basis(block, basis, std::move(labels));
}

QuotientAlgebra quotient(const AlgebraPtr &ap, const Subspace &ideal)
{
	const Algebra &a = *ap;
	const Field &f = a.field();
	if (ideal.ambient_dim() != a.dim())
		throw DimensionMismatch("ideal lives in a space of the wrong dimension");
	for (const Vec &v : ideal.basis()) {
		if (!ideal.contains(a.d(v)))
			throw NotDIdeal("subspace is not closed under d");
		for (std::size_t k = 0; k < a.dim(); ++k)
			if (!ideal.contains(a.mul(a.basis(k), v)) || !ideal.contains(a.mul(v, a.basis(k))))
				throw NotDIdeal("subspace is not a two-sided ideal");
	}
	if (ideal.contains(a.one()))
		throw NotDIdeal("the unit ideal has a zero quotient");
	std::vector<Vec> reps = ideal.quotient_basis();
	QuotientCoords coords(reps, ideal);
	const std::size_t m = reps.size();
	std::vector<FieldElem> t;
	t.reserve(m * m * m);
	for (std::size_t i = 0; i < m; ++i)
		for (std::size_t j = 0; j < m; ++j) {
			const Vec c = coords(a.mul(reps[i], reps[j]));
			t.insert(t.end(), c.begin(), c.end());
		}
	std::vector<Vec> dcols;
	for (const Vec &r : reps)
		dcols.push_back(coords(a.d(r)));
	std::vector<std::string> labels;
	for (const Vec &r : reps)
		for (std::size_t i = 0; i < r.size(); ++i)
			if (!r[i].is_zero())
				labels.push_back(a.label(i));
	auto q = share(Algebra(f, m, std::move(t), Matrix::from_columns(f, m, dcols),
	                       std::move(labels)));
	std::vector<Vec> pcols;
	for (std::size_t j = 0; j < a.dim(); ++j)
		pcols.push_back(coords(a.basis(j)));
	Morphism proj{ap, q, Matrix::from_columns(f, m, pcols)};
	return QuotientAlgebra{q, std::move(proj), std::move(reps)};
}

} // namespace sv2
