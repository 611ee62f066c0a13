#include "sv2/lie2.hpp"

namespace sv2 {

LieAlgebra::LieAlgebra(const Field &f, std::size_t n, std::vector<FieldElem> bracket,
                       Matrix dmat, std::vector<std::string> labels)
    : f_(&f), n_(n), b_(std::move(bracket)), d_(std::move(dmat)), labels_(std::move(labels))
{
	if (b_.size() != n * n * n)
		throw DimensionMismatch("bracket tensor needs n^3 entries");
	if (d_.rows() != n || d_.cols() != n)
		throw DimensionMismatch("differential must be n x n");
	if (labels_.empty())
		for (std::size_t i = 0; i < n; ++i)
			labels_.push_back("e" + std::to_string(i));
	if (labels_.size() != n)
		throw DimensionMismatch("one label per basis vector required");
}

Vec LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const
{
	const auto base = static_cast<std::ptrdiff_t>((i * n_ + j) * n_);
	return Vec(b_.begin() + base, b_.begin() + base + static_cast<std::ptrdiff_t>(n_));
}

Vec LieAlgebra::bracket(const Vec &x, const Vec &y) const
{
	if (x.size() != n_ || y.size() != n_)
		throw DimensionMismatch("bracket operands must have " + std::to_string(n_) +
		                        " coordinates");
	Vec out = zero();
	for (std::size_t i = 0; i < n_; ++i) {
		if (x[i].is_zero())
			continue;
		for (std::size_t j = 0; j < n_; ++j) {
			if (y[j].is_zero())
				continue;
			const FieldElem s = x[i] * y[j];
			const std::size_t base = (i * n_ + j) * n_;
			for (std::size_t l = 0; l < n_; ++l)
				out[l] += s * b_[base + l];
		}
	}
	return out;
}

Vec LieAlgebra::d(const Vec &x) const
{
	if (x.size() != n_)
		throw DimensionMismatch("element has the wrong length");
	return d_.apply(x);
}

Matrix LieAlgebra::ad_matrix(const Vec &x) const
{
	std::vector<Vec> cols;
	for (std::size_t j = 0; j < n_; ++j)
		cols.push_back(bracket(x, basis(j)));
	return Matrix::from_columns(*f_, n_, cols);
}

bool LieAlgebra::operator==(const LieAlgebra &o) const
{
	return f_ == o.f_ && n_ == o.n_ && b_ == o.b_ && d_ == o.d_;
}

AxiomReport verify_lie(const LieAlgebra &l)
{
	AxiomReport rep;
	const std::size_t n = l.dim();
	const Matrix dd = l.dmat() * l.dmat();
	for (std::size_t j = 0; j < n; ++j)
		rep.expect("d^2 = 0", {j}, dd.column(j), l.zero());
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			const Vec x = l.basis(i), y = l.basis(j);
			const Vec dx = l.d(x), dy = l.d(y);
			rep.expect("derivation", {i, j}, l.d(l.bracket_basis(i, j)),
			           l.bracket(dx, y) + l.bracket(x, dy));
			rep.expect("antisymmetry", {i, j},
			           l.bracket_basis(i, j) + l.bracket_basis(j, i) + l.bracket(dy, dx),
			           l.zero());
		}
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k) {
				const Vec x = l.basis(i), y = l.basis(j), z = l.basis(k);
				rep.expect("Jacobi", {i, j, k},
				           l.bracket(x, l.bracket(y, z)) + l.bracket(y, l.bracket(x, z)) +
				               l.bracket(l.d(y), l.bracket(l.d(x), z)),
				           l.bracket(l.bracket(x, y), z));
			}
	const Subspace ker(l.field(), n, nullspace(l.dmat()));
	for (std::size_t i = 0; i < ker.dim(); ++i) {
		const Vec &x = ker.basis()[i];
		rep.expect("[x,x] = 0 on Ker(d)", {i}, l.bracket(x, x), l.zero());
	}
	rep.notes.push_back("[x,x] = 0 checked on a basis of Ker(d): on Ker(d) the square "
	                    "is additive by antisymmetry and scales by lambda^2");
	return rep;
}

AxiomReport jacobi_seven_term_check(const LieAlgebra &l)
{
	AxiomReport rep;
	const std::size_t n = l.dim();
	auto br = [&](const Vec &a, const Vec &b) { return l.bracket(a, b); };
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k) {
				const Vec x = l.basis(i), y = l.basis(j), z = l.basis(k);
				const Vec dx = l.d(x), dy = l.d(y), dz = l.d(z);
				Vec s = br(br(x, y), z);
				s += br(br(z, x), y);
				s += br(br(dz, dx), y);
				s += br(br(dz, x), dy);
				s += br(br(y, z), x);
				s += br(br(y, dz), dx);
				s += br(br(dy, z), dx);
				rep.expect("seven-term Jacobi", {i, j, k}, s, l.zero());
			}
	return rep;
}

bool ad_identity_holds(const LieAlgebra &l, const Vec &x, const Vec &y)
{
	const Matrix ax = l.ad_matrix(x), ay = l.ad_matrix(y);
	const Matrix lhs = ax * ay + ay * ax + l.ad_matrix(l.d(y)) * l.ad_matrix(l.d(x));
	return lhs == l.ad_matrix(l.bracket(x, y));
}

LieAlgebra commutator_lie(const Algebra &a)
{
	const std::size_t n = a.dim();
	std::vector<FieldElem> b;
	b.reserve(n * n * n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			const Vec c =
			    a.product(i, j) + a.product(j, i) + a.mul(a.d_basis(j), a.d_basis(i));
			b.insert(b.end(), c.begin(), c.end());
		}
	return LieAlgebra(a.field(), n, std::move(b), a.dmat(), a.labels());
}

Algebra gl_object(std::size_t m, const Matrix &dv)
{
	const Field &f = dv.field();
	if (dv.rows() != m || dv.cols() != m)
		throw DimensionMismatch("dV must be " + std::to_string(m) + "x" + std::to_string(m));
	if (!(dv * dv).is_zero())
		throw BadDifferential("dV^2 != 0");
	const std::size_t n = m * m;
	auto unit = [&](std::size_t i, std::size_t j) {
		Matrix e(f, m, m);
		e(i, j) = f.one();
		return e;
	};
	auto flat = [&](const Matrix &x) {
		Vec v;
		for (std::size_t i = 0; i < m; ++i)
			for (std::size_t j = 0; j < m; ++j)
				v.push_back(x(i, j));
		return v;
	};
	// raw basis E_ij at index i * m + j
	std::vector<FieldElem> t;
	t.reserve(n * n * n);
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = 0; b < n; ++b) {
			const Vec c = flat(unit(a / m, a % m) * unit(b / m, b % m));
			t.insert(t.end(), c.begin(), c.end());
		}
	std::vector<Vec> dcols;
	for (std::size_t a = 0; a < n; ++a) {
		const Matrix e = unit(a / m, a % m);
		dcols.push_back(flat(dv * e + e * dv));
	}
	const Algebra raw(f, n, std::move(t), Matrix::from_columns(f, n, dcols));
	std::vector<Vec> basis{flat(Matrix::identity(f, m))};
	std::vector<std::string> labels{"I"};
	for (std::size_t a = 1; a < n; ++a) {
		basis.push_back(unit_vec(f, n, a));
		labels.push_back("E" + std::to_string(a / m) + std::to_string(a % m));
	}
	return on_basis(raw, basis, std::move(labels));
}

LieAlgebra axiom4_counterexample(const Field &f)
{
	std::vector<FieldElem> b(8, f.zero());
	b[(0 * 2 + 0) * 2 + 1] = f.one();
	return LieAlgebra(f, 2, std::move(b), Matrix(f, 2, 2), {"x", "y"});
}

} // namespace sv2
