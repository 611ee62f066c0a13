#include "sv2/linalg.hpp"

#include <algorithm>

namespace sv2 {

Vec zero_vec(const Field &f, std::size_t n) { return Vec(n, f.zero()); }

Vec unit_vec(const Field &f, std::size_t n, std::size_t i)
{
	Vec v = zero_vec(f, n);
	v.at(i) = f.one();
	return v;
}

bool is_zero(const Vec &v)
{
	return std::all_of(v.begin(), v.end(), [](const FieldElem &x) { return x.is_zero(); });
}

Vec operator+(const Vec &a, const Vec &b)
{
	Vec r = a;
	r += b;
	return r;
}

Vec &operator+=(Vec &a, const Vec &b)
{
	if (a.size() != b.size())
		throw DimensionMismatch("vector lengths " + std::to_string(a.size()) +
		                        " and " + std::to_string(b.size()));
	for (std::size_t i = 0; i < a.size(); ++i)
		a[i] += b[i];
	return a;
}

Vec operator*(const FieldElem &s, const Vec &v)
{
	Vec r = v;
	for (auto &x : r)
		x = s * x;
	return r;
}

void axpy(Vec &a, const FieldElem &s, const Vec &b)
{
	if (a.size() != b.size())
		throw DimensionMismatch("vector lengths differ in axpy");
	if (s.is_zero())
		return;
	for (std::size_t i = 0; i < a.size(); ++i)
		if (!b[i].is_zero())
			a[i] += s * b[i];
}

std::string to_hex(const Vec &v)
{
	std::string s = "[";
	for (std::size_t i = 0; i < v.size(); ++i) {
		if (i)
			s += ' ';
		s += v[i].hex();
	}
	return s + "]";
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(const Field &f, std::size_t rows, std::size_t cols)
    : f_(&f), rows_(rows), cols_(cols), data_(rows * cols, f.zero())
{
}

Matrix Matrix::identity(const Field &f, std::size_t n)
{
	Matrix m(f, n, n);
	for (std::size_t i = 0; i < n; ++i)
		m(i, i) = f.one();
	return m;
}

Matrix Matrix::from_rows(const Field &f, std::size_t cols, const std::vector<Vec> &rows)
{
	Matrix m(f, rows.size(), cols);
	for (std::size_t r = 0; r < rows.size(); ++r) {
		if (rows[r].size() != cols)
			throw DimensionMismatch("row length mismatch");
		for (std::size_t c = 0; c < cols; ++c)
			m(r, c) = rows[r][c];
	}
	return m;
}

Matrix Matrix::from_columns(const Field &f, std::size_t rows, const std::vector<Vec> &cols)
{
	Matrix m(f, rows, cols.size());
	for (std::size_t c = 0; c < cols.size(); ++c) {
		if (cols[c].size() != rows)
			throw DimensionMismatch("column length mismatch");
		for (std::size_t r = 0; r < rows; ++r)
			m(r, c) = cols[c][r];
	}
	return m;
}

Vec Matrix::row(std::size_t r) const
{
	return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
	           data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Matrix::column(std::size_t c) const
{
	Vec v;
	v.reserve(rows_);
	for (std::size_t r = 0; r < rows_; ++r)
		v.push_back((*this)(r, c));
	return v;
}

std::vector<Vec> Matrix::row_list() const
{
	std::vector<Vec> out;
	for (std::size_t r = 0; r < rows_; ++r)
		out.push_back(row(r));
	return out;
}

std::vector<Vec> Matrix::column_list() const
{
	std::vector<Vec> out;
	for (std::size_t c = 0; c < cols_; ++c)
		out.push_back(column(c));
	return out;
}

Matrix Matrix::transpose() const
{
	Matrix t(*f_, cols_, rows_);
	for (std::size_t r = 0; r < rows_; ++r)
		for (std::size_t c = 0; c < cols_; ++c)
			t(c, r) = (*this)(r, c);
	return t;
}

Vec Matrix::apply(const Vec &v) const
{
	if (v.size() != cols_)
		throw DimensionMismatch("matrix has " + std::to_string(cols_) +
		                        " columns, vector has " + std::to_string(v.size()));
	Vec out = zero_vec(*f_, rows_);
	for (std::size_t c = 0; c < cols_; ++c) {
		if (v[c].is_zero())
			continue;
		for (std::size_t r = 0; r < rows_; ++r)
			out[r] += (*this)(r, c) * v[c];
	}
	return out;
}

Matrix Matrix::operator*(const Matrix &o) const
{
	if (cols_ != o.rows_)
		throw DimensionMismatch("matrix product shape mismatch");
	Matrix m(*f_, rows_, o.cols_);
	for (std::size_t i = 0; i < rows_; ++i)
		for (std::size_t k = 0; k < cols_; ++k) {
			const FieldElem a = (*this)(i, k);
			if (a.is_zero())
				continue;
			for (std::size_t j = 0; j < o.cols_; ++j)
				m(i, j) += a * o(k, j);
		}
	return m;
}

Matrix Matrix::operator+(const Matrix &o) const
{
	if (rows_ != o.rows_ || cols_ != o.cols_)
		throw DimensionMismatch("matrix sum shape mismatch");
	Matrix m = *this;
	for (std::size_t i = 0; i < data_.size(); ++i)
		m.data_[i] += o.data_[i];
	return m;
}

bool Matrix::operator==(const Matrix &o) const
{
	return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool Matrix::is_zero() const
{
	return std::all_of(data_.begin(), data_.end(),
	                   [](const FieldElem &x) { return x.is_zero(); });
}

Matrix Matrix::base_change(const Embedding &e) const
{
	Matrix m(e.target(), rows_, cols_);
	for (std::size_t i = 0; i < data_.size(); ++i)
		m.data_[i] = e(data_[i]);
	return m;
}

// ---------------------------------------------------------------- elimination

Echelon rref(const Matrix &m)
{
	Matrix a = m;
	std::vector<std::size_t> pivots;
	std::size_t row = 0;
	for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
		std::size_t p = row;
		while (p < a.rows() && a(p, col).is_zero())
			++p;
		if (p == a.rows())
			continue;
		if (p != row)
			for (std::size_t c = col; c < a.cols(); ++c)
				std::swap(a(p, c), a(row, c));
		const FieldElem inv = a(row, col).inverse();
		for (std::size_t c = col; c < a.cols(); ++c)
			a(row, c) *= inv;
		for (std::size_t r = 0; r < a.rows(); ++r) {
			if (r == row || a(r, col).is_zero())
				continue;
			const FieldElem s = a(r, col);
			for (std::size_t c = col; c < a.cols(); ++c)
				a(r, c) += s * a(row, c);
		}
		pivots.push_back(col);
		++row;
	}
	return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix &m) { return rref(m).pivots.size(); }

std::vector<Vec> nullspace(const Matrix &m)
{
	const Echelon e = rref(m);
	std::vector<bool> is_pivot(m.cols(), false);
	for (auto p : e.pivots)
		is_pivot[p] = true;
	std::vector<Vec> basis;
	for (std::size_t free = 0; free < m.cols(); ++free) {
		if (is_pivot[free])
			continue;
		Vec v = unit_vec(m.field(), m.cols(), free);
		for (std::size_t i = 0; i < e.pivots.size(); ++i)
			v[e.pivots[i]] = e.reduced(i, free);
		basis.push_back(std::move(v));
	}
	return basis;
}

std::optional<Vec> try_solve(const Matrix &m, const Vec &b)
{
	if (b.size() != m.rows())
		throw DimensionMismatch("right-hand side length mismatch");
	Matrix aug(m.field(), m.rows(), m.cols() + 1);
	for (std::size_t r = 0; r < m.rows(); ++r) {
		for (std::size_t c = 0; c < m.cols(); ++c)
			aug(r, c) = m(r, c);
		aug(r, m.cols()) = b[r];
	}
	const Echelon e = rref(aug);
	if (!e.pivots.empty() && e.pivots.back() == m.cols())
		return std::nullopt;
	Vec x = zero_vec(m.field(), m.cols());
	for (std::size_t i = 0; i < e.pivots.size(); ++i)
		x[e.pivots[i]] = e.reduced(i, m.cols());
	return x;
}

Vec solve(const Matrix &m, const Vec &b)
{
	auto x = try_solve(m, b);
	if (!x)
		throw Inconsistent("linear system has no solution");
	return *x;
}

Matrix inverse(const Matrix &m)
{
	if (m.rows() != m.cols())
		throw DimensionMismatch("inverse of a non-square matrix");
	const std::size_t n = m.rows();
	Matrix aug(m.field(), n, 2 * n);
	for (std::size_t r = 0; r < n; ++r) {
		for (std::size_t c = 0; c < n; ++c)
			aug(r, c) = m(r, c);
		aug(r, n + r) = m.field().one();
	}
	const Echelon e = rref(aug);
	if (e.pivots.size() < n || e.pivots[n - 1] != n - 1)
		throw Inconsistent("matrix is singular");
	Matrix inv(m.field(), n, n);
	for (std::size_t r = 0; r < n; ++r)
		for (std::size_t c = 0; c < n; ++c)
			inv(r, c) = e.reduced(r, n + c);
	return inv;
}

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(const Field &f, std::size_t ambient) : f_(&f), ambient_(ambient) {}

Subspace::Subspace(const Field &f, std::size_t ambient, const std::vector<Vec> &spanning)
    : f_(&f), ambient_(ambient)
{
	if (spanning.empty())
		return;
	const Echelon e = rref(Matrix::from_rows(f, ambient, spanning));
	for (std::size_t i = 0; i < e.pivots.size(); ++i)
		basis_.push_back(e.reduced.row(i));
	pivots_ = e.pivots;
}

Subspace Subspace::whole(const Field &f, std::size_t ambient)
{
	std::vector<Vec> rows;
	for (std::size_t i = 0; i < ambient; ++i)
		rows.push_back(unit_vec(f, ambient, i));
	return Subspace(f, ambient, rows);
}

Matrix Subspace::basis_matrix() const { return Matrix::from_rows(*f_, ambient_, basis_); }

Vec Subspace::reduce(const Vec &v) const
{
	if (v.size() != ambient_)
		throw DimensionMismatch("vector outside the ambient space");
	Vec r = v;
	for (std::size_t i = 0; i < basis_.size(); ++i) {
		const FieldElem c = r[pivots_[i]];
		if (!c.is_zero())
			axpy(r, c, basis_[i]);
	}
	return r;
}

bool Subspace::contains(const Vec &v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace &o) const
{
	return std::all_of(o.basis_.begin(), o.basis_.end(),
	                   [&](const Vec &v) { return contains(v); });
}

bool Subspace::operator==(const Subspace &o) const
{
	return ambient_ == o.ambient_ && basis_ == o.basis_;
}

std::optional<Vec> Subspace::coords(const Vec &v) const
{
	if (!contains(v))
		return std::nullopt;
	Vec c = zero_vec(*f_, basis_.size());
	for (std::size_t i = 0; i < basis_.size(); ++i)
		c[i] = v[pivots_[i]];
	return c;
}

Subspace Subspace::sum(const Subspace &o) const
{
	if (ambient_ != o.ambient_)
		throw DimensionMismatch("subspaces of different ambient spaces");
	std::vector<Vec> rows = basis_;
	rows.insert(rows.end(), o.basis_.begin(), o.basis_.end());
	return Subspace(*f_, ambient_, rows);
}

Subspace Subspace::with(const Vec &v) const
{
	std::vector<Vec> rows = basis_;
	rows.push_back(v);
	return Subspace(*f_, ambient_, rows);
}

Subspace Subspace::intersect(const Subspace &o) const
{
	if (ambient_ != o.ambient_)
		throw DimensionMismatch("subspaces of different ambient spaces");
	const std::size_t n = ambient_;
	std::vector<Vec> rows;
	for (const Vec &u : basis_) {
		Vec r = u;
		r.insert(r.end(), u.begin(), u.end());
		rows.push_back(std::move(r));
	}
	for (const Vec &w : o.basis_) {
		Vec r = w;
		r.insert(r.end(), n, f_->zero());
		rows.push_back(std::move(r));
	}
	if (rows.empty())
		return Subspace(*f_, n);
	const Echelon e = rref(Matrix::from_rows(*f_, 2 * n, rows));
	std::vector<Vec> meet;
	for (std::size_t i = 0; i < e.pivots.size(); ++i)
		if (e.pivots[i] >= n) {
			Vec r = e.reduced.row(i);
			meet.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(n), r.end());
		}
	return Subspace(*f_, n, meet);
}

std::vector<Vec> Subspace::quotient_basis() const
{
	std::vector<Vec> cands;
	for (std::size_t i = 0; i < ambient_; ++i)
		cands.push_back(unit_vec(*f_, ambient_, i));
	return extend_basis({}, cands);
}

std::vector<Vec> Subspace::extend_basis(std::vector<Vec> seed,
                                        const std::vector<Vec> &candidates) const
{
	Subspace acc = *this;
	for (const Vec &s : seed)
		acc = acc.with(s);
	for (const Vec &c : candidates) {
		if (acc.dim() == ambient_)
			break;
		if (!acc.contains(c)) {
			acc = acc.with(c);
			seed.push_back(c);
		}
	}
	return seed;
}

// ---------------------------------------------------------------- QuotientCoords

QuotientCoords::QuotientCoords(std::vector<Vec> reps, const Subspace &modulo)
    : reps_(std::move(reps)), modulo_dim_(modulo.dim()),
      system_(modulo.field(), 0, 0)
{
	const Field &f = modulo.field();
	const std::size_t n = modulo.ambient_dim();
	std::vector<Vec> cols = reps_;
	cols.insert(cols.end(), modulo.basis().begin(), modulo.basis().end());
	const std::size_t k = cols.size();
	// rref of [S | I] yields a left inverse of S in its top rows and the
	// membership test for the column span in the remaining rows.
	Matrix aug(f, n, k + n);
	for (std::size_t c = 0; c < k; ++c)
		for (std::size_t r = 0; r < n; ++r)
			aug(r, c) = cols[c][r];
	for (std::size_t r = 0; r < n; ++r)
		aug(r, k + r) = f.one();
	const Echelon e = rref(aug);
	for (std::size_t i = 0; i < k; ++i)
		if (i >= e.pivots.size() || e.pivots[i] != i)
			throw Inconsistent("quotient representatives are not independent");
	system_ = Matrix(f, n, n);
	for (std::size_t r = 0; r < n; ++r)
		for (std::size_t c = 0; c < n; ++c)
			system_(r, c) = e.reduced(r, k + c);
}

std::optional<Vec> QuotientCoords::try_coords(const Vec &v) const
{
	const Vec t = system_.apply(v);
	const std::size_t k = reps_.size() + modulo_dim_;
	for (std::size_t i = k; i < t.size(); ++i)
		if (!t[i].is_zero())
			return std::nullopt;
	return Vec(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(reps_.size()));
}

Vec QuotientCoords::operator()(const Vec &v) const
{
	auto c = try_coords(v);
	if (!c)
		throw Inconsistent("vector lies outside span(reps) + subspace");
	return *c;
}

} // namespace sv2
