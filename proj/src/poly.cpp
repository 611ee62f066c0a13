#include "sv2/poly.hpp"

namespace sv2 {

UniPoly::UniPoly(const Field &f, std::vector<FieldElem> coeffs)
    : f_(&f), c_(std::move(coeffs))
{
	trim();
}

void UniPoly::trim()
{
	while (!c_.empty() && c_.back().is_zero())
		c_.pop_back();
}

UniPoly UniPoly::monomial(const Field &f, std::size_t degree, const FieldElem &coeff)
{
	std::vector<FieldElem> c(degree + 1, f.zero());
	c[degree] = coeff;
	return UniPoly(f, std::move(c));
}

UniPoly UniPoly::linear(const FieldElem &root)
{
	const Field &f = root.field();
	return UniPoly(f, {root, f.one()});
}

FieldElem UniPoly::leading() const { return c_.empty() ? f_->zero() : c_.back(); }

UniPoly UniPoly::operator+(const UniPoly &o) const
{
	std::vector<FieldElem> c(std::max(c_.size(), o.c_.size()), f_->zero());
	for (std::size_t i = 0; i < c.size(); ++i)
		c[i] = coeff(i) + o.coeff(i);
	return UniPoly(*f_, std::move(c));
}

UniPoly UniPoly::operator*(const UniPoly &o) const
{
	if (is_zero() || o.is_zero())
		return UniPoly(*f_);
	std::vector<FieldElem> c(c_.size() + o.c_.size() - 1, f_->zero());
	for (std::size_t i = 0; i < c_.size(); ++i)
		for (std::size_t j = 0; j < o.c_.size(); ++j)
			c[i + j] += c_[i] * o.c_[j];
	return UniPoly(*f_, std::move(c));
}

UniPoly UniPoly::scale(const FieldElem &s) const
{
	std::vector<FieldElem> c = c_;
	for (auto &x : c)
		x *= s;
	return UniPoly(*f_, std::move(c));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly &d) const
{
	if (d.is_zero())
		throw DivideByZero("polynomial division by zero");
	std::vector<FieldElem> rem = c_;
	const int dd = d.degree();
	if (degree() < dd)
		return {UniPoly(*f_), *this};
	std::vector<FieldElem> quo(static_cast<std::size_t>(degree() - dd + 1), f_->zero());
	const FieldElem inv = d.leading().inverse();
	for (int i = degree(); i >= dd; --i) {
		const FieldElem c = rem[static_cast<std::size_t>(i)] * inv;
		if (c.is_zero())
			continue;
		quo[static_cast<std::size_t>(i - dd)] = c;
		for (int j = 0; j <= dd; ++j)
			rem[static_cast<std::size_t>(i - dd + j)] += c * d.c_[static_cast<std::size_t>(j)];
	}
	return {UniPoly(*f_, std::move(quo)), UniPoly(*f_, std::move(rem))};
}

UniPoly UniPoly::monic() const
{
	if (is_zero())
		return *this;
	return scale(leading().inverse());
}

UniPoly UniPoly::derivative() const
{
	if (c_.size() <= 1)
		return UniPoly(*f_);
	std::vector<FieldElem> c(c_.size() - 1, f_->zero());
	for (std::size_t i = 1; i < c_.size(); ++i)
		if (i % 2 == 1)
			c[i - 1] = c_[i];
	return UniPoly(*f_, std::move(c));
}

FieldElem UniPoly::eval(const FieldElem &x) const
{
	FieldElem r = f_->zero();
	for (auto it = c_.rbegin(); it != c_.rend(); ++it)
		r = r * x + *it;
	return r;
}

Matrix UniPoly::eval(const Matrix &m) const
{
	const std::size_t n = m.rows();
	Matrix r(*f_, n, n);
	for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
		r = r * m;
		for (std::size_t i = 0; i < n; ++i)
			r(i, i) += *it;
	}
	return r;
}

std::string UniPoly::str() const
{
	if (is_zero())
		return "0";
	std::string s;
	for (int i = degree(); i >= 0; --i) {
		const FieldElem c = c_[static_cast<std::size_t>(i)];
		if (c.is_zero())
			continue;
		if (!s.empty())
			s += " + ";
		if (i == 0 || !c.is_one())
			s += c.hex();
		if (i > 0) {
			if (!c.is_one())
				s += "*";
			s += "t";
			if (i > 1)
				s += "^" + std::to_string(i);
		}
	}
	return s;
}

UniPoly poly_gcd(const UniPoly &a, const UniPoly &b)
{
	UniPoly x = a, y = b;
	while (!y.is_zero()) {
		UniPoly r = x % y;
		x = std::move(y);
		y = std::move(r);
	}
	return x.monic();
}

namespace {

// p(t) = q(t^2) with every coefficient of q replaced by its square root.
UniPoly frobenius_root(const UniPoly &p)
{
	std::vector<FieldElem> c;
	for (int i = 0; i <= p.degree(); i += 2)
		c.push_back(p.coeff(static_cast<std::size_t>(i)).sqrt());
	return UniPoly(p.field(), std::move(c));
}

} // namespace

UniPoly squarefree_part(const UniPoly &p)
{
	const Field &f = p.field();
	if (p.degree() <= 0)
		return UniPoly(f, {f.one()});
	const UniPoly dp = p.derivative();
	if (dp.is_zero())
		return squarefree_part(frobenius_root(p));
	const UniPoly g = poly_gcd(p, dp);
	// factors with multiplicity prime to 2 survive in p/g
	const UniPoly w = (p / g).monic();
	const UniPoly rest = squarefree_part(g);
	const UniPoly common = poly_gcd(w, rest);
	return (w * rest / common).monic();
}

std::vector<FieldElem> poly_roots(const UniPoly &p)
{
	std::vector<FieldElem> roots;
	if (p.is_zero())
		throw std::invalid_argument("poly_roots of the zero polynomial");
	for (const FieldElem &x : p.field().elements())
		if (p.eval(x).is_zero())
			roots.push_back(x);
	return roots;
}

UniPoly min_poly(const Matrix &m)
{
	if (m.rows() != m.cols())
		throw DimensionMismatch("min_poly of a non-square matrix");
	const Field &f = m.field();
	const std::size_t n = m.rows();
	if (n == 0)
		return UniPoly(f, {f.one()});
	auto flatten = [&](const Matrix &a) {
		Vec v;
		v.reserve(n * n);
		for (std::size_t r = 0; r < n; ++r)
			for (std::size_t c = 0; c < n; ++c)
				v.push_back(a(r, c));
		return v;
	};
	std::vector<Vec> powers{flatten(Matrix::identity(f, n))};
	Matrix cur = Matrix::identity(f, n);
	for (std::size_t d = 1; d <= n; ++d) {
		cur = cur * m;
		const Vec target = flatten(cur);
		const Matrix sys = Matrix::from_columns(f, n * n, powers);
		if (auto c = try_solve(sys, target)) {
			std::vector<FieldElem> coeffs(*c);
			coeffs.push_back(f.one());
			return UniPoly(f, std::move(coeffs));
		}
		powers.push_back(target);
	}
	throw TheoremViolation("no annihilating polynomial up to the matrix size");
}

} // namespace sv2
