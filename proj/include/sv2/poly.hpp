#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sv2/linalg.hpp"

namespace sv2 {

/// Dense univariate polynomial, coefficient i of t^i, trailing zeros trimmed.
class UniPoly {
public:
	explicit UniPoly(const Field &f) : f_(&f) {}
	UniPoly(const Field &f, std::vector<FieldElem> coeffs);

	static UniPoly monomial(const Field &f, std::size_t degree,
	                        const FieldElem &coeff);
	/// t - root
	static UniPoly linear(const FieldElem &root);

	const Field &field() const { return *f_; }
	/// -1 for the zero polynomial.
	int degree() const { return static_cast<int>(c_.size()) - 1; }
	bool is_zero() const { return c_.empty(); }
	const std::vector<FieldElem> &coeffs() const { return c_; }
	FieldElem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : f_->zero(); }
	FieldElem leading() const;

	UniPoly operator+(const UniPoly &o) const;
	UniPoly operator-(const UniPoly &o) const { return *this + o; }
	UniPoly operator*(const UniPoly &o) const;
	UniPoly scale(const FieldElem &s) const;
	bool operator==(const UniPoly &o) const { return f_ == o.f_ && c_ == o.c_; }

	/// Throws DivideByZero on a zero divisor.
	std::pair<UniPoly, UniPoly> divmod(const UniPoly &d) const;
	UniPoly operator/(const UniPoly &d) const { return divmod(d).first; }
	UniPoly operator%(const UniPoly &d) const { return divmod(d).second; }

	UniPoly monic() const;
	UniPoly derivative() const;
	FieldElem eval(const FieldElem &x) const;
	/// p(M) for a square matrix M.
	Matrix eval(const Matrix &m) const;

	std::string str() const;

private:
	void trim();

	const Field *f_;
	std::vector<FieldElem> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
UniPoly poly_gcd(const UniPoly &a, const UniPoly &b);
/// Product of the distinct monic irreducible factors (the radical).
UniPoly squarefree_part(const UniPoly &p);
/// Distinct roots in the field by exhaustive scan, ascending by bits.
std::vector<FieldElem> poly_roots(const UniPoly &p);
/// Monic annihilator of least degree, from the first linear dependence among
/// I, M, M^2, ...
UniPoly min_poly(const Matrix &m);

} // namespace sv2
