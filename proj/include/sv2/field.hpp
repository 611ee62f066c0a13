#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sv2/errors.hpp"

namespace sv2 {

class FieldElem;

/// GF(2^k) for 1 <= k <= 16, elements stored as bit vectors in the
/// polynomial basis modulo a fixed irreducible polynomial.
///
/// Fields are canonical: `Field::gf(k)` always returns the same object,
/// so elements can be compared by field address.
class Field {
public:
	static constexpr int max_degree = 16;

	static const Field &gf(int degree);

	/// The shipped modulus for degree k, bit i = coefficient of t^i.
	static uint32_t modulus_for(int degree);

	int degree() const { return degree_; }
	uint32_t modulus() const { return modulus_; }
	uint32_t order() const { return uint32_t{1} << degree_; }
	std::string name() const { return "gf2_" + std::to_string(degree_); }

	FieldElem zero() const;
	FieldElem one() const;
	/// Throws DimensionMismatch when bits do not fit in degree() positions.
	FieldElem elem(uint32_t bits) const;
	/// Every element in increasing bit order.
	std::vector<FieldElem> elements() const;

	uint32_t mul_bits(uint32_t a, uint32_t b) const;
	uint32_t pow_bits(uint32_t a, uint64_t e) const;

	Field(const Field &) = delete;
	Field &operator=(const Field &) = delete;

private:
	explicit Field(int degree);

	int degree_;
	uint32_t modulus_;
};

class FieldElem {
public:
	FieldElem(const Field &f, uint32_t bits) : f_(&f), v_(bits) {}

	const Field &field() const { return *f_; }
	uint32_t bits() const { return v_; }
	bool is_zero() const { return v_ == 0; }
	bool is_one() const { return v_ == 1; }

	FieldElem operator+(const FieldElem &o) const
	{
		check(o);
		return FieldElem(*f_, v_ ^ o.v_);
	}
	// characteristic 2: subtraction is addition
	FieldElem operator-(const FieldElem &o) const { return *this + o; }
	FieldElem operator-() const { return *this; }
	FieldElem operator*(const FieldElem &o) const
	{
		check(o);
		return FieldElem(*f_, f_->mul_bits(v_, o.v_));
	}
	FieldElem operator/(const FieldElem &o) const { return *this * o.inverse(); }
	FieldElem &operator+=(const FieldElem &o) { return *this = *this + o; }
	FieldElem &operator-=(const FieldElem &o) { return *this = *this + o; }
	FieldElem &operator*=(const FieldElem &o) { return *this = *this * o; }

	FieldElem inverse() const;
	FieldElem pow(uint64_t e) const { return FieldElem(*f_, f_->pow_bits(v_, e)); }
	FieldElem square() const { return *this * *this; }
	/// The unique square root; Frobenius is a bijection on GF(2^k).
	FieldElem sqrt() const;

	bool operator==(const FieldElem &o) const { return f_ == o.f_ && v_ == o.v_; }
	std::strong_ordering operator<=>(const FieldElem &o) const
	{
		check(o);
		return v_ <=> o.v_;
	}

	/// "0x3" style literal.
	std::string hex() const;

private:
	void check(const FieldElem &o) const
	{
		if (f_ != o.f_)
			throw FieldMismatch("operands live in " + f_->name() + " and " +
			                    o.f_->name());
	}

	const Field *f_;
	uint32_t v_;
};

inline FieldElem Field::zero() const { return FieldElem(*this, 0); }
inline FieldElem Field::one() const { return FieldElem(*this, 1); }

/// Parses "0x1f" or "1f"; throws std::invalid_argument on bad text.
uint32_t parse_hex(const std::string &text);
std::string to_hex(uint32_t bits);

/// Roots of a t^2 + b t + c in the field, ascending by bits. Requires (a, b)
/// not both zero. Throws NeedsExtension when a != 0 and no root exists.
std::vector<FieldElem> quad_roots(const FieldElem &a, const FieldElem &b,
                                  const FieldElem &c);

/// GF(2^k) -> GF(2^2k) as a ring embedding, determined by the image of t.
class Embedding {
public:
	Embedding(const Field &small, const Field &big, FieldElem root)
	    : small_(&small), big_(&big), root_(root)
	{
	}

	const Field &source() const { return *small_; }
	const Field &target() const { return *big_; }
	FieldElem image_of_generator() const { return root_; }

	FieldElem operator()(const FieldElem &a) const;

private:
	const Field *small_;
	const Field *big_;
	FieldElem root_;
};

/// Doubles the degree. Throws DegreeLimit past GF(2^16).
Embedding field_extend(const Field &f);

/// Irreducibility over GF(2) by trial division; used to vet the modulus table.
bool is_irreducible_gf2(uint32_t poly);

} // namespace sv2
