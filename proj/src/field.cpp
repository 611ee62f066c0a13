#include "sv2/field.hpp"

#include <array>
#include <bit>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace sv2 {

namespace {

// One low-weight irreducible polynomial per degree, t^k term included.
constexpr std::array<uint32_t, 17> kModuli = {
    0,       0x3,    0x7,    0xB,    0x13,   0x25,   0x43,   0x83,   0x11B,
    0x211,   0x409,  0x805,  0x1053, 0x201B, 0x4443, 0x8003, 0x1002B,
};

int degree_of(uint32_t p) { return p == 0 ? -1 : 31 - std::countl_zero(p); }

uint32_t poly_mod_gf2(uint64_t a, uint32_t m)
{
	const int dm = degree_of(m);
	for (int i = 63; i >= dm; --i)
		if ((a >> i) & 1)
			a ^= uint64_t{m} << (i - dm);
	return static_cast<uint32_t>(a);
}

uint64_t clmul(uint32_t a, uint32_t b)
{
	uint64_t r = 0;
	uint64_t aa = a;
	while (b) {
		if (b & 1)
			r ^= aa;
		aa <<= 1;
		b >>= 1;
	}
	return r;
}

} // namespace

bool is_irreducible_gf2(uint32_t poly)
{
	const int d = degree_of(poly);
	if (d <= 0)
		return false;
	for (uint32_t q = 2; degree_of(q) <= d / 2; ++q)
		if (poly_mod_gf2(poly, q) == 0)
			return false;
	return true;
}

uint32_t Field::modulus_for(int degree)
{
	if (degree < 1 || degree > max_degree)
		throw DegreeLimit("field degree " + std::to_string(degree) +
		                  " outside 1..16");
	return kModuli[static_cast<std::size_t>(degree)];
}

Field::Field(int degree) : degree_(degree), modulus_(modulus_for(degree)) {}

const Field &Field::gf(int degree)
{
	static std::array<std::unique_ptr<Field>, max_degree + 1> fields;
	static std::array<std::once_flag, max_degree + 1> once;
	modulus_for(degree); // range check
	const auto i = static_cast<std::size_t>(degree);
	std::call_once(once[i], [&] { fields[i].reset(new Field(degree)); });
	return *fields[i];
}

FieldElem Field::elem(uint32_t bits) const
{
	if (bits >= order())
		throw DimensionMismatch("literal " + to_hex(bits) + " does not fit in " +
		                        name());
	return FieldElem(*this, bits);
}

std::vector<FieldElem> Field::elements() const
{
	std::vector<FieldElem> out;
	out.reserve(order());
	for (uint32_t v = 0; v < order(); ++v)
		out.emplace_back(*this, v);
	return out;
}

uint32_t Field::mul_bits(uint32_t a, uint32_t b) const
{
	return poly_mod_gf2(clmul(a, b), modulus_);
}

uint32_t Field::pow_bits(uint32_t a, uint64_t e) const
{
	uint32_t r = 1;
	while (e) {
		if (e & 1)
			r = mul_bits(r, a);
		a = mul_bits(a, a);
		e >>= 1;
	}
	return r;
}

FieldElem FieldElem::inverse() const
{
	if (v_ == 0)
		throw DivideByZero("inverse of zero in " + f_->name());
	return pow(f_->order() - 2);
}

FieldElem FieldElem::sqrt() const
{
	FieldElem r = *this;
	for (int i = 1; i < f_->degree(); ++i)
		r = r.square();
	return r;
}

std::string to_hex(uint32_t bits)
{
	static const char *digits = "0123456789abcdef";
	if (bits == 0)
		return "0x0";
	std::string s;
	while (bits) {
		s.insert(s.begin(), digits[bits & 0xf]);
		bits >>= 4;
	}
	return "0x" + s;
}

std::string FieldElem::hex() const { return to_hex(v_); }

uint32_t parse_hex(const std::string &text)
{
	std::size_t start = 0;
	if (text.size() >= 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X'))
		start = 2;
	if (start >= text.size() || text.size() - start > 8)
		throw std::invalid_argument("bad hex literal '" + text + "'");
	uint32_t v = 0;
	for (std::size_t i = start; i < text.size(); ++i) {
		const char c = text[i];
		uint32_t d;
		if (c >= '0' && c <= '9')
			d = static_cast<uint32_t>(c - '0');
		else if (c >= 'a' && c <= 'f')
			d = static_cast<uint32_t>(c - 'a' + 10);
		else if (c >= 'A' && c <= 'F')
			d = static_cast<uint32_t>(c - 'A' + 10);
		else
			throw std::invalid_argument("bad hex literal '" + text + "'");
		v = (v << 4) | d;
	}
	return v;
}

std::vector<FieldElem> quad_roots(const FieldElem &a, const FieldElem &b,
                                  const FieldElem &c)
{
	const Field &f = a.field();
	if (a.is_zero() && b.is_zero())
		throw std::invalid_argument("quad_roots: leading coefficients both zero");
	if (a.is_zero())
		return {c / b};
	std::vector<FieldElem> roots;
	for (const FieldElem &t : f.elements())
		if ((a * t * t + b * t + c).is_zero())
			roots.push_back(t);
	if (roots.empty())
		throw NeedsExtension("quadratic has no root in " + f.name() + "; try " +
		                     (f.degree() * 2 <= Field::max_degree
		                          ? "gf2_" + std::to_string(f.degree() * 2)
		                          : std::string("a larger field")));
	return roots;
}

FieldElem Embedding::operator()(const FieldElem &a) const
{
	if (&a.field() != small_)
		throw FieldMismatch("embedding expects an element of " + small_->name());
	FieldElem r = big_->zero();
	FieldElem power = big_->one();
	for (int i = 0; i < small_->degree(); ++i) {
		if ((a.bits() >> i) & 1)
			r += power;
		power *= root_;
	}
	return r;
}

Embedding field_extend(const Field &f)
{
	const int big_degree = 2 * f.degree();
	if (big_degree > Field::max_degree)
		throw DegreeLimit("cannot extend " + f.name() + " beyond gf2_16");
	const Field &big = Field::gf(big_degree);
	const uint32_t m = f.modulus();
	for (const FieldElem &t : big.elements()) {
		FieldElem acc = big.zero();
		FieldElem power = big.one();
		for (int i = 0; i <= f.degree(); ++i) {
			if ((m >> i) & 1)
				acc += power;
			power *= t;
		}
		if (acc.is_zero())
			return Embedding(f, big, t);
	}
	throw TheoremViolation("modulus of " + f.name() + " has no root in " +
	                       big.name());
}

} // namespace sv2
