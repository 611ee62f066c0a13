#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sv2 {

class Error : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

#define SV2_ERROR(Name)                                                        \
	class Name : public Error {                                                \
	public:                                                                    \
		using Error::Error;                                                    \
	}

// ground
SV2_ERROR(DivideByZero);
SV2_ERROR(FieldMismatch);
SV2_ERROR(NeedsExtension);
SV2_ERROR(DegreeLimit);
SV2_ERROR(Inconsistent);
SV2_ERROR(DimensionMismatch);

// algebras and ideals
SV2_ERROR(NotDIdeal);
SV2_ERROR(AmbientMismatch);
SV2_ERROR(TheoremViolation);
SV2_ERROR(NonSplit);
SV2_ERROR(NotCommutative);
SV2_ERROR(WrongDefect);
SV2_ERROR(NotApplicable);
SV2_ERROR(BadDifferential);

// polynomial d-algebras
SV2_ERROR(ShapeMismatch);
SV2_ERROR(NotClosedAtBound);
SV2_ERROR(RelationsNotDClosed);
SV2_ERROR(NotGenerating);

// tensor words
SV2_ERROR(DegreeOverflow);

// text formats
SV2_ERROR(IndexOutOfRange);

#undef SV2_ERROR

class SyntaxError : public Error {
public:
	SyntaxError(const std::string &what, std::size_t line, std::size_t column)
	    : Error(what + " at line " + std::to_string(line) + ", column " +
	            std::to_string(column)),
	      line_(line), column_(column)
	{
	}

	std::size_t line() const { return line_; }
	std::size_t column() const { return column_; }

private:
	std::size_t line_;
	std::size_t column_;
};

} // namespace sv2
