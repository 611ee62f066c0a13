#pragma once

#include <optional>
#include <vector>

#include "sv2/algebra.hpp"

namespace sv2 {

/// A two-sided ideal closed under d, as a subspace of its ambient algebra.
class DIdeal {
public:
	/// Checks closure; NotDIdeal when it fails.
	DIdeal(AlgebraPtr ambient, Subspace space);

	static DIdeal zero(const AlgebraPtr &a);
	static DIdeal whole(const AlgebraPtr &a);

	const AlgebraPtr &ambient() const { return a_; }
	const Subspace &space() const { return s_; }
	std::size_t dim() const { return s_.dim(); }
	bool contains(const Vec &v) const { return s_.contains(v); }
	bool operator==(const DIdeal &o) const { return s_ == o.s_; }

private:
	AlgebraPtr a_;
	Subspace s_;
};

/// The first failing closure law of `s` in `a`, or nothing.
std::optional<std::string> d_ideal_defect(const Algebra &a, const Subspace &s);

/// Least subspace containing the generators that is stable under left
/// multiplication and d. Right stability is then checked, not imposed:
/// TheoremViolation if it fails.
DIdeal close(const AlgebraPtr &a, const std::vector<Vec> &generators);

DIdeal ideal_sum(const DIdeal &i, const DIdeal &j);
DIdeal ideal_intersect(const DIdeal &i, const DIdeal &j);
/// span{uv : u in I, v in J} from the two bases
DIdeal ideal_product(const DIdeal &i, const DIdeal &j);
/// I^0 is the whole algebra.
DIdeal ideal_power(const DIdeal &i, std::size_t m);
bool is_coprime(const DIdeal &i, const DIdeal &j);
/// Least m >= 1 with I^m = 0, or nothing when the powers stall above zero.
std::optional<std::size_t> nilpotency_index(const DIdeal &i);

} // namespace sv2
