#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "sv2/lie2.hpp"

namespace sv2 {

using Word = std::vector<uint16_t>;

/// A linear combination of tensor words.
struct TElem {
	std::map<Word, FieldElem> terms;

	static TElem word(const Field &f, Word w);
	bool is_zero() const { return terms.empty(); }
	/// -1 for zero
	int degree() const;
	void add(const Word &w, const FieldElem &c);
	TElem &operator+=(const TElem &o);
	bool operator==(const TElem &o) const { return terms == o.terms; }
	std::string str() const;
};

/// Number of index inversions.
std::size_t word_defect(const Word &w);

enum class Strategy { leftmost, rightmost, random };

/// L moved to a basis whose first kk vectors are the reduced basis of
/// Im(d), with chosen preimages w_i (d w_i = v_i), and a memo of normal
/// forms. Lookups and inserts into the memo are serialized; the rewriting
/// itself runs unlocked.
class StraightenCtx {
public:
	explicit StraightenCtx(const LieAlgebra &l);

	/// Same basis, other preimages (coordinates in the transported basis).
	/// Inconsistent unless d(w_i) = v_i.
	StraightenCtx with_preimages(std::vector<Vec> preimages) const;

	const LieAlgebra &lie() const { return l_; }
	/// columns: the transported basis in the original coordinates
	const Matrix &basis_change() const { return to_orig_; }
	std::size_t kk() const { return kk_; }
	const std::vector<Vec> &preimages() const { return w_; }
	const Field &field() const { return l_.field(); }

	std::size_t k_degree(const Word &w) const;
	bool is_standard(const Word &w) const;

	/// Normal form modulo J(L). The random strategy draws descent choices
	/// from `seed`.
	TElem straighten(const Word &w, Strategy s = Strategy::leftmost,
	                 uint64_t seed = 0) const;
	TElem straighten(const TElem &e, Strategy s = Strategy::leftmost,
	                 uint64_t seed = 0) const;

private:
	struct Memo {
		std::mutex lock;
		std::map<Word, TElem> left, right;
	};
	StraightenCtx(LieAlgebra l, Matrix to_orig, std::size_t kk, std::vector<Vec> w);

	TElem rewrite(const Word &w, Strategy s, uint64_t &rng,
	              std::map<Word, TElem> *scratch) const;

	LieAlgebra l_;
	Matrix to_orig_;
	std::size_t kk_;
	std::vector<Vec> w_;
	std::vector<bool> has_d_;
	std::shared_ptr<Memo> memo_;
};

/// straighten(ab); DegreeOverflow when deg a + deg b > bound.
TElem u_mul(const StraightenCtx &ctx, const TElem &a, const TElem &b, std::size_t bound);

/// Standard words of length <= deg over m letters whose first kk letters
/// appear at most once.
std::size_t standard_count(std::size_t m, std::size_t kk, std::size_t deg);
std::vector<Word> standard_words(std::size_t m, std::size_t kk, std::size_t deg);

/// straighten(u (xy + yx + dy dx + [x,y]) w) = 0 for standard u, w and
/// basis x, y within the bound; outputs standard and stable; basis vectors
/// of L stay independent in degree 1.
AxiomReport verify_pbw(const StraightenCtx &ctx, std::size_t bound);

struct ConfluenceReport {
	std::size_t trials = 0;
	std::size_t discrepancies = 0;
	std::string text;
	uint64_t digest = 0;
};

/// Random words under the three strategies and a second preimage choice
/// w_i + (sum of a Ker(d) basis).
ConfluenceReport confluence_test(const StraightenCtx &ctx, std::size_t trials,
                                 std::size_t max_len, uint64_t seed);

uint64_t fnv1a(const std::string &s);

} // namespace sv2
