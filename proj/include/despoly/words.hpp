#pragma once

#include <algorithm>
#include <vector>

#include <despoly/numbers.hpp>

namespace despoly {

/// A word over nonzero integers; letter -r is the negative of letter r.
using SignedWord = std::vector<int>;

/// An integer sequence e with 0 <= e[i] < s[i] for an ambient SSequence.
using InversionSequence = std::vector<long long>;

/// Multiplicities (m_1, ..., m_n) of the multiset {1^m_1, ..., n^m_n}.
class MultiplicityVector {
 public:
  explicit MultiplicityVector(std::vector<int> counts);
  const std::vector<int>& counts() const { return counts_; }
  int size() const { return static_cast<int>(counts_.size()); }
  int total() const;

  friend bool operator==(const MultiplicityVector&, const MultiplicityVector&) = default;

 private:
  std::vector<int> counts_;
};

/// The sequence of positive bounds (s_1, ..., s_N) for inversion sequences.
class SSequence {
 public:
  explicit SSequence(std::vector<long long> entries);
  const std::vector<long long>& entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }

  friend bool operator==(const SSequence&, const SSequence&) = default;

 private:
  std::vector<long long> entries_;
};

/// Bound sequence (1, 4, 3, 8, ..., 2n-1, 4n).
SSequence sv_signed_s(int n);
/// Bound sequence (1, 1, 3, 2, ..., 2n-1, n).
SSequence sv_unsigned_s(int n);

BigInt multiset_perm_count(const MultiplicityVector& m);
BigInt signed_multiperm_count(const MultiplicityVector& m);
BigInt inversion_seq_count(const SSequence& s);

// -- Statistics ------------------------------------------------------------
//
// Descents use a phantom leading 0: position i in [0, len) is a descent when
// the letter before position i (or 0 for i = 0) strictly exceeds the letter
// at position i.  In particular 0 is a descent exactly when the word starts
// with a negative letter.

std::vector<int> descent_set(const SignedWord& w);
int des(const SignedWord& w);
long long maj(const SignedWord& w);
int neg_count(const SignedWord& w);
/// Flag major index: 2 * maj + (number of negative letters).
long long fmaj(const SignedWord& w);

// Ascents of an inversion sequence compare consecutive ratios e[i]/s[i]
// (with a phantom 0/1 in front) exactly, via cross-multiplication.
std::vector<int> ascent_set(const InversionSequence& e, const SSequence& s);
int asc(const InversionSequence& e, const SSequence& s);

bool is_valid_inversion_sequence(const InversionSequence& e, const SSequence& s);

// -- Enumeration -----------------------------------------------------------
//
// Visitors receive a reference to a buffer that is reused between calls;
// copy it if it must outlive the visit.  Streams are deterministic:
// rearrangements come in lexicographic word order, sign-count vectors in
// lexicographic order, inversion sequences in mixed-radix counting order.

template <class Visitor>
void for_each_multiset_perm(const MultiplicityVector& m, Visitor&& visit) {
  SignedWord word;
  word.reserve(m.total());
  for (int r = 0; r < m.size(); ++r)
    word.insert(word.end(), m.counts()[r], r + 1);
  do {
    visit(static_cast<const SignedWord&>(word));
  } while (std::next_permutation(word.begin(), word.end()));
}

template <class Visitor>
void for_each_signed_multiperm(const MultiplicityVector& m, Visitor&& visit) {
  const int n = m.size();
  std::vector<int> neg(n, 0);  // how many copies of each letter are negated
  SignedWord word;
  word.reserve(m.total());
  for (;;) {
    word.clear();
    for (int r = 0; r < n; ++r) {
      word.insert(word.end(), neg[r], -(r + 1));
      word.insert(word.end(), m.counts()[r] - neg[r], r + 1);
    }
    std::sort(word.begin(), word.end());
    do {
      visit(static_cast<const SignedWord&>(word));
    } while (std::next_permutation(word.begin(), word.end()));
    int i = n - 1;
    while (i >= 0 && neg[i] == m.counts()[i]) neg[i--] = 0;
    if (i < 0) break;
    ++neg[i];
  }
}

template <class Visitor>
void for_each_inversion_seq(const SSequence& s, Visitor&& visit) {
  const int n = s.size();
  InversionSequence e(n, 0);
  for (;;) {
    visit(static_cast<const InversionSequence&>(e));
    int i = n - 1;
    while (i >= 0 && e[i] == s.entries()[i] - 1) e[i--] = 0;
    if (i < 0) break;
    ++e[i];
  }
}

}  // namespace despoly
