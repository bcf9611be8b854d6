#include <despoly/words.hpp>

#include <stdexcept>

namespace despoly {

MultiplicityVector::MultiplicityVector(std::vector<int> counts) : counts_(std::move(counts)) {
  if (counts_.empty()) throw std::invalid_argument("MultiplicityVector: empty");
  for (int c : counts_)
    if (c < 1) throw std::invalid_argument("MultiplicityVector: entries must be >= 1");
}

int MultiplicityVector::total() const {
  int t = 0;
  for (int c : counts_) t += c;
  return t;
}

SSequence::SSequence(std::vector<long long> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("SSequence: empty");
  for (long long s : entries_)
    if (s < 1) throw std::invalid_argument("SSequence: entries must be >= 1");
}

SSequence sv_signed_s(int n) {
  if (n < 1) throw std::invalid_argument("sv_signed_s: n must be >= 1");
  std::vector<long long> s;
  s.reserve(2 * n);
  for (int i = 1; i <= n; ++i) {
    s.push_back(2 * i - 1);
    s.push_back(4 * i);
  }
  return SSequence(std::move(s));
}

SSequence sv_unsigned_s(int n) {
  if (n < 1) throw std::invalid_argument("sv_unsigned_s: n must be >= 1");
  std::vector<long long> s;
  s.reserve(2 * n);
  for (int i = 1; i <= n; ++i) {
    s.push_back(2 * i - 1);
    s.push_back(i);
  }
  return SSequence(std::move(s));
}

BigInt multiset_perm_count(const MultiplicityVector& m) {
  BigInt num = 1;
  for (int i = 2; i <= m.total(); ++i) num *= i;
  for (int c : m.counts())
    for (int i = 2; i <= c; ++i) num /= i;
  return num;
}

BigInt signed_multiperm_count(const MultiplicityVector& m) {
  return int_pow(BigInt(2), m.total()) * multiset_perm_count(m);
}

BigInt inversion_seq_count(const SSequence& s) {
  BigInt p = 1;
  for (long long e : s.entries()) p *= e;
  return p;
}

std::vector<int> descent_set(const SignedWord& w) {
  std::vector<int> out;
  int prev = 0;
  for (int i = 0; i < static_cast<int>(w.size()); ++i) {
    if (prev > w[i]) out.push_back(i);
    prev = w[i];
  }
  return out;
}

int des(const SignedWord& w) {
  int d = 0, prev = 0;
  for (int x : w) {
    if (prev > x) ++d;
    prev = x;
  }
  return d;
}

long long maj(const SignedWord& w) {
  long long sum = 0;
  int prev = 0;
  for (int i = 0; i < static_cast<int>(w.size()); ++i) {
    if (prev > w[i]) sum += i;
    prev = w[i];
  }
  return sum;
}

int neg_count(const SignedWord& w) {
  int n = 0;
  for (int x : w)
    if (x < 0) ++n;
  return n;
}

long long fmaj(const SignedWord& w) { return 2 * maj(w) + neg_count(w); }

std::vector<int> ascent_set(const InversionSequence& e, const SSequence& s) {
  if (e.size() != s.entries().size())
    throw std::invalid_argument("ascent_set: length mismatch");
  std::vector<int> out;
  long long prev_e = 0, prev_s = 1;
  for (int i = 0; i < static_cast<int>(e.size()); ++i) {
    long long si = s.entries()[i];
    if (static_cast<__int128>(prev_e) * si < static_cast<__int128>(e[i]) * prev_s)
      out.push_back(i);
    prev_e = e[i];
    prev_s = si;
  }
  return out;
}

int asc(const InversionSequence& e, const SSequence& s) {
  if (e.size() != s.entries().size()) throw std::invalid_argument("asc: length mismatch");
  int count = 0;
  long long prev_e = 0, prev_s = 1;
  for (int i = 0; i < static_cast<int>(e.size()); ++i) {
    long long si = s.entries()[i];
    if (static_cast<__int128>(prev_e) * si < static_cast<__int128>(e[i]) * prev_s) ++count;
    prev_e = e[i];
    prev_s = si;
  }
  return count;
}

bool is_valid_inversion_sequence(const InversionSequence& e, const SSequence& s) {
  if (e.size() != s.entries().size()) return false;
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] < 0 || e[i] >= s.entries()[i]) return false;
  return true;
}

}  // namespace despoly
