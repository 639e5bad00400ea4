#include "dunwoody/words.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace dunwoody {

namespace {

void check_letters(int rank, const std::vector<int>& letters) {
  if (rank < 1) throw malformed_word_error("word rank must be positive");
  for (int L : letters) {
    if (L == 0 || L > rank || L < -rank)
      throw malformed_word_error("letter " + std::to_string(L) + " out of range for rank " +
                                 std::to_string(rank));
  }
}

// Smallest rotation of v, by plain lexicographic comparison of letter vectors.
std::vector<int> least_rotation(std::vector<int> v) {
  std::vector<int> best = v;
  for (size_t i = 1; i < v.size(); ++i) {
    std::rotate(v.begin(), v.begin() + 1, v.end());
    if (v < best) best = v;
  }
  return best;
}

int fold_index(int i, int rank) {
  int m = (i - 1) % rank;
  if (m < 0) m += rank;
  return m + 1;
}

void append_power(std::vector<int>& out, int gen, int exp) {
  for (int t = 0; t < std::abs(exp); ++t) out.push_back(exp > 0 ? gen : -gen);
}

}  // namespace

Word::Word(int rank_, std::vector<int> letters_) : rank(rank_), letters(std::move(letters_)) {
  check_letters(rank, letters);
}

Word reduce(const Word& w) {
  check_letters(w.rank, w.letters);
  std::vector<int> out;
  out.reserve(w.letters.size());
  for (int L : w.letters) {
    if (!out.empty() && out.back() == -L)
      out.pop_back();
    else
      out.push_back(L);
  }
  return Word(w.rank, std::move(out));
}

Word cyclic_reduce(const Word& w) {
  Word r = reduce(w);
  size_t lo = 0, hi = r.letters.size();
  while (hi - lo >= 2 && r.letters[lo] == -r.letters[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(r.rank, std::vector<int>(r.letters.begin() + lo, r.letters.begin() + hi));
}

Word inverse(const Word& w) {
  std::vector<int> out(w.letters.rbegin(), w.letters.rend());
  for (int& L : out) L = -L;
  return Word(w.rank, std::move(out));
}

Word shift(const Word& w, int k) {
  check_letters(w.rank, w.letters);
  std::vector<int> out = w.letters;
  for (int& L : out) {
    int idx = fold_index(std::abs(L) + k, w.rank);
    L = L > 0 ? idx : -idx;
  }
  return Word(w.rank, std::move(out));
}

Presentation relators(const CyclicPresentation& cp) {
  Presentation p;
  p.rank = cp.n;
  p.relators.reserve(cp.n);
  for (int k = 0; k < cp.n; ++k) p.relators.push_back(shift(cp.w, k));
  return p;
}

std::vector<int> canonical_cyclic_form(const Word& w) {
  Word r = cyclic_reduce(w);
  std::vector<int> a = least_rotation(r.letters);
  std::vector<int> b = least_rotation(inverse(r).letters);
  return std::min(a, b);
}

namespace {

// Relabel x_i -> x_{i+t}, optionally composed with x_i -> x_i^-1.
Word relabel(const Word& w, int t, bool invert_gens) {
  Word out = shift(w, t);
  if (invert_gens)
    for (int& L : out.letters) L = -L;
  return out;
}

using Multiset = std::map<std::vector<int>, int>;

Multiset canonical_multiset(const std::vector<Word>& ws, int t, bool inv) {
  Multiset m;
  for (const Word& w : ws) ++m[canonical_cyclic_form(relabel(w, t, inv))];
  return m;
}

}  // namespace

std::optional<CyclicWitness> detect_cyclic(const Presentation& p) {
  if (!p.balanced())
    throw shape_error("detect_cyclic needs a balanced presentation (got " +
                      std::to_string(p.relators.size()) + " relators for rank " +
                      std::to_string(p.rank) + ")");
  const int n = p.rank;
  for (bool inv : {false, true}) {
    for (int t = 0; t < n; ++t) {
      Multiset got = canonical_multiset(p.relators, t, inv);
      // Any member would do as the defining word; take the smallest canonical
      // form so the witness is deterministic.
      Word w(n, got.begin()->first);
      Multiset want;
      for (int k = 0; k < n; ++k) ++want[canonical_cyclic_form(shift(w, k))];
      if (want == got) return CyclicWitness{CyclicPresentation{n, w}, t, inv};
    }
  }
  return std::nullopt;
}

bool cyclically_equivalent(const Presentation& p, const Presentation& q) {
  if (p.rank != q.rank || p.relators.size() != q.relators.size()) return false;
  const int n = p.rank;
  Multiset target = canonical_multiset(q.relators, 0, false);
  for (bool inv : {false, true})
    for (int t = 0; t < n; ++t)
      if (canonical_multiset(p.relators, t, inv) == target) return true;
  return false;
}

CyclicPresentation family(Family f, const FamilyParams& params) {
  const int n = params.n;
  if (n <= 1) throw domain_error("family parameter n must be > 1");
  switch (f) {
    case Family::fibonacci: {
      int rank = 2 * n;
      std::vector<int> ls = {1, 2, -3};
      for (int& L : ls) L = L > 0 ? fold_index(L, rank) : -fold_index(-L, rank);
      return CyclicPresentation{rank, Word(rank, ls)};
    }
    case Family::sieradsky: {
      std::vector<int> ls = {fold_index(1, n), fold_index(3, n), -fold_index(2, n)};
      return CyclicPresentation{n, Word(n, ls)};
    }
    case Family::fractional: {
      if (params.l <= 0 || params.k <= 0) throw domain_error("fractional family needs l,k > 0");
      int x1 = fold_index(1, n), x2 = fold_index(2, n), x3 = fold_index(3, n);
      std::vector<int> ls;
      for (int rep = 0; rep < params.k; ++rep) {
        append_power(ls, x1, -params.l);
        append_power(ls, x2, params.l);
      }
      ls.push_back(x2);
      for (int rep = 0; rep < params.k; ++rep) {
        append_power(ls, x3, -params.l);
        append_power(ls, x2, params.l);
      }
      return CyclicPresentation{n, reduce(Word(n, ls))};
    }
  }
  throw domain_error("unknown family");
}

Word parse_word(const std::string& text, int rank) {
  std::istringstream in(text);
  std::vector<int> ls;
  std::string tok;
  while (in >> tok) {
    if (tok[0] == 'x' || tok[0] == 'X') {
      size_t caret = tok.find('^');
      int idx = 0, exp = 1;
      try {
        idx = std::stoi(tok.substr(1, caret == std::string::npos ? caret : caret - 1));
        if (caret != std::string::npos) exp = std::stoi(tok.substr(caret + 1));
      } catch (const std::exception&) {
        throw malformed_word_error("bad word token '" + tok + "'");
      }
      if (idx < 1 || exp == 0) throw malformed_word_error("bad word token '" + tok + "'");
      append_power(ls, idx, exp);
    } else {
      try {
        ls.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw malformed_word_error("bad word token '" + tok + "'");
      }
    }
  }
  return Word(rank, std::move(ls));
}

std::string format_word(const Word& w) {
  std::ostringstream out;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out << ' ';
    out << w.letters[i];
  }
  return out.str();
}

}  // namespace dunwoody
