#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dunwoody/errors.hpp"

namespace dunwoody {

/// A word in the free group F_rank. Letters are nonzero signed integers:
/// +k stands for the generator x_k, -k for its inverse, 1 <= k <= rank.
struct Word {
  int rank = 1;
  std::vector<int> letters;

  Word() = default;
  Word(int rank_, std::vector<int> letters_);

  bool operator==(const Word&) const = default;
};

/// A finite presentation with `rank` generators. Balanced when
/// relators.size() == rank.
struct Presentation {
  int rank = 1;
  std::vector<Word> relators;

  bool balanced() const { return static_cast<int>(relators.size()) == rank; }
};

/// The presentation G_n(w): n generators, relators obtained from the
/// defining word w by iterating the index-shift automorphism.
struct CyclicPresentation {
  int n = 1;
  Word w;
};

/// Witness returned by detect_cyclic: the presentation matches
/// relators(G_n(w)) after relabelling x_i -> x_{i+offset} and, when
/// `inverted`, replacing every generator by its inverse.
struct CyclicWitness {
  CyclicPresentation cp;
  int offset = 0;
  bool inverted = false;
};

Word reduce(const Word& w);
Word cyclic_reduce(const Word& w);
Word inverse(const Word& w);

/// The shift automorphism: letter +-i becomes +-(i+k mod n), representatives 1..n.
Word shift(const Word& w, int k);

Presentation relators(const CyclicPresentation& cp);

/// Canonical representative of w's class under cyclic reduction, cyclic
/// permutation and inversion of the whole word. Two relator curves read the
/// same element of the diagram iff their canonical forms agree.
std::vector<int> canonical_cyclic_form(const Word& w);

std::optional<CyclicWitness> detect_cyclic(const Presentation& p);

/// True when p and q have the same relator multiset (up to cyclic
/// permutation/inversion per relator) after some cyclic relabelling and
/// optional global inversion of generators.
bool cyclically_equivalent(const Presentation& p, const Presentation& q);

enum class Family { fibonacci, sieradsky, fractional };

struct FamilyParams {
  int n = 2;   // all families
  int l = 1;   // fractional only
  int k = 1;   // fractional only
};

/// Named cyclic presentation families:
///   fibonacci(n):   G_{2n}(x1 x2 x3^-1)
///   sieradsky(n):   G_n(x1 x3 x2^-1)
///   fractional(n,l,k): G_n((x1^-l x2^l)^k x2 (x3^-l x2^l)^k), stored reduced
/// Generator indices are folded mod rank into 1..rank.
CyclicPresentation family(Family f, const FamilyParams& params);

/// Parses "1 3 -2" or the symbolic alias "x1 x3 x2^-1".
Word parse_word(const std::string& text, int rank);
std::string format_word(const Word& w);

}  // namespace dunwoody
