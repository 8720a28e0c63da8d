#pragma once

#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "painleve/maps/birational.hpp"

namespace painleve {

struct Letter {
  std::string gen;
  int exp = 1;  // +1 or -1
};

// A product of generators, read left to right as a product of
// automorphisms; evaluation composes the letters in order.
struct Word {
  std::vector<Letter> letters;

  // Accepts forms like "s2 s3 s2", "(s2 s3)^4", "pi^-1 s0 pi".
  static Word parse(std::string_view text);
  std::string to_string() const;
  std::size_t length() const { return letters.size(); }
};

struct Relation {
  std::string label;  // as written, e.g. "(s2 s3)^4"
  Word word;
};

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Relation> relations;
  std::string dynkin_type;
  bool stated = false;  // false: derived from the parameter action
};

const BirationalMap& find_generator(const std::vector<BirationalMap>& gens, std::string_view name);

// Exact composition of the word. Letters with exponent -1 use inverse_of.
BirationalMap evaluate_word(const std::vector<BirationalMap>& gens, const Word& w);

// Push random points satisfying the source constraint through the word and
// compare with the start point, exactly in Q(i, sqrt2). One-sided: false is
// definitive.
bool word_fixes_random_points(const std::vector<BirationalMap>& gens, const Word& w, std::mt19937_64& rng,
                              int trials);

// Parameter this generator negates, when it acts on parameters as a
// reflection.
std::optional<Var> reflected_root(const BirationalMap& g);

// Coxeter relations read off the parameter action: with s_i(r_j) = r_j -
// a_ij r_i, the pair (i, j) gets (s_i s_j)^m for a_ij a_ji = 0, 1, 2, 3
// giving m = 2, 3, 4, 6. Non-reflections are left out.
GroupPresentation derived_presentation(const std::vector<BirationalMap>& gens, std::string dynkin_type);

// Smallest k <= max_order with g^k the identity modulo the constraint.
std::optional<int> automorphism_order(const BirationalMap& g, int max_order = 8);

}  // namespace painleve
