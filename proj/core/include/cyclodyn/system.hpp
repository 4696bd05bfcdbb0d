#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclodyn/poly.hpp"

namespace cyclodyn {

// Generator indices are 1-based: the word {2, 1} means f_1 after f_2,
// i.e. f_1(f_2(x)).
using Word = std::vector<unsigned>;

std::string to_string(const Word& w);

// Words of length `len` over {1..s} in lexicographic order.
std::vector<Word> words_of_length(unsigned s, unsigned len);

// f_1, ..., f_s with degree >= 2, pairwise distinct.
class PolySystem {
  public:
    // Throws PreconditionViolated on an empty list, a generator of degree
    // below 2 or a repeated generator.
    explicit PolySystem(std::vector<CPoly> generators);

    unsigned size() const { return static_cast<unsigned>(gens_.size()); }
    // 1-based, matching word letters.
    const CPoly& gen(unsigned index) const { return gens_.at(index - 1); }
    const std::vector<CPoly>& generators() const { return gens_; }
    int degree(unsigned index) const { return gen(index).degree(); }

    // The shared degree when all generators have the same degree.
    std::optional<int> common_degree() const;
    bool rational_coefficients() const;
    // lcm of coefficient conductors, after canonicalization.
    unsigned conductor() const;

  private:
    std::vector<CPoly> gens_;
};

// Generators as rational polynomials; throws PreconditionViolated when a
// coefficient is irrational.
std::vector<QPoly> to_rational_system(const PolySystem& sys);

}  // namespace cyclodyn
