#pragma once

#include "g2c/linalg.hpp"
#include "g2c/scalar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace g2c {

// A letter is (generator index, exponent +1/-1).
struct Letter {
    int gen;
    int exp;
    bool operator==(const Letter&) const = default;
};

using Word = std::vector<Letter>;

Word free_reduce(Word w);
Word inverse_word(const Word& w);

// Affine map on R^7: x -> L x + t.
struct AffineMap {
    Mat linear = Mat::identity(7);
    Vec7 translation{};

    AffineMap compose(const AffineMap& o) const;  // this after o? no: this ∘ o
    AffineMap inverse() const;
    bool is_identity() const;
    bool operator==(const AffineMap&) const = default;
};

struct LabeledWord {
    std::string label;
    Word word;
};

struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;
    std::vector<int> relator_signs;          // empty, or one ±1 per relator
    std::vector<LabeledWord> linking;        // the marked set Xi
    std::vector<std::optional<AffineMap>> affine;  // per generator, when realized

    bool has_signs() const { return !relator_signs.empty(); }
    bool has_affine() const;
    int generator_index(const std::string& name) const;  // -1 when unknown

    // Affine evaluation of a word (requires full affine data).
    AffineMap affine_word(const Word& w) const;
    // Checks that every relator is the identity affine map.
    void validate_affine() const;  // throws std::runtime_error on failure
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

Presentation parse_presentation(const std::string& text);
std::string format_presentation(const Presentation& p);

Presentation joyce_example3();
Presentation t3_projective(bool projective = true);

struct AbelianInvariants {
    std::vector<Int> factors;  // invariant factors >= 2, divisibility chain
    int free_rank = 0;
};

struct SmithResult {
    Mat u, d, v;  // U * M * V = D, with U, V unimodular and D diagonal
};

// Smith normal form over Z (entries must be integers).
SmithResult smith_normal_form(const Mat& m);

AbelianInvariants abelianization(const Presentation& p);
Int hom_count_mod2(const Presentation& p);

}  // namespace g2c
