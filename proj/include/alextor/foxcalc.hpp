#pragma once

// Free groups, the integral group ring Z[F_k], Fox derivatives, and the ring
// map Phi = (rho (x) epsilon) : Z[F_k] -> M_m(Lambda).

#include "alextor/linalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace alextor {

struct Letter {
    std::size_t generator = 0;
    int exponent = 1; // +1 or -1

    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A freely reduced word.
class FreeWord {
public:
    FreeWord() = default;
    explicit FreeWord(std::vector<Letter> letters);

    static FreeWord generator(std::size_t g, int exponent = 1);

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool is_identity() const { return letters_.empty(); }

    FreeWord inverse() const;
    /// Cyclic rotation by k letters, then reduced.
    FreeWord rotated(std::size_t k) const;
    FreeWord prefix(std::size_t n) const;

    friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
    friend bool operator==(const FreeWord&, const FreeWord&) = default;
    friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

    /// Whitespace-separated `name` / `name^-1` tokens; "1" for the identity.
    std::string to_string(const std::vector<std::string>& names) const;

private:
    std::vector<Letter> letters_;
};

/// Parses `x y x y^-1 x^-1 y^-1`; also `name^k`, and an all-uppercase token
/// stands for the inverse of its lowercase generator. Throws InputError.
FreeWord parse_word(std::string_view text, const std::vector<std::string>& generators);

/// Finite Z-linear combination of words; zero coefficients are dropped.
class GroupRingElement {
public:
    GroupRingElement() = default;
    GroupRingElement(const FreeWord& w, long coefficient = 1); // NOLINT

    static GroupRingElement one() { return GroupRingElement(FreeWord()); }

    const std::map<FreeWord, Integer>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    GroupRingElement& operator+=(const GroupRingElement& b);
    GroupRingElement& operator-=(const GroupRingElement& b);
    friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
    friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
    GroupRingElement operator-() const;
    friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    void add_term(const FreeWord& w, const Integer& c);

    std::map<FreeWord, Integer> terms_;
};

/// d w / d x_g, by the product rule folded over the word.
GroupRingElement fox_derivative(const FreeWord& w, std::size_t g);

struct Presentation {
    std::string name;
    std::vector<std::string> generators;
    std::vector<FreeWord> relators;
    /// User-supplied augmentation, one value per generator.
    std::optional<std::vector<long>> augmentation;

    std::size_t rank() const { return generators.size(); }
    bool deficiency_one() const { return relators.size() + 1 == generators.size(); }
    std::size_t index_of(const std::string& g) const;
};

/// Throws InputError if a relator references an unknown generator.
void validate_presentation(const Presentation& p);

struct Representation {
    std::string name;
    unsigned dimension = 1;
    unsigned cyclotomic_order = 1;
    std::vector<CycloMatrix> matrices; // one per generator

    static Representation trivial(std::size_t generators, unsigned dimension = 1);
};

/// Exact checks: shapes, unitarity U U* = I, and every relator maps to I.
/// Throws InputError naming the failing generator or relator.
void validate_representation(const Presentation& p, const Representation& rho);

CycloMatrix rho_of(const FreeWord& w, const Representation& rho);

struct Augmentation {
    std::vector<long> values;

    long of(const FreeWord& w) const;
};

/// Throws InputError unless every relator has weight 0 and the values
/// generate Z.
void validate_augmentation(const Presentation& p, const Augmentation& eps);

/// The surjection onto H_1 = Z with the first nonzero value positive. Throws
/// InputError when H_1 is not infinite cyclic.
Augmentation abelianization_epsilon(const Presentation& p);

/// User augmentation when present, otherwise the abelianization.
Augmentation augmentation_for(const Presentation& p);

/// sum c_w rho(w) t^eps(w), an m x m matrix over Lambda.
LaurentMatrix phi(const GroupRingElement& e, const Representation& rho, const Augmentation& eps);

/// Integer Smith normal form diagonal (nonnegative, each dividing the next)
/// and a unimodular V with the trailing columns spanning the kernel.
struct IntegerSNF {
    std::vector<Integer> d;
    std::vector<std::vector<Integer>> V; // cols x cols
    std::size_t rank = 0;
};
IntegerSNF integer_smith(std::vector<std::vector<Integer>> a, std::size_t cols);

} // namespace alextor
