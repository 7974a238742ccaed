#pragma once

// Based bounded complexes of free Lambda-modules. Internally every complex is
// indexed as a chain complex, d_j : C_j -> C_{j-1}. A cochain complex with
// d^q : C^q -> C^{q+1} is stored with j = -q and Grading::cochain; reported
// degrees are always the native ones (q for cochain complexes).

#include "alextor/linalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace alextor {

enum class Grading { chain, cochain };
enum class AlexanderConvention { chain, cochain };
enum class DualKind { plain, unitary };

std::string to_string(Grading g);
std::string to_string(AlexanderConvention c);

class BasedComplex {
public:
    BasedComplex() = default;
    /// Chain-indexed degrees min_degree .. min_degree + ranks.size() - 1.
    /// boundaries[j] is d_j with shape ranks(j-1) x ranks(j); missing ones are
    /// zero. Throws InputError on shape mismatch or d_{j-1} d_j != 0.
    BasedComplex(int min_degree, std::vector<std::size_t> ranks, std::map<int, LaurentMatrix> boundaries,
                 Grading grading = Grading::chain, std::vector<std::vector<std::string>> labels = {});

    Grading grading() const { return grading_; }
    int min_degree() const { return min_degree_; }
    int max_degree() const { return min_degree_ + static_cast<int>(ranks_.size()) - 1; }
    std::size_t rank(int j) const;
    /// d_j : C_j -> C_{j-1}; zero-sized outside the range.
    const LaurentMatrix& boundary(int j) const;
    const std::vector<std::string>& labels(int j) const;
    unsigned cyclotomic_order() const { return order_; }

    /// q for cochain complexes, j for chain complexes.
    int native_degree(int j) const { return grading_ == Grading::chain ? j : -j; }
    int chain_index(int native) const { return grading_ == Grading::chain ? native : -native; }

private:
    int min_degree_ = 0;
    std::vector<std::size_t> ranks_;
    std::vector<LaurentMatrix> boundaries_; // boundaries_[i] = d_{min_degree + i}, up to max + 1
    std::vector<std::vector<std::string>> labels_;
    Grading grading_ = Grading::chain;
    unsigned order_ = 1;
};

struct HomologyDegree {
    int degree = 0;                       // native degree
    std::vector<LaurentPoly> torsion;     // non-unit invariant factors, monic, t-free
    std::size_t free_rank = 0;
    LaurentPoly charpoly = LaurentPoly(1L);
    /// Dimension over K of the torsion part.
    int dimension() const { return charpoly.span(); }
};

struct HomologyData {
    Grading grading = Grading::chain;
    std::vector<HomologyDegree> degrees;  // ascending chain index

    bool is_torsion() const;
    /// First native degree with free rank > 0.
    std::optional<int> non_torsion_degree() const;
    const HomologyDegree* at(int native_degree) const;
};

HomologyData homology(const BasedComplex& c);

/// Alternating product of characteristic polynomials in the native
/// grading; the cochain convention is its inverse. Throws HypothesisError
/// when some homology group has positive rank.
RatFunc alexander_invariant(const BasedComplex& c, AlexanderConvention convention);
RatFunc alexander_invariant(const HomologyData& h, AlexanderConvention convention);

/// Convention whose Alexander invariant is unit-equal to the torsion.
AlexanderConvention matching_convention(const BasedComplex& c);

struct TorsionCertificate {
    int min_degree = 0;
    /// Per chain index: columns of d_j used as lifts, i.e. x_j = e_S.
    std::vector<std::vector<std::size_t>> pivots;
    /// Block-diagonal matrices [x_j | b_j] over even and odd chain indices.
    LaurentMatrix even;
    LaurentMatrix odd;
    Grading grading = Grading::chain;
};

struct TorsionResult {
    RatFunc value;
    TorsionCertificate certificate;
};

/// Milnor-Reidemeister torsion over K(t). For chain indices j let
/// M_j = [e_{S_j} | d_{j+1} e_{S_{j+1}}], S_j the pivot columns of d_j;
/// tau = prod det(M_j)^((-1)^j), inverted for cochain complexes.
/// Throws HypothesisError if the complex is not acyclic over K(t).
TorsionResult reidemeister_torsion(const BasedComplex& c);

/// Recomputes the value from the certificate after checking it against c.
/// Throws InvariantViolation if the certificate does not fit c.
RatFunc replay_torsion(const BasedComplex& c, const TorsionCertificate& cert);

struct DifferenceDelta {
    CycloNumber coefficient;
    int exponent = 0;
    Real delta_abs;
};

/// tau / A as c * t^k. Throws InvariantViolation if the ratio is not a unit.
DifferenceDelta difference_delta(const BasedComplex& c, unsigned precision_bits = kDefaultPrecisionBits);

/// Hom-dual with reversed grading; unitary also conjugates the entries.
BasedComplex dualize(const BasedComplex& c, DualKind kind = DualKind::unitary);

struct Specialization {
    std::vector<CycloMatrix> boundaries;  // d_j at t = 1, ascending chain index
    bool precondition = false;            // (t - 1) divides no invariant factor
    bool acyclic = false;
    std::optional<CycloNumber> torsion;   // torsion of the specialized complex
    std::optional<CycloNumber> tau_at_one;
    bool equal = false;
    std::string note;
};

Specialization specialize_at_one(const BasedComplex& c);

/// Native degree -> dim over K of the homology of C evaluated at t = 1.
std::map<int, std::size_t> specialized_dimensions(const BasedComplex& c);

enum class Verdict { holds, fails, not_applicable };
std::string to_string(Verdict v);

struct Theorem31Report {
    Verdict overall = Verdict::not_applicable;
    std::string reason;
    std::map<int, int> dimensions;        // native degree -> dim over K
    std::vector<std::pair<std::string, bool>> checks;
};

Theorem31Report theorem31_report(const BasedComplex& c);

struct Theorem32Check {
    int beta = 0;                         // ord_{t=1} of tau and of A
    bool orders_equal = false;
    Real lhs;                             // |lim (t-1)^-beta tau|
    Real rhs;                             // |delta| |lim (t-1)^-beta A|
    Real relative_error;
    bool pass = false;
};

Theorem32Check theorem32_check(const BasedComplex& c, unsigned precision_bits = kDefaultPrecisionBits,
                               double tolerance = 1e-20);

} // namespace alextor
