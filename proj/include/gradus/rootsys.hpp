#ifndef GRADUS_ROOTSYS_HPP
#define GRADUS_ROOTSYS_HPP

#include "gradus/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gradus {

/*
  Root systems (Y, X, (,), coroots <-> roots), Weyl groups and gradings.

  Classical types are realized in standard coordinates (X = Y = Q^n with the
  dot-product pairing): A1 as {±1} with coroots {±2}; Bn as ±e_i, ±e_i±e_j;
  Cn and Dn likewise; An (n >= 2) as e_i - e_j inside Q^{n+1}.  G2/F4/E-types
  use simple-root coordinates with the Cartan-matrix pairing.  Products are
  assembled block-diagonally.
*/

struct RootSystem {
    size_t dim_y = 0;
    size_t dim_x = 0;
    QMat pairing;               // dim_y x dim_x, nonsingular
    std::vector<QVec> roots;    // vectors in X
    std::vector<QVec> coroots;  // vectors in Y, aligned with roots
    std::vector<size_t> neg;    // index of -alpha
    std::string label;

    size_t size() const { return roots.size(); }
    Rat pair(const QVec& y, const QVec& x) const;
    Rat pair_root(const QVec& y, size_t a) const { return pair(y, roots[a]); }
    std::optional<size_t> root_index(const QVec& x) const;
    QVec reflect_y(size_t a, const QVec& y) const;  // s_alpha on Y
    QVec reflect_x(size_t a, const QVec& x) const;  // s_alpha on X
    size_t rank() const;                            // dim of the root span
    std::vector<QVec> coroot_span_basis() const;
    void validate() const;

    // Canonical text key of a root subset (used for memoization).
    std::string subset_key(const std::vector<size_t>& subset) const;
};

// "A1", "B2", "G2", products "A1xA1", "" for the empty system.
RootSystem from_cartan_type(const std::string& type_spec);

struct WeylElement {
    QMat on_y;
    std::vector<size_t> root_perm;  // image index per root of the parent system
    int length = 0;
};

struct WeylGroup {
    std::vector<size_t> subset;       // generating root indices (closed under -)
    std::vector<size_t> positive;     // chosen positive half of subset
    std::vector<size_t> simples;      // indecomposable positives
    std::vector<WeylElement> elements;  // [0] is the identity
    Laurent poincare;                   // e_W = sum v^{2 l(w)}

    size_t order() const { return elements.size(); }
};

// Finite group generated by the reflections in `subset` (all roots when
// empty).  Errors with NonTerminating past `size_bound`.
WeylGroup weyl_group(const RootSystem& rs, std::vector<size_t> subset = {},
                     size_t size_bound = 2000000);

struct Modulus {
    bool infinite = false;
    long m = 1;

    static Modulus finite(long mm) { return Modulus{false, mm}; }
    static Modulus inf() { return Modulus{true, 0}; }
    bool operator==(const Modulus& o) const = default;
    std::string to_string() const { return infinite ? "inf" : std::to_string(m); }
};

struct Grading {
    Modulus modulus;
    std::vector<long> degree;  // in [0,m) when finite, the level when infinite

    long deg(size_t a) const { return degree[a]; }
};

// degree(alpha) = (y_gr, alpha) mod m (finite) or (y_gr, alpha) (infinite).
// Errors with NonIntegralPairing unless all pairings are integers.
Grading grading_from_cocharacter(const RootSystem& rs, const QVec& y_gr, Modulus m);

// Explicit degree mapping; validated against the 1.2 / B.2 axioms
// (InvalidGrading on failure).
Grading grading_from_degrees(const RootSystem& rs, std::vector<long> degrees, Modulus m);

void validate_grading(const RootSystem& rs, const Grading& g);

// The unique y in the coroot span with (y, alpha) = deg(alpha) for all roots
// of a Z-graded system.  Errors with Inconsistent when no solution exists.
QVec y_star(const RootSystem& rs, const Grading& g);

// A root subsystem with integer levels, kept in the ambient (Y, X).
struct GradedSubsystem {
    RootSystem sys;
    Grading grading;                   // always a Z-grading
    std::vector<size_t> parent_roots;  // aligned with sys.roots

    std::string key() const;  // canonical memoization key
};

GradedSubsystem make_subsystem(const RootSystem& parent, const std::vector<size_t>& roots,
                               const std::vector<long>& levels);

}  // namespace gradus

#endif
