#ifndef WORKBENCH_ROOTDATA_HPP_
#define WORKBENCH_ROOTDATA_HPP_

#include <string>
#include <vector>

#include "workbench/lattice.hpp"

namespace workbench {

/// Pairing X x X-check -> Z (coordinate dot product).
BigInt pairing(const IntVec& x, const IntVec& y);

/// Weyl group element stored by its action on X; the contragredient
/// (inverse-transpose) acts on the cocharacter lattice.
struct WeylElement {
    IntMat on_x;
    IntMat on_x_inv;

    static WeylElement identity(int n);

    IntVec act_x(const IntVec& x) const;
    /// Action on X-check: <w x, w y> = <x, y>.
    IntVec act_xcheck(const IntVec& y) const;

    WeylElement operator*(const WeylElement& o) const;  // (ab)(x) = a(b(x))
    WeylElement inverse() const;
    bool is_identity() const;
    bool operator==(const WeylElement& o) const;
    bool operator!=(const WeylElement& o) const { return !(*this == o); }
    bool operator<(const WeylElement& o) const;  // lex on matrix entries
};

/// Split root datum (X, Phi, X-check, Phi-check) with a chosen positive
/// system. Roots/coroots are index-aligned; positive/simple are index sets.
struct RootDatum {
    std::string name;
    int rank = 0;
    std::vector<IntVec> roots;
    std::vector<IntVec> coroots;
    std::vector<int> positive;
    std::vector<int> simple;

    int root_index(const IntVec& alpha) const;  // -1 if absent
    bool is_positive(int idx) const;
    std::vector<int> all_root_indices() const;
};

/// Reflection s_alpha: x -> x - <x, alpha-check> alpha.
WeylElement reflection(const RootDatum& rd, int root_idx);

/// Build a datum from simple (root, coroot) pairs by reflection closure;
/// positive roots are the nonnegative rational combinations of the simples.
RootDatum datum_from_simple_pairs(const std::string& name, int rank,
                                  const std::vector<IntVec>& simple_roots,
                                  const std::vector<IntVec>& simple_coroots);

std::vector<std::string> preset_names();
RootDatum preset(const std::string& name);

struct ValidationReport {
    bool valid = true;
    std::vector<std::string> violations;
};

ValidationReport validate(const RootDatum& rd);

/// Full enumeration by closing the simple reflections; canonical
/// (lexicographic) order. Throws "Weyl group too large" past the bound.
std::vector<WeylElement> weyl_group(const RootDatum& rd,
                                    long bound = 1000000);

/// Subgroup generated by the reflections of the given roots, same bound.
std::vector<WeylElement> weyl_subgroup(const RootDatum& rd,
                                       const std::vector<int>& root_indices,
                                       long bound = 1000000);

/// #{alpha in Phi+ : w(alpha) in -Phi+}.
int finite_length(const RootDatum& rd, const WeylElement& w);

/// Levi subsystem: Phi intersect a rational span, with closure enforced.
struct LeviSubsystem {
    std::vector<int> root_indices;
};

/// Phi intersect span_Q of the seed roots.
LeviSubsystem levi_from_span(const RootDatum& rd,
                             const std::vector<int>& seed);

/// All distinct Levi subsystems Phi ∩ span_Q(S) over subsets S of Phi+.
std::vector<LeviSubsystem> all_levis(const RootDatum& rd);

/// Root datum of the Levi: same lattices, roots restricted to Phi_M,
/// positives inherited from the ambient choice.
RootDatum levi_datum(const RootDatum& rd, const LeviSubsystem& M);

/// Standard Levi: spanned by the ambient simple roots it contains.
/// Ambient length is additive over the Kostant factorization exactly for
/// these; for merely semi-standard Levis it can fail.
bool is_standard_levi(const RootDatum& rd, const LeviSubsystem& M);

/// Minimal-length representatives of W_M \ W, one per coset; uniqueness of
/// the length minimum in each coset is asserted.
std::vector<WeylElement> kostant_representatives(const RootDatum& rd,
                                                 const LeviSubsystem& M);

struct IwasawaFiberReport {
    bool surjective = false;
    bool fibers_uniform = false;
    long expected_fiber = 0;  // |W_{M'} \ W'|
    long domain_size = 0;
    long image_size = 0;
};

/// Verifies that (w1, w'-coset) -> (W_M w-coset, w_M) defined by
/// w'-rep * w1 = w_M * w-rep is surjective with fibers of size |W_{M'}\W'|.
IwasawaFiberReport iwasawa_fiber_check(const RootDatum& rd,
                                       const LeviSubsystem& M,
                                       const std::vector<int>& phi_prime);

/// Roots vanishing on the W'-fixed subspace of X-check tensor Q: the
/// minimal Levi whose Weyl group contains W'.
LeviSubsystem minimal_levi_containing(const RootDatum& rd,
                                      const std::vector<int>& phi_prime);

/// Fixed subspaces of W' and W in X-check tensor Q agree.
bool is_elliptic_subsystem(const RootDatum& rd,
                           const std::vector<int>& phi_prime);

/// Invariant factors (> 1) of X-check / (Z Phi-check + X-check(A_G)).
std::vector<BigInt> lambda_group(const RootDatum& rd);

struct CenterInfo {
    bool z_is_torus = false;    // X / Z Phi torsion-free
    bool derived_sc = false;    // X-check / Z Phi-check torsion-free
};

CenterInfo center_scheme_info(const RootDatum& rd);

enum class SurgeryMode { z_extension, center_torus };

struct SurgeryResult {
    RootDatum datum;
    bool already_satisfied = false;
    /// z_extension: surjection X1 -> X (kernel = char lattice of the
    /// central torus). center_torus: inclusion of a complement of Z Phi1
    /// in X1 (char lattice of the central torus).
    IntMat map;
    IntMat kernel_basis;  // z_extension only: basis of ker(map)
    bool sequences_exact = false;
};

SurgeryResult datum_surgery(const RootDatum& rd, SurgeryMode mode);

}  // namespace workbench

#endif  // WORKBENCH_ROOTDATA_HPP_
