#pragma once
// The bridge between abstract objects and concrete sequence spaces: l2 of a
// finite label set, orthonormal families and their promotion to dagger monos,
// greedy completion to an orthonormal basis, colimits of finite directed
// systems of isometries, and the hom functor out of the generator together
// with the full/faithful/essentially-surjective witnesses.  Fullness is
// deliberately proved the long way: reduce to a square core, split it into a
// weighted sum of unitaries, lift each unitary through the orthonormal-family
// machinery, and reassemble -- even though in the matrix model the lift is
// the matrix itself.  A shortcut flag exists so tests can compare.

#include <cstdint>
#include <string>
#include <vector>

#include "daghilb/dagcat.hpp"
#include "daghilb/report.hpp"
#include "daghilb/unidecomp.hpp"

namespace daghilb {

struct OrthonormalFamily {
  FdObject ambient;
  std::vector<std::string> labels;
  Morphism members;  // ambient.dim x labels.size(), one column per label

  int size() const { return members.cols(); }
  // Worst deviation of the Gram matrix from the identity.
  double gram_deviation() const;
};

struct L2Space {
  FdObject object;                 // K^|X|
  OrthonormalFamily components;    // standard basis columns labelled by X
};

// l2 of a finite label set.  Labels must be distinct.
L2Space l2(const std::vector<std::string>& labels, FieldTag f);

// Column-selection isometry l2(subset) -> l2(X).
Morphism l2_inclusion(const L2Space& space, const std::vector<std::string>& subset);

// The dagger mono induced by an orthonormal family; rejects families whose
// Gram matrix strays from the identity, reporting the worst deviation.
Morphism family_to_mono(const OrthonormalFamily& fam,
                        const ToleranceProfile& tol = default_tol());

// Greedy completion of an orthonormal family to a full orthonormal basis of
// its ambient space: repeatedly take the first standard basis vector with a
// nonzero component off the current span, project, normalise.
OrthonormalFamily orthonormal_basis(const FdObject& h, const OrthonormalFamily& seed,
                                    const ToleranceProfile& tol = default_tol());
OrthonormalFamily orthonormal_basis(const FdObject& h,
                                    const ToleranceProfile& tol = default_tol());

// A finite directed system: nodes and dagger-mono transitions, closed enough
// that every node reaches the top along edges.
struct DirectedDiagram {
  struct Edge {
    int from{0}, to{0};
    Morphism map;
  };
  std::vector<FdObject> nodes;
  std::vector<Edge> edges;
};

struct Colimit {
  int apex_node{0};
  FdObject apex;
  std::vector<Morphism> legs;  // one per node, leg[apex_node] = identity
};

// Colimit of a finite directed diagram: the apex is the value at the maximum
// node, legs are edge-path composites (path independence is validated).
// Throws if the reachability order has no maximum (not directed), has a
// cycle, or a transition fails to be a dagger mono.
Colimit directed_colimit(const DirectedDiagram& d, const ToleranceProfile& tol = default_tol());

// C(K, H): maps out of the generator, concretely the column space itself.
struct HomSpace {
  FdObject object;
};
HomSpace hom_space(const FdObject& h);
// Postcomposition C(K, f); in the matrix model the same matrix, acting on
// hom vectors.
Morphism hom_map(const Morphism& f);

struct FullnessResult {
  Morphism t;                          // lift with hom_map(t) = T up to residual
  UnitaryDecomposition decomposition;  // of the square core the input reduced to
  double residual{0.0};                // |t - T|
  std::string route;                   // reduction steps taken, comma separated
};

FullnessResult full_via_unitaries(const Morphism& T, bool via_decomposition = true,
                                  const ToleranceProfile& tol = default_tol());

// Faithful / essentially-surjective / full witnesses over sampled instances.
Report verify_equivalence(const std::vector<FieldTag>& fields, const std::vector<int>& dims,
                          int trials, std::uint64_t seed,
                          const ToleranceProfile& tol = default_tol());

}  // namespace daghilb
