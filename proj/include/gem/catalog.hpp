#ifndef GEM_CATALOG_HPP
#define GEM_CATALOG_HPP

#include <string>
#include <vector>

#include "gem/isomorphism.hpp"

namespace gem {

enum class IsoClass { ClassPreserving, ClassSwapping, NotBipartite };

struct CatalogEntry {
  ColoredGraph graph;
  std::string family;
  std::string params;
  std::string manifold;  // informational label
  std::vector<ShiftIsomorphism> shift_isomorphisms;  // all shift-1 isomorphisms
  std::vector<IsoClass> iso_class;                   // per isomorphism

  // First class-swapping / class-preserving shift-1 isomorphism, if any.
  const ShiftIsomorphism* swapping() const;
  const ShiftIsomorphism* preserving() const;
};

// The standard 2-vertex crystallization of S^d.
CatalogEntry sphere(int d);

// The standard 2(d+1)-vertex crystallization of S^{d-1} x S^1 (orientable)
// or the twisted bundle (non-orientable), d >= 3.
CatalogEntry sphere_bundle(int d, bool orientable);

// The standard 4q-vertex crystallization of L(q,1), q >= 2.
CatalogEntry lens(int q);

// The 2^d-vertex cube crystallization of RP^d, d >= 2.
CatalogEntry projective(int d);

enum class SurfaceKind { RP2, Klein, Torus, Genus2 };

SurfaceKind surface_kind_from_string(const std::string& s);
std::string to_string(SurfaceKind k);

// Catalog surface crystallizations: a 2p-cycle alternating colors 0/1 plus
// color-2 chords.
CatalogEntry surface(SurfaceKind kind);

std::vector<std::string> catalog_families();

}  // namespace gem

#endif
