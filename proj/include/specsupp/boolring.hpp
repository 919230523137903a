#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "specsupp/errors.hpp"
#include "specsupp/rng.hpp"

namespace specsupp::boolring {

using AtomMask = std::uint64_t;

// Finite Boolean ring presented by its atoms; the 2^m elements are the atom
// subsets, with meet/join/complement the set operations and the ring
// structure x+y = symmetric difference, x*y = meet.
class BoolRing {
public:
    explicit BoolRing(std::vector<std::string> atom_labels);

    int atom_count() const { return static_cast<int>(atoms_.size()); }
    const std::vector<std::string>& atoms() const { return atoms_; }
    std::uint64_t element_count() const { return 1ull << atom_count(); }
    AtomMask full_mask() const { return element_count() - 1; }

    bool operator==(const BoolRing& o) const { return atoms_ == o.atoms_; }

private:
    std::vector<std::string> atoms_;
};

using RingPtr = std::shared_ptr<const BoolRing>;

struct BoolElem {
    RingPtr ring;
    AtomMask atoms = 0;

    bool operator==(const BoolElem& o) const { return *ring == *o.ring && atoms == o.atoms; }
    bool is_zero() const { return atoms == 0; }
    std::vector<std::string> atom_labels() const;
};

BoolElem elem(RingPtr ring, AtomMask mask);
BoolElem zero(RingPtr ring);
BoolElem one(RingPtr ring);
BoolElem atom(RingPtr ring, int index);

BoolElem meet(const BoolElem& x, const BoolElem& y);
BoolElem join(const BoolElem& x, const BoolElem& y);
BoolElem complement(const BoolElem& x);
BoolElem ring_add(const BoolElem& x, const BoolElem& y);
BoolElem ring_mul(const BoolElem& x, const BoolElem& y);
bool leq(const BoolElem& x, const BoolElem& y);

// Point of Spec(A): the prime ideal {x : atom not in x}, stored by the
// complementary atom.
struct StonePoint {
    RingPtr ring;
    int atom = 0;
    bool ideal_contains(const BoolElem& x) const;
};

std::vector<StonePoint> spec_points(const RingPtr& ring);

// Finite discrete space; every subset is clopen.
struct FiniteSpace {
    std::vector<std::string> points;
    int size() const { return static_cast<int>(points.size()); }
};

// Clop(T) of a finite discrete space, as a Boolean ring with one atom per
// point.
RingPtr clop_ring(const FiniteSpace& space);

// Lattice homomorphism between finite Boolean rings, stored by atom images
// and extended by joins. Valid iff the atom images are pairwise disjoint and
// join to the top element.
struct BoolHom {
    RingPtr source;
    RingPtr target;
    std::vector<AtomMask> atom_images;

    BoolElem apply(const BoolElem& x) const;
    bool is_valid() const;
    // Exhaustively re-checks preservation of 0, 1, meet, join, complement.
    bool preserves_operations() const;
};

// The Stone unit A -> Clop(Spec A), x -> {p : x not in p}; an isomorphism for
// finite rings. Returns the hom together with the point space.
struct StoneUnit {
    FiniteSpace spectrum;
    BoolHom unit;
};
StoneUnit stone_unit_iso(const RingPtr& ring);

// Adjunction transpose of phi : A -> Clop(T): the map T -> Spec(A) sending p
// to the prime ideal {x : p not in phi(x)}. Throws NotAHomomorphism if phi is
// invalid.
std::vector<StonePoint> adjunction_transpose(const BoolHom& phi, const FiniteSpace& space);

// Greedy finite instance of the Boolean disjointification lemma:
// y_a = x_a meet not(join of earlier x_b). Requires x = join(family).
std::vector<BoolElem> disjointify(const BoolElem& x, const std::vector<BoolElem>& family);

// Bounded meet/join tables, so broken tables can be injected in tests.
struct LatticeTable {
    int n = 0;
    std::vector<int> meet, join;  // row-major n x n
    int meet_at(int a, int b) const { return meet[a * n + b]; }
    int join_at(int a, int b) const { return join[a * n + b]; }
    static LatticeTable from_ring(const BoolRing& ring);
};

struct DistributivityWitness {
    std::string law;  // "frame" or "coframe"
    int u = 0;
    std::vector<int> family;
};

struct DistributivityReport {
    bool frame_ok = true;
    bool coframe_ok = true;
    bool exhaustive = true;
    std::uint64_t checked = 0;
    std::optional<DistributivityWitness> witness;
    bool ok() const { return frame_ok && coframe_ok; }
};

// Verifies u /\ (\/ v_a) = \/ (u /\ v_a) and the dual for all families of
// size <= 3; exhaustive up to `exhaustive_limit` elements, seeded sampling
// beyond that.
DistributivityReport check_distributive_laws(const LatticeTable& table, std::uint64_t seed = 0,
                                             int exhaustive_limit = 64, int samples = 20000);

}  // namespace specsupp::boolring
