#include "specsupp/boolring.hpp"

#include <algorithm>
#include <set>

namespace specsupp::boolring {

BoolRing::BoolRing(std::vector<std::string> atom_labels) : atoms_(std::move(atom_labels)) {
    if (atoms_.size() > 62) throw InvalidInput("Boolean ring atom count exceeds 62");
    std::set<std::string> seen(atoms_.begin(), atoms_.end());
    if (seen.size() != atoms_.size()) throw InvalidInput("Boolean ring atom labels must be distinct");
}

std::vector<std::string> BoolElem::atom_labels() const {
    std::vector<std::string> out;
    for (int i = 0; i < ring->atom_count(); ++i)
        if (atoms & (1ull << i)) out.push_back(ring->atoms()[i]);
    return out;
}

BoolElem elem(RingPtr ring, AtomMask mask) {
    if (mask & ~ring->full_mask()) throw InvalidInput("atom mask outside ring");
    return BoolElem{std::move(ring), mask};
}

BoolElem zero(RingPtr ring) { return BoolElem{std::move(ring), 0}; }
BoolElem one(RingPtr ring) {
    AtomMask m = ring->full_mask();
    return BoolElem{std::move(ring), m};
}
BoolElem atom(RingPtr ring, int index) {
    if (index < 0 || index >= ring->atom_count()) throw InvalidInput("atom index out of range");
    return BoolElem{std::move(ring), 1ull << index};
}

namespace {
void check_same(const BoolElem& x, const BoolElem& y) {
    if (!(*x.ring == *y.ring)) throw MixedRings("elements of different Boolean rings");
}
}  // namespace

BoolElem meet(const BoolElem& x, const BoolElem& y) {
    check_same(x, y);
    return BoolElem{x.ring, x.atoms & y.atoms};
}
BoolElem join(const BoolElem& x, const BoolElem& y) {
    check_same(x, y);
    return BoolElem{x.ring, x.atoms | y.atoms};
}
BoolElem complement(const BoolElem& x) { return BoolElem{x.ring, ~x.atoms & x.ring->full_mask()}; }
BoolElem ring_add(const BoolElem& x, const BoolElem& y) {
    check_same(x, y);
    return BoolElem{x.ring, x.atoms ^ y.atoms};
}
BoolElem ring_mul(const BoolElem& x, const BoolElem& y) { return meet(x, y); }
bool leq(const BoolElem& x, const BoolElem& y) {
    check_same(x, y);
    return (x.atoms & ~y.atoms) == 0;
}

bool StonePoint::ideal_contains(const BoolElem& x) const {
    if (!(*x.ring == *ring)) throw MixedRings("point and element of different rings");
    return (x.atoms & (1ull << atom)) == 0;
}

std::vector<StonePoint> spec_points(const RingPtr& ring) {
    std::vector<StonePoint> out;
    for (int i = 0; i < ring->atom_count(); ++i) out.push_back(StonePoint{ring, i});
    return out;
}

RingPtr clop_ring(const FiniteSpace& space) { return std::make_shared<BoolRing>(space.points); }

BoolElem BoolHom::apply(const BoolElem& x) const {
    if (!(*x.ring == *source)) throw MixedRings("homomorphism applied to a foreign element");
    AtomMask m = 0;
    for (int i = 0; i < source->atom_count(); ++i)
        if (x.atoms & (1ull << i)) m |= atom_images[i];
    return BoolElem{target, m};
}

bool BoolHom::is_valid() const {
    if (static_cast<int>(atom_images.size()) != source->atom_count()) return false;
    AtomMask seen = 0;
    for (AtomMask img : atom_images) {
        if (img & ~target->full_mask()) return false;
        if (img & seen) return false;  // pairwise disjoint
        seen |= img;
    }
    return seen == target->full_mask();  // join to the top
}

bool BoolHom::preserves_operations() const {
    if (!is_valid()) return false;
    auto f = [&](AtomMask m) { return apply(BoolElem{source, m}).atoms; };
    AtomMask top_src = source->full_mask();
    if (f(0) != 0 || f(top_src) != target->full_mask()) return false;
    for (AtomMask x = 0; x <= top_src; ++x) {
        if (f(~x & top_src) != (~f(x) & target->full_mask())) return false;
        for (AtomMask y = 0; y <= top_src; ++y) {
            if (f(x & y) != (f(x) & f(y))) return false;
            if (f(x | y) != (f(x) | f(y))) return false;
        }
        if (x == top_src) break;
    }
    return true;
}

StoneUnit stone_unit_iso(const RingPtr& ring) {
    StoneUnit out;
    out.spectrum.points = ring->atoms();
    out.unit.source = ring;
    out.unit.target = clop_ring(out.spectrum);
    // x not in the prime ideal of point t iff t is an atom of x, so the unit
    // sends each atom to the singleton of its point.
    for (int i = 0; i < ring->atom_count(); ++i) out.unit.atom_images.push_back(1ull << i);
    return out;
}

std::vector<StonePoint> adjunction_transpose(const BoolHom& phi, const FiniteSpace& space) {
    if (static_cast<int>(phi.target->atom_count()) != space.size() || phi.target->atoms() != space.points)
        throw InvalidInput("transpose: space does not match the homomorphism target");
    if (!phi.is_valid() || !phi.preserves_operations())
        throw NotAHomomorphism("atom images are not a disjoint cover of the target");
    std::vector<StonePoint> out;
    for (int p = 0; p < space.size(); ++p) {
        // The prime ideal {x : p not in phi(x)} is complementary to the unique
        // atom whose image covers p.
        int found = -1;
        for (int a = 0; a < phi.source->atom_count(); ++a)
            if (phi.atom_images[a] & (1ull << p)) {
                found = a;
                break;
            }
        if (found < 0) throw NotAHomomorphism("point not covered by any atom image");
        out.push_back(StonePoint{phi.source, found});
    }
    return out;
}

std::vector<BoolElem> disjointify(const BoolElem& x, const std::vector<BoolElem>& family) {
    BoolElem total = zero(x.ring);
    for (const auto& m : family) total = join(total, m);
    if (!(total == x)) throw JoinMismatch("x is not the join of the family");
    std::vector<BoolElem> out;
    BoolElem used = zero(x.ring);
    for (const auto& m : family) {
        out.push_back(meet(m, complement(used)));
        used = join(used, m);
    }
    return out;
}

LatticeTable LatticeTable::from_ring(const BoolRing& ring) {
    if (ring.atom_count() > 12) throw InvalidInput("lattice table too large");
    LatticeTable t;
    t.n = static_cast<int>(ring.element_count());
    t.meet.resize(static_cast<size_t>(t.n) * t.n);
    t.join.resize(static_cast<size_t>(t.n) * t.n);
    for (int a = 0; a < t.n; ++a)
        for (int b = 0; b < t.n; ++b) {
            t.meet[a * t.n + b] = a & b;
            t.join[a * t.n + b] = a | b;
        }
    return t;
}

DistributivityReport check_distributive_laws(const LatticeTable& table, std::uint64_t seed,
                                             int exhaustive_limit, int samples) {
    DistributivityReport rep;
    int n = table.n;
    int bottom = 0, top = 0;
    // Identify bottom/top as the meet/join of everything.
    for (int a = 0; a < n; ++a) {
        bottom = table.meet_at(bottom, a);
        top = table.join_at(top, a);
    }
    auto check_family = [&](int u, const std::vector<int>& vs) -> bool {
        ++rep.checked;
        int join_all = bottom, meet_all = top;
        int join_of_meets = bottom, meet_of_joins = top;
        for (int v : vs) {
            join_all = table.join_at(join_all, v);
            meet_all = table.meet_at(meet_all, v);
            join_of_meets = table.join_at(join_of_meets, table.meet_at(u, v));
            meet_of_joins = table.meet_at(meet_of_joins, table.join_at(u, v));
        }
        if (table.meet_at(u, join_all) != join_of_meets) {
            if (rep.frame_ok) rep.witness = DistributivityWitness{"frame", u, vs};
            rep.frame_ok = false;
        }
        if (table.join_at(u, meet_all) != meet_of_joins) {
            if (rep.coframe_ok && !rep.witness) rep.witness = DistributivityWitness{"coframe", u, vs};
            rep.coframe_ok = false;
        }
        return rep.frame_ok && rep.coframe_ok;
    };
    if (n <= exhaustive_limit) {
        for (int u = 0; u < n; ++u) {
            check_family(u, {});
            for (int a = 0; a < n; ++a) {
                check_family(u, {a});
                for (int b = 0; b < n; ++b) {
                    check_family(u, {a, b});
                    for (int c = 0; c < n; ++c)
                        if (!check_family(u, {a, b, c})) return rep;
                }
            }
        }
    } else {
        rep.exhaustive = false;
        Rng rng(seed);
        for (int s = 0; s < samples; ++s) {
            int u = static_cast<int>(rng.below(n));
            std::vector<int> vs;
            int k = static_cast<int>(rng.below(4));
            for (int i = 0; i < k; ++i) vs.push_back(static_cast<int>(rng.below(n)));
            if (!check_family(u, vs)) return rep;
        }
    }
    return rep;
}

}  // namespace specsupp::boolring
