#include <doctest.h>

#include "specsupp/boolring.hpp"

using namespace specsupp;
using namespace specsupp::boolring;

namespace {

RingPtr ring_of(std::vector<std::string> atoms) { return std::make_shared<BoolRing>(std::move(atoms)); }

// Oracle for spec_points: enumerate all ideals of the ring (subsets closed
// under + and absorbing under *), test primality directly.
int count_prime_ideals(const RingPtr& r) {
    int m = r->atom_count();
    std::uint64_t n = 1ull << m;
    int primes = 0;
    // subsets of the element set, elements are masks 0..n-1
    if (n > 16) throw std::runtime_error("oracle only for tiny rings");
    for (std::uint64_t sub = 0; sub < (1ull << n); ++sub) {
        auto contains = [&](std::uint64_t x) { return (sub >> x) & 1; };
        if (!contains(0)) continue;
        if (contains(n - 1)) continue;  // proper
        bool ideal = true;
        for (std::uint64_t x = 0; x < n && ideal; ++x)
            for (std::uint64_t y = 0; y < n && ideal; ++y) {
                if (contains(x) && contains(y) && !contains(x ^ y)) ideal = false;  // closed under +
                if (contains(x) && !contains(x & y)) ideal = false;                 // absorbs products
            }
        if (!ideal) continue;
        bool prime = true;
        for (std::uint64_t x = 0; x < n && prime; ++x)
            for (std::uint64_t y = 0; y < n && prime; ++y)
                if (contains(x & y) && !contains(x) && !contains(y)) prime = false;
        if (prime) ++primes;
    }
    return primes;
}

}  // namespace

TEST_CASE("ring operations on atom subsets") {
    auto r = ring_of({"a", "b", "c"});
    BoolElem x = elem(r, 0b001), y = elem(r, 0b011);
    CHECK(ring_add(x, y).atoms == 0b010);       // {a}+{a,b} = {b}
    CHECK(ring_add(x, x).atoms == 0);           // x + x = 0
    CHECK(ring_mul(x, y) == meet(x, y));
    auto r2 = ring_of({"a", "b"});
    CHECK(meet(elem(r2, 0b11), elem(r2, 0b10)).atoms == 0b10);
    CHECK(complement(elem(r2, 0b10)).atoms == 0b01);
}

TEST_CASE("de Morgan, involution, idempotence hold exhaustively up to 6 atoms") {
    for (int m = 0; m <= 6; ++m) {
        std::vector<std::string> labels;
        for (int i = 0; i < m; ++i) labels.push_back("t" + std::to_string(i));
        auto r = ring_of(labels);
        for (AtomMask x = 0; x < r->element_count(); ++x)
            for (AtomMask y = 0; y < r->element_count(); ++y) {
                BoolElem ex = elem(r, x), ey = elem(r, y);
                CHECK(complement(meet(ex, ey)) == join(complement(ex), complement(ey)));
                CHECK(complement(join(ex, ey)) == meet(complement(ex), complement(ey)));
                CHECK(ring_add(ex, ex).is_zero());
                CHECK(ring_mul(ex, ex) == ex);
            }
    }
}

TEST_CASE("mixed rings are rejected") {
    auto r1 = ring_of({"a"}), r2 = ring_of({"b"});
    CHECK_THROWS_AS(meet(elem(r1, 1), elem(r2, 1)), MixedRings);
}

TEST_CASE("spec_points counts prime ideals") {
    CHECK(count_prime_ideals(ring_of({"a"})) == 1);
    CHECK(count_prime_ideals(ring_of({"a", "b"})) == 2);
    CHECK(count_prime_ideals(ring_of({"a", "b", "c"})) == 3);
    CHECK(spec_points(ring_of({"a"})).size() == 1);
    CHECK(spec_points(ring_of({"a", "b"})).size() == 2);
    CHECK(spec_points(ring_of({"a", "b", "c"})).size() == 3);
}

TEST_CASE("stone unit is a bijective lattice isomorphism for up to 6 atoms") {
    for (int m = 0; m <= 6; ++m) {
        std::vector<std::string> labels;
        for (int i = 0; i < m; ++i) labels.push_back("t" + std::to_string(i));
        auto r = ring_of(labels);
        auto unit = stone_unit_iso(r);
        CHECK(unit.unit.preserves_operations());
        // bijective: images of all elements are distinct and count matches
        std::set<AtomMask> images;
        for (AtomMask x = 0; x < r->element_count(); ++x)
            images.insert(unit.unit.apply(elem(r, x)).atoms);
        CHECK(images.size() == r->element_count());
        // unit image of an atom is a singleton
        for (int i = 0; i < m; ++i) {
            AtomMask img = unit.unit.apply(atom(r, i)).atoms;
            CHECK(img != 0);
            CHECK((img & (img - 1)) == 0);
        }
    }
}

TEST_CASE("adjunction transpose round-trips exhaustively for small sizes") {
    // all homs A -> Clop(T) correspond to maps T -> atoms(A)
    for (int m = 1; m <= 3; ++m)
        for (int t = 1; t <= 3; ++t) {
            std::vector<std::string> al, tl;
            for (int i = 0; i < m; ++i) al.push_back("a" + std::to_string(i));
            for (int i = 0; i < t; ++i) tl.push_back("p" + std::to_string(i));
            auto ring = ring_of(al);
            FiniteSpace space{tl};
            auto clop = clop_ring(space);
            auto unit = stone_unit_iso(ring);
            std::vector<int> assignment(t, 0);
            for (;;) {
                BoolHom phi;
                phi.source = ring;
                phi.target = clop;
                phi.atom_images.assign(m, 0);
                for (int p = 0; p < t; ++p) phi.atom_images[assignment[p]] |= 1ull << p;
                REQUIRE(phi.is_valid());
                auto f = adjunction_transpose(phi, space);
                // f recovers the assignment, and phi(x) = f^{-1}(unit(x))
                for (int p = 0; p < t; ++p) CHECK(f[p].atom == assignment[p]);
                for (AtomMask x = 0; x < ring->element_count(); ++x) {
                    AtomMask lhs = phi.apply(elem(ring, x)).atoms;
                    AtomMask rhs = 0;
                    AtomMask ux = unit.unit.apply(elem(ring, x)).atoms;
                    for (int p = 0; p < t; ++p)
                        if (ux & (1ull << f[p].atom)) rhs |= 1ull << p;
                    CHECK(lhs == rhs);
                }
                int pos = 0;
                while (pos < t) {
                    if (++assignment[pos] < m) break;
                    assignment[pos++] = 0;
                }
                if (pos == t) break;
            }
        }
}

TEST_CASE("transpose of the unit is the identity") {
    auto r = ring_of({"a", "b", "c"});
    auto unit = stone_unit_iso(r);
    auto f = adjunction_transpose(unit.unit, unit.spectrum);
    for (int i = 0; i < 3; ++i) CHECK(f[i].atom == i);
}

TEST_CASE("invalid atom images raise NotAHomomorphism") {
    auto ring = ring_of({"a", "b"});
    FiniteSpace space{{"p"}};
    BoolHom phi;
    phi.source = ring;
    phi.target = clop_ring(space);
    phi.atom_images = {1ull, 1ull};  // not disjoint
    CHECK_THROWS_AS(adjunction_transpose(phi, space), NotAHomomorphism);
}

TEST_CASE("disjointify satisfies the three postconditions") {
    auto r = ring_of({"a", "b", "c"});
    BoolElem x = elem(r, 0b111);
    std::vector<BoolElem> family = {elem(r, 0b011), elem(r, 0b110)};
    auto ys = disjointify(x, family);
    REQUIRE(ys.size() == 2);
    CHECK(ys[0].atoms == 0b011);
    CHECK(ys[1].atoms == 0b100);
    // y_a <= x_a, pairwise disjoint, join = x
    Rng rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        int m = 1 + static_cast<int>(rng.below(10));
        std::vector<std::string> labels;
        for (int i = 0; i < m; ++i) labels.push_back("t" + std::to_string(i));
        auto ring = ring_of(labels);
        int k = 1 + static_cast<int>(rng.below(6));
        std::vector<BoolElem> fam;
        BoolElem total = zero(ring);
        for (int i = 0; i < k; ++i) {
            BoolElem e = elem(ring, rng.next() & ring->full_mask());
            fam.push_back(e);
            total = join(total, e);
        }
        auto parts = disjointify(total, fam);
        BoolElem rejoin = zero(ring);
        for (size_t i = 0; i < parts.size(); ++i) {
            CHECK(leq(parts[i], fam[i]));
            for (size_t j = i + 1; j < parts.size(); ++j) CHECK(meet(parts[i], parts[j]).is_zero());
            rejoin = join(rejoin, parts[i]);
        }
        CHECK(rejoin == total);
    }
    CHECK_THROWS_AS(disjointify(elem(r, 0b001), family), JoinMismatch);
    // identity case
    auto single = disjointify(x, {x});
    REQUIRE(single.size() == 1);
    CHECK(single[0] == x);
    // repeated element: greedy order forced
    BoolElem a = elem(r, 0b001);
    auto rep = disjointify(a, {a, a});
    CHECK(rep[0] == a);
    CHECK(rep[1].is_zero());
}

TEST_CASE("distributive laws hold for Boolean rings and fail for a broken table") {
    auto r2 = ring_of({"a", "b"});
    auto rep2 = check_distributive_laws(LatticeTable::from_ring(*r2));
    CHECK(rep2.ok());
    CHECK(rep2.exhaustive);
    auto r3 = ring_of({"a", "b", "c"});
    auto rep3 = check_distributive_laws(LatticeTable::from_ring(*r3));
    CHECK(rep3.ok());
    // adversarial non-lattice table: the diamond M3 is modular, not distributive
    LatticeTable m3;
    m3.n = 5;  // 0, a, b, c, 1
    m3.meet.assign(25, 0);
    m3.join.assign(25, 4);
    auto set = [&](std::vector<int>& t, int x, int y, int v) {
        t[x * 5 + y] = v;
        t[y * 5 + x] = v;
    };
    for (int x = 0; x < 5; ++x) {
        set(m3.meet, x, x, x);
        set(m3.join, x, x, x);
        set(m3.meet, 0, x, 0);
        set(m3.join, 0, x, x);
        set(m3.meet, 4, x, x);
        set(m3.join, 4, x, 4);
    }
    auto rep = check_distributive_laws(m3);
    CHECK_FALSE(rep.ok());
    CHECK(rep.witness.has_value());
}

TEST_CASE("sampled mode on a larger ring") {
    std::vector<std::string> labels;
    for (int i = 0; i < 8; ++i) labels.push_back("t" + std::to_string(i));
    auto r = ring_of(labels);
    auto rep = check_distributive_laws(LatticeTable::from_ring(*r), 5, 64, 2000);
    CHECK(rep.ok());
    CHECK_FALSE(rep.exhaustive);
}
