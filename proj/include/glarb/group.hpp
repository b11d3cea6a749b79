#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "glarb/errors.hpp"
#include "glarb/lattice.hpp"

namespace glarb {

/// A finitely generated abelian group Z^r x Z/n1 x ... x Z/nk.
///
/// Descriptors parse from the text grammar `Z^r x Z/n1 x Z/n2 ...`; `Z`
/// abbreviates `Z^1` and a bare `Z/n` abbreviates `Z^0 x Z/n`. Every modulus
/// is at least 2. Instances are immutable and shared by pointer.
class GroupDesc {
public:
    GroupDesc(int free_rank, std::vector<Int> moduli);

    int free_rank() const { return free_rank_; }
    const std::vector<Int>& moduli() const { return moduli_; }
    int arity() const { return free_rank_ + static_cast<int>(moduli_.size()); }
    bool is_free(int coord) const { return coord < free_rank_; }
    bool is_trivial() const { return arity() == 0; }

    /// Number of elements, or nullopt for infinite groups.
    std::optional<Int> size() const;

    bool operator==(const GroupDesc& o) const {
        return free_rank_ == o.free_rank_ && moduli_ == o.moduli_;
    }

    std::string str() const;
    static std::shared_ptr<const GroupDesc> parse(const std::string& text);
    static std::shared_ptr<const GroupDesc> make(int free_rank, std::vector<Int> moduli);

private:
    int free_rank_;
    std::vector<Int> moduli_;
};

using GroupPtr = std::shared_ptr<const GroupDesc>;

/// A group element as a coordinate vector. Torsion coordinates are kept
/// reduced into [0, n_i), so equality is plain coordinate equality. Free
/// coordinates are arbitrary-precision integers.
class Elem {
public:
    Elem(GroupPtr group, std::vector<Int> coords);

    const GroupPtr& group() const { return group_; }
    const std::vector<Int>& coords() const { return coords_; }

    bool is_zero() const;
    /// Smallest p >= 1 with p*this == zero; nullopt when infinite.
    std::optional<Int> order() const;

    Elem times(const Int& k) const;

    std::string str() const;
    static Elem parse(const GroupPtr& group, const std::string& text, int line = 0);
    static Elem zero(const GroupPtr& group);

    friend Elem operator+(const Elem& a, const Elem& b);
    friend Elem operator-(const Elem& a, const Elem& b);
    Elem operator-() const;

    bool operator==(const Elem& o) const;
    bool operator!=(const Elem& o) const { return !(*this == o); }
    /// Lexicographic coordinate order; deterministic tie-breaking only.
    bool operator<(const Elem& o) const;

private:
    GroupPtr group_;
    std::vector<Int> coords_;
};

/// Throws MismatchError unless both elements live in the same group.
void require_same_group(const Elem& a, const Elem& b);
void require_group(const Elem& a, const GroupDesc& g, const char* what);

/// A subgroup given by generators. Membership is an exact integer-lattice
/// test: the generators are stacked with the ambient torsion relations and
/// the element is checked against the row lattice in echelon form.
class SubgroupDesc {
public:
    SubgroupDesc(GroupPtr group, std::vector<Elem> generators);

    const GroupPtr& group() const { return group_; }
    const std::vector<Elem>& generators() const { return gens_; }

    bool contains(const Elem& e) const;
    bool is_whole_group() const;

    /// All subgroup elements if there are at most `cap` of them, else nullopt.
    /// Works for infinite ambient groups; the closure simply overflows the cap
    /// when the subgroup is infinite.
    std::optional<std::vector<Elem>> bounded_elements(std::size_t cap) const;

private:
    GroupPtr group_;
    std::vector<Elem> gens_;
    ZMatrix echelon_;  // relation rows + generators, echelonized
};

/// Quotient of a group by a subgroup, in canonical form, with the projection
/// homomorphism. projection(a) == projection(b) iff a - b lies in the
/// subgroup.
class QuotientMap {
public:
    const GroupPtr& quotient() const { return quotient_; }
    Elem project(const Elem& e) const;

private:
    friend QuotientMap quotient(const GroupPtr& g, const SubgroupDesc& sub);
    GroupPtr source_;
    GroupPtr quotient_;
    ZMatrix v_;                    // column transform from the Smith form
    std::vector<int> free_pos_;    // positions of free coords in x*V
    std::vector<int> torsion_pos_; // positions of kept torsion coords in x*V
    std::vector<Int> torsion_mod_;
};

QuotientMap quotient(const GroupPtr& g, const SubgroupDesc& sub);

}  // namespace glarb
