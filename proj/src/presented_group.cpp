#include "herbrand/presented_group.hpp"

#include <sstream>

#include "herbrand/error.hpp"

namespace herbrand {

PresentedGroup::PresentedGroup(std::size_t num_generators, Lattice relations)
    : k_(num_generators), relations_(std::move(relations)) {
    if (relations_.ambient_dim() != k_)
        throw Error(ErrorCode::Internal, "relations must live in Z^k");
}

PresentedGroup PresentedGroup::from_relation_rows(std::size_t num_generators,
                                                  const std::vector<IntVec>& rows) {
    return PresentedGroup(num_generators, Lattice::from_generators(num_generators, rows));
}

std::optional<Int> InvariantFactors::order() const {
    if (free_rank > 0) return std::nullopt;
    Int o = 1;
    for (const auto& d : torsion_divisors) o *= d;
    return o;
}

std::string InvariantFactors::to_string() const {
    if (trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < free_rank; ++i) {
        os << (first ? "" : " + ") << "Z";
        first = false;
    }
    for (const auto& d : torsion_divisors) {
        os << (first ? "" : " + ") << "Z/" << d;
        first = false;
    }
    return os.str();
}

InvariantFactors invariant_factors(const PresentedGroup& g) {
    InvariantFactors f;
    auto snf = smith_normal_form(g.relations().basis());
    // Basis rows are independent, so every diagonal entry is nonzero.
    f.free_rank = g.num_generators() - g.relations().rank();
    const std::size_t steps =
        std::min(g.relations().basis().rows(), g.relations().basis().cols());
    for (std::size_t i = 0; i < steps; ++i)
        if (snf.d.at(i, i) > 1) f.torsion_divisors.push_back(snf.d.at(i, i));
    return f;
}

std::optional<Int> group_order(const PresentedGroup& g) {
    return invariant_factors(g).order();
}

PresentedGroup m_torsion(const PresentedGroup& g, const Int& m) {
    if (m < 1)
        throw Error(ErrorCode::Internal, "m_torsion requires m >= 1");
    const std::size_t k = g.num_generators();
    Lattice top = preimage_lattice(m * IntMatrix::identity(k), g.relations());
    return quotient_presentation(top, g.relations());
}

PresentedGroup quotient_presentation(const Lattice& top, const Lattice& bottom) {
    if (top.ambient_dim() != bottom.ambient_dim())
        throw Error(ErrorCode::Internal, "quotient_presentation: ambient mismatch");
    std::vector<IntVec> rel_rows;
    rel_rows.reserve(bottom.rank());
    for (std::size_t i = 0; i < bottom.rank(); ++i) {
        auto c = top.coordinates(bottom.basis().row(i));
        if (!c)
            throw Error(ErrorCode::Internal,
                        "quotient_presentation: bottom lattice not contained in top");
        rel_rows.push_back(*c);
    }
    return PresentedGroup::from_relation_rows(top.rank(), rel_rows);
}

}  // namespace herbrand
