#ifndef VHODGE_IDEAL_HPP
#define VHODGE_IDEAL_HPP

#include <optional>
#include <vector>

#include "vhodge/mpoly.hpp"

namespace vhodge {

/// Reduced Groebner basis of a list of generators under the global
/// degree-reverse-lexicographic order (Buchberger + inter-reduction).
std::vector<MPoly> groebner_commutative(const std::vector<MPoly>& gens);

/// Normal form of p modulo a Groebner basis.
MPoly normal_form(const MPoly& p, const std::vector<MPoly>& gb);

/// Finite generating set of a polynomial ideal with a cached reduced GB.
class IdealGens {
public:
    IdealGens() : n_(1) {}
    explicit IdealGens(std::vector<MPoly> gens);
    static IdealGens zero(int nvars);
    static IdealGens unit(int nvars);
    static IdealGens principal(const MPoly& f) { return IdealGens({f}); }

    int nvars() const { return n_; }
    const std::vector<MPoly>& generators() const { return gens_; }
    const std::vector<MPoly>& reduced_basis() const;

    bool is_zero() const { return reduced_basis().empty(); }
    bool is_unit() const;
    bool contains(const MPoly& p) const;
    bool contains(const IdealGens& other) const;

    friend bool ideal_equal(const IdealGens& a, const IdealGens& b);

    IdealGens sum_with_principal(const MPoly& f) const;
    IdealGens sum(const IdealGens& other) const;
    IdealGens multiply_principal(const MPoly& f) const;

    /// Krull dimension of the quotient ring via maximal independent variable
    /// sets of the leading-term ideal. Zero ideal -> error.
    int dimension() const;

    std::vector<std::string> str_generators() const;

private:
    int n_;
    std::vector<MPoly> gens_;
    mutable std::optional<std::vector<MPoly>> gb_;
};

}  // namespace vhodge

#endif
