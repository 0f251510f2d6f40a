#pragma once

#include <memory>
#include <unordered_map>
#include <vector>

#include "hopfres/presentation.hpp"

namespace hopfres {

/// One summand of an ideal-membership certificate:
/// coef * left * relations[rel] * right.
struct CertTerm {
    GaussianRational coef;
    Word left;
    size_t rel = 0;
    Word right;
};

struct Certificate {
    std::vector<CertTerm> terms;
};

enum class Membership { Member, NotMemberByCounit, Undecided };

struct MembershipResult {
    Membership status = Membership::Undecided;
    Certificate cert;  // nonempty only for Member (empty for the zero poly)
};

/// Replays a certificate in the plain free algebra: sum of
/// coef * left * rel * right using word concatenation only.
NcPoly replay_certificate(const Certificate& c, const std::vector<NcPoly>& relations);

/// Bounded-degree two-sided ideal membership: decides whether p lies in the
/// span of { w1 * r * w2 : |w1| + deg(r) + |w2| <= degree_bound }.
///
/// Member answers come with a replayable certificate (sound). The only
/// definitive negative is NotMemberByCounit: the presentation's counit kills
/// every relation, so a nonzero counit value rules membership out. Anything
/// else is Undecided at this bound.
///
/// The span is generated lazily: only generators in the connected component
/// of supp(p) in the generator-word incidence graph can take part in a
/// vanishing combination, so restricting to that component loses nothing.
MembershipResult ideal_member(const NcPoly& p, const Presentation& pres, int degree_bound);

/// Reusable elimination context for many queries against the same
/// presentation and bound (the span and its echelon form are grown
/// incrementally and shared).
class IdealSpan {
public:
    IdealSpan(const Presentation& pres, int degree_bound);
    ~IdealSpan();
    IdealSpan(IdealSpan&&) noexcept;

    MembershipResult query(const NcPoly& p);

    const Presentation& presentation() const;
    int degree_bound() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace hopfres
