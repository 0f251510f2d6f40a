#pragma once

#include "hopfres/resolution.hpp"

namespace hopfres {

/// Inside A(E): u^ = x g and v^ = g E^t x E^-t satisfy the H(F) relations
/// for F = E^t E^-1, entrywise in the relation ideal at the given bound.
VerifyReport verify_glued_embedding(const QiMatrix& e, int degree_bound = 4);

/// The hat matrices themselves (degree-2 entries over presentation_A(E)).
AlgMatrix glued_u_hat(const QiMatrix& e);
AlgMatrix glued_v_hat(const QiMatrix& e);

/// Hopf-axiom certificates for a built-in presentation: eps kills relations
/// (exact scalars), S(r) and Delta(r) are ideal members, and the antipode
/// identity m(S (x) id)Delta(gen) = eps(gen) 1 holds modulo the ideal.
VerifyReport verify_hopf(const Presentation& p, int degree_bound = 4);

namespace detail {
enum class YdMutation { None, SwapCoactions };
VerifyReport verify_yd_impl(const QiMatrix& f, int degree_bound, YdMutation mutation);
}

/// Componentwise H-colinearity of the maps of the H(F) Yetter-Drinfeld
/// resolution: each colinearity defect, computed in the tensor-square
/// presentation, is an ideal member. Cost grows quickly with n; intended
/// for n = 2.
VerifyReport verify_yd_colinearity(const QiMatrix& f, int degree_bound = 6);

} // namespace hopfres
