"""The charge-zero wedge: boson moves and vacuum expectations."""

from gwhurwitz import (Alpha, AStarOp, CalE, ExpAlpha, FockState, MultiSeries,
                       apply_alpha, boson_state, correlator, s_of, sigma_of,
                       sigma_series)

print("Raising bosons expand in the wedge basis with character coefficients:")
for eta in [(1, 1), (2,), (2, 1)]:
    state = boson_state(eta, ("u",))
    print(f"  alphas for {eta}: ", state.to_debug_dict())

print("\nPlain pairings:")
print("  <a_1 a_-1> =", correlator([Alpha(1), Alpha(-1)], None, ("u",), (4,)).coefficient(0))
print("  <a_2 a_-2> =", correlator([Alpha(2), Alpha(-2)], None, ("u",), (4,)).coefficient(0))

print("\nThe shift-0 weighted move operator has vacuum expectation 1/sigma(z):")
z = MultiSeries.monomial(("z",), (1,), 1, (8,))
print("  <E_0(z)>  =", correlator([CalE(0, z)], None, ("z",), (8,)))
print("  1/sigma   =", sigma_series("z", 8).inverse())

print("\nContracting the adjoint hypergeometric operator against a 2-cycle:")
vars, order = ("u", "w"), (7, 7)
a = MultiSeries.monomial(vars, (0, 1), 1, order)
b = MultiSeries.monomial(vars, (1, 1), 1, order)
got = correlator([Alpha(2), ExpAlpha(-1), AStarOp(a, b)], None, vars, order)
poch2 = (a + 1) * (a + 2)
closed = (a * s_of(b).log()).exp() * sigma_of(b) * sigma_of(b * 2) * poch2.inverse()
print("  engine matches the contracted kernel product:", got.agrees_with(closed))
