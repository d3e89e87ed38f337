"""Charge-zero infinite-wedge states and an exact operator-word evaluator.

Basis vectors are indexed by partitions lam via the half-integer set
S(lam) = {lam_i - i + 1/2}; half-integers are stored doubled (odd ints).
States are finite partition-indexed sums with `MultiSeries` coefficients.

Sign convention: moving an occupied slot j to an empty slot i carries
(-1)^(number of occupied slots strictly between i and j); this single rule
is the only source of signs in the engine.  The diagonal (normally ordered)
action is +1 on occupied positive slots and -1 on empty negative slots.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .partitions import check_partition
from .qseries import INF, MultiSeries, VariableMismatchError, s_of, sigma_of


# ------------------------------------------------------------- Maya windows


def _occupied_window(lam, depth: int):
    """The largest `depth + len(lam)` elements of S(lam), doubled, descending.

    Below the returned window the diagram is a full vacuum tail, so any move
    targeting that region hits an occupied slot and vanishes.
    """
    n = len(lam)
    total = n + depth
    occ = [2 * (lam[i] - (i + 1)) + 1 for i in range(n)]
    occ += [-2 * i - 1 for i in range(n, total)]
    return occ


def _partition_from_window(window) -> tuple:
    desc = sorted(window, reverse=True)
    parts = []
    for i, m in enumerate(desc, start=1):
        p = (m + 2 * i - 1) // 2
        if p < 0:
            raise ValueError("window does not describe a charge-zero diagram")
        parts.append(p)
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


def e_moves(lam, r: int):
    """All single-slot moves of E_{k-r,k} on v_lam, for fixed nonzero r.

    Yields (new_partition, sign, mid) where mid = k - r/2 as a Fraction in
    half-integer units: the exponential weight of the generating operator is
    exp(z * mid).
    """
    if r == 0:
        raise ValueError("use e_diagonal for r = 0")
    depth = abs(r) + 2
    occ = _occupied_window(lam, depth)
    occ_set = set(occ)
    floor_m = occ[-1]  # everything below this odd int is occupied
    out = []
    for m in occ:  # source slot, m = 2k
        m2 = m - 2 * r  # target slot
        if m2 in occ_set or (m2 < floor_m):
            continue
        lo, hi = min(m, m2), max(m, m2)
        crossings = sum(1 for x in occ_set if lo < x < hi)
        window = [x for x in occ if x != m] + [m2]
        new_lam = _partition_from_window(window)
        mid = Fraction(m - r, 2)
        out.append((new_lam, (-1) ** crossings, mid))
    return out


def e_diagonal_support(lam):
    """Occupied positive slots and empty negative slots (doubled ints)."""
    occ = _occupied_window(lam, 2)
    occ_set = set(occ)
    floor_m = occ[-1]
    positives = [m for m in occ if m > 0]
    holes = [m for m in range(-1, floor_m, -2) if m not in occ_set]
    return positives, holes


def f2_eigenvalue(lam) -> Fraction:
    """Sum of k^2/2 over occupied positive slots minus empty negative slots."""
    positives, holes = e_diagonal_support(lam)
    total = Fraction(0)
    for m in positives:
        total += Fraction(m * m, 8)
    for m in holes:
        total -= Fraction(m * m, 8)
    return total


# ----------------------------------------------------------------- states


class FockState:
    """Finite sum of basis vectors with truncated-series coefficients."""

    __slots__ = ("vars", "terms", "guard")

    def __init__(self, vars, terms=None, guard=None):
        self.vars = tuple(vars)
        self.terms = {}
        self.guard = tuple(guard) if guard is not None else (INF,) * len(self.vars)
        for lam, series in (terms or {}).items():
            self.add_term(lam, series)

    @classmethod
    def vacuum(cls, vars):
        vars = tuple(vars)
        return cls(vars, {(): MultiSeries.constant(1, vars)})

    def add_term(self, lam, series: MultiSeries):
        lam = check_partition(lam)
        if series.vars != self.vars:
            raise VariableMismatchError(f"{series.vars} vs {self.vars}")
        if lam in self.terms:
            series = self.terms[lam] + series
        if series.is_exact_zero():
            self.terms.pop(lam, None)
            return
        if series.is_zero_window():
            # dropping a window-zero term must not inflate later precision
            # claims: remember its order in the guard instead
            self.guard = tuple(min(g, o) for g, o in zip(self.guard, series.order))
            self.terms.pop(lam, None)
            return
        self.terms[lam] = series

    def updated_guard(self, other_guard):
        self.guard = tuple(min(g, o) for g, o in zip(self.guard, other_guard))

    def max_energy(self) -> int:
        return max((sum(lam) for lam in self.terms), default=0)

    def coefficient(self, lam) -> MultiSeries:
        lam = check_partition(lam)
        got = self.terms.get(lam)
        if got is None:
            got = MultiSeries.zero(self.vars, self.guard)
        return got.truncated(self.guard)

    def scaled(self, factor) -> "FockState":
        out = FockState(self.vars, guard=self.guard)
        for lam, series in self.terms.items():
            out.add_term(lam, series * factor)
        return out

    def __add__(self, other: "FockState") -> "FockState":
        out = FockState(self.vars, dict(self.terms), guard=self.guard)
        out.updated_guard(other.guard)
        for lam, series in other.terms.items():
            out.add_term(lam, series)
        return out

    def to_debug_dict(self) -> dict:
        from .partitions import format_partition
        return {format_partition(lam): self.terms[lam].to_records()
                for lam in sorted(self.terms)}

    def __repr__(self):
        return f"FockState({self.to_debug_dict()})"


def inner_product(bra: FockState, ket: FockState) -> MultiSeries:
    """Orthonormal-basis pairing; the result honours both states' guards."""
    if bra.vars != ket.vars:
        raise VariableMismatchError(f"{bra.vars} vs {ket.vars}")
    total = MultiSeries.zero(bra.vars, tuple(min(a, b) for a, b in zip(bra.guard, ket.guard)))
    for lam, series in bra.terms.items():
        other = ket.terms.get(lam)
        if other is not None:
            total = total + series * other
    return total


# ------------------------------------------------------------ atom actions


def apply_E_elem(i2, j2, lam) -> tuple | None:
    """Single elementary move: slot j -> slot i.

    Slots are half-integers, passed either as Fractions with denominator 2
    or as doubled odd integers.  Returns (sign, new_partition) or None when
    the action vanishes; the diagonal case returns (+/-1, lam) per the
    normally ordered convention.
    """
    lam = check_partition(lam)
    if isinstance(i2, Fraction):
        i2 = int(2 * i2)
    if isinstance(j2, Fraction):
        j2 = int(2 * j2)
    if i2 % 2 == 0 or j2 % 2 == 0:
        raise ValueError("slots are half-integers; pass doubled odd integers")
    depth = (abs(i2) + abs(j2)) // 2 + 2
    occ = _occupied_window(lam, depth)
    occ_set = set(occ)
    floor_m = occ[-1]

    def occupied(m):
        return m in occ_set or m < floor_m

    if i2 == j2:
        if occupied(j2) and j2 > 0:
            return (1, lam)
        if not occupied(j2) and j2 < 0:
            return (-1, lam)
        return None
    if not occupied(j2) or occupied(i2):
        return None
    lo, hi = min(i2, j2), max(i2, j2)
    crossings = sum(1 for x in occ_set if lo < x < hi)
    window = [x for x in occ if x != j2] + [i2]
    return ((-1) ** crossings, _partition_from_window(window))


def apply_alpha(r: int, state: FockState, energy_cap=None) -> FockState:
    """Sum of all moves lowering slot values by r (raising energy by -r)."""
    if r == 0:
        raise ValueError("alpha_0 is central and not used")
    out = FockState(state.vars, guard=state.guard)
    for lam, series in state.terms.items():
        for new_lam, sign, _ in e_moves(lam, r):
            if energy_cap is not None and sum(new_lam) > energy_cap:
                continue
            out.add_term(new_lam, series if sign == 1 else -series)
    return out


def apply_exp_alpha(r: int, state: FockState, energy_cap: int) -> FockState:
    """exp(alpha_r) for r in {+1, -1} by summing alpha_r^m / m!."""
    if r not in (1, -1):
        raise ValueError("only exp(alpha_(+/-1)) is supported")
    out = state
    term = state
    m = 0
    while True:
        m += 1
        term = apply_alpha(r, term, energy_cap).scaled(Fraction(1, m))
        if not term.terms:
            out.updated_guard(term.guard)
            break
        out = out + term
    return out


def apply_expUF2(state: FockState, u_var: str = "u", scale=1, order=None) -> FockState:
    """Multiply each v_lam coefficient by exp(scale * u * f2(lam))."""
    if u_var not in state.vars:
        raise VariableMismatchError(f"variable {u_var!r} missing from {state.vars}")
    out = FockState(state.vars, guard=state.guard)
    cache = {}
    for lam, series in state.terms.items():
        ev = Fraction(scale) * f2_eigenvalue(lam)
        if ev not in cache:
            i = state.vars.index(u_var)
            exps = tuple(1 if j == i else 0 for j in range(len(state.vars)))
            eff = series.order if order is None else order
            mono = MultiSeries.monomial(state.vars, exps, ev, order=eff)
            cache[ev] = mono.exp() if ev else MultiSeries.constant(1, state.vars)
        out.add_term(lam, series * cache[ev])
    return out


class _ExpWeights:
    """Per-evaluation cache of exp(mid * z) prefactors and 1/sigma(z)."""

    def __init__(self, z: MultiSeries):
        self.z = z
        self._exp = {}
        self._inv_sigma = None

    def exp(self, mid: Fraction) -> MultiSeries:
        if mid not in self._exp:
            if mid == 0:
                self._exp[mid] = MultiSeries.constant(1, self.z.vars)
            else:
                self._exp[mid] = (self.z * mid).exp()
        return self._exp[mid]

    def inv_sigma(self) -> MultiSeries:
        if self._inv_sigma is None:
            self._inv_sigma = sigma_of(self.z).inverse()
        return self._inv_sigma


def apply_calE(r: int, z: MultiSeries, state: FockState, energy_cap: int,
               weights: _ExpWeights | None = None) -> FockState:
    """The exponentially weighted move operator of shift r.

    For r = 0 the action is diagonal with weight sum(exp(z k)) over occupied
    positive slots minus empty negative slots, plus the 1/sigma(z) scalar;
    the scalar term is present only at r = 0.
    """
    if weights is None:
        weights = _ExpWeights(z)
    out = FockState(state.vars, guard=state.guard)
    for lam, series in state.terms.items():
        if r == 0:
            positives, holes = e_diagonal_support(lam)
            weight = weights.inv_sigma()
            for m in positives:
                weight = weight + weights.exp(Fraction(m, 2))
            for m in holes:
                weight = weight - weights.exp(Fraction(m, 2))
            out.add_term(lam, series * weight)
            continue
        for new_lam, sign, mid in e_moves(lam, r):
            if sum(new_lam) > energy_cap:
                continue
            piece = series * weights.exp(mid)
            out.add_term(new_lam, piece if sign == 1 else -piece)
    return out


def _a_family(a: MultiSeries, b: MultiSeries, state: FockState, energy_cap: int,
              adjoint: bool) -> FockState:
    """Shared engine for the hypergeometric-kernel operators.

    The operator is S(b)^a * sum_k sigma(b)^k / (a+1)_k E_(sgn k)(b) with
    E_{-k} for the adjoint and E_{+k} otherwise.  The k >= 0 tail terminates
    because b has positive valuation, so sigma(b)^k eventually leaves the
    truncation window; the k < 0 range is finite because each step lowers
    (adjoint: raises) slot energy, which is bounded by the state's energy
    (adjoint: by the cap).
    """
    if a.vars != b.vars or a.vars != state.vars:
        raise VariableMismatchError("operator parameters must share the state's variables")
    weights = _ExpWeights(b)
    prefactor = (a * s_of(b).log()).exp()  # S(b)^a
    sig = sigma_of(b)
    out = FockState(state.vars, guard=state.guard)

    # k >= 0 branch
    sig_pow = MultiSeries.constant(1, state.vars)
    denom = MultiSeries.constant(1, state.vars)
    k = 0
    while True:
        if k > 0:
            sig_pow = sig_pow * sig
            denom = denom * (a + k)
            if sig_pow.is_zero_window():
                out.updated_guard(sig_pow.order)
                break
        factor = sig_pow * denom.inverse(order=b.order) if k else sig_pow
        moved = apply_calE(-k if adjoint else k, b, state, energy_cap, weights)
        out = out + moved.scaled(factor)
        k += 1

    # k < 0 branch: 1/(a+1)_k = a(a-1)..(a+k+1) is polynomial, sigma(b)^k polar
    inv_sig = weights.inv_sigma()
    reach = state.max_energy() if adjoint else energy_cap
    sig_pow = MultiSeries.constant(1, state.vars)
    numer = MultiSeries.constant(1, state.vars)
    for kk in range(1, reach + 1):
        sig_pow = sig_pow * inv_sig
        numer = numer * (a - (kk - 1))
        moved = apply_calE(kk if adjoint else -kk, b, state, energy_cap, weights)
        out = out + moved.scaled(sig_pow * numer)
    return out.scaled(prefactor)


def apply_Astar(a: MultiSeries, b: MultiSeries, state: FockState,
                energy_cap: int) -> FockState:
    """Adjoint hypergeometric operator: raises energy at unit series cost."""
    return _a_family(a, b, state, energy_cap, adjoint=True)


def apply_A(a: MultiSeries, b: MultiSeries, state: FockState,
            energy_cap: int) -> FockState:
    """Hypergeometric operator: annihilates the vacuum up to scalar terms."""
    return _a_family(a, b, state, energy_cap, adjoint=False)


# -------------------------------------------------------------- correlator


@dataclass(frozen=True)
class Alpha:
    r: int


@dataclass(frozen=True)
class ExpAlpha:
    r: int  # +1 or -1


@dataclass(frozen=True)
class ExpUF2:
    scale: int = 1
    u_var: str = "u"


@dataclass(frozen=True)
class CalE:
    r: int
    z: MultiSeries


@dataclass(frozen=True)
class AStarOp:
    a: MultiSeries
    b: MultiSeries


@dataclass(frozen=True)
class AOp:
    a: MultiSeries
    b: MultiSeries


def boson_state(eta, vars) -> FockState:
    """Product of energy-raising alphas over the parts of eta on the vacuum.

    Expanding the result in the wedge basis recovers integer coefficients;
    no normalization factor is applied here.
    """
    state = FockState.vacuum(vars)
    for part in check_partition(eta):
        state = apply_alpha(-part, state)
    return state


def default_energy_cap(word, left_energy: int, vars, order) -> int:
    """Upper bound on intermediate energies that can reach the pairing.

    A state of energy E contributes only if the remaining atoms can lower it
    back to the boundary energy.  Plain alphas and single weighted moves
    lower by at most |r| each; the hypergeometric operators pay one unit of
    series valuation per unit of energy moved, so their total reach is
    bounded by the truncation budget; exponential alphas only raise toward
    the cap (their unlimited lowering never needs states above it).  Hence
    boundary energy + series budget + sum |r| is a sound cap.  The
    capped-versus-enlarged-cap property test exercises this bound.
    """
    budget = max((o for o in order if o != INF), default=0)
    shift = sum(abs(atom.r) for atom in word if isinstance(atom, (Alpha, CalE)))
    return int(left_energy + budget + shift)


def correlator(word, mu_left, vars, order, energy_cap=None) -> MultiSeries:
    """Vacuum expectation of an operator word against a boson boundary.

    The word is given in operator order (leftmost first) and applied to the
    vacuum right to left; the result is paired with the boson state of
    mu_left (or with the vacuum when mu_left is None).  Exact to the
    truncation contract carried by the returned series.
    """
    vars = tuple(vars)
    order = tuple(order)
    left_energy = sum(mu_left) if mu_left else 0
    if energy_cap is None:
        energy_cap = default_energy_cap(word, left_energy, vars, order)
    state = FockState.vacuum(vars)
    for atom in reversed(word):
        if isinstance(atom, Alpha):
            state = apply_alpha(atom.r, state, energy_cap)
        elif isinstance(atom, ExpAlpha):
            state = apply_exp_alpha(atom.r, state, energy_cap)
        elif isinstance(atom, ExpUF2):
            state = apply_expUF2(state, atom.u_var, atom.scale, order)
        elif isinstance(atom, CalE):
            state = apply_calE(atom.r, atom.z.truncated(order), state, energy_cap)
        elif isinstance(atom, AStarOp):
            state = apply_Astar(atom.a.truncated(order), atom.b.truncated(order),
                                state, energy_cap)
        elif isinstance(atom, AOp):
            state = apply_A(atom.a.truncated(order), atom.b.truncated(order),
                            state, energy_cap)
        else:
            raise TypeError(f"unknown operator atom {atom!r}")
    if mu_left:
        bra = boson_state(mu_left, vars)
        result = inner_product(bra, state)
    else:
        result = state.coefficient(())
    return result.truncated(order)
