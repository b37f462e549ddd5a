"""Direct-sum decomposition of a simplicial semigroup ring over its frame.

For a simplicial semigroup the frame generates a free subsemigroup A, so the
frame ring is a polynomial ring in d variables.  Grouping the minimal module
generators by their class modulo the frame lattice yields, per class, a shift
vector and a monomial ideal in frame coordinates; together these describe the
semigroup ring as a finite direct sum of shifted monomial ideals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotHomogeneousError
from .semigroup import AffineSemigroup, DegreeFunctional, Frame, Vec, vkey


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal in ``num_vars`` variables given by its minimal
    generating exponents (an antichain, sorted by :func:`vkey`).

    The unit ideal is represented by the single zero exponent.
    """

    num_vars: int
    gens: tuple[Vec, ...]

    @staticmethod
    def from_gens(num_vars: int, gens) -> "MonomialIdeal":
        rows = sorted({tuple(int(e) for e in g) for g in gens}, key=vkey)
        if not rows:
            raise ValueError("a monomial ideal needs at least one generator")
        for g in rows:
            if len(g) != num_vars or any(e < 0 for e in g):
                raise ValueError(f"bad exponent vector {g}")
        minimal = [g for g in rows
                   if not any(h != g and all(a <= b for a, b in zip(h, g))
                              for h in rows)]
        return MonomialIdeal(num_vars, tuple(minimal))

    @staticmethod
    def unit(num_vars: int) -> "MonomialIdeal":
        return MonomialIdeal(num_vars, ((0,) * num_vars,))

    @property
    def is_unit(self) -> bool:
        return self.gens == ((0,) * self.num_vars,)

    @property
    def is_maximal(self) -> bool:
        """Whether this is the ideal generated by all the variables."""
        units = {tuple(1 if i == k else 0 for i in range(self.num_vars))
                 for k in range(self.num_vars)}
        return set(self.gens) == units

    def contains(self, exponent: Vec) -> bool:
        """Whether the monomial with this exponent lies in the ideal."""
        return any(all(g[i] <= exponent[i] for i in range(self.num_vars))
                   for g in self.gens)

    def monomial_count_in_degree(self, total: int) -> int:
        """Number of monomials of the ideal with the given total degree."""
        if total < 0:
            return 0
        count = 0
        for a in _compositions(total, self.num_vars):
            if self.contains(a):
                count += 1
        return count

    def __str__(self) -> str:
        shown = sorted(self.gens, reverse=True)  # x_1 first, like a lex order
        return f"ideal({', '.join(monomial_str(g) for g in shown)})"


def monomial_str(exponent: Vec) -> str:
    parts = []
    for i, e in enumerate(exponent):
        if e == 1:
            parts.append(f"x_{i + 1}")
        elif e > 1:
            parts.append(f"x_{i + 1}^{e}")
    return "*".join(parts) if parts else "1"


def _compositions(total: int, parts: int):
    """All tuples of ``parts`` nonnegative ints summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@dataclass(frozen=True)
class Summand:
    """One class of the decomposition: its module generators ``gamma``, the
    componentwise frame-coordinate minimum ``shift``, and the resulting
    monomial ideal in frame coordinates."""

    coset: tuple[int, ...]
    gamma: tuple[Vec, ...]
    shift: Vec
    ideal: MonomialIdeal
    shift_degree: int | None


@dataclass(frozen=True)
class Decomposition:
    frame: Frame
    group_order: int
    invariant_factors: tuple[int, ...]
    summands: tuple[Summand, ...]

    def module_generators(self) -> tuple[Vec, ...]:
        return tuple(sorted((v for s in self.summands for v in s.gamma),
                            key=vkey))


def decompose(semigroup: AffineSemigroup) -> Decomposition:
    """Decompose the semigroup ring over its frame ring.

    Raises :class:`NotSimplicialError` for non-simplicial cones, where the
    shifts would not be unique.
    """
    frame = semigroup.frame()
    group = semigroup.quotient()
    functional = semigroup.degree_functional()
    d = frame.dim

    cosets: dict[tuple[int, ...], list[Vec]] = {}
    for x in semigroup.module_generators():
        cosets.setdefault(group.project(x), []).append(x)

    summands = []
    for label in sorted(cosets):
        gamma = tuple(sorted(cosets[label], key=vkey))
        lams = [frame.coordinates(v) for v in gamma]
        mins = [min(lam[k] for lam in lams) for k in range(d)]
        shift = tuple(
            _as_int(sum(mins[k] * Fraction(frame.elements[k][i])
                        for k in range(d)))
            for i in range(frame.ambient_dim))
        gens = []
        for lam in lams:
            exponent = tuple(_as_int(lam[k] - mins[k]) for k in range(d))
            gens.append(exponent)
        ideal = MonomialIdeal(d, tuple(sorted(gens, key=vkey)))
        # within a coset the differences have integer frame coordinates, so
        # the exponents above are automatically a minimal antichain
        assert all(e >= 0 for g in ideal.gens for e in g)
        degree = functional.degree(shift) if functional is not None else None
        summands.append(Summand(label, gamma, shift, ideal, degree))

    assert len(summands) == group.order
    return Decomposition(frame, group.order, group.invariant_factors,
                         tuple(summands))


def _as_int(q: Fraction) -> int:
    if q.denominator != 1:
        raise AssertionError(f"expected an integer, got {q}")
    return int(q)


def shift_degrees(dec: Decomposition,
                  functional: DegreeFunctional | None) -> dict[tuple[int, ...], int]:
    """Degree of each summand's shift; requires a homogeneous semigroup."""
    if functional is None:
        raise NotHomogeneousError("the semigroup admits no degree functional")
    return {s.coset: functional.degree(s.shift) for s in dec.summands}


def hilbert_verify(semigroup: AffineSemigroup, dec: Decomposition,
                   functional: DegreeFunctional | None, t_max: int) -> bool:
    """Independent soundness check of the decomposition.

    Counts semigroup elements of each degree up to ``t_max`` by direct
    enumeration and compares with the total staircase counts of the shifted
    ideals.  The two sides share no code path.
    """
    if functional is None:
        raise NotHomogeneousError("the semigroup admits no degree functional")
    zero = (0,) * semigroup.ambient_dim
    # generators all have degree one, so the sums of exactly t generators
    # are precisely the degree-t elements
    layer = {zero}
    left = [1]
    for _ in range(t_max):
        layer = {tuple(a + b for a, b in zip(x, g))
                 for x in layer for g in semigroup.generators}
        left.append(len(layer))

    shifts = [functional.degree(s.shift) for s in dec.summands]
    for t in range(t_max + 1):
        right = sum(s.ideal.monomial_count_in_degree(t - dg)
                    for s, dg in zip(dec.summands, shifts))
        if right != left[t]:
            return False
    return True
